#ifndef SKILLSIM_TESTS_FIXTURES_HPP
#define SKILLSIM_TESTS_FIXTURES_HPP

#include "skillsim/types.hpp"

namespace skillsim::testing {

/// Static schedule where M beats H on Low/Med by 0.1 and trails it on High by 0.2.
inline SkillSchedule machine_struggles_on_high() {
    SkillSchedule s;
    auto fixed = [](double a, double b) { return BetaRamp{{a, b}, {a, b}}; };
    s.at(PolicyKind::H, Difficulty::Low) = fixed(7, 3);
    s.at(PolicyKind::H, Difficulty::Med) = fixed(6, 4);
    s.at(PolicyKind::H, Difficulty::High) = fixed(5, 5);
    s.at(PolicyKind::M, Difficulty::Low) = fixed(8, 2);
    s.at(PolicyKind::M, Difficulty::Med) = fixed(7, 3);
    s.at(PolicyKind::M, Difficulty::High) = fixed(3, 7);
    return s;
}

/// N=1, E=10, K=1000 scenario with logistic k=5, mc=(0.5, 0.2, 0.7),
/// t_err=0.3, c_err=0.9, gamma=1.5.
inline SimulationConfig small_experiment(InteractionKind a = InteractionKind::Superpower, std::uint64_t seed = 42) {
    SimulationConfig cfg;
    cfg.config_id = "small";
    cfg.n_firms = 1;
    cfg.n_epochs = 10;
    cfg.n_runs = 1000;
    cfg.schedule = machine_struggles_on_high();
    cfg.interaction = a;
    cfg.gamma_hm = 1.5;
    cfg.curve = LogisticCurve{5.0};
    cfg.econ.mc = {{0.5, 0.2, 0.7}};
    cfg.econ.delta = {{0.0, 0.3, 0.0}};
    cfg.econ.t_err = 0.3;
    cfg.econ.c_err = 0.9;
    cfg.seed = seed;
    return cfg;
}

} // namespace skillsim::testing

#endif // SKILLSIM_TESTS_FIXTURES_HPP

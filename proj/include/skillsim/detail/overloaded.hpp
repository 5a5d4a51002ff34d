#ifndef SKILLSIM_DETAIL_OVERLOADED_HPP
#define SKILLSIM_DETAIL_OVERLOADED_HPP

namespace skillsim::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace skillsim::detail

#endif // SKILLSIM_DETAIL_OVERLOADED_HPP

#ifndef SKILLSIM_SKILLSIM_HPP
#define SKILLSIM_SKILLSIM_HPP

// Convenience umbrella header.

#include "skillsim/analytics.hpp"
#include "skillsim/design.hpp"
#include "skillsim/engine.hpp"
#include "skillsim/io.hpp"
#include "skillsim/model.hpp"
#include "skillsim/random.hpp"
#include "skillsim/types.hpp"

#endif // SKILLSIM_SKILLSIM_HPP

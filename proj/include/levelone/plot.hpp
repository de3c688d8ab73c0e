#pragma once

#include <string>

#include "levelone/primes.hpp"
#include "levelone/real.hpp"

namespace levelone {

/// CSV of y = theta(2x) against y = x on [0, x_max], header
/// "x,theta_2x,y_line".  Each jump of theta(2x) (at x = p/2) gets two rows,
/// the left limit then the new value, so the steps render exactly.
/// Throws std::out_of_range if 2 * x_max exceeds the table limit and
/// std::invalid_argument for negative x_max.
std::string emit_theta_plot(const Real& x_max, const PrimeTable& table);

}  // namespace levelone

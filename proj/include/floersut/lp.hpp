#pragma once

// Exact feasibility for {x : A x = b, x >= 0} over the rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace floersut {

using Rational = boost::multiprecision::cpp_rational;

/// A nonnegative solution of A x = b found by the phase-one simplex method
/// with Bland's rule, or nothing when the system is infeasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                               const std::vector<Rational>& b);

}  // namespace floersut

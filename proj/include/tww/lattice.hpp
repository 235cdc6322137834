#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace tww {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// North-East paths from (0,0) to (a,b) against the line y = x + t.
struct LatticeQuery {
    std::int64_t a = 0;  // East steps
    std::int64_t b = 0;  // North steps
    std::int64_t t = 0;
};

/// 0 when k < 0 or k > n; throws std::invalid_argument when n < 0.
[[nodiscard]] BigInt binomial(std::int64_t n, std::int64_t k);

/// t >= 0 and a + t > b, where the closed form binom(a+b, a+t) holds.
[[nodiscard]] bool crossing_formula_applies(const LatticeQuery& q);

/// Paths meeting both closed half-planes of y = x + t. Uses the closed form
/// when it applies and a grid DP otherwise. Throws on negative a or b.
[[nodiscard]] BigInt count_crossing_paths(const LatticeQuery& q);

/// Grid DP count, valid for every query.
[[nodiscard]] BigInt count_crossing_paths_dp(const LatticeQuery& q);

/// Fraction of the binom(a+b, a) paths that cross; needs t >= 1.
[[nodiscard]] Rational crossing_probability(const LatticeQuery& q);

/// (b / (a+t))^t; needs t >= 1.
[[nodiscard]] double crossing_probability_bound(const LatticeQuery& q);

}  // namespace tww

#include "tww/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tww {

namespace {

void validate(const LatticeQuery& q) {
    if (q.a < 0 || q.b < 0) throw std::invalid_argument("lattice query needs a, b >= 0");
}

void require_positive_offset(const LatticeQuery& q) {
    if (q.t < 1) throw std::invalid_argument("crossing probability needs t >= 1");
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

bool crossing_formula_applies(const LatticeQuery& q) { return q.t >= 0 && q.a + q.t > q.b; }

BigInt count_crossing_paths(const LatticeQuery& q) {
    validate(q);
    if (crossing_formula_applies(q)) return binomial(q.a + q.b, q.a + q.t);
    return count_crossing_paths_dp(q);
}

BigInt count_crossing_paths_dp(const LatticeQuery& q) {
    validate(q);
    // The path starts on y - x = 0, so it already lies in one closed
    // half-plane and crosses iff y - x reaches t somewhere.
    if (q.t == 0) return binomial(q.a + q.b, q.a);
    const auto avoids = [&](std::int64_t x, std::int64_t y) { return q.t > 0 ? y - x < q.t : y - x > q.t; };
    const auto w = static_cast<std::size_t>(q.b + 1);
    std::vector<BigInt> ways(static_cast<std::size_t>(q.a + 1) * w, 0);
    for (std::int64_t x = 0; x <= q.a; ++x) {
        for (std::int64_t y = 0; y <= q.b; ++y) {
            auto& cell = ways[static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y)];
            if (!avoids(x, y)) continue;
            if (x == 0 && y == 0) {
                cell = 1;
                continue;
            }
            if (x > 0) cell += ways[static_cast<std::size_t>(x - 1) * w + static_cast<std::size_t>(y)];
            if (y > 0) cell += ways[static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y - 1)];
        }
    }
    return binomial(q.a + q.b, q.a) - ways.back();
}

Rational crossing_probability(const LatticeQuery& q) {
    validate(q);
    require_positive_offset(q);
    return Rational(count_crossing_paths(q), binomial(q.a + q.b, q.a));
}

double crossing_probability_bound(const LatticeQuery& q) {
    validate(q);
    require_positive_offset(q);
    return std::pow(static_cast<double>(q.b) / static_cast<double>(q.a + q.t), static_cast<double>(q.t));
}

}  // namespace tww

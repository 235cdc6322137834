#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tww {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The finite field F_q, q = p^k, as F_p[x]/(modulus).
///
/// Elements are encoded as integers 0..q-1: the coefficient of x^i is the
/// i-th base-p digit. The encoding doubles as the vertex numbering of Paley
/// graphs. For prime q the encoding is the residue itself.
class FiniteField {
public:
    using Element = std::uint32_t;

    /// Throws FieldError when q is not a prime power, when k > 1 and q has no
    /// built-in modulus and none was supplied, or when the supplied modulus is
    /// reducible or of the wrong degree. `modulus` lists coefficients from the
    /// constant term up and must be monic of degree k.
    explicit FiniteField(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return k_; }
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    [[nodiscard]] Element add(Element a, Element b) const;
    [[nodiscard]] Element sub(Element a, Element b) const;
    [[nodiscard]] Element neg(Element a) const;
    [[nodiscard]] Element mul(Element a, Element b) const;
    [[nodiscard]] Element one() const noexcept { return 1; }

    /// Nonzero squares, sorted.
    [[nodiscard]] std::vector<Element> nonzero_squares() const;

private:
    [[nodiscard]] std::vector<std::uint32_t> digits(Element a) const;
    [[nodiscard]] Element encode(const std::vector<std::uint32_t>& d) const;

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Element> mul_table_;  // q*q products; q is small for Paley work
};

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
[[nodiscard]] std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Exhaustive irreducibility test over F_p: no monic factor of degree <= k/2.
[[nodiscard]] bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

[[nodiscard]] FiniteField finite_field(std::uint32_t q,
                                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

}  // namespace tww

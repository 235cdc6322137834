#include "tww/finite_field.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tww {

namespace {

// Monic irreducible moduli for the non-prime orders up to 169, constant term
// first. Each is the first irreducible in encoding order and is re-verified
// when a field is built.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& builtin_moduli() {
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table{
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {64, {1, 1, 0, 0, 0, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {9, {1, 0, 1}},
        {27, {1, 2, 0, 1}},
        {81, {2, 1, 0, 0, 1}},
        {25, {2, 0, 1}},
        {125, {1, 1, 0, 1}},
        {49, {1, 0, 1}},
        {121, {1, 0, 1}},
        {169, {2, 0, 1}},
    };
    return table;
}

constexpr std::uint32_t kTableLimit = 4096;

using Poly = std::vector<std::uint32_t>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inverse_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{static_cast<std::uint32_t>(q), 1U};
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // Enumerate every monic polynomial of degree 1..k/2 as a trial divisor.
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) : q_(q) {
    const auto pk = prime_power(q);
    if (!pk) throw FieldError(std::to_string(q) + " is not a prime power");
    p_ = pk->first;
    k_ = pk->second;

    if (k_ == 1) {
        modulus_ = {0, 1};
        if (modulus) {
            Poly m = *modulus;
            trim(m);
            if (m.size() != 2 || m[1] != 1) throw FieldError("modulus for a prime field must be monic of degree 1");
            modulus_ = m;
        }
        return;
    }

    if (modulus) {
        modulus_ = *modulus;
    } else {
        const auto it = builtin_moduli().find(q);
        if (it == builtin_moduli().end()) {
            throw FieldError("no built-in modulus for q = " + std::to_string(q) + "; supply one");
        }
        modulus_ = it->second;
    }
    for (const auto c : modulus_) {
        if (c >= p_) throw FieldError("modulus coefficient out of range for characteristic " + std::to_string(p_));
    }
    if (modulus_.size() != k_ + 1 || modulus_.back() != 1) {
        throw FieldError("modulus must be monic of degree " + std::to_string(k_));
    }
    if (!is_irreducible(modulus_, p_)) throw FieldError("modulus is reducible over F_" + std::to_string(p_));

    if (q_ <= kTableLimit) {
        mul_table_.resize(std::size_t{q_} * q_);
        for (Element a = 0; a < q_; ++a) {
            const auto da = digits(a);
            for (Element b = a; b < q_; ++b) {
                const auto db = digits(b);
                Poly prod(2 * k_, 0);
                for (std::size_t i = 0; i < k_; ++i) {
                    for (std::size_t j = 0; j < k_; ++j) {
                        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
                    }
                }
                auto r = poly_mod(prod, modulus_, p_);
                r.resize(k_, 0);
                mul_table_[std::size_t{a} * q_ + b] = mul_table_[std::size_t{b} * q_ + a] = encode(r);
            }
        }
    }
}

std::vector<std::uint32_t> FiniteField::digits(Element a) const {
    std::vector<std::uint32_t> d(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

FiniteField::Element FiniteField::encode(const std::vector<std::uint32_t>& d) const {
    Element out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * p_ + d[i];
    return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    if (k_ == 1) return static_cast<Element>((std::uint64_t{a} + b) % p_);
    auto da = digits(a);
    const auto db = digits(b);
    for (std::size_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return encode(da);
}

FiniteField::Element FiniteField::neg(Element a) const {
    if (k_ == 1) return static_cast<Element>((p_ - a % p_) % p_);
    auto da = digits(a);
    for (auto& c : da) c = (p_ - c) % p_;
    return encode(da);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    if (k_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
    const auto da = digits(a);
    const auto db = digits(b);
    Poly prod(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t j = 0; j < k_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
        }
    }
    auto r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return encode(r);
}

std::vector<FiniteField::Element> FiniteField::nonzero_squares() const {
    std::vector<bool> is_sq(q_, false);
    for (Element c = 1; c < q_; ++c) is_sq[mul(c, c)] = true;
    std::vector<Element> out;
    for (Element a = 1; a < q_; ++a) {
        if (is_sq[a]) out.push_back(a);
    }
    return out;
}

FiniteField finite_field(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) {
    return FiniteField(q, std::move(modulus));
}

}  // namespace tww

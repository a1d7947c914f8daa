#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccgraph {

bool is_prime(std::uint64_t n);

/// Decompose q as p^k with p prime, k >= 1. Empty when q is not a prime
/// power (including q < 2).
std::optional<std::pair<std::uint64_t, std::uint32_t>>
prime_power_decompose(std::uint64_t q);

/// Arithmetic in GF(p^k). Elements are ids in [0, p^k): the base-p digits
/// of an id are the coefficients of the residue polynomial in t, constant
/// term least significant. The modulus is the lexicographically smallest
/// monic irreducible of degree k, coefficients compared from the constant
/// term up, so a given (p, k) always yields the same tables.
class FiniteField {
public:
    FiniteField(std::uint64_t p, std::uint32_t k);

    std::uint64_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }

    /// Coefficients c_0..c_{k-1} of the modulus t^k + c_{k-1} t^{k-1} + ... + c_0.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    /// Multiplicative inverse; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Polynomial rendering, e.g. "0", "1", "t", "2t^2+t+1".
    std::string render(std::uint32_t a) const;

    bool has_tables() const { return !mul_table_.empty(); }

private:
    std::uint32_t mul_nocache(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add_nocache(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_nocache(std::uint32_t a) const;

    std::uint64_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    // Full q*q tables when q is small; ops fall back to digit arithmetic
    // otherwise.
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
};

} // namespace ccgraph

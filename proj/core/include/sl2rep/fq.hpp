#pragma once

// Arithmetic in the prime field F_q for odd primes q.

#include <cstdint>
#include <iosfwd>

namespace sl2rep {

class GroupElem;

/// True iff n is an odd prime. Trial division; intended for desk-scale n.
bool is_odd_prime(std::uint64_t n);

/// Residue modulo an odd prime q, always kept in [0, q).
class FqElem {
public:
    /// Reduces `value` into [0, modulus). Throws std::invalid_argument if
    /// `modulus` is not an odd prime.
    FqElem(std::int64_t value, std::uint32_t modulus);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FqElem operator+(const FqElem& rhs) const;
    FqElem operator-(const FqElem& rhs) const;
    FqElem operator*(const FqElem& rhs) const;
    FqElem operator-() const;

    friend bool operator==(const FqElem&, const FqElem&) = default;

private:
    struct Trusted {};
    FqElem(Trusted, std::uint32_t value, std::uint32_t modulus) noexcept
        : value_(value), modulus_(modulus) {}

    void require_same_field(const FqElem& rhs) const;

    std::uint32_t value_;
    std::uint32_t modulus_;

    friend class GroupElem;
    friend FqElem pow_mod(FqElem base, std::uint64_t exp);
    friend FqElem primitive_root(std::uint32_t q);
};

std::ostream& operator<<(std::ostream& os, const FqElem& a);

/// base^exp mod q; exp == 0 gives 1.
FqElem pow_mod(FqElem base, std::uint64_t exp);

/// Multiplicative inverse. Throws std::domain_error for zero.
FqElem inverse(FqElem a);

/// Euler's criterion: a^((q-1)/2) == 1. Throws std::domain_error for zero,
/// which is neither a residue nor a non-residue here.
bool is_quadratic_residue(FqElem a);

/// Legendre symbol (a|q) in {-1, 0, +1}.
int legendre_symbol(FqElem a);

/// Multiplicative order of a nonzero residue.
std::uint64_t multiplicative_order(FqElem a);

/// Smallest generator >= 2 of the multiplicative group F_q^x.
FqElem primitive_root(std::uint32_t q);

}  // namespace sl2rep

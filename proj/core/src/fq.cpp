#include "sl2rep/fq.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2rep {

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FqElem::FqElem(std::int64_t value, std::uint32_t modulus) : value_(0), modulus_(modulus) {
    if (!is_odd_prime(modulus)) {
        throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not an odd prime");
    }
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    value_ = static_cast<std::uint32_t>(r);
}

void FqElem::require_same_field(const FqElem& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw std::domain_error("FqElem operands have different moduli");
    }
}

FqElem FqElem::operator+(const FqElem& rhs) const {
    require_same_field(rhs);
    std::uint64_t s = std::uint64_t{value_} + rhs.value_;
    if (s >= modulus_) s -= modulus_;
    return FqElem(Trusted{}, static_cast<std::uint32_t>(s), modulus_);
}

FqElem FqElem::operator-(const FqElem& rhs) const {
    require_same_field(rhs);
    std::uint64_t s = std::uint64_t{value_} + modulus_ - rhs.value_;
    if (s >= modulus_) s -= modulus_;
    return FqElem(Trusted{}, static_cast<std::uint32_t>(s), modulus_);
}

FqElem FqElem::operator*(const FqElem& rhs) const {
    require_same_field(rhs);
    std::uint64_t p = std::uint64_t{value_} * rhs.value_ % modulus_;
    return FqElem(Trusted{}, static_cast<std::uint32_t>(p), modulus_);
}

FqElem FqElem::operator-() const {
    return FqElem(Trusted{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

std::ostream& operator<<(std::ostream& os, const FqElem& a) {
    return os << a.value() << " mod " << a.modulus();
}

FqElem pow_mod(FqElem base, std::uint64_t exp) {
    const std::uint64_t q = base.modulus();
    std::uint64_t result = 1 % q;
    std::uint64_t b = base.value();
    while (exp > 0) {
        if (exp & 1) result = result * b % q;
        b = b * b % q;
        exp >>= 1;
    }
    return FqElem(FqElem::Trusted{}, static_cast<std::uint32_t>(result), base.modulus());
}

FqElem inverse(FqElem a) {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    return pow_mod(a, a.modulus() - 2);
}

bool is_quadratic_residue(FqElem a) {
    if (a.is_zero()) throw std::domain_error("quadratic residuosity of zero is not defined");
    return pow_mod(a, (a.modulus() - 1) / 2).value() == 1;
}

int legendre_symbol(FqElem a) {
    if (a.is_zero()) return 0;
    return is_quadratic_residue(a) ? 1 : -1;
}

std::uint64_t multiplicative_order(FqElem a) {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
    const std::uint64_t n = a.modulus() - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        primes.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(m);

    // Strip prime factors of q-1 while a^(order/p) stays 1.
    std::uint64_t order = n;
    for (std::uint64_t p : primes) {
        while (order % p == 0 && pow_mod(a, order / p).value() == 1) order /= p;
    }
    return order;
}

FqElem primitive_root(std::uint32_t q) {
    if (!is_odd_prime(q)) {
        throw std::invalid_argument("modulus " + std::to_string(q) + " is not an odd prime");
    }
    for (std::uint32_t v = 2; v < q; ++v) {
        FqElem cand(FqElem::Trusted{}, v, q);
        if (multiplicative_order(cand) == q - 1) return cand;
    }
    // q = 3: the loop above already returns 2; unreachable for odd primes.
    throw std::logic_error("no primitive root found");
}

}  // namespace sl2rep

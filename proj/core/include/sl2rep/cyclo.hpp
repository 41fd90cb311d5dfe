#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores its conductor N together with the coefficients of
// 1, zeta_N, ..., zeta_N^(phi(N)-1), fully reduced modulo the N-th cyclotomic
// polynomial. That power basis is a Q-basis of Q(zeta_N), so the coefficient
// vector is canonical at a fixed conductor. Binary operations embed both
// operands into Q(zeta_L), L = lcm of the two conductors, before combining.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace sl2rep {

using Rational = mpq_class;
using IntPoly = std::vector<std::int64_t>;  // coefficient of x^k at index k

std::uint64_t euler_phi(std::uint64_t n);

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(std::uint32_t n);

class CycNum {
public:
    /// Zero, conductor 1.
    CycNum();
    CycNum(long value);  // NOLINT(google-explicit-constructor): integers are field elements
    CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// Builds a value from an already-reduced coefficient vector of length
    /// phi(conductor). Throws std::invalid_argument on a length mismatch.
    static CycNum from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs);

    std::uint32_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Same value expressed in Q(zeta_target). Requires conductor() | target.
    CycNum embed(std::uint32_t target) const;

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// Image under zeta -> zeta^-1.
    CycNum conjugate() const;

    /// Floating-point shadow; advisory only, never used for decisions.
    std::complex<double> approx() const;

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator*=(const Rational& rhs);
    CycNum& operator/=(const Rational& rhs);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator*(CycNum a, const Rational& b) { return a *= b; }
    friend CycNum operator*(const Rational& a, CycNum b) { return b *= a; }
    friend CycNum operator/(CycNum a, const Rational& b) { return a /= b; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

private:
    CycNum(std::uint32_t conductor, std::vector<Rational> coeffs);

    std::uint32_t conductor_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// zeta_n^k with k taken mod n.
CycNum root_of_unity(std::uint32_t n, std::int64_t k);

/// nu_r^s = zeta_r^s + zeta_r^-s (that is, 2 cos(2 pi s / r)).
CycNum nu(std::uint32_t r, std::int64_t s);

/// Quadratic Gauss sum sum_{k=1}^{q-1} (k|q) zeta_q^k, a square root of
/// eps * q with eps = (-1)^((q-1)/2).
CycNum sqrt_eps_q(std::uint32_t q);

inline CycNum conjugate(const CycNum& x) { return x.conjugate(); }
inline std::optional<Rational> as_rational(const CycNum& x) { return x.as_rational(); }

/// Sum of many CycNums of mixed conductor. Terms are kept per conductor and
/// rational partial sums are folded together, so the result is only lifted
/// to a common conductor when two irrational partials remain.
class CycSum {
public:
    void add(const CycNum& x);
    void add(const CycNum& x, const Rational& weight);
    CycNum total() const;

private:
    Rational rational_part_;
    std::map<std::uint32_t, CycNum> partials_;
};

}  // namespace sl2rep

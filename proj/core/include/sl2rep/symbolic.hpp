#pragma once

// Symbolic forms of character values, used for display and serialization
// next to the exact CycNum value. Three shapes occur in the tables:
//   a                      rational
//   a + b*nu(r,s)          with nu(r,s) = zeta_r^s + zeta_r^-s
//   a + b*sqrt(D)          with D = eps*q and sqrt(D) the Gauss sum
//
// Text grammar (no whitespace):
//   value     := rational | nu-form | surd-form
//   rational  := int | int "/" int
//   coef      := "" | int "*" | "(" rational ")*"
//   nu-form   := [rational sign | "-"] coef "nu(" int "," int ")"
//   surd-form := surd-num | "(" surd-num ")/" int
//   surd-num  := [int sign | "-"] coef "sqrt(" int ")"
// A sign between the constant and the term applies to the coefficient.

#include "sl2rep/cyclo.hpp"

#include <cstdint>
#include <string>

namespace sl2rep {

struct Symbolic {
    enum class Kind : std::uint8_t { Rational, Nu, Surd };

    Kind kind = Kind::Rational;
    sl2rep::Rational a;          // constant term
    sl2rep::Rational b;          // coefficient of nu(r,s) or sqrt(radicand)
    std::uint32_t r = 0;         // Nu only
    std::int64_t s = 0;          // Nu only, reduced into [1, r/2]
    std::int64_t radicand = 0;   // Surd only; the prime's signed value eps*q

    static Symbolic rational(const sl2rep::Rational& value);
    /// a + b*nu(r,s); collapses to a rational when nu(r,s) is one.
    static Symbolic nu_form(sl2rep::Rational a, sl2rep::Rational b, std::uint32_t r,
                            std::int64_t s);
    /// a + b*sqrt(eps*q) with q an odd prime, eps = (-1)^((q-1)/2).
    static Symbolic surd_form(sl2rep::Rational a, sl2rep::Rational b, std::int64_t radicand);

    bool is_rational() const noexcept { return kind == Kind::Rational; }

    /// Exact value.
    CycNum value() const;

    Symbolic scaled(const sl2rep::Rational& factor) const;

    std::string to_string() const;

    friend bool operator==(const Symbolic& x, const Symbolic& y);
};

/// Sum of two forms. Throws std::invalid_argument when the result leaves the
/// three shapes above (for example two different nu terms).
Symbolic operator+(const Symbolic& x, const Symbolic& y);

/// Inverse of Symbolic::to_string. Throws std::invalid_argument on bad input.
Symbolic parse_symbolic(const std::string& text);

}  // namespace sl2rep

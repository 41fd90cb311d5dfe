#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/chars.hpp>
#include <sl2rep/realrep.hpp>
#include <sl2rep/symbolic.hpp>

#include <stdexcept>

using namespace sl2rep;

TEST_CASE("rendering") {
    CHECK(Symbolic::rational(Rational(-3, 2)).to_string() == "-3/2");
    CHECK(Symbolic::nu_form(0, 1, 4, 1).to_string() == "0");
    CHECK(Symbolic::nu_form(0, 1, 8, 1).to_string() == "nu(8,1)");
    CHECK(Symbolic::nu_form(0, -1, 8, 1).to_string() == "-nu(8,1)");
    CHECK(Symbolic::nu_form(0, -2, 8, 3).to_string() == "-2*nu(8,3)");
    CHECK(Symbolic::surd_form(Rational(1, 2), Rational(1, 2), 5).to_string() == "(1+sqrt(5))/2");
    CHECK(Symbolic::surd_form(Rational(-1, 2), Rational(-1, 2), -7).to_string() ==
          "(-1-sqrt(-7))/2");
}

TEST_CASE("nu forms normalise") {
    CHECK(Symbolic::nu_form(0, 1, 8, 7) == Symbolic::nu_form(0, 1, 8, 1));
    CHECK(Symbolic::nu_form(0, 1, 8, -1) == Symbolic::nu_form(0, 1, 8, 1));
    CHECK(Symbolic::nu_form(0, 1, 6, 1).is_rational());
    CHECK(Symbolic::nu_form(0, 1, 12, 2).value() == CycNum(1));
    CHECK(Symbolic::nu_form(0, 1, 12, 2).is_rational());
    CHECK_THROWS_AS(Symbolic::surd_form(0, 1, 7), std::invalid_argument);
    CHECK_THROWS_AS(Symbolic::surd_form(0, 1, 9), std::invalid_argument);
}

TEST_CASE("values agree with floating point") {
    for (std::uint32_t r = 1; r < 30; ++r) {
        for (std::int64_t s = 0; s < r; ++s) {
            const auto f = Symbolic::nu_form(Rational(1, 3), -2, r, s);
            const double expect = 1.0 / 3 - 4 * std::cos(2 * M_PI * s / r);
            CHECK(std::abs(f.value().approx() - std::complex<double>(expect, 0)) < 1e-9);
        }
    }
    for (std::int64_t q : {3, 5, 7, 11, 13}) {
        const std::int64_t eps = (q % 4 == 1) ? 1 : -1;
        const auto f = Symbolic::surd_form(Rational(1, 2), Rational(1, 2), eps * q);
        CHECK(std::abs(f.value().approx() - (1.0 + oracle::gauss_sum(q)) / 2.0) < 1e-9);
    }
}

TEST_CASE("sums stay in shape or throw") {
    const auto x = Symbolic::nu_form(0, 1, 8, 1);
    CHECK(x + x == Symbolic::nu_form(0, 2, 8, 1));
    CHECK(x + Symbolic::rational(3) == Symbolic::nu_form(3, 1, 8, 1));
    CHECK_THROWS_AS(x + Symbolic::nu_form(0, 1, 8, 3), std::invalid_argument);
    const auto s = Symbolic::surd_form(Rational(1, 2), Rational(1, 2), 5);
    CHECK((s + Symbolic::surd_form(Rational(1, 2), Rational(-1, 2), 5)).value() == CycNum(1));
    CHECK_THROWS_AS(s + x, std::invalid_argument);
}

TEST_CASE("parse inverts to_string over every table cell") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        const auto t = complex_table(q);
        for (const auto& row : t.cells()) {
            for (const auto& cell : row) {
                const auto text = cell.form.to_string();
                CHECK_MESSAGE(parse_symbolic(text) == cell.form, text);
                CHECK(parse_symbolic(text).value() == cell.value);
            }
        }
        const auto rt = real_table(t);
        for (const auto& row : rt.cells()) {
            for (const auto& cell : row) CHECK(parse_symbolic(cell.form.to_string()) == cell.form);
        }
    }
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "nu(8)", "nu(0,1)", "1+", "sqrt(5", "(1+sqrt(5))/", "abc",
                            "1/0", "2*", "nu(8,1)+1", "sqrt(9)"}) {
        INFO(bad);
        CHECK_THROWS(parse_symbolic(bad));
    }
}

TEST_CASE("non-canonical coefficients are normalised") {
    CHECK(Symbolic::nu_form(Rational(2, 4), Rational(6, 3), 8, 1) == Symbolic::nu_form(Rational(1, 2), 2, 8, 1));
    CHECK(Symbolic::nu_form(0, Rational(0, 5), 8, 1).is_rational());
    CHECK(Symbolic::surd_form(Rational(3, 6), Rational(2, 4), 5).to_string() == "(1+sqrt(5))/2");
    CHECK(Symbolic::rational(Rational(4, 2)).to_string() == "2");
}

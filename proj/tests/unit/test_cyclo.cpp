#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/cyclo.hpp>
#include <sl2rep/fq.hpp>

#include <random>
#include <stdexcept>

using namespace sl2rep;

namespace {

bool near(std::complex<double> x, std::complex<double> y, double tol = 1e-9) {
    return std::abs(x - y) < tol;
}

CycNum random_cyc(std::mt19937& rng) {
    static const std::uint32_t conductors[] = {1, 3, 4, 5, 7, 8, 12, 15};
    std::uniform_int_distribution<int> pick_n(0, 7);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    const auto n = conductors[pick_n(rng)];
    std::vector<Rational> coeffs(euler_phi(n));
    for (auto& c : coeffs) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return CycNum::from_coeffs(n, std::move(coeffs));
}

}  // namespace

TEST_CASE("euler_phi counts units") {
    for (std::uint64_t n = 1; n < 200; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k) count += (std::gcd(k, n) == 1);
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("cyclotomic polynomials match the numeric product of primitive roots") {
    for (std::uint32_t n = 1; n <= 40; ++n) {
        CHECK_MESSAGE(cyclotomic_polynomial(n) == oracle::cyclotomic_numeric(n), "n = " << n);
    }
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(105) == oracle::cyclotomic_numeric(105));
    CHECK(cyclotomic_polynomial(105)[7] == -2);  // the first coefficient outside {-1,0,1}
}

TEST_CASE("roots of unity") {
    for (std::uint32_t n = 1; n <= 24; ++n) {
        CHECK(root_of_unity(n, 0) == CycNum(1));
        CHECK(root_of_unity(n, n + 3) == root_of_unity(n, 3));
        CHECK(root_of_unity(n, -1) * root_of_unity(n, 1) == CycNum(1));
        for (std::int64_t k = 0; k < n; ++k) {
            CHECK(near(root_of_unity(n, k).approx(), oracle::zeta(n, k)));
        }
    }
}

TEST_CASE("sum of the k-th powers of all n-th roots of unity") {
    for (std::uint32_t n = 1; n <= 30; ++n) {
        for (std::int64_t k = 0; k < 2 * static_cast<std::int64_t>(n); ++k) {
            CycNum s;
            for (std::int64_t i = 0; i < n; ++i) s += root_of_unity(n, i * k);
            // -1 from the i = 1.. part whenever k is not 0 mod n, so the full sum is 0.
            CycNum partial = s - CycNum(1);
            if (k % n == 0) {
                CHECK(s == CycNum(static_cast<long>(n)));
            } else {
                CHECK(s.is_zero());
                CHECK(partial == CycNum(-1));
            }
        }
    }
}

TEST_CASE("nu is symmetric and real") {
    for (std::uint32_t r = 1; r <= 30; ++r) {
        for (std::int64_t s = 0; s <= r; ++s) {
            CHECK(nu(r, r - s) == nu(r, s));
            CHECK(nu(r, s).conjugate() == nu(r, s));
            CHECK(near(nu(r, s).approx(), {2 * std::cos(2 * M_PI * s / r), 0}));
        }
    }
    CHECK(nu(4, 1).is_zero());
    CHECK(nu(6, 1) == CycNum(1));
    CHECK(nu(3, 1) == CycNum(-1));
    CHECK(nu(8, 1) * nu(8, 1) == CycNum(2));
}

TEST_CASE("Gauss sum squares to eps*q") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
        const long eps = (q % 4 == 1) ? 1 : -1;
        const auto g = sqrt_eps_q(q);
        CHECK(g * g == CycNum(eps * static_cast<long>(q)));
        CHECK(near(g.approx(), oracle::gauss_sum(q), 1e-8));
        CHECK(g.conjugate() == (eps == 1 ? g : -g));
    }
    CHECK_THROWS_AS(sqrt_eps_q(9), std::invalid_argument);
}

TEST_CASE("ring axioms on 1000 random small operands") {
    std::mt19937 rng(1234567);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_cyc(rng), y = random_cyc(rng), z = random_cyc(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + CycNum() == x);
        CHECK(x * CycNum(1) == x);
        CHECK((x - x).is_zero());
        CHECK(x - y == x + (-y));
        CHECK((x * Rational(3, 7)) / Rational(3, 7) == x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK(near((x * y).approx(), x.approx() * y.approx(), 1e-7));
        CHECK(near(x.conjugate().approx(), std::conj(x.approx()), 1e-9));
    }
}

TEST_CASE("embedding keeps the value and equality crosses conductors") {
    const auto w = root_of_unity(3, 1);
    CHECK(w.embed(12) == root_of_unity(12, 4));
    CHECK(w == root_of_unity(12, 4));
    CHECK(w.embed(12).conductor() == 12);
    CHECK_THROWS_AS(w.embed(10), std::invalid_argument);
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CycNum(-1));
}

TEST_CASE("rational detection") {
    CHECK(CycNum(Rational(5, 3)).as_rational() == Rational(5, 3));
    CHECK(!root_of_unity(5, 1).as_rational());
    CHECK((root_of_unity(5, 1) + root_of_unity(5, 2) + root_of_unity(5, 3) + root_of_unity(5, 4))
              .as_rational() == Rational(-1));
    CHECK_THROWS_AS(CycNum::from_coeffs(5, {Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(CycNum(1) / Rational(0), std::domain_error);
}

TEST_CASE("CycSum agrees with plain summation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        CycSum acc;
        CycNum plain;
        for (int k = 0; k < 20; ++k) {
            const auto x = random_cyc(rng);
            const Rational w(trial % 5 + 1, k % 3 + 1);
            acc.add(x, w);
            plain += x * w;
        }
        CHECK(acc.total() == plain);
    }
}

TEST_CASE("non-canonical rational inputs are normalised") {
    const auto z = root_of_unity(5, 1);
    CHECK(z * Rational(2, 4) == z * Rational(1, 2));
    CHECK(z / Rational(3, 6) == z * Rational(2));
    CHECK((z * Rational(0, 3)).is_zero());
    CycSum acc;
    acc.add(z, Rational(4, 8));
    acc.add(z, Rational(1, 2));
    CHECK(acc.total() == z);
}

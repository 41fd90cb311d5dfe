#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/chars.hpp>

#include <stdexcept>

using namespace sl2rep;

namespace {

oracle::Mat as_mat(const GroupElem& g) {
    return {g.a().value(), g.b().value(), g.c().value(), g.d().value()};
}

}  // namespace

TEST_CASE("labels") {
    CHECK(char_labels(5).size() == 9);
    CHECK(char_labels(13).size() == 17);
    for (const auto& l : char_labels(13)) CHECK(parse_char_label(to_string(l)) == l);
    CHECK(to_string(CharLabel::theta(3)) == "Theta(3)");
    CHECK_THROWS_AS(parse_char_label("Rho"), std::invalid_argument);
}

TEST_CASE("degrees") {
    // Frozen from the degree-sum oracle below.
    const auto t5 = complex_table(5);
    std::vector<std::int64_t> deg;
    for (const auto& c : t5.characters()) deg.push_back(t5.degree(c));
    CHECK(deg == std::vector<std::int64_t>{1, 5, 6, 4, 4, 3, 3, 2, 2});

    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        const auto t = complex_table(q);
        std::int64_t sum = 0;
        for (const auto& c : t.characters()) sum += t.degree(c) * t.degree(c);
        CHECK(sum == static_cast<std::int64_t>(q) * q * q - q);
    }
}

TEST_CASE("first and second orthogonality, exactly") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        const auto n = t.characters().size();
        const CycNum order(static_cast<long>(t.group_order()));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(inner_product(t, i, j) == (i == j ? order : CycNum()));
                const auto& ci = t.classes()[i];
                const CycNum centraliser(static_cast<long>(t.group_order() / ci.size));
                CHECK(column_product(t, i, j) == (i == j ? centraliser : CycNum()));
            }
        }
    }
}

TEST_CASE("psi is the permutation character of the projective line minus one") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        for (const auto& cls : t.classes()) {
            const int fixed = oracle::projective_fixed_points(as_mat(cls.representative), q);
            CHECK(t.value(CharLabel::psi(), cls.label) == CycNum(fixed - 1));
            CHECK(t.value(CharLabel::triv(), cls.label) == CycNum(1));
        }
    }
}

TEST_CASE("xi1 takes (1 + Gauss sum)/2 at c") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        const auto g = oracle::gauss_sum(q);
        const auto at_c = t.value(CharLabel::xi1(), ClassLabel::c()).approx();
        CHECK(std::abs(at_c - (1.0 + g) / 2.0) < 1e-9);
        const auto eta_c = t.value(CharLabel::eta1(), ClassLabel::c()).approx();
        CHECK(std::abs(eta_c - (-1.0 + g) / 2.0) < 1e-9);
    }
}

TEST_CASE("zc and zd entries follow chi(z)/chi(1) * chi(c)") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        for (const auto& chr : t.characters()) {
            const Rational ratio =
                *t.value(chr, ClassLabel::z()).as_rational() / Rational(t.degree(chr));
            CHECK(t.value(chr, ClassLabel::zc()) == t.value(chr, ClassLabel::c()) * ratio);
            CHECK(t.value(chr, ClassLabel::zd()) == t.value(chr, ClassLabel::d()) * ratio);
        }
    }
}

TEST_CASE("cells carry matching symbolic forms") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        for (const auto& row : t.cells()) {
            for (const auto& cell : row) CHECK(cell.form.value() == cell.value);
        }
    }
}

TEST_CASE("value_at reads the class of any element") {
    const std::uint32_t q = 5;
    const auto t = complex_table(q);
    const ConjugacyPartition part(q);
    for (const auto& [label, members] : part.classes()) {
        for (const auto& g : members) {
            for (const auto& chr : t.characters()) CHECK(value_at(t, chr, g, part) == t.value(chr, label));
        }
    }
    CHECK_THROWS_AS(value_at(t, CharLabel::psi(), GroupElem::identity(7), part), std::domain_error);
    CHECK_THROWS(t.column_of(ClassLabel::a(2)));
    CHECK_THROWS(t.row_of(CharLabel::chi(5)));
}

TEST_CASE("conjugation permutation") {
    // Trace q+4 when q = 1 mod 4, q when q = 3 mod 4.
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        const auto t = complex_table(q);
        CHECK(conjugation_trace(t) == (q % 4 == 1 ? q + 4 : q));
        const auto perm = conjugation_permutation(t);
        for (std::size_t r = 0; r < perm.size(); ++r) {
            CHECK(perm[perm[r]] == r);
            for (const auto& cls : t.classes()) {
                CHECK(t.cells()[perm[r]][t.column_of(cls.label)].value ==
                      t.cells()[r][t.column_of(cls.label)].value.conjugate());
            }
        }
    }
}

TEST_CASE("closed-form table needs no enumeration") {
    const auto t = complex_table(101);
    CHECK(t.characters().size() == 105);
    CHECK(t.degree(CharLabel::chi(1)) == 102);
    CHECK(t.working_conductor() == 101ull * 100 * 102 / 2);
}

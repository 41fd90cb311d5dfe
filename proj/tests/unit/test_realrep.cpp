#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/realrep.hpp>

#include <set>
#include <stdexcept>

using namespace sl2rep;

TEST_CASE("real labels") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        for (const auto& l : real_char_labels(q)) CHECK(parse_real_char_label(to_string(l)) == l);
    }
    CHECK_THROWS(parse_real_char_label("Chi(1)"));
    CHECK_THROWS(parse_real_char_label("2Chi(2)"));
    CHECK_THROWS(parse_real_char_label("Theta"));
    const auto parts = constituents(parse_real_char_label("2ReXi1"));
    CHECK(parts.size() == 2);
    CHECK(constituents(parse_real_char_label("2Chi(3)")) ==
          std::vector<std::pair<CharLabel, int>>{{CharLabel::chi(3), 2}});
}

TEST_CASE("square and inverse maps hold for every element") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const ConjugacyPartition part(q);
        const auto sq = square_class_map(q);
        const auto inv = inverse_class_map(q);
        for (const auto& g : part.elements()) {
            const auto l = part.label_of(g);
            CHECK(part.label_of(g * g) == sq.at(l));
            CHECK(part.label_of(g.inverse()) == inv.at(l));
        }
    }
}

TEST_CASE("c squared lands in (c) or (d) with the residuosity of 2") {
    CHECK(square_class_map(7).at(ClassLabel::c()) == ClassLabel::c());
    CHECK(square_class_map(5).at(ClassLabel::c()) == ClassLabel::d());
    CHECK(square_class_map(17).at(ClassLabel::c()) == ClassLabel::c());
    CHECK(square_class_map(11).at(ClassLabel::c()) == ClassLabel::d());
    // Inverses swap C and D only when q = 3 mod 4.
    CHECK(inverse_class_map(7).at(ClassLabel::c()) == ClassLabel::d());
    CHECK(inverse_class_map(13).at(ClassLabel::c()) == ClassLabel::c());
}

TEST_CASE("real classes") {
    for (std::uint32_t q : oracle::tested_primes()) {
        // Oracle: union-find free count of {(g), (g^-1)} pairs.
        const ConjugacyPartition part(q);
        std::set<std::set<ClassLabel>> blocks;
        for (const auto& g : part.elements()) blocks.insert({part.label_of(g), part.label_of(g.inverse())});
        const auto rc = real_classes(q);
        CHECK(rc.blocks.size() == blocks.size());
        CHECK(rc.blocks.size() == (q % 4 == 1 ? q + 4 : q + 2));
    }
}

TEST_CASE("Frobenius-Schur indicators three ways") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto t = complex_table(q);
        const SquareCensus census{ConjugacyPartition(q)};
        for (const auto& chr : t.characters()) {
            const int closed = fs_indicator_closed(t, chr);
            CHECK(closed == fs_indicator_brute(t, chr));
            CHECK(closed == fs_indicator_raw(t, chr, census));
        }
        const auto listing = fs_listing(t, &census);
        for (const auto& e : listing) {
            CHECK(e.match);
            CHECK(e.raw.has_value());
        }
        CHECK(!fs_listing(t).front().raw.has_value());
    }
}

TEST_CASE("indicator trichotomy") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
        const auto t = complex_table(q);
        for (const auto& chr : t.characters()) {
            int expect = 1;
            switch (chr.kind) {
                case CharLabel::Kind::Chi:
                case CharLabel::Kind::Theta: expect = (chr.index % 2 == 0) ? 1 : -1; break;
                case CharLabel::Kind::Xi1:
                case CharLabel::Kind::Xi2: expect = (q % 4 == 1) ? 1 : 0; break;
                case CharLabel::Kind::Eta1:
                case CharLabel::Kind::Eta2: expect = (q % 4 == 1) ? -1 : 0; break;
                default: break;
            }
            CHECK_MESSAGE(fs_indicator_closed(t, chr) == expect, "q=" << q << " " << to_string(chr));
        }
    }
}

TEST_CASE("real table") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto rt = real_table(q);
        CHECK(rt.characters().size() == real_classes(q).blocks.size());
        for (const auto& row : rt.cells()) {
            for (const auto& cell : row) {
                CHECK(cell.value.conjugate() == cell.value);
                CHECK(cell.form.value() == cell.value);
            }
        }
    }
    // Frozen from the constituent degrees.
    const auto rt7 = real_table(7);
    std::vector<std::int64_t> deg;
    for (const auto& c : rt7.characters()) deg.push_back(rt7.degree(c));
    CHECK(deg == std::vector<std::int64_t>{1, 7, 8, 16, 6, 12, 12, 8, 6});
    CHECK(to_string(rt7.characters().back()) == "2ReEta1");
}

TEST_CASE("real rows are sums of their constituents") {
    for (std::uint32_t q : {5u, 7u, 11u}) {
        const auto t = complex_table(q);
        const auto rt = real_table(t);
        for (const auto& chr : rt.characters()) {
            for (const auto& cls : rt.classes()) {
                CycNum sum;
                for (const auto& [c, mult] : constituents(chr)) sum += t.value(c, cls.label) * Rational(mult);
                CHECK(rt.value(chr, cls.label) == sum);
            }
        }
    }
}

#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/fixdim.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace sl2rep;

namespace {

RealCharLabel R(const char* s) { return parse_real_char_label(s); }

SubgroupKey K(const char* s) { return parse_subgroup_key(s); }

}  // namespace

TEST_CASE("subgroup keys and quotient cases") {
    CHECK(subgroup_keys(7).size() == 4 + 2 + 3);
    for (const auto& k : subgroup_keys(13)) CHECK(parse_subgroup_key(to_string(k)) == k);
    CHECK_THROWS(parse_subgroup_key("A(0)x"));
    // q = 7: (q-1)/gcd(6,1) = 6 even, index odd; (q+1)/gcd(8,2) = 4 even, index even.
    CHECK(to_string(quotient_case(7, K("A(1)"))) == "even/index-odd");
    CHECK(to_string(quotient_case(7, K("B(2)"))) == "even/index-even");
    CHECK(to_string(quotient_case(13, K("A(4)"))) == "odd");
    CHECK(to_string(quotient_case(13, K("Z"))) == "none");
    CHECK_THROWS_AS(subgroup(7, SubgroupKind::A, 3), std::out_of_range);
    CHECK_THROWS_AS(subgroup(7, SubgroupKind::B, 0), std::out_of_range);
}

TEST_CASE("subgroup descriptions") {
    for (std::uint32_t q : oracle::tested_primes()) {
        for (const auto& k : subgroup_keys(q)) {
            const auto H = subgroup(q, k.kind, k.index);
            CHECK(H.elements.size() == H.order);
            CHECK(element_order(H.generator) == H.order);
            const std::set<GroupElem> distinct(H.elements.begin(), H.elements.end());
            CHECK(distinct.size() == H.order);
        }
    }
}

TEST_CASE("closed form equals the average over every cyclic subgroup") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
        const auto rt = real_table(q);
        const Classifier cls(q);
        std::set<std::vector<GroupElem>> seen;
        for (const auto& g : enumerate_group(q)) {
            auto H = cyclic_closure(g);
            std::sort(H.begin(), H.end());
            if (!seen.insert(H).second) continue;
            const auto key = classify_cyclic(g, cls);
            CHECK(subgroup(q, key.kind, key.index).order == H.size());
            for (const auto& chr : rt.characters()) {
                const auto avg = fixed_dim_average(rt, chr, H, cls);
                CHECK_MESSAGE(avg == fixed_dim_closed(q, chr, key),
                              "q=" << q << " " << to_string(chr) << " on " << to_string(key));
                CHECK(avg >= 0);
                CHECK(avg <= rt.degree(chr));
            }
        }
    }
}

TEST_CASE("values stated for <z>, <c> and <zc>") {
    for (std::uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u}) {
        const std::int64_t Q = q;
        CHECK(fixed_dim_closed(q, R("Psi"), K("Z")) == Q);
        if (q >= 7) CHECK(fixed_dim_closed(q, R("Chi(2)"), K("Z")) == Q + 1);
        CHECK(fixed_dim_closed(q, R("Theta(2)"), K("Z")) == Q - 1);
        CHECK(fixed_dim_closed(q, R("2Chi(1)"), K("Z")) == 0);
        CHECK(fixed_dim_closed(q, R("2Theta(1)"), K("Z")) == 0);
        CHECK(fixed_dim_closed(q, R("Psi"), K("C")) == 1);
        if (q >= 7) CHECK(fixed_dim_closed(q, R("Chi(2)"), K("C")) == 2);
        CHECK(fixed_dim_closed(q, R("2Chi(1)"), K("C")) == 4);
        CHECK(fixed_dim_closed(q, R("Theta(2)"), K("C")) == 0);
        CHECK(fixed_dim_closed(q, R("Psi"), K("ZC")) == 1);
        if (q >= 7) CHECK(fixed_dim_closed(q, R("Chi(2)"), K("ZC")) == 2);
        CHECK(fixed_dim_closed(q, R("2Chi(1)"), K("ZC")) == 0);
        if (q % 4 == 1) {
            CHECK(fixed_dim_closed(q, R("Xi1"), K("Z")) == (Q + 1) / 2);
            CHECK(fixed_dim_closed(q, R("2Eta1"), K("Z")) == 0);
            CHECK(fixed_dim_closed(q, R("Xi2"), K("C")) == 1);
            CHECK(fixed_dim_closed(q, R("Xi1"), K("ZC")) == 1);
        } else {
            CHECK(fixed_dim_closed(q, R("2ReXi1"), K("Z")) == 0);
            CHECK(fixed_dim_closed(q, R("2ReEta1"), K("Z")) == Q - 1);
            CHECK(fixed_dim_closed(q, R("2ReXi1"), K("C")) == 2);
            CHECK(fixed_dim_closed(q, R("2ReEta1"), K("ZC")) == 0);
        }
    }
}

TEST_CASE("odd-quotient psi uses gcd + 1 on <a^l>") {
    // q = 13, l = 4: (q-1)/gcd(12,4) = 3 is odd.
    const auto H = subgroup(13, SubgroupKind::A, 4);
    const auto rt = real_table(13);
    const Classifier cls(13);
    CHECK(fixed_dim_average(rt, R("Psi"), H, cls) == 5);
    CHECK(fixed_dim_closed(13, R("Psi"), K("A(4)")) == 5);
}

TEST_CASE("gcd-only formula differs from the exact value in two cells at q = 11") {
    // Frozen from the oracle comparison in the sweep above.
    int diffs = 0;
    for (const auto& chr : real_char_labels(11)) {
        for (const auto& key : subgroup_keys(11)) {
            if (fixed_dim_closed(11, chr, key) != fixed_dim_summary_formula(11, chr, key)) ++diffs;
        }
    }
    CHECK(diffs == 2);
    CHECK(fixed_dim_closed(11, R("Theta(4)"), K("B(3)")) == 4);
    CHECK(fixed_dim_summary_formula(11, R("Theta(4)"), K("B(3)")) == 6);
    CHECK(fixed_dim_closed(11, R("2Theta(3)"), K("B(4)")) == 4);
    CHECK(fixed_dim_summary_formula(11, R("2Theta(3)"), K("B(4)")) == 8);
    for (std::uint32_t q : {3u, 5u, 7u}) {
        for (const auto& chr : real_char_labels(q)) {
            for (const auto& key : subgroup_keys(q)) {
                CHECK(fixed_dim_closed(q, chr, key) == fixed_dim_summary_formula(q, chr, key));
            }
        }
    }
}

TEST_CASE("bad rows and keys are rejected") {
    CHECK_THROWS_AS(fixed_dim_closed(7, R("Xi1"), K("Z")), std::invalid_argument);
    CHECK_THROWS_AS(fixed_dim_closed(5, R("2ReXi1"), K("Z")), std::invalid_argument);
    CHECK_THROWS_AS(fixed_dim_closed(7, R("Psi"), K("A(3)")), std::invalid_argument);
}

TEST_CASE("full report") {
    const auto rep = full_report(11);
    CHECK(rep.rows.size() == real_char_labels(11).size());
    CHECK(rep.columns.size() == subgroup_keys(11).size());
    int notes = 0;
    for (const auto& row : rep.entries) {
        for (const auto& e : row) {
            CHECK(e.match);
            CHECK(e.oracle.has_value());
            CHECK(*e.oracle == e.closed);
            notes += !e.note.empty();
        }
    }
    CHECK(notes == 2);
    CHECK(rep.at(R("Theta(4)"), K("B(3)")).note == "note: gcd-only formula gives 6");

    const auto big = full_report(53);
    CHECK(!big.entries.front().front().oracle.has_value());
}

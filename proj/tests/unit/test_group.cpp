#include "oracles.hpp"

#include <doctest.h>
#include <sl2rep/group.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace sl2rep;

namespace {

oracle::Mat as_mat(const GroupElem& g) {
    return {g.a().value(), g.b().value(), g.c().value(), g.d().value()};
}

}  // namespace

TEST_CASE("GroupElem basics") {
    CHECK_THROWS_AS(GroupElem::from_ints(1, 1, 1, 1, 5), std::invalid_argument);
    const auto g = GroupElem::from_ints(2, 3, 1, 2, 7);
    CHECK((g * g.inverse()).is_identity());
    CHECK(g.pow(element_order(g)).is_identity());
    CHECK(GroupElem::central_involution(7) == GroupElem::from_ints(-1, 0, 0, -1, 7));
    CHECK(g.trace().value() == 4);
    CHECK(g.pow(0).is_identity());
}

TEST_CASE("enumeration lists every determinant-one matrix once") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto G = enumerate_group(q);
        const auto ref = oracle::group(q);
        REQUIRE(G.size() == std::uint64_t{q} * q * q - q);
        REQUIRE(G.size() == ref.size());
        for (std::size_t i = 0; i < G.size(); ++i) CHECK(as_mat(G[i]) == ref[i]);
    }
    CHECK_THROWS_AS(enumerate_group(53), std::length_error);
    CHECK(enumerate_group(53, EnumerationBound{60}).size() == 53ull * 53 * 53 - 53);
}

TEST_CASE("class labels") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 97u}) {
        const auto labels = class_labels(q);
        CHECK(labels.size() == q + 4);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            CHECK(parse_class_label(to_string(labels[i])) == labels[i]);
            CHECK(class_index(q, labels[i]) == i);
        }
    }
    CHECK(to_string(ClassLabel::a(3)) == "A(3)");
    CHECK(to_string(ClassLabel::zd()) == "ZD");
    CHECK_THROWS_AS(parse_class_label("A(x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class_label("E"), std::invalid_argument);
    CHECK_THROWS_AS(class_index(7, ClassLabel::a(3)), std::out_of_range);
    CHECK_THROWS_AS(class_index(7, ClassLabel::b(4)), std::out_of_range);
}

TEST_CASE("representatives: sizes, orders and the lexicographic b") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const auto reps = representatives(q);
        REQUIRE(reps.size() == q + 4);
        std::uint64_t total = 0;
        for (const auto& c : reps) {
            total += c.size;
            CHECK(c.element_order == oracle::order(as_mat(c.representative), q));
            CHECK(c.size == class_size(q, c.label));
        }
        CHECK(total == std::uint64_t{q} * q * q - q);

        // b is the first element of order q+1 in lexicographic order.
        oracle::Mat first{};
        for (const auto& m : oracle::group(q)) {
            if (oracle::order(m, q) == q + 1) {
                first = m;
                break;
            }
        }
        CHECK(as_mat(find_b(q)) == first);
    }
    // Bound-free: works far above the enumeration limit.
    CHECK(element_order(find_b(1009)) == 1010);
    CHECK(representatives(101).size() == 105);
}

TEST_CASE("orbit partition equals naive conjugacy classes") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const auto G = oracle::group(q);
        const auto part = conjugacy_partition(q);
        CHECK(part.size() == q + 4);
        for (const auto& [label, members] : part) {
            const auto expected = oracle::conjugacy_class(as_mat(representative(q, label)), G, q);
            std::set<oracle::Mat> got;
            for (const auto& g : members) got.insert(as_mat(g));
            CHECK_MESSAGE(got == expected, "q = " << q << ", class " << to_string(label));
        }
    }
}

TEST_CASE("Classifier agrees with the orbit partition") {
    for (std::uint32_t q : oracle::tested_primes()) {
        const ConjugacyPartition part(q);
        const Classifier cls(q);
        for (const auto& g : part.elements()) {
            CHECK(class_of(g, cls) == part.label_of(g));
        }
    }
}

TEST_CASE("z is the unique involution") {
    for (std::uint32_t q : oracle::tested_primes()) {
        int involutions = 0;
        for (const auto& m : oracle::group(q)) involutions += (oracle::order(m, q) == 2);
        CHECK(involutions == 1);
        CHECK(element_order(GroupElem::central_involution(q)) == 2);
    }
}

TEST_CASE("orders of zc and zd are 2q") {
    for (std::uint32_t q : oracle::tested_primes()) {
        CHECK(element_order(representative(q, ClassLabel::zc())) == 2 * q);
        CHECK(element_order(representative(q, ClassLabel::zd())) == 2 * q);
    }
}

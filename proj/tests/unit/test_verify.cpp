#include <doctest.h>
#include <sl2rep/verify.hpp>

#include <stdexcept>

using namespace sl2rep;

TEST_CASE("every check passes at the tested primes") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        const auto rep = verify_all(q);
        CHECK(rep.q == q);
        REQUIRE(rep.checks.size() == check_names().size());
        for (std::size_t i = 0; i < rep.checks.size(); ++i) {
            CHECK(rep.checks[i].name == check_names()[i]);
            CHECK_MESSAGE(rep.checks[i].pass, rep.checks[i].name << ": " << rep.checks[i].details);
        }
        CHECK(rep.overall);
    }
}

TEST_CASE("check order") {
    CHECK(check_names().front() == "group_order");
    CHECK(check_names().size() == 11);
}

TEST_CASE("refusals") {
    CHECK_THROWS_AS(verify_all(9), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(53), std::length_error);
    CHECK_THROWS_AS(verify_all(17, EnumerationBound{13}), std::length_error);
}

TEST_CASE("fixed_dims notes the summary-formula differences") {
    const auto rep = verify_all(11);
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.name == "fixed_dims") found = c.details.find("note:") != std::string::npos;
    }
    CHECK(found);
}

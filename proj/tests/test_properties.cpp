#include "doctest.h"
#include "genstab/properties.hpp"

using namespace genstab;

TEST_CASE("invariant suite with the default seed") {
    auto r = property_suite();
    for (const auto& e : r.entries)
        if (e.status == CheckStatus::Fail) MESSAGE(e.check << ": " << e.computed);
    CHECK(r.pass());
    int asserted = 0;
    for (const auto& e : r.entries)
        if (e.status == CheckStatus::Pass) {
            ++asserted;
            CHECK(e.expected == "1000");
        }
    CHECK(asserted == 7);
}

TEST_CASE("invariant suite is deterministic and seed independent") {
    auto a = property_suite(99, 60), b = property_suite(99, 60);
    CHECK(a.to_keyvalue() == b.to_keyvalue());
    CHECK(a.pass());
    CHECK(property_suite(12345, 60).pass());
}

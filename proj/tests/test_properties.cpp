#include <doctest.h>

#include "property_suite.hpp"

using msep_props::PropertyResult;

TEST_CASE("property: boundary walks partition the darts with even Euler characteristic") {
    PropertyResult r = msep_props::property_walk_partition();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: eulerian rotations are two-sided on small admissible graphs") {
    PropertyResult r = msep_props::property_euler_two_sided();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: genus relations bracket the catalog") {
    PropertyResult r = msep_props::property_genus_bounds();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: disjoint unions add a glue handle") {
    PropertyResult r = msep_props::property_disjoint_union();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("property: odd degrees never certify") {
    PropertyResult r = msep_props::property_odd_degree();
    INFO(r.detail);
    CHECK(r.ok);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/iso.hpp"
#include "test_helpers.hpp"

using namespace ringlab;
using testutil::ring_of;

TEST_CASE("Z6 and Z2 x Z3 are isomorphic, verified on all pairs") {
    auto z6 = make_zn(6);
    auto p = ring_of("Z2 x Z3");
    auto iso = find_isomorphism(z6, p);
    REQUIRE(iso.has_value());
    CHECK(iso->bijective());
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(iso->apply(z6->add(a, b)) == p->add(iso->apply(a), iso->apply(b)));
            CHECK(iso->apply(z6->mul(a, b)) == p->mul(iso->apply(a), iso->apply(b)));
        }
}

TEST_CASE("negative cases") {
    CHECK(!find_isomorphism(make_zn(4), ring_of("Z2 x Z2")).has_value());
    CHECK(!find_isomorphism(make_zn(4), boolean_ring(2)).has_value());
    CHECK(!find_isomorphism(make_zn(4), ring_of("GR(Z2, C2)")).has_value());
    CHECK(!find_isomorphism(make_zn(4), make_zn(5)).has_value());
}

TEST_CASE("positive cases beyond the cyclic ones") {
    CHECK(find_isomorphism(boolean_ring(2), ring_of("Z2 x Z2")).has_value());
    CHECK(find_isomorphism(ring_of("Z3 x Z4"), make_zn(12)).has_value());
    CHECK(find_isomorphism(ring_of("Z3 x Z2"), ring_of("Z2 x Z3")).has_value());
}

TEST_CASE("identity on equal rings") {
    auto z3 = make_zn(3);
    auto iso = find_isomorphism(z3, z3);
    REQUIRE(iso.has_value());
    for (int x = 0; x < 3; ++x) CHECK(iso->apply(x) == x);
}

TEST_CASE("reflexive and symmetric across the corpus") {
    for (const auto& built : testutil::corpus_rings()) {
        CAPTURE(built.ring->provenance());
        CHECK(find_isomorphism(built.ring, built.ring).has_value());
    }
    // Symmetry on a few mixed pairs, including failures.
    const char* pairs[][2] = {
        {"Z6", "Z2 x Z3"}, {"Z4", "Z2 x Z2"}, {"Bool(2)", "Z2 x Z2"}, {"Z8", "GR(Z4, C2)"},
    };
    for (const auto& [l, r] : pairs) {
        auto a = ring_of(l);
        auto b = ring_of(r);
        CAPTURE(l);
        CAPTURE(r);
        CHECK(find_isomorphism(a, b).has_value() == find_isomorphism(b, a).has_value());
    }
}

TEST_CASE("the search cap throws instead of searching") {
    auto big = make_zn(100);
    CHECK_THROWS_AS(find_isomorphism(big, big), CapError);
    CHECK_NOTHROW(find_isomorphism(big, big, 128));
}

TEST_CASE("cleanness predicates agree across the Z6 pair") {
    auto a = ring_of("Z6");
    auto b = ring_of("Z2 x Z3");
    for (RingMode m : {RingMode::NilClean, RingMode::WeaklyNilClean, RingMode::UniquelyNilClean,
                       RingMode::UniquelyWeaklyNilClean, RingMode::UniquelyWeaklyDNilClean,
                       RingMode::UniquelyDNilClean, RingMode::ZeroDivVeryIdemOrNilpotent}) {
        CAPTURE(ring_mode_name(m));
        CHECK(ring_predicate(*a, m).holds == ring_predicate(*b, m).holds);
    }
}

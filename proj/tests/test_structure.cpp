#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringlab/classes.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/structure.hpp"
#include "test_helpers.hpp"

using namespace ringlab;
using testutil::ring_of;

TEST_CASE("peirce split of Z6 at the idempotent 3") {
    auto z6 = make_zn(6);
    auto split = peirce_split(z6, 3);
    CHECK(split.corner->order() == 2);
    CHECK(split.co_corner->order() == 3);
    CHECK(find_isomorphism(split.co_corner, make_zn(3)).has_value());
}

TEST_CASE("peirce split of Z3 x Z3 at (1,0)") {
    auto r = ring_of("Z3 x Z3");
    auto split = peirce_split(r, 3);  // (1,0)
    CHECK(split.corner->order() == 3);
    CHECK(split.co_corner->order() == 3);
}

TEST_CASE("peirce split rejects bad idempotents") {
    auto z4 = make_zn(4);
    CHECK(central_idempotents(*z4).empty());
    CHECK_THROWS_AS(peirce_split(z4, 2), ValidationError);  // 2*2 = 0
    CHECK_THROWS_AS(peirce_split(z4, 1), ValidationError);  // trivial
    // Non-central idempotents are rejected too.
    auto t = ring_of("T2(Z2)");
    const int e11 = testutil::by_label(*t, "[[1,0],[0,0]]");
    CHECK(t->mul(e11, e11) == e11);
    CHECK_THROWS_AS(peirce_split(t, e11), ValidationError);
}

TEST_CASE("classification of the named examples") {
    auto z6 = classify(make_zn(6));
    CHECK(z6.has(StructureTag::Z3xBoolean));
    CHECK(!z6.has(StructureTag::DRing));
    CHECK(!z6.has(StructureTag::Boolean));

    auto z3z3 = classify(ring_of("Z3 x Z3"));
    CHECK(z3z3.has(StructureTag::Z3xZ3));
    CHECK(!z3z3.has(StructureTag::Z3xBoolean));

    auto z7 = classify(make_zn(7));
    CHECK(z7.has(StructureTag::Field));
    CHECK(z7.field_order == 7);
    CHECK(z7.has(StructureTag::DRing));

    auto z3 = classify(make_zn(3));
    CHECK(z3.has(StructureTag::Z3));
    CHECK(z3.has(StructureTag::Field));

    auto b3 = classify(boolean_ring(3));
    CHECK(b3.has(StructureTag::Boolean));
    CHECK(!b3.has(StructureTag::Field));

    auto big = classify(ring_of("Z3 x Z3 x Bool(1)"));
    CHECK(big.has(StructureTag::Z3xZ3xBoolean));
    CHECK(!big.has(StructureTag::Z3xBoolean));

    auto z10 = classify(make_zn(10));
    CHECK(z10.tags == std::set<StructureTag>{StructureTag::Other});

    CHECK_THROWS_AS(classify(make_zn(1)), ValidationError);
}

TEST_CASE("classification modulo the radical") {
    auto z4 = classify_mod_j(make_zn(4));
    CHECK(z4.has(StructureTag::Boolean));
    CHECK(z4.has(StructureTag::Field));
    CHECK(z4.field_order == 2);

    auto z12 = classify_mod_j(make_zn(12));
    CHECK(z12.has(StructureTag::Z3xBoolean));

    auto t2 = classify_mod_j(ring_of("T2(Z2)"));
    CHECK(t2.has(StructureTag::Boolean));
}

TEST_CASE("positive product verdicts re-verify") {
    for (const char* expr : {"Z6", "Z3 x Bool(2)"}) {
        auto r = ring_of(expr);
        auto sc = classify(r);
        REQUIRE(sc.has(StructureTag::Z3xBoolean));
        const int f = sc.split_witness.at(StructureTag::Z3xBoolean);
        auto split = peirce_split(r, f);
        CHECK(find_isomorphism(split.corner, make_zn(3)).has_value());
        for (int x = 0; x < split.co_corner->order(); ++x)
            CHECK(split.co_corner->mul(x, x) == x);
    }
}

TEST_CASE("classification transports along an isomorphism") {
    auto a = classify(make_zn(6));
    auto b = classify(ring_of("Z2 x Z3"));
    CHECK(a.tags == b.tags);
}

TEST_CASE("Boolean corpus rings are uniquely nil-clean") {
    for (const auto& built : testutil::corpus_rings()) {
        auto sc = classify(built.ring);
        if (!sc.has(StructureTag::Boolean)) continue;
        CAPTURE(built.ring->provenance());
        CHECK(ring_predicate(*built.ring, RingMode::UniquelyNilClean).holds);
    }
}

TEST_CASE("products with Boolean factors preserve the all-very-idempotent property") {
    auto all_very = [](const FiniteRing& r) {
        return compute_class(r, ClassRole::VeryIdempotents).members.size() ==
               static_cast<std::size_t>(r.order());
    };
    for (const char* left : {"Z3", "Bool(1)", "Z3 x Bool(1)"})
        for (const char* right : {"Bool(1)", "Bool(2)"}) {
            auto a = ring_of(left);
            auto b = ring_of(right);
            auto p = direct_product(a, b);
            CAPTURE(left);
            CAPTURE(right);
            CHECK(all_very(*p) == all_very(*a));  // Boolean factors never break it
        }
    // ... while a non-Boolean factor does: Z3 x Z3 fails although both
    // factors satisfy it.
    CHECK(!all_very(*ring_of("Z3 x Z3")));
    CHECK(all_very(*make_zn(3)));
}

TEST_CASE("split corners recompose to the parent ring") {
    for (const char* expr : {"Z6", "Z12", "Z3 x Bool(2)", "Bool(3)"}) {
        auto r = ring_of(expr);
        for (int f : central_idempotents(*r)) {
            auto split = peirce_split(r, f);
            CHECK(split.corner->order() * split.co_corner->order() == r->order());
            // peirce_split verified the pairing; spot-check the projections.
            for (int x = 0; x < r->order(); ++x) {
                CHECK(split.corner_of[x] >= 0);
                CHECK(split.corner_of[x] < split.corner->order());
            }
        }
    }
}

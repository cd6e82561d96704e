#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// The parallel kernels must reproduce the serial reference exactly,
// including which witness gets reported.

#include "ringlab/axioms.hpp"
#include "ringlab/classes.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/exec.hpp"
#include "test_helpers.hpp"

using namespace ringlab;

TEST_CASE("axiom validation agrees between modes") {
    for (int threads : {1, 2, 8}) {
        set_threads(threads);
        for (const auto& built : testutil::corpus_rings()) {
            CAPTURE(threads);
            CAPTURE(built.ring->provenance());
            auto s = validate_axioms(*built.ring, Exec::Serial);
            auto p = validate_axioms(*built.ring, Exec::Parallel);
            CHECK(s.ok);
            CHECK(p.ok);
        }
    }
}

TEST_CASE("axiom violations report the same witness in both modes") {
    set_threads(4);
    auto z4 = make_zn(4);
    std::vector<int32_t> add(z4->add_table().begin(), z4->add_table().end());
    std::vector<int32_t> mul(z4->mul_table().begin(), z4->mul_table().end());
    mul[2 * 4 + 3] = 1;
    auto s = validate_axioms(4, add, mul, 0, 1, Exec::Serial);
    auto p = validate_axioms(4, add, mul, 0, 1, Exec::Parallel);
    REQUIRE(!s.ok);
    REQUIRE(!p.ok);
    CHECK(s.violation->axiom == p.violation->axiom);
    CHECK(s.violation->witness == p.violation->witness);

    // A larger corrupted ring exercises the parallel scan properly.
    auto z64 = make_zn(64);
    std::vector<int32_t> add2(z64->add_table().begin(), z64->add_table().end());
    std::vector<int32_t> mul2(z64->mul_table().begin(), z64->mul_table().end());
    mul2[40 * 64 + 19] = 7;
    auto s2 = validate_axioms(64, add2, mul2, 0, 1, Exec::Serial);
    auto p2 = validate_axioms(64, add2, mul2, 0, 1, Exec::Parallel);
    REQUIRE(!s2.ok);
    REQUIRE(!p2.ok);
    CHECK(s2.violation->axiom == p2.violation->axiom);
    CHECK(s2.violation->witness == p2.violation->witness);
}

TEST_CASE("class kernels agree between modes") {
    set_threads(4);
    for (const auto& built : testutil::corpus_rings()) {
        const auto& r = *built.ring;
        CAPTURE(r.provenance());
        for (ClassRole role : {ClassRole::Idempotents, ClassRole::NegIdempotents,
                               ClassRole::VeryIdempotents, ClassRole::Nilpotents,
                               ClassRole::Units, ClassRole::ZeroDivisors, ClassRole::Center}) {
            auto s = compute_class(r, role, Exec::Serial);
            auto p = compute_class(r, role, Exec::Parallel);
            CAPTURE(class_role_name(role));
            CHECK(s.members == p.members);
            CHECK(s.aux == p.aux);
        }
        CHECK(jacobson_radical(r, Exec::Serial).members ==
              jacobson_radical(r, Exec::Parallel).members);
        CHECK(prime_radical(r, Exec::Serial).members ==
              prime_radical(r, Exec::Parallel).members);
    }
}

TEST_CASE("ring predicates agree between modes, including counterexamples") {
    set_threads(4);
    for (const auto& built : testutil::corpus_rings()) {
        const auto& r = *built.ring;
        auto ctx = ClassContext::build(r);
        CAPTURE(r.provenance());
        for (RingMode m : {RingMode::NilClean, RingMode::WeaklyNilClean,
                           RingMode::UniquelyNilClean, RingMode::UniquelyWeaklyNilClean,
                           RingMode::UniquelyWeaklyDNilClean, RingMode::UniquelyDNilClean,
                           RingMode::ZeroDivVeryIdemOrNilpotent}) {
            auto s = ring_predicate(ctx, m, Exec::Serial);
            auto p = ring_predicate(ctx, m, Exec::Parallel);
            CAPTURE(ring_mode_name(m));
            CHECK(s.holds == p.holds);
            CHECK(s.counterexample == p.counterexample);
        }
    }
}

TEST_CASE("profiles agree between modes on a medium-sized ring") {
    set_threads(4);
    auto r = make_zn(256);
    auto s = basic_profile(*r, Exec::Serial);
    auto p = basic_profile(*r, Exec::Parallel);
    CHECK(s.abelian == p.abelian);
    CHECK(s.boolean_ring == p.boolean_ring);
    CHECK(s.field == p.field);
    CHECK(s.local == p.local);
    CHECK(s.d_ring == p.d_ring);
    CHECK(s.two_nilpotent == p.two_nilpotent);
    CHECK(s.periodic_witnesses == p.periodic_witnesses);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringlab/battery.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/structure.hpp"
#include "test_helpers.hpp"

using namespace ringlab;
using testutil::built_of;

namespace {

StatementInput input_of(const std::string& expr) {
    auto built = built_of(expr);
    return StatementInput{built, built.ring->provenance()};
}

}  // namespace

TEST_CASE("catalogue shape") {
    CHECK(all_result_ids().size() == 28);
    CHECK(known_result_id("thm-2.2"));
    CHECK(!known_result_id("thm-9.9"));
    CHECK(is_group_ring_result("cor-4.8"));
    CHECK(!is_group_ring_result("thm-2.2"));
    CHECK(result_kind("lem-2.6") == ResultKind::Implication);
    CHECK(result_kind("thm-3.4") == ResultKind::Iff);
    CHECK_THROWS(check_result("thm-9.9", input_of("Z4")));
}

TEST_CASE("pinned verdicts") {
    auto v = check_result("thm-2.2", input_of("Z4"));
    CHECK(v.applicable);
    CHECK(v.lhs);
    CHECK(v.rhs);
    CHECK(v.consistent);

    v = check_result("thm-3.4", input_of("Z5"));
    CHECK(v.lhs);
    CHECK(v.rhs);  // D-ring branch
    CHECK(v.consistent);

    v = check_result("cor-4.8", input_of("GR(Z3, C3)"));
    CHECK(v.applicable);
    CHECK(!v.lhs);
    CHECK(!v.rhs);
    CHECK(v.consistent);

    v = check_result("lem-3.1", input_of("T2(Z2)"));
    CHECK(!v.lhs);  // vacuous: not uniquely weakly D-nil-clean
    CHECK(v.consistent);

    v = check_result("thm-2.2", input_of("Z3 x Z3"));
    CHECK(!v.lhs);
    CHECK(!v.rhs);
    CHECK(v.consistent);

    v = check_result("thm-3.4", input_of("Z3 x Z3"));
    CHECK(v.lhs);
    CHECK(v.rhs);
    CHECK(v.consistent);

    v = check_result("rem-t2z2", input_of("T2(Z2)"));
    CHECK(v.applicable);
    CHECK(v.lhs);
    CHECK(v.rhs);

    v = check_result("rem-z3g", input_of("GR(Z3, C3)"));
    CHECK(v.applicable);
    CHECK(v.lhs);
    CHECK(v.rhs);
}

TEST_CASE("skip reasons") {
    CHECK(check_result("cor-2.8", input_of("Z6")).skip_reason ==
          "input is not a group-ring expression");
    CHECK(check_result("rem-local", input_of("Z6")).skip_reason == "ring is not local");
    CHECK(check_result("cor-4.9", input_of("Z4")).skip_reason == "1+1 is nilpotent");
    CHECK(check_result("rem-t2z2", input_of("Z8")).skip_reason ==
          "ring is not isomorphic to T2(Z2)");
    CHECK(check_result("rem-z3g", input_of("GR(Z2, C2)")).skip_reason == "base ring is not Z3");
    CHECK(check_result("thm-2.2", input_of("Z1")).skip_reason == "trivial ring");
    // Applicable group-ring cases are not skipped.
    CHECK(check_result("cor-2.8", input_of("GR(Z4, C2)")).applicable);
    CHECK(check_result("thm-2.7", input_of("GR(Z2, C2 x C2)")).applicable);
}

TEST_CASE("cor-4.9 records the one-way check") {
    auto v = check_result("cor-4.9", input_of("Z6"));
    CHECK(v.applicable);
    CHECK(v.kind == ResultKind::Implication);
    CHECK(!v.lhs);  // not uniquely D-nil-clean
    CHECK(v.rhs);   // uniquely weakly D-nil-clean
    CHECK(v.consistent);
    CHECK(v.witnesses.contains("checked_direction"));
}

TEST_CASE("the default battery is clean") {
    BatteryReport report = run_battery(default_corpus());
    CHECK(report.rings_built >= 24);
    CHECK(report.inconsistent == 0);
    CHECK(report.line_errors.empty());
    CHECK(report.verdicts.size() == default_corpus().size() * all_result_ids().size());

    int group_ring_cells = 0;
    for (const auto& v : report.verdicts)
        if (v.applicable && is_group_ring_result(v.result_id)) ++group_ring_cells;
    CHECK(group_ring_cells >= 4);  // the four GR corpus entries feed them
}

TEST_CASE("the battery stays clean on an extended corpus") {
    // Rings well outside the default corpus: larger moduli, triple products,
    // 3x3 triangular and full matrix rings, and group rings over bigger
    // 2-groups, mixed bases and S3.
    const std::vector<std::string> extended = {
        "Z13",         "Z14",          "Z15",         "Z18",
        "Z20",         "Z24",          "Z27",         "Z32",
        "Bool(5)",     "Z5 x Z5",      "Z2 x Z6",     "Z6 x Z6",
        "Z2 x Z2 x Z3", "Z3 x Z3 x Z3", "Z9 x Z3",     "Z4 x Z8",
        "T3(Z2)",      "T2(Z4)",       "T2(Z5)",      "M2(Z3)",
        "Z3 x T2(Z2)", "GR(Z2, C4)",   "GR(Z2, C8)",  "GR(Z4, C4)",
        "GR(Z2, S3)",  "GR(Z3, S3)",   "GR(Z6, C2)",  "GR(Z9, C3)",
        "GR(Z8, C2)",  "GR(Z12, C2)",  "GR(Z4, C2 x C2)",
    };
    BatteryOptions opts;
    opts.jobs = 2;
    BatteryReport report = run_battery(extended, opts);
    CHECK(report.rings_built == static_cast<int>(extended.size()));
    CHECK(report.line_errors.empty());
    CHECK(report.inconsistent == 0);
}

TEST_CASE("battery filters results and tolerates bad lines") {
    BatteryOptions opts;
    opts.results = {"thm-2.2", "thm-3.4"};
    BatteryReport report = run_battery({"Z3 x Z3", "T2(Z2", "Z6"}, opts);
    CHECK(report.rings_built == 2);
    REQUIRE(report.line_errors.size() == 1);
    CHECK(report.line_errors[0].find("T2(Z2") != std::string::npos);
    REQUIRE(report.verdicts.size() == 4);
    CHECK(report.verdicts[0].result_id == "thm-2.2");
    CHECK(report.verdicts[0].ring == "Z3 x Z3");
    CHECK(!report.verdicts[0].lhs);
    CHECK(report.verdicts[1].result_id == "thm-3.4");
    CHECK(report.verdicts[1].lhs);
    CHECK(report.verdicts[2].ring == "Z6");

    BatteryOptions bad;
    bad.results = {"thm-9.9"};
    CHECK_THROWS(run_battery({"Z4"}, bad));
}

TEST_CASE("reports are byte-stable across job counts") {
    BatteryOptions one;
    one.jobs = 1;
    BatteryOptions eight;
    eight.jobs = 8;
    auto corpus = default_corpus();
    const std::string a = report_to_jsonl(run_battery(corpus, one));
    const std::string b = report_to_jsonl(run_battery(corpus, eight));
    const std::string c = report_to_jsonl(run_battery(corpus, one));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(report_to_text(run_battery(corpus, one)) == report_to_text(run_battery(corpus, eight)));
}

TEST_CASE("corpus files support comments and blank lines") {
    auto lines = parse_corpus("# header\n\nZ4  # inline\n  Z6\n\n# done\n");
    CHECK(lines == std::vector<std::string>{"Z4", "Z6"});
}

TEST_CASE("statement sides stay on their own code paths") {
    // For statements whose right side is purely structural, the left side
    // never classifies and the right side never enumerates decompositions.
    const std::vector<std::string> structural = {
        "lem-2.1", "thm-2.2", "cor-2.3", "rem-local", "lem-3.3", "thm-3.4",
        "lem-3.6", "thm-3.7", "cor-3.8", "prop-4.2",  "thm-4.4", "lem-4.5",
    };
    for (const char* expr : {"Z6", "Z4", "Z3 x Z3", "T2(Z2)"}) {
        auto in = input_of(expr);
        for (const auto& id : structural) {
            CAPTURE(expr);
            CAPTURE(id);
            const auto classify_before = classify_probe_count();
            (void)eval_result_lhs(id, in);
            CHECK(classify_probe_count() == classify_before);
            const auto decomp_before = decomposition_probe_count();
            (void)eval_result_rhs(id, in);
            CHECK(decomposition_probe_count() == decomp_before);
        }
        // Left sides never classify, for any statement.
        for (const auto& id : all_result_ids()) {
            if (is_group_ring_result(id)) continue;
            const auto before = classify_probe_count();
            (void)eval_result_lhs(id, in);
            CHECK(classify_probe_count() == before);
        }
    }
}

TEST_CASE("the two coverage clauses agree on the whole corpus") {
    // R = N u Id u -Id against R = J u Id u -Id: J is nil here, so the
    // second implies the first; the battery folds both into one record and
    // this test keeps the middle clause honest on every corpus ring.
    for (const auto& built : testutil::corpus_rings()) {
        const auto& r = *built.ring;
        auto cls = ClassContext::build(r);
        auto jac = jacobson_radical(r);
        auto covered = [&](const std::vector<int>& nil_like) {
            std::vector<char> hit(r.order(), 0);
            for (int x : nil_like) hit[x] = 1;
            for (int e : cls.idempotents.members) {
                hit[e] = 1;
                hit[r.neg(e)] = 1;
            }
            for (int x = 0; x < r.order(); ++x)
                if (!hit[x]) return false;
            return true;
        };
        CAPTURE(r.provenance());
        CHECK(covered(cls.nilpotents.members) == covered(jac.members));
    }
}

TEST_CASE("check_result matches the isolated side evaluators") {
    for (const char* expr : {"Z6", "Z12", "GR(Z4, C2)"}) {
        auto in = input_of(expr);
        for (const auto& id : all_result_ids()) {
            if (result_inapplicable_reason(id, in)) continue;
            auto v = check_result(id, in);
            CAPTURE(expr);
            CAPTURE(id);
            CHECK(v.lhs == eval_result_lhs(id, in));
            CHECK(v.rhs == eval_result_rhs(id, in));
        }
    }
}

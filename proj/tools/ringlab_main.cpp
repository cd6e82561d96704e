// ringlab CLI: construct small finite rings from expressions, inspect their
// element classes and radicals, decide nil-clean style predicates, and run
// the statement-verification battery over a ring corpus.
//
// Exit status: 0 success / all consistent, 1 at least one inconsistent
// verdict, 2 usage or build error.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringlab/axioms.hpp"
#include "ringlab/battery.hpp"
#include "ringlab/classes.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/table_io.hpp"

using json = nlohmann::ordered_json;
using namespace ringlab;

namespace {

json set_json(const FiniteRing& r, const ElementSet& s) {
    json members = json::array();
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        json m;
        m["index"] = s.members[i];
        m["label"] = r.label(s.members[i]);
        if (!s.aux.empty()) {
            if (s.role == ClassRole::Nilpotents) m["nil_index"] = s.aux[i];
            if (s.role == ClassRole::Units) m["inverse"] = s.aux[i];
        }
        members.push_back(std::move(m));
    }
    json j;
    j["role"] = class_role_name(s.role);
    j["size"] = s.members.size();
    j["members"] = std::move(members);
    return j;
}

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::Plus: return "plus";
        case Sign::Minus: return "minus";
        case Sign::Both: return "both";
    }
    return "?";
}

json decomposition_json(const FiniteRing& r, const Decomposition& d) {
    json j;
    j["e"] = d.very_idempotent;
    j["e_label"] = r.label(d.very_idempotent);
    j["e_squared"] = r.mul(d.very_idempotent, d.very_idempotent);
    j["sign"] = sign_name(d.sign);
    j["w"] = d.nilpotent;
    j["w_label"] = r.label(d.nilpotent);
    j["nil_index"] = d.nil_index;
    return j;
}

int run_analyze(const std::string& expr, bool as_json, int cap) {
    BuiltRing built = build_from_text(expr, EvalOptions{cap, Exec::Serial});
    const RingPtr& R = built.ring;
    if (R->trivial()) throw ValidationError("analyze rejects the trivial ring");

    ClassContext cls = ClassContext::build(*R);
    BasicProfile prof = basic_profile(*R);
    ElementSet jac = jacobson_radical(*R);
    ElementSet prad = prime_radical(*R);
    StructureClass sc = classify(R);
    StructureClass scj = classify_mod_j(R);
    UnitFormReport uf = unit_form_check(cls);

    int periodic_max = 0;
    for (auto& [m, n] : prof.periodic_witnesses) periodic_max = std::max(periodic_max, m);

    json out;
    out["ring"] = R->provenance();
    out["order"] = R->order();
    out["profile"] = {{"abelian", prof.abelian},
                      {"boolean", prof.boolean_ring},
                      {"field", prof.field},
                      {"local", prof.local},
                      {"d_ring", prof.d_ring},
                      {"two_nilpotent", prof.two_nilpotent}};
    out["periodic_exponent_max"] = periodic_max;
    out["nilpotents_form_ideal"] = !check_ideal(*R, cls.nilpotents.members).has_value();
    json classes;
    for (const ElementSet* s : {&cls.idempotents, &cls.neg_idempotents, &cls.very_idempotents,
                                &cls.nilpotents, &cls.units, &cls.zero_divisors, &cls.center,
                                &jac, &prad})
        classes[class_role_name(s->role)] = set_json(*R, *s);
    out["classes"] = std::move(classes);
    out["structure"] = sc.tag_names();
    if (sc.field_order) out["field_order"] = sc.field_order;
    out["structure_mod_j"] = scj.tag_names();

    json preds;
    for (RingMode m : {RingMode::NilClean, RingMode::WeaklyNilClean, RingMode::UniquelyNilClean,
                       RingMode::UniquelyWeaklyNilClean, RingMode::UniquelyWeaklyDNilClean,
                       RingMode::UniquelyDNilClean, RingMode::ZeroDivVeryIdemOrNilpotent}) {
        RingVerdict v = ring_predicate(cls, m);
        json p;
        p["holds"] = v.holds;
        if (!v.holds) {
            p["counterexample"] = v.counterexample;
            p["counterexample_label"] = R->label(v.counterexample);
        }
        preds[ring_mode_name(m)] = std::move(p);
    }
    out["predicates"] = std::move(preds);
    json ufj;
    ufj["holds"] = uf.holds;
    if (uf.bad_unit >= 0) ufj["unit_not_of_nilpotent_form"] = uf.bad_unit;
    if (uf.bad_form_element >= 0) ufj["nilpotent_form_non_unit"] = uf.bad_form_element;
    out["unit_form"] = std::move(ufj);

    if (as_json) {
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "ring " << R->provenance() << "  order " << R->order() << "\n";
    std::cout << std::boolalpha;
    std::cout << "profile: abelian=" << prof.abelian << " boolean=" << prof.boolean_ring
              << " field=" << prof.field << " local=" << prof.local << " d_ring=" << prof.d_ring
              << " two_nilpotent=" << prof.two_nilpotent << "\n";
    std::cout << "classes:";
    for (const ElementSet* s : {&cls.idempotents, &cls.neg_idempotents, &cls.very_idempotents,
                                &cls.nilpotents, &cls.units, &cls.zero_divisors, &cls.center,
                                &jac, &prad})
        std::cout << " " << class_role_name(s->role) << "=" << s->members.size();
    std::cout << "\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& t : v) s += (s.empty() ? "" : ", ") + t;
        return s;
    };
    std::cout << "structure: " << join(sc.tag_names()) << "\n";
    std::cout << "structure_mod_j: " << join(scj.tag_names()) << "\n";
    std::cout << "predicates:\n";
    for (auto& [name, p] : out["predicates"].items()) {
        std::cout << "  " << name << "=" << (p["holds"].get<bool>() ? "true" : "false");
        if (!p["holds"].get<bool>())
            std::cout << "  (counterexample " << p["counterexample"] << " = "
                      << p["counterexample_label"].get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << "unit_form: " << (uf.holds ? "true" : "false") << "\n";
    return 0;
}

int run_classes(const std::string& expr, const std::string& role_name, bool as_json, int cap) {
    auto role = class_role_from_name(role_name);
    if (!role) throw Error("unknown class role: " + role_name);
    BuiltRing built = build_from_text(expr, EvalOptions{cap, Exec::Serial});
    ElementSet s = compute_class(*built.ring, *role);
    if (as_json) {
        json out;
        out["ring"] = built.ring->provenance();
        out["set"] = set_json(*built.ring, s);
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << class_role_name(s.role) << " of " << built.ring->provenance() << " ("
              << s.members.size() << " elements):\n";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        std::cout << "  " << s.members[i] << "  " << built.ring->label(s.members[i]);
        if (!s.aux.empty()) {
            if (s.role == ClassRole::Nilpotents) std::cout << "  nil_index=" << s.aux[i];
            if (s.role == ClassRole::Units) std::cout << "  inverse=" << s.aux[i];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_decomp(const std::string& expr, int element, const std::string& flavor_name,
               bool as_json, int cap) {
    CleanFlavor flavor;
    if (flavor_name == "nil_clean")
        flavor = CleanFlavor::NilClean;
    else if (flavor_name == "weakly_nil_clean")
        flavor = CleanFlavor::WeaklyNilClean;
    else
        throw Error("unknown flavor: " + flavor_name);

    BuiltRing built = build_from_text(expr, EvalOptions{cap, Exec::Serial});
    if (element < 0 || element >= built.ring->order())
        throw Error("element index out of range");
    auto decs = decompositions(*built.ring, element, flavor);

    if (as_json) {
        json out;
        out["ring"] = built.ring->provenance();
        out["element"] = element;
        out["element_label"] = built.ring->label(element);
        out["flavor"] = flavor_name;
        json arr = json::array();
        for (const auto& d : decs) arr.push_back(decomposition_json(*built.ring, d));
        out["decompositions"] = std::move(arr);
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << flavor_name << " decompositions of " << built.ring->label(element) << " in "
              << built.ring->provenance() << ": " << decs.size() << "\n";
    for (const auto& d : decs)
        std::cout << "  e=" << d.very_idempotent << " (" << built.ring->label(d.very_idempotent)
                  << ", sign " << sign_name(d.sign) << ", e^2=" << built.ring->mul(d.very_idempotent, d.very_idempotent)
                  << ")  w=" << d.nilpotent << " (" << built.ring->label(d.nilpotent)
                  << ", nil_index " << d.nil_index << ")\n";
    return 0;
}

int run_verify(const std::string& id, const std::string& expr, const std::string& group,
               bool as_json, int cap) {
    if (!known_result_id(id)) throw Error("unknown result id: " + id);
    std::string text = expr;
    if (!group.empty()) text = "GR(" + expr + ", " + group + ")";
    BuiltRing built = build_from_text(text, EvalOptions{cap, Exec::Serial});
    TheoremVerdict v = check_result(id, StatementInput{built, built.ring->provenance()});
    if (as_json)
        std::cout << verdict_to_json(v).dump() << "\n";
    else
        std::cout << verdict_to_text(v) << "\n";
    return v.applicable && !v.consistent ? 1 : 0;
}

int run_battery_cmd(const std::string& corpus_path, const std::string& results_csv, int jobs,
                    const std::string& out_path, bool as_json, int cap) {
    std::vector<std::string> corpus;
    if (corpus_path.empty())
        corpus = default_corpus();
    else
        corpus = parse_corpus(read_file(corpus_path));

    BatteryOptions opts;
    opts.jobs = jobs;
    opts.cap = cap;
    if (!results_csv.empty()) {
        std::string cur;
        for (char ch : results_csv + ",") {
            if (ch == ',') {
                if (!cur.empty()) opts.results.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    BatteryReport report = run_battery(corpus, opts);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    for (const auto& err : report.line_errors) std::cerr << "error: " << err << "\n";
    std::cerr << "battery: " << report.rings_built << " rings, " << report.consistent
              << " consistent, " << report.inconsistent << " inconsistent, " << report.skipped
              << " skipped (" << elapsed.count() << " ms)\n";

    const std::string payload = as_json ? report_to_jsonl(report) : report_to_text(report);
    if (out_path.empty())
        std::cout << payload;
    else
        write_file(out_path, payload);

    if (report.inconsistent > 0) return 1;
    if (!report.line_errors.empty()) return 2;
    return 0;
}

int run_iso(const std::string& expr_a, const std::string& expr_b, bool as_json, int cap) {
    BuiltRing a = build_from_text(expr_a, EvalOptions{cap, Exec::Serial});
    BuiltRing b = build_from_text(expr_b, EvalOptions{cap, Exec::Serial});
    auto iso = find_isomorphism(a.ring, b.ring);
    if (as_json) {
        json out;
        out["left"] = a.ring->provenance();
        out["right"] = b.ring->provenance();
        out["isomorphic"] = iso.has_value();
        if (iso) out["image"] = iso->image();
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (!iso) {
        std::cout << a.ring->provenance() << " and " << b.ring->provenance()
                  << " are not isomorphic\n";
        return 0;
    }
    std::cout << a.ring->provenance() << " ~ " << b.ring->provenance() << " via\n";
    for (int x = 0; x < a.ring->order(); ++x)
        std::cout << "  " << x << " (" << a.ring->label(x) << ") -> " << iso->apply(x) << " ("
                  << b.ring->label(iso->apply(x)) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring construction, classification and statement verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool as_json = false;
    int cap = kDefaultCap;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--cap", cap, "size cap for constructed rings")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "profile, classes, structure and predicates");
    std::string analyze_expr;
    analyze->add_option("expr", analyze_expr, "construction expression")->required();

    auto* classes = app.add_subcommand("classes", "one element class of a ring");
    std::string classes_expr, classes_set;
    classes->add_option("expr", classes_expr)->required();
    classes->add_option("--set", classes_set, "class role")->required();

    auto* decomp = app.add_subcommand("decomp", "decompositions of one element");
    std::string decomp_expr, decomp_flavor = "weakly_nil_clean";
    int decomp_element = 0;
    decomp->add_option("expr", decomp_expr)->required();
    decomp->add_option("element", decomp_element, "element index")->required();
    decomp->add_option("--flavor", decomp_flavor, "nil_clean | weakly_nil_clean")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check one catalogued statement on one ring");
    std::string verify_id, verify_expr, verify_group;
    verify->add_option("result-id", verify_id)->required();
    verify->add_option("expr", verify_expr)->required();
    verify->add_option("group", verify_group, "group expression (builds GR(expr, group))");

    auto* battery = app.add_subcommand("battery", "run the statement battery over a corpus");
    std::string battery_corpus, battery_results, battery_out;
    int battery_jobs = 1;
    battery->add_option("--corpus", battery_corpus, "corpus file (default: built-in corpus)");
    battery->add_option("--results", battery_results, "comma-separated result ids");
    battery->add_option("--jobs", battery_jobs, "worker threads")->capture_default_str();
    battery->add_option("--out", battery_out, "write the report to a file");

    auto* iso = app.add_subcommand("iso", "search for a ring isomorphism");
    std::string iso_a, iso_b;
    iso->add_option("left", iso_a)->required();
    iso->add_option("right", iso_b)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(analyze_expr, as_json, cap);
        if (*classes) return run_classes(classes_expr, classes_set, as_json, cap);
        if (*decomp) return run_decomp(decomp_expr, decomp_element, decomp_flavor, as_json, cap);
        if (*verify) return run_verify(verify_id, verify_expr, verify_group, as_json, cap);
        if (*battery)
            return run_battery_cmd(battery_corpus, battery_results, battery_jobs, battery_out,
                                   as_json, cap);
        if (*iso) return run_iso(iso_a, iso_b, as_json, cap);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

enum class ResultKind { Iff, Implication };

/// Per-statement verification record. lhs is always the direct brute-force
/// predicate from the statement's left side; rhs re-derives the right side
/// independently (structural conditions where the statement gives them).
struct TheoremVerdict {
    std::string result_id;
    std::string ring;  // canonical construction expression
    ResultKind kind = ResultKind::Iff;
    bool applicable = false;
    std::string skip_reason;  // set when not applicable
    bool lhs = false;
    bool rhs = false;
    bool consistent = false;  // iff: lhs == rhs; implication: !lhs || rhs
    nlohmann::ordered_json witnesses;
};

/// Catalogued statement ids, in canonical report order.
const std::vector<std::string>& all_result_ids();
bool known_result_id(const std::string& id);

/// Statements about a group ring that need the (base ring, group) pair.
bool is_group_ring_result(const std::string& id);

ResultKind result_kind(const std::string& id);

struct StatementInput {
    BuiltRing built;
    std::string expr;
};

/// Evaluates one statement on one input. Inapplicable inputs yield a skipped
/// verdict; unknown ids throw.
TheoremVerdict check_result(const std::string& id, const StatementInput& in);

/// The two sides in isolation (used by tests to pin code-path independence).
bool eval_result_lhs(const std::string& id, const StatementInput& in);
bool eval_result_rhs(const std::string& id, const StatementInput& in);
std::optional<std::string> result_inapplicable_reason(const std::string& id,
                                                      const StatementInput& in);

/// Built-in default corpus of construction expressions.
std::vector<std::string> default_corpus();

/// Parses a corpus file: one expression per line, '#' comments, blank lines
/// ignored.
std::vector<std::string> parse_corpus(const std::string& text);

struct BatteryOptions {
    std::vector<std::string> results;  // empty = all
    int jobs = 1;
    int cap = kDefaultCap;
};

struct BatteryReport {
    std::vector<TheoremVerdict> verdicts;  // corpus order x result-id order
    std::vector<std::string> line_errors;  // per bad corpus line, in order
    int consistent = 0;
    int inconsistent = 0;
    int skipped = 0;
    int rings_built = 0;
};

/// Evaluates the (result, ring) grid. Deterministic: output order and
/// contents are independent of the job count.
BatteryReport run_battery(const std::vector<std::string>& corpus_lines,
                          const BatteryOptions& opts = {});

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& v);
std::string verdict_to_text(const TheoremVerdict& v);
std::string report_to_jsonl(const BatteryReport& r);
std::string report_to_text(const BatteryReport& r);

}  // namespace ringlab

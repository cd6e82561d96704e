#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ringlab/construct.hpp"
#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Construction expression grammar (whitespace insensitive, "x" binds left):
//   expr  := term { "x" term }
//   term  := "Z" int | "Bool(" int ")" | "T" int "(" expr ")"
//          | "M" int "(" expr ")" | "GR(" expr "," group ")"
//          | "Table(" path ")" | "(" expr ")"
//   group := gterm { "x" gterm }
//   gterm := "C" int | "S3" | "(" group ")"

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
    enum class Kind { Cyclic, Product, S3 };
    Kind kind;
    int n = 0;  // Cyclic order
    GroupExprPtr left, right;
};

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

struct RingExpr {
    enum class Kind { Zn, Bool, Product, Matrix, Triangular, GroupRing, Table };
    Kind kind;
    int n = 0;  // Zn modulus / Bool atoms / matrix dimension
    RingExprPtr left, right;
    GroupExprPtr group;
    std::string path;  // Table
};

/// Throws ParseError (with position) on malformed input.
RingExprPtr parse_expr(std::string_view text);
GroupExprPtr parse_group_expr(std::string_view text);

/// Canonical rendering: single spaces around "x", "GR(R, G)" with one space
/// after the comma. parse(render(e)) reproduces e.
std::string render(const RingExpr& e);
std::string render(const GroupExpr& e);

bool equal(const RingExpr& a, const RingExpr& b);
bool equal(const GroupExpr& a, const GroupExpr& b);

struct EvalOptions {
    int cap = kDefaultCap;
    Exec exec = Exec::Serial;
};

/// An evaluated expression. When the top-level node is a group ring the
/// factors are kept so group-ring statements can reuse them.
struct BuiltRing {
    RingPtr ring;
    RingPtr base;                          // group-ring base, else null
    GroupPtr group;                        // group-ring group, else null
    std::shared_ptr<RingMap> augmentation; // coefficient-sum map, else null
};

/// Evaluates bottom-up; the result ring's provenance is the canonical
/// rendering of the expression. CapError mentions the offending node.
BuiltRing eval_expr(const RingExpr& e, const EvalOptions& opts = {});
GroupPtr eval_group(const GroupExpr& g);

BuiltRing build_from_text(std::string_view text, const EvalOptions& opts = {});

}  // namespace ringlab

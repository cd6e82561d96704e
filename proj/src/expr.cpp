#include "ringlab/expr.hpp"

#include <cctype>

#include "ringlab/table_io.hpp"

namespace ringlab {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    // A word is letters followed by optional digits ("Bool", "GR", "Z3",
    // "T2", "C12", "S3"). The product operator "x" is lexed by the callers
    // via peek()/eat() since no word starts with it.
    std::pair<std::string, std::string> word() {
        skip_ws();
        std::string letters, digits;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])) &&
               !(letters.size() >= 1 && text[pos] == 'x'))  // "x" starts the next token
            letters += text[pos++];
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (letters.empty())
            throw ParseError("expected a construction name", pos);
        return {letters, digits};
    }

    std::string digit_run() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        return digits;
    }

    int int_of(const std::string& digits, const char* what) {
        if (digits.empty()) throw ParseError(std::string("expected an integer after ") + what, pos);
        if (digits.size() > 7) throw ParseError("integer out of range", pos);
        return std::stoi(digits);
    }
};

GroupExprPtr parse_group(Lexer& lx);

GroupExprPtr parse_gterm(Lexer& lx) {
    if (lx.eat('(')) {
        auto g = parse_group(lx);
        lx.expect(')', "to close group");
        return g;
    }
    auto [letters, digits] = lx.word();
    if (letters == "C") {
        auto g = std::make_shared<GroupExpr>();
        g->kind = GroupExpr::Kind::Cyclic;
        g->n = lx.int_of(digits, "C");
        if (g->n < 1) throw ParseError("cyclic group order must be >= 1", lx.pos);
        return g;
    }
    if (letters == "S" && digits == "3") {
        auto g = std::make_shared<GroupExpr>();
        g->kind = GroupExpr::Kind::S3;
        return g;
    }
    throw ParseError("unknown group construction '" + letters + digits + "'", lx.pos);
}

GroupExprPtr parse_group(Lexer& lx) {
    auto left = parse_gterm(lx);
    while (lx.peek() == 'x') {
        lx.eat('x');
        auto right = parse_gterm(lx);
        auto p = std::make_shared<GroupExpr>();
        p->kind = GroupExpr::Kind::Product;
        p->left = left;
        p->right = right;
        left = p;
    }
    return left;
}

RingExprPtr parse_ring(Lexer& lx);

RingExprPtr parse_term(Lexer& lx) {
    if (lx.eat('(')) {
        auto e = parse_ring(lx);
        lx.expect(')', "to close expression");
        return e;
    }
    auto [letters, digits] = lx.word();
    auto node = std::make_shared<RingExpr>();
    if (letters == "Z") {
        node->kind = RingExpr::Kind::Zn;
        node->n = lx.int_of(digits, "Z");
        if (node->n < 1) throw ParseError("Zn requires n >= 1", lx.pos);
        return node;
    }
    if (letters == "Bool" && digits.empty()) {
        lx.expect('(', "after Bool");
        node->kind = RingExpr::Kind::Bool;
        node->n = lx.int_of(lx.digit_run(), "Bool(");
        if (node->n > 30) throw ParseError("Bool atom count out of range", lx.pos);
        lx.expect(')', "to close Bool");
        return node;
    }
    if ((letters == "T" || letters == "M") && !digits.empty()) {
        node->kind = letters == "T" ? RingExpr::Kind::Triangular : RingExpr::Kind::Matrix;
        node->n = lx.int_of(digits, letters.c_str());
        if (node->n < 1) throw ParseError("matrix dimension must be >= 1", lx.pos);
        lx.expect('(', "after matrix constructor");
        node->left = parse_ring(lx);
        lx.expect(')', "to close matrix constructor");
        return node;
    }
    if (letters == "GR" && digits.empty()) {
        lx.expect('(', "after GR");
        node->kind = RingExpr::Kind::GroupRing;
        node->left = parse_ring(lx);
        lx.expect(',', "between group-ring arguments");
        node->group = parse_group(lx);
        lx.expect(')', "to close GR");
        return node;
    }
    if (letters == "Table" && digits.empty()) {
        lx.expect('(', "after Table");
        std::string path;
        while (lx.pos < lx.text.size() && lx.text[lx.pos] != ')') path += lx.text[lx.pos++];
        lx.expect(')', "to close Table");
        node->kind = RingExpr::Kind::Table;
        // Trim surrounding whitespace from the path.
        const auto b = path.find_first_not_of(" \t");
        const auto e = path.find_last_not_of(" \t");
        node->path = b == std::string::npos ? "" : path.substr(b, e - b + 1);
        if (node->path.empty()) throw ParseError("Table requires a path", lx.pos);
        return node;
    }
    throw ParseError("unknown construction '" + letters + digits + "'", lx.pos);
}

RingExprPtr parse_ring(Lexer& lx) {
    auto left = parse_term(lx);
    while (lx.peek() == 'x') {
        lx.eat('x');
        auto right = parse_term(lx);
        auto p = std::make_shared<RingExpr>();
        p->kind = RingExpr::Kind::Product;
        p->left = left;
        p->right = right;
        left = p;
    }
    return left;
}

std::string wrap_if_product(const RingExpr& e, const std::string& s) {
    return e.kind == RingExpr::Kind::Product ? "(" + s + ")" : s;
}

std::string wrap_if_product(const GroupExpr& e, const std::string& s) {
    return e.kind == GroupExpr::Kind::Product ? "(" + s + ")" : s;
}

}  // namespace

RingExprPtr parse_expr(std::string_view text) {
    Lexer lx{text};
    auto e = parse_ring(lx);
    if (!lx.done()) throw ParseError("trailing input after expression", lx.pos);
    return e;
}

GroupExprPtr parse_group_expr(std::string_view text) {
    Lexer lx{text};
    auto g = parse_group(lx);
    if (!lx.done()) throw ParseError("trailing input after group expression", lx.pos);
    return g;
}

std::string render(const GroupExpr& e) {
    switch (e.kind) {
        case GroupExpr::Kind::Cyclic: return "C" + std::to_string(e.n);
        case GroupExpr::Kind::S3: return "S3";
        case GroupExpr::Kind::Product:
            return render(*e.left) + " x " + wrap_if_product(*e.right, render(*e.right));
    }
    return "?";
}

std::string render(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::Zn: return "Z" + std::to_string(e.n);
        case RingExpr::Kind::Bool: return "Bool(" + std::to_string(e.n) + ")";
        case RingExpr::Kind::Product:
            return render(*e.left) + " x " + wrap_if_product(*e.right, render(*e.right));
        case RingExpr::Kind::Matrix:
            return "M" + std::to_string(e.n) + "(" + render(*e.left) + ")";
        case RingExpr::Kind::Triangular:
            return "T" + std::to_string(e.n) + "(" + render(*e.left) + ")";
        case RingExpr::Kind::GroupRing:
            return "GR(" + render(*e.left) + ", " + render(*e.group) + ")";
        case RingExpr::Kind::Table:
            return "Table(" + e.path + ")";
    }
    return "?";
}

bool equal(const GroupExpr& a, const GroupExpr& b) {
    if (a.kind != b.kind || a.n != b.n) return false;
    if (a.kind == GroupExpr::Kind::Product)
        return equal(*a.left, *b.left) && equal(*a.right, *b.right);
    return true;
}

bool equal(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.n != b.n || a.path != b.path) return false;
    if (a.left && (!b.left || !equal(*a.left, *b.left))) return false;
    if (!a.left && b.left) return false;
    if (a.right && (!b.right || !equal(*a.right, *b.right))) return false;
    if (!a.right && b.right) return false;
    if (a.group && (!b.group || !equal(*a.group, *b.group))) return false;
    if (!a.group && b.group) return false;
    return true;
}

GroupPtr eval_group(const GroupExpr& g) {
    switch (g.kind) {
        case GroupExpr::Kind::Cyclic: return make_cyclic(g.n);
        case GroupExpr::Kind::S3: return make_s3();
        case GroupExpr::Kind::Product:
            return group_product(eval_group(*g.left), eval_group(*g.right));
    }
    throw Error("eval_group: bad node");
}

namespace {

RingPtr relabel_provenance(const RingPtr& r, const std::string& prov) {
    if (r->provenance() == prov) return r;
    return FiniteRing::create(r->order(), {r->add_table().begin(), r->add_table().end()},
                              {r->mul_table().begin(), r->mul_table().end()}, r->zero(), r->one(),
                              r->labels(), prov);
}

BuiltRing eval_node(const RingExpr& e, const EvalOptions& opts) {
    try {
        switch (e.kind) {
            case RingExpr::Kind::Zn:
                return {make_zn(e.n, opts.cap), nullptr, nullptr, nullptr};
            case RingExpr::Kind::Bool:
                return {boolean_ring(e.n, opts.cap), nullptr, nullptr, nullptr};
            case RingExpr::Kind::Product: {
                auto l = eval_node(*e.left, opts);
                auto r = eval_node(*e.right, opts);
                return {direct_product(l.ring, r.ring, opts.cap), nullptr, nullptr, nullptr};
            }
            case RingExpr::Kind::Matrix:
            case RingExpr::Kind::Triangular: {
                auto base = eval_node(*e.left, opts);
                auto shape = e.kind == RingExpr::Kind::Matrix ? MatrixShape::Full
                                                              : MatrixShape::UpperTriangular;
                return {matrix_ring(base.ring, e.n, shape, opts.cap), nullptr, nullptr, nullptr};
            }
            case RingExpr::Kind::GroupRing: {
                auto base = eval_node(*e.left, opts);
                auto grp = eval_group(*e.group);
                auto gr = group_ring(base.ring, grp, opts.cap);
                return {gr.ring, base.ring, grp, std::make_shared<RingMap>(gr.augmentation)};
            }
            case RingExpr::Kind::Table:
                return {load_ring_file(e.path, opts.cap, opts.exec), nullptr, nullptr, nullptr};
        }
    } catch (const CapError& err) {
        throw CapError(std::string(err.what()) + " (while evaluating " + render(e) + ")");
    }
    throw Error("eval_expr: bad node");
}

}  // namespace

BuiltRing eval_expr(const RingExpr& e, const EvalOptions& opts) {
    BuiltRing built = eval_node(e, opts);
    RingPtr relabeled = relabel_provenance(built.ring, render(e));
    if (relabeled != built.ring) {
        if (built.augmentation)
            built.augmentation = std::make_shared<RingMap>(
                RingMap::create(relabeled, built.base, built.augmentation->image()));
        built.ring = relabeled;
    }
    return built;
}

BuiltRing build_from_text(std::string_view text, const EvalOptions& opts) {
    return eval_expr(*parse_expr(text), opts);
}

}  // namespace ringlab

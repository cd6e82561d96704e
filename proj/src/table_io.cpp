#include "ringlab/table_io.hpp"

#include <fstream>
#include <sstream>

#include "ringlab/axioms.hpp"

namespace ringlab {

std::string save_ring(const FiniteRing& r) {
    std::ostringstream out;
    const int n = r.order();
    out << "ring " << n << "\n";
    out << "zero " << r.zero() << "\n";
    out << "one " << r.one() << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << r.add(a, b);
        out << "\n";
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << r.mul(a, b);
        out << "\n";
    }
    return out.str();
}

namespace {

// All whitespace-separated tokens, with '#'-to-end-of-line comments removed.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

int parse_int(const std::vector<std::string>& toks, std::size_t& pos, const char* what) {
    if (pos >= toks.size())
        throw ValidationError(std::string("table file ended while reading ") + what);
    try {
        std::size_t used = 0;
        const int v = std::stoi(toks[pos], &used);
        if (used != toks[pos].size()) throw std::invalid_argument("");
        ++pos;
        return v;
    } catch (const std::exception&) {
        throw ValidationError(std::string("expected an integer for ") + what + ", got '" +
                              toks[pos] + "'");
    }
}

void expect_keyword(const std::vector<std::string>& toks, std::size_t& pos, const char* kw) {
    if (pos >= toks.size() || toks[pos] != kw)
        throw ValidationError(std::string("expected keyword '") + kw + "'");
    ++pos;
}

}  // namespace

RingPtr load_ring(const std::string& text, int cap, Exec exec) {
    auto toks = tokenize(text);
    std::size_t pos = 0;
    expect_keyword(toks, pos, "ring");
    const int n = parse_int(toks, pos, "order");
    if (n < 1) throw ValidationError("ring order must be positive");
    if (n > cap)
        throw CapError("table ring has order " + std::to_string(n) + ", exceeding the cap of " +
                       std::to_string(cap));
    expect_keyword(toks, pos, "zero");
    const int zero = parse_int(toks, pos, "zero index");
    expect_keyword(toks, pos, "one");
    const int one = parse_int(toks, pos, "one index");

    auto read_table = [&](const char* what) {
        std::vector<int32_t> t(static_cast<std::size_t>(n) * n);
        for (auto& v : t) v = parse_int(toks, pos, what);
        return t;
    };
    auto add = read_table("addition entry");
    auto mul = read_table("multiplication entry");
    if (pos != toks.size()) throw ValidationError("trailing content in table file");

    auto report = validate_axioms(n, add, mul, zero, one, exec);
    if (!report.ok)
        throw ValidationError(std::string("table ring violates '") +
                              axiom_name(report.violation->axiom) + "': " +
                              report.violation->message);
    return FiniteRing::create(n, std::move(add), std::move(mul), zero, one, {}, "Table");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

RingPtr load_ring_file(const std::string& path, int cap, Exec exec) {
    return load_ring(read_file(path), cap, exec);
}

}  // namespace ringlab

#include "liftinglab/anf_parser.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <vector>

namespace liftinglab {

namespace {

// Polynomial under construction: set of monomial variable masks, kept as a
// sorted vector with XOR-merge semantics (a mask appears iff its coefficient
// is 1).
using Poly = std::vector<std::uint32_t>;

void xor_into(Poly& acc, const Poly& other) {
    Poly out;
    out.reserve(acc.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < other.size()) {
        if (j == other.size() || (i < acc.size() && acc[i] < other[j])) out.push_back(acc[i++]);
        else if (i == acc.size() || other[j] < acc[i]) out.push_back(other[j++]);
        else { ++i; ++j; }  // equal masks cancel over F_2
    }
    acc = std::move(out);
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly acc;
    for (auto ma : a) {
        Poly row;
        row.reserve(b.size());
        for (auto mb : b) row.push_back(ma | mb);
        std::sort(row.begin(), row.end());
        // x^2 = x makes distinct b-monomials collide; collapse pairs.
        Poly dedup;
        for (std::size_t i = 0; i < row.size();) {
            std::size_t j = i;
            while (j < row.size() && row[j] == row[i]) ++j;
            if ((j - i) & 1) dedup.push_back(row[i]);
            i = j;
        }
        xor_into(acc, dedup);
    }
    return acc;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly parse(int& max_var) {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        max_var = max_var_;
        return p;
    }

  private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Multi-byte aware match for the operator tokens.
    bool try_consume_xor() {
        if (at_end()) return false;
        char c = peek();
        if (c == '^' || c == '+') { ++pos_; return true; }
        if (s_.compare(pos_, 3, "\xe2\x8a\x95") == 0) { pos_ += 3; return true; }  // ⊕
        return false;
    }

    bool try_consume_mul() {
        if (at_end()) return false;
        if (peek() == '*') { ++pos_; return true; }
        if (s_.compare(pos_, 2, "\xc2\xb7") == 0) { pos_ += 2; return true; }  // ·
        return false;
    }

    bool factor_ahead() const {
        if (at_end()) return false;
        char c = peek();
        return c == 'x' || c == 'X' || c == '0' || c == '1' || c == '(';
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            skip_ws();
            if (!try_consume_xor()) break;
            skip_ws();
            xor_into(acc, term());
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            std::size_t before = pos_;
            bool explicit_mul = try_consume_mul();
            if (explicit_mul) skip_ws();
            if (!factor_ahead()) {
                if (explicit_mul) throw ParseError("expected factor after '*'", pos_);
                pos_ = before;
                break;
            }
            acc = multiply(acc, factor());
        }
        return acc;
    }

    Poly factor() {
        skip_ws();
        if (at_end()) throw ParseError("expected factor", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '0') { ++pos_; return {}; }
        if (c == '1') { ++pos_; return {0u}; }
        if (c == 'x' || c == 'X') {
            std::size_t start = pos_++;
            std::size_t dstart = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected variable index after 'x'", pos_);
            long idx = std::stol(s_.substr(dstart, pos_ - dstart));
            if (idx < 1) throw ParseError("variable index must be >= 1", start);
            if (idx > kMaxArity)
                throw ParseError("variable index exceeds the maximum arity " + std::to_string(kMaxArity), start);
            max_var_ = std::max(max_var_, static_cast<int>(idx));
            return {1u << (idx - 1)};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int max_var_ = 0;
};

}  // namespace

AnfPolynomial parse_anf_polynomial(const std::string& text, std::optional<int> arity_hint) {
    Parser parser(text);
    int max_var = 0;
    Poly p = parser.parse(max_var);
    int arity = arity_hint.value_or(std::max(max_var, 1));
    if (arity < 1 || arity > kMaxArity) throw InputError("arity must be in [1, 8]");
    if (max_var > arity)
        throw InputError("expression uses x" + std::to_string(max_var) +
                         " but the arity hint is " + std::to_string(arity));
    return AnfPolynomial(arity, std::set<std::uint32_t>(p.begin(), p.end()));
}

BooleanFunction parse_anf(const std::string& text, std::optional<int> arity_hint) {
    return parse_anf_polynomial(text, arity_hint).to_function();
}

std::string format_anf(const AnfPolynomial& poly) {
    if (poly.monomials().empty()) return "0";
    std::vector<std::uint32_t> masks(poly.monomials().begin(), poly.monomials().end());
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        // Same size: lexicographic on the ascending variable-index lists,
        // which means comparing lowest set bits first.
        while (a && b) {
            std::uint32_t la = a & -a, lb = b & -b;
            if (la != lb) return la < lb;
            a ^= la;
            b ^= lb;
        }
        return false;
    });
    std::string out;
    for (auto m : masks) {
        if (!out.empty()) out += " \xe2\x8a\x95 ";
        if (m == 0) { out += "1"; continue; }
        for (int j = 1; j <= poly.arity(); ++j)
            if (m & (1u << (j - 1))) out += "x" + std::to_string(j);
    }
    return out;
}

std::string format_anf(const BooleanFunction& f) {
    return format_anf(anf_of(f));
}

}  // namespace liftinglab

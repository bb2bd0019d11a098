#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "liftinglab/errors.hpp"

namespace liftinglab {

inline constexpr int kMaxArity = 8;

// Index of the input (x_1, ..., x_k), with x_1 as the most significant bit:
// enc(x) = sum_i x_i * 2^{k-i}. Every table in the project uses this
// convention; the right shift sigma on n-bit words is then rotate-right by
// one on the integer encoding.
inline std::uint32_t enc(const std::vector<int>& x) {
    std::uint32_t v = 0;
    for (int b : x) v = (v << 1) | static_cast<std::uint32_t>(b & 1);
    return v;
}

// A Boolean function f: F_2^k -> F_2 held as a full truth table.
class BooleanFunction {
  public:
    BooleanFunction(int arity, std::vector<std::uint8_t> truth_table);

    // From the packed integer whose bit (2^k - 1 - i) is table entry i,
    // i.e. f(0,...,0) is the most significant of the 2^k bits.
    static BooleanFunction from_packed(int arity, std::uint64_t packed);
    static BooleanFunction constant(int arity, int value);

    // Hex string of 2^k bits, f(0,...,0) first (most significant).
    static BooleanFunction from_hex(int arity, const std::string& hex);
    std::string to_hex() const;

    int arity() const { return k_; }
    std::uint32_t table_size() const { return 1u << k_; }
    const std::vector<std::uint8_t>& truth_table() const { return tt_; }

    int value_at(std::uint32_t index) const { return tt_[index]; }
    std::uint64_t packed() const;  // arity <= 6

    int weight() const;
    bool operator==(const BooleanFunction& o) const { return k_ == o.k_ && tt_ == o.tt_; }
    bool operator<(const BooleanFunction& o) const { return tt_ < o.tt_; }  // lexicographic, entry 0 first

  private:
    int k_;
    std::vector<std::uint8_t> tt_;
};

// Algebraic normal form: a set of monomials, each a mask of variable indices
// (bit j-1 set means x_j occurs; mask 0 is the constant-1 term).
class AnfPolynomial {
  public:
    AnfPolynomial(int arity, std::set<std::uint32_t> monomials);

    int arity() const { return k_; }
    const std::set<std::uint32_t>& monomials() const { return monomials_; }
    int degree() const;  // max monomial size; 0 for the zero polynomial

    int evaluate(std::uint32_t x_index) const;
    BooleanFunction to_function() const;

  private:
    int k_;
    std::set<std::uint32_t> monomials_;
};

enum class Permutivity { none, left, right, both };
enum class BoundaryBalance { neither, x1_side, xk_side, both };

int evaluate(const BooleanFunction& f, const std::vector<int>& x);

AnfPolynomial anf_of(const BooleanFunction& f);
int degree(const BooleanFunction& f);

// True iff some input with bit t (1-based variable index) flipped changes f.
bool depends_on(const BooleanFunction& f, int var);
// Span between the first and last variable f depends on; 0 for constants.
int diameter(const BooleanFunction& f);
// Drops leading/trailing variables f does not depend on, producing a
// function whose diameter equals its arity. Constants are rejected.
BooleanFunction restrict_to_diameter(const BooleanFunction& f);

// spectrum[a] = sum_x (-1)^{f(x) + a.x} over all 2^k masks a.
std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f);
int nonlinearity(const BooleanFunction& f);
bool is_balanced(const BooleanFunction& f);

Permutivity is_permutive(const BooleanFunction& f);

// Orbit of f under input reflection r, input complementation c and output
// complementation (at most 8 functions).
std::vector<BooleanFunction> elementary_orbit(const BooleanFunction& f);
// Orbit member with the lexicographically least truth table; equal canonical
// forms characterize elementary equivalence.
BooleanFunction canonical_form(const BooleanFunction& f);

// On which of the hyperplanes {x_1 = 0}, {x_k = 0} the restriction of f is
// balanced (2^{k-2} zeros among 2^{k-1} points). Requires k >= 2.
BoundaryBalance boundary_balance(const BooleanFunction& f);

// Packed-table helpers used by the enumeration fast path (arity <= 6).
namespace packed {
std::uint64_t reflect(std::uint64_t table, int k);
std::uint64_t complement_inputs(std::uint64_t table, int k);
std::uint64_t canonical(std::uint64_t table, int k);
bool has_full_diameter(std::uint64_t table, int k);
int degree(std::uint64_t table, int k);
bool is_permutive(std::uint64_t table, int k);
}  // namespace packed

}  // namespace liftinglab

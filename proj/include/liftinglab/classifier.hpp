#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liftinglab/boolean_function.hpp"
#include "liftinglab/induced.hpp"

namespace liftinglab {

inline constexpr int kMaxClassifierArity = 6;
inline constexpr std::size_t kDefaultClosureCap = 1u << 22;
inline constexpr std::size_t kDefaultReachableCap = 1u << 22;

// Path-count matrices over the de Bruijn graph on (k-1)-bit nodes. Node u
// has an edge to v = (u<<1 | b) & (2^{k-1}-1) for each new bit b, labeled
// f(u, b). a[label][u*dim + v] counts such edges (0 or 1 unless k = 1).
//
// Products count preimages: the entry sum of A_{y_1}...A_{y_m} is
// |F_(m+k-1)^{-1}(y)| and its trace is |F^{-1}(y)| for the cyclic map on
// m bits.
struct TransitionMatrices {
    int k;
    int dim;  // 2^{k-1}
    std::vector<std::uint32_t> a[2];
};

TransitionMatrices transition_matrices(const BooleanFunction& f);

std::vector<std::uint32_t> word_matrix(const TransitionMatrices& tm,
                                       const std::vector<std::uint8_t>& word);
std::uint64_t matrix_trace(const TransitionMatrices& tm, const std::vector<std::uint32_t>& m);
std::uint64_t matrix_sum(const std::vector<std::uint32_t>& m);

// Row vector (all-ones) * A_{word}; entry sum = |F_(|word|+k-1)^{-1}(word)|.
std::vector<std::uint64_t> path_count_vector(const TransitionMatrices& tm,
                                             const std::vector<std::uint8_t>& word);

// An output word whose open preimage count deviates from 2^{k-1}.
struct BalanceWitness {
    std::vector<std::uint8_t> word;  // y in F_2^{m-k+1}
    int m;                           // word length + k - 1
    std::uint64_t count;             // |F_(m)^{-1}(y)|
};

struct AlmostDecision {
    bool is_almost;
    std::optional<BalanceWitness> witness;  // present iff !is_almost
    std::size_t states_explored;
};

// Exact decision by breadth-first search over reachable path-count vectors:
// start from the all-ones vector (one path per start node); successors are
// v*A_0 and v*A_1. Every reachable vector must sum to 2^{k-1}; a deviating
// sum at depth j yields a witness at m = j+k-1, and if the reachable set
// closes with no deviation, every open map is balanced, so f is an almost
// lifting. Requires diameter(f) = arity <= 6.
AlmostDecision decide_almost_lifting(const BooleanFunction& f,
                                     std::size_t state_cap = kDefaultReachableCap);

// Recomputes the witness count by direct enumeration of F_(m).
bool verify_witness(const BooleanFunction& f, const BalanceWitness& w);

// Raw search: minimal word length whose path-count sum deviates from
// 2^{k-1}, or 0 when the reachable set closes. No diameter requirement;
// enumeration uses this on arbitrary k-bit tables. With a finite max_level
// the search stops at that depth and returns -1 when still undecided
// (no violation, no closure).
int balance_violation_level(const BooleanFunction& f, int max_level = 1 << 30,
                            std::size_t state_cap = kDefaultReachableCap);

// F_(m) balanced for all k <= m <= n, decided by the same search truncated
// at depth n-k+1.
bool is_potential_lifting(const BooleanFunction& f, int n);
// |F_(m)^{-1}(y)| <= l * 2^{k-1} for all such m, l > 1.
bool is_potential_l_lifting(const BooleanFunction& f, int n, std::uint64_t l);

// sup_n max_y |F^{-1}(y)|, computed as the maximum trace over the closure of
// {A_0, A_1} under product. The closure is finite for almost liftings (every
// product's entry sum is 2^{k-1}); non-almost functions are rejected.
std::uint64_t ell_exact(const BooleanFunction& f, std::size_t closure_cap = kDefaultClosureCap);

// ell(f) = 1: no two distinct cyclic inputs of any length share an image.
bool decide_proper_lifting(const BooleanFunction& f, std::size_t closure_cap = kDefaultClosureCap);

// d * 2^{n/d - 1} when d divides n, else 0.
std::uint64_t virtual_iota_formula(int d, int n);

// Nonlinear almost lifting of degree d < k whose missed-output count matches
// virtual_iota_formula(d, n) for every k <= n <= n_max, witnessed by at
// least one nonzero value in the range.
bool is_virtual_lifting(const BooleanFunction& f, int n_max);

// du(F) = 2^{n-k+1} for every k <= n <= n_max.
bool is_apn_lifting(const BooleanFunction& f, int n_max);

std::vector<int> lifting_n_set(const BooleanFunction& f, int n_max);

enum class Verdict { proper, almost, not_almost };

struct Classification {
    BooleanFunction f;  // after re-rooting to its true diameter
    Verdict verdict;
    std::optional<std::uint64_t> ell;       // absent iff not_almost
    std::optional<BalanceWitness> witness;  // present iff not_almost
    int n_max;
    std::vector<std::uint64_t> ell_n;       // observed, n = arity..n_max
    // (a, b): ell_n = a when b | n and 1 otherwise, when that matches the
    // observed sequence exactly; absent for nonperiodic data.
    std::optional<std::pair<std::uint64_t, int>> pattern;
    bool virtual_lifting;
    bool apn_lifting;
    std::vector<int> lifting_n;
};

// Full verdict for f: re-roots to the true diameter, decides almost/proper,
// computes exact ell, observed ell_n for n <= n_max, and the derived flags.
Classification classify(const BooleanFunction& f, int n_max = 16);

const char* verdict_name(Verdict v);

}  // namespace liftinglab

#include "liftinglab/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace liftinglab {

namespace {

void require_decidable(const BooleanFunction& f) {
    if (f.arity() > kMaxClassifierArity)
        throw CapError("classifier decisions support arity <= " +
                       std::to_string(kMaxClassifierArity));
    if (diameter(f) != f.arity())
        throw InputError("diameter " + std::to_string(diameter(f)) +
                         " differs from arity " + std::to_string(f.arity()) +
                         "; restrict to the true diameter first");
}

// Edge list of the de Bruijn graph: node u steps to (u<<1|b)&mask with label
// f(u<<1|b). Used by both the vector search and the matrix closure.
struct Edges {
    int dim;
    std::uint32_t mask;
    const std::vector<std::uint8_t>* tt;

    explicit Edges(const BooleanFunction& f)
        : dim(1 << (f.arity() - 1)), mask(static_cast<std::uint32_t>(dim - 1)),
          tt(&f.truth_table()) {}

    template <typename Vec>
    void propagate(const Vec& v, int label, Vec& out) const {
        std::fill(out.begin(), out.end(), 0);
        for (int u = 0; u < dim; ++u) {
            if (!v[u]) continue;
            std::uint32_t in0 = static_cast<std::uint32_t>(u) << 1;
            if ((*tt)[in0] == label) out[in0 & mask] += v[u];
            if ((*tt)[in0 | 1] == label) out[(in0 | 1) & mask] += v[u];
        }
    }
};

std::string key_of(const std::vector<std::uint32_t>& v) {
    std::string key(v.size() * 2, '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        key[2 * i] = static_cast<char>(v[i] & 0xFF);
        key[2 * i + 1] = static_cast<char>((v[i] >> 8) & 0xFF);
    }
    return key;
}

struct SearchResult {
    bool closed;                  // reachable set exhausted, no violation
    bool violation;               // some vector failed the sum predicate
    int violation_level;          // word length of the first failure
    std::vector<std::uint8_t> violation_word;
    std::uint64_t violation_sum;
    std::size_t states;
};

// Breadth-first search over path-count vectors with global deduplication.
// Deduplication preserves minimal violation depth: a vector's successors do
// not depend on which word produced it.
SearchResult count_vector_search(const BooleanFunction& f, std::uint64_t max_sum_allowed,
                                 std::uint64_t min_sum_allowed, int max_level,
                                 std::size_t state_cap) {
    Edges edges(f);
    std::vector<std::vector<std::uint32_t>> states;
    std::vector<std::pair<std::uint32_t, std::uint8_t>> parent;  // (index, bit)
    std::unordered_map<std::string, std::uint32_t> index;

    std::vector<std::uint32_t> start(edges.dim, 1);
    states.push_back(start);
    parent.emplace_back(0, 0);
    index.emplace(key_of(start), 0);

    auto word_to = [&](std::uint32_t at, std::uint8_t last) {
        std::vector<std::uint8_t> w{last};
        while (at != 0) {
            auto [up, bit] = parent[at];
            w.push_back(bit);
            at = up;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::size_t frontier_begin = 0, frontier_end = 1;
    int level = 0;
    std::vector<std::uint32_t> next(edges.dim);
    while (frontier_begin < frontier_end && level < max_level) {
        ++level;
        for (std::size_t s = frontier_begin; s < frontier_end; ++s) {
            for (int bit = 0; bit < 2; ++bit) {
                edges.propagate(states[s], bit, next);
                std::uint64_t sum = std::accumulate(next.begin(), next.end(), std::uint64_t{0});
                if (sum > max_sum_allowed || sum < min_sum_allowed) {
                    return SearchResult{false, true, level,
                                        word_to(static_cast<std::uint32_t>(s),
                                                static_cast<std::uint8_t>(bit)),
                                        sum, states.size()};
                }
                std::string key = key_of(next);
                if (index.contains(key)) continue;
                if (states.size() >= state_cap)
                    throw CapError("count-vector search exceeded the state cap of " +
                                   std::to_string(state_cap));
                index.emplace(std::move(key), static_cast<std::uint32_t>(states.size()));
                states.push_back(next);
                parent.emplace_back(static_cast<std::uint32_t>(s), static_cast<std::uint8_t>(bit));
            }
        }
        frontier_begin = frontier_end;
        frontier_end = states.size();
    }
    bool closed = frontier_begin >= frontier_end;
    return SearchResult{closed, false, 0, {}, 0, states.size()};
}

constexpr int kUnbounded = 1 << 30;

}  // namespace

TransitionMatrices transition_matrices(const BooleanFunction& f) {
    require_decidable(f);
    TransitionMatrices tm;
    tm.k = f.arity();
    tm.dim = 1 << (tm.k - 1);
    tm.a[0].assign(static_cast<std::size_t>(tm.dim) * tm.dim, 0);
    tm.a[1].assign(static_cast<std::size_t>(tm.dim) * tm.dim, 0);
    std::uint32_t mask = static_cast<std::uint32_t>(tm.dim - 1);
    for (int u = 0; u < tm.dim; ++u) {
        for (int b = 0; b < 2; ++b) {
            std::uint32_t in = (static_cast<std::uint32_t>(u) << 1) | static_cast<std::uint32_t>(b);
            int label = f.value_at(in);
            tm.a[label][static_cast<std::size_t>(u) * tm.dim + (in & mask)] += 1;
        }
    }
    return tm;
}

std::vector<std::uint32_t> word_matrix(const TransitionMatrices& tm,
                                       const std::vector<std::uint8_t>& word) {
    if (word.empty()) throw InputError("word_matrix: empty word");
    std::vector<std::uint32_t> m = tm.a[word[0] & 1];
    std::vector<std::uint32_t> next(m.size());
    for (std::size_t i = 1; i < word.size(); ++i) {
        const auto& g = tm.a[word[i] & 1];
        std::fill(next.begin(), next.end(), 0);
        for (int r = 0; r < tm.dim; ++r)
            for (int u = 0; u < tm.dim; ++u) {
                std::uint32_t val = m[static_cast<std::size_t>(r) * tm.dim + u];
                if (!val) continue;
                for (int c = 0; c < tm.dim; ++c)
                    next[static_cast<std::size_t>(r) * tm.dim + c] +=
                        val * g[static_cast<std::size_t>(u) * tm.dim + c];
            }
        m.swap(next);
    }
    return m;
}

std::uint64_t matrix_trace(const TransitionMatrices& tm, const std::vector<std::uint32_t>& m) {
    std::uint64_t t = 0;
    for (int i = 0; i < tm.dim; ++i) t += m[static_cast<std::size_t>(i) * tm.dim + i];
    return t;
}

std::uint64_t matrix_sum(const std::vector<std::uint32_t>& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> path_count_vector(const TransitionMatrices& tm,
                                             const std::vector<std::uint8_t>& word) {
    std::vector<std::uint64_t> v(tm.dim, 1), next(tm.dim);
    for (auto bit : word) {
        const auto& g = tm.a[bit & 1];
        std::fill(next.begin(), next.end(), 0);
        for (int u = 0; u < tm.dim; ++u) {
            if (!v[u]) continue;
            for (int c = 0; c < tm.dim; ++c)
                next[c] += v[u] * g[static_cast<std::size_t>(u) * tm.dim + c];
        }
        v.swap(next);
    }
    return v;
}

AlmostDecision decide_almost_lifting(const BooleanFunction& f, std::size_t state_cap) {
    require_decidable(f);
    std::uint64_t target = 1ull << (f.arity() - 1);
    SearchResult r = count_vector_search(f, target, target, kUnbounded, state_cap);
    if (r.violation) {
        BalanceWitness w{r.violation_word, static_cast<int>(r.violation_word.size()) + f.arity() - 1,
                         r.violation_sum};
        return AlmostDecision{false, std::move(w), r.states};
    }
    return AlmostDecision{true, std::nullopt, r.states};
}

int balance_violation_level(const BooleanFunction& f, int max_level, std::size_t state_cap) {
    if (f.arity() > kMaxClassifierArity)
        throw CapError("balance_violation_level supports arity <= " +
                       std::to_string(kMaxClassifierArity));
    std::uint64_t target = 1ull << (f.arity() - 1);
    SearchResult r = count_vector_search(f, target, target, max_level, state_cap);
    if (r.violation) return r.violation_level;
    return r.closed ? 0 : -1;
}

bool verify_witness(const BooleanFunction& f, const BalanceWitness& w) {
    const int k = f.arity();
    const int m = w.m;
    if (m - k + 1 != static_cast<int>(w.word.size())) return false;
    std::uint32_t y = 0;
    for (auto bit : w.word) y = (y << 1) | (bit & 1);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (1ull << m); ++x)
        if (apply_open(f, m, static_cast<std::uint32_t>(x)) == y) ++count;
    return count == w.count && count != (1ull << (k - 1));
}

bool is_potential_lifting(const BooleanFunction& f, int n) {
    require_decidable(f);
    if (n < f.arity()) throw InputError("is_potential_lifting: n < arity");
    if (n - f.arity() + 1 > kMaxOpenOutputBits)
        throw CapError("is_potential_lifting: n too large");
    std::uint64_t target = 1ull << (f.arity() - 1);
    SearchResult r = count_vector_search(f, target, target, n - f.arity() + 1,
                                         kDefaultReachableCap);
    return !r.violation;
}

bool is_potential_l_lifting(const BooleanFunction& f, int n, std::uint64_t l) {
    require_decidable(f);
    if (l <= 1) throw InputError("is_potential_l_lifting: l must exceed 1");
    if (n < f.arity()) throw InputError("is_potential_l_lifting: n < arity");
    if (n - f.arity() + 1 > kMaxOpenOutputBits)
        throw CapError("is_potential_l_lifting: n too large");
    std::uint64_t bound = l << (f.arity() - 1);
    SearchResult r = count_vector_search(f, bound, 0, n - f.arity() + 1, kDefaultReachableCap);
    return !r.violation;
}

namespace {

// Closure of {A_0, A_1} under right multiplication. For almost liftings all
// products have entry sum 2^{k-1}, so entries fit a byte and the closure is
// finite. Returns the maximum trace seen; stops early once it reaches
// `stop_trace`.
std::uint64_t closure_max_trace(const BooleanFunction& f, std::size_t cap,
                                std::uint64_t stop_trace) {
    const int k = f.arity();
    const int dim = 1 << (k - 1);
    const std::size_t cells = static_cast<std::size_t>(dim) * dim;
    const auto& tt = f.truth_table();
    std::uint32_t mask = static_cast<std::uint32_t>(dim - 1);

    auto trace_of = [&](const std::string& m) {
        std::uint64_t t = 0;
        for (int i = 0; i < dim; ++i)
            t += static_cast<std::uint8_t>(m[static_cast<std::size_t>(i) * dim + i]);
        return t;
    };

    std::vector<std::string> queue;
    std::unordered_map<std::string, bool> seen;
    for (int b = 0; b < 2; ++b) {
        std::string m(cells, '\0');
        for (int u = 0; u < dim; ++u) {
            std::uint32_t in0 = static_cast<std::uint32_t>(u) << 1;
            if (tt[in0] == b) m[static_cast<std::size_t>(u) * dim + (in0 & mask)] += 1;
            if (tt[in0 | 1] == b) m[static_cast<std::size_t>(u) * dim + ((in0 | 1) & mask)] += 1;
        }
        if (seen.emplace(m, true).second) queue.push_back(std::move(m));
    }

    std::uint64_t best = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::string cur = queue[head];  // copy: queue grows and may reallocate
        best = std::max(best, trace_of(cur));
        if (best >= stop_trace) return best;
        for (int b = 0; b < 2; ++b) {
            std::string next(cells, '\0');
            for (int r = 0; r < dim; ++r) {
                const char* row = cur.data() + static_cast<std::size_t>(r) * dim;
                char* out = next.data() + static_cast<std::size_t>(r) * dim;
                for (int u = 0; u < dim; ++u) {
                    std::uint8_t val = static_cast<std::uint8_t>(row[u]);
                    if (!val) continue;
                    std::uint32_t in0 = static_cast<std::uint32_t>(u) << 1;
                    if (tt[in0] == b) out[in0 & mask] += static_cast<char>(val);
                    if (tt[in0 | 1] == b) out[(in0 | 1) & mask] += static_cast<char>(val);
                }
            }
            if (seen.contains(next)) continue;
            if (queue.size() >= cap)
                throw CapError("semigroup closure exceeded the cap of " + std::to_string(cap) +
                               " matrices");
            seen.emplace(next, true);
            queue.push_back(std::move(next));
        }
    }
    return best;
}

}  // namespace

std::uint64_t ell_exact(const BooleanFunction& f, std::size_t closure_cap) {
    AlmostDecision d = decide_almost_lifting(f);
    if (!d.is_almost)
        throw InputError("ell_exact: not an almost lifting (sup is unbounded)");
    return closure_max_trace(f, closure_cap, ~0ull);
}

bool decide_proper_lifting(const BooleanFunction& f, std::size_t closure_cap) {
    AlmostDecision d = decide_almost_lifting(f);
    if (!d.is_almost) return false;
    return closure_max_trace(f, closure_cap, 2) == 1;
}

std::uint64_t virtual_iota_formula(int d, int n) {
    if (d < 1) throw InputError("virtual_iota_formula: d must be positive");
    if (n <= d) throw InputError("virtual_iota_formula: requires n > d");
    if (n % d != 0) return 0;
    return static_cast<std::uint64_t>(d) << (n / d - 1);
}

bool is_virtual_lifting(const BooleanFunction& f, int n_max) {
    require_decidable(f);
    const int k = f.arity();
    if (n_max < k) throw InputError("is_virtual_lifting: n_max < arity");
    if (n_max > kMaxTableBits) throw CapError("is_virtual_lifting: n_max too large");
    const int d = degree(f);
    if (d < 2 || d >= k) return false;
    if (!decide_almost_lifting(f).is_almost) return false;
    bool missed_somewhere = false;
    for (int n = k; n <= n_max; ++n) {
        std::uint64_t expected = (n > d) ? virtual_iota_formula(d, n) : 0;
        if (preimage_distribution(f, n).iota != expected) return false;
        if (expected) missed_somewhere = true;
    }
    return missed_somewhere;
}

bool is_apn_lifting(const BooleanFunction& f, int n_max) {
    require_decidable(f);
    const int k = f.arity();
    if (n_max < k) throw InputError("is_apn_lifting: n_max < arity");
    if (n_max > kMaxDdtBits) throw CapError("is_apn_lifting: n_max too large");
    if (!decide_almost_lifting(f).is_almost)
        throw InputError("is_apn_lifting: not an almost lifting");
    for (int n = k; n <= n_max; ++n)
        if (du(f, n) != (1ull << (n - k + 1))) return false;
    return true;
}

std::vector<int> lifting_n_set(const BooleanFunction& f, int n_max) {
    if (n_max > kMaxLiftingSetBits) throw CapError("lifting_n_set: n_max too large");
    std::vector<int> out;
    for (int n = f.arity(); n <= n_max; ++n)
        if (is_bijective(f, n)) out.push_back(n);
    return out;
}

namespace {

std::optional<std::pair<std::uint64_t, int>> extract_pattern(const std::vector<std::uint64_t>& seq,
                                                             int first_n) {
    std::vector<int> above;
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 1) continue;
        int n = first_n + static_cast<int>(i);
        if (above.empty()) a = seq[i];
        else if (seq[i] != a) return std::nullopt;
        above.push_back(n);
    }
    if (above.empty()) return std::make_pair(std::uint64_t{1}, 1);
    int b = 0;
    for (int n : above) b = std::gcd(b, n);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int n = first_n + static_cast<int>(i);
        std::uint64_t want = (n % b == 0) ? a : 1;
        if (seq[i] != want) return std::nullopt;
    }
    return std::make_pair(a, b);
}

}  // namespace

Classification classify(const BooleanFunction& input, int n_max) {
    BooleanFunction f = restrict_to_diameter(input);
    require_decidable(f);
    const int k = f.arity();
    if (n_max < k) throw InputError("classify: n_max < diameter");
    if (n_max > kMaxLiftingSetBits) throw CapError("classify: n_max too large");

    Classification c{f, Verdict::not_almost, std::nullopt, std::nullopt,
                     n_max, {}, std::nullopt, false, false, {}};

    AlmostDecision d = decide_almost_lifting(f);
    if (!d.is_almost) {
        c.witness = d.witness;
    } else {
        std::uint64_t ell = closure_max_trace(f, kDefaultClosureCap, ~0ull);
        c.ell = ell;
        c.verdict = ell == 1 ? Verdict::proper : Verdict::almost;
    }

    for (int n = k; n <= n_max; ++n)
        c.ell_n.push_back(preimage_distribution(f, n).ell_n);
    c.pattern = extract_pattern(c.ell_n, k);

    if (d.is_almost) {
        int deg = degree(f);
        c.virtual_lifting = deg >= 2 && deg < k && is_virtual_lifting(f, n_max);
        c.apn_lifting = is_apn_lifting(f, std::min(n_max, kMaxDdtBits));
    }
    c.lifting_n = lifting_n_set(f, std::min(n_max, kMaxLiftingSetBits));
    return c;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::proper: return "proper";
        case Verdict::almost: return "almost";
        default: return "not_almost";
    }
}

}  // namespace liftinglab

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftinglab/bigint.hpp"
#include "liftinglab/boolean_function.hpp"

namespace liftinglab {

// Exhaustive search over truth-table space. Full-space sweeps are supported
// for k <= 5 (2^32 tables, hours; checkpointable); k = 6 requires
// max_degree = 2, which switches to ANF-coefficient space; k = 7 requires
// max_degree = 2 and permutive_only.
struct SearchSpec {
    int k = 3;
    int n_max = 0;  // 0: no per-n rows, counts only
    std::optional<int> max_degree;
    bool permutive_only = false;
    bool require_f0_zero = false;
    bool require_f0_neq_f1 = false;
    bool diameter_exact = true;
    enum class CountMode { functions, equivalence_classes };
    CountMode count_mode = CountMode::equivalence_classes;
};

struct CountRow {
    int n = 0;
    std::uint64_t potential_count = 0;   // survivors of the staged balance filter
    std::uint64_t f0_neq_f1_count = 0;   // of those, f(0..0) != f(1..1)
    std::uint64_t lifting_count = 0;     // of those, cyclic F bijective at n
    std::vector<std::uint64_t> lifting_by_degree;  // index d-1 holds degree-d liftings

    bool operator==(const CountRow&) const = default;
};

struct SweepResult {
    std::vector<CountRow> rows;          // n = k .. n_max (empty when n_max = 0)
    std::uint64_t almost_count = 0;      // candidates whose search closed (almost liftings)
    std::uint64_t almost_f1_count = 0;   // of those, f(1..1) = 1
    std::uint64_t candidates = 0;        // functions surviving the cheap filters
    // k = 6 row sweeps stop at depth n_max-k+1: candidates that neither
    // violated balance nor closed by then (they still count as potential
    // for every produced row). Always 0 for k <= 5.
    std::uint64_t undecided_count = 0;
};

struct CheckpointConfig {
    std::string path;
    std::uint64_t block_size = 1ull << 22;  // indices per checkpointed block
};

SweepResult run_sweep(const SearchSpec& spec, unsigned jobs = 0,
                      const std::optional<CheckpointConfig>& checkpoint = std::nullopt);

std::vector<CountRow> enumerate_rows(const SearchSpec& spec, unsigned jobs = 0,
                                     const std::optional<CheckpointConfig>& checkpoint = std::nullopt);

// Elementary-equivalence classes of diameter-k almost liftings.
std::uint64_t count_almost_lifting_classes(int k, unsigned jobs = 0,
                                           const std::optional<CheckpointConfig>& checkpoint = std::nullopt);

// |S_{k,n_cutoff}|: functions with f(0..0) = 0 and diameter k that stay
// balanced through stage n_cutoff, plus how many of them have f(1..1) = 1.
// No cutoff means the exact limit set S_k (search run to closure).
std::pair<std::uint64_t, std::uint64_t> count_s_k(int k, std::optional<int> n_cutoff = std::nullopt,
                                                  unsigned jobs = 0,
                                                  const std::optional<CheckpointConfig>& checkpoint = std::nullopt);

// Closed forms (exact; big integers from k = 7 on).
BigUint s_k_lower_bound(int k);
struct PermutiveSetSizes {
    BigUint t, t_r, t_c, t_rc;
};
PermutiveSetSizes permutive_sets_sizes(int k);
BigUint permutive_class_count(int k);

// Appendix-layout emitters: n, #potential, f(0)!=f(1), #liftings, deg columns.
std::string count_rows_csv(const std::vector<CountRow>& rows, int k);
std::string count_rows_markdown(const std::vector<CountRow>& rows, int k);
std::vector<CountRow> parse_count_rows_csv(const std::string& csv);

}  // namespace liftinglab

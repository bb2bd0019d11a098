#include "liftinglab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "liftinglab/classifier.hpp"
#include "liftinglab/induced.hpp"
#include "liftinglab/parallel.hpp"

namespace liftinglab {

namespace {

// ---------------------------------------------------------------------------
// Packed-table transforms, display layout (bit 2^k-1-i holds tt[i]).
// Byte-sliced tables make the orbit check cheap inside the 2^{2^k} sweep.
// ---------------------------------------------------------------------------

struct OrbitTables {
    int k;
    std::uint32_t size;
    std::uint64_t full_mask;
    std::vector<std::array<std::uint64_t, 256>> reflect_bytes, complement_bytes;

    explicit OrbitTables(int k) : k(k), size(1u << k) {
        full_mask = size == 64 ? ~0ull : (1ull << size) - 1;
        int bytes = static_cast<int>((size + 7) / 8);
        reflect_bytes.resize(bytes);
        complement_bytes.resize(bytes);
        for (int bp = 0; bp < bytes; ++bp) {
            for (int v = 0; v < 256; ++v) {
                std::uint64_t r = 0, c = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    if (!(v & (1 << bit))) continue;
                    std::uint32_t disp = static_cast<std::uint32_t>(bp) * 8 + static_cast<std::uint32_t>(bit);
                    if (disp >= size) continue;
                    std::uint32_t i = size - 1 - disp;  // table index held at this bit
                    std::uint32_t i_r = 0;
                    for (int p = 0; p < k; ++p)
                        if (i & (1u << p)) i_r |= 1u << (k - 1 - p);
                    std::uint32_t i_c = i ^ (size - 1);
                    // tt'[j] = tt[perm(j)]: the bit we carry lands at every j
                    // with perm(j) = i, i.e. j = perm^{-1}(i); both maps are
                    // involutions.
                    r |= 1ull << (size - 1 - i_r);
                    c |= 1ull << (size - 1 - i_c);
                }
                reflect_bytes[bp][v] = r;
                complement_bytes[bp][v] = c;
            }
        }
    }

    std::uint64_t apply(const std::vector<std::array<std::uint64_t, 256>>& tbl,
                        std::uint64_t t) const {
        std::uint64_t out = 0;
        for (std::size_t bp = 0; bp < tbl.size(); ++bp)
            out |= tbl[bp][(t >> (bp * 8)) & 0xFF];
        return out;
    }

    std::uint64_t canonical(std::uint64_t t) const {
        std::uint64_t r = apply(reflect_bytes, t);
        std::uint64_t best = ~0ull;
        for (std::uint64_t base : {t, r, apply(complement_bytes, t), apply(complement_bytes, r)}) {
            best = std::min(best, base);
            best = std::min(best, base ^ full_mask);
        }
        return best;
    }

    bool full_diameter(std::uint64_t t) const {
        std::uint32_t half = size >> 1;
        std::uint64_t lo_mask = (half == 64) ? ~0ull : (1ull << half) - 1;
        if (((t >> half) & lo_mask) == (t & lo_mask)) return false;  // independent of x_1
        // x_k: adjacent display bits pair inputs differing in the last bit.
        std::uint64_t even = t & 0xAAAAAAAAAAAAAAAAull & full_mask;
        std::uint64_t odd = (t << 1) & 0xAAAAAAAAAAAAAAAAull & full_mask;
        return even != odd;
    }
};

// Fast Moebius on natural layout (bit i holds tt[i]).
int packed_degree_natural(std::uint64_t a, int k) {
    static constexpr std::uint64_t masks[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
        0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
    for (int p = 0; p < k; ++p) a ^= (a & masks[p]) << (1u << p);
    int deg = 0;
    while (a) {
        int i = std::countr_zero(a);
        deg = std::max(deg, std::popcount(static_cast<std::uint32_t>(i)));
        a &= a - 1;
    }
    return deg;
}

std::uint64_t display_to_natural(std::uint64_t t, std::uint32_t size) {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < size; ++i)
        if (t & (1ull << (size - 1 - i))) out |= 1ull << i;
    return out;
}

// Permutivity on the display-packed table.
bool packed_permutive(std::uint64_t t, int k, std::uint32_t size) {
    bool left = true, right = true;
    for (std::uint32_t i = 0; i < size && (left || right); ++i) {
        int v = (t >> (size - 1 - i)) & 1;
        if (left && ((t >> (size - 1 - (i ^ (size >> 1)))) & 1) == static_cast<std::uint64_t>(v))
            left = false;
        if (right && ((t >> (size - 1 - (i ^ 1u))) & 1) == static_cast<std::uint64_t>(v))
            right = false;
    }
    return left || right;
}

// ---------------------------------------------------------------------------
// Reachability filter on path-count vectors, arena-reused across candidates.
// Same search as decide_almost_lifting, without witness bookkeeping: returns
// the minimal violating word length, or 0 when the set closes (almost
// lifting). Supports k <= 5 (dim <= 16, one 128-bit key per vector).
// ---------------------------------------------------------------------------

class FastAlmostScan {
  public:
    explicit FastAlmostScan(int k)
        : k_(k), dim_(1 << (k - 1)), size_(1u << k), target_(1u << (k - 1)) {
        buckets_.assign(kBuckets, Bucket{0, 0});
    }

    // t: display-packed truth table. Returns 0 when the reachable set closes
    // (almost lifting), the minimal violating word length otherwise, or -1
    // if max_level is hit while still undecided. Throws CapError past
    // kStateCap states.
    int run(std::uint64_t t, int max_level = 1 << 30) {
        for (int u = 0; u < dim_; ++u) {
            std::uint32_t in0 = static_cast<std::uint32_t>(u) << 1;
            label_[2 * u] = static_cast<int>((t >> (size_ - 1 - in0)) & 1);
            label_[2 * u + 1] = static_cast<int>((t >> (size_ - 2 - in0)) & 1);
        }
        states_.clear();
        ++generation_;

        State start;
        start.fill(0);
        for (int u = 0; u < dim_; ++u) start[u] = 1;
        push(start);

        std::size_t begin = 0, end = 1;
        int level = 0;
        const std::uint32_t mask = static_cast<std::uint32_t>(dim_ - 1);
        while (begin < end && level < max_level) {
            ++level;
            for (std::size_t s = begin; s < end; ++s) {
                for (int bit = 0; bit < 2; ++bit) {
                    State next;
                    next.fill(0);
                    unsigned sum = 0;
                    const State cur = states_[s];
                    for (int u = 0; u < dim_; ++u) {
                        std::uint8_t val = cur[u];
                        if (!val) continue;
                        std::uint32_t in0 = static_cast<std::uint32_t>(u) << 1;
                        if (label_[2 * u] == bit) {
                            next[in0 & mask] = static_cast<std::uint8_t>(next[in0 & mask] + val);
                            sum += val;
                        }
                        if (label_[2 * u + 1] == bit) {
                            next[(in0 | 1) & mask] =
                                static_cast<std::uint8_t>(next[(in0 | 1) & mask] + val);
                            sum += val;
                        }
                    }
                    if (sum != target_) return level;
                    push(next);
                }
            }
            begin = end;
            end = states_.size();
        }
        return begin >= end ? 0 : -1;
    }

  private:
    using State = std::array<std::uint8_t, 16>;

    static constexpr std::size_t kBuckets = 1u << 15;
    static constexpr std::size_t kStateCap = kBuckets / 2;

    struct Bucket {
        std::uint32_t generation;
        std::uint32_t slot;
    };

    void push(const State& s) {
        unsigned __int128 key = 0;
        for (int i = dim_ - 1; i >= 0; --i) key = (key << 8) | s[i];
        std::size_t h = static_cast<std::size_t>(
                            (static_cast<std::uint64_t>(key) ^ static_cast<std::uint64_t>(key >> 64)) *
                            0x9E3779B97F4A7C15ull) &
                        (kBuckets - 1);
        for (;;) {
            Bucket& b = buckets_[h];
            if (b.generation != generation_) {
                if (states_.size() >= kStateCap)
                    throw CapError("enumeration reachability scan exceeded its state cap");
                b.generation = generation_;
                b.slot = static_cast<std::uint32_t>(states_.size());
                keys_.resize(std::max(keys_.size(), states_.size() + 1));
                keys_[states_.size()] = key;
                states_.push_back(s);
                return;
            }
            if (keys_[b.slot] == key) return;
            h = (h + 1) & (kBuckets - 1);
        }
    }

    int k_, dim_;
    std::uint32_t size_, target_;
    std::uint32_t generation_ = 0;
    std::array<int, 32> label_{};
    std::vector<State> states_;
    std::vector<unsigned __int128> keys_;
    std::vector<Bucket> buckets_;
};

// ---------------------------------------------------------------------------
// Sweep driver
// ---------------------------------------------------------------------------

struct Totals {
    std::vector<std::uint64_t> potential, f01, lifting;
    std::vector<std::array<std::uint64_t, 8>> by_degree;
    std::uint64_t almost = 0, almost_f1 = 0, candidates = 0, undecided = 0;

    explicit Totals(int n_rows) {
        potential.assign(n_rows, 0);
        f01.assign(n_rows, 0);
        lifting.assign(n_rows, 0);
        by_degree.assign(n_rows, {});
    }

    void merge(const Totals& o) {
        for (std::size_t i = 0; i < potential.size(); ++i) {
            potential[i] += o.potential[i];
            f01[i] += o.f01[i];
            lifting[i] += o.lifting[i];
            for (int d = 0; d < 8; ++d) by_degree[i][d] += o.by_degree[i][d];
        }
        almost += o.almost;
        almost_f1 += o.almost_f1;
        candidates += o.candidates;
        undecided += o.undecided;
    }
};

void validate_spec(const SearchSpec& spec) {
    if (spec.k < 1 || spec.k > 6) throw InputError("search supports k in [1, 6]");
    bool deg2 = spec.max_degree.has_value() && *spec.max_degree <= 2;
    if (spec.k == 6 && !deg2)
        throw CapError("k = 6 requires max_degree <= 2 (the full space has 2^64 tables)");
    if (spec.n_max > kMaxTableBits) throw CapError("n_max exceeds the table cap");
}

// Candidate generator: either every packed table (k <= 5), or tables spanned
// by degree <= 2 ANF coefficients (k = 6, 7).
struct CandidateSpace {
    int k;
    bool anf_space;
    std::uint64_t count;
    std::vector<std::uint64_t> basis;  // display tables of the ANF-space monomials

    explicit CandidateSpace(const SearchSpec& spec) : k(spec.k) {
        anf_space = spec.k == 6;
        if (!anf_space) {
            count = spec.k == 5 ? (1ull << 32) : (1ull << (1u << spec.k));
            return;
        }
        std::uint32_t size = 1u << k;
        auto monomial_table = [&](std::uint32_t vars) {
            std::uint64_t t = 0;
            std::uint32_t idxmask = 0;
            for (int j = 1; j <= k; ++j)
                if (vars & (1u << (j - 1))) idxmask |= 1u << (k - j);
            for (std::uint32_t i = 0; i < size; ++i)
                if ((i & idxmask) == idxmask) t |= 1ull << (size - 1 - i);
            return t;
        };
        basis.push_back(monomial_table(0));  // constant term
        for (int a = 1; a <= k; ++a) basis.push_back(monomial_table(1u << (a - 1)));
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                basis.push_back(monomial_table((1u << (a - 1)) | (1u << (b - 1))));
        count = 1ull << basis.size();
    }

    std::uint64_t table_at(std::uint64_t index) const {
        if (!anf_space) return index;
        std::uint64_t t = 0;
        std::uint64_t bits = index;
        while (bits) {
            int i = std::countr_zero(bits);
            t ^= basis[static_cast<std::size_t>(i)];
            bits &= bits - 1;
        }
        return t;
    }
};

struct CheckpointState {
    std::uint64_t next_index = 0;
    Totals totals;
};

std::string spec_tag(const SearchSpec& spec) {
    std::ostringstream os;
    os << spec.k << ' ' << spec.n_max << ' '
       << (spec.count_mode == SearchSpec::CountMode::equivalence_classes ? "classes" : "functions")
       << ' ' << (spec.max_degree ? *spec.max_degree : -1) << spec.permutive_only
       << spec.require_f0_zero << spec.require_f0_neq_f1 << spec.diameter_exact;
    return os.str();
}

void write_checkpoint(const std::string& path, const SearchSpec& spec, const CheckpointState& st) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << "liftinglab-checkpoint " << spec_tag(spec) << "\n";
        out << spec.k << ' ' << spec.n_max << " 1 " << st.next_index << ' '
            << st.totals.almost << ' ' << st.totals.almost_f1 << ' ' << st.totals.candidates << "\n";
        for (std::size_t i = 0; i < st.totals.potential.size(); ++i) {
            out << (spec.k + static_cast<int>(i)) << ' ' << st.totals.potential[i] << ' '
                << st.totals.f01[i] << ' ' << st.totals.lifting[i];
            for (int d = 0; d + 1 < spec.k || d == 0; ++d) out << ' ' << st.totals.by_degree[i][d];
            out << "\n";
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

bool read_checkpoint(const std::string& path, const SearchSpec& spec, CheckpointState& st) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    std::getline(in, header);
    if (header != "liftinglab-checkpoint " + spec_tag(spec))
        throw InputError("checkpoint file does not match this search");
    int k, n_max, stage;
    in >> k >> n_max >> stage >> st.next_index >> st.totals.almost >> st.totals.almost_f1 >>
        st.totals.candidates;
    for (std::size_t i = 0; i < st.totals.potential.size(); ++i) {
        int n;
        in >> n >> st.totals.potential[i] >> st.totals.f01[i] >> st.totals.lifting[i];
        for (int d = 0; d + 1 < spec.k || d == 0; ++d) in >> st.totals.by_degree[i][d];
    }
    if (!in) throw InputError("truncated checkpoint file");
    return true;
}

}  // namespace

SweepResult run_sweep(const SearchSpec& spec, unsigned jobs,
                      const std::optional<CheckpointConfig>& checkpoint) {
    validate_spec(spec);
    if (!jobs) jobs = default_jobs();
    const int k = spec.k;
    const std::uint32_t size = 1u << k;
    const int n_rows = spec.n_max >= k ? spec.n_max - k + 1 : 0;
    const bool classes = spec.count_mode == SearchSpec::CountMode::equivalence_classes;
    const unsigned balance_target = size / 2;

    CandidateSpace space(spec);
    OrbitTables orbit(k);

    CheckpointState st{0, Totals(n_rows)};
    if (checkpoint) read_checkpoint(checkpoint->path, spec, st);

    std::uint64_t block = checkpoint ? checkpoint->block_size : space.count;

    while (st.next_index < space.count) {
        std::uint64_t block_end = std::min(space.count, st.next_index + block);
        std::vector<Totals> local(jobs, Totals(n_rows));
        parallel_ranges(st.next_index, block_end, jobs,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            Totals& acc = local[w];
            FastAlmostScan fast(std::min(k, 5));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t t = space.table_at(idx);
                if (std::popcount(t) != balance_target) continue;
                if (spec.diameter_exact && !orbit.full_diameter(t)) continue;
                int f0 = static_cast<int>((t >> (size - 1)) & 1);
                int f1 = static_cast<int>(t & 1);
                if (spec.require_f0_zero && f0 != 0) continue;
                if (spec.require_f0_neq_f1 && f0 == f1) continue;
                if (spec.permutive_only && !packed_permutive(t, k, size)) continue;
                if (spec.max_degree &&
                    packed_degree_natural(display_to_natural(t, size), k) > *spec.max_degree)
                    continue;
                if (classes && orbit.canonical(t) != t) continue;
                acc.candidates += 1;

                // Row counting only needs the search down to depth
                // n_max-k+1, where the per-level state count is bounded by
                // 2^level. Exact almost decisions (k <= 5) run unbounded.
                int depth = n_rows ? spec.n_max - k + 1 : (1 << 30);
                int level;
                if (k <= 5) {
                    try {
                        level = fast.run(t, depth);
                        if (level < 0) level = fast.run(t);
                    } catch (const CapError&) {
                        level = balance_violation_level(BooleanFunction::from_packed(k, t));
                    }
                } else {
                    level = balance_violation_level(BooleanFunction::from_packed(k, t), depth);
                }
                bool almost = level == 0;
                bool undecided = level < 0;
                if (almost) {
                    acc.almost += 1;
                    if (f1 == 1) acc.almost_f1 += 1;
                } else if (undecided) {
                    acc.undecided += 1;
                }
                if (!n_rows) continue;
                int last_n = (almost || undecided) ? spec.n_max
                                                   : std::min(spec.n_max, level + k - 2);
                if (last_n < k) continue;
                BooleanFunction f = BooleanFunction::from_packed(k, t);
                int deg = degree(f);
                for (int n = k; n <= last_n; ++n) {
                    std::size_t r = static_cast<std::size_t>(n - k);
                    acc.potential[r] += 1;
                    if (f0 != f1) acc.f01[r] += 1;
                    if (is_bijective(f, n)) {
                        acc.lifting[r] += 1;
                        if (deg >= 1 && deg <= 8) acc.by_degree[r][deg - 1] += 1;
                    }
                }
            }
        });
        for (const auto& part : local) st.totals.merge(part);
        st.next_index = block_end;
        if (checkpoint) write_checkpoint(checkpoint->path, spec, st);
    }

    SweepResult result;
    result.almost_count = st.totals.almost;
    result.almost_f1_count = st.totals.almost_f1;
    result.candidates = st.totals.candidates;
    for (int n = k; n <= spec.n_max; ++n) {
        std::size_t r = static_cast<std::size_t>(n - k);
        CountRow row;
        row.n = n;
        row.potential_count = st.totals.potential[r];
        row.f0_neq_f1_count = st.totals.f01[r];
        row.lifting_count = st.totals.lifting[r];
        row.lifting_by_degree.assign(st.totals.by_degree[r].begin(),
                                     st.totals.by_degree[r].begin() + std::max(1, k - 1));
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::vector<CountRow> enumerate_rows(const SearchSpec& spec, unsigned jobs,
                                     const std::optional<CheckpointConfig>& checkpoint) {
    if (spec.n_max < spec.k) throw InputError("enumerate_rows: n_max must be at least k");
    return run_sweep(spec, jobs, checkpoint).rows;
}

std::uint64_t count_almost_lifting_classes(int k, unsigned jobs,
                                           const std::optional<CheckpointConfig>& checkpoint) {
    SearchSpec spec;
    spec.k = k;
    spec.n_max = 0;
    spec.count_mode = SearchSpec::CountMode::equivalence_classes;
    return run_sweep(spec, jobs, checkpoint).almost_count;
}

std::pair<std::uint64_t, std::uint64_t> count_s_k(int k, std::optional<int> n_cutoff, unsigned jobs,
                                                  const std::optional<CheckpointConfig>& checkpoint) {
    SearchSpec spec;
    spec.k = k;
    spec.n_max = 0;
    spec.require_f0_zero = true;
    spec.count_mode = SearchSpec::CountMode::functions;
    if (n_cutoff) {
        // Finite cutoff: count survivors of the staged filter at n_cutoff
        // instead of members of the limit set.
        if (*n_cutoff < k) throw InputError("count_s_k: n_cutoff < k");
        spec.n_max = *n_cutoff;
        auto result = run_sweep(spec, jobs, checkpoint);
        // Survivor counts at the last row, split by f(1..1), are not part of
        // CountRow; rerun the cheap way: survivors at cutoff = potential
        // count at the final row. The f1 split needs its own pass.
        SearchSpec spec_f1 = spec;
        spec_f1.require_f0_neq_f1 = true;  // with f0 = 0 this forces f1 = 1
        auto result_f1 = run_sweep(spec_f1, jobs);
        return {result.rows.back().potential_count, result_f1.rows.back().potential_count};
    }
    auto result = run_sweep(spec, jobs, checkpoint);
    return {result.almost_count, result.almost_f1_count};
}

BigUint s_k_lower_bound(int k) {
    if (k < 2 || k > 8) throw InputError("s_k_lower_bound: k in [2, 8]");
    BigUint main = BigUint::pow2(1ull << (k - 1));
    BigUint sub = BigUint::pow2((1ull << (k - 2)) - 1).mul_small(3);
    return main - sub;
}

PermutiveSetSizes permutive_sets_sizes(int k) {
    if (k < 2 || k > 8) throw InputError("permutive_sets_sizes: k in [2, 8]");
    PermutiveSetSizes s;
    s.t = BigUint::pow2((1ull << (k - 1)) + 1) - BigUint::pow2(1ull << (k - 2)).mul_small(3);
    std::uint64_t floor_2_km3 = k >= 3 ? (1ull << (k - 3)) : 0;
    s.t_c = (BigUint::pow2((1ull << (k - 2)) + 1) - BigUint::pow2(floor_2_km3).mul_small(3))
                .mul_small(2);
    if (k % 2 == 0) {
        std::uint64_t e = ((1ull << (k - 2)) + (1ull << (k / 2 - 1))) / 2;
        s.t_r = BigUint::pow2(e);
        s.t_rc = BigUint::pow2(e);
    } else {
        s.t_r = BigUint::pow2(((1ull << (k - 2)) + (1ull << ((k - 1) / 2))) / 2);
        s.t_rc = BigUint::pow2((1ull << (k - 2)) / 2).mul_small(2);
    }
    return s;
}

BigUint permutive_class_count(int k) {
    PermutiveSetSizes s = permutive_sets_sizes(k);
    BigUint total = s.t + s.t_r + s.t_c + s.t_rc;
    return total.div_small(8);
}

std::string count_rows_csv(const std::vector<CountRow>& rows, int k) {
    std::ostringstream os;
    os << "n,potential,f0_neq_f1,liftings";
    for (int d = 1; d <= std::max(1, k - 1); ++d) os << ",deg" << d;
    os << "\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.potential_count << ',' << r.f0_neq_f1_count << ',' << r.lifting_count;
        for (auto v : r.lifting_by_degree) os << ',' << v;
        os << "\n";
    }
    return os.str();
}

std::string count_rows_markdown(const std::vector<CountRow>& rows, int k) {
    std::ostringstream os;
    os << "| n | #potential | f(0) != f(1) | #liftings |";
    for (int d = 1; d <= std::max(1, k - 1); ++d) os << " deg = " << d << " |";
    os << "\n|---|---|---|---|";
    for (int d = 1; d <= std::max(1, k - 1); ++d) os << "---|";
    os << "\n";
    for (const auto& r : rows) {
        os << "| " << r.n << " | " << r.potential_count << " | " << r.f0_neq_f1_count << " | "
           << r.lifting_count << " |";
        for (auto v : r.lifting_by_degree) os << ' ' << v << " |";
        os << "\n";
    }
    return os.str();
}

std::vector<CountRow> parse_count_rows_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<CountRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        CountRow r;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::uint64_t> vals;
        while (std::getline(ls, cell, ',')) vals.push_back(std::stoull(cell));
        if (vals.size() < 4) throw InputError("bad CSV row: " + line);
        r.n = static_cast<int>(vals[0]);
        r.potential_count = vals[1];
        r.f0_neq_f1_count = vals[2];
        r.lifting_count = vals[3];
        r.lifting_by_degree.assign(vals.begin() + 4, vals.end());
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace liftinglab

#include "liftinglab/induced.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "liftinglab/parallel.hpp"

namespace liftinglab {

namespace {

void check_range(const BooleanFunction& f, int n, int cap, const char* what) {
    if (n < f.arity())
        throw InputError(std::string(what) + ": n must be at least the arity " +
                         std::to_string(f.arity()));
    if (n > cap)
        throw CapError(std::string(what) + ": n = " + std::to_string(n) +
                       " exceeds the cap " + std::to_string(cap));
}

}  // namespace

InducedEvaluator::InducedEvaluator(const BooleanFunction& f, int n) : k_(f.arity()), n_(n) {
    check_range(f, n, kMaxTableBits, "induced evaluator");
    f_lut_.assign(f.truth_table().begin(), f.truth_table().end());
    full_chunks_ = n_ >= 8 ? n_ / 8 : 0;
    tail_bits_ = n_ - 8 * full_chunks_;
    if (full_chunks_ > 0) {
        std::uint32_t lut_size = 1u << (k_ + 7);
        std::uint32_t kmask = (1u << k_) - 1;
        chunk_lut_.assign(lut_size, 0);
        for (std::uint32_t v = 0; v < lut_size; ++v) {
            std::uint8_t out = 0;
            for (int t = 0; t < 8; ++t)
                out |= static_cast<std::uint8_t>(f_lut_[(v >> (7 - t)) & kmask]) << (7 - t);
            chunk_lut_[v] = out;
        }
    }
}

std::uint32_t InducedEvaluator::operator()(std::uint32_t x) const {
    // ext carries x_1..x_n followed by x_1..x_{k-1}; the window for output
    // bit i is ext >> (n - i), masked to k bits.
    std::uint64_t ext = (static_cast<std::uint64_t>(x) << (k_ - 1)) |
                        (k_ > 1 ? (x >> (n_ - k_ + 1)) : 0);
    std::uint64_t y = 0;
    std::uint32_t slice_mask = (1u << (k_ + 7)) - 1;
    for (int c = 0; c < full_chunks_; ++c) {
        int low = n_ - 8 * (c + 1);  // lowest ext position of this chunk's windows
        y = (y << 8) | chunk_lut_[(ext >> low) & slice_mask];
    }
    std::uint32_t kmask = (1u << k_) - 1;
    for (int t = 0; t < tail_bits_; ++t) {
        int i = 8 * full_chunks_ + t + 1;
        y = (y << 1) | f_lut_[(ext >> (n_ - i)) & kmask];
    }
    return static_cast<std::uint32_t>(y);
}

SboxTable induce_cyclic(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxTableBits, "induce_cyclic");
    InducedEvaluator eval(f, n);
    std::vector<std::uint32_t> table(1ull << n);
    parallel_ranges(0, table.size(), default_jobs(),
                    [&](unsigned, std::uint64_t b, std::uint64_t e) {
                        for (std::uint64_t x = b; x < e; ++x)
                            table[x] = eval(static_cast<std::uint32_t>(x));
                    });
    return SboxTable{n, f, std::move(table)};
}

std::uint32_t apply_open(const BooleanFunction& f, int m, std::uint32_t x) {
    const int k = f.arity();
    if (m < k) throw InputError("apply_open: m must be at least the arity");
    if (m - k + 1 > kMaxOpenOutputBits || m > kMaxOpenOutputBits)
        throw CapError("apply_open: m too large");
    std::uint32_t kmask = (1u << k) - 1;
    std::uint32_t y = 0;
    for (int i = 1; i <= m - k + 1; ++i)
        y = (y << 1) | static_cast<std::uint32_t>(f.value_at((x >> (m - k + 1 - i)) & kmask));
    return y;
}

bool open_balanced(const BooleanFunction& f, int m) {
    const int k = f.arity();
    if (m < k) throw InputError("open_balanced: m must be at least the arity");
    if (m > kMaxOpenOutputBits) throw CapError("open_balanced: m too large");
    const int out_bits = m - k + 1;
    std::vector<std::uint32_t> hist(1u << out_bits, 0);
    std::uint32_t kmask = (1u << k) - 1;
    const auto& tt = f.truth_table();
    for (std::uint64_t x = 0; x < (1ull << m); ++x) {
        std::uint32_t y = 0;
        for (int i = 1; i <= out_bits; ++i)
            y = (y << 1) | tt[(x >> (out_bits - i)) & kmask];
        ++hist[y];
    }
    std::uint32_t target = 1u << (k - 1);
    return std::all_of(hist.begin(), hist.end(), [target](std::uint32_t c) { return c == target; });
}

namespace {

std::vector<std::uint32_t> preimage_histogram(const BooleanFunction& f, int n) {
    InducedEvaluator eval(f, n);
    std::vector<std::uint32_t> hist(1ull << n, 0);
    for (std::uint64_t x = 0; x < hist.size(); ++x)
        ++hist[eval(static_cast<std::uint32_t>(x))];
    return hist;
}

}  // namespace

PreimageDistribution preimage_distribution(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxTableBits, "preimage_distribution");
    auto hist = preimage_histogram(f, n);
    std::uint32_t max_count = *std::max_element(hist.begin(), hist.end());
    std::vector<std::uint64_t> counts(max_count + 1, 0);
    for (auto c : hist) ++counts[c];
    std::uint64_t iota = counts[0];
    return PreimageDistribution{
        n, std::move(counts), max_count, iota,
        Rational(static_cast<std::int64_t>((1ull << n) - iota), static_cast<std::int64_t>(1ull << n))};
}

bool is_bijective(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxTableBits, "is_bijective");
    InducedEvaluator eval(f, n);
    std::vector<std::uint64_t> seen((1ull << n) / 64 + 1, 0);
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
        std::uint32_t y = eval(static_cast<std::uint32_t>(x));
        std::uint64_t& word = seen[y >> 6];
        std::uint64_t bit = 1ull << (y & 63);
        if (word & bit) return false;
        word |= bit;
    }
    return true;
}

std::vector<std::uint32_t> ddt(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxDdtBits, "ddt");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    std::vector<std::uint32_t> table(size * size, 0);
    parallel_ranges(0, size, default_jobs(), [&](unsigned, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t a = b; a < e; ++a) {
            std::uint32_t* row = table.data() + a * size;
            for (std::uint64_t x = 0; x < size; ++x)
                ++row[s.table[x ^ a] ^ s.table[x]];
        }
    });
    return table;
}

std::uint64_t du(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "du");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    unsigned jobs = default_jobs();
    std::vector<std::uint64_t> best(jobs, 0);
    parallel_ranges(1, size, jobs, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        std::vector<std::uint32_t> hist(size);
        std::uint64_t local = 0;
        for (std::uint64_t a = b; a < e; ++a) {
            std::memset(hist.data(), 0, size * sizeof(std::uint32_t));
            for (std::uint64_t x = 0; x < size; ++x)
                ++hist[s.table[x ^ a] ^ s.table[x]];
            for (auto c : hist)
                if (c > local) local = c;
        }
        best[w] = local;
    });
    return *std::max_element(best.begin(), best.end());
}

Rational dpu(const BooleanFunction& f, int n) {
    return Rational(static_cast<std::int64_t>(du(f, n)), static_cast<std::int64_t>(1ull << n));
}

namespace {

void fwht_i64(std::vector<std::int64_t>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                std::int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

std::uint64_t max_abs_nonzero_index(const std::vector<std::int64_t>& v) {
    std::uint64_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::uint64_t a = static_cast<std::uint64_t>(v[i] < 0 ? -v[i] : v[i]);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace

LinearityResult lat_and_linearity(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "lat_and_linearity");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    unsigned jobs = default_jobs();
    struct Best {
        std::int64_t abs = -1;
        std::uint32_t a = 0, b = 0;
    };
    std::vector<Best> bests(jobs);
    parallel_ranges(1, size, jobs, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> spec(size);
        Best local;
        for (std::uint64_t b = lo; b < hi; ++b) {
            for (std::uint64_t x = 0; x < size; ++x)
                spec[x] = (std::popcount(static_cast<std::uint32_t>(b) & s.table[x]) & 1) ? -1 : 1;
            fwht_i64(spec);
            for (std::uint64_t a = 0; a < size; ++a) {
                std::int64_t v = spec[a] < 0 ? -spec[a] : spec[a];
                if (v > local.abs) {
                    local.abs = v;
                    local.a = static_cast<std::uint32_t>(a);
                    local.b = static_cast<std::uint32_t>(b);
                }
            }
        }
        bests[w] = local;
    });
    Best overall;
    for (const auto& cand : bests)
        if (cand.abs > overall.abs) overall = cand;
    int nl = static_cast<int>(((1ll << n) - overall.abs) / 2);
    std::int64_t num = (1ll << n) - 2 * nl;
    Rational lpu = Rational(num, 1ll << n) * Rational(num, 1ll << n);
    return LinearityResult{nl, lpu, overall.a, overall.b, overall.abs};
}

std::uint64_t sbox_balancedness(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "sbox_balancedness");
    auto hist32 = preimage_histogram(f, n);
    std::vector<std::int64_t> h(hist32.begin(), hist32.end());
    fwht_i64(h);
    return max_abs_nonzero_index(h);
}

std::uint64_t strict_avalanche(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "strict_avalanche");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    unsigned jobs = default_jobs();
    std::vector<std::uint64_t> best(jobs, 0);
    parallel_ranges(0, n, jobs, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        std::vector<std::int64_t> h(size);
        for (std::uint64_t i = b; i < e; ++i) {
            std::fill(h.begin(), h.end(), 0);
            std::uint32_t flip = 1u << i;
            for (std::uint64_t x = 0; x < size; ++x)
                ++h[s.table[x] ^ s.table[x ^ flip]];
            fwht_i64(h);
            best[w] = std::max(best[w], max_abs_nonzero_index(h));
        }
    });
    return *std::max_element(best.begin(), best.end());
}

std::uint64_t collision_difference(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "collision_difference");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    unsigned jobs = default_jobs();
    std::vector<std::uint64_t> best(jobs, 0);
    parallel_ranges(1, size, jobs, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t a = b; a < e; ++a) {
            std::uint64_t count = 0;
            for (std::uint64_t x = 0; x < size; ++x)
                if (s.table[x] == s.table[x ^ a]) ++count;
            best[w] = std::max(best[w], count);
        }
    });
    return *std::max_element(best.begin(), best.end());
}

int branch_number(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxDdtBits, "branch_number");
    SboxTable s = induce_cyclic(f, n);
    const std::uint64_t size = 1ull << n;
    unsigned jobs = default_jobs();
    std::vector<int> best(jobs, 2 * n);
    parallel_ranges(1, size, jobs, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t a = b; a < e; ++a) {
            int min_out = 2 * n;
            for (std::uint64_t x = 0; x < size; ++x) {
                int wt = std::popcount(s.table[x ^ a] ^ s.table[x]);
                if (wt < min_out) min_out = wt;
                if (min_out == 0) break;
            }
            int total = std::popcount(static_cast<std::uint32_t>(a)) + min_out;
            if (total < best[w]) best[w] = total;
        }
    });
    return *std::min_element(best.begin(), best.end());
}

CryptoMetrics metrics_report(const BooleanFunction& f, int n) {
    check_range(f, n, kMaxScanBits, "metrics_report");
    CryptoMetrics m;
    m.n = n;
    m.du = du(f, n);
    m.dpu = Rational(static_cast<std::int64_t>(m.du), 1ll << n);
    auto lin = lat_and_linearity(f, n);
    m.nl_f = lin.nl;
    m.lpu = lin.lpu;
    m.degree_f = degree(f);
    if (n <= kMaxDdtBits) m.branch_number = branch_number(f, n);
    m.sbox_balancedness = sbox_balancedness(f, n);
    m.strict_avalanche = strict_avalanche(f, n);
    m.collision_difference = collision_difference(f, n);
    auto dist = preimage_distribution(f, n);
    m.ell_n = dist.ell_n;
    m.iota = dist.iota;
    m.image_ratio = dist.image_ratio;
    return m;
}

}  // namespace liftinglab

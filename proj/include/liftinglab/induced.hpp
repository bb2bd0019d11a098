#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liftinglab/boolean_function.hpp"
#include "liftinglab/rational.hpp"

namespace liftinglab {

// Size caps. Everything above these is refused with CapError so desk runs
// stay in the minutes range.
inline constexpr int kMaxTableBits = 24;   // full 2^n lookup tables
inline constexpr int kMaxScanBits = 14;    // du / linearity / balancedness scans
inline constexpr int kMaxDdtBits = 12;     // stored DDT, branch number
inline constexpr int kMaxLiftingSetBits = 20;
inline constexpr int kMaxOpenOutputBits = 26;

// Evaluates the cyclic induced map F on n bits without materializing the
// table: output bits are produced eight at a time from a small per-(f,n)
// window LUT.
class InducedEvaluator {
  public:
    InducedEvaluator(const BooleanFunction& f, int n);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint32_t operator()(std::uint32_t x) const;

  private:
    int k_;
    int n_;
    int full_chunks_;
    int tail_bits_;
    std::vector<std::uint8_t> chunk_lut_;  // (k-1+8)-bit window -> 8 output bits
    std::vector<std::uint8_t> f_lut_;
};

// The induced cyclic map F: F_2^n -> F_2^n as a full lookup table.
// table[enc(x)] = F(x); output bit i sits at the significance of x_i.
struct SboxTable {
    int n;
    BooleanFunction f;
    std::vector<std::uint32_t> table;
};

// Preimage-size distribution of F: counts[j] = #outputs with exactly j
// preimages.
struct PreimageDistribution {
    int n;
    std::vector<std::uint64_t> counts;
    std::uint64_t ell_n;        // max j with counts[j] > 0
    std::uint64_t iota;         // counts[0]
    Rational image_ratio;       // (2^n - iota) / 2^n
};

struct LinearityResult {
    int nl;                     // NL(F)
    Rational lpu;               // (1 - NL/2^{n-1})^2
    std::uint32_t best_a;       // argmax |correlation|
    std::uint32_t best_b;
    std::int64_t max_abs_sum;   // |sum_x (-1)^{a.x + b.F(x)}| at the argmax
};

struct CryptoMetrics {
    int n;
    std::uint64_t du;
    Rational dpu;
    int nl_f;                   // NL(F)
    Rational lpu;
    int degree_f;               // = degree of the generating Boolean function
    std::optional<int> branch_number;  // absent when n > kMaxDdtBits
    std::uint64_t sbox_balancedness;
    std::uint64_t strict_avalanche;
    std::uint64_t collision_difference;
    std::uint64_t ell_n;
    std::uint64_t iota;
    Rational image_ratio;
};

SboxTable induce_cyclic(const BooleanFunction& f, int n);

// The open (non-wraparound) map F_(m): F_2^m -> F_2^{m-k+1} applied to one
// input, and its balancedness (every output hit exactly 2^{k-1} times).
std::uint32_t apply_open(const BooleanFunction& f, int m, std::uint32_t x);
bool open_balanced(const BooleanFunction& f, int m);

PreimageDistribution preimage_distribution(const BooleanFunction& f, int n);
bool is_bijective(const BooleanFunction& f, int n);

std::vector<std::uint32_t> ddt(const BooleanFunction& f, int n);  // 2^n * 2^n, row-major
std::uint64_t du(const BooleanFunction& f, int n);
Rational dpu(const BooleanFunction& f, int n);

LinearityResult lat_and_linearity(const BooleanFunction& f, int n);

std::uint64_t sbox_balancedness(const BooleanFunction& f, int n);
std::uint64_t strict_avalanche(const BooleanFunction& f, int n);
std::uint64_t collision_difference(const BooleanFunction& f, int n);

// min over x != y of wt(x xor y) + wt(F(x) xor F(y)); collisions contribute
// with output weight 0.
int branch_number(const BooleanFunction& f, int n);

CryptoMetrics metrics_report(const BooleanFunction& f, int n);

}  // namespace liftinglab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liftinglab/anf_parser.hpp"
#include "liftinglab/induced.hpp"
#include "oracles.hpp"

using namespace liftinglab;

namespace {

BooleanFunction chi() { return parse_anf("x1 + (x2 + 1)x3"); }
BooleanFunction patt() { return parse_anf("x2 + x1(x3 + 1)x4"); }

std::uint32_t rotr(std::uint32_t x, int n) {
    return ((x >> 1) | (x << (n - 1))) & ((1u << n) - 1);
}

}  // namespace

TEST_CASE("induced table matches the window definition") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        int n = k + static_cast<int>(rng() % 7);
        BooleanFunction f = oracle::random_function(k, rng);
        SboxTable s = induce_cyclic(f, n);
        for (int probe = 0; probe < 50; ++probe) {
            std::uint32_t x = static_cast<std::uint32_t>(rng() & ((1u << n) - 1));
            if (s.table[x] != oracle::cyclic_image(f, x, n))
                FAIL("window mismatch at k=", k, " n=", n, " x=", x);
        }
    }
}

TEST_CASE("shift invariance: F(sigma x) = sigma F(x)") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        int n = k + static_cast<int>(rng() % 8);
        BooleanFunction f = oracle::random_function(k, rng);
        SboxTable s = induce_cyclic(f, n);
        for (std::uint32_t x = 0; x < (1u << n); ++x)
            if (s.table[rotr(x, n)] != rotr(s.table[x], n))
                FAIL("not shift invariant at k=", k, " n=", n, " x=", x);
    }
}

TEST_CASE("induce_cyclic basic shapes and errors") {
    CHECK(is_bijective(chi(), 3));
    CHECK_FALSE(is_bijective(chi(), 4));
    // f = x1 induces the identity
    SboxTable id = induce_cyclic(parse_anf("x1"), 4);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(id.table[x] == x);
    CHECK_THROWS_AS(induce_cyclic(patt(), 3), InputError);
    CHECK_THROWS_AS(induce_cyclic(chi(), 25), CapError);
}

TEST_CASE("open map and balancedness") {
    // m = k degenerates to f itself
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        BooleanFunction f = oracle::random_function(k, rng);
        CHECK(open_balanced(f, k) == is_balanced(f));
    }
    CHECK(open_balanced(chi(), 4));
    CHECK_FALSE(open_balanced(parse_anf("x1 x2"), 2));
    // against the bit-vector oracle
    for (int trial = 0; trial < 10; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int m = k + static_cast<int>(rng() % 4);
        BooleanFunction f = oracle::random_function(k, rng);
        for (std::uint32_t x = 0; x < (1u << m); ++x)
            if (apply_open(f, m, x) != oracle::open_image(f, x, m))
                FAIL("open image mismatch k=", k, " m=", m, " x=", x);
    }
    CHECK_THROWS_AS(apply_open(chi(), 2, 0), InputError);
}

TEST_CASE("preimage distribution") {
    auto d = preimage_distribution(chi(), 4);
    CHECK(d.counts == std::vector<std::uint64_t>{4, 9, 2, 1});
    CHECK(d.ell_n == 3);
    CHECK(d.iota == 4);
    CHECK(d.image_ratio == Rational(3, 4));

    for (int n = 4; n <= 12; ++n) {
        auto dp = preimage_distribution(patt(), n);
        CHECK(dp.ell_n == 1);
        CHECK(dp.iota == 0);
    }

    // double-count identities and the ell/iota bounds
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        int n = k + static_cast<int>(rng() % 7);
        BooleanFunction f = oracle::random_function(k, rng);
        auto dist = preimage_distribution(f, n);
        std::uint64_t total = 0, weighted = 0;
        for (std::size_t j = 0; j < dist.counts.size(); ++j) {
            total += dist.counts[j];
            weighted += j * dist.counts[j];
        }
        CHECK(total == 1ull << n);
        CHECK(weighted == 1ull << n);
        std::uint64_t pow = 1ull << n;
        // pow/(pow - iota) <= ell <= iota + 1, ell - 1 <= iota <= pow(1 - 1/ell)
        CHECK(dist.ell_n * (pow - dist.iota) >= pow);
        CHECK(dist.ell_n <= dist.iota + 1);
        CHECK(dist.ell_n - 1 <= dist.iota);
        CHECK(dist.iota * dist.ell_n <= pow * (dist.ell_n - 1));
    }
}

TEST_CASE("collision counts of the example function") {
    BooleanFunction g = parse_anf("x1 + x2(x3 + x4 + 1)");
    std::vector<std::uint64_t> expected{4, 2, 4, 2, 4, 2, 3, 2, 4};
    for (int n = 4; n <= 12; ++n)
        CHECK(preimage_distribution(g, n).ell_n == expected[static_cast<std::size_t>(n - 4)]);
}

TEST_CASE("ddt and differential uniformity") {
    BooleanFunction a1 = parse_anf("x1 + x2(x3 + 1)");
    std::vector<std::uint64_t> dus;
    for (int n = 3; n <= 9; ++n) dus.push_back(du(a1, n));
    CHECK(dus == std::vector<std::uint64_t>{2, 4, 8, 16, 32, 64, 128});
    CHECK(dpu(parse_anf("x1 + x2(x3 + x4)"), 9) == Rational(1, 8));

    // row sums partition the inputs; table maximum matches the streaming du
    std::mt19937_64 rng(59);
    BooleanFunction f = oracle::random_full_diameter(4, rng);
    int n = 7;
    auto table = ddt(f, n);
    std::uint64_t size = 1ull << n, best = 0;
    for (std::uint64_t a = 0; a < size; ++a) {
        std::uint64_t row = 0;
        for (std::uint64_t b = 0; b < size; ++b) row += table[a * size + b];
        CHECK(row == size);
        if (a)
            for (std::uint64_t b = 0; b < size; ++b)
                best = std::max(best, static_cast<std::uint64_t>(table[a * size + b]));
    }
    CHECK(best == du(f, n));
    CHECK_THROWS_AS(ddt(chi(), 13), CapError);
    CHECK_THROWS_AS(du(chi(), 15), CapError);
}

TEST_CASE("du ignores linear terms and respects the nonlinear-variable bound") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        int n = k + static_cast<int>(rng() % (9 - k));
        BooleanFunction f = oracle::random_function(k, rng);
        int j = 1 + static_cast<int>(rng() % k);
        // f + x_j
        std::vector<std::uint8_t> tt = f.truth_table();
        for (std::uint32_t x = 0; x < tt.size(); ++x)
            tt[x] ^= static_cast<std::uint8_t>((x >> (k - j)) & 1);
        BooleanFunction g(k, std::move(tt));
        CHECK(du(f, n) == du(g, n));

        // variables occurring in some monomial of size >= 2
        auto anf = anf_of(f);
        int nonlinear = 0;
        for (int v = 1; v <= k; ++v) {
            for (auto mask : anf.monomials()) {
                if ((mask & (1u << (v - 1))) && std::popcount(mask) >= 2) {
                    ++nonlinear;
                    break;
                }
            }
        }
        CHECK(du(f, n) >= (1ull << n) >> nonlinear);
    }
}

TEST_CASE("linearity") {
    BooleanFunction a1 = parse_anf("x1 + x2(x3 + 1)");
    for (int n = 3; n <= 9; ++n) {
        auto lin = lat_and_linearity(a1, n);
        CHECK(lin.nl == (1 << (n - 2)));
        CHECK(lin.lpu == Rational(1, 4));
    }
    CHECK(lat_and_linearity(parse_anf("x2 + x3 + x4(x1 + x2)(x3 + 1)"), 8).lpu == Rational(9, 16));
    // identity map: fully linear
    auto lin = lat_and_linearity(parse_anf("x1"), 6);
    CHECK(lin.nl == 0);
    CHECK(lin.lpu == Rational(1));
    CHECK(lin.max_abs_sum == 64);
}

TEST_CASE("balancedness, avalanche, collision difference") {
    BooleanFunction a1 = parse_anf("x1 + x2(x3 + 1)");
    // bijective at odd n
    CHECK(sbox_balancedness(a1, 5) == 0);
    CHECK(sbox_balancedness(parse_anf("x1"), 6) == 0);
    CHECK(sbox_balancedness(a1, 6) == 16);
    CHECK(sbox_balancedness(a1, 8) == 32);
    CHECK(sbox_balancedness(a1, 10) == 64);

    // the formula's max over all (v, i) pairs; the identity map flips
    // deterministically
    CHECK(strict_avalanche(parse_anf("x1"), 4) == 16);
    for (int n = 3; n <= 8; ++n) CHECK(strict_avalanche(a1, n) == 1ull << n);

    CHECK(collision_difference(a1, 5) == 0);
    CHECK(collision_difference(patt(), 8) == 0);
    CHECK(collision_difference(a1, 6) == 8);
    CHECK(collision_difference(a1, 8) == 16);
    CHECK(collision_difference(a1, 10) == 32);

    // collision difference equals the DDT column-0 maximum
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        BooleanFunction f = oracle::random_function(3, rng);
        int n = 6;
        auto table = ddt(f, n);
        std::uint64_t best = 0;
        for (std::uint64_t a = 1; a < (1u << n); ++a)
            best = std::max(best, static_cast<std::uint64_t>(table[a << n]));
        CHECK(collision_difference(f, n) == best);
    }
}

TEST_CASE("avalanche values are even and bounded") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int n = k + static_cast<int>(rng() % 5);
        BooleanFunction f = oracle::random_function(k, rng);
        std::uint64_t v = strict_avalanche(f, n);
        CHECK(v <= 1ull << n);
        CHECK(v % 2 == 0);
    }
}

TEST_CASE("branch number") {
    BooleanFunction a1 = parse_anf("x1 + x2(x3 + 1)");
    for (int n = 4; n <= 9; ++n) CHECK(branch_number(a1, n) == 2);
    BooleanFunction c2 = parse_anf("x1 + x4 + x3(x2 + x4 + x2 x4)");
    // collisions at weight-2 differences pull the minimum down to 2 at
    // n = 4 and 6; elsewhere the value is 3
    std::vector<int> got;
    for (int n = 4; n <= 9; ++n) got.push_back(branch_number(c2, n));
    CHECK(got == std::vector<int>{2, 3, 2, 3, 3, 3});

    // any collision bounds the branch number by the input weight
    BooleanFunction f = parse_anf("x1 x2");  // far from bijective
    int n = 5;
    SboxTable s = induce_cyclic(f, n);
    int wt_bound = 2 * n;
    for (std::uint32_t a = 1; a < (1u << n); ++a)
        for (std::uint32_t x = 0; x < (1u << n); ++x)
            if (s.table[x] == s.table[x ^ a]) {
                wt_bound = std::min(wt_bound, std::popcount(a));
                break;
            }
    CHECK(branch_number(f, n) <= wt_bound);
    CHECK_THROWS_AS(branch_number(chi(), 13), CapError);
}

TEST_CASE("metrics report aggregates consistently") {
    BooleanFunction b2 = parse_anf("x1 + x2(x3 + x4 + 1)");
    CryptoMetrics m = metrics_report(b2, 8);
    CHECK(m.dpu == Rational(1, 8));
    CHECK(m.lpu == Rational(1, 4));
    CHECK(m.degree_f == 2);
    CHECK(m.du == 32);
    CHECK(m.branch_number.has_value());
    CHECK(*m.branch_number == 2);
    // lpu is derived from nl exactly
    std::int64_t num = (1 << 8) - 2 * m.nl_f;
    CHECK(m.lpu == Rational(num, 1 << 8) * Rational(num, 1 << 8));

    BooleanFunction e1 = parse_anf("x2 + x1(x4(x3 + 1) + (x4 + 1) x5(x2 + x3 + 1))");
    CryptoMetrics me = metrics_report(e1, 10);
    CHECK(me.image_ratio == Rational(1));
    CHECK(me.iota == 0);
    CHECK(me.ell_n == 1);
}

TEST_CASE("component degree equals the generator degree") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        int n = k + 1 + static_cast<int>(rng() % 3);  // n <= 8
        BooleanFunction f = oracle::random_full_diameter(k, rng);
        SboxTable s = induce_cyclic(f, n);
        int max_deg = 0;
        for (std::uint32_t v = 1; v < (1u << n); ++v) {
            std::vector<std::uint8_t> tt(1u << n);
            for (std::uint32_t x = 0; x < (1u << n); ++x)
                tt[x] = static_cast<std::uint8_t>(std::popcount(v & s.table[x]) & 1);
            max_deg = std::max(max_deg, degree(BooleanFunction(n, std::move(tt))));
        }
        CHECK(max_deg == degree(f));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liftinglab/anf_parser.hpp"
#include "liftinglab/classifier.hpp"
#include "oracles.hpp"

using namespace liftinglab;

namespace {

BooleanFunction chi() { return parse_anf("x1 + (x2 + 1)x3"); }
BooleanFunction patt() { return parse_anf("x2 + x1(x3 + 1)x4"); }

}  // namespace

TEST_CASE("transition matrices describe the de bruijn graph") {
    TransitionMatrices tm = transition_matrices(parse_anf("x1 + x2"));
    CHECK(tm.dim == 2);
    for (int u = 0; u < tm.dim; ++u) {
        std::uint32_t row = 0;
        for (int v = 0; v < tm.dim; ++v)
            row += tm.a[0][u * tm.dim + v] + tm.a[1][u * tm.dim + v];
        CHECK(row == 2);
    }
    CHECK_THROWS_AS(transition_matrices(parse_anf("x2", 3)), InputError);
}

TEST_CASE("product sums count open preimages") {
    // chi is an almost lifting, so every product of length <= 6 sums to 4
    TransitionMatrices tm = transition_matrices(chi());
    for (int len = 1; len <= 6; ++len) {
        for (std::uint32_t w = 0; w < (1u << len); ++w) {
            std::vector<std::uint8_t> word;
            for (int i = len - 1; i >= 0; --i)
                word.push_back(static_cast<std::uint8_t>((w >> i) & 1));
            CHECK(matrix_sum(word_matrix(tm, word)) == 4);
            CHECK(matrix_sum(word_matrix(tm, word)) ==
                  oracle::open_preimage_count(chi(), len + 2, w));
        }
    }
}

TEST_CASE("traces count cyclic preimages") {
    TransitionMatrices tm = transition_matrices(chi());
    auto counts = oracle::cyclic_preimages(chi(), 4);
    for (std::uint32_t y = 0; y < 16; ++y) {
        std::vector<std::uint8_t> word;
        for (int i = 3; i >= 0; --i) word.push_back(static_cast<std::uint8_t>((y >> i) & 1));
        std::uint64_t expect = counts.count(y) ? counts[y] : 0;
        CHECK(matrix_trace(tm, word_matrix(tm, word)) == expect);
    }
}

TEST_CASE("almost lifting decisions with witnesses") {
    CHECK(decide_almost_lifting(chi()).is_almost);
    CHECK(decide_almost_lifting(patt()).is_almost);

    auto bad = decide_almost_lifting(parse_anf("x1 x2"));
    CHECK_FALSE(bad.is_almost);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->m == 2);
    CHECK(verify_witness(parse_anf("x1 x2"), *bad.witness));

    // every rejection carries a brute-force-verifiable witness
    std::mt19937_64 rng(79);
    int rejected = 0;
    while (rejected < 25) {
        BooleanFunction f = oracle::random_full_diameter(4, rng);
        auto d = decide_almost_lifting(f);
        if (d.is_almost) continue;
        ++rejected;
        REQUIRE(d.witness.has_value());
        if (!verify_witness(f, *d.witness)) FAIL("witness failed for ", f.to_hex());
    }
}

TEST_CASE("permutive functions of full diameter are almost liftings") {
    std::mt19937_64 rng(83);
    int found = 0;
    while (found < 25) {
        BooleanFunction f = oracle::random_function(4, rng);
        if (diameter(f) != 4 || is_permutive(f) == Permutivity::none) continue;
        ++found;
        CHECK(decide_almost_lifting(f).is_almost);
    }
}

TEST_CASE("decision agrees with open balancedness (small exhaustive)") {
    for (std::uint64_t t = 0; t < 256; ++t) {
        BooleanFunction f = BooleanFunction::from_packed(3, t);
        int level = balance_violation_level(f);
        bool balanced_through_10 = true;
        for (int m = 3; m <= 10 && balanced_through_10; ++m)
            balanced_through_10 = oracle::open_balanced(f, m);
        // stage counts for k = 3 stabilize by m = 6, so depth 10 decides
        CHECK((level == 0) == balanced_through_10);
    }
}

TEST_CASE("proper lifting decisions") {
    CHECK(decide_proper_lifting(patt()));
    CHECK_FALSE(decide_proper_lifting(chi()));
    CHECK(decide_proper_lifting(parse_anf("x1")));
    CHECK_FALSE(decide_proper_lifting(parse_anf("x1 x2")));
    CHECK(decide_proper_lifting(parse_anf("x2 + x1 x3(x4 + 1)(x5 + 1)")));
}

TEST_CASE("exact collision bounds") {
    CHECK(ell_exact(chi()) == 3);
    CHECK(ell_exact(patt()) == 1);
    CHECK(ell_exact(parse_anf("x1 + x2(x3 + x4 + 1)")) == 4);
    CHECK_THROWS_AS(ell_exact(parse_anf("x1 x2")), InputError);
}

TEST_CASE("exact ell matches the observed collision counts") {
    // once the closure is complete, the sup equals the max over observed n
    for (const char* expr : {"x1 + (x2 + 1)x3", "x2 + x1(x3 + 1)x4",
                             "x1 + x2(x3 + x4 + 1)", "x1 + x2 x3(x4 + 1)"}) {
        BooleanFunction f = parse_anf(expr);
        std::uint64_t ell = ell_exact(f);
        std::uint64_t observed = 0;
        for (int n = f.arity(); n <= 14; ++n)
            observed = std::max(observed, preimage_distribution(f, n).ell_n);
        CHECK(ell == observed);
    }
}

TEST_CASE("potential lifting predicates") {
    // monotone in n
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        BooleanFunction f = oracle::random_full_diameter(4, rng);
        bool prev = true;
        for (int n = 4; n <= 12; ++n) {
            bool now = is_potential_lifting(f, n);
            if (now && !prev) FAIL("monotonicity violated for ", f.to_hex());
            prev = now;
        }
    }
    // a lifting is a potential lifting
    CHECK(is_bijective(chi(), 7));
    CHECK(is_potential_lifting(chi(), 7));
    // almost lifting f is a potential (k, n, ell(f))-lifting
    BooleanFunction g = parse_anf("x1 + x2(x3 + x4 + 1)");
    CHECK(is_potential_l_lifting(g, 16, ell_exact(g)));
    CHECK_THROWS_AS(is_potential_l_lifting(g, 16, 1), InputError);
    // an unbalanced function is not potential even at n = k
    CHECK_FALSE(is_potential_lifting(parse_anf("x1 x2"), 2));
}

TEST_CASE("virtual lifting formula and predicate") {
    CHECK(virtual_iota_formula(2, 4) == 4);
    CHECK(virtual_iota_formula(3, 9) == 12);
    CHECK(virtual_iota_formula(3, 10) == 0);
    CHECK_THROWS_AS(virtual_iota_formula(0, 5), InputError);
    CHECK_THROWS_AS(virtual_iota_formula(3, 3), InputError);

    CHECK(is_virtual_lifting(chi(), 12));
    CHECK(is_virtual_lifting(parse_anf("x1 + x2(x3 + 1)(x4 + 1)"), 12));
    CHECK_FALSE(is_virtual_lifting(parse_anf("x1 + x2 x3"), 12));       // misses more outputs
    CHECK_FALSE(is_virtual_lifting(parse_anf("x1 + x2 + x3"), 12));     // linear
    CHECK_FALSE(is_virtual_lifting(patt(), 12));                        // proper, never misses
}

TEST_CASE("apn lifting predicate") {
    CHECK(is_apn_lifting(parse_anf("x1 + x2 x3"), 10));
    CHECK(is_apn_lifting(parse_anf("x1 + x2(x3 + x4)"), 10));
    CHECK_FALSE(is_apn_lifting(parse_anf("x1 + x2 x3 x4(x5 + 1)"), 9));
    CHECK_THROWS_AS(is_apn_lifting(parse_anf("x1 x2"), 6), InputError);
}

TEST_CASE("lifting n set") {
    CHECK(lifting_n_set(chi(), 13) == std::vector<int>{3, 5, 7, 9, 11, 13});
    CHECK(lifting_n_set(patt(), 13) == std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
    CHECK(lifting_n_set(parse_anf("x1 x2"), 8).empty());
    CHECK_THROWS_AS(lifting_n_set(chi(), 21), CapError);
}

TEST_CASE("classification verdicts") {
    Classification c = classify(chi(), 12);
    CHECK(c.verdict == Verdict::almost);
    CHECK(c.ell == 3);
    REQUIRE(c.pattern.has_value());
    CHECK(c.pattern->first == 3);
    CHECK(c.pattern->second == 2);
    CHECK(c.apn_lifting);
    CHECK(c.virtual_lifting);

    Classification p = classify(parse_anf("x2 + x1 x3(x4 + 1)(x5 + 1)"), 10);
    CHECK(p.verdict == Verdict::proper);
    CHECK(p.ell == 1);

    Classification v9 = classify(parse_anf("x1 + x2 x3 x4(x5 + 1)"), 16);
    CHECK(v9.verdict == Verdict::almost);
    REQUIRE(v9.pattern.has_value());
    CHECK(v9.pattern->first == 5);
    CHECK(v9.pattern->second == 4);

    Classification bad = classify(parse_anf("x1 x2"), 8);
    CHECK(bad.verdict == Verdict::not_almost);
    CHECK_FALSE(bad.ell.has_value());
    REQUIRE(bad.witness.has_value());
    CHECK(verify_witness(bad.f, *bad.witness));

    // nonperiodic data yields no pattern
    Classification b2 = classify(parse_anf("x1 + x2(x3 + x4 + 1)"), 16);
    CHECK_FALSE(b2.pattern.has_value());
    CHECK(b2.ell_n == std::vector<std::uint64_t>{4, 2, 4, 2, 4, 2, 3, 2, 4, 2, 3, 3, 4});
}

TEST_CASE("classification re-roots to the true diameter") {
    // x2 as a 3-bit function is the shifted identity
    Classification c = classify(parse_anf("x2", 3), 8);
    CHECK(c.f.arity() == 1);
    CHECK(c.verdict == Verdict::proper);
    CHECK_THROWS_AS(classify(BooleanFunction::constant(3, 0), 8), InputError);
}

TEST_CASE("verdict and metrics are elementary-equivalence invariants") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 12; ++trial) {
        BooleanFunction f = oracle::random_full_diameter(4, rng);
        auto base = decide_almost_lifting(f);
        for (const auto& g : elementary_orbit(f)) {
            if (diameter(g) != 4) FAIL("orbit changed the diameter");
            CHECK(decide_almost_lifting(g).is_almost == base.is_almost);
        }
        if (base.is_almost) {
            std::uint64_t ell = ell_exact(f);
            for (const auto& g : elementary_orbit(f)) CHECK(ell_exact(g) == ell);
        }
    }
}

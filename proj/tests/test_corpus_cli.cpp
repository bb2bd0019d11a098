#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "liftinglab/anf_parser.hpp"
#include "liftinglab/classifier.hpp"
#include "liftinglab/corpus.hpp"
#include "liftinglab/report.hpp"

using namespace liftinglab;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(LIFTINGLAB_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("candidate corpus recomputes to its stored k and degree") {
    for (const auto& entry : candidates()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        CHECK(diameter(f) == entry.k);
        CHECK(degree(f) == entry.deg);
    }
    CHECK(candidates().size() == 11);
    CHECK(candidate_function("A1").arity() == 3);
    CHECK_THROWS_AS(candidate_function("Z9"), InputError);
}

TEST_CASE("virtual and proper corpora recompute consistently") {
    CHECK(virtual_liftings().size() == 12);
    for (const auto& entry : virtual_liftings()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        CHECK(diameter(f) == entry.k);
        CHECK(degree(f) == entry.deg);
        CHECK(entry.differentials.size() == static_cast<std::size_t>(10 - entry.k));
    }
    CHECK(proper_liftings().size() == 6);
    for (const auto& entry : proper_liftings()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        CHECK(diameter(f) == entry.k);
        CHECK(degree(f) == entry.deg);
    }
}

TEST_CASE("k=6 representatives and apn generators") {
    for (const auto& anf : k6_degree2_reps()) {
        BooleanFunction f = parse_anf(anf, 6);
        CHECK(diameter(f) == 6);
        CHECK(degree(f) == 2);
        CHECK(is_bijective(f, 11));
        CHECK(is_bijective(f, 13));
        CHECK_FALSE(is_bijective(f, 12));
    }
    for (const auto& gen : apn_generators()) {
        BooleanFunction f = parse_anf(gen.anf, gen.k);
        CHECK(diameter(f) == gen.k);
        CHECK(degree(f) == 2);
        CHECK(is_permutive(f) != Permutivity::none);
    }
}

TEST_CASE("rational rendering") {
    CHECK(Rational(31, 32).decimal(2) == "0.97");
    CHECK(Rational(1).decimal(2) == "1.00");
    CHECK(Rational(9, 16).str() == "9/16");
    CHECK(Rational(439, 512).decimal(2) == "0.86");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(4, 8) == Rational(1, 2));
}

TEST_CASE("classification json carries the documented fields") {
    Classification c = classify(parse_anf("x1 + (x2 + 1)x3"), 10);
    auto j = nlohmann::json::parse(classification_json(c));
    CHECK(j["anf"] == "x1 \xe2\x8a\x95 x3 \xe2\x8a\x95 x2x3");
    CHECK(j["k"] == 3);
    CHECK(j["verdict"] == "almost");
    CHECK(j["ell"] == 3);
    CHECK(j["virtual"] == true);
    CHECK(j["apn"] == true);
    CHECK(j["ell_n"].size() == 8);
    CHECK(j["lifting_n_set"] == nlohmann::json({3, 5, 7, 9}));
    CHECK_FALSE(j.contains("witness"));

    Classification bad = classify(parse_anf("x1 + x2 x3 x4"), 8);
    auto jb = nlohmann::json::parse(classification_json(bad));
    CHECK(jb["verdict"] == "not_almost");
    CHECK(jb.contains("witness"));
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("classify \"x1 + x2(x3 + 1)\"").exit_code == 0);
    CHECK(run_cli("classify \"x1 + + x2\"").exit_code == 1);
    CHECK(run_cli("classify \"x1 + x2(x3 + 1)\" --n-max 24").exit_code == 2);
    CHECK(run_cli("enumerate --k 5 --n-max 5").exit_code == 2);  // without --long-running
}

TEST_CASE("cli renders the small tables") {
    auto comparison = run_cli("table comparison --format csv");
    CHECK(comparison.exit_code == 0);
    CHECK(comparison.output.find("3,4,4") != std::string::npos);
    CHECK(comparison.output.find("4,73,65") != std::string::npos);
    CHECK(comparison.output.find("16416") != std::string::npos);

    auto appendix = run_cli("table appendix-a --k 3 --n-max 5 --format csv");
    CHECK(appendix.exit_code == 0);
    CHECK(appendix.output.find("3,13,8,6,0,6") != std::string::npos);

    auto corpus = run_cli("corpus --format csv");
    CHECK(corpus.exit_code == 0);
    CHECK(corpus.output.find("candidates,A1") != std::string::npos);

    auto analyze = run_cli("analyze \"x1\" 1..4 --format json");
    CHECK(analyze.exit_code == 0);
    auto j = nlohmann::json::parse(analyze.output);
    CHECK(j["verdict"] == "proper");
    CHECK(j["per_n"].size() == 4);
}

#include "liftinglab/corpus.hpp"

#include "liftinglab/anf_parser.hpp"

namespace liftinglab {

const std::vector<CandidateEntry>& candidates() {
    static const std::vector<CandidateEntry> list = {
        {"A1", 3, "x1 + x2(x3 + 1)", 2, "1/4", "1/4", ".97", 2},
        {"A2", 3, "x1 + x2 x3", 2, "1/4", "1/4", ".87", 2},
        {"B1", 4, "x1 + x2(x3 + x4)", 2, "1/8", "1/4", ".84", 2},
        {"B2", 4, "x1 + x2(x3 + x4 + 1)", 2, "1/8", "1/4", ".86", 2},
        {"B3", 4, "x1 + x4(x2 + x3 + 1)", 2, "1/8", "1/4", ".83", 2},
        {"C1", 4, "x2 + x3 + x4(x1 + x2)(x3 + 1)", 3, "5/16", "9/16", ".90", 2},
        {"C2", 4, "x1 + x4 + x3(x2 + x4 + x2 x4)", 3, "5/16", "9/16", ".71", 3},
        {"D1", 5, "x2 + x3((x1 + x2)(x4 + 1) + x4 x5 + 1)", 3, "7/32", "1/4", ".95", 2},
        {"D2", 5, "x2 + x3(x1 + 1) + x4((x2 + 1)(x5 + 1) + x3(x1 + x5))", 3, "7/32", "1/4", ".95", 2},
        {"D3", 5, "x2 + x4(x5 + 1)(x1 + x3)", 3, "9/32", "9/16", ".95", 2},
        {"E1", 5, "x2 + x1(x4(x3 + 1) + (x4 + 1) x5(x2 + x3 + 1))", 4, "1/4", "25/64", "1", 2},
    };
    return list;
}

const std::vector<VirtualEntry>& virtual_liftings() {
    static const std::vector<VirtualEntry> list = {
        {3, "x1 + x2(x3 + 1)", 3, 2, 2, "1/4", {2, 4, 8, 16, 32, 64, 128}},
        {4, "x1 + x2 x3(x4 + 1)", 4, 3, 3, "9/16", {6, 14, 28, 56, 112, 224}},
        {4, "x1 + x2(x3 + 1)(x4 + 1)", 2, 3, 3, "9/16", {6, 14, 28, 56, 112, 224}},
        {5, "x2 + x1(x3 x4 + x5(x3 + x4 + 1))", 4, 3, 3, "9/16", {10, 24, 42, 80, 162}},
        {5, "x2 + x3((x1 + x2)(x4 + 1) + x4 x5 + 1)", 4, 3, 3, "1/4", {8, 14, 28, 56, 112}},
        {5, "x2 + x3(x1 + 1) + x4((x2 + 1)(x5 + 1) + x3(x1 + x5))", 4, 3, 3, "1/4",
         {8, 14, 28, 56, 112}},
        {5, "x3 + x4(x5(x2 + x3 + 1) + 1) + (x4 + 1)(x2 + x3(x1 + x2))", 4, 3, 3, "1",
         {10, 18, 44, 84, 168}},
        {5, "x2 + x4(x5 + 1)(x1 + x3)", 2, 3, 3, "9/16", {12, 24, 34, 72, 144}},
        {5, "x1 + x2 x3 x4(x5 + 1)", 5, 4, 4, "49/64", {18, 38, 78, 156, 312}},
        {5, "x1 + x2 x3(x4 + 1)(x5 + 1)", 2, 4, 4, "49/64", {22, 36, 74, 148, 296}},
        {5, "x1 + x2(x3 + 1)(x4 + 1)(x5 + 1)", 2, 4, 4, "49/64", {18, 38, 78, 156, 312}},
        {5, "x1 + x2(x3 + 1)(x4(x5 + 1) + 1)", 3, 4, 4, "25/64", {14, 24, 48, 96, 192}},
    };
    return list;
}

const std::vector<ProperEntry>& proper_liftings() {
    static const std::vector<ProperEntry> list = {
        {4, "x2 + x1(x3 + 1) x4", 3, "9/16", {6, 14, 30, 54, 108, 216}},
        {5, "x2 + x1 x3(x4 + 1)(x5 + 1)", 4, "49/64", {16, 34, 72, 148, 304}},
        {5, "x2 + x1(x3 + 1)(x4 + 1) x5", 4, "49/64", {22, 34, 72, 146, 286}},
        {5, "x2 + x1(x4(x3 + 1) + (x4 + 1) x5(x2 + x3 + 1))", 4, "25/64", {8, 18, 36, 68, 132}},
        {5, "x3 + x1 x2(x4 + 1) x5", 4, "49/64", {18, 40, 78, 152, 300}},
        {5, "x3 + x1(x2 + 1) x4(x5 + 1)", 4, "49/64", {22, 50, 74, 148, 304}},
    };
    return list;
}

const std::vector<ApnGenerator>& apn_generators() {
    static const std::vector<ApnGenerator> list = {
        {3, "x1 + x2 x3"},
        {4, "x1 + x2(x3 + x4)"},
        {5, "x1 + x2(x3 + x4 + x5) + x3 x5"},
        {6, "x1 + x2(x3 + x5) + x3(x4 + x5 + x6) + x4(x5 + x6)"},
    };
    return list;
}

const std::vector<std::string>& k6_degree2_reps() {
    static const std::vector<std::string> list = {
        "x1 + x2 + x3 + x2x3 + x2x5 + x2x6 + x3x4 + x3x5 + x4x5 + x4x6 + x5x6",
        "x1 + x2 + x3 + x5 + x2x3 + x4x5 + x5x6",
        "x1 + x3 + x4 + x5 + x2x3 + x3x4 + x5x6",
        "x1 + x4 + x5 + x2x3 + x2x4 + x2x6 + x3x4 + x3x5 + x3x6 + x4x5 + x5x6",
    };
    return list;
}

BooleanFunction candidate_function(const std::string& name) {
    for (const auto& entry : candidates())
        if (entry.name == name) return parse_anf(entry.anf, entry.k);
    throw InputError("unknown candidate '" + name + "'");
}

}  // namespace liftinglab

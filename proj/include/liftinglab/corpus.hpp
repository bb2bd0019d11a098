#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftinglab/boolean_function.hpp"

namespace liftinglab {

// Built-in function lists. Stored values (k, deg, dpu, lpu, differentials,
// collision patterns) mirror the published tables; corpus tests recompute
// each one from the ANF string.
struct CandidateEntry {
    std::string name;  // A1 .. E1
    int k;
    std::string anf;
    int deg;
    std::string dpu;  // exact rational, as printed in the summary table
    std::string lpu;
    std::string p2_n10;  // two-decimal image ratio at n = 10 ("1" for exact)
    int branch;          // stated differential branch number
};

struct VirtualEntry {
    int k;
    std::string anf;
    std::uint64_t ell_a;  // collision pattern (a, b): ell_n = a when b | n, else 1
    int ell_b;
    int deg;
    std::string lpu;
    std::vector<std::uint64_t> differentials;  // du at n = k..9
};

struct ProperEntry {
    int k;
    std::string anf;
    int deg;
    std::string lpu;
    std::vector<std::uint64_t> differentials;  // du at n = k..9
};

const std::vector<CandidateEntry>& candidates();
const std::vector<VirtualEntry>& virtual_liftings();
const std::vector<ProperEntry>& proper_liftings();

// Degree-2 generators whose linear-term extensions exhaust the APN-lifting
// classes, one per k = 3, 4, 5, 6.
struct ApnGenerator {
    int k;
    std::string anf;
};
const std::vector<ApnGenerator>& apn_generators();

// The four degree-2 diameter-6 class representatives that induce bijections
// at n = 11, 13, 15, 17, 19.
const std::vector<std::string>& k6_degree2_reps();

// Lookup by candidate name ("A1" ... "E1"); empty optional semantics via
// throw on unknown name.
BooleanFunction candidate_function(const std::string& name);

}  // namespace liftinglab

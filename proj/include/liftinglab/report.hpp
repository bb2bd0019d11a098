#pragma once

#include <string>

#include "liftinglab/classifier.hpp"
#include "liftinglab/corpus.hpp"
#include "liftinglab/enumeration.hpp"
#include "liftinglab/induced.hpp"

namespace liftinglab {

enum class OutputFormat { json, csv, markdown };

OutputFormat parse_format(const std::string& name);

// Classification JSON:
// {anf, k, verdict, ell, ell_n, pattern?, witness?, virtual, apn,
//  lifting_n_set, lpu}
std::string classification_json(const Classification& c, int decimal_digits = 0);

// Per-n analysis rows (distribution + metrics) in the requested format.
struct AnalysisRow {
    int n;
    PreimageDistribution dist;
    CryptoMetrics metrics;
};
std::string analysis_report(const Classification& c, const std::vector<AnalysisRow>& rows,
                            OutputFormat format, int decimal_digits);

// The named tables. appendix_b/appendix_c/section_6 recompute every cell
// from the stored ANF strings; comparison takes precomputed almost counts
// (k = 5 is an hours-scale job, so the caller decides whether to include it).
std::string table_appendix_a(const std::vector<CountRow>& rows, int k, OutputFormat format);
std::string table_appendix_b(OutputFormat format, unsigned jobs = 0);
std::string table_appendix_c(OutputFormat format, unsigned jobs = 0);
std::string table_section6(OutputFormat format, int decimal_digits, unsigned jobs = 0);
std::string table_comparison(const std::vector<std::pair<int, std::string>>& almost_counts,
                             OutputFormat format);

std::string corpus_listing(OutputFormat format);

}  // namespace liftinglab

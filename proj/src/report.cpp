#include "liftinglab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "liftinglab/anf_parser.hpp"

namespace liftinglab {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    throw InputError("unknown format '" + name + "' (expected json, csv or md)");
}

namespace {

std::string ratio_str(const Rational& r, int decimal_digits) {
    return decimal_digits > 0 ? r.decimal(decimal_digits) : r.str();
}

json witness_json(const BalanceWitness& w) {
    std::string word;
    for (auto b : w.word) word.push_back(b ? '1' : '0');
    return json{{"word", word}, {"m", w.m}, {"count", w.count}};
}

json metrics_json(const CryptoMetrics& m, int dd) {
    json j{{"n", m.n},
           {"du", m.du},
           {"dpu", ratio_str(m.dpu, dd)},
           {"nl", m.nl_f},
           {"lpu", ratio_str(m.lpu, dd)},
           {"deg", m.degree_f},
           {"balancedness", m.sbox_balancedness},
           {"strict_avalanche", m.strict_avalanche},
           {"collision_difference", m.collision_difference},
           {"ell_n", m.ell_n},
           {"iota", m.iota},
           {"image_ratio", ratio_str(m.image_ratio, dd)}};
    if (m.branch_number) j["branch_number"] = *m.branch_number;
    return j;
}

json distribution_json(const PreimageDistribution& d, int dd) {
    return json{{"n", d.n},
                {"counts", d.counts},
                {"ell_n", d.ell_n},
                {"iota", d.iota},
                {"image_ratio", ratio_str(d.image_ratio, dd)}};
}

json classification_to_json(const Classification& c, int dd) {
    json j;
    j["anf"] = format_anf(c.f);
    j["k"] = c.f.arity();
    j["truth_table_hex"] = c.f.to_hex();
    j["verdict"] = verdict_name(c.verdict);
    if (c.ell) j["ell"] = *c.ell;
    j["ell_n"] = c.ell_n;
    if (c.pattern) j["pattern"] = {{"a", c.pattern->first}, {"b", c.pattern->second}};
    if (c.witness) j["witness"] = witness_json(*c.witness);
    j["virtual"] = c.virtual_lifting;
    j["apn"] = c.apn_lifting;
    j["lifting_n_set"] = c.lifting_n;
    if (c.verdict != Verdict::not_almost) {
        int n_lin = std::min(c.n_max, kMaxScanBits > 9 ? 9 : kMaxScanBits);
        if (n_lin >= c.f.arity())
            j["lpu"] = ratio_str(lat_and_linearity(c.f, n_lin).lpu, dd);
    }
    return j;
}

std::string render_cells(const std::vector<std::vector<std::string>>& cells, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
        return os.str();
    }
    // markdown
    for (std::size_t r = 0; r < cells.size(); ++r) {
        os << "|";
        for (const auto& cell : cells[r]) os << ' ' << cell << " |";
        os << "\n";
        if (r == 0) {
            os << "|";
            for (std::size_t i = 0; i < cells[0].size(); ++i) os << "---|";
            os << "\n";
        }
    }
    return os.str();
}

std::string render_table(const std::vector<std::vector<std::string>>& cells, OutputFormat fmt,
                         const char* json_row_name) {
    if (fmt != OutputFormat::json) return render_cells(cells, fmt);
    json rows = json::array();
    for (std::size_t r = 1; r < cells.size(); ++r) {
        json row;
        for (std::size_t i = 0; i < cells[r].size(); ++i) row[cells[0][i]] = cells[r][i];
        rows.push_back(row);
    }
    return json{{json_row_name, rows}}.dump(2) + "\n";
}

std::string pattern_str(std::uint64_t a, int b) {
    return std::to_string(a) + ", " + std::to_string(b);
}

}  // namespace

std::string classification_json(const Classification& c, int dd) {
    return classification_to_json(c, dd).dump(2) + "\n";
}

std::string analysis_report(const Classification& c, const std::vector<AnalysisRow>& rows,
                            OutputFormat format, int dd) {
    if (format == OutputFormat::json) {
        json j = classification_to_json(c, dd);
        j["per_n"] = json::array();
        for (const auto& row : rows) {
            j["per_n"].push_back(json{{"n", row.n},
                                      {"distribution", distribution_json(row.dist, dd)},
                                      {"metrics", metrics_json(row.metrics, dd)}});
        }
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "ell_n", "iota", "image_ratio", "du", "dpu", "nl", "lpu", "deg",
                     "branch", "balancedness", "avalanche", "collision"});
    for (const auto& row : rows) {
        const auto& m = row.metrics;
        cells.push_back({std::to_string(row.n), std::to_string(row.dist.ell_n),
                         std::to_string(row.dist.iota), ratio_str(row.dist.image_ratio, dd),
                         std::to_string(m.du), ratio_str(m.dpu, dd), std::to_string(m.nl_f),
                         ratio_str(m.lpu, dd), std::to_string(m.degree_f),
                         m.branch_number ? std::to_string(*m.branch_number) : "-",
                         std::to_string(m.sbox_balancedness), std::to_string(m.strict_avalanche),
                         std::to_string(m.collision_difference)});
    }
    std::ostringstream os;
    os << "# " << format_anf(c.f) << "  [k=" << c.f.arity() << ", verdict "
       << verdict_name(c.verdict);
    if (c.ell) os << ", ell = " << *c.ell;
    os << "]\n";
    os << render_cells(cells, format);
    return os.str();
}

std::string table_appendix_a(const std::vector<CountRow>& rows, int k, OutputFormat format) {
    if (format == OutputFormat::csv) return count_rows_csv(rows, k);
    if (format == OutputFormat::markdown) return count_rows_markdown(rows, k);
    json out = json::array();
    for (const auto& r : rows) {
        json row{{"n", r.n},
                 {"potential", r.potential_count},
                 {"f0_neq_f1", r.f0_neq_f1_count},
                 {"liftings", r.lifting_count}};
        for (std::size_t d = 0; d < r.lifting_by_degree.size(); ++d)
            row["deg" + std::to_string(d + 1)] = r.lifting_by_degree[d];
        out.push_back(row);
    }
    return json{{"k", k}, {"rows", out}}.dump(2) + "\n";
}

std::string table_appendix_b(OutputFormat format, unsigned jobs) {
    (void)jobs;
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "function", "ell_n", "deg", "LPU", "differentials"});
    for (const auto& entry : virtual_liftings()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        Classification c = classify(f, 16);
        std::string ln = c.pattern ? pattern_str(c.pattern->first, c.pattern->second) : "aperiodic";
        std::string diffs;
        for (int n = entry.k; n <= 9; ++n)
            diffs += (diffs.empty() ? "" : " ") + std::to_string(du(f, n));
        cells.push_back({std::to_string(entry.k), format_anf(f), ln,
                         std::to_string(degree(f)),
                         lat_and_linearity(f, 9).lpu.str(), diffs});
    }
    return render_table(cells, format, "virtual_liftings");
}

std::string table_appendix_c(OutputFormat format, unsigned jobs) {
    (void)jobs;
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "function", "deg", "LPU", "differentials"});
    for (const auto& entry : proper_liftings()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        std::string diffs;
        for (int n = entry.k; n <= 9; ++n)
            diffs += (diffs.empty() ? "" : " ") + std::to_string(du(f, n));
        cells.push_back({std::to_string(entry.k), format_anf(f), std::to_string(degree(f)),
                         lat_and_linearity(f, 9).lpu.str(), diffs});
    }
    return render_table(cells, format, "proper_liftings");
}

std::string table_section6(OutputFormat format, int decimal_digits, unsigned jobs) {
    (void)jobs;
    int dd = decimal_digits > 0 ? decimal_digits : 2;
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"name", "k", "deg", "DPU_n9", "LPU_n9", "P2_n10"});
    for (const auto& entry : candidates()) {
        BooleanFunction f = parse_anf(entry.anf, entry.k);
        Rational dp = dpu(f, 9);
        Rational lp = lat_and_linearity(f, 9).lpu;
        auto dist = preimage_distribution(f, 10);
        std::string p2 = dist.iota == 0 ? "1" : dist.image_ratio.decimal(dd);
        cells.push_back({entry.name, std::to_string(entry.k), std::to_string(degree(f)),
                         dp.str(), lp.str(), p2});
    }
    return render_table(cells, format, "candidates");
}

std::string table_comparison(const std::vector<std::pair<int, std::string>>& almost_counts,
                             OutputFormat format) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "almost_lifting_classes", "permutive_classes"});
    for (const auto& [k, almost] : almost_counts)
        cells.push_back({std::to_string(k), almost, permutive_class_count(k).str()});
    return render_table(cells, format, "comparison");
}

std::string corpus_listing(OutputFormat format) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"list", "name", "k", "deg", "anf"});
    int i = 0;
    for (const auto& c : candidates())
        cells.push_back({"candidates", c.name, std::to_string(c.k), std::to_string(c.deg), c.anf});
    for (const auto& v : virtual_liftings())
        cells.push_back({"virtual", "V" + std::to_string(++i), std::to_string(v.k),
                         std::to_string(v.deg), v.anf});
    i = 0;
    for (const auto& p : proper_liftings())
        cells.push_back({"proper", "P" + std::to_string(++i), std::to_string(p.k),
                         std::to_string(p.deg), p.anf});
    i = 0;
    for (const auto& g : apn_generators())
        cells.push_back({"apn-generators", "G" + std::to_string(g.k), std::to_string(g.k), "2",
                         g.anf});
    i = 0;
    for (const auto& r : k6_degree2_reps())
        cells.push_back({"k6-degree2", "K6-" + std::to_string(++i), "6", "2", r});
    return render_table(cells, format, "corpus");
}

}  // namespace liftinglab

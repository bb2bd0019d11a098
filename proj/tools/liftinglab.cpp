#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "liftinglab/anf_parser.hpp"
#include "liftinglab/parallel.hpp"
#include "liftinglab/report.hpp"

using namespace liftinglab;

namespace {

// "A..B", "..B", "B", or a corpus range default. Returns [lo, hi].
std::pair<int, int> parse_range(const std::string& text, int k, int default_hi) {
    if (text.empty()) return {k, default_hi};
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int hi = std::stoi(text);
        return {k, hi};
    }
    int lo = dots == 0 ? k : std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
}

BooleanFunction input_function(const std::string& expr, std::optional<int> arity) {
    return parse_anf(expr, arity);
}

int run(int argc, char** argv) {
    CLI::App app{"Analysis of shift-invariant S-boxes induced from Boolean functions"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned jobs = default_jobs();
    std::string format = "md";
    int decimal = 0;
    app.add_option("--jobs", jobs, "worker thread count (default: LIFTINGLAB_JOBS or hardware)");
    app.add_option("--format", format, "output format: json, csv or md")->capture_default_str();
    app.add_option("--decimal", decimal, "render ratios with this many decimal digits");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "classification, distribution and metrics per n");
    std::string expr, n_range;
    std::optional<int> arity;
    analyze->add_option("expr", expr, "ANF expression, e.g. \"x1 + x2(x3 + 1)\"")->required();
    analyze->add_option("range", n_range, "n range, e.g. 3..10 (default k..10)");
    analyze->add_option("--k", arity, "arity (default: max variable index)");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "lifting classification as JSON");
    std::string cexpr;
    int cnmax = 16;
    std::optional<int> carity;
    classify_cmd->add_option("expr", cexpr, "ANF expression")->required();
    classify_cmd->add_option("--n-max", cnmax, "largest n for the observed collision counts")
        ->capture_default_str();
    classify_cmd->add_option("--k", carity, "arity (default: max variable index)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "staged truth-table search, Appendix-A layout");
    SearchSpec spec;
    bool functions_mode = false, long_running = false;
    std::string checkpoint_path;
    std::optional<int> max_degree;
    enumerate->add_option("--k", spec.k, "arity to search")->required();
    enumerate->add_option("--n-max", spec.n_max, "last row to produce");
    enumerate->add_option("--max-degree", max_degree, "restrict to functions of at most this degree");
    enumerate->add_flag("--permutive-only", spec.permutive_only, "permutive functions only");
    enumerate->add_flag("--f0-zero", spec.require_f0_zero, "require f(0,...,0) = 0");
    enumerate->add_flag("--f0-neq-f1", spec.require_f0_neq_f1, "require f(0,...,0) != f(1,...,1)");
    enumerate->add_flag("--count-functions", functions_mode,
                        "count functions instead of equivalence classes");
    enumerate->add_flag("--long-running", long_running, "confirm an hours-scale search");
    enumerate->add_option("--checkpoint", checkpoint_path, "checkpoint file for resumable runs");

    // table
    auto* table = app.add_subcommand("table", "regenerate a named table");
    std::string which;
    int table_k = 3, table_nmax = 0;
    bool table_long = false;
    std::string table_checkpoint;
    table->add_option("which", which, "appendix-a | appendix-b | appendix-c | section-6 | comparison")
        ->required();
    table->add_option("--k", table_k, "arity (appendix-a)");
    table->add_option("--n-max", table_nmax, "last row (appendix-a; default 19 for k=3 style)");
    table->add_flag("--long-running", table_long, "include hours-scale rows (k >= 5)");
    table->add_option("--checkpoint", table_checkpoint, "checkpoint file for long rows");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "list the built-in function corpus");

    CLI11_PARSE(app, argc, argv);
    OutputFormat fmt = parse_format(format);

    if (*analyze) {
        BooleanFunction f = input_function(expr, arity);
        auto [lo, hi] = parse_range(n_range, f.arity(), std::min(10, kMaxScanBits));
        if (lo < f.arity()) lo = f.arity();
        Classification c = classify(f, std::min(hi, kMaxLiftingSetBits));
        std::vector<AnalysisRow> rows;
        for (int n = lo; n <= hi; ++n)
            rows.push_back(AnalysisRow{n, preimage_distribution(c.f, n), metrics_report(c.f, n)});
        std::cout << analysis_report(c, rows, fmt, decimal);
        return 0;
    }

    if (*classify_cmd) {
        BooleanFunction f = input_function(cexpr, carity);
        std::cout << classification_json(classify(f, cnmax), decimal);
        return 0;
    }

    if (*enumerate) {
        spec.max_degree = max_degree;
        if (spec.n_max == 0) spec.n_max = spec.k;
        spec.count_mode = functions_mode ? SearchSpec::CountMode::functions
                                         : SearchSpec::CountMode::equivalence_classes;
        if (spec.k >= 5 && !long_running)
            throw CapError("k >= 5 sweeps run for hours; pass --long-running (and ideally "
                           "--checkpoint PATH)");
        std::optional<CheckpointConfig> ckpt;
        if (!checkpoint_path.empty()) ckpt = CheckpointConfig{checkpoint_path};
        auto rows = enumerate_rows(spec, jobs, ckpt);
        std::cout << table_appendix_a(rows, spec.k, fmt == OutputFormat::markdown
                                                        ? OutputFormat::markdown
                                                        : fmt);
        return 0;
    }

    if (*table) {
        if (which == "appendix-a") {
            if (table_k >= 5 && !table_long)
                throw CapError("appendix-a for k >= 5 runs for hours; pass --long-running");
            SearchSpec s;
            s.k = table_k;
            s.n_max = table_nmax ? table_nmax : (table_k == 3 ? 19 : table_k == 4 ? 23 : 20);
            std::optional<CheckpointConfig> ckpt;
            if (!table_checkpoint.empty()) ckpt = CheckpointConfig{table_checkpoint};
            std::cout << table_appendix_a(enumerate_rows(s, jobs, ckpt), s.k, fmt);
        } else if (which == "appendix-b") {
            std::cout << table_appendix_b(fmt, jobs);
        } else if (which == "appendix-c") {
            std::cout << table_appendix_c(fmt, jobs);
        } else if (which == "section-6") {
            std::cout << table_section6(fmt, decimal, jobs);
        } else if (which == "comparison") {
            std::vector<std::pair<int, std::string>> rows;
            for (int k = 3; k <= (table_long ? 5 : 4); ++k) {
                std::optional<CheckpointConfig> ckpt;
                if (k >= 5 && !table_checkpoint.empty()) ckpt = CheckpointConfig{table_checkpoint};
                rows.emplace_back(k, std::to_string(count_almost_lifting_classes(k, jobs, ckpt)));
            }
            if (!table_long) rows.emplace_back(5, "(requires --long-running)");
            std::cout << table_comparison(rows, fmt);
        } else {
            throw InputError("unknown table '" + which + "'");
        }
        return 0;
    }

    if (*corpus_cmd) {
        std::cout << corpus_listing(fmt);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// fuzzyseq: density, convergence, and summability diagnostics for fuzzy
// number sequences. Subcommands: metric, density, stat, cesaro, suite.
// Exit codes: 0 ok, 1 validation/usage error, 2 gate error (bounded modulus
// handed to an operation that needs an unbounded one).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fuzzyseq/analysis.hpp"
#include "fuzzyseq/density.hpp"
#include "fuzzyseq/serialization.hpp"
#include "fuzzyseq/suites.hpp"

namespace {

using nlohmann::json;
using namespace fuzzyseq;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

struct OutputOptions {
    std::string format = "csv"; // csv | json
    std::string path;           // empty -> stdout
};

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path '" + out.path + "'");
    f << text;
}

struct ScheduleFlags {
    std::string spec; // "n0,ratio,count"
    CheckpointSchedule resolve(const CheckpointSchedule& defaults) const {
        if (spec.empty()) return defaults;
        CheckpointSchedule s = defaults;
        char extra = 0;
        unsigned long long n0 = 0;
        int count = 0;
        double ratio = 0;
        if (std::sscanf(spec.c_str(), "%llu,%lf,%d%c", &n0, &ratio, &count, &extra) != 3)
            throw CLI::ValidationError("--checkpoints", "expected n0,ratio,count");
        s.n0 = n0;
        s.ratio = ratio;
        s.count = count;
        return s;
    }
};

IndexSet resolve_set(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return index_set_from_json(json::parse(spec));
    return parse_index_set(spec);
}

Modulus resolve_modulus(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return modulus_from_json(json::parse(spec));
    return parse_modulus(spec);
}

FuzzySequence resolve_sequence(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return sequence_from_json(json::parse(spec));
    return preset_sequence(spec);
}

FuzzyNumber resolve_fuzzy(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return fuzzy_from_json(json::parse(spec));
    return parse_fuzzy_number(spec);
}

json classification_json(const LimitEstimate& e) {
    json out;
    out["classification"] = to_string(e.classification);
    if (e.classification == LimitClass::Converged) out["value"] = e.value;
    out["tail_variation"] = e.tail_variation;
    return out;
}

json schedule_json(const CheckpointSchedule& s) {
    return json{{"n0", s.n0}, {"ratio", s.ratio}, {"count", s.count}};
}

// ---- density ---------------------------------------------------------------

struct DensityArgs {
    std::string set, modulus;
    double beta = 1.0;
    ScheduleFlags schedule;
    double tol = 0.02, div_threshold = 1000.0;
    OutputOptions out;
};

int run_density(const DensityArgs& args) {
    DensityQuery query{resolve_set(args.set), resolve_modulus(args.modulus), args.beta};
    DensityOptions options;
    options.schedule = args.schedule.resolve(options.schedule);
    options.classify = {args.tol, args.div_threshold};
    const DensityResult result = density(query, options);

    if (result.beta_outside_definition)
        std::cerr << "note: beta > 1 lies outside the defining range of this density\n";
    std::cerr << "classification: " << to_string(result.estimate.classification);
    if (result.estimate.classification == LimitClass::Converged)
        std::cerr << " (value " << num(result.estimate.value) << ")";
    std::cerr << "\n";

    if (args.out.format == "csv") {
        std::ostringstream csv;
        csv << "n,prefix_count,raw_ratio,estimate,beta,modulus_name\n";
        for (const auto& p : result.points)
            csv << p.n << ',' << p.prefix_count << ',' << num(p.raw_ratio) << ',' << num(p.estimate) << ','
                << num(args.beta) << ',' << query.modulus.name() << '\n';
        emit(args.out, csv.str());
    } else {
        json series = json::array();
        for (const auto& p : result.points)
            series.push_back({{"n", p.n},
                              {"prefix_count", p.prefix_count},
                              {"raw_ratio", p.raw_ratio},
                              {"estimate", p.estimate}});
        json report{{"command", "density"},
                    {"config",
                     {{"set", query.set.describe()},
                      {"modulus", modulus_to_json(query.modulus)},
                      {"beta", args.beta},
                      {"checkpoints", schedule_json(options.schedule)},
                      {"tol", args.tol},
                      {"div_threshold", args.div_threshold},
                      {"out", args.out.format}}},
                    {"series", series},
                    {"result", classification_json(result.estimate)},
                    {"beta_outside_definition", result.beta_outside_definition}};
        emit(args.out, report.dump(2) + "\n");
    }
    return 0;
}

// ---- stat ------------------------------------------------------------------

struct StatArgs {
    std::string seq, target, modulus;
    double beta = 1.0;
    std::vector<double> eps_grid{4.0, 1.0, 0.1, 0.01};
    ScheduleFlags schedule;
    double tol = 0.02, div_threshold = 1000.0, zero_tol = kZeroTolDefault;
    OutputOptions out;
};

int run_stat(const StatArgs& args) {
    const FuzzySequence seq = resolve_sequence(args.seq);
    const FuzzyNumber target = resolve_fuzzy(args.target);
    const Modulus modulus = resolve_modulus(args.modulus);
    AnalysisOptions options;
    options.schedule = args.schedule.resolve(options.schedule);
    options.classify = {args.tol, args.div_threshold};
    options.zero_tol = args.zero_tol;
    const StatClassResult result = stat_class(seq, target, modulus, args.beta, args.eps_grid, options);

    if (result.beta_warning)
        std::cerr << "note: beta > 1; the order-beta statistical limit need not be unique there\n";
    std::cerr << (result.in_class ? "in class for every epsilon in the grid\n"
                                  : "not in class for at least one epsilon in the grid\n");

    if (args.out.format == "csv") {
        std::ostringstream csv;
        csv << "epsilon,n,exceed_count,rate,beta,modulus_name\n";
        for (std::size_t e = 0; e < result.epsilon_grid.size(); ++e)
            for (const auto& p : result.per_epsilon[e].points)
                csv << num(result.epsilon_grid[e]) << ',' << p.n << ',' << p.exceed_count << ','
                    << num(p.rate) << ',' << num(args.beta) << ',' << modulus.name() << '\n';
        emit(args.out, csv.str());
    } else {
        json per_eps = json::array();
        for (std::size_t e = 0; e < result.epsilon_grid.size(); ++e) {
            const StatResult& sr = result.per_epsilon[e];
            json series = json::array();
            for (const auto& p : sr.points)
                series.push_back({{"n", p.n}, {"exceed_count", p.exceed_count}, {"rate", p.rate}});
            per_eps.push_back({{"epsilon", result.epsilon_grid[e]},
                               {"series", series},
                               {"result", classification_json(sr.estimate)},
                               {"converged_to_zero", sr.converged_to_zero}});
        }
        json report{{"command", "stat"},
                    {"config",
                     {{"seq", seq.describe()},
                      {"target", fuzzy_to_json(target)},
                      {"modulus", modulus_to_json(modulus)},
                      {"beta", args.beta},
                      {"eps_grid", args.eps_grid},
                      {"checkpoints", schedule_json(options.schedule)},
                      {"tol", args.tol},
                      {"div_threshold", args.div_threshold},
                      {"zero_tol", args.zero_tol},
                      {"out", args.out.format}}},
                    {"per_epsilon", per_eps},
                    {"in_class", result.in_class},
                    {"beta_warning", result.beta_warning}};
        emit(args.out, report.dump(2) + "\n");
    }
    return 0;
}

// ---- cesaro ----------------------------------------------------------------

struct CesaroArgs {
    std::string seq, target = "zero", modulus;
    double beta = 1.0;
    ScheduleFlags schedule;
    double tol = 0.02, div_threshold = 1000.0, zero_tol = kZeroTolDefault, sup_cap = 1000.0;
    OutputOptions out;
};

int run_cesaro(const CesaroArgs& args) {
    CesaroQuery query{resolve_sequence(args.seq), resolve_fuzzy(args.target), resolve_modulus(args.modulus),
                      args.beta};
    AnalysisOptions options;
    options.schedule = args.schedule.resolve(options.schedule);
    options.classify = {args.tol, args.div_threshold};
    options.zero_tol = args.zero_tol;
    options.sup_cap = args.sup_cap;
    const CesaroClassResult result = cesaro_class(query, options);

    std::string verdict;
    if (result.in_zero_class) verdict += "w^{beta,0} ";
    if (result.in_target_class) verdict += "w^{beta}(target) ";
    if (result.in_bounded_class) verdict += "w^{beta,inf} ";
    if (verdict.empty()) verdict = "none-detected ";
    std::cerr << "verdict: " << verdict << "\n";

    if (args.out.format == "csv") {
        std::ostringstream csv;
        csv << "target,n,sum,mean,beta,modulus_name\n";
        for (const auto& p : result.to_zero)
            csv << "zero," << p.n << ',' << num(p.sum) << ',' << num(p.mean) << ',' << num(args.beta) << ','
                << query.modulus.name() << '\n';
        for (const auto& p : result.to_target)
            csv << "target," << p.n << ',' << num(p.sum) << ',' << num(p.mean) << ',' << num(args.beta)
                << ',' << query.modulus.name() << '\n';
        emit(args.out, csv.str());
    } else {
        const auto series_json = [](const std::vector<CesaroPoint>& pts) {
            json arr = json::array();
            for (const auto& p : pts) arr.push_back({{"n", p.n}, {"sum", p.sum}, {"mean", p.mean}});
            return arr;
        };
        json report{{"command", "cesaro"},
                    {"config",
                     {{"seq", query.sequence.describe()},
                      {"target", fuzzy_to_json(query.target)},
                      {"modulus", modulus_to_json(query.modulus)},
                      {"beta", args.beta},
                      {"checkpoints", schedule_json(options.schedule)},
                      {"tol", args.tol},
                      {"div_threshold", args.div_threshold},
                      {"zero_tol", args.zero_tol},
                      {"sup_cap", args.sup_cap},
                      {"out", args.out.format}}},
                    {"to_zero", {{"series", series_json(result.to_zero)},
                                 {"result", classification_json(result.zero_estimate)}}},
                    {"to_target", {{"series", series_json(result.to_target)},
                                   {"result", classification_json(result.target_estimate)}}},
                    {"running_sup", result.running_sup},
                    {"in_zero_class", result.in_zero_class},
                    {"in_target_class", result.in_target_class},
                    {"in_bounded_class", result.in_bounded_class}};
        emit(args.out, report.dump(2) + "\n");
    }
    return 0;
}

// ---- suite -----------------------------------------------------------------

struct SuiteArgs {
    std::string theorem;
    std::uint64_t seed = 42;
    OutputOptions out;
};

int run_suite(const SuiteArgs& args) {
    const SuiteReport report = theorem_suite(args.theorem, args.seed);
    for (const auto& c : report.checks)
        std::cerr << (c.passed ? "[pass] " : "[FAIL] ") << c.label << "\n";

    if (args.out.format == "csv") {
        std::ostringstream csv;
        csv << "check,passed,observed\n";
        for (const auto& c : report.checks) {
            std::string label = c.label, obs = c.observed;
            for (auto* s : {&label, &obs})
                for (char& ch : *s)
                    if (ch == ',') ch = ';';
            csv << label << ',' << (c.passed ? "true" : "false") << ',' << obs << '\n';
        }
        emit(args.out, csv.str());
    } else {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"label", c.label}, {"passed", c.passed}, {"observed", c.observed}});
        json out{{"command", "suite"},
                 {"config", {{"theorem", report.name}, {"seed", args.seed}, {"out", args.out.format}}},
                 {"claim", report.claim},
                 {"checks", checks},
                 {"all_passed", report.all_passed()}};
        emit(args.out, out.dump(2) + "\n");
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"density, convergence, and summability diagnostics for fuzzy number sequences"};
    app.require_subcommand(1);

    // metric
    std::string metric_a, metric_b;
    std::uint64_t metric_grid = 0;
    auto* metric_cmd = app.add_subcommand("metric", "distance between two fuzzy numbers");
    metric_cmd->add_option("--a", metric_a, "first fuzzy number, e.g. tri:-3,-2,-1")->required();
    metric_cmd->add_option("--b", metric_b, "second fuzzy number")->required();
    metric_cmd->add_option("--grid", metric_grid, "also print the grid-oracle value at this grid size");

    DensityArgs density_args;
    auto* density_cmd = app.add_subcommand("density", "f_beta-density series of an index set");
    density_cmd->add_option("--set", density_args.set, "index set, e.g. powers:q=3")->required();
    density_cmd->add_option("--modulus", density_args.modulus, "modulus, e.g. log1p")->required();
    density_cmd->add_option("--beta", density_args.beta, "order beta > 0");
    density_cmd->add_option("--checkpoints", density_args.schedule.spec, "n0,ratio,count");
    density_cmd->add_option("--tol", density_args.tol, "convergence tail tolerance");
    density_cmd->add_option("--div-threshold", density_args.div_threshold, "divergence threshold");
    density_cmd->add_option("--out", density_args.out.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    density_cmd->add_option("--out-path", density_args.out.path, "output file (default stdout)");

    StatArgs stat_args;
    auto* stat_cmd = app.add_subcommand("stat", "f-statistical convergence rates of order beta");
    stat_cmd->add_option("--seq", stat_args.seq, "sequence preset or JSON spec")->required();
    stat_cmd->add_option("--target", stat_args.target, "candidate limit, e.g. tri:1,2,3")->required();
    stat_cmd->add_option("--modulus", stat_args.modulus, "modulus")->required();
    stat_cmd->add_option("--beta", stat_args.beta, "order beta > 0");
    stat_cmd->add_option("--eps-grid", stat_args.eps_grid, "epsilon grid")->delimiter(',');
    stat_cmd->add_option("--checkpoints", stat_args.schedule.spec, "n0,ratio,count");
    stat_cmd->add_option("--tol", stat_args.tol, "convergence tail tolerance");
    stat_cmd->add_option("--div-threshold", stat_args.div_threshold, "divergence threshold");
    stat_cmd->add_option("--zero-tol", stat_args.zero_tol, "converged-to-zero threshold");
    stat_cmd->add_option("--out", stat_args.out.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    stat_cmd->add_option("--out-path", stat_args.out.path, "output file (default stdout)");

    CesaroArgs cesaro_args;
    auto* cesaro_cmd = app.add_subcommand("cesaro", "strong Cesaro summability means of order beta");
    cesaro_cmd->add_option("--seq", cesaro_args.seq, "sequence preset or JSON spec")->required();
    cesaro_cmd->add_option("--target", cesaro_args.target, "candidate limit (default zero)");
    cesaro_cmd->add_option("--modulus", cesaro_args.modulus, "modulus (bounded allowed here)")->required();
    cesaro_cmd->add_option("--beta", cesaro_args.beta, "order beta > 0 (may exceed 1)");
    cesaro_cmd->add_option("--checkpoints", cesaro_args.schedule.spec, "n0,ratio,count");
    cesaro_cmd->add_option("--tol", cesaro_args.tol, "convergence tail tolerance");
    cesaro_cmd->add_option("--div-threshold", cesaro_args.div_threshold, "divergence threshold");
    cesaro_cmd->add_option("--zero-tol", cesaro_args.zero_tol, "converged-to-zero threshold");
    cesaro_cmd->add_option("--sup-cap", cesaro_args.sup_cap, "bounded-class cap on running sup");
    cesaro_cmd->add_option("--out", cesaro_args.out.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cesaro_cmd->add_option("--out-path", cesaro_args.out.path, "output file (default stdout)");

    SuiteArgs suite_args;
    auto* suite_cmd = app.add_subcommand("suite", "run one claim suite from the catalog");
    suite_cmd->add_option("--theorem", suite_args.theorem, "claim id, e.g. 3.7")->required();
    suite_cmd->add_option("--seed", suite_args.seed, "seed for randomized members (default 42)");
    suite_cmd->add_option("--out", suite_args.out.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    suite_cmd->add_option("--out-path", suite_args.out.path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (metric_cmd->parsed()) {
            const FuzzyNumber a = resolve_fuzzy(metric_a);
            const FuzzyNumber b = resolve_fuzzy(metric_b);
            std::cout << num(metric_d(a, b)) << "\n";
            if (metric_grid >= 2)
                std::cout << num(metric_d_grid_oracle(a, b, metric_grid)) << "\n";
            return 0;
        }
        if (density_cmd->parsed()) return run_density(density_args);
        if (stat_cmd->parsed()) return run_stat(stat_args);
        if (cesaro_cmd->parsed()) return run_cesaro(cesaro_args);
        if (suite_cmd->parsed()) return run_suite(suite_args);
    } catch (const BoundedModulusError& e) {
        std::cerr << "gate error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

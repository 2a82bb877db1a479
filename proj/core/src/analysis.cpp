#include "fuzzyseq/analysis.hpp"

#include <cmath>

namespace fuzzyseq {

std::vector<StatPoint> stat_rate_series(const StatQuery& query, const CheckpointSchedule& schedule,
                                        const UnboundednessGate& gate) {
    if (!(query.beta > 0.0)) throw std::domain_error("beta must be > 0");
    if (!(query.epsilon > 0.0)) throw std::domain_error("epsilon must be > 0");
    if (!passes_unboundedness_gate(query.modulus, gate))
        throw BoundedModulusError("modulus '" + query.modulus.name() +
                                  "' fails the unboundedness gate; f-statistical rates need an unbounded modulus");
    const std::vector<std::uint64_t> ns = make_checkpoints(schedule);
    const std::vector<std::uint64_t> counts = query.sequence.exceed_counts(query.target, query.epsilon, ns);
    std::vector<StatPoint> out(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        out[i].n = ns[i];
        out[i].exceed_count = counts[i];
        const double scale = std::pow(static_cast<double>(ns[i]), query.beta);
        out[i].rate = query.modulus(static_cast<double>(counts[i])) / query.modulus(scale);
    }
    return out;
}

StatResult stat_converges(const StatQuery& query, const AnalysisOptions& options) {
    StatResult result;
    result.points = stat_rate_series(query, options.schedule, options.gate);
    std::vector<std::pair<std::uint64_t, double>> series;
    series.reserve(result.points.size());
    for (const auto& p : result.points) series.emplace_back(p.n, p.rate);
    result.estimate = classify_limit(std::move(series), options.classify);
    result.converged_to_zero = converged_to_zero(result.estimate, options.zero_tol);
    result.beta_warning = query.beta > 1.0;
    return result;
}

StatClassResult stat_class(const FuzzySequence& sequence, const FuzzyNumber& target, const Modulus& modulus,
                           double beta, const std::vector<double>& epsilon_grid,
                           const AnalysisOptions& options) {
    if (epsilon_grid.empty()) throw std::domain_error("epsilon grid must be nonempty");
    StatClassResult out;
    out.epsilon_grid = epsilon_grid;
    out.in_class = true;
    for (double eps : epsilon_grid) {
        StatQuery q{sequence, target, modulus, beta, eps};
        out.per_epsilon.push_back(stat_converges(q, options));
        out.in_class = out.in_class && out.per_epsilon.back().converged_to_zero;
    }
    out.beta_warning = beta > 1.0;
    return out;
}

std::vector<CesaroPoint> cesaro_series(const CesaroQuery& query, const CheckpointSchedule& schedule) {
    if (!(query.beta > 0.0)) throw std::domain_error("beta must be > 0");
    const std::vector<std::uint64_t> ns = make_checkpoints(schedule);
    const std::vector<double> sums = query.sequence.modulus_distance_sums(query.target, query.modulus, ns);
    std::vector<CesaroPoint> out(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        out[i].n = ns[i];
        out[i].sum = sums[i];
        out[i].mean = sums[i] / std::pow(static_cast<double>(ns[i]), query.beta);
    }
    return out;
}

namespace {

LimitEstimate classify_means(const std::vector<CesaroPoint>& points, const ClassifyOptions& options) {
    std::vector<std::pair<std::uint64_t, double>> series;
    series.reserve(points.size());
    for (const auto& p : points) series.emplace_back(p.n, p.mean);
    return classify_limit(std::move(series), options);
}

} // namespace

CesaroClassResult cesaro_class(const CesaroQuery& query, const AnalysisOptions& options) {
    CesaroClassResult out;
    CesaroQuery zero_query = query;
    zero_query.target = FuzzyNumber::zero();
    out.to_zero = cesaro_series(zero_query, options.schedule);
    out.zero_estimate = classify_means(out.to_zero, options.classify);
    if (query.target == FuzzyNumber::zero()) {
        out.to_target = out.to_zero;
        out.target_estimate = out.zero_estimate;
    } else {
        out.to_target = cesaro_series(query, options.schedule);
        out.target_estimate = classify_means(out.to_target, options.classify);
    }
    for (const auto& p : out.to_zero) out.running_sup = std::max(out.running_sup, p.mean);
    out.in_zero_class = converged_to_zero(out.zero_estimate, options.zero_tol);
    out.in_target_class = converged_to_zero(out.target_estimate, options.zero_tol);
    // zero-class members have bounded means, whatever the configured cap says
    out.in_bounded_class = out.in_zero_class || out.running_sup <= options.sup_cap;
    return out;
}

} // namespace fuzzyseq

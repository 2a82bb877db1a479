#include "fuzzyseq/density.hpp"

#include <cmath>

namespace fuzzyseq {

namespace {

void require_unbounded(const Modulus& f, const UnboundednessGate& gate) {
    if (!passes_unboundedness_gate(f, gate))
        throw BoundedModulusError("modulus '" + f.name() + "' fails the unboundedness gate; "
                                  "this density is defined for unbounded moduli only");
}

} // namespace

std::vector<DensityPoint> density_series(const DensityQuery& query, const CheckpointSchedule& schedule,
                                         const UnboundednessGate& gate) {
    if (!(query.beta > 0.0)) throw std::domain_error("beta must be > 0");
    require_unbounded(query.modulus, gate);
    std::vector<DensityPoint> out;
    for (std::uint64_t n : make_checkpoints(schedule)) {
        const std::uint64_t count = query.set.prefix_count(n);
        const double scale = std::pow(static_cast<double>(n), query.beta);
        DensityPoint p;
        p.n = n;
        p.prefix_count = count;
        p.raw_ratio = static_cast<double>(count) / scale;
        p.estimate = query.modulus(static_cast<double>(count)) / query.modulus(scale);
        out.push_back(p);
    }
    return out;
}

DensityResult density(const DensityQuery& query, const DensityOptions& options) {
    DensityResult result;
    result.points = density_series(query, options.schedule, options.gate);
    std::vector<std::pair<std::uint64_t, double>> series;
    series.reserve(result.points.size());
    for (const auto& p : result.points) series.emplace_back(p.n, p.estimate);
    result.estimate = classify_limit(std::move(series), options.classify);
    result.beta_outside_definition = query.beta > 1.0;
    return result;
}

} // namespace fuzzyseq

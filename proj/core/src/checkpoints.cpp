#include "fuzzyseq/checkpoints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzyseq {

std::vector<std::uint64_t> make_checkpoints(const CheckpointSchedule& schedule) {
    if (schedule.n0 < 2) throw std::domain_error("checkpoint n0 must be >= 2");
    if (!(schedule.ratio > 1.0)) throw std::domain_error("checkpoint ratio must be > 1");
    if (schedule.count < 2) throw std::domain_error("checkpoint count must be >= 2");
    std::vector<std::uint64_t> ns;
    ns.reserve(static_cast<std::size_t>(schedule.count));
    for (int j = 0; j < schedule.count; ++j) {
        const double raw = std::round(static_cast<double>(schedule.n0) * std::pow(schedule.ratio, j));
        if (!(raw < 1.8e19)) throw std::domain_error("checkpoint exceeds the 64-bit index range");
        std::uint64_t n = static_cast<std::uint64_t>(raw);
        if (!ns.empty() && n <= ns.back()) n = ns.back() + 1;
        ns.push_back(n);
    }
    return ns;
}

std::string to_string(LimitClass c) {
    switch (c) {
        case LimitClass::Converged: return "converged";
        case LimitClass::DivergedToInfinity: return "diverged_to_infinity";
        case LimitClass::Inconclusive: return "inconclusive";
    }
    return "?";
}

LimitEstimate classify_limit(std::vector<std::pair<std::uint64_t, double>> series,
                             const ClassifyOptions& options) {
    if (series.size() < 4) throw std::domain_error("classification needs at least 4 checkpoints");
    if (!(options.tol > 0.0)) throw std::domain_error("tol must be > 0");
    for (std::size_t i = 1; i < series.size(); ++i)
        if (!(series[i - 1].first < series[i].first))
            throw std::domain_error("checkpoints must be strictly increasing in n");

    const std::size_t tail_len = std::max<std::size_t>(2, (series.size() + 3) / 4);
    const std::size_t tail_start = series.size() - tail_len;

    double lo = series[tail_start].second, hi = lo;
    bool strictly_increasing = true;
    for (std::size_t i = tail_start; i < series.size(); ++i) {
        const double e = series[i].second;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        if (i > tail_start && !(series[i - 1].second < e)) strictly_increasing = false;
    }

    LimitEstimate out;
    out.tail_variation = hi - lo;
    const double last = series.back().second;
    if (out.tail_variation <= options.tol) {
        out.classification = LimitClass::Converged;
        out.value = last;
    } else if (strictly_increasing && last > options.div_threshold) {
        out.classification = LimitClass::DivergedToInfinity;
    } else {
        out.classification = LimitClass::Inconclusive;
    }
    out.checkpoints = std::move(series);
    return out;
}

bool converged_to_zero(const LimitEstimate& estimate, double zero_tol) {
    return estimate.classification == LimitClass::Converged && std::fabs(estimate.value) <= zero_tol;
}

} // namespace fuzzyseq

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fuzzyseq {

// Geometric grid of prefix lengths n_j = round(n0 * ratio^j), j = 0..count-1,
// at which finite surrogates of the limits are evaluated.
struct CheckpointSchedule {
    std::uint64_t n0 = 1000;
    double ratio = 3.1622776601683795; // sqrt(10)
    int count = 9;                     // reaches 1e7 with the defaults
};

// n0 >= 2, ratio > 1, count >= 2; strictly increasing (collisions from
// rounding are bumped up by one).
std::vector<std::uint64_t> make_checkpoints(const CheckpointSchedule& schedule);

enum class LimitClass { Converged, DivergedToInfinity, Inconclusive };

std::string to_string(LimitClass c);

// A classified finite surrogate of a limit, together with the checkpoint
// series that produced it. `value` is the last estimate and is meaningful
// only when Converged.
struct LimitEstimate {
    std::vector<std::pair<std::uint64_t, double>> checkpoints;
    LimitClass classification = LimitClass::Inconclusive;
    double value = 0.0;
    double tail_variation = 0.0;
};

struct ClassifyOptions {
    double tol = 0.02;            // max tail variation accepted as converged
    double div_threshold = 1000.0; // last estimate must exceed this to call divergence
};

// Converged(last) if the estimates over the last quarter of checkpoints vary
// by at most tol; else DivergedToInfinity if that tail is strictly increasing
// and the last estimate exceeds div_threshold; else Inconclusive. A series
// satisfying both reads is reported Converged. Deterministic; needs >= 4
// checkpoints, strictly increasing in n.
LimitEstimate classify_limit(std::vector<std::pair<std::uint64_t, double>> series,
                             const ClassifyOptions& options = {});

// Converged with a value this close to zero counts as "limit 0" in verdicts.
inline constexpr double kZeroTolDefault = 0.15;

bool converged_to_zero(const LimitEstimate& estimate, double zero_tol = kZeroTolDefault);

} // namespace fuzzyseq

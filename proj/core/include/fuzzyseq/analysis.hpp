#pragma once

#include <cstdint>
#include <vector>

#include "fuzzyseq/checkpoints.hpp"
#include "fuzzyseq/density.hpp"
#include "fuzzyseq/fuzzy_sequence.hpp"

namespace fuzzyseq {

// The index sets and epsilon-grids below make every "member of the class"
// verdict an explicitly finite surrogate: the defining limits quantify over
// all epsilon > 0 and all n, a desk-scale run cannot.

struct AnalysisOptions {
    CheckpointSchedule schedule;
    ClassifyOptions classify;
    double zero_tol = kZeroTolDefault; // "converged to 0" threshold for verdicts
    double sup_cap = 1000.0;           // bounded-class cap on the running sup
    UnboundednessGate gate;
};

inline std::vector<double> default_epsilon_grid() { return {4.0, 1.0, 0.1, 0.01}; }

// ---- f-statistical convergence of order beta ------------------------------

struct StatQuery {
    FuzzySequence sequence = FuzzySequence::two_valued(IndexSet::empty(), FuzzyNumber::zero(), FuzzyNumber::zero());
    FuzzyNumber target;
    Modulus modulus = Modulus::identity();
    double beta = 1.0;   // > 0; beta > 1 is flagged: the order-beta limit need not be unique there
    double epsilon = 1.0; // > 0
};

struct StatPoint {
    std::uint64_t n = 0;
    std::uint64_t exceed_count = 0;
    double rate = 0.0; // f(exceed_count) / f(n^beta)
};

// Bounded moduli are rejected, as for densities.
std::vector<StatPoint> stat_rate_series(const StatQuery& query, const CheckpointSchedule& schedule,
                                        const UnboundednessGate& gate = {});

struct StatResult {
    std::vector<StatPoint> points;
    LimitEstimate estimate;
    bool converged_to_zero = false; // rate -> 0 at this epsilon
    bool beta_warning = false;      // beta > 1
};

StatResult stat_converges(const StatQuery& query, const AnalysisOptions& options = {});

// Runs stat_converges for every epsilon in the grid. `in_class` means every
// epsilon classified as converged-to-zero (a grid-based surrogate for the
// for-all-epsilon definition, reported as such).
struct StatClassResult {
    std::vector<double> epsilon_grid;
    std::vector<StatResult> per_epsilon;
    bool in_class = false;
    bool beta_warning = false;
};

StatClassResult stat_class(const FuzzySequence& sequence, const FuzzyNumber& target, const Modulus& modulus,
                           double beta, const std::vector<double>& epsilon_grid = default_epsilon_grid(),
                           const AnalysisOptions& options = {});

// ---- strong Cesaro summability of order beta ------------------------------

// Any modulus is allowed here, bounded ones included.
struct CesaroQuery {
    FuzzySequence sequence = FuzzySequence::two_valued(IndexSet::empty(), FuzzyNumber::zero(), FuzzyNumber::zero());
    FuzzyNumber target;
    Modulus modulus = Modulus::identity();
    double beta = 1.0; // any positive real; may exceed 1
};

struct CesaroPoint {
    std::uint64_t n = 0;
    double sum = 0.0;  // sum_{k<=n} f(d(X_k, target))
    double mean = 0.0; // sum / n^beta
};

std::vector<CesaroPoint> cesaro_series(const CesaroQuery& query, const CheckpointSchedule& schedule);

// Verdicts are cumulative: detected zero-class implies membership in the
// bounded class as well. The target-class verdict is relative to the queried
// target; the zero-class and bounded-class checks always run against crisp 0.
struct CesaroClassResult {
    std::vector<CesaroPoint> to_zero;
    std::vector<CesaroPoint> to_target;
    LimitEstimate zero_estimate;
    LimitEstimate target_estimate;
    double running_sup = 0.0; // max mean of the zero-series over the checkpoints
    bool in_zero_class = false;    // w^{beta,0}
    bool in_target_class = false;  // w^{beta}(target)
    bool in_bounded_class = false; // w^{beta,inf}
};

CesaroClassResult cesaro_class(const CesaroQuery& query, const AnalysisOptions& options = {});

} // namespace fuzzyseq

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fuzzyseq/checkpoints.hpp"
#include "fuzzyseq/index_set.hpp"
#include "fuzzyseq/modulus.hpp"

namespace fuzzyseq {

// Raised when an operation that needs an unbounded modulus is handed a
// bounded one. The CLI maps this to exit code 2.
class BoundedModulusError : public std::runtime_error {
public:
    explicit BoundedModulusError(const std::string& what) : std::runtime_error(what) {}
};

// Density of `set` measured through `modulus` at order beta:
//   estimate(n) = f(|{k <= n : k in A}|) / f(n^beta).
// beta = 1, f = identity gives natural density; f = identity alone gives
// beta-density. beta > 1 is computable but flagged as outside the defining
// range of the density.
struct DensityQuery {
    IndexSet set;
    Modulus modulus = Modulus::identity();
    double beta = 1.0;
};

struct DensityPoint {
    std::uint64_t n = 0;
    std::uint64_t prefix_count = 0;
    double raw_ratio = 0.0; // prefix_count / n^beta (identity-modulus ratio)
    double estimate = 0.0;  // f(prefix_count) / f(n^beta)
};

// Prefix counts are exact integers; n^beta is evaluated in floating point and
// the modulus applied afterward. Bounded moduli -> BoundedModulusError.
std::vector<DensityPoint> density_series(const DensityQuery& query, const CheckpointSchedule& schedule,
                                         const UnboundednessGate& gate = {});

struct DensityOptions {
    CheckpointSchedule schedule;
    ClassifyOptions classify;
    UnboundednessGate gate;
};

struct DensityResult {
    std::vector<DensityPoint> points;
    LimitEstimate estimate;
    bool beta_outside_definition = false; // beta > 1
};

DensityResult density(const DensityQuery& query, const DensityOptions& options = {});

} // namespace fuzzyseq

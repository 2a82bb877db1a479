#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzyseq/detail/rng.hpp"

namespace fuzzyseq {

// One level set [lower, upper] at a given membership level alpha.
struct AlphaCut {
    double alpha = 0;
    double lower = 0;
    double upper = 0;
};

bool operator==(const AlphaCut& a, const AlphaCut& b);

// A fuzzy real number stored as piecewise-linear level-set endpoint
// functions: an ordered list of cuts at 0 = alpha_0 < ... < alpha_m = 1,
// linear in alpha between consecutive entries. Level sets are nested
// (lower nondecreasing, upper nonincreasing in alpha) and the support is
// the bounded interval at alpha = 0.
//
// Values are immutable after construction; all operations are pure.
class FuzzyNumber {
public:
    // the crisp zero
    FuzzyNumber();

    static FuzzyNumber triangular(double a, double b, double c);
    static FuzzyNumber trapezoidal(double a, double b, double c, double d);
    static FuzzyNumber crisp(double x);
    static FuzzyNumber zero() { return crisp(0.0); }

    // Breakpoints must start at alpha 0, end at alpha 1, be strictly
    // increasing in alpha, nested, and have lower <= upper. Redundant
    // collinear interior breakpoints are removed so equal numbers have
    // equal representations.
    static FuzzyNumber from_cuts(std::vector<AlphaCut> cuts);

    // Level set at alpha (linear interpolation between stored breakpoints,
    // exact at a stored breakpoint). alpha outside [0,1] -> std::domain_error.
    AlphaCut cut(double alpha) const;

    const std::vector<AlphaCut>& breakpoints() const { return cuts_; }

    double support_lower() const { return cuts_.front().lower; }
    double support_upper() const { return cuts_.front().upper; }
    double core_lower() const { return cuts_.back().lower; }
    double core_upper() const { return cuts_.back().upper; }
    bool is_crisp() const;

    // canonical-representation equality
    friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b);

private:
    explicit FuzzyNumber(std::vector<AlphaCut> cuts) : cuts_(std::move(cuts)) {}
    std::vector<AlphaCut> cuts_;
};

// Levelwise interval sum on the merged breakpoint grid.
FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v);

// Levelwise scalar multiple; a negative scalar swaps the endpoints.
FuzzyNumber operator*(double c, const FuzzyNumber& u);

// Hausdorff distance between the level sets of u and v at alpha:
// max(|lower difference|, |upper difference|).
double hausdorff_at(const FuzzyNumber& u, const FuzzyNumber& v, double alpha);

// Supremum of hausdorff_at over alpha in [0,1], evaluated exactly: the gap
// is piecewise linear on the merged grid, so the supremum is attained at a
// breakpoint or a sign-change root of the endpoint differences. Never sampled.
double metric_d(const FuzzyNumber& u, const FuzzyNumber& v);

// Independent check for metric_d: max of hausdorff_at over a uniform
// alpha grid of grid_size points including 0 and 1. A lower bound on
// metric_d converging to it as the grid refines. grid_size >= 2.
double metric_d_grid_oracle(const FuzzyNumber& u, const FuzzyNumber& v, std::size_t grid_size);

// Lipschitz bound (in alpha) of the Hausdorff gap between u and v: the
// largest endpoint-difference slope over the merged grid. Bounds how far
// the grid oracle can sit below metric_d.
double endpoint_slope_bound(const FuzzyNumber& u, const FuzzyNumber& v);

// Seeded generator for property tests and randomized suites: a valid
// piecewise-linear fuzzy number with up to max_interior extra breakpoints,
// core near [-span, span].
FuzzyNumber random_fuzzy_number(SplitMix64& rng, int max_interior = 3, double span = 5.0);

// "tri:a,b,c" | "trap:a,b,c,d" | "crisp:x" | "zero"
FuzzyNumber parse_fuzzy_number(const std::string& spec);

} // namespace fuzzyseq

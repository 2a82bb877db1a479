#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fuzzyseq/fuzzy_number.hpp"
#include "fuzzyseq/index_set.hpp"
#include "fuzzyseq/modulus.hpp"

namespace fuzzyseq {

// A rule mapping index k >= 1 to a fuzzy number. Structured rules (two-valued,
// alternating, growing peak) admit closed-form prefix statistics; custom rules
// are scanned. Immutable; cheap to copy.
class FuzzySequence {
public:
    // value_on at the indices of `on`, value_off elsewhere
    static FuzzySequence two_valued(IndexSet on, FuzzyNumber value_on, FuzzyNumber value_off);

    static FuzzySequence alternating(FuzzyNumber value_odd, FuzzyNumber value_even);

    // triangular(k-1, k, k+1) at the indices of `on`, crisp 0 elsewhere
    static FuzzySequence growing_peak(IndexSet on);

    static FuzzySequence custom(std::function<FuzzyNumber(std::uint64_t)> rule,
                                std::string description = "custom");

    // k >= 1, else std::domain_error
    FuzzyNumber value(std::uint64_t k) const;

    // |{k <= n : d(X_k, target) >= epsilon}|, exact. Closed form for
    // structured rules (per-branch distances are index-independent, and the
    // growing-peak branch distance is eventually increasing in k, so a
    // threshold index plus prefix counts suffice); custom rules scan, chunked
    // across disjoint ranges when FUZZYSEQ_THREADS allows. epsilon > 0.
    std::uint64_t exceed_count(const FuzzyNumber& target, double epsilon, std::uint64_t n) const;

    // sum_{k <= n} f(d(X_k, target)). Closed form for structured rules
    // (growing-peak enumerates its on-set members); custom rules scan serially
    // so the summation order is fixed.
    double modulus_distance_sum(const FuzzyNumber& target, const Modulus& f, std::uint64_t n) const;

    // Same sums at several prefixes in one pass (prefixes need not be sorted;
    // results are returned in the given order).
    std::vector<double> modulus_distance_sums(const FuzzyNumber& target, const Modulus& f,
                                              const std::vector<std::uint64_t>& prefixes) const;
    std::vector<std::uint64_t> exceed_counts(const FuzzyNumber& target, double epsilon,
                                             const std::vector<std::uint64_t>& prefixes) const;

    const std::string& describe() const { return description_; }

private:
    enum class Rule { TwoValued, Alternating, GrowingPeak, Custom };

    FuzzySequence() = default;

    double on_branch_distance(std::uint64_t k, const FuzzyNumber& target) const;

    Rule rule_ = Rule::Custom;
    IndexSet on_ = IndexSet::empty();
    FuzzyNumber first_, second_; // on/off or odd/even values
    std::function<FuzzyNumber(std::uint64_t)> fn_;
    std::string description_;
};

// Named sequences used throughout the worked examples:
//   "ex3.4"   alternating tri(-3,-2,-1) / tri(1,2,3)
//   "ex3.5"   tri(-3,-2,-1) on cubes, tri(1,2,3) off
//   "thm3.7"  tri(-3,-2,-1) on squares, tri(1,2,3) off
//   "thm3.9"  growing peak on cubes
//   "thm3.15" tri(1,2,3) on cubes, crisp 0 off
FuzzySequence preset_sequence(const std::string& name);

std::vector<std::string> preset_sequence_names();

} // namespace fuzzyseq

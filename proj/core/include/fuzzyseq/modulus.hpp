#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fuzzyseq {

// A modulus function f : [0,inf) -> [0,inf): f(x) = 0 iff x = 0,
// subadditive, nondecreasing, right-continuous at 0. May be bounded
// (e.g. x/(1+x)) or unbounded.
class Modulus {
public:
    Modulus(std::string name, std::function<double(double)> fn, bool declared_unbounded,
            std::map<std::string, double> parameters = {});

    // x < 0 -> std::domain_error
    double operator()(double x) const;

    const std::string& name() const { return name_; }
    bool declared_unbounded() const { return declared_unbounded_; }
    const std::map<std::string, double>& parameters() const { return parameters_; }

    static Modulus identity();
    static Modulus power(double p); // x^p, 0 < p <= 1
    static Modulus log1p();        // ln(x+1)
    static Modulus saturating();   // x/(1+x), bounded

private:
    std::string name_;
    std::function<double(double)> fn_;
    bool declared_unbounded_;
    std::map<std::string, double> parameters_;
};

struct AxiomWitness {
    double x = 0;
    double y = 0; // unused for single-point axioms
    double value = 0;
};

struct AxiomCheck {
    bool passed = true;
    std::optional<AxiomWitness> witness;
    std::string detail;
};

// One entry per modulus axiom; a failing axiom is a report entry, not an error.
struct ModulusAxiomReport {
    AxiomCheck vanishes_only_at_zero; // f(x) = 0 iff x = 0
    AxiomCheck subadditive;           // f(x+y) <= f(x) + f(y)
    AxiomCheck increasing;            // nondecreasing
    AxiomCheck right_continuous;      // f(delta) -> 0 as delta -> 0+

    bool all_passed() const {
        return vanishes_only_at_zero.passed && subadditive.passed && increasing.passed &&
               right_continuous.passed;
    }
};

// Checks the four axioms on seeded pseudo-random points in [0, max_x]
// (first counterexample per axiom is reported). Right-continuity is probed
// on a descending geometric grid; rc_tol is the accepted residual at the
// smallest probe, which misjudges extremely slowly vanishing moduli.
ModulusAxiomReport check_modulus_axioms(const Modulus& f, std::size_t samples, double max_x,
                                        std::uint64_t seed = 42, double rc_tol = 1e-9);

// min over t_values of f(t)/t: an upper estimate of lim f(t)/t, which for a
// subadditive modulus equals inf{f(t)/t : t > 0}. t_values must be positive
// and increasing; empty -> std::domain_error.
double estimate_liminf_ratio(const Modulus& f, const std::vector<double>& t_values);

struct SubmultCheck {
    bool passed = true;
    std::optional<AxiomWitness> witness;
};

// Verifies f(x*y) >= c*f(x)*f(y) on seeded sample pairs in [0, max_x]^2; c > 0.
SubmultCheck check_submultiplicative_lower(const Modulus& f, double c, std::size_t samples,
                                           double max_x, std::uint64_t seed = 42);

// true iff f exceeds threshold somewhere on (0, t_max]; threshold > 0.
bool is_unbounded_probe(const Modulus& f, double threshold, double t_max);

// f-density and f-statistical rates are undefined for bounded moduli, so
// those operations refuse any modulus failing this gate. The probe threshold
// must stay low enough to admit slowly growing moduli such as ln(x+1).
struct UnboundednessGate {
    double threshold = 10.0;
    double t_max = 1e10;
};

bool passes_unboundedness_gate(const Modulus& f, const UnboundednessGate& gate = {});

// "identity" | "power:p=<real>" | "log1p" | "saturating"
Modulus parse_modulus(const std::string& spec);

} // namespace fuzzyseq

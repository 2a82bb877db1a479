#include "fuzzyseq/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fuzzyseq/detail/rng.hpp"

namespace fuzzyseq {

Modulus::Modulus(std::string name, std::function<double(double)> fn, bool declared_unbounded,
                 std::map<std::string, double> parameters)
    : name_(std::move(name)),
      fn_(std::move(fn)),
      declared_unbounded_(declared_unbounded),
      parameters_(std::move(parameters)) {
    if (!fn_) throw std::invalid_argument("modulus needs an evaluation function");
}

double Modulus::operator()(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("modulus argument must be >= 0");
    return fn_(x);
}

Modulus Modulus::identity() {
    return Modulus("identity", [](double x) { return x; }, true);
}

Modulus Modulus::power(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("power modulus needs 0 < p <= 1");
    return Modulus("power", [p](double x) { return std::pow(x, p); }, true, {{"p", p}});
}

Modulus Modulus::log1p() {
    return Modulus("log1p", [](double x) { return std::log1p(x); }, true);
}

Modulus Modulus::saturating() {
    return Modulus("saturating", [](double x) { return x / (1.0 + x); }, false);
}

ModulusAxiomReport check_modulus_axioms(const Modulus& f, std::size_t samples, double max_x,
                                        std::uint64_t seed, double rc_tol) {
    if (samples < 2) throw std::domain_error("samples must be >= 2");
    if (!(max_x > 0.0)) throw std::domain_error("max_x must be > 0");

    ModulusAxiomReport report;
    SplitMix64 rng(seed);

    // (i) f(x) = 0 iff x = 0
    if (f(0.0) != 0.0) {
        report.vanishes_only_at_zero = {false, AxiomWitness{0.0, 0.0, f(0.0)}, "f(0) != 0"};
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            const double x = rng.uniform(0.0, max_x) + 1e-12;
            if (f(x) <= 0.0) {
                report.vanishes_only_at_zero = {false, AxiomWitness{x, 0.0, f(x)}, "f(x) = 0 for x > 0"};
                break;
            }
        }
    }

    // (ii) subadditivity on sampled pairs, with a rounding allowance
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.uniform(0.0, max_x);
        const double y = rng.uniform(0.0, max_x);
        const double rhs = f(x) + f(y);
        if (f(x + y) > rhs + 1e-12 * std::max(1.0, rhs)) {
            report.subadditive = {false, AxiomWitness{x, y, f(x + y)}, "f(x+y) > f(x)+f(y)"};
            break;
        }
    }

    // (iii) nondecreasing on sampled ordered pairs
    for (std::size_t i = 0; i < samples; ++i) {
        double x = rng.uniform(0.0, max_x);
        double y = rng.uniform(0.0, max_x);
        if (x > y) std::swap(x, y);
        if (f(x) > f(y) + 1e-12 * std::max(1.0, std::fabs(f(y)))) {
            report.increasing = {false, AxiomWitness{x, y, f(x)}, "f decreases between sampled points"};
            break;
        }
    }

    // (iv) right-continuity at 0 along a descending geometric grid
    double prev = f(std::min(1.0, max_x));
    double delta = std::min(1.0, max_x);
    for (int j = 0; j < 120 && delta > 0.0; ++j) {
        delta *= 0.5;
        const double val = f(delta);
        if (val > prev + 1e-12 * std::max(1.0, prev)) {
            report.right_continuous = {false, AxiomWitness{delta, 0.0, val}, "f not settling while delta decreases"};
            break;
        }
        prev = val;
    }
    if (report.right_continuous.passed && !(prev <= rc_tol)) {
        report.right_continuous = {false, AxiomWitness{delta, 0.0, prev}, "f(delta) stays above rc_tol as delta -> 0"};
    }
    return report;
}

double estimate_liminf_ratio(const Modulus& f, const std::vector<double>& t_values) {
    if (t_values.empty()) throw std::domain_error("t_values must be nonempty");
    double best = std::numeric_limits<double>::infinity();
    double prev = 0.0;
    for (double t : t_values) {
        if (!(t > 0.0)) throw std::domain_error("t_values must be positive");
        if (!(t > prev)) throw std::domain_error("t_values must be increasing");
        prev = t;
        best = std::min(best, f(t) / t);
    }
    return best;
}

SubmultCheck check_submultiplicative_lower(const Modulus& f, double c, std::size_t samples,
                                           double max_x, std::uint64_t seed) {
    if (!(c > 0.0)) throw std::domain_error("c must be > 0");
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.uniform(0.0, max_x);
        const double y = rng.uniform(0.0, max_x);
        const double lhs = f(x * y);
        const double rhs = c * f(x) * f(y);
        if (lhs < rhs - 1e-12 * std::max(1.0, rhs)) {
            return {false, AxiomWitness{x, y, lhs}};
        }
    }
    return {true, std::nullopt};
}

bool is_unbounded_probe(const Modulus& f, double threshold, double t_max) {
    if (!(threshold > 0.0)) throw std::domain_error("threshold must be > 0");
    if (!(t_max > 0.0)) throw std::domain_error("t_max must be > 0");
    double t = t_max;
    for (int i = 0; i < 2200 && t > 0.0; ++i) {
        if (f(t) > threshold) return true;
        t *= 0.5;
    }
    return false;
}

bool passes_unboundedness_gate(const Modulus& f, const UnboundednessGate& gate) {
    return f.declared_unbounded() && is_unbounded_probe(f, gate.threshold, gate.t_max);
}

Modulus parse_modulus(const std::string& spec) {
    if (spec == "identity") return Modulus::identity();
    if (spec == "log1p") return Modulus::log1p();
    if (spec == "saturating") return Modulus::saturating();
    const std::string prefix = "power:p=";
    if (spec.rfind(prefix, 0) == 0) {
        std::size_t pos = 0;
        const std::string arg = spec.substr(prefix.size());
        const double p = std::stod(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument("bad power modulus '" + spec + "'");
        return Modulus::power(p);
    }
    throw std::invalid_argument("unknown modulus '" + spec +
                                "' (known: identity, power:p=<real>, log1p, saturating)");
}

} // namespace fuzzyseq

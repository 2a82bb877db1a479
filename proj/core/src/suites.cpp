#include "fuzzyseq/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "fuzzyseq/analysis.hpp"
#include "fuzzyseq/density.hpp"
#include "fuzzyseq/detail/rng.hpp"

namespace fuzzyseq {

namespace {

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return std::string(buf);
}

void add_check(SuiteReport& report, std::string label, bool passed, std::string observed) {
    report.checks.push_back({std::move(label), passed, std::move(observed)});
}

Modulus linear_plus_log() {
    // modulus with lim f(t)/t = 1 > 0, used where that hypothesis matters
    return Modulus("linear_plus_log", [](double x) { return x + std::log1p(x); }, true);
}

std::vector<double> liminf_grid() {
    std::vector<double> t;
    for (double v = 1.0; v <= 1e6; v *= 2.0) t.push_back(v);
    return t;
}

// distances d(X_k, target) for k = 1..n
std::vector<double> scan_distances(const FuzzySequence& seq, const FuzzyNumber& target, std::uint64_t n) {
    std::vector<double> d(n);
    for (std::uint64_t k = 1; k <= n; ++k) d[k - 1] = metric_d(seq.value(k), target);
    return d;
}

FuzzySequence seeded_two_valued(SplitMix64& rng, IndexSet on, FuzzyNumber limit) {
    return FuzzySequence::two_valued(std::move(on), random_fuzzy_number(rng), std::move(limit));
}

constexpr std::uint64_t kScanN = 10'000;
constexpr double kAccumTol = 1e-9;

// ---- 2.6 -------------------------------------------------------------------

SuiteReport suite_2_6(std::uint64_t) {
    SuiteReport r{"2.6", "density estimates are nonincreasing in the order: "
                         "est_gamma(n) <= est_beta(n) for beta <= gamma, at every checkpoint"};
    const std::vector<std::pair<double, double>> orders{{0.25, 0.5}, {0.5, 0.75}, {0.75, 1.0}, {0.25, 1.0}};
    const std::vector<IndexSet> sets{IndexSet::powers(3), IndexSet::multiples(2),
                                     IndexSet::explicit_set({1, 2, 3, 100})};
    const std::vector<Modulus> moduli{Modulus::identity(), Modulus::log1p(), Modulus::power(0.5)};
    for (const auto& set : sets) {
        for (const auto& f : moduli) {
            bool ok = true;
            double worst = 0.0;
            for (auto [beta, gamma] : orders) {
                const auto lo = density_series({set, f, beta}, {});
                const auto hi = density_series({set, f, gamma}, {});
                for (std::size_t i = 0; i < lo.size(); ++i) {
                    worst = std::max(worst, hi[i].estimate - lo[i].estimate);
                    if (hi[i].estimate > lo[i].estimate + 1e-15) ok = false;
                }
            }
            add_check(r, "order monotonicity, " + set.describe() + ", f=" + f.name(), ok,
                      fmt("max(est_gamma - est_beta) = %.3e", worst));
        }
    }
    return r;
}

// ---- 3.6 -------------------------------------------------------------------

SuiteReport suite_3_6(std::uint64_t seed) {
    SuiteReport r{"3.6", "S^b(F,f)-limits are linear: scalar multiples and sums of convergent "
                         "sequences converge to the scaled / summed limits"};
    SplitMix64 rng(seed);

    // scalar action on the metric: d(cu, cv) = |c| d(u, v)
    {
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const FuzzyNumber u = random_fuzzy_number(rng);
            const FuzzyNumber v = random_fuzzy_number(rng);
            const double c = rng.uniform(-3.0, 3.0);
            const double lhs = metric_d(c * u, c * v);
            const double rhs = std::fabs(c) * metric_d(u, v);
            worst = std::max(worst, std::fabs(lhs - rhs));
            if (std::fabs(lhs - rhs) > 1e-12 * std::max(1.0, rhs)) ok = false;
        }
        add_check(r, "scalar metric identity d(cu,cv) = |c| d(u,v)", ok, fmt("max deviation %.3e", worst));
    }

    const FuzzyNumber L1 = FuzzyNumber::triangular(1, 2, 3);
    const FuzzyNumber L2 = FuzzyNumber::triangular(-2, 0, 1);
    const FuzzySequence X = seeded_two_valued(rng, IndexSet::powers(2), L1);
    const FuzzySequence Y = seeded_two_valued(rng, IndexSet::powers(3), L2);

    // scalar multiples of a convergent sequence converge to the scaled limit
    {
        bool ok = true;
        std::string obs;
        for (double c : {-2.0, 0.5, 3.0}) {
            const FuzzySequence cX = FuzzySequence::custom(
                [c, X](std::uint64_t k) { return c * X.value(k); }, "scaled");
            AnalysisOptions opts;
            opts.schedule = {100, 3.1622776601683795, 7}; // to 1e5; the scaled rule is scanned
            StatQuery q{cX, c * L1, Modulus::identity(), 0.9, 0.5};
            const StatResult res = stat_converges(q, opts);
            ok = ok && res.converged_to_zero;
            obs += fmt("c=%.1f rate@%llu=%.4g; ", c, (unsigned long long)res.points.back().n,
                       res.points.back().rate);
        }
        add_check(r, "S^b(F,f)-lim cX = c L1 (classifier)", ok, obs);
    }

    // exceed-count subadditivity for the sum, exact by scan
    {
        const FuzzyNumber L12 = L1 + L2;
        const auto dx = scan_distances(X, L1, kScanN);
        const auto dy = scan_distances(Y, L2, kScanN);
        bool ok = true;
        std::uint64_t cx = 0, cy = 0, cs = 0;
        for (double eps : {1.0, 0.25}) {
            cx = cy = cs = 0;
            for (std::uint64_t k = 1; k <= kScanN; ++k) {
                const double ds = metric_d(X.value(k) + Y.value(k), L12);
                if (dx[k - 1] >= eps / 2) ++cx;
                if (dy[k - 1] >= eps / 2) ++cy;
                if (ds >= eps) ++cs;
                if (cs > cx + cy) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        add_check(r, "exceed(X+Y, eps) <= exceed(X, eps/2) + exceed(Y, eps/2), n <= 1e4", ok,
                  fmt("at n=1e4, eps=0.25: %llu <= %llu + %llu", (unsigned long long)cs,
                      (unsigned long long)cx, (unsigned long long)cy));
    }

    // the summed sequence converges to the summed limit
    {
        const FuzzySequence XY = FuzzySequence::custom(
            [X, Y](std::uint64_t k) { return X.value(k) + Y.value(k); }, "sum");
        AnalysisOptions opts;
        opts.schedule = {100, 3.1622776601683795, 7};
        StatQuery q{XY, L1 + L2, Modulus::identity(), 0.9, 0.5};
        const StatResult res = stat_converges(q, opts);
        add_check(r, "S^b(F,f)-lim (X+Y) = L1 + L2 (classifier)", res.converged_to_zero,
                  fmt("rate@%llu=%.4g, class=%s", (unsigned long long)res.points.back().n,
                      res.points.back().rate, to_string(res.estimate.classification).c_str()));
    }
    return r;
}

// ---- 3.7 -------------------------------------------------------------------

SuiteReport suite_3_7(std::uint64_t seed) {
    SuiteReport r{"3.7", "S^b(F,f) subset of S^g(F,f) for 0 < b <= g <= 1, and the inclusion is strict"};
    SplitMix64 rng(seed);

    // pointwise mechanism: f nondecreasing makes the rate nonincreasing in the order
    {
        bool ok = true;
        double worst = 0.0;
        const std::vector<FuzzySequence> seqs{preset_sequence("thm3.7"),
                                              seeded_two_valued(rng, IndexSet::powers(2), FuzzyNumber::crisp(1))};
        const std::vector<FuzzyNumber> targets{FuzzyNumber::triangular(1, 2, 3), FuzzyNumber::crisp(1)};
        for (std::size_t s = 0; s < seqs.size(); ++s) {
            for (const Modulus& f : {Modulus::power(1.0), Modulus::power(0.5), Modulus::log1p()}) {
                for (auto [beta, gamma] : std::vector<std::pair<double, double>>{{0.4, 0.75}, {0.5, 1.0}}) {
                    const auto lo = stat_rate_series({seqs[s], targets[s], f, beta, 1.0}, {});
                    const auto hi = stat_rate_series({seqs[s], targets[s], f, gamma, 1.0}, {});
                    for (std::size_t i = 0; i < lo.size(); ++i) {
                        worst = std::max(worst, hi[i].rate - lo[i].rate);
                        if (hi[i].rate > lo[i].rate + 1e-15) ok = false;
                    }
                }
            }
        }
        add_check(r, "rate_gamma(n) <= rate_beta(n) at every checkpoint", ok, fmt("max excess %.3e", worst));
    }

    // strictness witness: the square-indexed sequence
    const FuzzySequence w = preset_sequence("thm3.7");
    const FuzzyNumber target = FuzzyNumber::triangular(1, 2, 3);
    {
        const StatClassResult in = stat_class(w, target, Modulus::power(1.0), 0.75);
        add_check(r, "witness converges at order 0.75 (every eps in grid)", in.in_class,
                  fmt("final rate at eps=1: %.6g", in.per_epsilon[1].points.back().rate));
    }
    {
        AnalysisOptions opts;
        opts.classify.div_threshold = 2.0; // the rate grows like n^0.1; 1e3 is out of reach by 1e7
        const StatResult out = stat_converges({w, target, Modulus::power(1.0), 0.4, 1.0}, opts);
        add_check(r, "witness diverges at order 0.4",
                  out.estimate.classification == LimitClass::DivergedToInfinity,
                  fmt("final rate %.6g, class=%s", out.points.back().rate,
                      to_string(out.estimate.classification).c_str()));
    }
    return r;
}

// ---- 3.8 -------------------------------------------------------------------

SuiteReport suite_3_8(std::uint64_t seed) {
    SuiteReport r{"3.8", "S^b(F,f) subset of S(F,f) with the same limit, strictly"};
    SplitMix64 rng(seed);
    {
        bool ok = true;
        const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(3), FuzzyNumber::crisp(2));
        for (double beta : {0.5, 0.75}) {
            const auto lo = stat_rate_series({seq, FuzzyNumber::crisp(2), Modulus::log1p(), beta, 0.5}, {});
            const auto hi = stat_rate_series({seq, FuzzyNumber::crisp(2), Modulus::log1p(), 1.0, 0.5}, {});
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (hi[i].rate > lo[i].rate + 1e-15) ok = false;
        }
        add_check(r, "order-1 rate <= order-beta rate at every checkpoint", ok, "beta in {0.5, 0.75}");
    }
    {
        const FuzzySequence w = preset_sequence("ex3.5");
        const FuzzyNumber target = FuzzyNumber::triangular(1, 2, 3);
        const StatClassResult atb = stat_class(w, target, Modulus::power(1.0), 0.75);
        const StatClassResult at1 = stat_class(w, target, Modulus::power(1.0), 1.0);
        add_check(r, "witness in class at order 0.75 and order 1 with the same limit",
                  atb.in_class && at1.in_class,
                  fmt("rates at eps=1: %.4g (b=0.75), %.4g (b=1)", atb.per_epsilon[1].points.back().rate,
                      at1.per_epsilon[1].points.back().rate));
    }
    {
        // strictness: in the order-1 class but not at small order
        AnalysisOptions opts;
        opts.classify.div_threshold = 2.0;
        const FuzzySequence w = preset_sequence("thm3.7");
        const StatResult out =
            stat_converges({w, FuzzyNumber::triangular(1, 2, 3), Modulus::power(1.0), 0.4, 1.0}, opts);
        add_check(r, "inclusion is strict (order-0.4 divergence witness)",
                  out.estimate.classification == LimitClass::DivergedToInfinity,
                  fmt("final rate %.4g", out.points.back().rate));
    }
    return r;
}

// ---- 3.9 -------------------------------------------------------------------

SuiteReport suite_3_9(std::uint64_t seed) {
    SuiteReport r{"3.9", "S^b(F,f) subset of S^b(F), strictly: an f-statistically convergent sequence is "
                         "statistically convergent of the same order, not conversely"};
    SplitMix64 rng(seed);

    // classifier-level implication on seeded members (zero f-density of the
    // exceed set forces zero density of it)
    {
        bool ok = true;
        std::string obs;
        for (unsigned q : {2u, 3u}) {
            const FuzzyNumber limit = random_fuzzy_number(rng);
            const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(q), limit);
            const StatResult with_f = stat_converges({seq, limit, Modulus::power(0.5), 1.0, 0.5}, {});
            const StatResult plain = stat_converges({seq, limit, Modulus::identity(), 1.0, 0.5}, {});
            if (with_f.converged_to_zero && !plain.converged_to_zero) ok = false;
            obs += fmt("q=%u: f-zero=%d plain-zero=%d; ", q, with_f.converged_to_zero ? 1 : 0,
                       plain.converged_to_zero ? 1 : 0);
        }
        add_check(r, "f-rate -> 0 implies identity-rate -> 0 on seeded members", ok, obs);
    }

    // strictness witness: the growing peak on cubes
    const FuzzySequence w = preset_sequence("thm3.9");
    {
        const StatClassResult plain = stat_class(w, FuzzyNumber::zero(), Modulus::identity(), 0.75);
        add_check(r, "witness statistically convergent of order 0.75 (identity modulus)", plain.in_class,
                  fmt("final rate at eps=1: %.4g", plain.per_epsilon[1].points.back().rate));
    }
    {
        const StatResult with_f = stat_converges({w, FuzzyNumber::zero(), Modulus::log1p(), 0.75, 1.0}, {});
        const bool not_zero = !with_f.converged_to_zero && with_f.estimate.value >= 0.3;
        add_check(r, "witness not f-statistically convergent (log1p rate stays near 4/9)", not_zero,
                  fmt("final rate %.4f, class=%s", with_f.points.back().rate,
                      to_string(with_f.estimate.classification).c_str()));
    }
    {
        // the quantity behind the strictness argument: the exceed set has
        // f-density 1/3 at order 1
        const StatResult dfb = stat_converges({w, FuzzyNumber::zero(), Modulus::log1p(), 1.0, 1.0}, {});
        add_check(r, "f-density of the exceed set at order 1 is near 1/3",
                  std::fabs(dfb.points.back().rate - 1.0 / 3.0) < 0.01,
                  fmt("final rate %.4f", dfb.points.back().rate));
    }
    return r;
}

// ---- 3.11 ------------------------------------------------------------------

SuiteReport suite_3_11(std::uint64_t seed) {
    SuiteReport r{"3.11", "w^{b,0}(F,f) subset of w^{b,inf}(F,f) for b > 0; "
                          "w^b(F,f) subset of w^{b,inf}(F,f) for b >= 1"};
    SplitMix64 rng(seed);
    {
        bool ok = true;
        std::string obs;
        for (double beta : {0.75, 1.0, 1.5}) {
            const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(3), FuzzyNumber::zero());
            const CesaroClassResult c = cesaro_class({seq, FuzzyNumber::zero(), Modulus::log1p(), beta}, {});
            if (c.in_zero_class && !c.in_bounded_class) ok = false;
            obs += fmt("b=%.1f: zero=%d sup=%.4g; ", beta, c.in_zero_class ? 1 : 0, c.running_sup);
        }
        add_check(r, "zero-class members are bounded-class members", ok, obs);
    }
    {
        // pointwise triangle bound behind (ii), exact by scan
        const FuzzyNumber X0 = FuzzyNumber::triangular(1, 2, 3);
        const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(2), X0);
        const Modulus f = Modulus::log1p();
        const auto d_zero = scan_distances(seq, FuzzyNumber::zero(), kScanN);
        const auto d_x0 = scan_distances(seq, X0, kScanN);
        const double shift = f(metric_d(X0, FuzzyNumber::zero()));
        bool ok = true;
        double worst = 0.0;
        double sum_zero = 0.0, sum_x0 = 0.0;
        for (std::uint64_t n = 1; n <= kScanN; ++n) {
            sum_zero += f(d_zero[n - 1]);
            sum_x0 += f(d_x0[n - 1]);
            const double nb = static_cast<double>(n); // beta = 1
            const double lhs = sum_zero / nb;
            const double rhs = sum_x0 / nb + shift;
            worst = std::max(worst, lhs - rhs);
            if (lhs > rhs + kAccumTol) ok = false;
        }
        add_check(r, "mean to 0 <= mean to X0 + f(d(X0,0)) for all n <= 1e4", ok,
                  fmt("max excess %.3e", worst));
    }
    return r;
}

// ---- 3.12 ------------------------------------------------------------------

SuiteReport suite_3_12(std::uint64_t seed) {
    SuiteReport r{"3.12", "identity-modulus Cesaro classes embed into the f-classes for b >= 1: "
                          "w^b(F) in w^b(F,f), w^{b,0}(F) in w^{b,0}(F,f), w^{b,inf}(F) in w^{b,inf}(F,f)"};
    SplitMix64 rng(seed);

    // pointwise bound from the epsilon-delta split: for f(t) < eps on (0,delta],
    //   (1/n^b) sum f(d_k) <= eps n^(1-b) + 2 f(1) delta^-1 (1/n^b) sum d_k
    {
        bool ok = true;
        std::string obs;
        const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(2), FuzzyNumber::crisp(1));
        const auto d = scan_distances(seq, FuzzyNumber::zero(), kScanN);
        for (const Modulus& f : {Modulus::log1p(), Modulus::saturating(), Modulus::power(0.5)}) {
            const double eps = 0.05;
            double delta = 1.0;
            while (delta > 1e-12 && !(f(delta) < eps)) delta *= 0.5;
            bool mod_ok = delta > 1e-12 && delta < 1.0;
            double sum_f = 0.0, sum_d = 0.0, worst = 0.0;
            for (std::uint64_t n = 1; n <= kScanN && mod_ok; ++n) {
                sum_f += f(d[n - 1]);
                sum_d += d[n - 1];
                const double nb = static_cast<double>(n); // beta = 1
                const double lhs = sum_f / nb;
                const double rhs = eps + 2.0 * f(1.0) / delta * (sum_d / nb);
                worst = std::max(worst, lhs - rhs);
                if (lhs > rhs + kAccumTol) mod_ok = false;
            }
            ok = ok && mod_ok;
            obs += fmt("f=%s delta=%.4g excess=%.2e; ", f.name().c_str(), delta, worst);
        }
        add_check(r, "split bound holds for all n <= 1e4 (b = 1)", ok, obs);
    }

    // witness: a bounded identity-mean sequence has bounded f-means for every built-in f
    {
        const FuzzySequence ones = FuzzySequence::two_valued(IndexSet::all(), FuzzyNumber::crisp(1),
                                                             FuzzyNumber::zero());
        bool ok = true;
        std::string obs;
        const CesaroClassResult plain = cesaro_class({ones, FuzzyNumber::zero(), Modulus::identity(), 1.0}, {});
        ok = plain.in_bounded_class;
        obs += fmt("identity sup=%.4g; ", plain.running_sup);
        for (const Modulus& f : {Modulus::log1p(), Modulus::saturating(), Modulus::power(0.5)}) {
            const CesaroClassResult c = cesaro_class({ones, FuzzyNumber::zero(), f, 1.0}, {});
            ok = ok && c.in_bounded_class;
            obs += fmt("%s sup=%.4g; ", f.name().c_str(), c.running_sup);
        }
        add_check(r, "constant crisp(1): bounded identity-means and bounded f-means", ok, obs);
    }
    return r;
}

// ---- 3.13 ------------------------------------------------------------------

SuiteReport suite_3_13(std::uint64_t seed) {
    SuiteReport r{"3.13", "if lim f(t)/t > 0 then w^b(F,f) subset of w^b(F)"};
    SplitMix64 rng(seed);
    for (const Modulus& f : {Modulus::identity(), linear_plus_log()}) {
        const double ell_hat = estimate_liminf_ratio(f, liminf_grid());
        const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(3), FuzzyNumber::crisp(2));
        const auto d = scan_distances(seq, FuzzyNumber::crisp(2), kScanN);
        bool lower_ok = true;
        for (double dk : d)
            if (f(dk) < ell_hat * dk - 1e-12) lower_ok = false;
        bool sum_ok = true;
        double sum_d = 0.0, sum_f = 0.0, worst = 0.0;
        for (std::uint64_t n = 1; n <= kScanN; ++n) {
            sum_d += d[n - 1];
            sum_f += f(d[n - 1]);
            worst = std::max(worst, sum_d - sum_f / ell_hat);
            if (sum_d > sum_f / ell_hat + kAccumTol) sum_ok = false;
        }
        add_check(r, "f=" + f.name() + ": f(d) >= ell_hat d on scanned distances", lower_ok,
                  fmt("ell_hat=%.8g", ell_hat));
        add_check(r, "f=" + f.name() + ": sum d <= ell_hat^-1 sum f(d) for all n <= 1e4", sum_ok,
                  fmt("max excess %.3e", worst));
    }
    {
        const FuzzySequence w = preset_sequence("thm3.15");
        const CesaroClassResult with_f = cesaro_class({w, FuzzyNumber::zero(), linear_plus_log(), 0.75}, {});
        const CesaroClassResult plain = cesaro_class({w, FuzzyNumber::zero(), Modulus::identity(), 0.75}, {});
        add_check(r, "witness: f-means -> 0 and identity-means -> 0 at order 0.75",
                  with_f.in_zero_class && plain.in_zero_class,
                  fmt("f-mean %.4g, identity-mean %.4g", with_f.to_zero.back().mean, plain.to_zero.back().mean));
    }
    return r;
}

// ---- 3.14 ------------------------------------------------------------------

SuiteReport suite_3_14(std::uint64_t) {
    SuiteReport r{"3.14", "if lim f(t)/t > 0 and b >= 1 then w^b(F,f) = w^b(F)"};
    const Modulus f = linear_plus_log();
    const double ell_hat = estimate_liminf_ratio(f, liminf_grid());
    add_check(r, "hypothesis lim f(t)/t > 0 (grid estimate)", ell_hat > 0.5, fmt("ell_hat=%.8g", ell_hat));
    const FuzzySequence w = preset_sequence("thm3.15");
    const CesaroClassResult with_f = cesaro_class({w, FuzzyNumber::zero(), f, 1.0}, {});
    const CesaroClassResult plain = cesaro_class({w, FuzzyNumber::zero(), Modulus::identity(), 1.0}, {});
    add_check(r, "witness at b=1: zero-class under f iff zero-class under identity",
              with_f.in_zero_class == plain.in_zero_class && with_f.in_zero_class,
              fmt("f-mean %.4g, identity-mean %.4g", with_f.to_zero.back().mean, plain.to_zero.back().mean));
    // both one-sided mechanisms are exercised in suites 3.12 and 3.13
    return r;
}

// ---- 3.15 ------------------------------------------------------------------

SuiteReport suite_3_15(std::uint64_t) {
    SuiteReport r{"3.15", "w^b(F,f) subset of w^g(F,f) for 0 < b <= g, and the inclusion is strict"};
    {
        bool ok = true;
        double worst = 0.0;
        for (const Modulus& f : {Modulus::identity(), Modulus::log1p()}) {
            for (auto [beta, gamma] : std::vector<std::pair<double, double>>{{0.2, 1.0}, {0.5, 0.75}}) {
                const auto lo = cesaro_series({preset_sequence("thm3.15"), FuzzyNumber::zero(), f, beta}, {});
                const auto hi = cesaro_series({preset_sequence("thm3.15"), FuzzyNumber::zero(), f, gamma}, {});
                for (std::size_t i = 0; i < lo.size(); ++i) {
                    worst = std::max(worst, hi[i].mean - lo[i].mean);
                    if (hi[i].mean > lo[i].mean + 1e-15) ok = false;
                }
            }
        }
        add_check(r, "mean_gamma(n) <= mean_beta(n) at every checkpoint", ok, fmt("max excess %.3e", worst));
    }
    const FuzzySequence w = preset_sequence("thm3.15");
    {
        const CesaroClassResult c = cesaro_class({w, FuzzyNumber::zero(), Modulus::identity(), 1.0}, {});
        add_check(r, "witness in the zero class at order 1", c.in_zero_class,
                  fmt("mean at n=1e7: %.4g", c.to_zero.back().mean));
    }
    {
        AnalysisOptions opts;
        opts.schedule = {1000, 3.1622776601683795, 11}; // to 1e8, closed form
        opts.classify.div_threshold = 10.0;             // means grow like 3 n^(2/15)
        const CesaroClassResult c = cesaro_class({w, FuzzyNumber::zero(), Modulus::identity(), 0.2}, opts);
        add_check(r, "witness diverges at order 0.2",
                  c.zero_estimate.classification == LimitClass::DivergedToInfinity && !c.in_zero_class,
                  fmt("mean at n=1e8: %.4g", c.to_zero.back().mean));
    }
    return r;
}

// ---- 3.16 ------------------------------------------------------------------

SuiteReport suite_3_16(std::uint64_t seed) {
    SuiteReport r{"3.16", "for f with f(xy) >= c f(x) f(y) and lim f(t)/t > 0: strong Cesaro summability "
                          "of order b implies f-statistical convergence of order g >= b"};
    SplitMix64 rng(seed);

    for (const Modulus& f : {Modulus::power(0.5), Modulus::power(1.0)}) {
        const SubmultCheck sc = check_submultiplicative_lower(f, 1.0, 20'000, 1000.0, seed);
        add_check(r, "f=" + f.name() + fmt("(p=%.1f)", f.parameters().count("p") ? f.parameters().at("p") : 1.0) +
                         ": f(xy) >= f(x) f(y) sampled",
                  sc.passed, sc.passed ? "no counterexample in 2e4 pairs" : "counterexample found");
    }

    // chain inequality, exact by scan:
    //   sum f(d) >= f(sum d) >= f(count(eps) * eps) >= c f(count) f(eps)
    // (first step is finite subadditivity, the rest monotonicity and the
    //  submultiplicative lower bound with c = 1)
    {
        bool ok = true;
        std::string obs;
        const std::vector<FuzzySequence> seqs{preset_sequence("thm3.15"),
                                              seeded_two_valued(rng, IndexSet::powers(2), FuzzyNumber::crisp(0))};
        for (std::size_t s = 0; s < seqs.size(); ++s) {
            const auto d = scan_distances(seqs[s], FuzzyNumber::zero(), kScanN);
            for (const Modulus& f : {Modulus::power(0.5), Modulus::power(1.0)}) {
                for (double eps : {1.0, 0.5}) {
                    double sum_f = 0.0, sum_d = 0.0;
                    std::uint64_t count = 0;
                    for (std::uint64_t n = 1; n <= kScanN && ok; ++n) {
                        sum_f += f(d[n - 1]);
                        sum_d += d[n - 1];
                        if (d[n - 1] >= eps) ++count;
                        const double mid = f(sum_d);
                        const double low = f(static_cast<double>(count) * eps);
                        const double bottom = f(static_cast<double>(count)) * f(eps);
                        if (sum_f < mid - kAccumTol || mid < low - kAccumTol || low < bottom - kAccumTol)
                            ok = false;
                    }
                    if (s == 0 && eps == 1.0)
                        obs += fmt("f=%s: sum f(d)=%.4g >= c f(count) f(eps)=%.4g; ", f.name().c_str(), sum_f,
                                   f(static_cast<double>(count)) * f(eps));
                }
            }
        }
        add_check(r, "chain sum f(d) >= f(sum d) >= f(count eps) >= c f(count) f(eps), n <= 1e4", ok, obs);
    }

    // witness implications on the cube-indexed sequence; the b = 0.5 means
    // decay like n^(-1/6), so that run needs a long closed-form schedule
    {
        const FuzzySequence w = preset_sequence("thm3.15");
        AnalysisOptions opts;
        opts.schedule = {1000, 3.1622776601683795, 19}; // to 1e12, closed form
        const Modulus f = Modulus::power(0.5);
        const CesaroClassResult ces = cesaro_class({w, FuzzyNumber::zero(), f, 0.5}, opts);
        const StatClassResult st = stat_class(w, FuzzyNumber::zero(), f, 0.75, default_epsilon_grid(), opts);
        add_check(r, "witness f=power(0.5): Cesaro means -> 0 at b=0.5 and f-statistical at g=0.75",
                  ces.in_zero_class && st.in_class,
                  fmt("mean %.4g -> rate %.4g", ces.to_zero.back().mean,
                      st.per_epsilon[1].points.back().rate));
    }
    {
        const FuzzySequence w = preset_sequence("thm3.15");
        const Modulus f = Modulus::identity();
        const CesaroClassResult ces = cesaro_class({w, FuzzyNumber::zero(), f, 0.75}, {});
        const StatClassResult st = stat_class(w, FuzzyNumber::zero(), f, 0.75);
        add_check(r, "witness f=identity: Cesaro means -> 0 at b=0.75 and f-statistical at g=0.75",
                  ces.in_zero_class && st.in_class,
                  fmt("mean %.4g -> rate %.4g", ces.to_zero.back().mean,
                      st.per_epsilon[1].points.back().rate));
    }
    return r;
}

// ---- 3.17 ------------------------------------------------------------------

SuiteReport suite_3_17(std::uint64_t seed) {
    SuiteReport r{"3.17", "order b = g = 1 case: strong Cesaro summability w.r.t. such f implies "
                          "f-statistical convergence"};
    SplitMix64 rng(seed);
    {
        const FuzzySequence seq = seeded_two_valued(rng, IndexSet::powers(3), FuzzyNumber::crisp(0));
        const auto d = scan_distances(seq, FuzzyNumber::zero(), kScanN);
        const Modulus f = Modulus::power(0.5);
        bool ok = true;
        double sum_f = 0.0;
        std::uint64_t count = 0;
        for (std::uint64_t n = 1; n <= kScanN && ok; ++n) {
            sum_f += f(d[n - 1]);
            if (d[n - 1] >= 1.0) ++count;
            if (sum_f < f(static_cast<double>(count)) * f(1.0) - kAccumTol) ok = false;
        }
        add_check(r, "chain at b = 1: sum f(d) >= c f(count) f(eps), n <= 1e4", ok,
                  fmt("at n=1e4: %.4g >= %.4g", sum_f, f(static_cast<double>(count)) * f(1.0)));
    }
    {
        const FuzzySequence w = preset_sequence("thm3.15");
        const CesaroClassResult ces = cesaro_class({w, FuzzyNumber::zero(), Modulus::identity(), 1.0}, {});
        const StatClassResult st = stat_class(w, FuzzyNumber::zero(), Modulus::identity(), 1.0);
        add_check(r, "witness: means -> 0 at order 1 and statistically convergent at order 1",
                  ces.in_zero_class && st.in_class,
                  fmt("mean %.4g, rate at eps=1 %.4g", ces.to_zero.back().mean,
                      st.per_epsilon[1].points.back().rate));
    }
    return r;
}

using SuiteFn = SuiteReport (*)(std::uint64_t);

const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> registry{
        {"2.6", suite_2_6},   {"3.6", suite_3_6},   {"3.7", suite_3_7},   {"3.8", suite_3_8},
        {"3.9", suite_3_9},   {"3.11", suite_3_11}, {"3.12", suite_3_12}, {"3.13", suite_3_13},
        {"3.14", suite_3_14}, {"3.15", suite_3_15}, {"3.16", suite_3_16}, {"3.17", suite_3_17},
    };
    return registry;
}

} // namespace

SuiteReport theorem_suite(const std::string& name, std::uint64_t seed) {
    const auto& registry = suite_registry();
    const auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& [k, _] : registry) known += (known.empty() ? "" : ", ") + k;
        throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
    }
    return it->second(seed);
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [k, _] : suite_registry()) names.push_back(k);
    return names;
}

} // namespace fuzzyseq

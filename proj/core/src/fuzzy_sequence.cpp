#include "fuzzyseq/fuzzy_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace fuzzyseq {

namespace {

unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FUZZYSEQ_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) hw = std::min<unsigned long>(v, 256);
    }
    return hw;
}

std::uint64_t odd_count(std::uint64_t n) { return n - n / 2; }

} // namespace

FuzzySequence FuzzySequence::two_valued(IndexSet on, FuzzyNumber value_on, FuzzyNumber value_off) {
    FuzzySequence s;
    s.rule_ = Rule::TwoValued;
    s.on_ = std::move(on);
    s.first_ = std::move(value_on);
    s.second_ = std::move(value_off);
    s.description_ = "two_valued(on=" + s.on_.describe() + ")";
    return s;
}

FuzzySequence FuzzySequence::alternating(FuzzyNumber value_odd, FuzzyNumber value_even) {
    FuzzySequence s;
    s.rule_ = Rule::Alternating;
    s.first_ = std::move(value_odd);
    s.second_ = std::move(value_even);
    s.description_ = "alternating";
    return s;
}

FuzzySequence FuzzySequence::growing_peak(IndexSet on) {
    FuzzySequence s;
    s.rule_ = Rule::GrowingPeak;
    s.on_ = std::move(on);
    s.description_ = "growing_peak(on=" + s.on_.describe() + ")";
    return s;
}

FuzzySequence FuzzySequence::custom(std::function<FuzzyNumber(std::uint64_t)> rule, std::string description) {
    if (!rule) throw std::invalid_argument("custom sequence needs a rule");
    FuzzySequence s;
    s.rule_ = Rule::Custom;
    s.fn_ = std::move(rule);
    s.description_ = std::move(description);
    return s;
}

FuzzyNumber FuzzySequence::value(std::uint64_t k) const {
    if (k < 1) throw std::domain_error("sequence index k must be >= 1");
    switch (rule_) {
        case Rule::TwoValued: return on_.contains(k) ? first_ : second_;
        case Rule::Alternating: return (k % 2 == 1) ? first_ : second_;
        case Rule::GrowingPeak:
            return on_.contains(k) ? FuzzyNumber::triangular(static_cast<double>(k) - 1.0,
                                                             static_cast<double>(k),
                                                             static_cast<double>(k) + 1.0)
                                   : FuzzyNumber::zero();
        case Rule::Custom: return fn_(k);
    }
    throw std::logic_error("unreachable");
}

double FuzzySequence::on_branch_distance(std::uint64_t k, const FuzzyNumber& target) const {
    const double kd = static_cast<double>(k);
    return metric_d(FuzzyNumber::triangular(kd - 1.0, kd, kd + 1.0), target);
}

std::uint64_t FuzzySequence::exceed_count(const FuzzyNumber& target, double epsilon, std::uint64_t n) const {
    if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be > 0");
    if (n == 0) return 0;
    switch (rule_) {
        case Rule::TwoValued: {
            const std::uint64_t on = on_.prefix_count(n);
            std::uint64_t count = 0;
            if (metric_d(first_, target) >= epsilon) count += on;
            if (metric_d(second_, target) >= epsilon) count += n - on;
            return count;
        }
        case Rule::Alternating: {
            std::uint64_t count = 0;
            if (metric_d(first_, target) >= epsilon) count += odd_count(n);
            if (metric_d(second_, target) >= epsilon) count += n / 2;
            return count;
        }
        case Rule::GrowingPeak: {
            std::uint64_t count = 0;
            const double d_off = metric_d(FuzzyNumber::zero(), target);
            if (d_off >= epsilon) count += n - on_.prefix_count(n);
            // Once k-1 clears the target's support, every endpoint gap grows
            // by exactly 1 per step, so the branch distance is increasing from
            // k_mono on. Scan the few members below, count the rest by prefix.
            const std::uint64_t k_mono = static_cast<std::uint64_t>(
                std::max(1.0, std::floor(std::max(0.0, target.support_upper())) + 2.0));
            std::uint64_t k = 1;
            while (true) {
                const auto member = on_.next_member(k);
                if (!member || *member > n || *member >= k_mono) break;
                if (on_branch_distance(*member, target) >= epsilon) ++count;
                k = *member + 1;
            }
            const std::uint64_t mono_start = std::max(k_mono, k);
            if (mono_start <= n) {
                const double base = on_branch_distance(mono_start, target);
                std::uint64_t first_hit;
                if (base >= epsilon) {
                    first_hit = mono_start;
                } else {
                    const double deficit = std::ceil(epsilon - base);
                    if (deficit >= static_cast<double>(n)) return count;
                    first_hit = mono_start + static_cast<std::uint64_t>(deficit);
                    // ceil can land one step early at exact-integer boundaries
                    while (first_hit <= n && on_branch_distance(first_hit, target) < epsilon) ++first_hit;
                }
                if (first_hit <= n)
                    count += on_.prefix_count(n) - on_.prefix_count(first_hit - 1);
            }
            return count;
        }
        case Rule::Custom: {
            const unsigned threads = std::min<std::uint64_t>(thread_cap(), std::max<std::uint64_t>(1, n / 4096));
            if (threads <= 1) {
                std::uint64_t count = 0;
                for (std::uint64_t k = 1; k <= n; ++k)
                    if (metric_d(fn_(k), target) >= epsilon) ++count;
                return count;
            }
            // counting is additive over disjoint ranges, so the split is free
            std::vector<std::future<std::uint64_t>> parts;
            const std::uint64_t chunk = n / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::uint64_t lo = 1 + t * chunk;
                const std::uint64_t hi = (t + 1 == threads) ? n : (t + 1) * chunk;
                parts.push_back(std::async(std::launch::async, [this, &target, epsilon, lo, hi] {
                    std::uint64_t count = 0;
                    for (std::uint64_t k = lo; k <= hi; ++k)
                        if (metric_d(fn_(k), target) >= epsilon) ++count;
                    return count;
                }));
            }
            std::uint64_t count = 0;
            for (auto& p : parts) count += p.get();
            return count;
        }
    }
    throw std::logic_error("unreachable");
}

double FuzzySequence::modulus_distance_sum(const FuzzyNumber& target, const Modulus& f, std::uint64_t n) const {
    return modulus_distance_sums(target, f, {n}).front();
}

std::vector<double> FuzzySequence::modulus_distance_sums(const FuzzyNumber& target, const Modulus& f,
                                                         const std::vector<std::uint64_t>& prefixes) const {
    std::vector<double> out(prefixes.size(), 0.0);
    switch (rule_) {
        case Rule::TwoValued: {
            const double f_on = f(metric_d(first_, target));
            const double f_off = f(metric_d(second_, target));
            for (std::size_t i = 0; i < prefixes.size(); ++i) {
                const std::uint64_t n = prefixes[i];
                const std::uint64_t on = on_.prefix_count(n);
                out[i] = static_cast<double>(on) * f_on + static_cast<double>(n - on) * f_off;
            }
            return out;
        }
        case Rule::Alternating: {
            const double f_odd = f(metric_d(first_, target));
            const double f_even = f(metric_d(second_, target));
            for (std::size_t i = 0; i < prefixes.size(); ++i) {
                const std::uint64_t n = prefixes[i];
                out[i] = static_cast<double>(odd_count(n)) * f_odd + static_cast<double>(n / 2) * f_even;
            }
            return out;
        }
        case Rule::GrowingPeak: {
            const double f_off = f(metric_d(FuzzyNumber::zero(), target));
            const std::uint64_t n_max = *std::max_element(prefixes.begin(), prefixes.end());
            // one ascending enumeration of on-set members, shared by all prefixes
            std::vector<std::size_t> order(prefixes.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return prefixes[a] < prefixes[b]; });
            std::size_t oi = 0;
            double on_sum = 0.0;
            std::uint64_t k = 1;
            while (oi < order.size()) {
                std::optional<std::uint64_t> member;
                if (k <= n_max) member = on_.next_member(k);
                const std::uint64_t next_k = (member && *member <= n_max) ? *member : n_max + 1;
                while (oi < order.size() && prefixes[order[oi]] < next_k) {
                    const std::uint64_t n = prefixes[order[oi]];
                    out[order[oi]] = on_sum + static_cast<double>(n - on_.prefix_count(n)) * f_off;
                    ++oi;
                }
                if (next_k > n_max) break;
                on_sum += f(on_branch_distance(next_k, target));
                k = next_k + 1;
            }
            for (; oi < order.size(); ++oi) {
                const std::uint64_t n = prefixes[order[oi]];
                out[order[oi]] = on_sum + static_cast<double>(n - on_.prefix_count(n)) * f_off;
            }
            return out;
        }
        case Rule::Custom: {
            // serial cumulative scan keeps the summation order fixed
            const std::uint64_t n_max = *std::max_element(prefixes.begin(), prefixes.end());
            std::vector<std::size_t> order(prefixes.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return prefixes[a] < prefixes[b]; });
            std::size_t oi = 0;
            double sum = 0.0;
            for (std::uint64_t k = 1; k <= n_max && oi < order.size(); ++k) {
                while (oi < order.size() && prefixes[order[oi]] < k) {
                    out[order[oi]] = sum;
                    ++oi;
                }
                sum += f(metric_d(fn_(k), target));
                while (oi < order.size() && prefixes[order[oi]] == k) {
                    out[order[oi]] = sum;
                    ++oi;
                }
            }
            for (; oi < order.size(); ++oi) out[order[oi]] = sum;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::uint64_t> FuzzySequence::exceed_counts(const FuzzyNumber& target, double epsilon,
                                                        const std::vector<std::uint64_t>& prefixes) const {
    std::vector<std::uint64_t> out(prefixes.size(), 0);
    if (rule_ != Rule::Custom) {
        for (std::size_t i = 0; i < prefixes.size(); ++i) out[i] = exceed_count(target, epsilon, prefixes[i]);
        return out;
    }
    if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be > 0");
    const std::uint64_t n_max = *std::max_element(prefixes.begin(), prefixes.end());
    std::vector<std::size_t> order(prefixes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return prefixes[a] < prefixes[b]; });
    std::size_t oi = 0;
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n_max && oi < order.size(); ++k) {
        while (oi < order.size() && prefixes[order[oi]] < k) {
            out[order[oi]] = count;
            ++oi;
        }
        if (metric_d(fn_(k), target) >= epsilon) ++count;
        while (oi < order.size() && prefixes[order[oi]] == k) {
            out[order[oi]] = count;
            ++oi;
        }
    }
    for (; oi < order.size(); ++oi) out[order[oi]] = count;
    return out;
}

FuzzySequence preset_sequence(const std::string& name) {
    const FuzzyNumber neg = FuzzyNumber::triangular(-3, -2, -1);
    const FuzzyNumber pos = FuzzyNumber::triangular(1, 2, 3);
    if (name == "ex3.4") return FuzzySequence::alternating(neg, pos);
    if (name == "ex3.5") return FuzzySequence::two_valued(IndexSet::powers(3), neg, pos);
    if (name == "thm3.7") return FuzzySequence::two_valued(IndexSet::powers(2), neg, pos);
    if (name == "thm3.9") return FuzzySequence::growing_peak(IndexSet::powers(3));
    if (name == "thm3.15") return FuzzySequence::two_valued(IndexSet::powers(3), pos, FuzzyNumber::zero());
    std::string known;
    for (const auto& n : preset_sequence_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown sequence preset '" + name + "' (known: " + known + ")");
}

std::vector<std::string> preset_sequence_names() {
    return {"ex3.4", "ex3.5", "thm3.7", "thm3.9", "thm3.15"};
}

} // namespace fuzzyseq

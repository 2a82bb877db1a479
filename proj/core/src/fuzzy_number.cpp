#include "fuzzyseq/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuzzyseq {

namespace {

double lerp(double a0, double v0, double a1, double v1, double a) {
    const double t = (a - a0) / (a1 - a0);
    return v0 + t * (v1 - v0);
}

void validate_cuts(const std::vector<AlphaCut>& cuts) {
    if (cuts.size() < 2) throw std::invalid_argument("fuzzy number needs cuts at alpha 0 and 1");
    if (cuts.front().alpha != 0.0) throw std::invalid_argument("first cut must be at alpha = 0");
    if (cuts.back().alpha != 1.0) throw std::invalid_argument("last cut must be at alpha = 1");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const auto& c = cuts[i];
        if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) throw std::invalid_argument("cut alpha outside [0,1]");
        if (!(c.lower <= c.upper)) throw std::invalid_argument("cut with lower > upper");
        if (!std::isfinite(c.lower) || !std::isfinite(c.upper))
            throw std::invalid_argument("cut endpoints must be finite");
        if (i > 0) {
            if (!(cuts[i - 1].alpha < c.alpha)) throw std::invalid_argument("cut alphas must be strictly increasing");
            if (!(cuts[i - 1].lower <= c.lower) || !(cuts[i - 1].upper >= c.upper))
                throw std::invalid_argument("cuts must be nested (shrinking as alpha grows)");
        }
    }
}

// Drop interior breakpoints both of whose endpoints are exactly on the line
// through their neighbours, so representations are canonical for operator==.
std::vector<AlphaCut> canonicalize(std::vector<AlphaCut> cuts) {
    std::vector<AlphaCut> out;
    out.reserve(cuts.size());
    out.push_back(cuts.front());
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
        const AlphaCut& prev = out.back();
        const AlphaCut& cur = cuts[i];
        const AlphaCut& next = cuts[i + 1];
        const bool collinear =
            lerp(prev.alpha, prev.lower, next.alpha, next.lower, cur.alpha) == cur.lower &&
            lerp(prev.alpha, prev.upper, next.alpha, next.upper, cur.alpha) == cur.upper;
        if (!collinear) out.push_back(cur);
    }
    out.push_back(cuts.back());
    return out;
}

} // namespace

bool operator==(const AlphaCut& a, const AlphaCut& b) {
    return a.alpha == b.alpha && a.lower == b.lower && a.upper == b.upper;
}

FuzzyNumber::FuzzyNumber() : FuzzyNumber(std::vector<AlphaCut>{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}) {}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
    if (!(a <= b && b <= c)) throw std::invalid_argument("triangular needs a <= b <= c");
    return from_cuts({{0.0, a, c}, {1.0, b, b}});
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d) {
    if (!(a <= b && b <= c && c <= d)) throw std::invalid_argument("trapezoidal needs a <= b <= c <= d");
    return from_cuts({{0.0, a, d}, {1.0, b, c}});
}

FuzzyNumber FuzzyNumber::crisp(double x) { return from_cuts({{0.0, x, x}, {1.0, x, x}}); }

FuzzyNumber FuzzyNumber::from_cuts(std::vector<AlphaCut> cuts) {
    validate_cuts(cuts);
    return FuzzyNumber(canonicalize(std::move(cuts)));
}

AlphaCut FuzzyNumber::cut(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0,1]");
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), alpha,
                               [](const AlphaCut& c, double a) { return c.alpha < a; });
    if (it != cuts_.end() && it->alpha == alpha) return *it;
    const AlphaCut& hi = *it;
    const AlphaCut& lo = *(it - 1);
    return {alpha, lerp(lo.alpha, lo.lower, hi.alpha, hi.lower, alpha),
            lerp(lo.alpha, lo.upper, hi.alpha, hi.upper, alpha)};
}

bool FuzzyNumber::is_crisp() const {
    return cuts_.size() == 2 && cuts_.front().lower == cuts_.front().upper &&
           cuts_.front().lower == cuts_.back().lower && cuts_.back().lower == cuts_.back().upper;
}

bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) { return a.cuts_ == b.cuts_; }

namespace {

std::vector<double> merged_alphas(const FuzzyNumber& u, const FuzzyNumber& v) {
    std::vector<double> alphas;
    alphas.reserve(u.breakpoints().size() + v.breakpoints().size());
    for (const auto& c : u.breakpoints()) alphas.push_back(c.alpha);
    for (const auto& c : v.breakpoints()) alphas.push_back(c.alpha);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

} // namespace

FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) {
    std::vector<AlphaCut> cuts;
    for (double a : merged_alphas(u, v)) {
        const AlphaCut cu = u.cut(a);
        const AlphaCut cv = v.cut(a);
        cuts.push_back({a, cu.lower + cv.lower, cu.upper + cv.upper});
    }
    return FuzzyNumber::from_cuts(std::move(cuts));
}

FuzzyNumber operator*(double c, const FuzzyNumber& u) {
    if (!std::isfinite(c)) throw std::invalid_argument("scalar must be finite");
    std::vector<AlphaCut> cuts;
    cuts.reserve(u.breakpoints().size());
    for (const auto& bc : u.breakpoints()) {
        if (c >= 0.0)
            cuts.push_back({bc.alpha, c * bc.lower, c * bc.upper});
        else
            cuts.push_back({bc.alpha, c * bc.upper, c * bc.lower});
    }
    return FuzzyNumber::from_cuts(std::move(cuts));
}

double hausdorff_at(const FuzzyNumber& u, const FuzzyNumber& v, double alpha) {
    const AlphaCut cu = u.cut(alpha);
    const AlphaCut cv = v.cut(alpha);
    return std::max(std::fabs(cu.lower - cv.lower), std::fabs(cu.upper - cv.upper));
}

double metric_d(const FuzzyNumber& u, const FuzzyNumber& v) {
    const std::vector<double> alphas = merged_alphas(u, v);
    double best = 0.0;
    double prev_dl = 0.0, prev_du = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const AlphaCut cu = u.cut(alphas[i]);
        const AlphaCut cv = v.cut(alphas[i]);
        const double dl = cu.lower - cv.lower;
        const double du = cu.upper - cv.upper;
        best = std::max(best, std::max(std::fabs(dl), std::fabs(du)));
        if (i > 0) {
            // sign-change roots of the endpoint differences inside the segment
            for (auto [d0, d1] : {std::pair{prev_dl, dl}, std::pair{prev_du, du}}) {
                if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
                    const double a = alphas[i - 1] + (0.0 - d0) * (alphas[i] - alphas[i - 1]) / (d1 - d0);
                    best = std::max(best, hausdorff_at(u, v, a));
                }
            }
        }
        prev_dl = dl;
        prev_du = du;
    }
    return best;
}

double metric_d_grid_oracle(const FuzzyNumber& u, const FuzzyNumber& v, std::size_t grid_size) {
    if (grid_size < 2) throw std::domain_error("grid_size must be >= 2");
    const auto& bu = u.breakpoints();
    const auto& bv = v.breakpoints();
    std::size_t iu = 0, iv = 0;
    double best = 0.0;
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double a = static_cast<double>(j) / static_cast<double>(grid_size - 1);
        while (iu + 2 < bu.size() && bu[iu + 1].alpha <= a) ++iu;
        while (iv + 2 < bv.size() && bv[iv + 1].alpha <= a) ++iv;
        const double ul = lerp(bu[iu].alpha, bu[iu].lower, bu[iu + 1].alpha, bu[iu + 1].lower, a);
        const double uu = lerp(bu[iu].alpha, bu[iu].upper, bu[iu + 1].alpha, bu[iu + 1].upper, a);
        const double vl = lerp(bv[iv].alpha, bv[iv].lower, bv[iv + 1].alpha, bv[iv + 1].lower, a);
        const double vu = lerp(bv[iv].alpha, bv[iv].upper, bv[iv + 1].alpha, bv[iv + 1].upper, a);
        best = std::max(best, std::max(std::fabs(ul - vl), std::fabs(uu - vu)));
    }
    return best;
}

double endpoint_slope_bound(const FuzzyNumber& u, const FuzzyNumber& v) {
    const std::vector<double> alphas = merged_alphas(u, v);
    double bound = 0.0;
    AlphaCut pu = u.cut(alphas[0]), pv = v.cut(alphas[0]);
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        const AlphaCut cu = u.cut(alphas[i]);
        const AlphaCut cv = v.cut(alphas[i]);
        const double da = alphas[i] - alphas[i - 1];
        bound = std::max(bound, std::fabs((cu.lower - cv.lower) - (pu.lower - pv.lower)) / da);
        bound = std::max(bound, std::fabs((cu.upper - cv.upper) - (pu.upper - pv.upper)) / da);
        pu = cu;
        pv = cv;
    }
    return bound;
}

FuzzyNumber random_fuzzy_number(SplitMix64& rng, int max_interior, double span) {
    const int interior = max_interior > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(max_interior) + 1)) : 0;
    std::vector<double> alphas{0.0, 1.0};
    for (int i = 0; i < interior; ++i) alphas.push_back(rng.uniform(0.05, 0.95));
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    // build from the core downward so nesting holds by construction
    const double center = rng.uniform(-span, span);
    const double half = rng.uniform(0.0, 1.5);
    std::vector<AlphaCut> cuts(alphas.size());
    double lo = center - half, hi = center + half;
    for (std::size_t i = alphas.size(); i-- > 0;) {
        if (i + 1 < alphas.size()) {
            lo -= rng.uniform(0.0, 1.5);
            hi += rng.uniform(0.0, 1.5);
        }
        cuts[i] = {alphas[i], lo, hi};
    }
    return FuzzyNumber::from_cuts(std::move(cuts));
}

FuzzyNumber parse_fuzzy_number(const std::string& spec) {
    if (spec == "zero") return FuzzyNumber::zero();
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad fuzzy number '" + spec + "' (want tri:a,b,c | trap:a,b,c,d | crisp:x | zero)");
    const std::string kind = spec.substr(0, colon);
    std::vector<double> vals;
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad number '" + tok + "' in fuzzy spec");
        vals.push_back(v);
    }
    if (kind == "tri" && vals.size() == 3) return FuzzyNumber::triangular(vals[0], vals[1], vals[2]);
    if (kind == "trap" && vals.size() == 4) return FuzzyNumber::trapezoidal(vals[0], vals[1], vals[2], vals[3]);
    if (kind == "crisp" && vals.size() == 1) return FuzzyNumber::crisp(vals[0]);
    throw std::invalid_argument("bad fuzzy number '" + spec + "' (want tri:a,b,c | trap:a,b,c,d | crisp:x | zero)");
}

} // namespace fuzzyseq

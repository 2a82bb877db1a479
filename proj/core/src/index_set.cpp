#include "fuzzyseq/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzyseq/detail/int_util.hpp"

namespace fuzzyseq {

namespace detail {

std::uint64_t floor_nth_root(std::uint64_t n, unsigned q) {
    if (q == 0) throw std::domain_error("root order must be >= 1");
    if (q == 1 || n < 2) return n;
    if (q >= 64) return 1; // 2^64 overflows, so only 1^q fits
    std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / q));
    r = std::max<std::uint64_t>(r, 1) + 2;
    while (checked_pow_clamped(r, q) > n) --r;
    while (checked_pow_clamped(r + 1, q) <= n) ++r;
    return r;
}

bool is_perfect_power(std::uint64_t k, unsigned q) {
    if (k == 0) return false;
    const std::uint64_t r = floor_nth_root(k, q);
    return checked_pow_clamped(r, q) == k;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_clamped(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t g = gcd_u64(a, b);
    std::uint64_t out;
    if (__builtin_mul_overflow(a / g, b, &out)) return kU64Max;
    return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factorize(std::uint64_t n, std::vector<std::pair<std::uint64_t, unsigned>>& out) {
    for (std::uint64_t p = 2; p * p <= n && p < 100000; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

} // namespace

std::uint64_t min_root_multiple(std::uint64_t m, unsigned q) {
    if (m <= 1) return 1;
    if (q <= 1) return m;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    factorize(m, factors);
    // merge duplicates from the recursive split
    std::sort(factors.begin(), factors.end());
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < factors.size();) {
        std::uint64_t p = factors[i].first;
        unsigned e = 0;
        while (i < factors.size() && factors[i].first == p) {
            e += factors[i].second;
            ++i;
        }
        const unsigned need = (e + q - 1) / q;
        for (unsigned j = 0; j < need; ++j) {
            if (__builtin_mul_overflow(r, p, &r)) return kU64Max;
        }
    }
    return r;
}

} // namespace detail

struct IndexSet::Node {
    enum class Kind { All, Empty, Multiples, Powers, Explicit, Complement, Union } kind;
    std::uint64_t m = 0;
    unsigned q = 0;
    std::vector<std::uint64_t> members;
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = IndexSet::Node;
using Kind = Node::Kind;

bool node_contains(const Node& node, std::uint64_t k) {
    switch (node.kind) {
        case Kind::All: return true;
        case Kind::Empty: return false;
        case Kind::Multiples: return k % node.m == 0;
        case Kind::Powers: return detail::is_perfect_power(k, node.q);
        case Kind::Explicit: return std::binary_search(node.members.begin(), node.members.end(), k);
        case Kind::Complement: return !node_contains(*node.a, k);
        case Kind::Union: return node_contains(*node.a, k) || node_contains(*node.b, k);
    }
    return false;
}

// Exact count of |{k <= n : k in every set of `factors`}|. Base variants fold
// into (lcm of multiples, lcm of power orders, explicit lists); complements
// and unions reduce by inclusion-exclusion:
//   |R ∩ ~C| = |R| - |R ∩ C|
//   |R ∩ (A ∪ B)| = |R ∩ A| + |R ∩ B| - |R ∩ A ∩ B|
std::uint64_t count_intersection(std::vector<const Node*> factors, std::uint64_t n) {
    if (n == 0) return 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Node* f = factors[i];
        if (f->kind == Kind::Complement) {
            std::vector<const Node*> rest = factors;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<const Node*> with = rest;
            with.push_back(f->a.get());
            return count_intersection(std::move(rest), n) - count_intersection(std::move(with), n);
        }
        if (f->kind == Kind::Union) {
            std::vector<const Node*> rest = factors;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<const Node*> wa = rest, wb = rest, wab = rest;
            wa.push_back(f->a.get());
            wb.push_back(f->b.get());
            wab.push_back(f->a.get());
            wab.push_back(f->b.get());
            return count_intersection(std::move(wa), n) + count_intersection(std::move(wb), n) -
                   count_intersection(std::move(wab), n);
        }
    }

    std::uint64_t mult_lcm = 1;
    unsigned pow_lcm = 1;
    std::vector<const Node*> explicits;
    for (const Node* f : factors) {
        switch (f->kind) {
            case Kind::All: break;
            case Kind::Empty: return 0;
            case Kind::Multiples: mult_lcm = detail::lcm_clamped(mult_lcm, f->m); break;
            case Kind::Powers: {
                const std::uint64_t l =
                    detail::lcm_clamped(static_cast<std::uint64_t>(pow_lcm), static_cast<std::uint64_t>(f->q));
                pow_lcm = l > 64 ? 64u : static_cast<unsigned>(l);
                break;
            }
            case Kind::Explicit: explicits.push_back(f); break;
            default: break;
        }
    }

    if (!explicits.empty()) {
        const Node* smallest = explicits.front();
        for (const Node* e : explicits)
            if (e->members.size() < smallest->members.size()) smallest = e;
        std::uint64_t count = 0;
        for (std::uint64_t k : smallest->members) {
            if (k > n) break;
            if (mult_lcm != 1 && (mult_lcm == detail::kU64Max || k % mult_lcm != 0)) continue;
            if (pow_lcm != 1 && !detail::is_perfect_power(k, pow_lcm)) continue;
            bool in_all = true;
            for (const Node* e : explicits) {
                if (e == smallest) continue;
                if (!std::binary_search(e->members.begin(), e->members.end(), k)) {
                    in_all = false;
                    break;
                }
            }
            count += in_all ? 1 : 0;
        }
        return count;
    }

    if (pow_lcm == 1) return mult_lcm == detail::kU64Max ? 0 : n / mult_lcm;

    // members are j^Q <= n with mult_lcm | j^Q, i.e. j a multiple of the
    // minimal root multiple of mult_lcm
    const std::uint64_t roots = detail::floor_nth_root(n, pow_lcm);
    if (mult_lcm == 1) return roots;
    if (mult_lcm == detail::kU64Max) return 0;
    const std::uint64_t r = detail::min_root_multiple(mult_lcm, pow_lcm);
    return r == detail::kU64Max ? 0 : roots / r;
}

std::optional<std::uint64_t> node_next_member(const Node& node, std::uint64_t k) {
    switch (node.kind) {
        case Kind::All: return k;
        case Kind::Empty: return std::nullopt;
        case Kind::Multiples: {
            const std::uint64_t rounded = ((k + node.m - 1) / node.m);
            std::uint64_t out;
            if (__builtin_mul_overflow(rounded, node.m, &out)) return std::nullopt;
            return out;
        }
        case Kind::Powers: {
            const std::uint64_t r = detail::floor_nth_root(k - 1, node.q) + 1;
            const std::uint64_t out = detail::checked_pow_clamped(r, node.q);
            if (out == detail::kU64Max) return std::nullopt;
            return out;
        }
        case Kind::Explicit: {
            auto it = std::lower_bound(node.members.begin(), node.members.end(), k);
            if (it == node.members.end()) return std::nullopt;
            return *it;
        }
        case Kind::Union: {
            const auto na = node_next_member(*node.a, k);
            const auto nb = node_next_member(*node.b, k);
            if (!na) return nb;
            if (!nb) return na;
            return std::min(*na, *nb);
        }
        case Kind::Complement: {
            std::uint64_t probe = k;
            for (std::uint64_t steps = 0; steps < 10'000'000; ++steps, ++probe) {
                if (probe == 0) return std::nullopt; // wrapped
                if (!node_contains(*node.a, probe)) return probe;
            }
            throw std::runtime_error("next_member: complement enumeration stalled");
        }
    }
    return std::nullopt;
}

std::string node_describe(const Node& node) {
    switch (node.kind) {
        case Kind::All: return "all";
        case Kind::Empty: return "empty";
        case Kind::Multiples: return "multiples(m=" + std::to_string(node.m) + ")";
        case Kind::Powers: return "powers(q=" + std::to_string(node.q) + ")";
        case Kind::Explicit: {
            std::string out = "explicit(";
            for (std::size_t i = 0; i < node.members.size(); ++i) {
                if (i) out += ",";
                if (i == 8 && node.members.size() > 9) {
                    out += "...";
                    break;
                }
                out += std::to_string(node.members[i]);
            }
            return out + ")";
        }
        case Kind::Complement: return "complement(" + node_describe(*node.a) + ")";
        case Kind::Union: return "union(" + node_describe(*node.a) + "," + node_describe(*node.b) + ")";
    }
    return "?";
}

} // namespace

IndexSet IndexSet::all() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::All;
    return IndexSet(std::move(n));
}

IndexSet IndexSet::empty() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Empty;
    return IndexSet(std::move(n));
}

IndexSet IndexSet::multiples(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("multiples needs m >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Multiples;
    n->m = m;
    return IndexSet(std::move(n));
}

IndexSet IndexSet::powers(unsigned q) {
    if (q < 2) throw std::invalid_argument("powers needs q >= 2");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Powers;
    n->q = q;
    return IndexSet(std::move(n));
}

IndexSet IndexSet::explicit_set(std::vector<std::uint64_t> members) {
    for (std::uint64_t k : members)
        if (k < 1) throw std::invalid_argument("explicit members must be >= 1");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Explicit;
    n->members = std::move(members);
    return IndexSet(std::move(n));
}

IndexSet IndexSet::complement(IndexSet inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Complement;
    n->a = inner.node_;
    return IndexSet(std::move(n));
}

IndexSet IndexSet::union_of(IndexSet a, IndexSet b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->a = a.node_;
    n->b = b.node_;
    return IndexSet(std::move(n));
}

bool IndexSet::contains(std::uint64_t k) const {
    if (k < 1) throw std::domain_error("index k must be >= 1");
    return node_contains(*node_, k);
}

std::uint64_t IndexSet::prefix_count(std::uint64_t n) const {
    return count_intersection({node_.get()}, n);
}

std::optional<std::uint64_t> IndexSet::next_member(std::uint64_t k) const {
    if (k < 1) throw std::domain_error("index k must be >= 1");
    return node_next_member(*node_, k);
}

std::string IndexSet::describe() const { return node_describe(*node_); }

IndexSet parse_index_set(const std::string& spec) {
    if (spec == "all") return IndexSet::all();
    if (spec == "empty") return IndexSet::empty();
    const auto parse_u64 = [](const std::string& s) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "' in set spec");
        return static_cast<std::uint64_t>(v);
    };
    if (spec.rfind("multiples:m=", 0) == 0) return IndexSet::multiples(parse_u64(spec.substr(12)));
    if (spec.rfind("powers:q=", 0) == 0) {
        const std::uint64_t q = parse_u64(spec.substr(9));
        if (q < 2 || q > 63) throw std::invalid_argument("powers exponent must be in [2, 63]");
        return IndexSet::powers(static_cast<unsigned>(q));
    }
    if (spec.rfind("explicit:", 0) == 0) {
        std::vector<std::uint64_t> members;
        std::string rest = spec.substr(9);
        std::size_t start = 0;
        while (start <= rest.size()) {
            const std::size_t comma = rest.find(',', start);
            const std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!tok.empty()) members.push_back(parse_u64(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return IndexSet::explicit_set(std::move(members));
    }
    if (spec.rfind("complement:", 0) == 0) return IndexSet::complement(parse_index_set(spec.substr(11)));
    throw std::invalid_argument("unknown index set '" + spec +
                                "' (known: all, empty, multiples:m=<int>, powers:q=<int>, "
                                "explicit:<ints>, complement:<spec>)");
}

} // namespace fuzzyseq

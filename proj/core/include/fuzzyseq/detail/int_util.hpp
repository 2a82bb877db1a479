#pragma once

#include <cstdint>
#include <limits>

namespace fuzzyseq::detail {

inline constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// base^exp, clamped to kU64Max on overflow.
inline std::uint64_t checked_pow_clamped(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    std::uint64_t b = base;
    while (exp > 0) {
        if (exp & 1u) {
            if (__builtin_mul_overflow(result, b, &result)) return kU64Max;
        }
        exp >>= 1u;
        if (exp > 0) {
            if (__builtin_mul_overflow(b, b, &b)) b = kU64Max;
            if (b == kU64Max && exp > 0 && result > 1) return kU64Max;
        }
    }
    return result;
}

// Exact floor(n^(1/q)). Float roots are off by one at perfect powers near
// 2^53, so the estimate is corrected with integer arithmetic.
std::uint64_t floor_nth_root(std::uint64_t n, unsigned q);

// true iff k == r^q for some integer r >= 1
bool is_perfect_power(std::uint64_t k, unsigned q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// lcm clamped to kU64Max on overflow
std::uint64_t lcm_clamped(std::uint64_t a, std::uint64_t b);

bool is_prime_u64(std::uint64_t n);

// Smallest r such that m divides r^q (q >= 1). Needs the factorization of m;
// uses trial division plus Pollard rho for large cofactors.
std::uint64_t min_root_multiple(std::uint64_t m, unsigned q);

} // namespace fuzzyseq::detail

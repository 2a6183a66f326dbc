#pragma once

// Fibonacci numbers mod k, the restricted period alpha(k) (index of the first
// Fibonacci number divisible by k) and the Pisano period pi(k).
//
// alpha(k) comes either from a direct scan or from the factorization of k:
//   alpha(lcm(a, b))  = lcm(alpha(a), alpha(b))
//   alpha(p^s)        = p^(s-1) alpha(p)      odd p with alpha(p^2) != alpha(p)
//   alpha(2^s)        = 2^(s-3) * 6            s >= 3; alpha(2) = 3, alpha(4) = 6

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lightsout/errors.hpp"
#include "lightsout/modular.hpp"

namespace lightsout {

/// (F_i mod k, F_{i+1} mod k), advanced one index at a time.
class FibPairState {
public:
    explicit FibPairState(std::uint64_t k) : k_(checked(k)), b_(1 % k) {}

    std::uint64_t modulus() const noexcept { return k_; }
    std::uint64_t index() const noexcept { return i_; }
    Residue current() const noexcept { return a_; }
    Residue next() const noexcept { return b_; }
    std::pair<Residue, Residue> pair() const noexcept { return {a_, b_}; }

    FibPairState& advance() noexcept {
        Residue c = mod::add(a_, b_, k_);
        a_ = b_;
        b_ = c;
        ++i_;
        return *this;
    }

private:
    static std::uint64_t checked(std::uint64_t k) {
        mod::require_modulus(k, 1);
        return k;
    }

    std::uint64_t k_;
    std::uint64_t i_ = 0;
    Residue a_ = 0;
    Residue b_;
};

/// (F_i mod k, F_{i+1} mod k) by fast doubling, O(log i).
inline std::pair<Residue, Residue> fib_pair_mod(std::uint64_t i, std::uint64_t k) {
    mod::require_modulus(k, 1);
    if (k == 1)
        return {0, 0};
    Residue a = 0; // F_n
    Residue b = 1; // F_{n+1}
    for (int bit = 63; bit >= 0; --bit) {
        // F_{2n}   = F_n (2 F_{n+1} - F_n)
        // F_{2n+1} = F_n^2 + F_{n+1}^2
        Residue c = mod::mul(a, mod::sub(mod::add(b, b, k), a, k), k);
        Residue d = mod::add(mod::mul(a, a, k), mod::mul(b, b, k), k);
        if ((i >> bit) & 1U) {
            a = d;
            b = mod::add(c, d, k);
        } else {
            a = c;
            b = d;
        }
    }
    return {a, b};
}

/// Upper bound on any Pisano period: pi(k) <= 6k.
constexpr std::uint64_t scan_bound(std::uint64_t k) noexcept { return 6 * k; }

enum class AlphaMethod { direct_scan, factored };

enum class AlphaRule {
    two_base,         // alpha(2) = 3
    four_base,        // alpha(4) = 6
    power_of_two,     // alpha(2^s) = 2^(s-3) * 6
    odd_prime,        // alpha(p) by scan
    odd_prime_power,  // p^(s-1) alpha(p)
    direct_fallback,  // alpha(p^2) == alpha(p); scanned p^s directly
};

inline const char* to_string(AlphaMethod m) {
    return m == AlphaMethod::direct_scan ? "direct-scan" : "factored";
}

inline const char* to_string(AlphaRule r) {
    switch (r) {
    case AlphaRule::two_base: return "alpha(2)=3";
    case AlphaRule::four_base: return "alpha(4)=6";
    case AlphaRule::power_of_two: return "2^(s-3)*alpha(4)";
    case AlphaRule::odd_prime: return "direct scan";
    case AlphaRule::odd_prime_power: return "p^(s-1)*alpha(p)";
    case AlphaRule::direct_fallback: return "direct scan (alpha(p^2)=alpha(p))";
    }
    return "?";
}

struct PrimePower {
    std::uint64_t p;
    unsigned s;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct AlphaTraceEntry {
    std::uint64_t p;
    unsigned s;
    std::uint64_t alpha;
    AlphaRule rule;
};

struct AlphaResult {
    std::uint64_t k;
    std::uint64_t alpha;
    AlphaMethod method;
    std::vector<AlphaTraceEntry> trace; // empty for direct scans
};

/// Least i >= 1 with F_i == 0 (mod k).
inline AlphaResult alpha_direct(std::uint64_t k) {
    FibPairState st(k);
    const auto bound = scan_bound(k);
    do {
        st.advance();
        if (st.current() == 0)
            return {k, st.index(), AlphaMethod::direct_scan, {}};
    } while (st.index() < bound);
    throw bound_exceeded("alpha_direct: no zero within 6k terms for k=" + std::to_string(k));
}

/// Least P >= 1 with (F_P, F_{P+1}) == (0, 1) (mod k).
inline std::uint64_t pisano_direct(std::uint64_t k) {
    FibPairState st(k);
    const auto seed = st.pair();
    const auto bound = scan_bound(k);
    do {
        st.advance();
        if (st.pair() == seed)
            return st.index();
    } while (st.index() < bound);
    throw bound_exceeded("pisano_direct: no period within 6k terms for k=" + std::to_string(k));
}

/// Trial-division factorization, primes ascending.
inline std::vector<PrimePower> factorize(std::uint64_t k) {
    mod::require_modulus(k);
    std::vector<PrimePower> out;
    auto take = [&](std::uint64_t p) {
        unsigned s = 0;
        while (k % p == 0) {
            k /= p;
            ++s;
        }
        if (s)
            out.push_back({p, s});
    };
    take(2);
    for (std::uint64_t p = 3; p <= k / p; p += 2)
        take(p);
    if (k > 1)
        out.push_back({k, 1});
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("alpha exceeds 64-bit range");
    return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--)
        r = checked_mul(r, base);
    return r;
}

inline AlphaTraceEntry alpha_prime_power_traced(std::uint64_t p, unsigned s) {
    if (!is_prime(p))
        throw std::invalid_argument("alpha_prime_power: " + std::to_string(p) + " is not prime");
    if (s < 1)
        throw std::invalid_argument("alpha_prime_power: exponent must be >= 1");
    if (p == 2) {
        if (s == 1)
            return {p, s, 3, AlphaRule::two_base};
        if (s == 2)
            return {p, s, 6, AlphaRule::four_base};
        return {p, s, checked_mul(checked_pow(2, s - 3), 6), AlphaRule::power_of_two};
    }
    const std::uint64_t ap = alpha_direct(p).alpha;
    if (s == 1)
        return {p, s, ap, AlphaRule::odd_prime};
    // alpha(p) divides alpha(p^2), so alpha(p^2) == alpha(p) exactly when
    // F_{alpha(p)} already vanishes mod p^2.
    const std::uint64_t p2 = checked_mul(p, p);
    const bool wall_sun_sun = fib_pair_mod(ap, p2).first == 0;
    if (wall_sun_sun)
        return {p, s, alpha_direct(checked_pow(p, s)).alpha, AlphaRule::direct_fallback};
    return {p, s, checked_mul(checked_pow(p, s - 1), ap), AlphaRule::odd_prime_power};
}

} // namespace detail

inline std::uint64_t alpha_prime_power(std::uint64_t p, unsigned s) {
    return detail::alpha_prime_power_traced(p, s).alpha;
}

inline AlphaResult alpha_factored(std::uint64_t k) {
    AlphaResult res{k, 1, AlphaMethod::factored, {}};
    for (const auto& [p, s] : factorize(k)) {
        auto entry = detail::alpha_prime_power_traced(p, s);
        const std::uint64_t g = std::gcd(res.alpha, entry.alpha);
        res.alpha = detail::checked_mul(res.alpha / g, entry.alpha);
        res.trace.push_back(entry);
    }
    return res;
}

} // namespace lightsout

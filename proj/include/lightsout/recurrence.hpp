#pragma once

// Row states of one-pass chasing on a uniform board.
//
// S_i is the common state of row i (1-based) right after row i-1 has been
// cleared:
//
//   S_0 = 0,  S_1 = -q,  S_i = -q - S_{i-2} - 3 S_{i-1}
//
// which equals (-1)^i q F_i F_{i+1}. A board with `rows` rows is one-pass
// solvable exactly when S_rows == 0 (mod k).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lightsout/fib.hpp"
#include "lightsout/modular.hpp"

namespace lightsout {

using BigInt = boost::multiprecision::cpp_int;

struct ChaseParams {
    std::uint64_t q = 1;
    std::optional<std::uint64_t> k; // absent: exact integers

    void validate() const {
        if (k) {
            mod::require_modulus(*k);
            if (q >= *k)
                throw std::invalid_argument("q must lie in 0..k-1");
        }
    }
};

/// S_0..S_n exactly.
template <typename Int = BigInt>
std::vector<Int> s_sequence_exact(std::uint64_t q, std::uint64_t n) {
    std::vector<Int> s;
    s.reserve(n + 1);
    s.emplace_back(0);
    if (n >= 1)
        s.push_back(-Int(q));
    for (std::uint64_t i = 2; i <= n; ++i)
        s.push_back(-Int(q) - s[i - 2] - 3 * s[i - 1]);
    return s;
}

/// S_0..S_n mod k in one sweep.
inline std::vector<Residue> s_sequence_mod(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
    mod::require_modulus(k);
    const Residue nq = mod::neg(q % k, k);
    const Residue three = 3 % k;
    std::vector<Residue> s;
    s.reserve(n + 1);
    s.push_back(0);
    if (n >= 1)
        s.push_back(nq);
    for (std::uint64_t i = 2; i <= n; ++i)
        s.push_back(mod::sub(mod::sub(nq, s[i - 2], k), mod::mul(three, s[i - 1], k), k));
    return s;
}

template <typename Int = BigInt>
Int s_exact(std::uint64_t q, std::uint64_t i) {
    Int prev = 0;
    if (i == 0)
        return prev;
    Int cur = -Int(q);
    for (std::uint64_t j = 2; j <= i; ++j) {
        Int next = -Int(q) - prev - 3 * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// S_i mod k by iterating the recursion; O(i) time, O(1) space.
inline Residue s_mod(std::uint64_t q, std::uint64_t i, std::uint64_t k) {
    mod::require_modulus(k);
    const Residue nq = mod::neg(q % k, k);
    if (i == 0)
        return 0;
    Residue prev = 0;
    Residue cur = nq;
    const Residue three = 3 % k;
    for (std::uint64_t j = 2; j <= i; ++j) {
        Residue next = mod::sub(mod::sub(nq, prev, k), mod::mul(three, cur, k), k);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Exact F_i by iteration.
template <typename Int = BigInt>
Int fib_exact(std::uint64_t i) {
    Int a = 0, b = 1;
    for (std::uint64_t j = 0; j < i; ++j) {
        Int c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

/// (-1)^i q F_i F_{i+1}, exact.
template <typename Int = BigInt>
Int s_closed(std::uint64_t q, std::uint64_t i) {
    Int fi = fib_exact<Int>(i);
    Int fi1 = fib_exact<Int>(i + 1);
    Int v = Int(q) * fi * fi1;
    return (i % 2) ? Int(-v) : v;
}

/// (-1)^i q F_i F_{i+1} mod k via fast doubling, O(log i) for any 64-bit i.
inline Residue s_closed(std::uint64_t q, std::uint64_t i, std::uint64_t k) {
    mod::require_modulus(k);
    auto [fi, fi1] = fib_pair_mod(i, k);
    Residue v = mod::mul(mod::mul(q % k, fi, k), fi1, k);
    return (i % 2) ? mod::neg(v, k) : v;
}

struct ChaseSequence {
    ChaseParams params;
    std::variant<std::vector<BigInt>, std::vector<Residue>> values;
};

/// S_0..S_n, exact when params.k is absent.
inline ChaseSequence chase_sequence(const ChaseParams& params, std::uint64_t n) {
    params.validate();
    if (params.k)
        return {params, s_sequence_mod(params.q, n, *params.k)};
    return {params, s_sequence_exact(params.q, n)};
}

inline Residue to_residue(const BigInt& v, std::uint64_t k) {
    BigInt r = v % k;
    if (r < 0)
        r += k;
    return static_cast<Residue>(r);
}

} // namespace lightsout

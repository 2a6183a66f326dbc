#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace lightsout {

/// A light state / residue, always kept in 0..k-1.
using Residue = std::uint64_t;

namespace mod {

// All helpers assume operands already reduced into [0, k).

constexpr Residue add(Residue a, Residue b, Residue k) noexcept {
    return a >= k - b ? a - (k - b) : a + b;
}

constexpr Residue neg(Residue a, Residue k) noexcept { return a == 0 ? 0 : k - a; }

constexpr Residue sub(Residue a, Residue b, Residue k) noexcept { return add(a, neg(b, k), k); }

constexpr Residue mul(Residue a, Residue b, Residue k) noexcept {
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % k);
}

/// Floor-mod of any signed or unsigned integer into [0, k).
template <std::integral T>
constexpr Residue reduce(T x, Residue k) noexcept {
    if constexpr (std::is_signed_v<T>) {
        if (x < 0) {
            // -(x+1) cannot overflow for the minimum value
            auto m = static_cast<Residue>(-(x + 1)) % k;
            return k - 1 - m;
        }
    }
    return static_cast<Residue>(x) % k;
}

inline void require_modulus(std::uint64_t k, std::uint64_t min = 2) {
    if (k < min)
        throw std::invalid_argument("modulus k must be >= " + std::to_string(min) + ", got " +
                                    std::to_string(k));
}

} // namespace mod
} // namespace lightsout

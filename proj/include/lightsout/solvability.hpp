#pragma once

// Which row counts make a uniform board one-pass solvable.
//
// rows == 0 or -1 (mod alpha(k)) always suffices, since then F_rows or
// F_{rows+1} vanishes mod k. For prime k that condition is also necessary;
// for composite k zero divisors can add more rows, so the full set is found
// by enumerating S_i mod k over one Pisano period.

#include <cstdint>
#include <vector>

#include "lightsout/engine.hpp"
#include "lightsout/fib.hpp"
#include "lightsout/recurrence.hpp"

namespace lightsout {

struct SolvabilityReport {
    std::uint64_t k;
    std::uint64_t q;
    std::uint64_t alpha;
    std::uint64_t period;
    /// Sorted classes r in [0, period) with S_r == 0 (mod k).
    std::vector<std::uint64_t> residues;
    /// Classes r < period with r == 0 or -1 (mod alpha).
    std::vector<std::uint64_t> predicted;
    /// residues == predicted.
    bool complete;
};

namespace detail {

inline void require_q(std::uint64_t k, std::uint64_t q) {
    mod::require_modulus(k);
    if (q >= k)
        throw std::invalid_argument("q must lie in 0..k-1, got q=" + std::to_string(q) +
                                    " for k=" + std::to_string(k));
}

} // namespace detail

inline bool is_one_pass_solvable(std::uint64_t k, std::uint64_t q, std::uint64_t rows) {
    detail::require_q(k, q);
    if (rows < 1)
        throw std::invalid_argument("rows must be >= 1");
    return s_mod(q, rows, k) == 0;
}

inline bool in_alpha_classes(std::uint64_t i, std::uint64_t alpha) {
    const auto r = i % alpha;
    return r == 0 || r == alpha - 1;
}

/// True guarantees solvability for every q; false says nothing for composite k.
inline bool sufficient_by_alpha(std::uint64_t k, std::uint64_t rows) {
    mod::require_modulus(k);
    return in_alpha_classes(rows, alpha_factored(k).alpha);
}

inline SolvabilityReport characterize(std::uint64_t k, std::uint64_t q) {
    detail::require_q(k, q);
    SolvabilityReport rep{k, q, alpha_factored(k).alpha, pisano_direct(k), {}, {}, false};
    const auto seq = s_sequence_mod(q, rep.period - 1, k);
    for (std::uint64_t r = 0; r < rep.period; ++r) {
        if (seq[r] == 0)
            rep.residues.push_back(r);
        if (in_alpha_classes(r, rep.alpha))
            rep.predicted.push_back(r);
    }
    rep.complete = rep.residues == rep.predicted;
    return rep;
}

/// Rows 1..n that are one-pass solvable, from a single sweep.
inline std::vector<std::uint64_t> solvable_rows_up_to(std::uint64_t k, std::uint64_t q,
                                                      std::uint64_t n) {
    detail::require_q(k, q);
    if (n < 1)
        throw std::invalid_argument("row limit must be >= 1");
    const auto seq = s_sequence_mod(q, n, k);
    std::vector<std::uint64_t> rows;
    for (std::uint64_t i = 1; i <= n; ++i)
        if (seq[i] == 0)
            rows.push_back(i);
    return rows;
}

/// Simulates the uniform board and checks it against S_rows mod k.
inline bool cross_validate(std::uint64_t k, std::uint64_t q, std::size_t rows, std::size_t cols) {
    const auto t = one_pass(new_uniform({rows, cols, k, q}));
    const Residue expected = s_mod(q, rows, k);
    if (t.solved != (expected == 0))
        return false;
    for (Residue v : t.final_row)
        if (v != expected)
            return false;
    return true;
}

} // namespace lightsout

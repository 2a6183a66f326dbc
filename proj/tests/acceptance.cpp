// Acceptance criteria runner. One PASS/FAIL line per criterion; exit status
// is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lightsout/lightsout.hpp"
#include "oracles.hpp"

using namespace lightsout;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit_s; // <= 0: no limit
    std::function<void(Outcome&)> body;
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void table_one(Outcome& o) {
    const std::vector<long> want{0, -1, 2, -6, 15, -40, 104, -273, 714, -1870, 4895};
    for (std::uint64_t i = 0; i <= 10; ++i)
        if (s_exact(1, i) != want[i])
            o.fail("S_" + str(i) + " = " + str(s_exact(1, i)));
}

void table_two(Outcome& o) {
    const std::vector<Residue> mod3{0, 1, 1, 2, 0, 2, 2, 1, 0, 1, 1, 2, 0, 2, 2, 1};
    const std::vector<Residue> mod4{0, 1, 1, 2, 3, 1, 0, 1, 1, 2, 3, 1, 0, 1, 1, 2};
    for (std::uint64_t i = 0; i <= 15; ++i) {
        if (fib_pair_mod(i, 3).first != mod3[i])
            o.fail("F_" + str(i) + " mod 3");
        if (fib_pair_mod(i, 4).first != mod4[i])
            o.fail("F_" + str(i) + " mod 4");
    }
    if (alpha_direct(3).alpha != 4)
        o.fail("alpha(3)");
    if (alpha_direct(4).alpha != 6)
        o.fail("alpha(4)");
}

void alpha_examples(Outcome& o) {
    if (alpha_direct(5).alpha != 5)
        o.fail("alpha_direct(5)");
    if (alpha_factored(12).alpha != 12)
        o.fail("alpha_factored(12)");
    if (alpha_factored(1200).alpha != 300)
        o.fail("alpha_factored(1200)");
    std::uint64_t p = 1;
    for (unsigned s = 1; s <= 6; ++s)
        if (alpha_prime_power(5, s) != (p *= 5))
            o.fail("alpha(5^" + str(s) + ")");
    for (std::uint64_t k = 2; k <= 10000; ++k)
        if (alpha_factored(k).alpha != alpha_direct(k).alpha)
            o.fail("methods disagree at k=" + str(k));
}

void fig_two(Outcome& o) {
    const auto t = one_pass(new_uniform({5, 5, 4, 1}));
    const std::vector<Residue> want{1, 2, 2, 1};
    if (t.presses.size() != 4)
        return o.fail("expected 4 pressed rows");
    for (std::size_t i = 0; i < 4; ++i)
        if (t.presses[i] != std::vector<Residue>(5, want[i]))
            o.fail("press row " + str(i + 2));
    if (!t.solved)
        o.fail("5 rows not SOLVED");
    const auto six = one_pass(new_uniform({6, 5, 4, 1}));
    if (six.solved)
        o.fail("6 rows reported SOLVED (last row " + str(six.final_row.front()) + ", S_6 = " +
               str(s_exact(1, 6)) + " == " + str(s_mod(1, 6, 4)) + " mod 4)");
}

void section_three(Outcome& o) {
    if (solvable_rows_up_to(5, 1, 10) != std::vector<std::uint64_t>{4, 5, 9, 10})
        o.fail("solvable_rows_up_to(5,1,10)");
    if (is_one_pass_solvable(2, 1, 4))
        o.fail("(2,1,4) solvable");
    if (is_one_pass_solvable(2, 1, 7))
        o.fail("(2,1,7) solvable");
}

void counterexample(Outcome& o) {
    if (!is_one_pass_solvable(6, 3, 6))
        o.fail("(6,3,6) not solvable");
    if (sufficient_by_alpha(6, 6))
        o.fail("sufficient_by_alpha(6,6) true");
    auto [f6, f7] = fib_pair_mod(6, 6);
    if (f6 == 0 || f7 == 0)
        o.fail("F_6 or F_7 vanishes mod 6");
}

void oracle_suite(Outcome& o) {
    std::size_t cases = 0;
    for (std::uint64_t k = 2; k <= 10; ++k)
        for (std::uint64_t q = 0; q < k; ++q)
            for (std::size_t rows = 1; rows <= 40; ++rows)
                for (std::size_t cols : {3u, 4u, 5u}) {
                    ++cases;
                    if (!cross_validate(k, q, rows, cols))
                        o.fail("k=" + str(k) + " q=" + str(q) + " rows=" + str(rows) +
                               " cols=" + str(cols));
                }
    if (cases < 5000)
        o.fail("only " + str(cases) + " cases");
    if (o.ok)
        o.detail = str(cases) + " cases";
}

void sufficiency_sweep(Outcome& o) {
    std::size_t checked = 0;
    for (std::uint64_t k = 2; k <= 60; ++k) {
        const auto alpha = alpha_factored(k).alpha;
        const auto pi = pisano_direct(k);
        for (std::uint64_t q = 1; q < k; ++q)
            for (std::uint64_t i = 0; i <= 2 * pi; ++i)
                if (in_alpha_classes(i, alpha)) {
                    ++checked;
                    if (s_mod(q, i, k) != 0)
                        o.fail("k=" + str(k) + " q=" + str(q) + " i=" + str(i));
                }
    }
    if (o.ok)
        o.detail = str(checked) + " indices";
}

void prime_completeness(Outcome& o) {
    for (std::uint64_t k = 2; k < 60; ++k) {
        if (!is_prime(k))
            continue;
        for (std::uint64_t q = 1; q < k; ++q) {
            const auto r = characterize(k, q);
            std::vector<std::uint64_t> want;
            for (std::uint64_t i = 0; i < r.period; ++i)
                if (i % r.alpha == 0 || i % r.alpha == r.alpha - 1)
                    want.push_back(i);
            if (r.residues != want || !r.complete)
                o.fail("k=" + str(k) + " q=" + str(q));
        }
    }
}

void identities(Outcome& o) {
    const auto f = oracle::fibs(301);
    for (std::size_t i = 1; i <= 300; ++i)
        if (f[i - 1] * f[i + 1] - f[i] * f[i] != ((i % 2) ? -1 : 1))
            o.fail("Cassini exact i=" + str(i));

    for (std::uint64_t k = 2; k <= 50; ++k) {
        const auto table = oracle::fib_mod_table(10001, k);
        for (std::uint64_t i = 1; i <= 10000; ++i) {
            auto [fi, fi1] = fib_pair_mod(i, k);
            if (fi != table[i] || fi1 != table[i + 1])
                o.fail("fast doubling k=" + str(k) + " i=" + str(i));
            const Residue lhs = mod::sub(mod::mul(table[i - 1], fi1, k), mod::mul(fi, fi, k), k);
            if (lhs != ((i % 2) ? k - 1 : 1))
                o.fail("Cassini mod " + str(k) + " i=" + str(i));
        }
    }

    for (std::uint64_t q = 0; q <= 10; ++q) {
        const auto s = oracle::row_states(static_cast<std::int64_t>(q), 60);
        for (std::uint64_t i = 0; i <= 60; ++i)
            if (s_closed(q, i) != s[i] || s_exact(q, i) != s[i])
                o.fail("exact closed form q=" + str(q) + " i=" + str(i));
    }

    for (std::uint64_t k : {2, 3, 4, 5, 6, 7, 10, 12, 25, 49, 97, 1200, 997}) {
        for (std::uint64_t q : {std::uint64_t{1}, k - 1}) {
            const auto seq = s_sequence_mod(q, 100000, k);
            for (std::uint64_t i = 0; i <= 100000; ++i)
                if (s_closed(q, i, k) != seq[i]) {
                    o.fail("mod-k closed form k=" + str(k) + " q=" + str(q) + " i=" + str(i));
                    break;
                }
        }
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Table 1 fixture", 1e-3, table_one},
        {"AC2", "Table 2 fixture and alpha(3), alpha(4)", 0, table_two},
        {"AC3", "alpha examples and direct/factored agreement to 10000", 10.0, alpha_examples},
        {"AC4", "5x5, k=4, q=1 chase presses 1,2,2,1; 6 rows unsolved", 0, fig_two},
        {"AC5", "solvable rows for k=5 and parity cases for k=2", 0, section_three},
        {"AC6", "k=6, q=3, 6 rows: solvable without the alpha rule", 0, counterexample},
        {"AC7", "simulation agrees with S_rows mod k", 60.0, oracle_suite},
        {"AC8", "rows == 0, -1 (mod alpha) always solvable, k <= 60", 0, sufficiency_sweep},
        {"AC9", "prime k < 60: alpha classes are exactly the solvable rows", 0, prime_completeness},
        {"AC10", "Cassini and closed-form identities", 0, identities},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        c.body(o);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s)
            o.fail("took " + str(secs) + " s, limit " + str(c.time_limit_s) + " s");
        failed += !o.ok;
        std::printf("[%s] %-5s %-62s %9.3f ms%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title,
                    secs * 1e3, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}

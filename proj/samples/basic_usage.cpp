// Walks through the 5-row, 4-state board and then asks the analytic side
// which other row counts work.

#include <iostream>

#include "lightsout/lightsout.hpp"

int main() {
    using namespace lightsout;

    const auto t = one_pass(new_uniform({.rows = 5, .cols = 5, .k = 4, .q = 1}));
    std::cout << "presses per row:";
    for (const auto& row : t.presses)
        std::cout << ' ' << row.front();
    std::cout << (t.solved ? "  -> solved\n" : "  -> not solved\n");

    std::cout << "S_5 = " << s_exact(1, 5) << ", mod 4 = " << s_mod(1, 5, 4) << '\n';

    const auto a = alpha_factored(1200);
    std::cout << "alpha(1200) = " << a.alpha << '\n';

    const auto rep = characterize(6, 3);
    std::cout << "k=6, q=3: " << rep.residues.size() << " solvable classes mod " << rep.period
              << (rep.complete ? " (alpha rule is complete)\n" : " (more than the alpha rule)\n");
}

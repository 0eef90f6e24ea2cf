// Library walkthrough: constants across the surface catalog, a jet table, and
// one oracle cross-check. Output is deterministic.

#include <iostream>

#include "frobsesh/frobsesh.hpp"

using namespace frobsesh;

int main() {
    std::cout << "anticanonical divisor on each surface of the catalog:\n";
    for (const CatalogEntry& entry : standard_catalog()) {
        if (entry.fan.dim != 2) continue;
        const ToricDivisor d =
            make_divisor(entry.fan, std::vector<Int>(entry.fan.rays.size(), Int(1)));
        if (!is_ample(d)) {
            std::cout << "  " << entry.name << ": -K not ample, skipped\n";
            continue;
        }
        Rat eps, eps_f;
        for (int c = 0; c < entry.fan.num_cones(); ++c) {
            const SeshadriReport rep = seshadri_report(chart_at(d, c).second);
            if (c == 0 || rep.epsilon < eps) eps = rep.epsilon;
            if (c == 0 || rep.epsilon_frobenius < eps_f) eps_f = rep.epsilon_frobenius;
        }
        std::cout << "  " << entry.name << ": eps=" << rat_str(eps)
                  << " epsF=" << rat_str(eps_f) << "\n";
    }

    std::cout << "\nO(1) on P^2 at the standard chart, p=2:\n";
    const Fan p2 = projective_space(2);
    const ToricDivisor o1 = projective_o(p2, 1);
    const ChartedPolytope cp = chart_at(o1, 0).second;
    std::cout << "   m  s(m)  e  (p^e-1)/m\n";
    for (const JetTableRow& row : ratio_sequence(cp, 2, 10))
        std::cout << "  " << int_str(row.m) << "  " << int_str(row.s_classical) << "  "
                  << row.e_frobenius << "  " << rat_str(row.ratio) << "\n";

    const JetInstanceResult res = separates(o1, 3, {0}, QuotientKind::frobenius, 2, 2);
    std::cout << "\noracle at m=3, e=2: rank " << res.rank << " of " << res.rows
              << (res.surjective ? " (separates)" : " (does not separate)") << "\n";
    std::cout << "closed form: s_F(3) = " << frobenius_jet_number(cp, 3, 2) << "\n";
    return 0;
}

// A short walk through the library: build a few graphs, compute their
// resolving neighbourhoods and exact fractional dimensions, then check one
// product claim edge by edge.

#include <iostream>

#include "fraclocdim/fraclocdim.hpp"

using namespace fraclocdim;

int main() {
    for (const char* family : {"petersen", "cycle(7)", "lollipop(4,3)", "hypercube(3)"}) {
        GraphAnalysis a(make_family(family));
        std::cout << family << ": n=" << a.n() << " l=" << a.l() << " r=" << a.r() << " ldim=" << a.ldim()
                  << " ldim_f=" << a.ldim_f() << " dim_f=" << a.dim_f() << '\n';
    }

    // An optimal local resolving function, with its certificate from the dual.
    const Graph c5 = make_cycle(5);
    const LpSolution sol = ldim_f(c5);
    std::cout << "\nC5 weights:";
    for (const auto& x : sol.assignment) std::cout << ' ' << x;
    std::cout << "\nC5 packing certificate:";
    for (const auto& y : sol.dual) std::cout << ' ' << y;
    std::cout << '\n';

    GraphAnalysis k2(make_complete(2)), c(make_cycle(5));
    const TheoremReport rep = check_cartesian_claims(k2, c);
    std::cout << "\n" << rep.claim << " on K2 x C5: " << to_string(rep.status) << ", ldim_f = "
              << rep.values.at("ldim_f(GxH)") << '\n';
}

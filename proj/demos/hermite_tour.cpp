// Tour of one family end to end: operator construction, both hypergeometric
// routes, the three-term recurrence, and the Mehler-Heine limit.

#include <cstdio>

#include "ggh/hypergeom.hpp"
#include "ggh/presets.hpp"
#include "ggh/recurrence.hpp"
#include "ggh/series_lab.hpp"

using namespace ggh;

int main() {
    const SystemSpec herm = make_preset("hermite");  // G = d/dx, q = -G^2/2

    std::printf("P_n = e^{q(G)} x^n, first few members:\n");
    for (long n = 0; n <= 6; ++n)
        std::printf("  P_%ld = %s\n", n, build_P(herm, n).str().c_str());

    std::printf("\nhypergeometric routes agree with the operator series:\n");
    for (long n = 0; n <= 10; ++n) {
        const Poly p = build_P(herm, n);
        std::printf("  n=%ld  first %s  second %s\n", n,
                    rep_cont_power_first(herm, n) == p ? "ok" : "MISMATCH",
                    rep_cont_power_second(herm, n) == p ? "ok" : "MISMATCH");
    }

    std::printf("\nrecurrence x P_n = P_{n+1} + gamma_1(n) P_{n-1}:\n");
    for (long n = 1; n <= 6; ++n)
        std::printf("  gamma_1(%ld) = %s\n", n, recurrence_row(herm, n)[1].str().c_str());

    std::printf("\nscaled limit at x=1 (even class): target 0F1(-; 1/2; -1/2) = cos(sqrt 2)\n");
    const MHReport mh = mh_power_check(herm, Rational(1), 0, {25, 50, 100, 200});
    std::printf("  limit %.12f\n", mh.limit);
    for (size_t k = 0; k < mh.indices.size(); ++k)
        std::printf("  m=%-4ld deviation %.3e\n", mh.indices[k], mh.deviations[k]);
    return mh.pass ? 0 : 1;
}

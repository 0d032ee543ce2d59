#include "pqm/density.hpp"

#include <bit>

namespace pqm {

RealDensity density_of_partition(const Partition& p, const ProbDist& d) {
    check_same_universe(p.universe, d.universe);
    const int n = p.universe.n;
    RatMat r(n, n);
    for (std::uint64_t b : p.blocks) {
        std::uint64_t mi = b;
        while (mi) {
            int i = std::countr_zero(mi);
            mi &= mi - 1;
            std::uint64_t mk = b;
            while (mk) {
                int k = std::countr_zero(mk);
                mk &= mk - 1;
                r.at(i, k) = d.p[static_cast<size_t>(i)] * d.p[static_cast<size_t>(k)];
            }
        }
    }
    return RealDensity{p.universe, std::move(r)};
}

Rat set_born_rule(const RealDensity& rho, int i) {
    require(i >= 0 && i < rho.universe.n, "IndexOutOfRange", "element index out of range");
    bool exact = false;
    Rat v = rat_sqrt(rho.radicands.at(i, i), exact);
    require(exact, "InternalError", "diagonal radicand not a perfect square");
    return v;
}

RealDensity classical_luders(const RealDensity& rho, const Partition& sigma) {
    check_same_universe(rho.universe, sigma.universe);
    const int n = rho.universe.n;
    RatMat out(n, n);
    // P_C rho P_C keeps entry (i,k) iff both i and k are in C; projectors are
    // 0/1 diagonal, so the sandwich acts identically on entries and radicands.
    for (std::uint64_t c : sigma.blocks) {
        std::uint64_t mi = c;
        while (mi) {
            int i = std::countr_zero(mi);
            mi &= mi - 1;
            std::uint64_t mk = c;
            while (mk) {
                int k = std::countr_zero(mk);
                mk &= mk - 1;
                out.at(i, k) += rho.radicands.at(i, k);
            }
        }
    }
    return RealDensity{rho.universe, std::move(out)};
}

Rat density_entropy(const RealDensity& rho) {
    // tr[rho^2] = sum of squared entries = sum of radicands (rho symmetric)
    Rat sum(0);
    for (int i = 0; i < rho.universe.n; ++i)
        for (int k = 0; k < rho.universe.n; ++k) sum += rho.radicands.at(i, k);
    return 1 - sum;
}

ZeroedReport measure_and_report(const Partition& p, const Partition& sigma, const ProbDist& d) {
    check_same_universe(p.universe, sigma.universe);
    RealDensity before = density_of_partition(p, d);
    RealDensity after = classical_luders(before, sigma);
    ZeroedReport report;
    report.sum_of_squares = 0;
    for (int i = 0; i < p.universe.n; ++i) {
        for (int k = 0; k < p.universe.n; ++k) {
            const Rat& b = before.radicands.at(i, k);
            if (b != 0 && after.radicands.at(i, k) == 0) {
                report.zeroed_pairs.emplace_back(i, k);
                report.sum_of_squares += b;
            }
        }
    }
    report.entropy_before = density_entropy(before);
    report.entropy_after = density_entropy(after);
    return report;
}

Rat density_entry(const RealDensity& rho, int i, int k, bool& exact) {
    require(i >= 0 && i < rho.universe.n && k >= 0 && k < rho.universe.n, "IndexOutOfRange",
            "entry index out of range");
    return rat_sqrt(rho.radicands.at(i, k), exact);
}

}  // namespace pqm

#pragma once

#include <vector>

#include "pqm/prob.hpp"
#include "pqm/ratmat.hpp"

namespace pqm {

/// Real density matrix of a partition, stored exactly.
///
/// The (i,k) entry of rho(pi) is sqrt(p_i p_k) when (u_i,u_k) is an indit and 0
/// otherwise. Every quantity read off such a matrix (trace, Born probabilities,
/// tr[rho^2], zeroed-square sums) is a sum of products of two entries, so the
/// matrix is stored as the radicands r_ik = p_i p_k; an entry is zero exactly
/// when its radicand is. Diagonal radicands are perfect squares p_i^2, so the
/// diagonal (and hence the trace) is recoverable as exact rationals.
struct RealDensity {
    Universe universe;
    RatMat radicands;  // n x n, symmetric, r_ik = entry^2
};

/// Entries of rho(pi) that a measurement by sigma zeroes, with the bookkeeping
/// that ties their squared sum to the conditional entropy.
struct ZeroedReport {
    std::vector<std::pair<int, int>> zeroed_pairs;
    Rat sum_of_squares;
    Rat entropy_before;
    Rat entropy_after;
};

RealDensity density_of_partition(const Partition& p, const ProbDist& d);

/// tr[P_{u_i} rho] = p_i (the one-draw probability read off the diagonal).
Rat set_born_rule(const RealDensity& rho, int i);

/// Sum over blocks C of sigma of P_C rho P_C.
RealDensity classical_luders(const RealDensity& rho, const Partition& sigma);

/// 1 - tr[rho^2], exactly.
Rat density_entropy(const RealDensity& rho);

ZeroedReport measure_and_report(const Partition& p, const Partition& sigma, const ProbDist& d);

/// Exact entry value when the radicand is a perfect square (diagonal always is).
/// `exact` is false when the entry is an irrational square root.
Rat density_entry(const RealDensity& rho, int i, int k, bool& exact);

}  // namespace pqm

#pragma once

#include <vector>

#include "pqm/partition.hpp"
#include "pqm/rational.hpp"

namespace pqm {

/// Exact rational point probabilities on a universe; entries are >= 0 and sum to 1.
struct ProbDist {
    Universe universe;
    std::vector<Rat> p;
};

ProbDist make_prob_dist(const Universe& universe, std::vector<Rat> p);
ProbDist equiprobable(const Universe& universe);

/// Compound logical entropies of a pair of partitions. All fields are exact and
/// satisfy h_join = h_p + h_q - mutual = h_p_given_q + h_q_given_p + mutual.
struct EntropyReport {
    Rat h_p;
    Rat h_q;
    Rat h_join;
    Rat h_p_given_q;  // product measure on dit(p) - dit(q)
    Rat h_q_given_p;
    Rat mutual;  // product measure on dit(p) & dit(q)
};

/// Pr(B) = sum of member point probabilities.
Rat block_prob(const ProbDist& d, std::uint64_t block_mask);
Rat block_prob(const ProbDist& d, const std::vector<int>& block);

/// h(pi) = 1 - sum_j Pr(B_j)^2, the two-draw distinction probability.
Rat logical_entropy(const Partition& p, const ProbDist& d);

/// Product measure of the ditset, summed pair by pair. Equals logical_entropy
/// exactly; kept as an independent brute-force route.
Rat entropy_from_ditset(const Partition& p, const ProbDist& d);

/// Product measure of an arbitrary pair set.
Rat dit_measure(const DitSet& dits, const ProbDist& d);

EntropyReport compound_entropies(const Partition& p, const Partition& q, const ProbDist& d);

}  // namespace pqm

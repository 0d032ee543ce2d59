#include "pqm/prob.hpp"

#include <bit>

namespace pqm {

ProbDist make_prob_dist(const Universe& universe, std::vector<Rat> p) {
    require(static_cast<int>(p.size()) == universe.n, "BadDistribution",
            "need one probability per element");
    Rat total(0);
    for (const Rat& x : p) {
        require(sgn(x) >= 0, "BadDistribution", "negative probability");
        total += x;
    }
    require(total == 1, "BadDistribution", "probabilities must sum to 1 exactly");
    return ProbDist{universe, std::move(p)};
}

ProbDist equiprobable(const Universe& universe) {
    return ProbDist{universe, std::vector<Rat>(static_cast<size_t>(universe.n),
                                               Rat(1, universe.n))};
}

Rat block_prob(const ProbDist& d, std::uint64_t block_mask) {
    require((block_mask & ~full_mask(d.universe.n)) == 0, "IndexOutOfRange",
            "block index exceeds universe");
    Rat total(0);
    std::uint64_t m = block_mask;
    while (m) {
        total += d.p[static_cast<size_t>(std::countr_zero(m))];
        m &= m - 1;
    }
    return total;
}

Rat block_prob(const ProbDist& d, const std::vector<int>& block) {
    std::uint64_t m = 0;
    for (int i : block) {
        require(i >= 0 && i < d.universe.n, "IndexOutOfRange",
                "element index " + std::to_string(i) + " out of range");
        m |= bit(i);
    }
    return block_prob(d, m);
}

Rat logical_entropy(const Partition& p, const ProbDist& d) {
    check_same_universe(p.universe, d.universe);
    Rat sum_sq(0);
    for (std::uint64_t b : p.blocks) {
        Rat pb = block_prob(d, b);
        sum_sq += pb * pb;
    }
    return 1 - sum_sq;
}

Rat dit_measure(const DitSet& dits, const ProbDist& d) {
    check_same_universe(dits.universe, d.universe);
    Rat total(0);
    for (int i = 0; i < d.universe.n; ++i) {
        std::uint64_t row = dits.rows[static_cast<size_t>(i)];
        if (!row) continue;
        Rat row_sum(0);
        std::uint64_t m = row;
        while (m) {
            row_sum += d.p[static_cast<size_t>(std::countr_zero(m))];
            m &= m - 1;
        }
        total += d.p[static_cast<size_t>(i)] * row_sum;
    }
    return total;
}

Rat entropy_from_ditset(const Partition& p, const ProbDist& d) {
    return dit_measure(ditset(p), d);
}

EntropyReport compound_entropies(const Partition& p, const Partition& q, const ProbDist& d) {
    check_same_universe(p.universe, q.universe);
    check_same_universe(p.universe, d.universe);
    DitSet dp = ditset(p);
    DitSet dq = ditset(q);
    EntropyReport r;
    r.h_p = logical_entropy(p, d);
    r.h_q = logical_entropy(q, d);
    r.h_join = dit_measure(dit_union(dp, dq), d);
    r.h_p_given_q = dit_measure(dit_difference(dp, dq), d);
    r.h_q_given_p = dit_measure(dit_difference(dq, dp), d);
    r.mutual = dit_measure(dit_intersect(dp, dq), d);
    return r;
}

}  // namespace pqm

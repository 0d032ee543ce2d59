#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pqm/rational.hpp"
#include "pqm/universe.hpp"

namespace pqm {

/// Partition of a finite universe into non-empty, disjoint, exhaustive blocks.
///
/// Canonical form: each block is an index bitmask (indices ascend for free),
/// blocks ordered by smallest element. Equality is canonical-form equality.
struct Partition {
    Universe universe;
    std::vector<std::uint64_t> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const Partition& other) const = default;
};

/// Set of ordered pairs (i, k), i != k, stored as one row mask per source index.
/// The relation is symmetric and disjoint from the diagonal.
struct DitSet {
    Universe universe;
    std::vector<std::uint64_t> rows;  // rows[i] = { k : (i,k) present }

    bool operator==(const DitSet& other) const = default;
};

/// Value of an attribute at a point: an exact rational or an opaque label.
/// Tokens compare by exact equality only.
using AttrValue = std::variant<Rat, std::string>;

/// Function from the universe into value tokens; its inverse image is a partition.
struct Attribute {
    Universe universe;
    std::vector<AttrValue> values;  // size n
};

Partition make_partition(const Universe& universe, const std::vector<std::vector<int>>& blocks);
Partition make_partition_masks(const Universe& universe, std::vector<std::uint64_t> blocks);

/// Discrete partition 1_U (all singletons) and indiscrete partition 0_U (one block).
Partition discrete_partition(const Universe& universe);
Partition indiscrete_partition(const Universe& universe);

Attribute make_attribute(const Universe& universe, std::vector<AttrValue> values);

DitSet ditset(const Partition& p);
DitSet inditset(const Partition& p);
std::size_t dit_count(const DitSet& d);

DitSet dit_union(const DitSet& a, const DitSet& b);
DitSet dit_intersect(const DitSet& a, const DitSet& b);
DitSet dit_difference(const DitSet& a, const DitSet& b);
bool dit_subset(const DitSet& inner, const DitSet& outer);
std::vector<std::pair<int, int>> dit_pairs(const DitSet& d);

/// True iff every block of `fine` lies inside a block of `coarse`.
bool refines(const Partition& coarse, const Partition& fine);

/// Least upper bound in the refinement order: non-empty pairwise block intersections.
Partition join(const Partition& p, const Partition& q);

/// Greatest lower bound: connected components of the block-overlap graph.
Partition meet(const Partition& p, const Partition& q);

/// Blocks are the maximal constant sets of f.
Partition partition_from_attribute(const Attribute& f);

/// True iff the iterated join of the list is the discrete partition.
bool is_complete(const std::vector<Partition>& ps);

/// Which block of p contains index i.
int block_of(const Partition& p, int i);

/// All partitions of an n-element universe (restricted-growth enumeration).
/// Sizes follow the Bell numbers: 1, 2, 5, 15, 52, ...
std::vector<Partition> all_partitions(const Universe& universe);

/// Text form, e.g. "ac|b|d" for single-letter labels, "u0,u2|u1" otherwise.
std::string partition_str(const Partition& p);
Partition partition_parse(const Universe& universe, const std::string& text);

}  // namespace pqm

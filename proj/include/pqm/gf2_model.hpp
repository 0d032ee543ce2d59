#pragma once

#include <string>
#include <vector>

#include "pqm/dsd.hpp"
#include "pqm/partition.hpp"
#include "pqm/subspace.hpp"

namespace pqm {

/// Basis of GF(2)^n = the powerset of an n-element universe under symmetric
/// difference; vectors are subset bitmasks.
struct Gf2Basis {
    int n = 0;
    std::vector<std::uint64_t> vectors;
};

Gf2Basis gf2_standard_basis(int n);

/// Conjugate basis: vector i is the complement U - {u_i}. Full rank only for
/// even n (for odd n the complements sum to zero), rejected as OddDimension.
Gf2Basis hat_basis(int n);

/// One part per distinct value token, spanned by the matching basis vectors,
/// expressed in the computational basis.
Dsd<Gf2Kernel> dsd_from_gf2_attribute(const Gf2Basis& basis, const std::vector<AttrValue>& values);

/// Join-like trichotomy over GF(2).
Classification gf2_classify(const Dsd<Gf2Kernel>& d1, const Dsd<Gf2Kernel>& d2);

/// The decomposition { powerset(B_j) } of GF(2)^n induced by a partition:
/// each block's part is spanned by its singletons.
Dsd<Gf2Kernel> partition_dsd_roundtrip(const Partition& p);

/// Inverse of the above: recovers the partition from a decomposition whose
/// parts are full powersets of disjoint supports.
Partition partition_from_gf2_dsd(const Universe& universe, const Dsd<Gf2Kernel>& d);

/// Coordinates of a subset vector with respect to a basis (solves B x = v).
std::uint64_t rebase(const Gf2Basis& basis, std::uint64_t subset);

/// Subset built from coordinates: XOR of the selected basis vectors.
std::uint64_t unrebase(const Gf2Basis& basis, std::uint64_t coords);

/// Brute-force check that two GF(2) decompositions share no non-zero vector
/// that is inside a single part of each (i.e. a common "eigenvector").
/// Exponential in n; meant for the small worked examples.
bool gf2_common_eigenvector_exists(const Dsd<Gf2Kernel>& d1, const Dsd<Gf2Kernel>& d2);

std::string gf2_subset_str(const Universe& universe, std::uint64_t mask);

}  // namespace pqm

#pragma once

#include <string>
#include <vector>

#include "pqm/dsd.hpp"
#include "pqm/partition.hpp"
#include "pqm/quantum.hpp"
#include "pqm/ratmat.hpp"
#include "pqm/subspace.hpp"

namespace pqm {

/// Finite group as a multiplication table: table[a][b] = index of a*b.
/// Validated as a group (Latin square, identity, inverses, associativity),
/// exhaustively; order capped at 24.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;

    int mul(int a, int b) const { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
};

FiniteGroup make_group(std::vector<std::vector<int>> table, int identity);

/// Z2 x Z2 with the element order (0,0), (1,0), (0,1), (1,1).
FiniteGroup klein_four();
FiniteGroup cyclic_group(int order);

/// Family of maps U -> U indexed by group elements.
struct SetRep {
    FiniteGroup group;
    int n = 0;
    std::vector<std::vector<int>> maps;  // maps[g][u] = R_g(u)
};

SetRep make_set_rep(FiniteGroup group, int n, std::vector<std::vector<int>> maps);

/// Cayley action of a group on itself: R_g(g') = g*g'.
SetRep cayley_set_rep(const FiniteGroup& group);

/// Per-condition diagnostics for the equivalence-relation criteria: identity
/// map present (reflexivity), inverses present (symmetry), family closed under
/// composition (transitivity), plus consistency with the multiplication table.
struct SetRepReport {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    bool homomorphic = false;
    std::vector<std::string> failures;

    bool ok() const { return reflexive && symmetric && transitive && homomorphic; }
};

SetRepReport validate_set_rep(const SetRep& rep);

/// Blocks are the orbits: connected components of the union of map graphs.
/// The one-argument form uses default element labels.
Partition orbit_partition(const SetRep& rep);
Partition orbit_partition(const SetRep& rep, const Universe& universe);

/// f composed with every R_g equals f; equivalently f is constant on orbits.
bool is_commuting_attribute(const Attribute& f, const SetRep& rep);

/// For a commuting attribute, verifies the restriction to every orbit is
/// constant (must always hold; NotCommuting if the precondition fails).
bool schur_set_check(const Attribute& f, const SetRep& rep);

/// Group acting on its own element basis by permutation matrices.
struct VectorRep {
    FiniteGroup group;
    int dim = 0;
    std::vector<RatMat> matrices;
};

VectorRep cayley_vector_rep(const FiniteGroup& group);

CMat to_cmat(const RatMat& m);

/// Eigenspace decomposition of an involution (R^2 = I): column spaces of
/// (I+R)/2 and (I-R)/2 with eigenvalues +1 and -1 (either may be absent).
/// Exact over the rationals.
struct InvolutionEigen {
    Dsd<RatKernel> dsd;
    std::vector<int> eigenvalues;  // +1 / -1, parallel to dsd.parts
};

InvolutionEigen involution_eigenspace_dsd(const RatMat& r);

/// Complex variant with tolerance, for non-rational involutions.
InvolutionEigen involution_eigenspace_dsd_cx(const CMat& r, double tol, Dsd<CxKernel>& out);

/// One irreducible subspace with its tuple of generator eigenvalues.
struct Irrep {
    Subspace<RatKernel> subspace;
    std::vector<int> labels;  // eigenvalue under each generator, order given
    std::string ket;          // e.g. "|1,-1>"
};

/// Iterated join-like operation on the eigenspace decompositions of commuting
/// involution generators; each resulting subspace carries its eigenvalue tuple.
std::vector<Irrep> irrep_decomposition(const VectorRep& rep, const std::vector<int>& generators);

/// The operator commutes with every R_g (checked directly, and again through
/// the vanishing of R_g entries on eigenvalue-distinct index pairs).
bool verify_commuting_operator(const Observable& obs, const VectorRep& rep,
                               double tol = tolerance());

}  // namespace pqm

#pragma once

#include <string>
#include <vector>

#include "pqm/quantum.hpp"
#include "pqm/subspace.hpp"

namespace pqm {

/// Compatibility trichotomy of two observables, decided by the dimension of
/// the subspace spanned by their simultaneous eigenvectors.
enum class CompatKind { Commuting, Incompatible, Conjugate };

struct Classification {
    CompatKind kind;
    int se_dim;
};

std::string compat_kind_name(CompatKind kind);

/// Diagonalizable operator over the rationals: eigenbasis columns are exact
/// and pairwise orthogonal (so the operator matrix B diag B^-1 is symmetric),
/// eigenvalues are exact rationals.
struct RatObservable {
    int dim = 0;
    RatMat eigenbasis;
    std::vector<Rat> values;
};

RatObservable rat_observable(const RatMat& eigenbasis, const std::vector<Rat>& values);
RatMat rat_observable_matrix(const RatObservable& obs);

/// Eigenspace decomposition: one part per distinct eigenvalue.
Dsd<CxKernel> dsd_from_observable(const Observable& obs, double tol = tolerance());
Dsd<RatKernel> dsd_from_observable(const RatObservable& obs);

/// Nullspace of FG - GF as a subspace.
Subspace<CxKernel> commutator_kernel(const CMat& f, const CMat& g, double tol = tolerance());
Subspace<RatKernel> commutator_kernel(const RatMat& f, const RatMat& g);

/// Runs both routes to the simultaneous-eigenvector subspace — the join-like
/// operation on the eigenspace decompositions, and the commutator kernel — and
/// cross-checks them before returning the trichotomy. A mismatch throws
/// PropositionViolated.
Classification classify(const Observable& f, const Observable& g, double tol = tolerance());
Classification classify(const RatObservable& f, const RatObservable& g);

/// Trichotomy from a precomputed simultaneous-eigenvector dimension.
Classification classification_from_se(int se_dim, int ambient);

/// True iff the iterated join-like operation on the (pairwise commuting)
/// observables' eigenspace decompositions has all parts one-dimensional.
bool is_csco(const std::vector<Observable>& observables, double tol = tolerance());

}  // namespace pqm

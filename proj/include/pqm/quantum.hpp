#pragma once

#include <vector>

#include "pqm/cmatrix.hpp"

namespace pqm {

/// Observable given as an orthonormal eigenbasis plus the eigenvalue function
/// on it. The operator matrix B diag(values) B^dagger is derived, never stored;
/// eigenvalue equality is exact on the declared list (values are user tokens).
struct Observable {
    int dim = 0;
    CMat eigenbasis;             // n x n, orthonormal columns
    std::vector<double> values;  // eigenvalue of column i
};

/// Trace-1 Hermitian PSD matrix (all within tolerance).
struct QDensity {
    int dim = 0;
    CMat entries;
};

Observable observable_from_attribute(const CMat& eigenbasis, const std::vector<double>& values,
                                     double tol = tolerance());

/// B diag(values) B^dagger.
CMat observable_matrix(const Observable& obs);

/// Distinct eigenvalues in order of first appearance.
std::vector<double> distinct_eigenvalues(const Observable& obs);

/// Projector onto the eigenspace of `eigenvalue` (exact match in the list).
CMat eigenspace_projector(const Observable& obs, double eigenvalue);

QDensity make_qdensity(const CMat& entries, double tol = tolerance());
QDensity density_from_state(const std::vector<Complex>& psi, double tol = tolerance());

/// tr[P_phi rho], the one-measurement probability of the eigenvalue.
double born_probability(const QDensity& rho, const Observable& obs, double eigenvalue);

/// Sum over eigenspaces of P rho P.
QDensity quantum_luders(const QDensity& rho, const Observable& obs, double tol = tolerance());

/// n^2 x n^2 projector onto the span of eigenvalue-distinct basis pairs in the
/// tensor square; diagonal in the product eigenbasis, entry 1 at j*n+k iff
/// f(u_j) != f(u_k).
CMat qudit_projector(const Observable& obs);

/// Quantum logical entropy three ways. The qudit route rotates rho into the
/// observable's eigenbasis before tensoring.
double qle_via_qudits(const Observable& obs, const QDensity& rho);
double qle_via_trace(const QDensity& rho);
double qle_via_zeroed(const QDensity& rho_before, const QDensity& rho_after);

/// Compound quantum logical entropies for commuting observables expressed in a
/// shared eigenbasis (the second observable must be diagonal in the first's
/// basis, within tolerance).
struct CompoundQle {
    double joint;        // qudit(F) | qudit(G)
    double f_given_g;    // qudit(F) - qudit(G)
    double g_given_f;    // qudit(G) - qudit(F)
    double mutual;       // qudit(F) & qudit(G)
};

CompoundQle compound_qle(const Observable& obs_f, const Observable& obs_g, const QDensity& rho,
                         double tol = tolerance());

/// M^dagger M = I within tolerance (inner products, hence distinctions, preserved).
bool is_distinction_preserving(const CMat& m, double tol = tolerance());

}  // namespace pqm

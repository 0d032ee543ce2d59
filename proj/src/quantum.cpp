#include "pqm/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace pqm {

Observable observable_from_attribute(const CMat& eigenbasis, const std::vector<double>& values,
                                     double tol) {
    require(eigenbasis.rows() == eigenbasis.cols(), "DimensionMismatch",
            "eigenbasis must be square");
    require(static_cast<int>(values.size()) == eigenbasis.cols(), "DimensionMismatch",
            "need one eigenvalue per basis column");
    CMat gram = eigenbasis.adjoint() * eigenbasis;
    require(approx_equal(gram, CMat::identity(eigenbasis.cols()), tol), "NotOrthonormal",
            "eigenbasis columns must be orthonormal");
    return Observable{eigenbasis.rows(), eigenbasis, values};
}

CMat observable_matrix(const Observable& obs) {
    return obs.eigenbasis * CMat::diagonal(obs.values) * obs.eigenbasis.adjoint();
}

std::vector<double> distinct_eigenvalues(const Observable& obs) {
    std::vector<double> out;
    for (double v : obs.values)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

CMat eigenspace_projector(const Observable& obs, double eigenvalue) {
    bool found = false;
    CMat p(obs.dim, obs.dim);
    for (int c = 0; c < obs.dim; ++c) {
        if (obs.values[static_cast<size_t>(c)] != eigenvalue) continue;
        found = true;
        CMat col = obs.eigenbasis.column(c);
        p = p + col * col.adjoint();
    }
    require(found, "UnknownEigenvalue", "eigenvalue does not occur in the observable");
    return p;
}

QDensity make_qdensity(const CMat& entries, double tol) {
    require(entries.rows() == entries.cols(), "DimensionMismatch", "density matrix must be square");
    require(is_hermitian(entries, tol), "NotDensity", "density matrix must be Hermitian");
    require(std::abs(entries.trace() - Complex{1.0}) <= 10 * tol, "NotDensity",
            "density matrix must have trace 1");
    require(is_positive_semidefinite(entries, 100 * tol), "NotDensity",
            "density matrix must be positive semidefinite");
    return QDensity{entries.rows(), entries};
}

QDensity density_from_state(const std::vector<Complex>& psi, double tol) {
    double norm_sq = 0;
    for (const Complex& a : psi) norm_sq += std::norm(a);
    require(std::abs(std::sqrt(norm_sq) - 1.0) <= tol, "NotNormalized",
            "state vector must have unit norm");
    CMat v = CMat::column_vector(psi);
    return QDensity{static_cast<int>(psi.size()), v * v.adjoint()};
}

double born_probability(const QDensity& rho, const Observable& obs, double eigenvalue) {
    require(rho.dim == obs.dim, "DimensionMismatch", "state and observable dimensions differ");
    CMat p = eigenspace_projector(obs, eigenvalue);
    return (p * rho.entries).trace().real();
}

QDensity quantum_luders(const QDensity& rho, const Observable& obs, double tol) {
    require(rho.dim == obs.dim, "DimensionMismatch", "state and observable dimensions differ");
    CMat out(rho.dim, rho.dim);
    for (double v : distinct_eigenvalues(obs)) {
        CMat p = eigenspace_projector(obs, v);
        out = out + p * rho.entries * p;
    }
    (void)tol;
    return QDensity{rho.dim, out};
}

CMat qudit_projector(const Observable& obs) {
    const int n = obs.dim;
    CMat p(n * n, n * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (obs.values[static_cast<size_t>(j)] != obs.values[static_cast<size_t>(k)])
                p.at(j * n + k, j * n + k) = 1.0;
    return p;
}

namespace {

/// rho re-expressed in the observable's eigenbasis coordinates.
CMat rho_in_eigenbasis(const Observable& obs, const QDensity& rho) {
    return obs.eigenbasis.adjoint() * rho.entries * obs.eigenbasis;
}

double qudit_set_trace(const std::vector<std::pair<int, int>>& pairs, const CMat& rho_eb) {
    // tr[P (rho (x) rho)] with P diagonal on the given index pairs
    double total = 0;
    for (auto [j, k] : pairs)
        total += (rho_eb.at(j, j) * rho_eb.at(k, k)).real();
    return total;
}

}  // namespace

double qle_via_qudits(const Observable& obs, const QDensity& rho) {
    require(rho.dim == obs.dim, "DimensionMismatch", "state and observable dimensions differ");
    CMat rho_eb = rho_in_eigenbasis(obs, rho);
    CMat rr = tensor(rho_eb, rho_eb);
    return (qudit_projector(obs) * rr).trace().real();
}

double qle_via_trace(const QDensity& rho) {
    return 1.0 - (rho.entries * rho.entries).trace().real();
}

double qle_via_zeroed(const QDensity& rho_before, const QDensity& rho_after) {
    require(rho_before.dim == rho_after.dim, "DimensionMismatch", "density dimensions differ");
    double total = 0;
    for (int j = 0; j < rho_before.dim; ++j)
        for (int k = 0; k < rho_before.dim; ++k)
            total += std::norm(rho_before.entries.at(j, k)) - std::norm(rho_after.entries.at(j, k));
    return total;
}

CompoundQle compound_qle(const Observable& obs_f, const Observable& obs_g, const QDensity& rho,
                         double tol) {
    require(obs_f.dim == obs_g.dim, "DimensionMismatch", "observable dimensions differ");
    require(rho.dim == obs_f.dim, "DimensionMismatch", "state and observable dimensions differ");
    // G must be diagonal in F's eigenbasis: the shared simultaneous eigenbasis
    CMat g_in_f = obs_f.eigenbasis.adjoint() * observable_matrix(obs_g) * obs_f.eigenbasis;
    const int n = obs_f.dim;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (j != k)
                require(std::abs(g_in_f.at(j, k)) <= 10 * tol, "NonCommutingObservables",
                        "observables do not share an eigenbasis");
    std::vector<double> fv = obs_f.values, gv(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) gv[static_cast<size_t>(j)] = g_in_f.at(j, j).real();

    CMat rho_eb = rho_in_eigenbasis(obs_f, rho);
    std::vector<std::pair<int, int>> q_union, q_f_only, q_g_only, q_both;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            bool fd = fv[static_cast<size_t>(j)] != fv[static_cast<size_t>(k)];
            bool gd = std::abs(gv[static_cast<size_t>(j)] - gv[static_cast<size_t>(k)]) > 10 * tol;
            if (fd || gd) q_union.emplace_back(j, k);
            if (fd && !gd) q_f_only.emplace_back(j, k);
            if (!fd && gd) q_g_only.emplace_back(j, k);
            if (fd && gd) q_both.emplace_back(j, k);
        }
    CompoundQle out;
    out.joint = qudit_set_trace(q_union, rho_eb);
    out.f_given_g = qudit_set_trace(q_f_only, rho_eb);
    out.g_given_f = qudit_set_trace(q_g_only, rho_eb);
    out.mutual = qudit_set_trace(q_both, rho_eb);
    return out;
}

bool is_distinction_preserving(const CMat& m, double tol) {
    require(m.rows() == m.cols(), "NotSquare", "unitarity check needs a square matrix");
    return approx_equal(m.adjoint() * m, CMat::identity(m.cols()), tol);
}

}  // namespace pqm

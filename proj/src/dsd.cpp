#include "pqm/dsd.hpp"

#include <algorithm>

namespace pqm {

std::string compat_kind_name(CompatKind kind) {
    switch (kind) {
        case CompatKind::Commuting: return "Commuting";
        case CompatKind::Incompatible: return "Incompatible";
        case CompatKind::Conjugate: return "Conjugate";
    }
    return "?";
}

RatObservable rat_observable(const RatMat& eigenbasis, const std::vector<Rat>& values) {
    require(eigenbasis.rows() == eigenbasis.cols(), "DimensionMismatch",
            "eigenbasis must be square");
    require(static_cast<int>(values.size()) == eigenbasis.cols(), "DimensionMismatch",
            "need one eigenvalue per basis column");
    require(rank(eigenbasis) == eigenbasis.cols(), "SingularMatrix",
            "eigenbasis columns must be independent");
    // pairwise orthogonality keeps B diag B^-1 symmetric (self-adjoint over Q)
    for (int i = 0; i < eigenbasis.cols(); ++i)
        for (int j = i + 1; j < eigenbasis.cols(); ++j) {
            Rat dot(0);
            for (int r = 0; r < eigenbasis.rows(); ++r)
                dot += eigenbasis.at(r, i) * eigenbasis.at(r, j);
            require(dot == 0, "NotOrthonormal", "eigenbasis columns must be orthogonal");
        }
    return RatObservable{eigenbasis.rows(), eigenbasis, values};
}

RatMat rat_observable_matrix(const RatObservable& obs) {
    return obs.eigenbasis * RatMat::diagonal(obs.values) * inverse(obs.eigenbasis);
}

Dsd<CxKernel> dsd_from_observable(const Observable& obs, double tol) {
    CxKernel k{tol};
    std::vector<Subspace<CxKernel>> parts;
    for (double v : distinct_eigenvalues(obs)) {
        std::vector<int> idx;
        for (int c = 0; c < obs.dim; ++c)
            if (obs.values[static_cast<size_t>(c)] == v) idx.push_back(c);
        CMat cols(obs.dim, static_cast<int>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j)
            for (int r = 0; r < obs.dim; ++r) cols.at(r, static_cast<int>(j)) = obs.eigenbasis.at(r, idx[j]);
        parts.push_back(subspace_from_columns<CxKernel>(obs.dim, cols, k));
    }
    return make_dsd<CxKernel>(obs.dim, std::move(parts), k);
}

Dsd<RatKernel> dsd_from_observable(const RatObservable& obs) {
    RatKernel k{};
    std::vector<Rat> seen;
    std::vector<std::vector<int>> groups;
    for (int c = 0; c < obs.dim; ++c) {
        const Rat& v = obs.values[static_cast<size_t>(c)];
        auto it = std::find(seen.begin(), seen.end(), v);
        if (it == seen.end()) {
            seen.push_back(v);
            groups.push_back({c});
        } else {
            groups[static_cast<size_t>(it - seen.begin())].push_back(c);
        }
    }
    std::vector<Subspace<RatKernel>> parts;
    for (const auto& idx : groups) {
        RatMat cols(obs.dim, static_cast<int>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j)
            for (int r = 0; r < obs.dim; ++r) cols.at(r, static_cast<int>(j)) = obs.eigenbasis.at(r, idx[j]);
        parts.push_back(subspace_from_columns<RatKernel>(obs.dim, cols, k));
    }
    return make_dsd<RatKernel>(obs.dim, std::move(parts), k);
}

Subspace<CxKernel> commutator_kernel(const CMat& f, const CMat& g, double tol) {
    require(f.rows() == f.cols() && g.rows() == g.cols(), "DimensionMismatch",
            "operators must be square");
    require(f.rows() == g.rows(), "DimensionMismatch", "operator dimensions differ");
    CxKernel k{tol};
    CMat comm = f * g - g * f;
    return subspace_from_columns<CxKernel>(f.rows(), nullspace(comm, tol), k);
}

Subspace<RatKernel> commutator_kernel(const RatMat& f, const RatMat& g) {
    require(f.rows() == f.cols() && g.rows() == g.cols(), "DimensionMismatch",
            "operators must be square");
    require(f.rows() == g.rows(), "DimensionMismatch", "operator dimensions differ");
    RatKernel k{};
    RatMat comm = f * g - g * f;
    return subspace_from_columns<RatKernel>(f.rows(), nullspace(comm), k);
}

Classification classification_from_se(int se_dim, int ambient) {
    if (se_dim == ambient) return {CompatKind::Commuting, se_dim};
    if (se_dim == 0) return {CompatKind::Conjugate, se_dim};
    return {CompatKind::Incompatible, se_dim};
}

Classification classify(const Observable& f, const Observable& g, double tol) {
    require(f.dim == g.dim, "DimensionMismatch", "observable dimensions differ");
    CxKernel k{tol};
    auto jl = join_like(dsd_from_observable(f, tol), dsd_from_observable(g, tol), k);
    auto ker = commutator_kernel(observable_matrix(f), observable_matrix(g), tol);
    require(subspace_equal(jl.se, ker, k), "PropositionViolated",
            "simultaneous-eigenvector span and commutator kernel disagree");
    return classification_from_se(jl.se.dim(), f.dim);
}

Classification classify(const RatObservable& f, const RatObservable& g) {
    require(f.dim == g.dim, "DimensionMismatch", "observable dimensions differ");
    RatKernel k{};
    auto jl = join_like(dsd_from_observable(f), dsd_from_observable(g), k);
    auto ker = commutator_kernel(rat_observable_matrix(f), rat_observable_matrix(g));
    require(subspace_equal(jl.se, ker, k), "PropositionViolated",
            "simultaneous-eigenvector span and commutator kernel disagree");
    return classification_from_se(jl.se.dim(), f.dim);
}

bool is_csco(const std::vector<Observable>& observables, double tol) {
    require(!observables.empty(), "EmptyList", "need at least one observable");
    CxKernel k{tol};
    for (size_t i = 0; i < observables.size(); ++i)
        for (size_t j = i + 1; j < observables.size(); ++j)
            require(classify(observables[i], observables[j], tol).kind == CompatKind::Commuting,
                    "NonCommutingObservables", "CSCO test needs pairwise commuting observables");
    Dsd<CxKernel> acc = dsd_from_observable(observables.front(), tol);
    for (size_t i = 1; i < observables.size(); ++i) {
        auto jl = join_like(acc, dsd_from_observable(observables[i], tol), k);
        // pairwise commuting: the join-like result is a genuine decomposition
        acc = make_dsd<CxKernel>(acc.ambient, std::move(jl.parts), k);
    }
    for (const auto& part : acc.parts)
        if (part.dim() != 1) return false;
    return true;
}

}  // namespace pqm

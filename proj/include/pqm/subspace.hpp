#pragma once

#include <vector>

#include "pqm/cmatrix.hpp"
#include "pqm/gf2.hpp"
#include "pqm/ratmat.hpp"

namespace pqm {

/// Field kernels giving the subspace machinery a uniform face over exact
/// rationals, tolerance-ranked complex doubles, and GF(2) bitmasks.
struct RatKernel {
    using Matrix = RatMat;
    static constexpr const char* field_name = "rational";

    int rows(const Matrix& m) const { return m.rows(); }
    int cols(const Matrix& m) const { return m.cols(); }
    Matrix canonical(const Matrix& m) const { return column_space_canonical(m); }
    Matrix kernel_basis(const Matrix& m) const { return nullspace(m); }
    int rank_of(const Matrix& m) const { return rank(m); }
    Matrix concat(const Matrix& a, const Matrix& b) const { return hcat(a, b); }
    Matrix negated(const Matrix& m) const { return m.scaled(Rat(-1)); }
    Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
    Matrix top_rows(const Matrix& m, int count) const {
        Matrix out(count, m.cols());
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
        return out;
    }
    bool contains(const Matrix& a, const Matrix& b) const {
        return rank(hcat(a, b)) == rank(a);
    }
};

struct CxKernel {
    using Matrix = CMat;
    static constexpr const char* field_name = "complex";
    double tol = tolerance();

    int rows(const Matrix& m) const { return m.rows(); }
    int cols(const Matrix& m) const { return m.cols(); }
    Matrix canonical(const Matrix& m) const { return orthonormalize(m, tol); }
    Matrix kernel_basis(const Matrix& m) const { return nullspace(m, tol); }
    int rank_of(const Matrix& m) const { return rank(m, tol); }
    Matrix concat(const Matrix& a, const Matrix& b) const { return hcat(a, b); }
    Matrix negated(const Matrix& m) const { return m.scaled(-1.0); }
    Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
    Matrix top_rows(const Matrix& m, int count) const {
        Matrix out(count, m.cols());
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
        return out;
    }
    // span(b) inside span(a), by projection residual; assumes `a` orthonormalized
    bool contains(const Matrix& a, const Matrix& b) const {
        Matrix residual = b - a * (a.adjoint() * b);
        return residual.max_abs() <= tol * 100;
    }
};

struct Gf2Kernel {
    using Matrix = Gf2Mat;
    static constexpr const char* field_name = "gf2";

    int rows(const Matrix& m) const { return m.n; }
    int cols(const Matrix& m) const { return m.col_count(); }
    Matrix canonical(const Matrix& m) const { return gf2_column_space_canonical(m); }
    Matrix kernel_basis(const Matrix& m) const { return gf2_nullspace(m); }
    int rank_of(const Matrix& m) const { return gf2_rank(m); }
    Matrix concat(const Matrix& a, const Matrix& b) const { return gf2_hcat(a, b); }
    Matrix negated(const Matrix& m) const { return m; }  // -1 = 1
    Matrix mul(const Matrix& a, const Matrix& b) const { return gf2_mul(a, b); }
    Matrix top_rows(const Matrix& m, int count) const {
        Matrix out{count, m.cols};
        const std::uint64_t keep = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
        for (auto& c : out.cols) c &= keep;
        return out;
    }
    bool contains(const Matrix& a, const Matrix& b) const {
        for (std::uint64_t v : b.cols) {
            bool ok = false;
            gf2_solve(a, v, ok);
            if (!ok) return false;
        }
        return true;
    }
};

/// Basis-represented subspace of a fixed ambient space. The basis is kept in
/// the kernel's canonical form (echelon over exact fields, orthonormal over C).
template <class K>
struct Subspace {
    int ambient = 0;
    typename K::Matrix basis;

    int dim() const { return basis_cols(); }
    int basis_cols() const {
        K k{};
        return k.cols(basis);
    }
};

/// Direct-sum decomposition: parts with pairwise zero intersection whose
/// dimensions sum to the ambient dimension.
template <class K>
struct Dsd {
    int ambient = 0;
    std::vector<Subspace<K>> parts;
};

template <class K>
Subspace<K> subspace_from_columns(int ambient, const typename K::Matrix& cols, const K& k = {}) {
    require(k.rows(cols) == ambient || k.cols(cols) == 0, "AmbientMismatch",
            "basis rows must equal the ambient dimension");
    return Subspace<K>{ambient, k.canonical(cols)};
}

template <class K>
Subspace<K> zero_subspace(int ambient, const K& k = {}) {
    return Subspace<K>{ambient, typename K::Matrix{}};
}

template <class K>
Subspace<K> intersect_subspaces(const Subspace<K>& a, const Subspace<K>& b, const K& k = {}) {
    require(a.ambient == b.ambient, "AmbientMismatch", "subspaces live in different spaces");
    if (a.dim() == 0 || b.dim() == 0) return zero_subspace<K>(a.ambient, k);
    // x = A u = B w  <=>  [A | -B] (u; w) = 0; the intersection is A * u-part
    auto stacked = k.concat(a.basis, k.negated(b.basis));
    auto null = k.kernel_basis(stacked);
    if (k.cols(null) == 0) return zero_subspace<K>(a.ambient, k);
    auto u_part = k.top_rows(null, k.cols(a.basis));
    return subspace_from_columns<K>(a.ambient, k.mul(a.basis, u_part), k);
}

template <class K>
Subspace<K> span_union(const Subspace<K>& a, const Subspace<K>& b, const K& k = {}) {
    require(a.ambient == b.ambient, "AmbientMismatch", "subspaces live in different spaces");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return subspace_from_columns<K>(a.ambient, k.concat(a.basis, b.basis), k);
}

template <class K>
bool subspace_contains(const Subspace<K>& outer, const Subspace<K>& inner, const K& k = {}) {
    if (inner.dim() == 0) return true;
    if (outer.dim() == 0) return false;
    return k.contains(outer.basis, inner.basis);
}

template <class K>
bool subspace_equal(const Subspace<K>& a, const Subspace<K>& b, const K& k = {}) {
    if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
    return subspace_contains(a, b, k) && subspace_contains(b, a, k);
}

template <class K>
Subspace<K> whole_space(int ambient, const K& k = {}) {
    if constexpr (std::is_same_v<K, Gf2Kernel>)
        return Subspace<K>{ambient, gf2_identity(ambient)};
    else if constexpr (std::is_same_v<K, RatKernel>)
        return Subspace<K>{ambient, RatMat::identity(ambient)};
    else
        return Subspace<K>{ambient, CMat::identity(ambient)};
}

/// Validates the direct-sum property: dimensions sum to the ambient dimension,
/// pairwise intersections are zero, and the concatenated basis has full rank.
template <class K>
Dsd<K> make_dsd(int ambient, std::vector<Subspace<K>> parts, const K& k = {}) {
    int total = 0;
    typename K::Matrix all{};
    for (const auto& part : parts) {
        require(part.ambient == ambient, "AmbientMismatch", "part in a different ambient space");
        require(part.dim() > 0, "EmptyPart", "decomposition parts must be non-zero");
        total += part.dim();
        all = k.cols(all) == 0 ? part.basis : k.concat(all, part.basis);
    }
    require(total == ambient, "NotDirectSum", "part dimensions must sum to the ambient dimension");
    require(k.rank_of(all) == ambient, "NotDirectSum", "concatenated part bases must be invertible");
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            require(intersect_subspaces(parts[i], parts[j], k).dim() == 0, "NotDirectSum",
                    "parts must intersect trivially");
    return Dsd<K>{ambient, std::move(parts)};
}

template <class K>
struct JoinLikeResult {
    std::vector<Subspace<K>> parts;  // non-zero pairwise intersections
    Subspace<K> se;                  // their span: the simultaneous-eigenvector subspace
};

/// Mimics the partition join on two decompositions: all non-zero intersections
/// of parts, plus their span. When the span is the whole space this is the DSD
/// join; otherwise the parts do not decompose the space.
template <class K>
JoinLikeResult<K> join_like(const Dsd<K>& d1, const Dsd<K>& d2, const K& k = {}) {
    require(d1.ambient == d2.ambient, "AmbientMismatch", "decompositions live in different spaces");
    JoinLikeResult<K> out;
    out.se = zero_subspace<K>(d1.ambient, k);
    for (const auto& a : d1.parts)
        for (const auto& b : d2.parts) {
            Subspace<K> meet_part = intersect_subspaces(a, b, k);
            if (meet_part.dim() == 0) continue;
            out.se = span_union(out.se, meet_part, k);
            out.parts.push_back(std::move(meet_part));
        }
    return out;
}

}  // namespace pqm

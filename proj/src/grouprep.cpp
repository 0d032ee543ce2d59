#include "pqm/grouprep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace pqm {

FiniteGroup make_group(std::vector<std::vector<int>> table, int identity) {
    const int g = static_cast<int>(table.size());
    require(g >= 1, "InvalidGroup", "empty multiplication table");
    require(g <= 24, "InvalidGroup", "group order capped at 24");
    require(identity >= 0 && identity < g, "InvalidGroup", "identity index out of range");
    for (const auto& row : table) {
        require(static_cast<int>(row.size()) == g, "InvalidGroup", "table must be square");
        for (int v : row) require(v >= 0 && v < g, "InvalidGroup", "table entry out of range");
    }
    // Latin square
    for (int a = 0; a < g; ++a) {
        std::vector<bool> row_seen(static_cast<size_t>(g), false), col_seen(static_cast<size_t>(g), false);
        for (int b = 0; b < g; ++b) {
            require(!row_seen[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])],
                    "InvalidGroup", "row is not a permutation");
            row_seen[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])] = true;
            require(!col_seen[static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(a)])],
                    "InvalidGroup", "column is not a permutation");
            col_seen[static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(a)])] = true;
        }
    }
    for (int a = 0; a < g; ++a) {
        require(table[static_cast<size_t>(identity)][static_cast<size_t>(a)] == a &&
                    table[static_cast<size_t>(a)][static_cast<size_t>(identity)] == a,
                "InvalidGroup", "designated identity does not act as identity");
    }
    for (int a = 0; a < g; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < g; ++b)
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity &&
                table[static_cast<size_t>(b)][static_cast<size_t>(a)] == identity)
                has_inverse = true;
        require(has_inverse, "InvalidGroup", "element without inverse");
    }
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
            for (int c = 0; c < g; ++c)
                require(table[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                             [static_cast<size_t>(c)] ==
                            table[static_cast<size_t>(a)]
                                 [static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(c)])],
                        "InvalidGroup", "multiplication is not associative");
    return FiniteGroup{g, std::move(table), identity};
}

FiniteGroup klein_four() {
    // elements (0,0), (1,0), (0,1), (1,1) encoded as two-bit words; addition = XOR
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = a ^ b;
    return make_group(std::move(table), 0);
}

FiniteGroup cyclic_group(int order) {
    require(order >= 1 && order <= 24, "InvalidGroup", "order must be in 1..24");
    std::vector<std::vector<int>> table(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % order;
    return make_group(std::move(table), 0);
}

SetRep make_set_rep(FiniteGroup group, int n, std::vector<std::vector<int>> maps) {
    require(static_cast<int>(maps.size()) == group.order, "InvalidRep",
            "need one map per group element");
    for (const auto& m : maps) {
        require(static_cast<int>(m.size()) == n, "InvalidRep", "map must cover the whole set");
        for (int v : m) require(v >= 0 && v < n, "InvalidRep", "map value out of range");
    }
    return SetRep{std::move(group), n, std::move(maps)};
}

SetRep cayley_set_rep(const FiniteGroup& group) {
    std::vector<std::vector<int>> maps(static_cast<size_t>(group.order),
                                       std::vector<int>(static_cast<size_t>(group.order)));
    for (int g = 0; g < group.order; ++g)
        for (int x = 0; x < group.order; ++x)
            maps[static_cast<size_t>(g)][static_cast<size_t>(x)] = group.mul(g, x);
    return SetRep{group, group.order, std::move(maps)};
}

namespace {

bool is_identity_map(const std::vector<int>& m) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

}  // namespace

SetRepReport validate_set_rep(const SetRep& rep) {
    SetRepReport report;
    report.reflexive = is_identity_map(rep.maps[static_cast<size_t>(rep.group.identity)]);
    if (!report.reflexive)
        report.failures.push_back("reflexivity: the identity element does not act as the identity map");

    report.symmetric = true;
    for (int g = 0; g < rep.group.order && report.symmetric; ++g) {
        bool has_inverse_map = false;
        for (int h = 0; h < rep.group.order; ++h) {
            if (is_identity_map(compose(rep.maps[static_cast<size_t>(h)], rep.maps[static_cast<size_t>(g)])) &&
                is_identity_map(compose(rep.maps[static_cast<size_t>(g)], rep.maps[static_cast<size_t>(h)])))
                has_inverse_map = true;
        }
        if (!has_inverse_map) {
            report.symmetric = false;
            report.failures.push_back("symmetry: map of element " + std::to_string(g) +
                                      " has no inverse in the family");
        }
    }

    report.transitive = true;
    for (int g = 0; g < rep.group.order && report.transitive; ++g)
        for (int h = 0; h < rep.group.order && report.transitive; ++h) {
            auto comp = compose(rep.maps[static_cast<size_t>(h)], rep.maps[static_cast<size_t>(g)]);
            bool found = false;
            for (int x = 0; x < rep.group.order; ++x)
                if (rep.maps[static_cast<size_t>(x)] == comp) found = true;
            if (!found) {
                report.transitive = false;
                report.failures.push_back("transitivity: composite of maps " + std::to_string(h) + "," +
                                          std::to_string(g) + " is outside the family");
            }
        }

    report.homomorphic = true;
    for (int g = 0; g < rep.group.order && report.homomorphic; ++g)
        for (int h = 0; h < rep.group.order && report.homomorphic; ++h) {
            auto comp = compose(rep.maps[static_cast<size_t>(h)], rep.maps[static_cast<size_t>(g)]);
            if (comp != rep.maps[static_cast<size_t>(rep.group.mul(h, g))]) {
                report.homomorphic = false;
                report.failures.push_back("composition: R_" + std::to_string(h) + " after R_" +
                                          std::to_string(g) + " differs from the product map");
            }
        }
    return report;
}

Partition orbit_partition(const SetRep& rep) {
    return orbit_partition(rep, make_universe(rep.n));
}

Partition orbit_partition(const SetRep& rep, const Universe& universe) {
    require(universe.n == rep.n, "SizeMismatch", "universe and representation sizes differ");
    require(validate_set_rep(rep).ok(), "InvalidRep", "not a valid set representation");
    std::vector<int> parent(static_cast<size_t>(rep.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& m : rep.maps)
        for (int u = 0; u < rep.n; ++u) {
            int a = find(u), b = find(m[static_cast<size_t>(u)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    std::map<int, std::uint64_t> comps;
    for (int u = 0; u < rep.n; ++u) comps[find(u)] |= bit(u);
    std::vector<std::uint64_t> blocks;
    for (auto& [root, m] : comps) blocks.push_back(m);
    return make_partition_masks(universe, std::move(blocks));
}

bool is_commuting_attribute(const Attribute& f, const SetRep& rep) {
    require(f.universe.n == rep.n, "SizeMismatch", "attribute and representation sizes differ");
    for (const auto& m : rep.maps)
        for (int u = 0; u < rep.n; ++u)
            if (!(f.values[static_cast<size_t>(m[static_cast<size_t>(u)])] == f.values[static_cast<size_t>(u)]))
                return false;
    return true;
}

bool schur_set_check(const Attribute& f, const SetRep& rep) {
    require(is_commuting_attribute(f, rep), "NotCommuting",
            "attribute does not commute with the representation");
    Partition orbits = orbit_partition(rep);
    for (std::uint64_t b : orbits.blocks) {
        int first = std::countr_zero(b);
        std::uint64_t m = b;
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (!(f.values[static_cast<size_t>(u)] == f.values[static_cast<size_t>(first)])) return false;
        }
    }
    return true;
}

VectorRep cayley_vector_rep(const FiniteGroup& group) {
    std::vector<RatMat> mats;
    for (int g = 0; g < group.order; ++g) {
        RatMat m(group.order, group.order);
        for (int x = 0; x < group.order; ++x) m.at(group.mul(g, x), x) = 1;
        mats.push_back(std::move(m));
    }
    return VectorRep{group, group.order, std::move(mats)};
}

CMat to_cmat(const RatMat& m) {
    CMat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).get_d();
    return out;
}

InvolutionEigen involution_eigenspace_dsd(const RatMat& r) {
    require(r.rows() == r.cols(), "DimensionMismatch", "involution must be square");
    require(r * r == RatMat::identity(r.rows()), "NotInvolution", "matrix squared is not the identity");
    RatKernel k{};
    InvolutionEigen out;
    RatMat eye = RatMat::identity(r.rows());
    std::vector<Subspace<RatKernel>> parts;
    for (int sign : {+1, -1}) {
        RatMat proj = (sign > 0 ? eye + r : eye - r).scaled(Rat(1, 2));
        auto space = subspace_from_columns<RatKernel>(r.rows(), proj, k);
        if (space.dim() == 0) continue;
        parts.push_back(space);
        out.eigenvalues.push_back(sign);
    }
    out.dsd = make_dsd<RatKernel>(r.rows(), std::move(parts), k);
    return out;
}

InvolutionEigen involution_eigenspace_dsd_cx(const CMat& r, double tol, Dsd<CxKernel>& out_dsd) {
    require(r.rows() == r.cols(), "DimensionMismatch", "involution must be square");
    require(approx_equal(r * r, CMat::identity(r.rows()), tol), "NotInvolution",
            "matrix squared is not the identity");
    CxKernel k{tol};
    CMat eye = CMat::identity(r.rows());
    std::vector<Subspace<CxKernel>> parts;
    InvolutionEigen out;
    for (int sign : {+1, -1}) {
        CMat proj = (sign > 0 ? eye + r : eye - r).scaled(0.5);
        auto space = subspace_from_columns<CxKernel>(r.rows(), proj, k);
        if (space.dim() == 0) continue;
        parts.push_back(space);
        out.eigenvalues.push_back(sign);
    }
    out_dsd = make_dsd<CxKernel>(r.rows(), std::move(parts), k);
    return out;
}

std::vector<Irrep> irrep_decomposition(const VectorRep& rep, const std::vector<int>& generators) {
    for (int g : generators)
        require(g >= 0 && g < rep.group.order, "IndexOutOfRange", "generator index out of range");
    for (int g : generators) {
        const RatMat& m = rep.matrices[static_cast<size_t>(g)];
        require(m * m == RatMat::identity(rep.dim), "NotInvolution",
                "generator matrix is not an involution");
    }
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j) {
            const RatMat& a = rep.matrices[static_cast<size_t>(generators[i])];
            const RatMat& b = rep.matrices[static_cast<size_t>(generators[j])];
            require(a * b == b * a, "NonCommutingGenerators", "generator matrices must commute");
        }

    RatKernel k{};
    Dsd<RatKernel> acc{rep.dim, {whole_space<RatKernel>(rep.dim, k)}};
    for (int g : generators) {
        auto eigen = involution_eigenspace_dsd(rep.matrices[static_cast<size_t>(g)]);
        auto jl = join_like(acc, eigen.dsd, k);
        acc = make_dsd<RatKernel>(rep.dim, std::move(jl.parts), k);
    }

    std::vector<Irrep> out;
    for (const auto& part : acc.parts) {
        Irrep irrep;
        irrep.subspace = part;
        std::ostringstream ket;
        ket << "|";
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            const RatMat& m = rep.matrices[static_cast<size_t>(generators[gi])];
            RatMat image = m * part.basis;
            int label = 0;
            if (image == part.basis)
                label = 1;
            else if (image == part.basis.scaled(Rat(-1)))
                label = -1;
            require(label != 0, "InternalError", "join part is not a generator eigenspace");
            irrep.labels.push_back(label);
            if (gi) ket << ",";
            ket << label;
        }
        ket << ">";
        irrep.ket = ket.str();
        out.push_back(std::move(irrep));
    }
    return out;
}

bool verify_commuting_operator(const Observable& obs, const VectorRep& rep, double tol) {
    require(obs.dim == rep.dim, "DimensionMismatch", "observable and representation dimensions differ");
    CMat f = observable_matrix(obs);
    bool commutes = true;
    for (const RatMat& rm : rep.matrices) {
        CMat r = to_cmat(rm);
        if (!approx_equal(f * r, r * f, 10 * tol)) commutes = false;
    }
    // second route: in the eigenbasis of the observable, every representation
    // matrix must vanish on eigenvalue-distinct index pairs
    bool qudit_entries_vanish = true;
    for (const RatMat& rm : rep.matrices) {
        CMat r_eb = obs.eigenbasis.adjoint() * to_cmat(rm) * obs.eigenbasis;
        for (int i = 0; i < obs.dim; ++i)
            for (int j = 0; j < obs.dim; ++j)
                if (obs.values[static_cast<size_t>(i)] != obs.values[static_cast<size_t>(j)] &&
                    std::abs(r_eb.at(i, j)) > 10 * tol)
                    qudit_entries_vanish = false;
    }
    require(commutes == qudit_entries_vanish, "InternalError",
            "commutation routes disagree");
    return commutes;
}

}  // namespace pqm

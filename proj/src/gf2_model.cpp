#include "pqm/gf2_model.hpp"

#include <algorithm>
#include <bit>

namespace pqm {

Gf2Basis gf2_standard_basis(int n) {
    require(n >= 1 && n <= kMaxUniverse, "BadUniverse", "dimension must be in 1..64");
    Gf2Basis b{n, {}};
    for (int i = 0; i < n; ++i) b.vectors.push_back(bit(i));
    return b;
}

Gf2Basis hat_basis(int n) {
    require(n >= 1 && n <= kMaxUniverse, "BadUniverse", "dimension must be in 1..64");
    require(n % 2 == 0, "OddDimension",
            "complements of singletons are dependent when n is odd");
    Gf2Basis b{n, {}};
    for (int i = 0; i < n; ++i) b.vectors.push_back(full_mask(n) ^ bit(i));
    Gf2Mat m{n, b.vectors};
    require(gf2_rank(m) == n, "RankDeficient", "hat basis unexpectedly rank-deficient");
    return b;
}

Dsd<Gf2Kernel> dsd_from_gf2_attribute(const Gf2Basis& basis, const std::vector<AttrValue>& values) {
    require(values.size() == basis.vectors.size(), "BadAttribute",
            "need one value per basis vector");
    require(gf2_rank(Gf2Mat{basis.n, basis.vectors}) == basis.n, "RankDeficient",
            "basis vectors must be independent");
    Gf2Kernel k{};
    std::vector<AttrValue> seen;
    std::vector<std::vector<std::uint64_t>> groups;
    for (size_t i = 0; i < values.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), values[i]);
        if (it == seen.end()) {
            seen.push_back(values[i]);
            groups.push_back({basis.vectors[i]});
        } else {
            groups[static_cast<size_t>(it - seen.begin())].push_back(basis.vectors[i]);
        }
    }
    std::vector<Subspace<Gf2Kernel>> parts;
    for (auto& g : groups)
        parts.push_back(subspace_from_columns<Gf2Kernel>(basis.n, Gf2Mat{basis.n, std::move(g)}, k));
    return make_dsd<Gf2Kernel>(basis.n, std::move(parts), k);
}

Classification gf2_classify(const Dsd<Gf2Kernel>& d1, const Dsd<Gf2Kernel>& d2) {
    require(d1.ambient == d2.ambient, "AmbientMismatch", "decompositions live in different spaces");
    Gf2Kernel k{};
    auto jl = join_like(d1, d2, k);
    return classification_from_se(jl.se.dim(), d1.ambient);
}

Dsd<Gf2Kernel> partition_dsd_roundtrip(const Partition& p) {
    Gf2Kernel k{};
    std::vector<Subspace<Gf2Kernel>> parts;
    for (std::uint64_t b : p.blocks) {
        std::vector<std::uint64_t> singles;
        std::uint64_t m = b;
        while (m) {
            singles.push_back(m & (~m + 1));
            m &= m - 1;
        }
        parts.push_back(subspace_from_columns<Gf2Kernel>(p.universe.n, Gf2Mat{p.universe.n, std::move(singles)}, k));
    }
    return make_dsd<Gf2Kernel>(p.universe.n, std::move(parts), k);
}

Partition partition_from_gf2_dsd(const Universe& universe, const Dsd<Gf2Kernel>& d) {
    require(d.ambient == universe.n, "AmbientMismatch", "decomposition ambient differs from universe");
    std::vector<std::uint64_t> blocks;
    for (const auto& part : d.parts) {
        std::uint64_t support = 0;
        for (std::uint64_t v : part.basis.cols) support |= v;
        require(part.dim() == std::popcount(support), "NotPowersetPart",
                "part is not the full powerset of its support");
        blocks.push_back(support);
    }
    return make_partition_masks(universe, std::move(blocks));
}

std::uint64_t rebase(const Gf2Basis& basis, std::uint64_t subset) {
    bool ok = false;
    std::uint64_t coords = gf2_solve(Gf2Mat{basis.n, basis.vectors}, subset, ok);
    require(ok, "RankDeficient", "vector outside the span of the basis");
    return coords;
}

std::uint64_t unrebase(const Gf2Basis& basis, std::uint64_t coords) {
    return gf2_apply(Gf2Mat{basis.n, basis.vectors}, coords);
}

bool gf2_common_eigenvector_exists(const Dsd<Gf2Kernel>& d1, const Dsd<Gf2Kernel>& d2) {
    require(d1.ambient == d2.ambient, "AmbientMismatch", "decompositions live in different spaces");
    require(d1.ambient <= 20, "BadUniverse", "exhaustive vector enumeration limited to n <= 20");
    auto in_some_part = [](const Dsd<Gf2Kernel>& d, std::uint64_t v) {
        for (const auto& part : d.parts) {
            bool ok = false;
            gf2_solve(part.basis, v, ok);
            if (ok) return true;
        }
        return false;
    };
    const std::uint64_t limit = std::uint64_t{1} << d1.ambient;
    for (std::uint64_t v = 1; v < limit; ++v)
        if (in_some_part(d1, v) && in_some_part(d2, v)) return true;
    return false;
}

std::string gf2_subset_str(const Universe& universe, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    std::uint64_t m = mask;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (!first) out += ",";
        first = false;
        out += universe.labels[static_cast<size_t>(i)];
    }
    return out + "}";
}

}  // namespace pqm

#include "pqm/gf2.hpp"

#include <algorithm>
#include <bit>

namespace pqm {

Gf2Mat gf2_identity(int n) {
    Gf2Mat m{n, {}};
    for (int i = 0; i < n; ++i) m.cols.push_back(std::uint64_t{1} << i);
    return m;
}

Gf2Mat gf2_hcat(const Gf2Mat& a, const Gf2Mat& b) {
    if (a.cols.empty()) return b;
    if (b.cols.empty()) return a;
    require(a.n == b.n, "DimensionMismatch", "hcat row mismatch");
    Gf2Mat out = a;
    out.cols.insert(out.cols.end(), b.cols.begin(), b.cols.end());
    return out;
}

namespace {

// Column elimination tracking combinations: pairs (column, coefficient mask).
// Coefficient masks record which original columns were XORed together.
struct TrackedCols {
    std::vector<std::uint64_t> col;
    std::vector<std::uint64_t> coef;
};

TrackedCols eliminate_tracked(const Gf2Mat& m) {
    TrackedCols t;
    t.col = m.cols;
    t.coef.resize(m.cols.size());
    for (size_t i = 0; i < m.cols.size(); ++i) t.coef[i] = std::uint64_t{1} << i;
    size_t done = 0;
    for (int row = 0; row < m.n && done < t.col.size(); ++row) {
        const std::uint64_t rb = std::uint64_t{1} << row;
        size_t pivot = done;
        while (pivot < t.col.size() && !(t.col[pivot] & rb)) ++pivot;
        if (pivot == t.col.size()) continue;
        std::swap(t.col[done], t.col[pivot]);
        std::swap(t.coef[done], t.coef[pivot]);
        for (size_t j = 0; j < t.col.size(); ++j) {
            if (j != done && (t.col[j] & rb)) {
                t.col[j] ^= t.col[done];
                t.coef[j] ^= t.coef[done];
            }
        }
        ++done;
    }
    return t;
}

}  // namespace

int gf2_rank(const Gf2Mat& m) {
    TrackedCols t = eliminate_tracked(m);
    int r = 0;
    for (std::uint64_t c : t.col)
        if (c) ++r;
    return r;
}

Gf2Mat gf2_column_space_canonical(const Gf2Mat& m) {
    TrackedCols t = eliminate_tracked(m);
    Gf2Mat out{m.n, {}};
    for (std::uint64_t c : t.col)
        if (c) out.cols.push_back(c);
    std::sort(out.cols.begin(), out.cols.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return out;
}

Gf2Mat gf2_nullspace(const Gf2Mat& m) {
    TrackedCols t = eliminate_tracked(m);
    Gf2Mat out{m.col_count(), {}};
    for (size_t i = 0; i < t.col.size(); ++i)
        if (t.col[i] == 0) out.cols.push_back(t.coef[i]);
    return out;
}

std::uint64_t gf2_apply(const Gf2Mat& m, std::uint64_t x) {
    std::uint64_t out = 0;
    std::uint64_t rest = x;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        require(i < m.col_count(), "IndexOutOfRange", "coefficient index exceeds column count");
        out ^= m.cols[static_cast<size_t>(i)];
    }
    return out;
}

std::uint64_t gf2_solve(const Gf2Mat& m, std::uint64_t v, bool& ok) {
    // eliminate [m | v]; v lands in the span iff its tracked column vanishes
    Gf2Mat aug = m;
    aug.cols.push_back(v);
    TrackedCols t = eliminate_tracked(aug);
    const std::uint64_t vbit = std::uint64_t{1} << m.col_count();
    for (size_t i = 0; i < t.col.size(); ++i) {
        if (t.col[i] == 0 && (t.coef[i] & vbit)) {
            ok = true;
            return t.coef[i] & (vbit - 1);
        }
    }
    ok = (v == 0);
    return 0;
}

Gf2Mat gf2_mul(const Gf2Mat& a, const Gf2Mat& b) {
    require(a.col_count() == b.n, "DimensionMismatch", "matrix product shape mismatch");
    Gf2Mat out{a.n, {}};
    for (std::uint64_t bc : b.cols) out.cols.push_back(gf2_apply(a, bc));
    return out;
}

}  // namespace pqm

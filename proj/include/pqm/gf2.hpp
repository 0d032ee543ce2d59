#pragma once

#include <cstdint>
#include <vector>

#include "pqm/error.hpp"

namespace pqm {

/// Vector in GF(2)^n as a subset bitmask (characteristic vector); n <= 64.
/// Addition is XOR (symmetric difference of subsets).
struct Gf2Vec {
    int n = 0;
    std::uint64_t bits = 0;

    bool operator==(const Gf2Vec& other) const = default;
};

/// Matrix over GF(2) stored column-wise as bitmasks.
struct Gf2Mat {
    int n = 0;  // ambient dimension (rows)
    std::vector<std::uint64_t> cols;

    int rows() const { return n; }
    int col_count() const { return static_cast<int>(cols.size()); }
    bool operator==(const Gf2Mat& other) const = default;
};

Gf2Mat gf2_identity(int n);
Gf2Mat gf2_hcat(const Gf2Mat& a, const Gf2Mat& b);

int gf2_rank(const Gf2Mat& m);

/// Canonical reduced column echelon basis of the column space (zero columns
/// dropped, pivots sorted). Unique per subspace.
Gf2Mat gf2_column_space_canonical(const Gf2Mat& m);

/// Columns span { x in GF(2)^c : m x = 0 }, where x is a coefficient mask over
/// the columns of m (returned as a matrix with c "rows" packed into masks).
Gf2Mat gf2_nullspace(const Gf2Mat& m);

/// m * x with x a coefficient mask over the columns: XOR of the selected columns.
std::uint64_t gf2_apply(const Gf2Mat& m, std::uint64_t x);

/// Solves m x = v; `ok` is false when v is outside the column space.
std::uint64_t gf2_solve(const Gf2Mat& m, std::uint64_t v, bool& ok);

/// Matrix product over GF(2).
Gf2Mat gf2_mul(const Gf2Mat& a, const Gf2Mat& b);

}  // namespace pqm

#pragma once

#include <vector>

#include "pqm/rational.hpp"

namespace pqm {

/// Dense matrix over exact rationals. Row-major storage.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n);
    static RatMat diagonal(const std::vector<Rat>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& other) const;
    RatMat operator+(const RatMat& other) const;
    RatMat operator-(const RatMat& other) const;
    RatMat scaled(const Rat& s) const;
    bool operator==(const RatMat& other) const = default;

    bool is_zero() const;
    Rat trace() const;
    RatMat column(int c) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

RatMat hcat(const RatMat& a, const RatMat& b);

/// Reduced row echelon form in place; returns the rank.
int rref_in_place(RatMat& m);

int rank(const RatMat& m);

/// Columns form a basis of { x : m x = 0 }.
RatMat nullspace(const RatMat& m);

/// Reduced column echelon form with zero columns dropped: the canonical basis
/// of the column space (unique per subspace).
RatMat column_space_canonical(const RatMat& m);

/// Inverse of a square full-rank matrix; throws SingularMatrix otherwise.
RatMat inverse(const RatMat& m);

/// Solves m x = rhs exactly; `ok` is false when inconsistent.
RatMat solve(const RatMat& m, const RatMat& rhs, bool& ok);

}  // namespace pqm

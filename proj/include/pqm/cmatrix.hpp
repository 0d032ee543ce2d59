#pragma once

#include <complex>
#include <vector>

#include "pqm/error.hpp"

namespace pqm {

using Complex = std::complex<double>;

/// Default comparison tolerance for complex arithmetic; the PQM_TOL environment
/// variable overrides it (read once at startup).
double tolerance();

/// Dense complex matrix, row-major. Sized for desk-scale work (dims <= 16 and
/// their tensor squares).
class CMat {
  public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int n);
    static CMat diagonal(const std::vector<double>& d);
    static CMat column_vector(const std::vector<Complex>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    CMat adjoint() const;
    CMat operator*(const CMat& other) const;
    CMat operator+(const CMat& other) const;
    CMat operator-(const CMat& other) const;
    CMat scaled(Complex s) const;

    Complex trace() const;
    double max_abs() const;
    CMat column(int c) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

CMat hcat(const CMat& a, const CMat& b);

/// Kronecker product; basis vector u_j (x) u_k maps to flat index j*n + k.
CMat tensor(const CMat& a, const CMat& b);

bool approx_equal(const CMat& a, const CMat& b, double tol);

/// Modified Gram-Schmidt; columns with residual norm below `tol` are dropped.
CMat orthonormalize(const CMat& m, double tol);

/// Rank via elimination with complete pivoting and threshold `tol`.
int rank(const CMat& m, double tol);

/// Columns span { x : m x = 0 } (orthonormalized).
CMat nullspace(const CMat& m, double tol);

/// Self-adjointness and positive semidefiniteness (pivoted Cholesky) checks.
bool is_hermitian(const CMat& m, double tol);
bool is_positive_semidefinite(const CMat& m, double tol);

}  // namespace pqm

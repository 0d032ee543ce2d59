#include "pqm/cmatrix.hpp"

#include <cmath>
#include <cstdlib>

namespace pqm {

double tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("PQM_TOL")) {
            double v = std::atof(env);
            if (v > 0) return v;
        }
        return 1e-9;
    }();
    return tol;
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::diagonal(const std::vector<double>& d) {
    CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

CMat CMat::column_vector(const std::vector<Complex>& v) {
    CMat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

CMat CMat::adjoint() const {
    CMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

CMat CMat::operator*(const CMat& other) const {
    require(cols_ == other.rows_, "DimensionMismatch", "matrix product shape mismatch");
    CMat out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            Complex v = at(r, k);
            if (v == Complex{}) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

CMat CMat::operator+(const CMat& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "DimensionMismatch", "matrix sum shape mismatch");
    CMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

CMat CMat::operator-(const CMat& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "DimensionMismatch", "matrix diff shape mismatch");
    CMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

CMat CMat::scaled(Complex s) const {
    CMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

Complex CMat::trace() const {
    Complex t{};
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
}

CMat CMat::column(int c) const {
    CMat out(rows_, 1);
    for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
    return out;
}

CMat hcat(const CMat& a, const CMat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    require(a.rows() == b.rows(), "DimensionMismatch", "hcat row mismatch");
    CMat out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

CMat tensor(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Complex v = a.at(i, j);
            if (v == Complex{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = v * b.at(k, l);
        }
    return out;
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).max_abs() <= tol;
}

CMat orthonormalize(const CMat& m, double tol) {
    std::vector<std::vector<Complex>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Complex> v(static_cast<size_t>(m.rows()));
        for (int r = 0; r < m.rows(); ++r) v[static_cast<size_t>(r)] = m.at(r, c);
        for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once for stability
            for (const auto& q : basis) {
                Complex dot{};
                for (size_t i = 0; i < v.size(); ++i) dot += std::conj(q[i]) * v[i];
                for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * q[i];
            }
        }
        double norm = 0;
        for (const Complex& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm <= tol) continue;
        for (Complex& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    CMat out(m.rows(), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (int r = 0; r < m.rows(); ++r) out.at(r, static_cast<int>(c)) = basis[c][static_cast<size_t>(r)];
    return out;
}

namespace {

// Elimination with complete pivoting. Returns rank; optionally records the
// row operations into `record` (same row ops applied to an identity block).
int eliminate(CMat& a, double tol) {
    int rank = 0;
    const int rows = a.rows(), cols = a.cols();
    std::vector<bool> row_used(static_cast<size_t>(rows), false);
    std::vector<bool> col_used(static_cast<size_t>(cols), false);
    for (;;) {
        // largest remaining entry
        double best = 0;
        int pr = -1, pc = -1;
        for (int r = 0; r < rows; ++r) {
            if (row_used[static_cast<size_t>(r)]) continue;
            for (int c = 0; c < cols; ++c) {
                if (col_used[static_cast<size_t>(c)]) continue;
                double v = std::abs(a.at(r, c));
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best <= tol) break;
        row_used[static_cast<size_t>(pr)] = true;
        col_used[static_cast<size_t>(pc)] = true;
        ++rank;
        Complex pivot = a.at(pr, pc);
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            Complex f = a.at(r, pc) / pivot;
            if (f == Complex{}) continue;
            for (int c = 0; c < cols; ++c) a.at(r, c) -= f * a.at(pr, c);
        }
    }
    return rank;
}

}  // namespace

int rank(const CMat& m, double tol) {
    CMat copy = m;
    double scale = std::max(1.0, copy.max_abs());
    return eliminate(copy, tol * scale);
}

CMat nullspace(const CMat& m, double tol) {
    // eliminate [m; I] column-wise: append an identity below and do column ops,
    // implemented as row ops on the transpose
    CMat t = m.adjoint();  // cols x rows; row i of t corresponds to column i of m
    const int nc = m.cols();
    CMat aug(nc, m.rows() + nc);
    for (int r = 0; r < nc; ++r) {
        for (int c = 0; c < m.rows(); ++c) aug.at(r, c) = t.at(r, c);
        aug.at(r, m.rows() + r) = 1.0;
    }
    // eliminate on the first block only, with complete pivoting restricted there
    double scale = std::max(1.0, m.max_abs());
    const double thresh = tol * scale;
    std::vector<bool> row_used(static_cast<size_t>(nc), false);
    std::vector<bool> col_used(static_cast<size_t>(m.rows()), false);
    for (;;) {
        double best = 0;
        int pr = -1, pc = -1;
        for (int r = 0; r < nc; ++r) {
            if (row_used[static_cast<size_t>(r)]) continue;
            for (int c = 0; c < m.rows(); ++c) {
                if (col_used[static_cast<size_t>(c)]) continue;
                double v = std::abs(aug.at(r, c));
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best <= thresh) break;
        row_used[static_cast<size_t>(pr)] = true;
        col_used[static_cast<size_t>(pc)] = true;
        Complex pivot = aug.at(pr, pc);
        for (int r = 0; r < nc; ++r) {
            if (r == pr) continue;
            Complex f = aug.at(r, pc) / pivot;
            if (f == Complex{}) continue;
            for (int c = 0; c < aug.cols(); ++c) aug.at(r, c) -= f * aug.at(pr, c);
        }
    }
    // rows whose m-block vanished: their identity-block parts combine columns of m to zero
    CMat kernel(nc, 0);
    std::vector<std::vector<Complex>> cols;
    for (int r = 0; r < nc; ++r) {
        if (row_used[static_cast<size_t>(r)]) continue;
        std::vector<Complex> v(static_cast<size_t>(nc));
        for (int c = 0; c < nc; ++c) v[static_cast<size_t>(c)] = std::conj(aug.at(r, m.rows() + c));
        cols.push_back(std::move(v));
    }
    CMat out(nc, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < nc; ++r) out.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    return orthonormalize(out, tol);
}

bool is_hermitian(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return approx_equal(m, m.adjoint(), tol);
}

bool is_positive_semidefinite(const CMat& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    CMat a = m;
    const int n = a.rows();
    double scale = std::max(1.0, a.max_abs());
    std::vector<bool> done(static_cast<size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        // pivoted Cholesky: largest remaining diagonal entry
        int p = -1;
        double best = -1;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            double d = a.at(i, i).real();
            if (d > best) {
                best = d;
                p = i;
            }
        }
        if (p < 0) break;
        if (best < -tol * scale) return false;
        if (best <= tol * scale) {
            // remaining diagonal is ~0; PSD requires the remaining block to vanish
            for (int i = 0; i < n; ++i) {
                if (done[static_cast<size_t>(i)]) continue;
                for (int j = 0; j < n; ++j) {
                    if (done[static_cast<size_t>(j)]) continue;
                    if (std::abs(a.at(i, j)) > 10 * tol * scale) return false;
                }
            }
            return true;
        }
        done[static_cast<size_t>(p)] = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            Complex f = a.at(i, p) / a.at(p, p);
            for (int j = 0; j < n; ++j) {
                if (done[static_cast<size_t>(j)]) continue;
                a.at(i, j) -= f * a.at(p, j);
            }
        }
    }
    return true;
}

}  // namespace pqm

#include "pqm/ratmat.hpp"

#include <utility>

namespace pqm {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RatMat RatMat::transpose() const {
    RatMat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

RatMat RatMat::operator*(const RatMat& other) const {
    require(cols_ == other.rows_, "DimensionMismatch", "matrix product shape mismatch");
    RatMat out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

RatMat RatMat::operator+(const RatMat& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "DimensionMismatch", "matrix sum shape mismatch");
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

RatMat RatMat::operator-(const RatMat& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "DimensionMismatch", "matrix diff shape mismatch");
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

RatMat RatMat::scaled(const Rat& s) const {
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

bool RatMat::is_zero() const {
    for (const Rat& v : data_)
        if (v != 0) return false;
    return true;
}

Rat RatMat::trace() const {
    Rat t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

RatMat RatMat::column(int c) const {
    RatMat out(rows_, 1);
    for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
    return out;
}

RatMat hcat(const RatMat& a, const RatMat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    require(a.rows() == b.rows(), "DimensionMismatch", "hcat row mismatch");
    RatMat out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

int rref_in_place(RatMat& m) {
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int pivot = -1;
        while (lead < m.cols()) {
            for (int i = r; i < m.rows(); ++i) {
                if (m.at(i, lead) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot >= 0) break;
            ++lead;
        }
        if (pivot < 0) return r;
        if (pivot != r)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(r, c));
        Rat inv = 1 / m.at(r, lead);
        for (int c = lead; c < m.cols(); ++c) m.at(r, c) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead) == 0) continue;
            Rat f = m.at(i, lead);
            for (int c = lead; c < m.cols(); ++c) m.at(i, c) -= f * m.at(r, c);
        }
        ++lead;
    }
    // rank = number of non-zero rows
    int rk = 0;
    for (int r = 0; r < m.rows(); ++r) {
        bool nonzero = false;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rk;
    }
    return rk;
}

int rank(const RatMat& m) {
    RatMat copy = m;
    return rref_in_place(copy);
}

RatMat nullspace(const RatMat& m) {
    RatMat r = m;
    int rk = rref_in_place(r);
    // pivot column of each non-zero row
    std::vector<int> pivot_col(static_cast<size_t>(rk), -1);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int row = 0; row < rk; ++row) {
        for (int c = 0; c < m.cols(); ++c)
            if (r.at(row, c) != 0) {
                pivot_col[static_cast<size_t>(row)] = c;
                is_pivot[static_cast<size_t>(c)] = true;
                break;
            }
    }
    RatMat out(m.cols(), m.cols() - rk);
    int idx = 0;
    for (int free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[static_cast<size_t>(free_c)]) continue;
        out.at(free_c, idx) = 1;
        for (int row = 0; row < rk; ++row)
            out.at(pivot_col[static_cast<size_t>(row)], idx) = -r.at(row, free_c);
        ++idx;
    }
    return out;
}

RatMat column_space_canonical(const RatMat& m) {
    RatMat t = m.transpose();
    int rk = rref_in_place(t);
    RatMat out(m.rows(), rk);
    for (int r = 0; r < rk; ++r)
        for (int c = 0; c < m.rows(); ++c) out.at(c, r) = t.at(r, c);
    return out;
}

RatMat inverse(const RatMat& m) {
    require(m.rows() == m.cols(), "DimensionMismatch", "inverse of non-square matrix");
    RatMat aug = hcat(m, RatMat::identity(m.rows()));
    int rk = rref_in_place(aug);
    require(rk == m.rows(), "SingularMatrix", "matrix not invertible");
    RatMat out(m.rows(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.rows(); ++c) out.at(r, c) = aug.at(r, m.rows() + c);
    return out;
}

RatMat solve(const RatMat& m, const RatMat& rhs, bool& ok) {
    require(m.rows() == rhs.rows(), "DimensionMismatch", "solve shape mismatch");
    RatMat aug = hcat(m, rhs);
    rref_in_place(aug);
    RatMat x(m.cols(), rhs.cols());
    ok = true;
    int row = 0;
    std::vector<int> pivot_of_col(static_cast<size_t>(m.cols()), -1);
    for (int r = 0; r < aug.rows(); ++r) {
        int c = 0;
        while (c < m.cols() && aug.at(r, c) == 0) ++c;
        if (c < m.cols()) {
            pivot_of_col[static_cast<size_t>(c)] = r;
            row = r + 1;
        } else {
            // zero coefficient row: any non-zero rhs entry marks inconsistency
            for (int k = 0; k < rhs.cols(); ++k)
                if (aug.at(r, m.cols() + k) != 0) ok = false;
        }
    }
    (void)row;
    if (!ok) return x;
    for (int c = 0; c < m.cols(); ++c) {
        int pr = pivot_of_col[static_cast<size_t>(c)];
        if (pr < 0) continue;  // free variable: leave at zero
        for (int k = 0; k < rhs.cols(); ++k) x.at(c, k) = aug.at(pr, m.cols() + k);
    }
    return x;
}

}  // namespace pqm

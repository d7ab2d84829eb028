#include "lcl/int_matrix.hpp"

#include "lcl/error.hpp"

#include <sstream>

namespace lcl {

IntMatrix::IntMatrix(int rows, int cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) fail("BadShape", "ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) fail("BadShape", "product of incompatible matrices");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                std::int64_t p;
                if (__builtin_mul_overflow(a, o(k, j), &p) || __builtin_add_overflow(r(i, j), p, &r(i, j)))
                    fail("Overflow", "matrix product");
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("BadShape", "sum of incompatible matrices");
    IntMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::scaled(std::int64_t k) const {
    IntMatrix r(*this);
    for (auto& x : r.data_) x *= k;
    return r;
}

IntMatrix IntMatrix::col_block(int c0, int c1) const {
    IntMatrix r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
    return r;
}

bool IntMatrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

DetInv det_inv(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail("BadShape", "det_inv needs a square matrix");
    const int n = a.rows();
    DetInv out;
    if (n == 0) {
        out.det = 1;
        return out;
    }
    // Fraction-free Gauss-Jordan on [A | I]. After the last pivot the left
    // block is p*I and the right block is p*A^{-1}, with det A = sign*p.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) {
            out.det = 0;
            return out;
        }
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    out.det = sign * prev;
    out.num.assign(n, std::vector<BigInt>(n));
    // Rows whose pivot was fixed early have not been rescaled to the final
    // pivot yet; every diagonal entry equals prev after the last step.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.num[i][j] = sign * m[i][n + j];
    return out;
}

BigInt determinant(const IntMatrix& a) { return det_inv(a).det; }

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail("Overflow", "integer does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

IntMatrix adjugate(const IntMatrix& a, BigInt* det_out) {
    DetInv di = det_inv(a);
    if (!di.invertible()) fail("Singular", "matrix is singular");
    if (det_out) *det_out = di.det;
    IntMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = to_i64(di.num[i][j]);
    return r;
}

} // namespace lcl

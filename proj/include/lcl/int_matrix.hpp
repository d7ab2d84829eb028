#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lcl {

using BigInt = boost::multiprecision::cpp_int;

// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, std::int64_t fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(std::int64_t k) const;
    // Columns [c0, c1).
    IntMatrix col_block(int c0, int c1) const;

    bool operator==(const IntMatrix& o) const = default;

    bool is_skew() const;
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

// Result of fraction-free elimination: A^{-1} = num / det when det != 0.
struct DetInv {
    BigInt det;
    std::vector<std::vector<BigInt>> num; // adjugate, i.e. det * A^{-1}; empty when singular
    bool invertible() const { return det != 0; }
};

// Bareiss elimination on [A | I]. Never throws for singular input.
DetInv det_inv(const IntMatrix& a);
BigInt determinant(const IntMatrix& a);

// det * A^{-1} as an int64 matrix; throws "Singular" or "Overflow".
IntMatrix adjugate(const IntMatrix& a, BigInt* det_out = nullptr);

std::int64_t to_i64(const BigInt& v);

} // namespace lcl

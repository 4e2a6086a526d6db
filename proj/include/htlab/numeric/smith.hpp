#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace htlab {

/// Dense rectangular matrix of arbitrary-precision integers, row major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const mpz_class& factor);
    void add_col(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t r);

    /// Determinant by fraction-free elimination; square matrices only.
    mpz_class determinant() const;

    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
    IntMatrix S;  // diagonal, d_1 | d_2 | ..., nonnegative
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix V;  // unimodular, cols x cols

    /// The diagonal entries, min(rows, cols) of them.
    std::vector<mpz_class> diagonal() const;
};

/// U * M * V = S. Throws std::invalid_argument on an empty matrix.
SmithForm smith_normal_form(const IntMatrix& M);

}  // namespace htlab

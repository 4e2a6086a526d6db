#include "htlab/numeric/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace htlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class sign = 1, prev = 1;
    // Bareiss fraction-free elimination.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).get_str();
    }
    out << "]";
    return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<mpz_class> SmithForm::diagonal() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

namespace {

class Reducer {
  public:
    explicit Reducer(const IntMatrix& m)
        : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

    SmithForm run() {
        const std::size_t n = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < n; ++t) {
            if (!place_smallest_pivot(t)) break;
            while (true) {
                if (!clear_column(t) || !clear_row(t)) continue;
                std::size_t bad_row = 0;
                if (find_indivisible(t, bad_row)) {
                    row_add(t, bad_row, 1);
                    continue;
                }
                break;
            }
            if (a_(t, t) < 0) {
                a_.negate_row(t);
                u_.negate_row(t);
            }
        }
        return {std::move(a_), std::move(u_), std::move(v_)};
    }

  private:
    void row_swap(std::size_t i, std::size_t j) {
        a_.swap_rows(i, j);
        u_.swap_rows(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        a_.swap_cols(i, j);
        v_.swap_cols(i, j);
    }
    void row_add(std::size_t dst, std::size_t src, const mpz_class& f) {
        a_.add_row(dst, src, f);
        u_.add_row(dst, src, f);
    }
    void col_add(std::size_t dst, std::size_t src, const mpz_class& f) {
        a_.add_col(dst, src, f);
        v_.add_col(dst, src, f);
    }

    bool place_smallest_pivot(std::size_t t) {
        bool found = false;
        std::size_t br = t, bc = t;
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) {
                if (a_(r, c) == 0) continue;
                if (!found || abs(a_(r, c)) < abs(a_(br, bc))) {
                    found = true;
                    br = r;
                    bc = c;
                }
            }
        if (!found) return false;
        row_swap(t, br);
        col_swap(t, bc);
        return true;
    }

    // Eliminates below the pivot; returns false if a smaller remainder had to
    // become the new pivot.
    bool clear_column(std::size_t t) {
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
            if (a_(r, t) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
            row_add(r, t, -q);
            if (a_(r, t) != 0) {
                row_swap(t, r);
                return false;
            }
        }
        return true;
    }

    bool clear_row(std::size_t t) {
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
            if (a_(t, c) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
            col_add(c, t, -q);
            if (a_(t, c) != 0) {
                col_swap(t, c);
                return false;
            }
        }
        return true;
    }

    bool find_indivisible(std::size_t t, std::size_t& row) const {
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
            for (std::size_t c = t + 1; c < a_.cols(); ++c)
                if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
                    row = r;
                    return true;
                }
        return false;
    }

    IntMatrix a_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    if (M.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    return Reducer(M).run();
}

}  // namespace htlab

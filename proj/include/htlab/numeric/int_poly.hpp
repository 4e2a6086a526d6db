#pragma once

#include "htlab/numeric/real.hpp"

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace htlab {

/// Raised by the textual parsers; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Dense polynomial with integer coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector and has degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// Parses expressions like "x^2 - x - 1", "3*x^5 - 2", "-x + 4".
    static IntPoly parse(std::string_view text);
    /// x^n - c  (c may be any integer).
    static IntPoly binomial(unsigned n, const mpz_class& lead, const mpz_class& constant);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
    const mpz_class& leading() const { return coeffs_.back(); }

    IntPoly derivative() const;
    /// gcd of the coefficients, taken nonnegative.
    mpz_class content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const;

    /// Rational roots found through the rational root theorem.
    std::vector<mpq_class> rational_roots() const;

    mpz_class eval(const mpz_class& x) const;
    Complex eval(const Complex& z) const;
    /// Horner evaluation of p and p' together.
    void eval_with_derivative(const Complex& z, Complex& value, Complex& deriv) const;

    std::string to_string() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);

}  // namespace htlab

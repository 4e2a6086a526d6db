#pragma once

// RAII wrappers over MPFR: a real number with an explicit binary precision,
// and a complex number built from two of them. Binary operations produce a
// result at the larger of the operand precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace htlab {

using Precision = mpfr_prec_t;

constexpr int kDefaultDigits = 64;

/// Working precision in bits for a request of `digits` decimal digits,
/// including a fixed guard of 16 bits.
Precision bits_for_digits(int digits);

class Real {
  public:
    explicit Real(Precision bits = bits_for_digits(kDefaultDigits));
    Real(long value, Precision bits);
    Real(double value, Precision bits);
    Real(const mpz_class& value, Precision bits);
    Real(const mpq_class& value, Precision bits);
    Real(const std::string& decimal, Precision bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    Precision precision() const { return mpfr_get_prec(value_); }
    /// Rounds to a new precision in place.
    void set_precision(Precision bits);

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (0 for zero).
    long exponent2() const;

    /// Rounds to the nearest integer.
    mpz_class round_to_integer() const;

    /// `significant` significant decimal digits in %g style.
    std::string to_string(int significant) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

  private:
    mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, const Real& y);
Real gamma(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pi(Precision bits);
Real log_of(const mpz_class& n, Precision bits);
/// 2^e at the given precision.
Real pow2(long e, Precision bits);

/// Upward-rounded helpers for error radii. Radii are always nonnegative.
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real div_up(const Real& a, const Real& b);
/// An upper bound on |x| * 2^(1 - precision(x)), i.e. one ulp-ish rounding
/// slop for a value of magnitude |x|.
Real ulp_bound(const Real& x, Precision radius_bits = 64);

class Complex {
  public:
    explicit Complex(Precision bits = bits_for_digits(kDefaultDigits));
    Complex(Real re, Real im);

    Precision precision() const { return re_.precision(); }
    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);

  private:
    Real re_;
    Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator-(const Complex& a);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex conj(const Complex& z);
/// exp(z) for complex z.
Complex exp(const Complex& z);
/// e^{i*theta}
Complex expi(const Real& theta);

}  // namespace htlab

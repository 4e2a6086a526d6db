#pragma once

// Midpoint-radius ("ball") numbers. The radius is an upper bound on the
// distance between the midpoint and the exact value; every operation here
// grows it conservatively, including the rounding of the midpoint.

#include "htlab/numeric/real.hpp"

#include <stdexcept>
#include <string>

namespace htlab {

/// Raised when a numeric routine cannot reach the requested accuracy.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BigFloat {
  public:
    explicit BigFloat(Precision bits = bits_for_digits(kDefaultDigits));
    explicit BigFloat(Real mid);
    BigFloat(Real mid, Real radius);

    static BigFloat exact(long v, Precision bits) { return BigFloat(Real(v, bits)); }
    /// Rational value rounded to `bits`, with the rounding accounted for.
    static BigFloat from_rational(const mpq_class& q, Precision bits);

    const Real& mid() const { return mid_; }
    const Real& radius() const { return radius_; }
    Precision precision() const { return mid_.precision(); }

    Real lower() const;
    Real upper() const;
    bool contains_zero() const;
    /// True when the ball lies strictly on one side of zero.
    bool is_positive() const;
    bool is_negative() const;

    /// Widens the radius by `extra`.
    void inflate(const Real& extra);

    /// "mid ± radius" with `significant` digits for the midpoint.
    std::string to_string(int significant = 15) const;

  private:
    Real mid_;
    Real radius_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

/// log of a ball bounded away from zero; throws PrecisionError otherwise.
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
/// x^y for x > 0 with y an exact real.
BigFloat pow(const BigFloat& x, const Real& y);
BigFloat sqrt(const BigFloat& x);
/// max of two balls: midpoint of the max, radius covering both.
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat abs(const BigFloat& a);

enum class Ordering { less, equal, greater, inconclusive };

std::string to_string(Ordering o);

/// Certified comparison: decides only when the balls are disjoint.
/// Two exact (zero-radius) equal midpoints compare equal.
Ordering compare(const BigFloat& a, const BigFloat& b);

/// Complex disk: |z - mid| <= radius.
struct ComplexBall {
    Complex mid;
    Real radius;

    ComplexBall() = default;
    ComplexBall(Complex m, Real r);
    explicit ComplexBall(Complex m);

    Precision precision() const { return mid.precision(); }
    /// Upper bound on |z| over the disk.
    Real mag_upper() const;
    /// Lower bound on |z| over the disk (may be negative when it contains 0).
    Real mag_lower() const;
    std::string to_string(int significant = 15) const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const BigFloat& b);

/// exp of a complex ball.
ComplexBall exp(const ComplexBall& z);
/// |z| as a real ball.
BigFloat abs(const ComplexBall& z);

}  // namespace htlab

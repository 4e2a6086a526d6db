#pragma once

#include "htlab/numeric/ball.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <variant>

namespace htlab {

/// Finite rational combination sum r_p log p over distinct primes p.
/// Coefficients are kept reduced and nonzero.
using LogTerms = std::map<mpz_class, mpq_class>;

/// A height, either exactly as a LogTerms combination or as a ball.
///
/// Exact values compare symbolically: two combinations are equal iff their
/// coefficients coincide (logs of distinct primes are linearly independent
/// over Q), and otherwise the sign of the difference is found by evaluating
/// at escalating precision, which terminates because the difference is
/// nonzero.
class HeightValue {
  public:
    /// Zero, exact.
    HeightValue() = default;
    explicit HeightValue(LogTerms terms);
    explicit HeightValue(BigFloat value);

    /// r * log p for a prime p.
    static HeightValue log_prime(const mpz_class& p, const mpq_class& r = 1);
    /// log n for a positive integer n below 2^64 (factored by trial division).
    static HeightValue log_integer(std::uint64_t n);

    bool is_exact() const { return std::holds_alternative<LogTerms>(value_); }
    const LogTerms& terms() const { return std::get<LogTerms>(value_); }
    const BigFloat& numeric() const { return std::get<BigFloat>(value_); }
    bool is_zero() const;

    /// Numeric enclosure; exact values are evaluated at `digits` digits.
    BigFloat ball(int digits = kDefaultDigits) const;
    double approx() const { return ball(20).mid().to_double(); }

    /// Multiplication by a rational keeps exactness.
    HeightValue scaled(const mpq_class& r) const;
    /// Multiplication by a real ball; the result is numeric.
    HeightValue scaled(const BigFloat& r, int digits = kDefaultDigits) const;

    /// Symbolic form such as "2*log(2) + log(3)" or "1/5*log(3)"; numeric
    /// values print their midpoint.
    std::string symbolic() const;
    /// Symbolic form followed by " ≈ value" (exact), or the numeric value.
    std::string to_string(int significant = 10) const;

    friend HeightValue operator+(const HeightValue& a, const HeightValue& b);
    friend HeightValue operator-(const HeightValue& a, const HeightValue& b);

  private:
    std::variant<LogTerms, BigFloat> value_;
};

/// Sign of an exact combination, decided exactly (returns 0 only for the
/// empty combination).
int sign(const LogTerms& terms);

/// Certified comparison. Exact-vs-exact never returns inconclusive; any
/// comparison involving a numeric value returns inconclusive when the
/// enclosures overlap.
Ordering height_value_compare(const HeightValue& x, const HeightValue& y);

/// Parses a symbolic height such as "1/4*log(17)", "log(2) - 1/3*log(5)",
/// "0", or a decimal number (numeric, zero radius). Log arguments must be
/// positive integers below 2^64 or primes.
HeightValue parse_height_value(const std::string& text);

}  // namespace htlab

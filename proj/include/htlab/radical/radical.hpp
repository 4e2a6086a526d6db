#pragma once

#include "htlab/heights/height_value.hpp"
#include "htlab/numeric/int_poly.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace htlab {

/// The positive real number prod p^(e_p), e_p rational, over primes p.
/// The exponent map is canonical: no zero exponents, reduced fractions,
/// primes ascending; the empty map is the value 1. Every archimedean
/// absolute value of such a number equals its positive real value, and at a
/// place over l the absolute value is l^(-e_l), so heights and degrees are
/// exactly computable.
class RadicalScalar {
  public:
    using Exponents = std::map<mpz_class, mpq_class>;

    RadicalScalar() = default;
    /// Keys must be primes (checked); zero exponents are dropped.
    explicit RadicalScalar(const Exponents& exponents);

    /// A positive rational, factored by trial division up to 10^6 with the
    /// cofactor required to be 1 or prime.
    static RadicalScalar from_rational(const mpq_class& r);
    /// base^exponent for a positive rational base.
    static RadicalScalar power(const mpq_class& base, const mpq_class& exponent);
    /// p^e for a prime p (primality checked).
    static RadicalScalar prime_power(const mpz_class& p, const mpq_class& e);

    const Exponents& exponents() const { return exponents_; }
    bool is_one() const { return exponents_.empty(); }
    /// True iff every exponent is an integer.
    bool is_rational() const;
    /// The rational value; requires is_rational().
    mpq_class rational_value() const;

    /// a^r for rational r.
    RadicalScalar pow(const mpq_class& r) const;
    RadicalScalar inverse() const { return pow(mpq_class(-1)); }

    /// log of the value as an exact combination.
    HeightValue log_value() const;
    Real value(Precision bits) const;

    /// Primitive minimal polynomial q x^d - p where d = radical_degree and
    /// a^d = p/q.
    IntPoly minimal_polynomial() const;

    /// e.g. "2^(1/5)*3^(-1/5)", "12" for 2^2*3, "1".
    std::string to_string() const;

    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b);
    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.exponents_ == b.exponents_; }
    friend bool operator<(const RadicalScalar& a, const RadicalScalar& b) { return a.exponents_ < b.exponents_; }

  private:
    Exponents exponents_;
};

/// Parses "p/q ^ k/d [* ...]" factors, e.g. "2/3 ^ 1/5", "7/3^1/2 * 5",
/// "12", "1". Exponent defaults to 1.
RadicalScalar parse_radical(const std::string& text);

/// Least m >= 1 with a^m rational: the lcm of the exponent denominators.
/// For a positive real radical this is also [Q(a):Q].
mpz_class radical_degree(const RadicalScalar& a);

/// [Q(a_1, ..., a_n) : Q] for positive real radicals. Computed as the order
/// of the subgroup of (Q/Z)^S generated by the exponent vectors: with L the
/// lcm of all denominators and d_k the Smith invariants of the integer
/// matrix L * (exponent vectors), the order is prod L / gcd(d_k, L).
/// Empty input gives 1.
mpz_class compositum_degree(const std::vector<RadicalScalar>& as);

/// Exact Weil height: sum_{e_l < 0} (-e_l) log l + max(0, sum e_p log p).
HeightValue radical_height(const RadicalScalar& a);

/// Exact sign of log(a / b), i.e. the archimedean order of a and b.
int compare_values(const RadicalScalar& a, const RadicalScalar& b);

}  // namespace htlab

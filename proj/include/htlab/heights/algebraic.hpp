#pragma once

#include "htlab/heights/height_value.hpp"
#include "htlab/numeric/int_poly.hpp"
#include "htlab/numeric/roots.hpp"

namespace htlab {

/// What is known about irreducibility of a user-supplied minimal polynomial.
/// Full factorization is not attempted; `unverified` means the cheap filters
/// passed but the polynomial is trusted rather than proven irreducible.
enum class Irreducibility { linear, eisenstein, no_rational_root, unverified, reducible };

std::string to_string(Irreducibility i);

/// Cheap irreducibility filters: degree one, a rational root (reducible),
/// Eisenstein's criterion at primes below 10^4 dividing the constant term,
/// also applied to p(x + 1) and p(x - 1), and for degree 2 or 3 the absence
/// of rational roots.
Irreducibility irreducibility_filter(const IntPoly& p);

/// An algebraic number given by its primitive integer minimal polynomial
/// (positive leading coefficient) and an isolating ball around one root.
class AlgebraicNumber {
  public:
    /// Selects root number `root_index` in the order returned by poly_roots.
    /// Throws std::invalid_argument for degree < 1 or an out-of-range index.
    static AlgebraicNumber from_minpoly(const IntPoly& minpoly, std::size_t root_index = 0,
                                        int digits = kDefaultDigits);
    static AlgebraicNumber rational(const mpq_class& r);

    const IntPoly& minpoly() const { return minpoly_; }
    const ComplexBall& approx() const { return approx_; }
    int degree() const { return minpoly_.degree(); }
    Irreducibility irreducibility() const { return irreducibility_; }

  private:
    AlgebraicNumber(IntPoly minpoly, ComplexBall approx, Irreducibility irr)
        : minpoly_(std::move(minpoly)), approx_(std::move(approx)), irreducibility_(irr) {}

    IntPoly minpoly_;
    ComplexBall approx_;
    Irreducibility irreducibility_;
};

/// Absolute logarithmic Weil height through the Mahler measure:
/// (log|a_n| + sum log max(1, |root|)) / deg. Depends only on the minimal
/// polynomial, not on the selected root.
HeightValue weil_height(const AlgebraicNumber& a, int digits = kDefaultDigits);

/// deg(a)^gamma * h(a).
HeightValue weighted_height(const AlgebraicNumber& a, double gamma, int digits = kDefaultDigits);

}  // namespace htlab

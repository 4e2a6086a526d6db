#pragma once

#include "htlab/radical/radical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace htlab {

/// A coordinate: zero, or +/- a positive real radical. The sign does not
/// affect any absolute value, so heights and degrees only see the magnitude.
struct RadicalCoord {
    int sign = 0;  // -1, 0 or +1
    RadicalScalar magnitude;

    static RadicalCoord zero() { return {}; }
    static RadicalCoord positive(RadicalScalar m) { return {1, std::move(m)}; }
    static RadicalCoord of(int s, RadicalScalar m) { return {s, std::move(m)}; }

    bool is_zero() const { return sign == 0; }
    std::string to_string() const;

    friend bool operator==(const RadicalCoord& a, const RadicalCoord& b) {
        return a.sign == b.sign && (a.sign == 0 || a.magnitude == b.magnitude);
    }
};

/// [x_0 : ... : x_N], N >= 1, not all zero.
class RadicalPoint {
  public:
    /// Throws std::invalid_argument when fewer than two coordinates are
    /// given or all are zero.
    explicit RadicalPoint(std::vector<RadicalCoord> coords);

    std::size_t dimension() const { return coords_.size() - 1; }
    const std::vector<RadicalCoord>& coords() const { return coords_; }

    /// Index of the first nonzero coordinate.
    std::size_t first_nonzero() const;
    /// Divides every coordinate by the first nonzero one.
    RadicalPoint normalized() const;
    /// Multiplies every coordinate by lambda.
    RadicalPoint scaled(const RadicalCoord& lambda) const;

    std::string to_string() const;

  private:
    std::vector<RadicalCoord> coords_;
};

/// Parses "[1 : 2^(1/2) : -1/3]" style points; each entry is 0, or an
/// optionally negated radical in parse_radical syntax.
RadicalPoint parse_point(const std::string& text);

/// Exact projective Weil height: for each prime l the term
/// max_i(-e_{l,i}) log l, plus log max_i |x_i| at the archimedean places.
HeightValue projective_height(const RadicalPoint& P);

/// L^2 variant: same finite part, archimedean part log (sum |x_i|^2)^(1/2),
/// evaluated as projective_height + (1/2) log sum (|x_i| / max|x_j|)^2.
HeightValue projective_height_l2(const RadicalPoint& P, int digits = kDefaultDigits);

/// Affine coordinates after normalizing by the first nonzero coordinate,
/// i.e. a_1 ... a_N of [1 : a_1 : ... : a_N] (the normalized coordinate is
/// dropped).
std::vector<RadicalCoord> affine_coordinates(const RadicalPoint& P);

/// [Q(a_1, ..., a_N) : Q] for the affine coordinates.
mpz_class point_degree(const RadicalPoint& P);

/// deg(P)^gamma * h(P). Exact when gamma is an integer, numeric otherwise.
HeightValue weighted_projective_height(const RadicalPoint& P, double gamma, int digits = kDefaultDigits);

/// deg^gamma * h for already computed pieces; exact for integral gamma.
HeightValue weight_height(const HeightValue& h, const mpz_class& degree, double gamma, int digits = kDefaultDigits);

}  // namespace htlab

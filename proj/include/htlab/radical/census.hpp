#pragma once

#include "htlab/radical/projective.hpp"

#include <cstdint>
#include <vector>

namespace htlab {

struct CensusOptions {
    /// Rational prefactors u/v use 1 <= u, v <= coefficient_bound.
    unsigned coefficient_bound = 2;
    /// Generator exponents range over [-exponent_bound, exponent_bound].
    unsigned exponent_bound = 1;
    int digits = 40;
};

struct CensusEntry {
    RadicalPoint point;
    mpz_class degree;
    HeightValue height;    // h(P)
    HeightValue weighted;  // deg^gamma h(P)
};

struct Census {
    std::vector<CensusEntry> below;      // certified weighted < threshold
    std::vector<CensusEntry> undecided;  // enclosures straddle the threshold
    std::uint64_t examined = 0;
    bool truncated = false;
};

/// The coordinate values used by the census, in enumeration order: 0, then
/// +-(u/v) * prod g_j^(k_j) with exponent vectors lexicographic, then u/v
/// (by u, then v), then sign; repeated values are dropped.
std::vector<RadicalCoord> census_values(const std::vector<RadicalScalar>& generators, const CensusOptions& opts);

/// Points of P^N whose first nonzero coordinate is 1 and whose remaining
/// coordinates come from census_values, ordered by the position of the
/// leading 1 and then lexicographically in the value order. Reports those
/// with deg^gamma h < threshold. Stops after `budget` points (truncated).
Census projective_northcott_experiment(const std::vector<RadicalScalar>& generators, std::size_t N, double gamma,
                                       const HeightValue& threshold, std::uint64_t budget,
                                       const CensusOptions& opts = {});

}  // namespace htlab

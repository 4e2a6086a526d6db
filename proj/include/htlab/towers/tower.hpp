#pragma once

#include "htlab/heights/height_value.hpp"
#include "htlab/radical/radical.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace htlab {

/// Raised when a tower cannot be built within the prime magnitude cap.
class TowerError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TowerLevel {
    mpz_class p;
    mpz_class q;
    unsigned d = 2;

    /// (p/q)^(1/d)
    RadicalScalar generator() const;
    friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

/// Truncated tower Q((p_1/q_1)^(1/d_1), ..., (p_n/q_n)^(1/d_n)) with the
/// target (gamma, C).
struct TowerSpec {
    double gamma = -1.0;
    double C = 1.0;
    std::vector<TowerLevel> levels;

    /// Throws std::invalid_argument unless p_i != q_i are primes, all primes
    /// are pairwise distinct, d_i >= 2 and gamma < 0.
    void validate() const;
    /// d_1 * ... * d_i for 1-based i.
    mpz_class degree_product(std::size_t i) const;
};

/// C - log(d_i) / (2 (d_1...d_i)^gamma (d_i - 1)) for 1-based level i.
BigFloat remark_bound(const TowerSpec& t, std::size_t i, int digits = 40);

struct TowerOptions {
    /// Largest admissible bit length of a selected p_i.
    unsigned long magnitude_cap_bits = 4096;
};

/// Builds a tower level by level: q_i is the smallest prime not used so far,
/// p_i the first unused prime with log p_i >= C d_i (d_1...d_i)^(-gamma)
/// (and p_i > q_i), after skipping `seed` such primes. Every monomial with a
/// nonzero exponent of g_i mod d_i then has h_gamma >= C. Throws TowerError
/// when p_i would exceed the magnitude cap.
TowerSpec build_tower(double gamma, double C, std::size_t num_levels, const std::vector<unsigned>& degree_schedule,
                      unsigned long seed = 0, const TowerOptions& opts = {});

struct SampledElement {
    RadicalScalar element;
    std::vector<long> exponents;  // k_1 .. k_i
    HeightValue hgamma;
    bool pass = false;
};

struct LevelCertificate {
    std::size_t level = 0;  // 1-based
    BigFloat remark_bound;
    HeightValue generator_hgamma;
    /// generator_hgamma >= C, certified
    bool generator_clears_C = false;
    std::vector<SampledElement> samples;
    std::size_t failures = 0;
};

/// Checks monomials prod_{j<=i} g_j^(k_j) with k_i != 0 mod d_i against the
/// remark bound, in order of increasing max|k_j| and lexicographically
/// within a shell, until `sample_budget` elements are checked.
LevelCertificate certify_level(const TowerSpec& t, std::size_t i, std::size_t sample_budget);

/// Certificates for every level, levels processed concurrently.
std::vector<LevelCertificate> certify_tower(const TowerSpec& t, std::size_t sample_budget, unsigned workers = 1);

/// True iff the prime multisets of the two towers differ, which is
/// sufficient for the generated fields to differ.
bool distinct_fields_check(const TowerSpec& a, const TowerSpec& b);

/// {"gamma": g, "C": c, "levels": [{"p": "17", "q": "2", "d": 2}, ...]}
std::string tower_to_json(const TowerSpec& t, int indent = 2);
/// Inverse of tower_to_json; throws std::invalid_argument on malformed input.
TowerSpec tower_from_json(const std::string& text);

}  // namespace htlab

#pragma once

#include "htlab/radical/projective.hpp"

#include <vector>

namespace htlab {

enum class ChainVerdict { holds, degenerate, violated, inconclusive };

std::string to_string(ChainVerdict v);

/// The three quantities of the inequality chain for P = [1 : a_1 : ... : a_N]
///   [K:Q]^g h(P) >= prod_I [Q(a_i):Q]^g * (prod_I h(a_i))^(1/#I)
///                >= (prod_I h_{N g}(a_i))^(1/#I)
/// with K = Q(a_1, ..., a_N) and I the indices with h(a_i) != 0.
struct ChainReport {
    HeightValue lhs;
    HeightValue middle;
    HeightValue rhs;
    std::vector<std::size_t> index_set;  // 1-based affine indices
    ChainVerdict verdict = ChainVerdict::degenerate;
    /// "numeric" when both steps were decided by disjoint enclosures,
    /// "exact" when a tie forced the factor-by-factor argument.
    std::string method;
};

/// Checks the chain for a point with N + 1 coordinates (renormalized by its
/// first nonzero coordinate). Throws std::invalid_argument when gamma >= 0
/// or N does not match the point.
ChainReport lemma_chain_check(const RadicalPoint& P, double gamma, std::size_t N, int digits = 40);

}  // namespace htlab

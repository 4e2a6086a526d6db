#pragma once

#include "htlab/numeric/ball.hpp"
#include "htlab/numeric/int_poly.hpp"

#include <vector>

namespace htlab {

struct RootOptions {
    int max_escalations = 10;
    int max_iterations_per_pass = 400;
};

/// All complex roots of `p` with multiplicity, as balls whose radii are at
/// most 10^-precision_digits. Roots come out sorted by (real, imaginary)
/// midpoint. Disks are pairwise disjoint whenever the roots are distinct.
///
/// Uses Aberth iteration seeded from the Newton polygon of the coefficient
/// magnitudes, followed by Gerschgorin-type inclusion radii
/// n * |p(z_i)| / |a_n prod_{j != i} (z_i - z_j)| that account for the
/// rounding of the evaluation. The working precision doubles until the radii
/// meet the target; throws PrecisionError after `max_escalations` doublings.
std::vector<ComplexBall> poly_roots(const IntPoly& p, int precision_digits, const RootOptions& options = {});

/// log of the Mahler measure, log|a_n| + sum log max(1, |root|), as a ball.
BigFloat log_mahler_measure(const IntPoly& p, int precision_digits);

}  // namespace htlab

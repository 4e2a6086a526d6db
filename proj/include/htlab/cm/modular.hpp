#pragma once

// Modular forms at a point of the upper half plane, evaluated in ball
// arithmetic with explicit series-tail bounds.

#include "htlab/cm/forms.hpp"
#include "htlab/numeric/ball.hpp"

#include <array>

namespace htlab {

/// tau = (-b + i sqrt|D|) / (2a) for a form of discriminant D.
ComplexBall cm_point(const ReducedForm& f, long D, Precision bits);

/// Moves tau into the standard fundamental domain by translations and
/// tau -> -1/tau. Throws PrecisionError when Im tau is not certified > 0.
ComplexBall reduce_to_fundamental_domain(const ComplexBall& tau);

/// log |Delta(tau)|, Delta = q prod (1 - q^n)^24, from the pentagonal
/// series for prod (1 - q^n). No reduction is applied.
BigFloat log_abs_delta(const ComplexBall& tau, Precision bits);

/// s(tau) = -(1/12) (log|Delta(tau)| + 6 log Im tau), invariant under
/// SL2(Z). Evaluated at tau as given, without reduction.
BigFloat faltings_local_term(const ComplexBall& tau, int digits);

/// Delta(tau) as a complex ball (no reduction).
ComplexBall delta(const ComplexBall& tau, Precision bits);

/// j(tau) = E4^3 / Delta after reduction, with absolute radius at most
/// 10^-digits; escalates the working precision (up to 10 doublings) and
/// throws PrecisionError beyond that.
ComplexBall j_invariant(const ComplexBall& tau, int digits);

/// theta_j(0; tau) = sum_{m = j mod 4} exp(pi i tau m^2 / 4), j = 0..3,
/// summed in order of |m| (so theta_1 and theta_3 agree term by term).
std::array<ComplexBall, 4> theta_null_point(const ComplexBall& tau, int digits);

/// log(||Theta||_2 / max_j |theta_j|), the archimedean term of the L2
/// height of the theta null point normalized by its largest coordinate.
BigFloat theta_log_norm(const std::array<ComplexBall, 4>& theta);

}  // namespace htlab

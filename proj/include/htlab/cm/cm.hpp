#pragma once

#include "htlab/cm/forms.hpp"
#include "htlab/cm/modular.hpp"
#include "htlab/heights/height_value.hpp"
#include "htlab/numeric/int_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace htlab {

/// -(1/2) log 2: with s(tau) = -(1/12) log(|Delta| Im(tau)^6), the average of
/// s over the CM orbit plus this constant is the stable Faltings height
/// normalized by the metric i^(g^2)/(2 pi)^(2g) (g = 1) on the Hodge
/// bundle. Deligne's normalization is this value minus (1/2) log(2 pi).
double default_faltings_offset();

/// j(tau_f) for the CM point of a form, with absolute radius <= 10^-digits.
ComplexBall cm_j_value(const ReducedForm& f, long D, int digits);

struct ClassPolyResult {
    IntPoly poly;
    /// max over coefficients of |computed value - nearest integer|
    double max_residual = 0;
    int digits_used = 0;
};

/// prod_f (x - j(tau_f)) rounded to integers. Every coefficient must be
/// within 0.1 of an integer (and its enclosure must contain only that
/// integer); otherwise the precision doubles, up to 10 times, then
/// PrecisionError.
ClassPolyResult hilbert_class_poly_detailed(long D, int digits = kDefaultDigits);
IntPoly hilbert_class_poly(long D, int digits = kDefaultDigits);

/// (1/h) sum_f log max(1, |j(tau_f)|), the Weil height of j_D.
BigFloat j_height(long D, int digits = kDefaultDigits);

/// (1/h) sum_f s(tau_f) + offset.
BigFloat faltings_height_cm(long D, int digits = kDefaultDigits, double offset = default_faltings_offset());

/// (1/h) sum_f log(||Theta(tau_f)||_2 / max_j |theta_j(tau_f)|): an
/// archimedean estimate only; finite places are not included.
BigFloat theta_height_estimate(long D, int digits = kDefaultDigits);

/// |max(1, h_theta) - (1/2) max(1, h_F)|
BigFloat theta_faltings_residual(const BigFloat& h_theta, const BigFloat& h_F);

struct CMRecord {
    long D = 0;
    long class_number = 0;
    std::optional<IntPoly> class_poly;
    BigFloat j_height;
    BigFloat faltings_height;
    BigFloat theta_height_est;
    BigFloat residual;
    BigFloat ratio;  // faltings_height / class_number
    int digits = kDefaultDigits;
    std::string error;  // empty on success
};

struct RecordOptions {
    int digits = kDefaultDigits;
    double offset = default_faltings_offset();
    bool with_class_poly = false;
};

/// All quantities for one discriminant. Precision failures are caught and
/// stored in `error`.
CMRecord cm_record(long D, const RecordOptions& opts = {});

struct ScanOptions {
    RecordOptions record;
    unsigned workers = 1;
    bool include_nonfundamental = false;
};

/// One record per discriminant with 3 <= |D| <= D_max, sorted by |D|.
/// Discriminants are distributed over `workers` threads; the output does not
/// depend on the worker count.
std::vector<CMRecord> cm_scan(long D_max, const ScanOptions& opts = {});

struct ThetaFaltingsReport {
    /// smallest c with r(D) <= c log(min(h_theta, h_F) + 2) on the used rows
    double fitted_c = 0;
    long worst_D = 0;
    bool finite = true;
    /// rows where log(min + 2) <= 0 or the record failed
    std::vector<long> excluded;
};

ThetaFaltingsReport verify_theta_faltings(const std::vector<CMRecord>& records);

struct StabilityReport {
    bool stable = true;
    long worst_D = 0;
    /// max over D of |r_1 - r_2| - (rad_1 + rad_2); negative when stable
    double worst_margin = 0;
};

/// Compares residuals of two scans of the same range at different precision.
StabilityReport residual_stability(const std::vector<CMRecord>& a, const std::vector<CMRecord>& b);

struct DecayRow {
    long D = 0;
    long class_number = 0;
    double faltings_height = 0;
    double ratio = 0;
    double envelope = 0;  // max of ratio over |D'| >= |D|
};

struct DecayReport {
    std::vector<DecayRow> rows;
    bool nonincreasing = true;
    /// env(X) at X = 100 and at the largest scanned |D|
    double env_100 = 0;
    double env_last = 0;
    long last_D = 0;
    /// env_last < env_100, certified with the enclosure radii
    bool strictly_smaller = false;
};

DecayReport verify_decay(const std::vector<CMRecord>& records);

struct FinitenessCensus {
    std::vector<long> discriminants;  // class number 1 and ratio <= C'
    std::vector<long> class_number_one;
};

FinitenessCensus finiteness_demo(double C_prime, const std::vector<CMRecord>& records);

}  // namespace htlab

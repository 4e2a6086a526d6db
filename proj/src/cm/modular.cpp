#include "htlab/cm/modular.hpp"

#include <cmath>

namespace htlab {

namespace {

constexpr Precision kRad = 64;

Real up_mul(const Real& a, const Real& b) { return mul_up(a, b); }

ComplexBall at_precision(const ComplexBall& z, Precision bits) {
    ComplexBall out = z;
    if (bits < z.precision()) {
        Real slop = add_up(ulp_bound(z.mid.re()), ulp_bound(z.mid.im()));
        out.mid.re().set_precision(bits);
        out.mid.im().set_precision(bits);
        out.radius = add_up(add_up(out.radius, slop), add_up(ulp_bound(out.mid.re()), ulp_bound(out.mid.im())));
    } else {
        out.mid.re().set_precision(bits);
        out.mid.im().set_precision(bits);
    }
    return out;
}

BigFloat pi_ball(Precision bits) {
    Real p = pi(bits);
    return BigFloat(p, ulp_bound(p));
}

// Certified lower bound on Im tau.
Real im_lower(const ComplexBall& tau) {
    Real y(kRad);
    mpfr_sub(y.get(), tau.mid.im().get(), tau.radius.get(), MPFR_RNDD);
    if (y.sign() <= 0) throw PrecisionError("Im tau is not certified positive");
    return y;
}

// Upper bound on exp(-c * y_low) for c > 0.
Real exp_neg_up(const Real& c, const Real& y_low) {
    Real t(kRad);
    mpfr_mul(t.get(), c.get(), y_low.get(), MPFR_RNDD);
    mpfr_neg(t.get(), t.get(), MPFR_RNDU);
    mpfr_exp(t.get(), t.get(), MPFR_RNDU);
    return t;
}

Real real_up(double v) { return Real(v, kRad); }

// 1 / (1 - x) rounded up, for 0 <= x < 1.
Real inv_one_minus_up(const Real& x) {
    Real d(kRad);
    mpfr_ui_sub(d.get(), 1, x.get(), MPFR_RNDD);
    if (d.sign() <= 0) throw PrecisionError("series ratio not below one");
    Real r(kRad);
    mpfr_ui_div(r.get(), 1, d.get(), MPFR_RNDU);
    return r;
}

// x^e rounded up.
Real pow_up(const Real& x, double e) {
    Real r(kRad);
    Real ee(e, kRad);
    mpfr_pow(r.get(), x.get(), ee.get(), MPFR_RNDU);
    return r;
}

ComplexBall constant(long v, Precision bits) { return ComplexBall(Complex(Real(v, bits), Real(0L, bits))); }

// exp(c * i * tau) for a real ball c.
ComplexBall exp_i_times(const BigFloat& c, const ComplexBall& tau) {
    Precision bits = tau.precision();
    ComplexBall i_c(Complex(Real(0L, bits), c.mid()), c.radius());
    return exp(i_c * tau);
}

// prod (1 - q^n) via sum_n (-1)^n q^(n(3n-1)/2), q = e^(2 pi i tau).
ComplexBall pentagonal(const ComplexBall& tau, Precision bits) {
    Real y = im_lower(tau);
    BigFloat two_pi = pi_ball(bits) * BigFloat::exact(2, bits);
    const double cut = (static_cast<double>(bits) + 20) * std::log(2.0);
    const double yd = y.to_double();
    const double twopi = 2 * M_PI;

    ComplexBall sum = constant(1, bits);
    long n = 1;
    for (;; ++n) {
        double e1 = n * (3.0 * n - 1) / 2;
        if (e1 * twopi * yd > cut) break;
        double e2 = n * (3.0 * n + 1) / 2;
        ComplexBall t1 = exp_i_times(two_pi * BigFloat::exact(static_cast<long>(e1), bits), tau);
        ComplexBall t2 = exp_i_times(two_pi * BigFloat::exact(static_cast<long>(e2), bits), tau);
        ComplexBall pair = t1 + t2;
        sum = (n % 2 == 1) ? sum - pair : sum + pair;
    }
    // tail: sum_{m >= n} |q|^e1(m) + |q|^e2(m) <= 2 |q|^e1(n) / (1 - |q|)
    Real x = exp_neg_up(Real(twopi * (1 + 1e-12), kRad), y);
    Real tail = up_mul(up_mul(Real(2L, kRad), pow_up(x, n * (3.0 * n - 1) / 2)), inv_one_minus_up(x));
    sum.radius = add_up(sum.radius, tail);
    return sum;
}

}  // namespace

ComplexBall cm_point(const ReducedForm& f, long D, Precision bits) {
    Real two_a(2 * f.a, bits);
    Real s = sqrt(Real(-D, bits));
    Real re = Real(-f.b, bits) / two_a;
    Real im = s / two_a;
    // re is exact up to one rounding, im up to two
    Real r = add_up(ulp_bound(re), mul_up(ulp_bound(im), Real(3L, kRad)));
    return ComplexBall(Complex(re, im), r);
}

ComplexBall reduce_to_fundamental_domain(const ComplexBall& tau) {
    im_lower(tau);
    ComplexBall z = tau;
    const Precision bits = tau.precision();
    for (int iter = 0; iter < 10000; ++iter) {
        mpz_class n = z.mid.re().round_to_integer();
        if (n != 0) z = z - ComplexBall(Complex(Real(n, bits), Real(0L, bits)));
        Real n2 = norm(z.mid);
        if (n2 < Real(1L, bits) - pow2(-static_cast<long>(bits) / 2, bits)) {
            z = constant(-1, bits) / z;
            continue;
        }
        return z;
    }
    throw PrecisionError("fundamental domain reduction did not terminate");
}

BigFloat log_abs_delta(const ComplexBall& tau0, Precision bits) {
    ComplexBall tau = at_precision(tau0, bits);
    BigFloat y(tau.mid.im(), tau.radius);
    BigFloat two_pi = pi_ball(bits) * BigFloat::exact(2, bits);
    BigFloat lp = log(abs(pentagonal(tau, bits)));
    return BigFloat::exact(24, bits) * lp - two_pi * y;
}

BigFloat faltings_local_term(const ComplexBall& tau0, int digits) {
    Precision bits = bits_for_digits(digits) + 16;
    ComplexBall tau = at_precision(tau0, bits);
    BigFloat y(tau.mid.im(), tau.radius);
    BigFloat inner = log_abs_delta(tau, bits) + BigFloat::exact(6, bits) * log(y);
    return -(inner / BigFloat::exact(12, bits));
}

ComplexBall delta(const ComplexBall& tau0, Precision bits) {
    ComplexBall tau = at_precision(tau0, bits);
    BigFloat two_pi = pi_ball(bits) * BigFloat::exact(2, bits);
    ComplexBall q = exp_i_times(two_pi, tau);
    ComplexBall p = pentagonal(tau, bits);
    ComplexBall p2 = p * p, p4 = p2 * p2, p8 = p4 * p4, p16 = p8 * p8;
    return q * (p16 * p8);
}

namespace {

ComplexBall j_at(const ComplexBall& tau_reduced, Precision bits) {
    ComplexBall tau = at_precision(tau_reduced, bits);
    Real y = im_lower(tau);
    BigFloat two_pi = pi_ball(bits) * BigFloat::exact(2, bits);
    ComplexBall q = exp_i_times(two_pi, tau);

    // E4 = 1 + 240 sum n^3 q^n / (1 - q^n)
    const double cut = (static_cast<double>(bits) + 20) * std::log(2.0);
    const double yd = y.to_double();
    ComplexBall sum = constant(0, bits);
    ComplexBall qn = q;
    ComplexBall one = constant(1, bits);
    long n = 1;
    for (;; ++n) {
        double size = 2 * M_PI * yd * n - 3 * std::log(static_cast<double>(n));
        if (size > cut) break;
        ComplexBall term = (qn / (one - qn)) * BigFloat::exact(n * n * n, bits);
        sum = sum + term;
        qn = qn * q;
    }
    // tail sum_{m >= n} m^3 x^m / (1 - x^m) <= n^3 x^n / ((1 - x)(1 - rho))
    Real x = exp_neg_up(Real(2 * M_PI * (1 + 1e-12), kRad), y);
    double ratio = std::pow((n + 1.0) / n, 3);
    Real rho = up_mul(x, real_up(ratio * (1 + 1e-12)));
    Real tail = up_mul(up_mul(Real(static_cast<double>(n) * n * n, kRad), pow_up(x, static_cast<double>(n))),
                       up_mul(inv_one_minus_up(x), inv_one_minus_up(rho)));
    sum.radius = add_up(sum.radius, tail);
    ComplexBall e4 = one + sum * BigFloat::exact(240, bits);
    ComplexBall e4_3 = e4 * e4 * e4;
    return e4_3 / delta(tau, bits);
}

}  // namespace

ComplexBall j_invariant(const ComplexBall& tau, int digits) {
    ComplexBall z = reduce_to_fundamental_domain(tau);
    double log2_j = 2 * M_PI * z.mid.im().to_double() / std::log(2.0);
    Precision bits = bits_for_digits(digits) + static_cast<Precision>(log2_j) + 32;
    Real target(10.0, kRad);
    target = pow(target, Real(static_cast<long>(-digits), kRad));
    for (int attempt = 0; attempt <= 10; ++attempt) {
        // the reduced point must carry enough bits too
        ComplexBall zz = at_precision(reduce_to_fundamental_domain(at_precision(tau, std::max(bits, tau.precision()))), bits);
        ComplexBall j = j_at(zz, bits);
        if (j.radius <= target) return j;
        bits *= 2;
    }
    throw PrecisionError("j_invariant: radius above 10^-" + std::to_string(digits) + " after 10 escalations");
}

std::array<ComplexBall, 4> theta_null_point(const ComplexBall& tau0, int digits) {
    Precision bits = bits_for_digits(digits) + 16;
    ComplexBall tau = at_precision(tau0, bits);
    Real y = im_lower(tau);
    const double yd = y.to_double();
    const double cut = (static_cast<double>(bits) + 20) * std::log(2.0);
    BigFloat quarter_pi = pi_ball(bits) / BigFloat::exact(4, bits);

    std::array<ComplexBall, 4> theta;
    for (auto& t : theta) t = constant(0, bits);
    long T = 0;
    for (long t = 0;; ++t) {
        if (M_PI * yd * t * t / 4 > cut) {
            T = t;
            break;
        }
        ComplexBall term = exp_i_times(quarter_pi * BigFloat::exact(t * t, bits), tau);
        for (int j = 0; j < 4; ++j) {
            // m = t and m = -t, each when congruent to j mod 4
            if (((t % 4) + 4) % 4 == j) theta[j] = theta[j] + term;
            if (t != 0 && (((-t) % 4) + 4) % 4 == j) theta[j] = theta[j] + term;
        }
    }
    // tail: sum_{|m| >= T} e^(-pi y m^2 / 4) <= 2 x^(T^2) / (1 - x^(2T+1)), x = e^(-pi y / 4)
    Real x = exp_neg_up(Real(M_PI / 4 * (1 + 1e-12), kRad), y);
    Real tail = up_mul(up_mul(Real(2L, kRad), pow_up(x, static_cast<double>(T) * T)),
                       inv_one_minus_up(pow_up(x, 2.0 * T + 1)));
    for (auto& t : theta) t.radius = add_up(t.radius, tail);
    return theta;
}

BigFloat theta_log_norm(const std::array<ComplexBall, 4>& theta) {
    Precision bits = theta[0].precision();
    std::array<BigFloat, 4> a{abs(theta[0]), abs(theta[1]), abs(theta[2]), abs(theta[3])};
    BigFloat mx = a[0];
    for (int j = 1; j < 4; ++j) mx = max(mx, a[j]);
    BigFloat s(bits);
    for (const auto& v : a) {
        BigFloat r = v / mx;
        s = s + r * r;
    }
    return log(s) / BigFloat::exact(2, bits);
}

}  // namespace htlab

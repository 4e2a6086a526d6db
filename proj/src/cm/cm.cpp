#include "htlab/cm/cm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace htlab {

double default_faltings_offset() { return -0.5 * std::log(2.0); }

namespace {

constexpr Precision kRad = 64;

// log2 |j(tau_f)| is about 2 pi Im(tau) / log 2.
double log2_j_estimate(const ReducedForm& f, long D) {
    double y = std::sqrt(static_cast<double>(-D)) / (2.0 * f.a);
    return 2 * M_PI * y / std::log(2.0);
}

BigFloat log_max1(const BigFloat& v) {
    Precision bits = v.precision();
    Real one(1L, bits);
    if (v.upper() <= one) return BigFloat(Real(0L, bits));
    if (v.lower() >= one) return log(v);
    Real top = log(v.upper());
    Real half = top / 2L;
    return BigFloat(half, add_up(half, ulp_bound(top)));
}

BigFloat average(const std::vector<BigFloat>& xs, Precision bits) {
    BigFloat s(bits);
    for (const auto& x : xs) s = s + x;
    return s / BigFloat::exact(static_cast<long>(xs.size()), bits);
}

}  // namespace

ComplexBall cm_j_value(const ReducedForm& f, long D, int digits) {
    Precision bits = bits_for_digits(digits) + static_cast<Precision>(log2_j_estimate(f, D)) + 64;
    return j_invariant(cm_point(f, D, bits), digits);
}

ClassPolyResult hilbert_class_poly_detailed(long D, int digits) {
    auto forms = reduced_forms(D);
    double est = 0;
    for (const auto& f : forms) est += std::max(0.0, log2_j_estimate(f, D)) * std::log10(2.0);
    int wd = std::max(digits, static_cast<int>(est) + 15);
    for (int attempt = 0; attempt <= 10; ++attempt, wd *= 2) {
        Precision bits = bits_for_digits(wd) + static_cast<Precision>(est * 3.33) + 64;
        std::vector<ComplexBall> poly{ComplexBall(Complex(Real(1L, bits), Real(0L, bits)))};
        for (const auto& f : forms) {
            ComplexBall j = cm_j_value(f, D, wd);
            // multiply by (x - j)
            std::vector<ComplexBall> next(poly.size() + 1, ComplexBall(Complex(Real(0L, bits), Real(0L, bits))));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = next[k + 1] + poly[k];
                next[k] = next[k] - poly[k] * j;
            }
            poly = std::move(next);
        }
        ClassPolyResult out;
        out.digits_used = wd;
        std::vector<mpz_class> coeffs;
        bool ok = true;
        for (const auto& c : poly) {
            mpz_class n = c.mid.re().round_to_integer();
            Real res = abs(c.mid.re() - Real(n, c.precision()));
            Real im = abs(c.mid.im());
            double r = res.to_double();
            out.max_residual = std::max(out.max_residual, r);
            Real half(0.5, kRad);
            if (!(r < 0.1) || !(im.to_double() < 0.1) || !(add_up(res, c.radius) < half) ||
                !(add_up(im, c.radius) < half)) {
                ok = false;
                break;
            }
            coeffs.push_back(n);
        }
        if (ok) {
            out.poly = IntPoly(coeffs);
            return out;
        }
    }
    throw PrecisionError("hilbert_class_poly(" + std::to_string(D) + "): coefficients not integral after 10 escalations");
}

IntPoly hilbert_class_poly(long D, int digits) { return hilbert_class_poly_detailed(D, digits).poly; }

BigFloat j_height(long D, int digits) {
    Precision bits = bits_for_digits(digits);
    std::vector<BigFloat> terms;
    for (const auto& f : reduced_forms(D)) terms.push_back(log_max1(abs(cm_j_value(f, D, digits))));
    return average(terms, bits);
}

BigFloat faltings_height_cm(long D, int digits, double offset) {
    Precision bits = bits_for_digits(digits) + 16;
    std::vector<BigFloat> terms;
    for (const auto& f : reduced_forms(D)) terms.push_back(faltings_local_term(cm_point(f, D, bits + 32), digits));
    return average(terms, bits) + BigFloat(Real(offset, bits));
}

BigFloat theta_height_estimate(long D, int digits) {
    Precision bits = bits_for_digits(digits) + 16;
    std::vector<BigFloat> terms;
    for (const auto& f : reduced_forms(D))
        terms.push_back(theta_log_norm(theta_null_point(cm_point(f, D, bits + 32), digits)));
    return average(terms, bits);
}

BigFloat theta_faltings_residual(const BigFloat& h_theta, const BigFloat& h_F) {
    Precision bits = h_F.precision();
    BigFloat one = BigFloat::exact(1, bits);
    BigFloat d = max(one, h_theta) - max(one, h_F) / BigFloat::exact(2, bits);
    return abs(d);
}

CMRecord cm_record(long D, const RecordOptions& opts) {
    CMRecord r;
    r.D = D;
    r.digits = opts.digits;
    try {
        r.class_number = class_number(D);
        if (opts.with_class_poly) r.class_poly = hilbert_class_poly(D, opts.digits);
        r.j_height = j_height(D, opts.digits);
        r.faltings_height = faltings_height_cm(D, opts.digits, opts.offset);
        r.theta_height_est = theta_height_estimate(D, opts.digits);
        r.residual = theta_faltings_residual(r.theta_height_est, r.faltings_height);
        Precision bits = r.faltings_height.precision();
        r.ratio = r.faltings_height / BigFloat::exact(r.class_number, bits);
    } catch (const PrecisionError& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<CMRecord> cm_scan(long D_max, const ScanOptions& opts) {
    std::vector<long> ds;
    for (long n = 3; n <= D_max; ++n) {
        long D = -n;
        if (n % 4 != 0 && n % 4 != 3) continue;
        if (opts.include_nonfundamental || is_fundamental(D)) ds.push_back(D);
    }
    std::vector<CMRecord> out(ds.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < ds.size(); i = next++) out[i] = cm_record(ds[i], opts.record);
    };
    unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

ThetaFaltingsReport verify_theta_faltings(const std::vector<CMRecord>& records) {
    ThetaFaltingsReport rep;
    for (const auto& r : records) {
        if (!r.error.empty()) {
            rep.excluded.push_back(r.D);
            continue;
        }
        double m = std::min(r.theta_height_est.mid().to_double(), r.faltings_height.mid().to_double());
        double denom = std::log(m + 2);
        if (!(denom > 0)) {
            rep.excluded.push_back(r.D);
            continue;
        }
        double c = r.residual.upper().to_double() / denom;
        if (c > rep.fitted_c || rep.worst_D == 0) {
            rep.fitted_c = std::max(rep.fitted_c, c);
            rep.worst_D = r.D;
        }
    }
    rep.finite = std::isfinite(rep.fitted_c);
    return rep;
}

StabilityReport residual_stability(const std::vector<CMRecord>& a, const std::vector<CMRecord>& b) {
    StabilityReport rep;
    rep.worst_margin = -INFINITY;
    std::size_t n = std::min(a.size(), b.size());
    if (a.size() != b.size()) rep.stable = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].D != b[i].D || !a[i].error.empty() || !b[i].error.empty()) {
            rep.stable = false;
            rep.worst_D = a[i].D;
            continue;
        }
        Real diff = abs(a[i].residual.mid() - b[i].residual.mid());
        Real allowed = add_up(a[i].residual.radius(), b[i].residual.radius());
        double margin = (diff - allowed).to_double();
        if (margin > rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_D = a[i].D;
        }
        if (diff > allowed) rep.stable = false;
    }
    return rep;
}

DecayReport verify_decay(const std::vector<CMRecord>& records) {
    DecayReport rep;
    std::vector<const CMRecord*> ok;
    for (const auto& r : records)
        if (r.error.empty()) ok.push_back(&r);
    rep.rows.resize(ok.size());
    double env = -INFINITY;
    double env_upper = -INFINITY;
    double env_100_lower = -INFINITY;
    double env_last_upper = 0;
    for (std::size_t k = ok.size(); k-- > 0;) {
        const CMRecord& r = *ok[k];
        DecayRow& row = rep.rows[k];
        row.D = r.D;
        row.class_number = r.class_number;
        row.faltings_height = r.faltings_height.mid().to_double();
        row.ratio = r.ratio.mid().to_double();
        env = std::max(env, row.ratio);
        env_upper = std::max(env_upper, r.ratio.upper().to_double());
        row.envelope = env;
        if (k == ok.size() - 1) {
            env_last_upper = env_upper;
            rep.env_last = env;
            rep.last_D = r.D;
        }
        if (-r.D >= 100) {
            rep.env_100 = env;
            env_100_lower = std::max(env_100_lower, r.ratio.lower().to_double());
        }
    }
    for (std::size_t k = 1; k < rep.rows.size(); ++k)
        if (rep.rows[k].envelope > rep.rows[k - 1].envelope) rep.nonincreasing = false;
    rep.strictly_smaller = !ok.empty() && -ok.back()->D >= 100 && env_last_upper < env_100_lower;
    return rep;
}

FinitenessCensus finiteness_demo(double C_prime, const std::vector<CMRecord>& records) {
    FinitenessCensus c;
    for (const auto& r : records) {
        if (!r.error.empty() || r.class_number != 1) continue;
        c.class_number_one.push_back(r.D);
        if (r.ratio.mid().to_double() <= C_prime) c.discriminants.push_back(r.D);
    }
    return c;
}

}  // namespace htlab

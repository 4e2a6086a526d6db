#include "htlab/numeric/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace htlab {

namespace {

constexpr Precision kRadiusBits = 64;

// log|n| as a double, valid far beyond the double range of n itself.
double log_abs(const mpz_class& n) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

struct Term {
    unsigned long power;
    mpz_class coeff;
};

// Scratch-buffered complex arithmetic on raw MPFR values. The hot loops of the
// iteration are quadratic in the degree, so they avoid temporaries.
class Workspace {
  public:
    explicit Workspace(Precision bits) {
        for (auto* r : {&t1_, &t2_, &t3_, &t4_, &pr_, &pi_, &qr_, &qi_}) mpfr_init2(*r, bits);
    }
    ~Workspace() {
        for (auto* r : {&t1_, &t2_, &t3_, &t4_, &pr_, &pi_, &qr_, &qi_}) mpfr_clear(*r);
    }
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    // (ar + i ai) *= (br + i bi)
    void mul(mpfr_ptr ar, mpfr_ptr ai, mpfr_srcptr br, mpfr_srcptr bi) {
        mpfr_mul(t1_, ar, br, MPFR_RNDN);
        mpfr_mul(t2_, ai, bi, MPFR_RNDN);
        mpfr_mul(t3_, ar, bi, MPFR_RNDN);
        mpfr_mul(t4_, ai, br, MPFR_RNDN);
        mpfr_sub(ar, t1_, t2_, MPFR_RNDN);
        mpfr_add(ai, t3_, t4_, MPFR_RNDN);
    }

    // out = 1 / (ar + i ai)
    void inv(mpfr_ptr outr, mpfr_ptr outi, mpfr_srcptr ar, mpfr_srcptr ai) {
        mpfr_sqr(t1_, ar, MPFR_RNDN);
        mpfr_sqr(t2_, ai, MPFR_RNDN);
        mpfr_add(t1_, t1_, t2_, MPFR_RNDN);
        mpfr_div(outr, ar, t1_, MPFR_RNDN);
        mpfr_div(outi, ai, t1_, MPFR_RNDN);
        mpfr_neg(outi, outi, MPFR_RNDN);
    }

    // (ar + i ai) = (ar + i ai) / (br + i bi)
    void div(mpfr_ptr ar, mpfr_ptr ai, mpfr_srcptr br, mpfr_srcptr bi) {
        inv(qr_, qi_, br, bi);
        mul(ar, ai, qr_, qi_);
    }

    // z^e into (outr, outi) by binary powering.
    void power(mpfr_ptr outr, mpfr_ptr outi, mpfr_srcptr zr, mpfr_srcptr zi, unsigned long e) {
        mpfr_set_ui(outr, 1, MPFR_RNDN);
        mpfr_set_zero(outi, 1);
        mpfr_set(pr_, zr, MPFR_RNDN);
        mpfr_set(pi_, zi, MPFR_RNDN);
        while (e > 0) {
            if (e & 1UL) mul(outr, outi, pr_, pi_);
            e >>= 1;
            if (e > 0) {
                mpfr_set(qr_, pr_, MPFR_RNDN);
                mpfr_set(qi_, pi_, MPFR_RNDN);
                mul(pr_, pi_, qr_, qi_);
            }
        }
    }

  private:
    mpfr_t t1_, t2_, t3_, t4_, pr_, pi_, qr_, qi_;
};

// Evaluates p, p' and the magnitude sum sum |a_k| |z|^k at z, over the
// nonzero terms (sorted by decreasing power), skipping gaps by powering.
class SparseEvaluator {
  public:
    SparseEvaluator(const IntPoly& p, Precision bits) : bits_(bits), ws_(bits) {
        for (std::size_t k = p.coeffs().size(); k-- > 0;) {
            if (p[k] != 0) terms_.push_back({k, p[k]});
        }
        for (auto* r : {&vr_, &vi_, &dr_, &di_, &gr_, &gi_, &cr_, &ci_, &mag_, &zabs_, &zpow_}) mpfr_init2(*r, bits);
        coeffs_.reserve(terms_.size());
        for (const auto& t : terms_) {
            coeffs_.emplace_back(t.coeff, bits);
            scaled_.emplace_back(mpz_class(t.coeff * t.power), bits);
        }
    }
    ~SparseEvaluator() {
        for (auto* r : {&vr_, &vi_, &dr_, &di_, &gr_, &gi_, &cr_, &ci_, &mag_, &zabs_, &zpow_}) mpfr_clear(*r);
    }
    SparseEvaluator(const SparseEvaluator&) = delete;
    SparseEvaluator& operator=(const SparseEvaluator&) = delete;

    // After the call: value in (vr, vi), derivative in (dr, di),
    // sum |a_k||z|^k in mag.
    void evaluate(mpfr_srcptr zr, mpfr_srcptr zi, bool with_derivative) {
        mpfr_set_zero(vr_, 1);
        mpfr_set_zero(vi_, 1);
        mpfr_set_zero(dr_, 1);
        mpfr_set_zero(di_, 1);
        mpfr_set_zero(mag_, 1);
        mpfr_hypot(zabs_, zr, zi, MPFR_RNDU);
        for (std::size_t t = 0; t < terms_.size(); ++t) {
            unsigned long next = t + 1 < terms_.size() ? terms_[t + 1].power : 0;
            unsigned long gap = terms_[t].power - next;
            mpfr_add(vr_, vr_, coeffs_[t].get(), MPFR_RNDN);
            mpfr_add(mag_, mag_, abs_coeff(t), MPFR_RNDU);
            if (with_derivative && terms_[t].power > 0) mpfr_add(dr_, dr_, scaled_[t].get(), MPFR_RNDN);
            if (gap == 0) continue;
            ws_.power(gr_, gi_, zr, zi, gap);
            ws_.mul(vr_, vi_, gr_, gi_);
            mpfr_pow_ui(zpow_, zabs_, gap, MPFR_RNDU);
            mpfr_mul(mag_, mag_, zpow_, MPFR_RNDU);
            if (with_derivative) ws_.mul(dr_, di_, gr_, gi_);
        }
        if (with_derivative) {
            // sum k a_k z^k / z; z is never 0 since zero roots are split off
            ws_.div(dr_, di_, zr, zi);
        }
    }

    mpfr_srcptr vr() const { return vr_; }
    mpfr_srcptr vi() const { return vi_; }
    mpfr_srcptr dr() const { return dr_; }
    mpfr_srcptr di() const { return di_; }
    mpfr_srcptr mag() const { return mag_; }
    Workspace& ws() { return ws_; }

  private:
    mpfr_srcptr abs_coeff(std::size_t t) {
        mpfr_abs(cr_, coeffs_[t].get(), MPFR_RNDU);
        return cr_;
    }

    Precision bits_;
    Workspace ws_;
    std::vector<Term> terms_;
    std::vector<Real> coeffs_;
    std::vector<Real> scaled_;
    mpfr_t vr_, vi_, dr_, di_, gr_, gi_, cr_, ci_, mag_, zabs_, zpow_;
};

// Initial approximations on circles whose radii come from the upper convex
// hull of (k, log|a_k|).
std::vector<std::pair<double, double>> initial_points(const IntPoly& p) {
    const int n = p.degree();
    std::vector<std::pair<int, double>> pts;
    for (int k = 0; k <= n; ++k)
        if (p[k] != 0) pts.emplace_back(k, log_abs(p[k]));
    std::vector<std::pair<int, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            double cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross >= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    const double sigma = 0.7;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        int i = hull[e].first, j = hull[e + 1].first;
        int count = j - i;
        double radius = std::exp((hull[e].second - hull[e + 1].second) / count);
        for (int m = 0; m < count; ++m) {
            double theta = 2.0 * std::numbers::pi * m / count + 2.0 * std::numbers::pi * e / n + sigma;
            out.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
        }
    }
    return out;
}

struct RootState {
    std::vector<Real> re;
    std::vector<Real> im;

    void set_precision(Precision bits) {
        for (auto& r : re) r.set_precision(bits);
        for (auto& r : im) r.set_precision(bits);
    }
};

// One full Aberth run at fixed precision. Returns true when the corrections
// fell below the precision floor.
bool aberth(const IntPoly& p, RootState& st, Precision bits, int max_iter) {
    const std::size_t n = st.re.size();
    SparseEvaluator ev(p, bits);
    Workspace& ws = ev.ws();
    Real nr(bits), ni(bits), sr(bits), si(bits), ir(bits), ii(bits), dr(bits), di(bits), wr(bits), wi(bits);
    Real wabs(kRadiusBits), zabs(kRadiusBits), tol(kRadiusBits);
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            ev.evaluate(st.re[i].get(), st.im[i].get(), true);
            if (mpfr_zero_p(ev.vr()) && mpfr_zero_p(ev.vi())) {
                done[i] = true;
                continue;
            }
            // Newton ratio N = p / p'
            mpfr_set(nr.get(), ev.vr(), MPFR_RNDN);
            mpfr_set(ni.get(), ev.vi(), MPFR_RNDN);
            ws.div(nr.get(), ni.get(), ev.dr(), ev.di());
            // S = sum_{j != i} 1 / (z_i - z_j)
            mpfr_set_zero(sr.get(), 1);
            mpfr_set_zero(si.get(), 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                mpfr_sub(dr.get(), st.re[i].get(), st.re[j].get(), MPFR_RNDN);
                mpfr_sub(di.get(), st.im[i].get(), st.im[j].get(), MPFR_RNDN);
                ws.inv(ir.get(), ii.get(), dr.get(), di.get());
                mpfr_add(sr.get(), sr.get(), ir.get(), MPFR_RNDN);
                mpfr_add(si.get(), si.get(), ii.get(), MPFR_RNDN);
            }
            // w = N / (1 - N S)
            mpfr_set(wr.get(), nr.get(), MPFR_RNDN);
            mpfr_set(wi.get(), ni.get(), MPFR_RNDN);
            ws.mul(wr.get(), wi.get(), sr.get(), si.get());
            mpfr_ui_sub(wr.get(), 1, wr.get(), MPFR_RNDN);
            mpfr_neg(wi.get(), wi.get(), MPFR_RNDN);
            mpfr_set(dr.get(), nr.get(), MPFR_RNDN);
            mpfr_set(di.get(), ni.get(), MPFR_RNDN);
            ws.div(dr.get(), di.get(), wr.get(), wi.get());
            mpfr_sub(st.re[i].get(), st.re[i].get(), dr.get(), MPFR_RNDN);
            mpfr_sub(st.im[i].get(), st.im[i].get(), di.get(), MPFR_RNDN);
            mpfr_hypot(wabs.get(), dr.get(), di.get(), MPFR_RNDU);
            mpfr_hypot(zabs.get(), st.re[i].get(), st.im[i].get(), MPFR_RNDU);
            mpfr_set_ui(tol.get(), 1, MPFR_RNDN);
            mpfr_max(tol.get(), tol.get(), zabs.get(), MPFR_RNDU);
            mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits) + 12, MPFR_RNDU);
            if (mpfr_lessequal_p(wabs.get(), tol.get())) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) return true;
    }
    return false;
}

// Gerschgorin-type inclusion radii; returns +inf where two approximations
// coincide.
std::vector<Real> inclusion_radii(const IntPoly& p, const RootState& st, Precision bits) {
    const std::size_t n = st.re.size();
    SparseEvaluator ev(p, bits);
    Real dr(bits), di(bits);
    Real num(kRadiusBits), den(kRadiusBits), fac(kRadiusBits), err(kRadiusBits);
    Real lead_abs(p.leading(), kRadiusBits);
    mpfr_abs(lead_abs.get(), lead_abs.get(), MPFR_RNDD);
    // Relative rounding budget for the evaluation and the product.
    Real eps = pow2(-static_cast<long>(bits) + 4 + static_cast<long>(std::ceil(std::log2(4.0 * (n + 2)))), kRadiusBits);
    std::vector<Real> radii;
    radii.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev.evaluate(st.re[i].get(), st.im[i].get(), false);
        mpfr_hypot(num.get(), ev.vr(), ev.vi(), MPFR_RNDU);
        mpfr_mul(err.get(), ev.mag(), eps.get(), MPFR_RNDU);
        mpfr_add(num.get(), num.get(), err.get(), MPFR_RNDU);
        mpfr_set(den.get(), lead_abs.get(), MPFR_RNDD);
        bool degenerate = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            mpfr_sub(dr.get(), st.re[i].get(), st.re[j].get(), MPFR_RNDN);
            mpfr_sub(di.get(), st.im[i].get(), st.im[j].get(), MPFR_RNDN);
            mpfr_hypot(fac.get(), dr.get(), di.get(), MPFR_RNDD);
            if (mpfr_zero_p(fac.get())) {
                degenerate = true;
                break;
            }
            mpfr_mul(den.get(), den.get(), fac.get(), MPFR_RNDD);
        }
        Real r(kRadiusBits);
        if (degenerate) {
            mpfr_set_inf(r.get(), 1);
        } else {
            // Account for the rounding of the differences and the product.
            Real shrink(1L, kRadiusBits);
            mpfr_sub(shrink.get(), shrink.get(), eps.get(), MPFR_RNDD);
            mpfr_mul(den.get(), den.get(), shrink.get(), MPFR_RNDD);
            mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
            mpfr_mul_ui(r.get(), r.get(), n, MPFR_RNDU);
        }
        radii.push_back(std::move(r));
    }
    return radii;
}

bool disks_disjoint(const RootState& st, const std::vector<Real>& radii) {
    const std::size_t n = st.re.size();
    Real dist(kRadiusBits), sum(kRadiusBits);
    Precision bits = st.re.empty() ? 64 : st.re[0].precision();
    Real dr(bits), di(bits);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            mpfr_sub(dr.get(), st.re[i].get(), st.re[j].get(), MPFR_RNDN);
            mpfr_sub(di.get(), st.im[i].get(), st.im[j].get(), MPFR_RNDN);
            mpfr_hypot(dist.get(), dr.get(), di.get(), MPFR_RNDD);
            mpfr_add(sum.get(), radii[i].get(), radii[j].get(), MPFR_RNDU);
            if (mpfr_lessequal_p(dist.get(), sum.get())) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<ComplexBall> poly_roots(const IntPoly& input, int precision_digits, const RootOptions& options) {
    if (input.is_zero() || input.degree() < 1) throw std::invalid_argument("poly_roots: degree must be at least 1");
    if (precision_digits < 1) throw std::invalid_argument("poly_roots: precision_digits must be positive");
    Real target = pow2(0, kRadiusBits);
    {
        Real ten(10L, kRadiusBits);
        Real e(static_cast<long>(-precision_digits), kRadiusBits);
        mpfr_pow(target.get(), ten.get(), e.get(), MPFR_RNDD);
    }

    std::vector<ComplexBall> out;
    // Zero roots are exact.
    std::size_t low = 0;
    while (input[low] == 0) ++low;
    Precision base_bits = bits_for_digits(precision_digits);
    for (std::size_t k = 0; k < low; ++k) out.push_back({Complex(base_bits), Real(kRadiusBits)});
    IntPoly p(std::vector<mpz_class>(input.coeffs().begin() + low, input.coeffs().end()));
    const int n = p.degree();

    if (n == 1) {
        mpq_class r(-p[0], p[1]);
        r.canonicalize();
        Real mid(r, base_bits);
        Real rad(kRadiusBits);
        if (r.get_den() != 1 || mpz_sizeinbase(r.get_num_mpz_t(), 2) > static_cast<size_t>(base_bits)) {
            rad = ulp_bound(mid);
        }
        out.push_back({Complex(mid, Real(base_bits)), rad});
    } else if (n > 1) {
        // Cauchy-type bound to size the working precision for large roots.
        double log_bound = 0.0;
        const double log_lead = log_abs(p.leading());
        for (int k = 0; k < n; ++k) {
            if (p[k] == 0) continue;
            log_bound = std::max(log_bound, (log_abs(p[k]) - log_lead) / (n - k));
        }
        Precision bits = base_bits + static_cast<Precision>(log_bound / std::numbers::ln2) + 16 +
                         2 * static_cast<Precision>(std::ceil(std::log2(n + 1.0)));
        RootState st;
        for (const auto& [x, y] : initial_points(p)) {
            st.re.emplace_back(x, bits);
            st.im.emplace_back(y, bits);
        }
        bool ok = false;
        std::vector<Real> radii;
        for (int pass = 0; pass <= options.max_escalations; ++pass) {
            if (pass > 0) {
                bits *= 2;
                st.set_precision(bits);
            }
            aberth(p, st, bits, options.max_iterations_per_pass);
            radii = inclusion_radii(p, st, bits);
            bool small = std::all_of(radii.begin(), radii.end(), [&](const Real& r) { return r <= target; });
            if (small && disks_disjoint(st, radii)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw PrecisionError("poly_roots: no certified isolation for " + input.to_string() + " after " +
                                 std::to_string(options.max_escalations) + " precision escalations");
        }
        for (int i = 0; i < n; ++i) out.push_back({Complex(st.re[i], st.im[i]), radii[i]});
    }
    std::sort(out.begin(), out.end(), [](const ComplexBall& a, const ComplexBall& b) {
        int c = mpfr_cmp(a.mid.re().get(), b.mid.re().get());
        if (c != 0) return c < 0;
        return mpfr_cmp(a.mid.im().get(), b.mid.im().get()) < 0;
    });
    return out;
}

BigFloat log_mahler_measure(const IntPoly& p, int precision_digits) {
    if (p.is_zero()) throw std::invalid_argument("log_mahler_measure: zero polynomial");
    Precision bits = bits_for_digits(precision_digits);
    BigFloat total(log_of(abs(p.leading()), bits), pow2(-static_cast<long>(bits) + 2, kRadiusBits));
    if (p.degree() < 1) return total;
    for (const auto& root : poly_roots(p, precision_digits)) {
        Real m = abs(root.mid);
        Real hi = add_up(m, root.radius);
        Real lo(m.precision());
        mpfr_sub(lo.get(), m.get(), root.radius.get(), MPFR_RNDD);
        if (hi <= Real(1L, bits)) continue;
        Real one(1L, m.precision());
        Real lo_c = max(lo, one);
        Real log_hi = log(hi), log_lo = log(lo_c);
        Real mid = (log_hi + log_lo) / 2L;
        Real rad = add_up(abs(log_hi - log_lo), pow2(-static_cast<long>(bits) + 4, kRadiusBits));
        rad = add_up(rad, add_up(ulp_bound(log_hi), ulp_bound(log_lo)));
        total = total + BigFloat(mid, rad);
    }
    return total;
}

}  // namespace htlab

#include "htlab/numeric/ball.hpp"

#include <utility>

namespace htlab {

namespace {

constexpr Precision kRadiusBits = 64;

Real zero_radius() { return Real(kRadiusBits); }

Real abs_up(const Real& x) {
    Real r(kRadiusBits);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
}

}  // namespace

BigFloat::BigFloat(Precision bits) : mid_(bits), radius_(zero_radius()) {}

BigFloat::BigFloat(Real mid) : mid_(std::move(mid)), radius_(zero_radius()) {}

BigFloat::BigFloat(Real mid, Real radius) : mid_(std::move(mid)), radius_(kRadiusBits) {
    mpfr_abs(radius_.get(), radius.get(), MPFR_RNDU);
}

BigFloat BigFloat::from_rational(const mpq_class& q, Precision bits) {
    Real m(q, bits);
    Real rad = ulp_bound(m);
    if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0 && mpz_sizeinbase(q.get_num_mpz_t(), 2) <= static_cast<size_t>(bits)) {
        rad = zero_radius();
    }
    return BigFloat(std::move(m), std::move(rad));
}

Real BigFloat::lower() const {
    Real r(mid_.precision());
    mpfr_sub(r.get(), mid_.get(), radius_.get(), MPFR_RNDD);
    return r;
}

Real BigFloat::upper() const {
    Real r(mid_.precision());
    mpfr_add(r.get(), mid_.get(), radius_.get(), MPFR_RNDU);
    return r;
}

bool BigFloat::contains_zero() const { return !is_positive() && !is_negative(); }

bool BigFloat::is_positive() const { return lower().sign() > 0; }

bool BigFloat::is_negative() const { return upper().sign() < 0; }

void BigFloat::inflate(const Real& extra) { radius_ = add_up(radius_, abs_up(extra)); }

std::string BigFloat::to_string(int significant) const {
    return mid_.to_string(significant) + " ± " + radius_.to_string(3);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    Real m = a.mid() + b.mid();
    Real r = add_up(add_up(a.radius(), b.radius()), ulp_bound(m));
    return {std::move(m), std::move(r)};
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    Real m = a.mid() - b.mid();
    Real r = add_up(add_up(a.radius(), b.radius()), ulp_bound(m));
    return {std::move(m), std::move(r)};
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    Real m = a.mid() * b.mid();
    Real r = add_up(mul_up(abs_up(a.mid()), b.radius()), mul_up(abs_up(b.mid()), a.radius()));
    r = add_up(r, mul_up(a.radius(), b.radius()));
    r = add_up(r, ulp_bound(m));
    return {std::move(m), std::move(r)};
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    // |a/b - ma/mb| <= (|ma| rb + |mb| ra) / (|mb| (|mb| - rb))
    Real den_low(kRadiusBits);
    mpfr_abs(den_low.get(), b.mid().get(), MPFR_RNDD);
    mpfr_sub(den_low.get(), den_low.get(), b.radius().get(), MPFR_RNDD);
    if (den_low.sign() <= 0) throw PrecisionError("division by a ball containing zero");
    Real m = a.mid() / b.mid();
    Real num = add_up(mul_up(abs_up(a.mid()), b.radius()), mul_up(abs_up(b.mid()), a.radius()));
    Real bm(kRadiusBits);
    mpfr_abs(bm.get(), b.mid().get(), MPFR_RNDD);
    Real r = div_up(div_up(num, bm), den_low);
    r = add_up(r, ulp_bound(m));
    return {std::move(m), std::move(r)};
}

BigFloat operator-(const BigFloat& a) { return {-a.mid(), a.radius()}; }

BigFloat log(const BigFloat& x) {
    Real low = x.lower();
    if (low.sign() <= 0) throw PrecisionError("log of a ball that is not bounded away from zero");
    Real m = log(x.mid());
    // |log x - log m| <= r / (m - r)
    Real low_r(kRadiusBits);
    mpfr_set(low_r.get(), low.get(), MPFR_RNDD);
    Real r = add_up(div_up(x.radius(), low_r), ulp_bound(m));
    r = add_up(r, pow2(-static_cast<long>(m.precision()) + 2, kRadiusBits));
    return {std::move(m), std::move(r)};
}

BigFloat exp(const BigFloat& x) {
    Real m = exp(x.mid());
    // |e^(m+t) - e^m| <= e^m (e^r - 1)
    Real r(kRadiusBits);
    mpfr_expm1(r.get(), x.radius().get(), MPFR_RNDU);
    r = mul_up(r, abs_up(m));
    r = add_up(r, mul_up(ulp_bound(m), Real(4L, kRadiusBits)));
    return {std::move(m), std::move(r)};
}

BigFloat pow(const BigFloat& x, const Real& y) {
    if (y.is_zero()) return BigFloat(Real(1L, x.precision()));
    BigFloat lx = log(x);
    BigFloat scaled = lx * BigFloat(y);
    return exp(scaled);
}

BigFloat sqrt(const BigFloat& x) {
    Real low = x.lower();
    if (low.sign() < 0) throw PrecisionError("sqrt of a ball extending below zero");
    Real m = sqrt(x.mid());
    Real r(kRadiusBits);
    if (m.is_zero()) {
        mpfr_sqrt(r.get(), x.radius().get(), MPFR_RNDU);
    } else {
        // |sqrt(x) - sqrt(m)| <= r / sqrt(m)  (for x >= 0)
        Real sm(kRadiusBits);
        mpfr_abs(sm.get(), m.get(), MPFR_RNDD);
        r = div_up(x.radius(), sm);
        Real alt(kRadiusBits);
        mpfr_sqrt(alt.get(), x.radius().get(), MPFR_RNDU);
        if (alt < r) r = alt;
    }
    r = add_up(r, ulp_bound(m));
    return {std::move(m), std::move(r)};
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
    Real hi = max(a.upper(), b.upper());
    Real lo = max(a.lower(), b.lower());
    Real m = max(a.mid(), b.mid());
    Real r = max(abs_up(hi - m), abs_up(m - lo));
    return {std::move(m), add_up(r, ulp_bound(hi))};
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return -max(-a, -b); }

BigFloat abs(const BigFloat& a) {
    if (a.mid().sign() >= 0) return a;
    return -a;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        case Ordering::greater: return "greater";
        case Ordering::inconclusive: break;
    }
    return "inconclusive";
}

Ordering compare(const BigFloat& a, const BigFloat& b) {
    if (a.radius().is_zero() && b.radius().is_zero()) {
        int c = mpfr_cmp(a.mid().get(), b.mid().get());
        return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
    }
    if (a.upper() < b.lower()) return Ordering::less;
    if (a.lower() > b.upper()) return Ordering::greater;
    return Ordering::inconclusive;
}

namespace {

// |re| + |im|, rounded up: a cheap upper bound on |z|.
Real l1_up(const Complex& z) { return add_up(abs_up(z.re()), abs_up(z.im())); }

// Rounding slop of a complex result of magnitude up to `mag`.
Real complex_slop(const Real& mag, Precision bits, long ulps) {
    Real r(kRadiusBits);
    mpfr_mul_2si(r.get(), mag.get(), 1 - static_cast<long>(bits), MPFR_RNDU);
    return mul_up(r, Real(ulps, kRadiusBits));
}

}  // namespace

ComplexBall::ComplexBall(Complex m, Real r) : mid(std::move(m)), radius(kRadiusBits) {
    mpfr_abs(radius.get(), r.get(), MPFR_RNDU);
}

ComplexBall::ComplexBall(Complex m) : mid(std::move(m)), radius(zero_radius()) {}

Real ComplexBall::mag_upper() const { return add_up(l1_up(mid), radius); }

Real ComplexBall::mag_lower() const {
    Real m = abs(mid);
    Real r(kRadiusBits);
    mpfr_sub(r.get(), m.get(), radius.get(), MPFR_RNDD);
    // abs() itself is correctly rounded; one ulp of slack covers it
    mpfr_sub(r.get(), r.get(), ulp_bound(m).get(), MPFR_RNDD);
    return r;
}

std::string ComplexBall::to_string(int significant) const {
    return "(" + mid.re().to_string(significant) + ", " + mid.im().to_string(significant) + ") ± " +
           radius.to_string(3);
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    Complex m = a.mid + b.mid;
    Real r = add_up(add_up(a.radius, b.radius), complex_slop(l1_up(m), m.precision(), 2));
    return {std::move(m), std::move(r)};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    Complex m = a.mid - b.mid;
    Real r = add_up(add_up(a.radius, b.radius), complex_slop(l1_up(m), m.precision(), 2));
    return {std::move(m), std::move(r)};
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    Complex m = a.mid * b.mid;
    Real ma = l1_up(a.mid), mb = l1_up(b.mid);
    // |ab - a'b'| <= |a| rb + |b| ra + ra rb
    Real r = add_up(add_up(mul_up(ma, b.radius), mul_up(mb, a.radius)), mul_up(a.radius, b.radius));
    r = add_up(r, complex_slop(mul_up(ma, mb), m.precision(), 8));
    return {std::move(m), std::move(r)};
}

ComplexBall operator*(const ComplexBall& a, const BigFloat& b) {
    Complex m = a.mid * b.mid();
    Real ma = l1_up(a.mid), mb = abs_up(b.mid());
    Real r = add_up(add_up(mul_up(ma, b.radius()), mul_up(mb, a.radius)), mul_up(a.radius, b.radius()));
    r = add_up(r, complex_slop(mul_up(ma, mb), m.precision(), 4));
    return {std::move(m), std::move(r)};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    Real low = b.mag_lower();
    if (low.sign() <= 0) throw PrecisionError("division by a complex ball containing zero");
    Complex m = a.mid / b.mid;
    // |a/b - a'/b'| <= (ra + |a/b| rb) / (|b| - rb)
    Real q = l1_up(m);
    Real low_r(kRadiusBits);
    mpfr_set(low_r.get(), low.get(), MPFR_RNDD);
    Real r = div_up(add_up(a.radius, mul_up(q, b.radius)), low_r);
    r = add_up(r, complex_slop(q, m.precision(), 16));
    return {std::move(m), std::move(r)};
}

ComplexBall exp(const ComplexBall& z) {
    Complex m = exp(z.mid);
    Real mag = l1_up(m);
    Real r(kRadiusBits);
    mpfr_expm1(r.get(), z.radius.get(), MPFR_RNDU);
    r = mul_up(r, mag);
    // exp and cos/sin of the midpoint, each with a few ulps, times a large argument
    Real arg_slop = mul_up(l1_up(z.mid), Real(4L, kRadiusBits));
    r = add_up(r, complex_slop(mul_up(mag, add_up(arg_slop, Real(4L, kRadiusBits))), m.precision(), 2));
    return {std::move(m), std::move(r)};
}

BigFloat abs(const ComplexBall& z) {
    Real m = abs(z.mid);
    Real r = add_up(z.radius, ulp_bound(m));
    return BigFloat(std::move(m), std::move(r));
}

}  // namespace htlab

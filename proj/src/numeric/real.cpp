#include "htlab/numeric/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace htlab {

Precision bits_for_digits(int digits) {
    return static_cast<Precision>(std::ceil(digits * 3.321928094887362)) + 16;
}

Real::Real(Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(Precision bits) { mpfr_prec_round(value_, bits, MPFR_RNDN); }

long Real::exponent2() const {
    if (!mpfr_regular_p(value_)) return 0;
    return mpfr_get_exp(value_);
}

mpz_class Real::round_to_integer() const {
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
    return out;
}

std::string Real::to_string(int significant) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

namespace {

Precision joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real& x) {
    Real r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(joint(x, y));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

Real gamma(const Real& x) {
    Real r(x.precision());
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real pi(Precision bits) {
    Real r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real log_of(const mpz_class& n, Precision bits) {
    Real r(n, bits + 8);
    mpfr_log(r.get(), r.get(), MPFR_RNDN);
    r.set_precision(bits);
    return r;
}

Real pow2(long e, Precision bits) {
    Real r(1L, bits);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

Real add_up(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Real mul_up(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Real div_up(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Real ulp_bound(const Real& x, Precision radius_bits) {
    Real r(radius_bits);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(x.precision()), MPFR_RNDU);
    return r;
}

Complex::Complex(Precision bits) : re_(bits), im_(bits) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

Complex& Complex::operator+=(const Complex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    *this = *this * rhs;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
Complex operator-(const Complex& a) { return {-a.re(), -a.im()}; }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Complex expi(const Real& theta) {
    Real s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

Complex exp(const Complex& z) {
    Complex u = expi(z.im());
    Real m = exp(z.re());
    return u * m;
}

}  // namespace htlab

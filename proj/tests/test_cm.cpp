#include "doctest.h"
#include "oracles.hpp"

#include "htlab/cm/cm.hpp"
#include "htlab/heights/algebraic.hpp"

#include <cmath>
#include <random>

using namespace htlab;

namespace {

constexpr Precision kBits = 256;

ComplexBall point(double re, double im, Precision bits = kBits) {
    return ComplexBall(Complex(Real(re, bits), Real(im, bits)));
}

ComplexBall point(const Real& re, const Real& im) { return ComplexBall(Complex(re, im)); }

bool contains_integer(const ComplexBall& z, long n, double tol) {
    Real dr = abs(z.mid.re() - Real(n, z.precision()));
    Real di = abs(z.mid.im());
    Real t(tol, 64);
    return dr <= add_up(z.radius, t) && di <= add_up(z.radius, t);
}

}  // namespace

TEST_CASE("reduced forms examples") {
    CHECK(reduced_forms(-4) == std::vector<ReducedForm>{{1, 0, 1}});
    CHECK(reduced_forms(-3) == std::vector<ReducedForm>{{1, 1, 1}});
    CHECK(reduced_forms(-23) == std::vector<ReducedForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-3) == 1);
    CHECK_THROWS(Discriminant::make(-5));
    CHECK_THROWS(Discriminant::make(4));
    CHECK(Discriminant::make(-12).fundamental == false);
    CHECK(Discriminant::make(-8).fundamental);
    auto f = fundamental_discriminants(20);
    CHECK(f == std::vector<long>{-3, -4, -7, -8, -11, -15, -19, -20});
}

TEST_CASE("class numbers agree with Dirichlet and brute force") {
    for (long D : fundamental_discriminants(1000)) {
        long h = class_number(D);
        CHECK_MESSAGE(h == oracle::dirichlet_class_number(D), "D=", D);
        CHECK_MESSAGE(h == oracle::brute_force_form_count(D), "D=", D);
    }
    // non-fundamental discriminants count primitive forms only
    CHECK(class_number(-12) == oracle::brute_force_form_count(-12));
    CHECK(class_number(-16) == 1);
    CHECK(class_number(-28) == 1);
}

TEST_CASE("class number one list") {
    std::vector<long> one;
    for (long D : fundamental_discriminants(5000))
        if (class_number(D) == 1) one.push_back(D);
    CHECK(one == std::vector<long>{-3, -4, -7, -8, -11, -19, -43, -67, -163});
}

TEST_CASE("j invariant examples") {
    auto i = point(0.0, 1.0);
    CHECK(contains_integer(j_invariant(i, 30), 1728, 1e-30));
    Real s3 = sqrt(Real(3L, kBits)) / 2L;
    CHECK(contains_integer(j_invariant(point(Real(0.5, kBits), s3), 30), 0, 1e-30));
    CHECK(contains_integer(j_invariant(point(Real(0L, kBits), sqrt(Real(2L, kBits))), 30), 8000, 1e-30));
    // reduction: j is invariant under tau -> tau + 1 and tau -> -1/tau
    auto tau = point(0.31, 0.4);
    auto j1 = j_invariant(tau, 30);
    auto one = point(1.0, 0.0);
    auto j2 = j_invariant(tau + one, 30);
    auto j3 = j_invariant(ComplexBall(Complex(Real(-1L, kBits), Real(0L, kBits))) / tau, 30);
    CHECK(abs(j1 - j2).upper() < Real(1e-25, 64));
    CHECK(abs(j1 - j3).upper() < Real(1e-25, 64));
    CHECK_THROWS_AS(j_invariant(point(0.0, -1.0), 30), PrecisionError);
}

TEST_CASE("Hilbert class polynomial examples") {
    CHECK(hilbert_class_poly(-4) == IntPoly{-1728, 1});
    CHECK(hilbert_class_poly(-8) == IntPoly{-8000, 1});
    CHECK(hilbert_class_poly(-3) == IntPoly{0, 1});
    auto r = hilbert_class_poly_detailed(-23, 40);
    CHECK(r.poly == IntPoly::parse("x^3 + 3491750x^2 - 5151296875x + 12771880859375"));
    CHECK(r.max_residual < 1e-4);
    // the roots of the rounded polynomial are the three j values
    for (const auto& f : reduced_forms(-23)) {
        ComplexBall j = cm_j_value(f, -23, 30);
        ComplexBall v(Complex(Real(0L, kBits * 2), Real(0L, kBits * 2)));
        for (int k = r.poly.degree(); k >= 0; --k)
            v = v * j + ComplexBall(Complex(Real(r.poly[k], kBits * 2), Real(0L, kBits * 2)));
        // |H(j)| / |H'(j)| bounds the root distance to first order
        CHECK(abs(v).upper() < Real(1e-6, 64));
    }
}

TEST_CASE("class polynomial integrality for |D| <= 500") {
    for (long D : fundamental_discriminants(500)) {
        auto r = hilbert_class_poly_detailed(D);
        CHECK_MESSAGE(r.max_residual < 1e-4, "D=", D);
        CHECK_MESSAGE(r.poly.degree() == class_number(D), "D=", D);
        CHECK(r.poly.leading() == 1);
    }
}

TEST_CASE("j height examples and consistency with the Weil height") {
    CHECK(j_height(-3).upper() <= Real(0L, 64));
    BigFloat h4 = j_height(-4);
    CHECK(abs(h4.mid() - log(Real(1728L, kBits))) <= add_up(h4.radius(), Real(1e-35, 64)));
    for (long D : {-23L, -71L, -95L}) {
        BigFloat ours = j_height(D, 40);
        BigFloat ref = weil_height(AlgebraicNumber::from_minpoly(hilbert_class_poly(D)), 40).ball(40);
        BigFloat d = ours - ref;
        CHECK_MESSAGE(abs(d.mid()) <= add_up(d.radius(), Real(1e-30, 64)), "D=", D);
    }
    // direct sum over the computed roots
    double s = 0;
    for (const auto& f : reduced_forms(-23)) s += std::log(std::max(1.0, abs(cm_j_value(f, -23, 20)).mid().to_double()));
    CHECK(std::fabs(j_height(-23).mid().to_double() - s / 3) < 1e-12);
}

TEST_CASE("Faltings local term is modular invariant") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.3, 2.5);
    Precision bits = bits_for_digits(50) + 64;
    auto one = ComplexBall(Complex(Real(1L, bits), Real(0L, bits)));
    auto minus_one = ComplexBall(Complex(Real(-1L, bits), Real(0L, bits)));
    Real tol(1e-40, 64);
    for (int k = 0; k < 100; ++k) {
        auto tau = point(re(rng), im(rng), bits);
        BigFloat s0 = faltings_local_term(tau, 50);
        BigFloat s1 = faltings_local_term(tau + one, 50);
        BigFloat s2 = faltings_local_term(minus_one / tau, 50);
        CHECK((s0 - s1).upper() < tol);
        CHECK((s1 - s0).upper() < tol);
        CHECK(abs(s0 - s2).upper() < tol);
    }
    auto i = point(0.0, 1.0, bits);
    CHECK(abs(faltings_local_term(i, 50) - faltings_local_term(minus_one / i, 50)).upper() < tol);
}

TEST_CASE("Chowla-Selberg: |Delta(i)|") {
    Precision bits = 256;
    Real g = gamma(Real(1L, bits) / 4L);
    Real closed = pow(g, Real(24L, bits)) / (pow2(24, bits) * pow(pi(bits), Real(18L, bits)));
    BigFloat d = abs(delta(point(0.0, 1.0, bits), bits));
    CHECK(abs(d.mid() - closed) <= add_up(d.radius(), Real(1e-30, 64)));
    BigFloat l = log_abs_delta(point(0.0, 1.0, bits), bits);
    CHECK(abs(l.mid() - log(closed)) <= add_up(l.radius(), Real(1e-30, 64)));
}

TEST_CASE("Faltings height ordering and offset") {
    BigFloat f3 = faltings_height_cm(-3);
    BigFloat f4 = faltings_height_cm(-4);
    CHECK(compare(f3, f4) == Ordering::less);
    BigFloat g3 = faltings_height_cm(-3, 40, 0.0);
    CHECK(std::fabs((f3 - g3).mid().to_double() - default_faltings_offset()) < 1e-15);
    // Deligne normalization at j = 0 is -0.7487524...; ours differs by (1/2) log(2 pi)
    double deligne = f3.mid().to_double() - 0.5 * std::log(2 * M_PI);
    CHECK(std::fabs(deligne + 0.7487524) < 1e-6);
}

TEST_CASE("theta null point") {
    Precision bits = kBits;
    for (auto [x, y] : {std::pair{0.0, 1.0}, {0.1, 1.2}, {-0.4, 0.7}, {0.5, 0.8660254}}) {
        auto th = theta_null_point(point(x, y, bits), 40);
        CHECK(th[1].mid.re() == th[3].mid.re());
        CHECK(th[1].mid.im() == th[3].mid.im());
        CHECK(th[1].radius == th[3].radius);
    }
    auto ti = theta_null_point(point(0.0, 1.0, bits), 40);
    for (const auto& t : ti) {
        CHECK(t.mid.re() > Real(0L, 64));
        CHECK(abs(t.mid.im()) <= t.radius);
    }
    // tau -> tau + 2 multiplies the m-th term by exp(pi i m^2 / 2): 1 for
    // even m and i for odd m, so the factors are (1, i, 1, i)
    auto tau = point(0.1, 1.2, bits);
    auto a = theta_null_point(tau, 40);
    auto b = theta_null_point(tau + point(2.0, 0.0, bits), 40);
    auto iu = ComplexBall(Complex(Real(0L, bits), Real(1L, bits)));
    Real tol(1e-35, 64);
    CHECK(abs(b[0] - a[0]).upper() < tol);
    CHECK(abs(b[2] - a[2]).upper() < tol);
    CHECK(abs(b[1] - a[1] * iu).upper() < tol);
    CHECK(abs(b[3] - a[3] * iu).upper() < tol);
    // with period 8 the factor is common (all 1)
    auto c = theta_null_point(tau + point(8.0, 0.0, bits), 40);
    for (int j = 0; j < 4; ++j) CHECK(abs(c[j] - a[j]).upper() < tol);
}

TEST_CASE("theta height estimate") {
    for (long D : {-3L, -4L, -7L}) {
        BigFloat h = theta_height_estimate(D);
        CHECK(h.lower() >= Real(0L, 64));
        CHECK(std::isfinite(h.mid().to_double()));
    }
    BigFloat a = theta_height_estimate(-4, 30);
    BigFloat b = theta_height_estimate(-4, 60);
    CHECK(a.lower() > Real(0L, 64));
    CHECK(abs(a.mid() - b.mid()) < Real(1e-20, 64));
}

TEST_CASE("scan, decay and finiteness on a small range") {
    ScanOptions one;
    auto recs = cm_scan(400, one);
    REQUIRE(recs.size() == fundamental_discriminants(400).size());
    for (std::size_t k = 1; k < recs.size(); ++k) CHECK(recs[k].D < recs[k - 1].D);
    for (const auto& r : recs) {
        CHECK(r.error.empty());
        CHECK(r.class_number >= 1);
    }
    ScanOptions many;
    many.workers = 4;
    auto again = cm_scan(400, many);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        CHECK(again[k].D == recs[k].D);
        CHECK(again[k].faltings_height.mid() == recs[k].faltings_height.mid());
        CHECK(again[k].residual.mid() == recs[k].residual.mid());
    }

    auto decay = verify_decay(recs);
    CHECK(decay.nonincreasing);
    CHECK(decay.rows.size() == recs.size());
    CHECK(decay.strictly_smaller);

    auto tf = verify_theta_faltings(recs);
    CHECK(tf.finite);
    CHECK(tf.excluded.empty());

    auto fin = finiteness_demo(100.0, recs);
    CHECK(fin.discriminants == std::vector<long>{-3, -4, -7, -8, -11, -19, -43, -67, -163});
    CHECK(fin.class_number_one == fin.discriminants);
    CHECK(finiteness_demo(0.0, recs).discriminants.empty());

    ScanOptions doubled;
    doubled.record.digits = 2 * kDefaultDigits;
    auto hi = cm_scan(100, doubled);
    auto lo = cm_scan(100, one);
    CHECK(residual_stability(lo, hi).stable);
}

#include "doctest.h"

#include "htlab/heights/algebraic.hpp"
#include "htlab/heights/height_value.hpp"
#include "htlab/radical/radical.hpp"

#include <cmath>
#include <random>

using namespace htlab;

namespace {

// Exact division of monic integer polynomials, used to build cyclotomics.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    std::vector<mpz_class> r = num.coeffs();
    const int n = num.degree(), m = den.degree();
    std::vector<mpz_class> q(n - m + 1);
    for (int k = n - m; k >= 0; --k) {
        q[k] = r[k + m] / den.leading();
        for (int j = 0; j <= m; ++j) r[k + j] -= q[k] * den[j];
    }
    for (const auto& c : r) REQUIRE(c == 0);
    return IntPoly(q);
}

std::vector<IntPoly> cyclotomics(int up_to) {
    std::vector<IntPoly> phi(up_to + 1);
    for (int n = 1; n <= up_to; ++n) {
        IntPoly p = IntPoly::binomial(n, 1, 1);
        for (int d = 1; d < n; ++d)
            if (n % d == 0) p = divide_exact(p, phi[d]);
        phi[n] = p;
    }
    return phi;
}

bool near(const HeightValue& h, double expected, double tol) { return std::fabs(h.approx() - expected) < tol; }

}  // namespace

TEST_CASE("weil height examples") {
    CHECK(near(weil_height(AlgebraicNumber::from_minpoly(IntPoly{-1, 1})), 0.0, 1e-30));
    CHECK(near(weil_height(AlgebraicNumber::from_minpoly(IntPoly{-2, 1})), std::log(2.0), 1e-15));
    auto phi = AlgebraicNumber::from_minpoly(IntPoly::parse("x^2 - x - 1"));
    // log M(x^2 - x - 1) = log((1+sqrt5)/2); the height divides by the degree
    CHECK(near(weil_height(phi), std::log((1 + std::sqrt(5.0)) / 2) / 2, 1e-15));
    CHECK(near(weil_height(phi), 0.2406059125298017, 1e-14));
    // place by place in Q(sqrt5): two real places, one with |phi| > 1, and the
    // finite places contribute nothing since phi is a unit
    auto h = weil_height(phi, 50).ball(50);
    Real golden = (Real(1L, 200) + sqrt(Real(5L, 200))) / Real(2L, 200);
    CHECK(abs(h.mid() - log(golden) / 2L) <= h.radius() + Real(1e-45, 200));
}

TEST_CASE("weighted height examples") {
    auto phi = AlgebraicNumber::from_minpoly(IntPoly::parse("x^2 - x - 1"));
    CHECK(std::fabs(weighted_height(phi, 0.0).approx() - weil_height(phi).approx()) < 1e-15);
    auto r2 = AlgebraicNumber::from_minpoly(IntPoly{-2, 0, 1});
    CHECK(near(weighted_height(r2, -1.0), 0.25 * std::log(2.0), 1e-15));
    CHECK(near(weighted_height(AlgebraicNumber::rational(3), -1.0), std::log(3.0), 1e-15));
    CHECK_THROWS(weighted_height(r2, INFINITY));
}

TEST_CASE("height_value_compare examples") {
    HeightValue a = HeightValue::log_prime(2);
    CHECK(height_value_compare(a, HeightValue::log_prime(2)) == Ordering::equal);
    CHECK(height_value_compare(HeightValue::log_prime(3, mpq_class(1, 5)), HeightValue::log_prime(2, mpq_class(1, 5))) ==
          Ordering::greater);
    Precision bits = bits_for_digits(20);
    HeightValue x(BigFloat(Real(1.0, bits), Real(0.5, bits)));
    HeightValue y(BigFloat(Real(1.2, bits), Real(0.5, bits)));
    CHECK(height_value_compare(x, y) == Ordering::inconclusive);
    // 3 log 2 vs 2 log 3 (8 < 9), and a near tie 7 log 2 vs 3 log 5 (128 > 125)
    LogTerms t1{{2, 3}}, t2{{3, 2}};
    CHECK(height_value_compare(HeightValue(t1), HeightValue(t2)) == Ordering::less);
    LogTerms t3{{2, 7}}, t4{{5, 3}};
    CHECK(height_value_compare(HeightValue(t3), HeightValue(t4)) == Ordering::greater);
    // 2^10 = 1024 vs 3^(6.309...): 10 log 2 - (1/2)(log 3 + log 11 + log 31) = log(1024/sqrt(1023))
    LogTerms t5{{2, 10}}, t6{{3, mpq_class(1, 2)}, {11, mpq_class(1, 2)}, {31, mpq_class(1, 2)}};
    CHECK(height_value_compare(HeightValue(t5), HeightValue(t6)) == Ordering::greater);
}

TEST_CASE("height value algebra and parsing") {
    HeightValue h = parse_height_value("1/4*log(17)");
    REQUIRE(h.is_exact());
    CHECK(h.terms().at(17) == mpq_class(1, 4));
    CHECK(parse_height_value("0").is_zero());
    HeightValue d = parse_height_value("log(12)");
    CHECK(d.terms().at(2) == 2);
    CHECK(d.terms().at(3) == 1);
    CHECK((d - d).is_zero());
    CHECK(HeightValue::log_prime(3, mpq_class(1, 5)).symbolic() == "1/5*log(3)");
    CHECK(!parse_height_value("0.5").is_exact());
    CHECK_THROWS(parse_height_value("log(x)"));
    CHECK(HeightValue::log_prime(3, mpq_class(1, 5)).to_string().rfind("1/5*log(3) ≈ 0.2197224577", 0) == 0);
}

TEST_CASE("Kronecker: roots of unity of order <= 12 have height zero") {
    auto phi = cyclotomics(12);
    for (int n = 1; n <= 12; ++n) {
        auto a = AlgebraicNumber::from_minpoly(phi[n]);
        BigFloat h = weil_height(a, 30).ball(30);
        CHECK_MESSAGE(h.upper() < Real(1e-25, 128), "order ", n);
        // every root individually
        for (int k = 0; k < phi[n].degree(); ++k) {
            auto ak = AlgebraicNumber::from_minpoly(phi[n], k, 30);
            CHECK(abs(abs(ak.approx().mid) - Real(1L, 128)) < Real(1e-25, 128));
        }
    }
    CHECK(weil_height(AlgebraicNumber::rational(0)).approx() == 0.0);
}

TEST_CASE("Kronecker: non-cyclotomic minimal polynomials have positive height") {
    auto phi = cyclotomics(120);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> degree(2, 8);
    int tested = 0;
    while (tested < 100) {
        int n = degree(rng);
        std::vector<mpz_class> c(n + 1);
        for (auto& x : c) x = coeff(rng);
        if (c[n] <= 0 || c[0] == 0) continue;
        IntPoly p(c);
        if (irreducibility_filter(p) != Irreducibility::eisenstein) continue;
        bool cyclo = false;
        for (const auto& f : phi)
            if (f == p) cyclo = true;
        if (cyclo) continue;
        BigFloat h = weil_height(AlgebraicNumber::from_minpoly(p), 30).ball(30);
        CHECK_MESSAGE(h.lower() > Real(1e-6, 128), p.to_string());
        ++tested;
    }
}

TEST_CASE("power rule on radicals") {
    std::mt19937_64 rng(7);
    const unsigned long primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 30; ++trial) {
        RadicalScalar a;
        int factors = 1 + static_cast<int>(rng() % 2);
        for (int f = 0; f < factors; ++f) {
            long num = static_cast<long>(rng() % 5) - 2;
            if (num == 0) num = 1;
            long den = 1 + static_cast<long>(rng() % 4);
            a = a * RadicalScalar::prime_power(primes[rng() % 6], mpq_class(num, den));
        }
        if (a.is_one()) continue;
        auto base = weil_height(AlgebraicNumber::from_minpoly(a.minimal_polynomial()), 30).ball(30);
        for (int n = 1; n <= 5; ++n) {
            RadicalScalar an = a.pow(n);
            auto hn = weil_height(AlgebraicNumber::from_minpoly(an.minimal_polynomial()), 30).ball(30);
            BigFloat diff = hn - base * BigFloat::exact(n, base.precision());
            CHECK_MESSAGE(abs(diff.mid()) <= diff.radius() + Real(1e-25, 128), a.to_string(), " n=", n);
        }
    }
}

TEST_CASE("Galois symmetry: height does not depend on the chosen root") {
    for (const char* text : {"x^3 - 2", "3x^5 - 2", "x^4 - x - 1", "2x^2 + x + 7"}) {
        IntPoly p = IntPoly::parse(text);
        BigFloat first = weil_height(AlgebraicNumber::from_minpoly(p, 0), 30).ball(30);
        for (int k = 1; k < p.degree(); ++k) {
            BigFloat hk = weil_height(AlgebraicNumber::from_minpoly(p, k), 30).ball(30);
            CHECK(compare(first, hk) != Ordering::less);
            CHECK(compare(first, hk) != Ordering::greater);
        }
    }
}

TEST_CASE("irreducibility filter") {
    CHECK(irreducibility_filter(IntPoly{-3, 1}) == Irreducibility::linear);
    CHECK(irreducibility_filter(IntPoly::parse("x^2 - 2")) == Irreducibility::eisenstein);
    CHECK(irreducibility_filter(IntPoly::parse("x^2 - 1")) == Irreducibility::reducible);
    CHECK(irreducibility_filter(IntPoly::parse("x^2 + x + 1")) == Irreducibility::eisenstein);  // shift by 1
    CHECK(irreducibility_filter(IntPoly::parse("x^4 + 4")) == Irreducibility::unverified);
    CHECK(irreducibility_filter(IntPoly::parse("x^2 - x - 1")) == Irreducibility::no_rational_root);
    CHECK(irreducibility_filter(IntPoly::parse("x^3 + x + 1")) == Irreducibility::no_rational_root);
    CHECK(irreducibility_filter(IntPoly::parse("2x^2 + 4x + 2")) == Irreducibility::reducible);
}

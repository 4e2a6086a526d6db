#include "doctest.h"

#include "htlab/numeric/ball.hpp"
#include "htlab/numeric/int_poly.hpp"
#include "htlab/numeric/primes.hpp"
#include "htlab/numeric/roots.hpp"
#include "htlab/numeric/smith.hpp"

#include <functional>
#include <random>

using namespace htlab;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// gcd of all k x k minors, the k-th determinantal divisor.
mpz_class determinantal_divisor(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> rows, cols;
    mpz_class g = 0;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, std::vector<std::vector<std::size_t>>&)> pick =
        [&](std::size_t start, std::vector<std::size_t>& cur, std::size_t n, std::vector<std::vector<std::size_t>>& out) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                pick(i + 1, cur, n, out);
                cur.pop_back();
            }
        };
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    pick(0, cur, m.rows(), row_sets);
    pick(0, cur, m.cols(), col_sets);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
            g = gcd(g, sub.determinant());
        }
    return g;
}

Real ten_pow(int e) {
    Real ten(10L, 64);
    Real ex(static_cast<long>(e), 64);
    return pow(ten, ex);
}

}  // namespace

TEST_CASE("IntPoly parsing and printing") {
    IntPoly p = IntPoly::parse("x^2 - x - 1");
    CHECK(p == IntPoly({-1, -1, 1}));
    CHECK(p.to_string() == "x^2 - x - 1");
    CHECK(IntPoly::parse("3*x^5 - 2") == IntPoly({-2, 0, 0, 0, 0, 3}));
    CHECK(IntPoly::parse("-x + 4") == IntPoly({4, -1}));
    CHECK_THROWS_AS(IntPoly::parse("x^^2"), ParseError);
    CHECK(IntPoly::parse("2x + 1") == IntPoly({1, 2}));
    CHECK_THROWS_AS(IntPoly::parse("x 2"), ParseError);
    try {
        IntPoly::parse("x + y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("rational roots") {
    CHECK(IntPoly({-6, 1, 1}).rational_roots() == std::vector<mpq_class>{mpq_class(-3), mpq_class(2)});
    CHECK(IntPoly({-1, 0, 2}).rational_roots().empty());
    CHECK(IntPoly({-1, 3}).rational_roots() == std::vector<mpq_class>{mpq_class(1, 3)});
}

TEST_CASE("poly_roots: sqrt 2 to 30 digits") {
    auto roots = poly_roots(IntPoly({-2, 0, 1}), 30);
    REQUIRE(roots.size() == 2);
    Real sqrt2 = sqrt(Real(2L, 256));
    Real tol = ten_pow(-30);
    CHECK(abs(roots[0].mid.re() + sqrt2) < tol);
    CHECK(abs(roots[1].mid.re() - sqrt2) < tol);
    CHECK(roots[0].radius <= tol);
    CHECK(abs(roots[0].mid.im()) < tol);
}

TEST_CASE("poly_roots: rational root is exact") {
    auto roots = poly_roots(IntPoly({-3, 1}), 20);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].mid.re() == Real(3L, 64));
    CHECK(roots[0].radius.is_zero());
}

TEST_CASE("poly_roots: x^2 + 1") {
    auto roots = poly_roots(IntPoly({1, 0, 1}), 25);
    REQUIRE(roots.size() == 2);
    Real tol = ten_pow(-25);
    CHECK(abs(roots[0].mid.re()) < tol);
    CHECK(abs(roots[0].mid.im() + Real(1L, 64)) < tol);
    CHECK(abs(roots[1].mid.im() - Real(1L, 64)) < tol);
}

TEST_CASE("poly_roots: zero roots and high degree binomial") {
    auto roots = poly_roots(IntPoly::binomial(3, 1, 0) * IntPoly({-5, 0, 1}), 20);
    CHECK(roots.size() == 5);
    auto big = poly_roots(IntPoly::binomial(60, 7, mpz_class("1000000000000000000000000000007")), 20);
    CHECK(big.size() == 60);
}

TEST_CASE("poly_roots: precondition") { CHECK_THROWS(poly_roots(IntPoly({5}), 10)); }

TEST_CASE("poly_roots: root product matches the constant term on random polynomials") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> deg_dist(1, 8), coef(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        int n = deg_dist(rng);
        std::vector<mpz_class> c(n + 1);
        for (auto& x : c) x = coef(rng);
        if (c[n] == 0) c[n] = 1;
        if (c[0] == 0) c[0] = 3;
        IntPoly p(c);
        auto roots = poly_roots(p, 30);
        REQUIRE(roots.size() == static_cast<std::size_t>(n));
        // prod (root) * a_n = (-1)^n a_0 ; propagate radii as balls
        Precision bits = 256;
        Real pr(1L, bits), pim(0L, bits);
        Real mag(1L, 64), err(0L, 64);
        for (const auto& r : roots) {
            Complex prod = Complex(pr, pim) * r.mid;
            Real am = abs(r.mid);
            // |(P + e)(z + d) - P z| <= |P| d + |z| e + e d
            err = add_up(add_up(mul_up(mag, r.radius), mul_up(am, err)), mul_up(err, r.radius));
            mag = mul_up(mag, add_up(am, r.radius));
            pr = prod.re();
            pim = prod.im();
        }
        Real expected(mpz_class(n % 2 == 0 ? c[0] : -c[0]), bits);
        expected /= Real(c[n], bits);
        Real slack = add_up(err, ten_pow(-25));
        CHECK(abs(pr - expected) <= slack);
        CHECK(abs(pim) <= slack);
    }
}

TEST_CASE("poly_roots: refining precision stays inside the coarse balls") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpz_class> c(6);
        for (auto& x : c) x = coef(rng);
        c[5] = 1;
        c[0] = c[0] == 0 ? 1 : c[0];
        IntPoly p(c);
        auto coarse = poly_roots(p, 15);
        auto fine = poly_roots(p, 45);
        REQUIRE(coarse.size() == fine.size());
        for (const auto& f : fine) {
            bool inside = false;
            for (const auto& g : coarse) {
                Real d = abs(f.mid - g.mid);
                if (d <= add_up(g.radius, f.radius)) inside = true;
            }
            CHECK(inside);
        }
    }
}

TEST_CASE("log Mahler measure") {
    BigFloat m = log_mahler_measure(IntPoly({-1, -1, 1}), 30);
    Real phi = (Real(1L, 256) + sqrt(Real(5L, 256))) / 2L;
    CHECK(abs(m.mid() - log(phi)) < ten_pow(-28));
    CHECK(m.radius() < ten_pow(-28));
    BigFloat two = log_mahler_measure(IntPoly({-2, 1}), 30);
    CHECK(abs(two.mid() - log(Real(2L, 256))) < ten_pow(-28));
}

TEST_CASE("is_prime: examples and trial division oracle") {
    CHECK(is_prime(std::uint64_t{2}));
    CHECK_FALSE(is_prime(std::uint64_t{561}));
    CHECK(is_prime(std::uint64_t{1000003}));
    CHECK_FALSE(is_prime(std::uint64_t{1}));
    for (std::uint64_t n = 1; n < 20000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t n = rng() % 1000000000000ULL;
        REQUIRE(is_prime(n) == trial_division_prime(n));
    }
    // strong pseudoprimes to several small bases
    for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                            341550071728321ULL, 3825123056546413051ULL})
        CHECK_FALSE(is_prime(n));
    CHECK(is_prime(mpz_class("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime(mpz_class("170141183460469231731687303715884105729")));
    CHECK(next_prime(mpz_class(16)) == 17);
    CHECK(next_prime(mpz_class(2)) == 3);
}

TEST_CASE("smith_normal_form: examples") {
    auto id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.S == IntMatrix::identity(2));
    auto d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(d.S == IntMatrix({{1, 0}, {0, 6}}));
    CHECK(d.U * IntMatrix({{2, 0}, {0, 3}}) * d.V == d.S);
    auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.S == IntMatrix(2, 3));
    CHECK_THROWS(smith_normal_form(IntMatrix()));
}

TEST_CASE("smith_normal_form: properties on random matrices") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> dim(1, 4), val(-6, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = val(rng);
        auto sf = smith_normal_form(m);
        REQUIRE(sf.U * m * sf.V == sf.S);
        REQUIRE(abs(sf.U.determinant()) == 1);
        REQUIRE(abs(sf.V.determinant()) == 1);
        auto diag = sf.diagonal();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) REQUIRE(sf.S(i, j) == 0);
        for (std::size_t i = 0; i < diag.size(); ++i) {
            REQUIRE(diag[i] >= 0);
            if (i + 1 < diag.size() && diag[i] != 0) REQUIRE(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
            if (diag[i] == 0 && i + 1 < diag.size()) REQUIRE(diag[i + 1] == 0);
        }
        if (r == c) {
            mpz_class prod = 1;
            for (const auto& x : diag) prod *= x;
            REQUIRE(prod == abs(m.determinant()));
        }
        // independent route: d_1 ... d_k = k-th determinantal divisor
        if (r <= 3 && c <= 3) {
            mpz_class prod = 1;
            for (std::size_t k = 1; k <= diag.size(); ++k) {
                prod *= diag[k - 1];
                REQUIRE(prod == determinantal_divisor(m, k));
            }
        }
    }
}

TEST_CASE("ball arithmetic encloses exact values") {
    Precision bits = 100;
    BigFloat third = BigFloat::from_rational(mpq_class(1, 3), bits);
    BigFloat sum = third + third + third;
    CHECK(sum.lower() <= Real(1L, 200));
    CHECK(sum.upper() >= Real(1L, 200));
    BigFloat l = log(BigFloat::exact(2, bits));
    Real ref = log(Real(2L, 400));
    CHECK(l.lower() <= ref);
    CHECK(l.upper() >= ref);
    CHECK(compare(BigFloat(Real(1.0, 64), Real(0.5, 64)), BigFloat(Real(1.2, 64), Real(0.5, 64))) ==
          Ordering::inconclusive);
    CHECK(compare(BigFloat::exact(1, 64), BigFloat::exact(2, 64)) == Ordering::less);
    CHECK_THROWS_AS(log(BigFloat(Real(0.0, 64), Real(1.0, 64))), PrecisionError);
}

#include "htlab/heights/algebraic.hpp"

#include "htlab/numeric/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace htlab {

std::string to_string(Irreducibility i) {
    switch (i) {
        case Irreducibility::linear: return "linear";
        case Irreducibility::eisenstein: return "eisenstein";
        case Irreducibility::no_rational_root: return "no rational root";
        case Irreducibility::unverified: return "unverified";
        case Irreducibility::reducible: return "reducible";
    }
    return "unknown";
}

namespace {

bool eisenstein_at(const IntPoly& p, unsigned long q) {
    const int n = p.degree();
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) return false;
    for (int k = 0; k < n; ++k)
        if (!mpz_divisible_ui_p(p[k].get_mpz_t(), q)) return false;
    return !mpz_divisible_ui_p(p[0].get_mpz_t(), q * q);
}

bool eisenstein_somewhere(const IntPoly& p) {
    if (p[0] == 0) return false;
    mpz_class c0 = abs(p[0]);
    for (std::uint32_t q : primes_below(10000)) {
        if (mpz_divisible_ui_p(c0.get_mpz_t(), q) && eisenstein_at(p, q)) return true;
    }
    return false;
}

// p(x + shift)
IntPoly taylor_shift(const IntPoly& p, long shift) {
    IntPoly out;
    IntPoly lin({shift, 1});
    for (std::size_t k = p.coeffs().size(); k-- > 0;) out = out * lin + IntPoly(std::vector<mpz_class>{p[k]});
    return out;
}

}  // namespace

Irreducibility irreducibility_filter(const IntPoly& p) {
    if (p.degree() == 1) return Irreducibility::linear;
    if (!p.rational_roots().empty()) return Irreducibility::reducible;
    if (p.content() != 1) return Irreducibility::reducible;
    for (long shift : {0L, 1L, -1L}) {
        if (eisenstein_somewhere(shift == 0 ? p : taylor_shift(p, shift))) return Irreducibility::eisenstein;
    }
    // a factorization of a cubic or quadratic has a linear factor
    if (p.degree() <= 3) return Irreducibility::no_rational_root;
    return Irreducibility::unverified;
}

AlgebraicNumber AlgebraicNumber::from_minpoly(const IntPoly& minpoly, std::size_t root_index, int digits) {
    if (minpoly.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
    IntPoly prim = minpoly.primitive_part();
    auto roots = poly_roots(prim, digits);
    if (root_index >= roots.size()) throw std::invalid_argument("root index out of range");
    return AlgebraicNumber(prim, roots[root_index], irreducibility_filter(prim));
}

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& r) {
    IntPoly p(std::vector<mpz_class>{-r.get_num(), r.get_den()});
    return from_minpoly(p, 0);
}

HeightValue weil_height(const AlgebraicNumber& a, int digits) {
    BigFloat m = log_mahler_measure(a.minpoly(), digits);
    BigFloat h = m / BigFloat::exact(a.degree(), m.precision());
    return HeightValue(std::move(h));
}

HeightValue weighted_height(const AlgebraicNumber& a, double gamma, int digits) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
    HeightValue h = weil_height(a, digits);
    Precision bits = bits_for_digits(digits);
    Real d(static_cast<long>(a.degree()), bits);
    Real g(gamma, bits);
    Real w = pow(d, g);
    return h.scaled(BigFloat(w, ulp_bound(w) * 4L), digits);
}

}  // namespace htlab

#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner. Nothing here calls the code under test for the quantity
// being checked.

#include "htlab/radical/radical.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <map>
#include <random>
#include <vector>

namespace oracle {

// Element of Q(radicals) as a Q-linear combination of canonical monomials
// prod p^f with 0 <= f < 1. Integral parts of exponents are folded into the
// rational coefficient.
using Monomial = std::map<mpz_class, mpq_class>;
using Element = std::map<Monomial, mpq_class>;

inline mpq_class prime_power_rational(const mpz_class& p, const mpz_class& k) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), mpz_class(abs(k)).get_ui());
    return k >= 0 ? mpq_class(pw) : mpq_class(mpz_class(1), pw);
}

inline Element from_radical(const htlab::RadicalScalar& a, const mpq_class& coeff = 1) {
    Monomial m;
    mpq_class c = coeff;
    for (const auto& [p, e] : a.exponents()) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
        mpq_class frac = e - mpq_class(fl);
        c *= prime_power_rational(p, fl);
        if (frac != 0) m.emplace(p, frac);
    }
    return Element{{m, c}};
}

inline void add_into(Element& acc, const Element& x) {
    for (const auto& [m, c] : x) {
        mpq_class& slot = acc[m];
        slot += c;
        if (slot == 0) acc.erase(m);
    }
}

inline Element multiply(const Element& x, const Element& y) {
    Element out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            Monomial m = mx;
            mpq_class c = cx * cy;
            for (const auto& [p, f] : my) {
                mpq_class s = m.count(p) ? m[p] + f : f;
                if (s >= 1) {
                    s -= 1;
                    c *= p;
                }
                if (s == 0) {
                    m.erase(p);
                } else {
                    m[p] = s;
                }
            }
            Element term{{m, c}};
            add_into(out, term);
        }
    }
    return out;
}

// Rank over Q of the given vectors (fraction-free elimination on rationals).
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            mpq_class f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// Degree of the minimal polynomial of x: the rank of 1, x, ..., x^bound.
inline std::size_t minimal_polynomial_degree(const Element& x, std::size_t bound) {
    std::vector<Element> powers{Element{{Monomial{}, mpq_class(1)}}};
    for (std::size_t k = 1; k <= bound; ++k) powers.push_back(multiply(powers.back(), x));
    std::map<Monomial, std::size_t> index;
    for (const auto& pw : powers)
        for (const auto& [m, c] : pw) index.emplace(m, index.size());
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& pw : powers) {
        std::vector<mpq_class> row(index.size());
        for (const auto& [m, c] : pw) row[index[m]] = c;
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

// [Q(a_1, ..., a_n) : Q] as the largest minimal-polynomial degree of a few
// random integer combinations sum c_i a_i. A random combination is primitive
// with high probability, and no combination can exceed the field degree.
inline std::size_t brute_force_field_degree(const std::vector<htlab::RadicalScalar>& as, std::size_t bound,
                                            std::uint64_t seed, int tries = 4) {
    std::mt19937_64 rng(seed);
    std::size_t best = 1;
    for (int t = 0; t < tries; ++t) {
        Element alpha;
        for (const auto& a : as) add_into(alpha, from_radical(a, mpq_class(static_cast<long>(rng() % 97) + 1)));
        best = std::max(best, minimal_polynomial_degree(alpha, bound));
        if (best == bound) break;
    }
    return best;
}

// Random radical with 1-3 prime factors below `prime_limit`, exponent
// denominators up to `max_den` and numerators in [-max_num, max_num].
inline htlab::RadicalScalar random_radical(std::mt19937_64& rng, const std::vector<unsigned long>& primes,
                                           unsigned max_den = 8, long max_num = 3) {
    htlab::RadicalScalar a;
    while (a.is_one()) {
        int factors = 1 + static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) {
            long num = static_cast<long>(rng() % (2 * max_num + 1)) - max_num;
            long den = 1 + static_cast<long>(rng() % max_den);
            if (num == 0) continue;
            a = a * htlab::RadicalScalar::prime_power(primes[rng() % primes.size()], mpq_class(num, den));
        }
    }
    return a;
}

// Class number of a fundamental discriminant D < 0 from Dirichlet's formula
// h = -(w / 2|D|) sum_{a=1}^{|D|-1} (D/a) a.
inline long dirichlet_class_number(long D) {
    long n = -D;
    long s = 0;
    for (long a = 1; a < n; ++a) s += mpz_kronecker_si(mpz_class(D).get_mpz_t(), a) * a;
    long w = D == -3 ? 6 : D == -4 ? 4 : 2;
    return -(w * s) / (2 * n);
}

// Number of reduced primitive forms, by scanning every (a, b) with a <= |D|
// and testing the reduction conditions directly.
inline long brute_force_form_count(long D) {
    long count = 0;
    for (long a = 1; a <= -D; ++a) {
        for (long b = -a; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (-b == a || a == c)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace oracle

#include "htlab/numeric/primes.hpp"

#include <array>
#include <random>

namespace htlab {

namespace {

constexpr std::array<unsigned long, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr int kExtraRounds = 64;
constexpr std::uint64_t kWitnessSeed = 0x9e3779b97f4a7c15ULL;

bool witness_passes(const mpz_class& n, const mpz_class& n_minus_1, const mpz_class& d, unsigned long s,
                    const mpz_class& a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long p : kBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class n_minus_1 = n - 1;
    mpz_class d = n_minus_1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long p : kBases) {
        if (!witness_passes(n, n_minus_1, d, s, mpz_class(p))) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

    std::mt19937_64 rng(kWitnessSeed);
    gmp_randclass gen(gmp_randinit_mt);
    gen.seed(static_cast<unsigned long>(rng()));
    mpz_class span = n - 3;
    for (int round = 0; round < kExtraRounds; ++round) {
        mpz_class a = gen.get_z_range(span) + 2;
        if (!witness_passes(n, n_minus_1, d, s, a)) return false;
    }
    return true;
}

bool is_prime(std::uint64_t n) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return is_prime(z);
}

mpz_class next_prime(const mpz_class& n) {
    if (n < 2) return 2;
    mpz_class c = n + 1;
    if (c > 2 && mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += (c == 2 ? 1 : 2);
    return c;
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit <= 2) return out;
    std::vector<bool> composite(limit, false);
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace htlab

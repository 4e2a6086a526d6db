#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace htlab {

/// Miller-Rabin primality. Deterministic below 2^64 (first twelve prime
/// bases). Above that, 64 extra rounds with bases drawn from a fixed-seed
/// generator on top of the deterministic set, so the error probability is
/// below 4^-64 = 2^-128 and results are reproducible.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

/// Primes below `limit` by sieve.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

/// Prime factorization of a small integer by trial division, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n);

}  // namespace htlab

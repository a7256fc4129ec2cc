#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace prodring {

using Integer = mpz_class;

/// Caps on the inputs handed to factorization routines.
struct FactorBudget {
    unsigned max_integer_bits = 64;  // hard ceiling: 80 (deterministic Miller-Rabin range)
    unsigned max_poly_degree = 64;
};

inline constexpr unsigned kMaxSupportedIntegerBits = 80;

std::string to_string(const Integer& n);
Integer integer_from_string(const std::string& text);

/// Deterministic primality for |n| < 3.3e24 (fixed Miller-Rabin bases);
/// larger inputs are rejected with FactorizationBudgetExceeded.
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs.
/// Trial division, then Miller-Rabin and Pollard-Brent on the cofactor.
/// Every reported factor is verified by exact division.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorBudget& budget);

/// Distinct prime divisors of |n|, sorted ascending.
std::vector<Integer> prime_divisors(const Integer& n, const FactorBudget& budget);

/// Exponent of p in n (n != 0), dividing it out of n.
unsigned remove_factor(Integer& n, const Integer& p);

/// Primes up to bound (inclusive), sorted.
std::vector<Integer> primes_up_to(std::uint64_t bound);

/// Inverse of a modulo m (m >= 1, gcd(a,m) = 1), in [0, m).
Integer mod_inverse(const Integer& a, const Integer& m);

/// Least nonnegative residue of a modulo m (m >= 1).
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace prodring

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ggk {

using i128 = __int128;
using u128 = unsigned __int128;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp, or nullopt if the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// If n = p^e for a prime p and e >= 1, returns (p, e).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

/// Least t >= 1 with base^t = 1 mod m (requires gcd(base, m) = 1); 1 for m = 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m);

std::string to_string(i128 v);

}  // namespace ggk

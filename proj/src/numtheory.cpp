#include "ggk/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ggk {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
  while (true) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t x = rng() % n;
    std::uint64_t y = x;
    std::uint64_t d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (std::uint64_t small = 2; small < 1000; ++small) {
    if (n % small == 0) {
      primes.push_back(small);
      factor_into(n / small, primes);
      return;
    }
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<std::uint64_t> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t prime : primes) {
    if (!out.empty() && out.back().first == prime) {
      ++out.back().second;
    } else {
      out.emplace_back(prime, 1U);
    }
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [prime, exp] : factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < exp; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  u128 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    result *= base;
    if (result > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto factors = factorize(n);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m) {
  if (m == 1) return 1;
  if (gcd(base % m, m) != 1) throw std::invalid_argument("multiplicative_order: base not a unit");
  // phi(m) via factorization, then strip prime factors
  std::uint64_t phi = 1;
  for (auto [prime, exp] : factorize(m)) {
    phi *= prime - 1;
    for (unsigned i = 1; i < exp; ++i) phi *= prime;
  }
  std::uint64_t order = phi;
  for (auto [prime, exp] : factorize(phi)) {
    for (unsigned i = 0; i < exp; ++i) {
      if (powmod(base, order / prime, m) == 1) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace ggk

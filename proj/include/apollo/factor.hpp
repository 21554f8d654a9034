#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace apollo {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Raised when Pollard rho runs out of its iteration allowance.
class FactorBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t isqrt(std::uint64_t n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization, sorted by prime. Trial division by small primes,
/// then Miller-Rabin and Brent's variant of Pollard rho. `budget` caps the
/// total number of rho iterations spent on one call.
Factorization factorize(std::uint64_t n, std::uint64_t budget = 1u << 26);

/// All divisors of the factored number, unsorted.
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Exponent of p in n (n > 0).
int valuation(std::uint64_t n, std::uint64_t p);

/// Smallest-prime-factor table over [0, limit].
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  Factorization factorize(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace apollo

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "apollo/factor.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// T(c1, c2): the number of x in [0, A/2], A = c1 + c2, with A | x^2 + c1^2
/// and gcd(A, 2x, (x^2 + c1^2)/A) = 1. O(A). Throws std::invalid_argument if A <= 0.
std::int64_t tangency_bruteforce(std::int64_t c1, std::int64_t c2);

/// s_p(e, c1) from the closed-form case table (p prime, e >= 1, c1 != 0).
std::uint64_t sp_closed_form(std::uint64_t p, int e, std::int64_t c1);

/// s_p(e, c1) by scanning x in [0, p^e): x^2 = -c1^2 (mod p^e) and
/// p does not divide gcd(x, (x^2 + c1^2)/p^e).
std::uint64_t sp_bruteforce(std::uint64_t p, int e, std::int64_t c1);

/// s_p(e, c1) by lifting the roots of x^2 = -c1^2 from p to p^e one power at
/// a time; nonsingular odd-prime roots lift uniquely and are counted directly.
std::uint64_t sp_hensel(std::uint64_t p, int e, std::int64_t c1);

/// (1/2) * prod over p^e || A of s_p(e, c1), closed forms.
Rational tangency_estimate(std::int64_t c1, std::int64_t c2, std::uint64_t budget = 1u << 26);

/// Exact T(c1, c2) from the factorization of A = c1 + c2: roots x mod A come
/// in pairs {x, A - x} except x = 0 and x = A/2, so T = (N + z) / 2.
std::int64_t tangency_exact(std::int64_t c1, std::int64_t c2, const Factorization& a_factors);
std::int64_t tangency_exact(std::int64_t c1, std::int64_t c2, std::uint64_t budget = 1u << 26);

/// Multiplicity of c/n in RMC_0(n) for c in [0, n): T(n, -c).
std::vector<std::int64_t> rmc0(std::int64_t n, unsigned threads = 1, std::uint64_t budget = 1u << 26);

struct SpikeClass {
  std::uint64_t p = 0;
  int e = 0;                       // p^e | n - c
  int f = 0;                       // p^f || n
  std::uint64_t modulus = 0;       // p^e
  std::uint64_t residue = 0;       // c = n (mod p^e)
  std::uint64_t magnitude = 0;     // p^min(floor(e/2), f)
};

struct SpikeReport {
  std::int64_t n = 0;
  std::vector<SpikeClass> classes;  // by p, then e

  bool empty() const { return classes.empty(); }
  /// Distinct primes that produce spikes.
  std::vector<std::uint64_t> primes() const;
};

/// One class per prime p | n with p^2 <= n and each e in [2, max(2, 2f)] with
/// p^e <= n. Throws std::invalid_argument for n < 2.
SpikeReport predict_spikes(std::int64_t n, std::uint64_t budget = 1u << 26);

/// All c in [0, n) with c = n (mod modulus).
std::vector<std::int64_t> spike_positions(std::int64_t n, std::uint64_t modulus);

/// Columns p,e,f,positions_modulus,magnitude_class.
void write_spike_csv(std::ostream& os, const SpikeReport& report);

}  // namespace apollo

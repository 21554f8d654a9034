#include "apollo/tangency.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "apollo/parallel.hpp"

namespace apollo {

namespace {

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) throw OverflowError("prime power exceeds 64 bits");
    r *= p;
  }
  return r;
}

std::uint64_t abs_u(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

// p does not divide gcd(x, (x^2 + c^2) / pe), given pe | x^2 + c^2.
bool passes_gcd_condition(u128 x, u128 c, std::uint64_t p, std::uint64_t pe) {
  if (x % p != 0) return true;
  return ((x * x + c * c) / pe) % p != 0;
}

}  // namespace

std::int64_t tangency_bruteforce(std::int64_t c1, std::int64_t c2) {
  const i128 a = i128(c1) + c2;
  if (a <= 0) throw std::invalid_argument("tangency: c1 + c2 must be positive");
  const i128 c1sq = i128(c1) * c1;
  std::int64_t count = 0;
  for (i128 x = 0; 2 * x <= a; ++x) {
    const i128 num = x * x + c1sq;
    if (num % a != 0) continue;
    if (gcd128(gcd128(a, 2 * x), num / a) == 1) ++count;
  }
  return count;
}

std::uint64_t sp_closed_form(std::uint64_t p, int e, std::int64_t c1) {
  if (e < 1) throw std::invalid_argument("sp_closed_form: e must be >= 1");
  if (c1 == 0) throw std::invalid_argument("sp_closed_form: c1 must be nonzero");
  const int f = valuation(abs_u(c1), p);
  if (p == 2) {
    if (e >= 2 * f + 2) return 0;
    if (e == 2 * f + 1) return ipow(2, f);
    return e % 2 == 0 ? ipow(2, e / 2 - 1) : 0;
  }
  const bool one_mod_four = p % 4 == 1;
  if (e >= 2 * f + 1) {
    if (!one_mod_four) return 0;
    // 2 (p - [f > 0]) p^(f-1)
    return f == 0 ? 2 : 2 * (p - 1) * ipow(p, f - 1);
  }
  if (e == 2 * f) return one_mod_four ? (p - 2) * ipow(p, f - 1) : ipow(p, f);
  return e % 2 == 0 ? (p - 1) * ipow(p, e / 2 - 1) : 0;
}

std::uint64_t sp_bruteforce(std::uint64_t p, int e, std::int64_t c1) {
  const std::uint64_t pe = ipow(p, e);
  const u128 c = abs_u(c1);
  const u128 c2mod = (c * c) % pe;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < pe; ++x) {
    if ((u128(x) * x + c2mod) % pe != 0) continue;
    if (passes_gcd_condition(x, c, p, pe)) ++count;
  }
  return count;
}

std::uint64_t sp_hensel(std::uint64_t p, int e, std::int64_t c1) {
  if (e < 1) throw std::invalid_argument("sp_hensel: e must be >= 1");
  const u128 c = abs_u(c1);
  if (p != 2 && c % p != 0) return p % 4 == 1 ? 2 : 0;

  // Roots mod p: x = 0 when p | c, x = 1 when p = 2 and c is odd.
  std::vector<std::uint64_t> roots{c % p == 0 ? 0u : 1u};
  std::uint64_t pk = p;
  for (int k = 1; k < e; ++k) {
    const std::uint64_t next_pk = pk * p;
    const u128 c2mod = (c * c) % next_pk;
    std::vector<std::uint64_t> lifted;
    for (std::uint64_t r : roots) {
      for (std::uint64_t j = 0; j < p; ++j) {
        const std::uint64_t x = r + j * pk;
        if ((u128(x) * x + c2mod) % next_pk == 0) lifted.push_back(x);
      }
    }
    roots = std::move(lifted);
    if (roots.empty()) return 0;
    pk = next_pk;
  }
  std::uint64_t count = 0;
  for (std::uint64_t x : roots) {
    if (passes_gcd_condition(x, c, p, pk)) ++count;
  }
  return count;
}

Rational tangency_estimate(std::int64_t c1, std::int64_t c2, std::uint64_t budget) {
  const std::int64_t a = c1 + c2;
  if (a <= 0) throw std::invalid_argument("tangency: c1 + c2 must be positive");
  i128 prod = 1;
  for (auto [p, e] : factorize(std::uint64_t(a), budget)) {
    prod = checked_mul(prod, i128(c1 == 0 ? sp_hensel(p, e, 0) : sp_closed_form(p, e, c1)));
  }
  return Rational(prod, 2);
}

std::int64_t tangency_exact(std::int64_t c1, std::int64_t c2, const Factorization& a_factors) {
  const i128 a = i128(c1) + c2;
  if (a <= 0) throw std::invalid_argument("tangency: c1 + c2 must be positive");
  i128 roots = 1;
  for (auto [p, e] : a_factors) roots = checked_mul(roots, i128(sp_hensel(p, e, c1)));

  const i128 c1sq = i128(c1) * c1;
  // Roots at x = 0 and x = A/2 are their own partners.
  auto is_root = [&](i128 x) {
    const i128 num = x * x + c1sq;
    return num % a == 0 && gcd128(gcd128(a, x), num / a) == 1;
  };
  i128 self_paired = is_root(0) ? 1 : 0;
  if (a % 2 == 0 && a != 0 && is_root(a / 2)) ++self_paired;
  return std::int64_t((roots + self_paired) / 2);
}

std::int64_t tangency_exact(std::int64_t c1, std::int64_t c2, std::uint64_t budget) {
  const std::int64_t a = c1 + c2;
  if (a <= 0) throw std::invalid_argument("tangency: c1 + c2 must be positive");
  return tangency_exact(c1, c2, factorize(std::uint64_t(a), budget));
}

std::vector<std::int64_t> rmc0(std::int64_t n, unsigned threads, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("rmc0: n must be positive");
  std::vector<std::int64_t> mult(n, 0);
  constexpr std::int64_t kSieveLimit = 200'000'000;
  std::unique_ptr<SpfSieve> sieve;
  if (n <= kSieveLimit) sieve = std::make_unique<SpfSieve>(std::uint32_t(n));
  const std::size_t chunks = std::max<std::size_t>(1, 16 * std::size_t(threads));
  parallel_chunks(0, n, chunks, threads, [&](std::size_t, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t c = lo; c < hi; ++c) {
      const std::uint64_t a = std::uint64_t(n - c);
      const Factorization f = sieve ? sieve->factorize(std::uint32_t(a)) : factorize(a, budget);
      mult[c] = tangency_exact(n, -c, f);
    }
  });
  return mult;
}

std::vector<std::uint64_t> SpikeReport::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : classes) {
    if (out.empty() || out.back() != c.p) out.push_back(c.p);
  }
  return out;
}

SpikeReport predict_spikes(std::int64_t n, std::uint64_t budget) {
  if (n < 2) throw std::invalid_argument("predict_spikes: n must be >= 2");
  SpikeReport report{n, {}};
  for (auto [p, f] : factorize(std::uint64_t(n), budget)) {
    if (u128(p) * p > u128(n)) continue;
    const int e_max = std::max(2, 2 * f);
    u128 pe = u128(p) * p;
    for (int e = 2; e <= e_max && pe <= u128(n); ++e, pe *= p) {
      SpikeClass sc;
      sc.p = p;
      sc.e = e;
      sc.f = f;
      sc.modulus = std::uint64_t(pe);
      sc.residue = std::uint64_t(n) % sc.modulus;
      sc.magnitude = ipow(p, std::min(e / 2, f));
      report.classes.push_back(sc);
    }
  }
  return report;
}

std::vector<std::int64_t> spike_positions(std::int64_t n, std::uint64_t modulus) {
  std::vector<std::int64_t> out;
  if (modulus == 0) return out;
  for (std::int64_t c = std::int64_t(std::uint64_t(n) % modulus); c < n; c += std::int64_t(modulus)) out.push_back(c);
  return out;
}

void write_spike_csv(std::ostream& os, const SpikeReport& report) {
  os << "p,e,f,positions_modulus,magnitude_class\n";
  for (const auto& c : report.classes) {
    os << c.p << ',' << c.e << ',' << c.f << ',' << c.modulus << ',' << c.magnitude << '\n';
  }
}

}  // namespace apollo

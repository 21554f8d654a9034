#include "apollo/class_enum.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "apollo/factor.hpp"
#include "apollo/parallel.hpp"

namespace apollo {

namespace {

// Largest a with 3a^2 <= 4n^2.
std::int64_t max_reduced_a(std::int64_t n) {
  std::int64_t a = static_cast<std::int64_t>(isqrt(std::uint64_t((4 * __int128(n) * n) / 3)));
  while (3 * __int128(a + 1) * (a + 1) <= 4 * __int128(n) * n) ++a;
  while (3 * __int128(a) * a > 4 * __int128(n) * n) --a;
  return a;
}

// Largest x with 3x^2 <= n^2.
std::int64_t max_half_b(std::int64_t n) {
  std::int64_t x = static_cast<std::int64_t>(isqrt(std::uint64_t((__int128(n) * n) / 3)));
  while (3 * __int128(x + 1) * (x + 1) <= __int128(n) * n) ++x;
  while (3 * __int128(x) * x > __int128(n) * n) --x;
  return x;
}

std::vector<BinaryQuadraticForm> kway_merge(std::vector<std::vector<BinaryQuadraticForm>> parts) {
  using Head = std::pair<BinaryQuadraticForm, std::size_t>;
  auto cmp = [](const Head& l, const Head& r) { return r.first < l.first; };
  std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
  std::vector<std::size_t> pos(parts.size(), 0);
  std::size_t total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    total += parts[k].size();
    if (!parts[k].empty()) heap.emplace(parts[k][0], k);
  }
  std::vector<BinaryQuadraticForm> out;
  out.reserve(total);
  while (!heap.empty()) {
    auto [form, k] = heap.top();
    heap.pop();
    out.push_back(form);
    if (++pos[k] < parts[k].size()) heap.emplace(parts[k][pos[k]], k);
  }
  return out;
}

}  // namespace

ClassList enumerate_classes_naive(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kNaiveEnumerationLimit)
    throw std::invalid_argument("naive enumeration is limited to n <= " + std::to_string(kNaiveEnumerationLimit));
  ClassList out{n, {}};
  const std::int64_t four_n2 = 4 * n * n;
  const std::int64_t a_max = max_reduced_a(n);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = 0; b <= a; b += 2) {
      std::int64_t num = b * b + four_n2;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.forms.push_back({a, b, c});
    }
  }
  std::sort(out.forms.begin(), out.forms.end());
  return out;
}

ClassList enumerate_classes_fast(std::int64_t n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::int64_t x_max = max_half_b(n);
  if (__int128(x_max) * x_max + __int128(n) * n > __int128(UINT64_MAX))
    throw OverflowError("x^2 + n^2 exceeds 64 bits for n = " + std::to_string(n));

  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::int64_t>(x_max + 1, 8 * std::int64_t(threads)));
  std::vector<std::vector<BinaryQuadraticForm>> parts(chunks);
  const std::uint64_t n2 = std::uint64_t(n) * std::uint64_t(n);

  parallel_chunks(0, x_max + 1, chunks, threads, [&](std::size_t k, std::int64_t lo, std::int64_t hi) {
    auto& part = parts[k];
    for (std::int64_t x = lo; x < hi; ++x) {
      const std::uint64_t big_n = std::uint64_t(x) * std::uint64_t(x) + n2;
      const std::uint64_t b = 2 * std::uint64_t(x);
      for (std::uint64_t a : divisors(factorize(big_n))) {
        if (a < b || a > big_n / a) continue;
        const std::uint64_t c = big_n / a;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        part.push_back({i128(a), i128(b), i128(c)});
      }
    }
    std::sort(part.begin(), part.end());
  });
  return {n, kway_merge(std::move(parts))};
}

std::vector<DescartesQuadruple> id_set(const ClassList& classes) {
  std::vector<DescartesQuadruple> out;
  out.reserve(classes.size());
  for (const auto& f : classes.forms) out.push_back(theta({classes.n, f}));
  return out;
}

std::vector<DescartesQuadruple> id_set(std::int64_t n, unsigned threads) {
  return id_set(enumerate_classes_fast(n, threads));
}

}  // namespace apollo

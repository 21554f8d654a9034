#pragma once

#include <cstdint>
#include <vector>

#include "apollo/bqf.hpp"

namespace apollo {

/// Reduced primitive forms of discriminant -4n^2, sorted by (A, B, C).
/// Their count is h^{+-}(-4n^2), the number of Ap_1 classes of primitive
/// integral n-quadruples.
struct ClassList {
  std::int64_t n = 0;
  std::vector<BinaryQuadraticForm> forms;

  std::size_t size() const { return forms.size(); }
};

inline constexpr std::int64_t kNaiveEnumerationLimit = 20000;

/// Exhaustive double loop over (A, B). Throws std::invalid_argument for
/// n < 1 or n > kNaiveEnumerationLimit.
ClassList enumerate_classes_naive(std::int64_t n);

/// For each x in [0, n/sqrt(3)] factors x^2 + n^2 and keeps divisors A with
/// 2x <= A <= (x^2 + n^2)/A. The x-range is split into chunks processed in
/// parallel and merged in sorted order, so the result does not depend on the
/// thread count. Throws OverflowError if x^2 + n^2 leaves 64 bits and
/// FactorBudgetExceeded if a factorization runs out of budget.
ClassList enumerate_classes_fast(std::int64_t n, unsigned threads = 1);

/// theta[n, A, B, C] for every class form: one primitive n-quadruple per class.
std::vector<DescartesQuadruple> id_set(const ClassList& classes);
std::vector<DescartesQuadruple> id_set(std::int64_t n, unsigned threads = 1);

}  // namespace apollo

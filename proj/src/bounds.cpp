#include "lpc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lpc/errors.hpp"

namespace lpc {

std::int64_t permanent(const WeightMatrix& w) {
  if (w.rows != w.cols) throw DimensionError("permanent needs a square matrix");
  const std::size_t n = w.rows;
  if (n > 20) throw BudgetExceeded("permanent: size " + std::to_string(n) + " exceeds the cap of 20",
                                   static_cast<double>(n));
  if (n == 0) return 1;
  // Ryser with Gray-code updates of the row sums.
  std::vector<__int128> row_sum(n, 0);
  __int128 total = 0;
  std::uint32_t gray = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    const auto j = static_cast<std::size_t>(std::countr_zero(s));
    gray ^= std::uint32_t{1} << j;
    const bool added = (gray >> j) & 1u;
    for (std::size_t i = 0; i < n; ++i) row_sum[i] += added ? w.at(i, j) : -w.at(i, j);
    __int128 prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const int size = std::popcount(gray);
    total += ((n - static_cast<std::size_t>(size)) % 2 == 0) ? prod : -prod;
  }
  return static_cast<std::int64_t>(total);
}

std::int64_t perm_upper_trivial(const WeightMatrix& w) {
  if (w.rows != w.cols) throw DimensionError("perm_upper_trivial needs a square matrix");
  std::int64_t p = 1;
  for (std::size_t j = 0; j < w.cols; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.rows; ++i) s += w.at(i, j);
    p *= s;
  }
  return p;
}

std::optional<std::int64_t> qc_distance_bound(const WeightMatrix& w) {
  const std::size_t m = w.rows, n = w.cols;
  if (m >= n)
    throw DomainError("qc_distance_bound needs m < n; with m = n the permanent bound does not apply");
  if (n > 24 || m > 10)
    throw BudgetExceeded("qc_distance_bound: caps are n <= 24 and m <= 10", static_cast<double>(n));
  std::optional<std::int64_t> best;
  std::vector<std::size_t> subset(m + 1);
  for (std::size_t i = 0; i <= m; ++i) subset[i] = i;
  WeightMatrix sub(m, m);
  for (;;) {
    std::int64_t sum = 0;
    for (std::size_t skip = 0; skip <= m; ++skip) {
      std::size_t c = 0;
      for (std::size_t t = 0; t <= m; ++t) {
        if (t == skip) continue;
        for (std::size_t r = 0; r < m; ++r) sub.at(r, c) = w.at(r, subset[t]);
        ++c;
      }
      sum += permanent(sub);
    }
    if (sum != 0 && (!best || sum < *best)) best = sum;
    // Next subset in lexicographic order.
    std::size_t i = m + 1;
    while (i-- > 0 && subset[i] == n - (m + 1) + i) {
    }
    if (i > m) break;
    ++subset[i];
    for (std::size_t j = i + 1; j <= m; ++j) subset[j] = subset[j - 1] + 1;
  }
  return best;
}

namespace {

std::size_t shifted_weight(const std::vector<AlgElem>& a, std::size_t t) {
  std::size_t wt = 0;
  for (const AlgElem& e : a) {
    const AlgElem s = e + alg_mul(AlgElem::monomial(e.group(), t), e);
    wt += s.weight();
  }
  return wt;
}

std::size_t check_blocks(const std::vector<AlgElem>& a) {
  if (a.empty()) throw DomainError("autocorrelation: empty vector");
  const GroupSpec& g = a[0].group();
  if (!g.is_cyclic()) throw Unsupported("autocorrelation needs a cyclic group");
  std::size_t total = 0;
  for (const AlgElem& e : a) {
    if (!(e.group() == g)) throw DimensionError("autocorrelation: mixed groups");
    if (2 * e.weight() > g.order())
      throw DomainError("autocorrelation: block weight " + std::to_string(e.weight()) + " exceeds l/2 = " +
                        std::to_string(g.order()) + "/2");
    total += e.weight();
  }
  return total;
}

}  // namespace

std::size_t autocorr_witness(const std::vector<AlgElem>& a) {
  const std::size_t wt = check_blocks(a);
  if (wt == 0) throw DomainError("autocorrelation: a = 0 needs no witness");
  const std::size_t l = a[0].group().order();
  for (std::size_t t = 1; t < l; ++t)
    if (shifted_weight(a, t) >= wt) return t;
  throw InvariantViolation("autocorrelation: no shift t satisfies |(1+x^t)a| >= |a|");
}

std::size_t autocorr_sum(const std::vector<AlgElem>& a) {
  check_blocks(a);
  std::size_t s = 0;
  for (std::size_t t = 0; t < a[0].group().order(); ++t) s += shifted_weight(a, t);
  return s;
}

}  // namespace lpc

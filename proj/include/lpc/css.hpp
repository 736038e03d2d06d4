#pragma once

// CSS codes: construction, dimension, distances, limitedness, the codeword
// classifier for LP(A, 1+x), and alist exchange.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpc/bitmatrix.hpp"
#include "lpc/groupring.hpp"

namespace lpc {

enum class Side { Z, X };

std::string to_string(Side s);

/// A pair (HX, HZ) with HX HZ^T = 0. Z-codewords lie in ker HX, X-codewords
/// in ker HZ.
class CssCode {
 public:
  /// Throws DimensionError on a column mismatch and InvariantViolation (naming
  /// the first offending row pair) when HX HZ^T != 0.
  CssCode(BinMatrix hx, BinMatrix hz);

  const BinMatrix& hx() const noexcept { return hx_; }
  const BinMatrix& hz() const noexcept { return hz_; }
  std::size_t n() const noexcept { return hx_.cols(); }
  /// Check matrix whose kernel holds the side's codewords.
  const BinMatrix& check(Side s) const noexcept { return s == Side::Z ? hx_ : hz_; }
  /// Matrix whose row space holds the side's degenerate codewords.
  const BinMatrix& stabilizers(Side s) const noexcept { return s == Side::Z ? hz_ : hx_; }

  bool operator==(const CssCode&) const = default;

 private:
  BinMatrix hx_;
  BinMatrix hz_;
};

inline CssCode css_new(BinMatrix hx, BinMatrix hz) { return CssCode(std::move(hx), std::move(hz)); }
/// Classical code C(H) as the CSS code (H, empty); its Z-distance is d(C(H)).
CssCode classical_code(const BinMatrix& h);

/// k = n - rk HX - rk HZ.
std::size_t css_dimension(const CssCode& q);
CssCode css_swap(const CssCode& q);

enum class DistanceKind { Exact, UpperBound, LowerBound };

std::string to_string(DistanceKind k);

struct DistanceResult {
  /// nullopt means infinity (no non-degenerate codeword exists).
  std::optional<std::size_t> weight;
  DistanceKind kind = DistanceKind::Exact;
  /// A codeword of the reported weight when one was found.
  BitVec witness;

  bool infinite() const noexcept { return !weight.has_value(); }
};

/// 0 selects std::thread::hardware_concurrency().
unsigned resolve_jobs(unsigned jobs);

/// Basis of ker(check) split as [logical representatives, stabilizer basis].
struct KernelSplit {
  std::vector<BitVec> logicals;
  std::vector<BitVec> stabilizers;
};
KernelSplit split_kernel(const CssCode& q, Side s);

/// Exact side distance by Gray-code enumeration of ker(check). Throws
/// BudgetExceeded when dim ker(check) > budget.
DistanceResult exact_distance(const CssCode& q, Side s, std::size_t budget = 26, unsigned jobs = 0);

/// Depth-first search over supports of size <= max_weight, extending only
/// through columns of the first unsatisfied check. Exact when a codeword of
/// weight <= max_weight exists; otherwise a LowerBound of max_weight + 1.
DistanceResult min_weight_search(const CssCode& q, Side s, std::size_t max_weight, unsigned jobs = 0);

/// Randomized information-set search over a kernel generator in reduced
/// echelon form, inspecting rows and pairwise row sums. Every block of 256
/// trials starts from a fresh random information set and then moves by
/// single pivot swaps. Deterministic for a fixed seed regardless of jobs.
/// Stops early once a codeword of weight <= stop_at is seen.
DistanceResult distance_upper(const CssCode& q, Side s, std::uint64_t seed, std::size_t trials,
                              unsigned jobs = 0, std::size_t stop_at = 0);

/// Largest row or column weight among HX and HZ.
std::size_t limitedness(const CssCode& q);
/// Largest Tanner-graph degree counting a qubit's X and Z checks together.
std::size_t max_tanner_degree(const CssCode& q);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<DistanceResult> dz;
  std::optional<DistanceResult> dx;
  std::size_t w = 0;
};
CodeParams code_params(const CssCode& q);

/// Structure of a non-degenerate Z-codeword of lp_ab(A, 1+x).
struct CodewordClass {
  int which = 0;  // 1 or 2
  /// Case 1: u(1), a nonzero codeword of C(A(1)).
  BitVec u_at_one;
  /// Case 2: u = (1+x) h with |h_i| <= l/2, and v = 1_l v' + A h.
  std::vector<AlgElem> h;
  BitVec v_prime;
};

/// Throws DomainError when z is not a Z-codeword, is degenerate, or has the
/// wrong length.
CodewordClass classify_codeword(const AlgMatrix& a, const BitVec& z);

BinMatrix read_alist(std::istream& in);
void write_alist(std::ostream& out, const BinMatrix& m);
BinMatrix read_alist_file(const std::string& path);
void write_alist_file(const std::string& path, const BinMatrix& m);

}  // namespace lpc

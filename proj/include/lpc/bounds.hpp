#pragma once

// Distance upper bounds for quasi-cyclic codes from permanents of the weight
// matrix, and the autocorrelation shift witness for vectors over R_l.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpc/groupring.hpp"

namespace lpc {

/// Ryser's formula; square matrices up to 20 x 20. Throws DimensionError
/// when not square and BudgetExceeded above the cap.
std::int64_t permanent(const WeightMatrix& w);
/// Product of the column sums.
std::int64_t perm_upper_trivial(const WeightMatrix& w);

/// min* over (m+1)-subsets S of the columns of sum_{i in S} perm W_{S \ i};
/// nullopt is infinity. Needs m < n, n <= 24, m <= 10.
std::optional<std::int64_t> qc_distance_bound(const WeightMatrix& w);

/// A shift t in 1..l-1 with |(1 + x^t) a| >= |a|. Every block must satisfy
/// |a_i| <= l/2 (DomainError otherwise); a = 0 is rejected as well.
std::size_t autocorr_witness(const std::vector<AlgElem>& a);
/// sum over t in 0..l-1 of |(1 + x^t) a|.
std::size_t autocorr_sum(const std::vector<AlgElem>& a);

}  // namespace lpc

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gpm/cost_model.hpp"
#include "gpm/graph.hpp"
#include "gpm/pattern.hpp"
#include "gpm/schedule.hpp"

namespace gpm {

using SetView = std::span<const Vertex>;

/// |A_{i1,j1} ∩ ... ∩ A_{im,jm}| where A_{i,j} is the set of tuples of
/// S_1 x ... x S_k with e_i == e_j. Pairs use 0-based set indices. The pairs
/// define a graph on the k sets; each connected component contributes the
/// size of the intersection of its sets.
std::int64_t cardinality_of_event_intersection(std::span<const std::pair<int, int>> pairs,
                                               std::span<const SetView> sets);

/// Number of tuples of S_1 x ... x S_k with pairwise distinct entries, by
/// inclusion-exclusion over every subset of the k(k-1)/2 equality events.
/// Throws OverflowError if an intermediate leaves int64.
std::int64_t iep_count_tail(std::span<const SetView> sets);

/// The inclusion-exclusion sum for fixed k, grouped by the set partition each
/// subset of equality events induces: |S_IEP| = Σ coef * Π_blocks |∩ block|.
/// Evaluating this is equivalent to iep_count_tail but touches each partition
/// once instead of each of the 2^(k(k-1)/2) subsets.
class IepFormula {
 public:
  struct Term {
    std::int64_t coefficient = 0;
    /// Blocks as bitmasks over the k sets.
    std::vector<std::uint8_t> blocks;
  };

  IepFormula() = default;
  explicit IepFormula(int k);

  int k() const { return k_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Every distinct block mask appearing in any term, ascending.
  const std::vector<std::uint8_t>& block_masks() const { return block_masks_; }

  /// `block_sizes[mask]` must hold |∩_{i in mask} S_i| for every block mask.
  std::int64_t evaluate(std::span<const std::int64_t> block_sizes) const;

 private:
  int k_ = 0;
  std::vector<Term> terms_;
  std::vector<std::uint8_t> block_masks_;
};

/// Restrictions checked in the first n-k loops of `config`.
RestrictionSet outer_restrictions(const Configuration& config, int k);

/// Automorphisms not eliminated by the outer restrictions (no_conflict).
Count iep_correction_factor(const Pattern& p, const Configuration& config, int k);

/// True iff dividing by `x` is exact for every data graph: each automorphism
/// orbit of orderings has exactly x members satisfying the outer restrictions.
bool iep_correction_is_exact(const Pattern& p, const Configuration& config, int k, Count x);

/// Tail width of the schedule if IEP can replace the innermost loops with a
/// correct correction factor, otherwise 0.
int iep_eligible_width(const Pattern& p, const Configuration& config);

/// Model cost when the innermost k loops are replaced by inclusion-exclusion.
/// The outer loops fold as usual with only their own restrictions filtering;
/// the tail is charged one pass over each tail set plus the merge inputs of
/// every multi-set block the formula needs.
double estimate_iep_cost(const GraphStats& stats, const Pattern& p, const Configuration& config, int k);

}  // namespace gpm

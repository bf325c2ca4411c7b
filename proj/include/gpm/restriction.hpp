#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gpm/graph.hpp"
#include "gpm/pattern.hpp"

namespace gpm {

/// id(greater) > id(lesser) on the data vertices matched to two pattern vertices.
struct Restriction {
  int greater = 0;
  int lesser = 0;

  friend auto operator<=>(const Restriction&, const Restriction&) = default;
};

/// Set of restrictions over at most eight pattern vertices. Stored as a 64-bit
/// mask (bit greater*8+lesser), so iteration order is the canonical
/// lexicographic (greater, lesser) order and equality is syntactic.
class RestrictionSet {
 public:
  RestrictionSet() = default;
  RestrictionSet(std::initializer_list<Restriction> rs);
  explicit RestrictionSet(const std::vector<Restriction>& rs);

  void insert(Restriction r);
  bool contains(Restriction r) const { return (mask_ >> bit(r)) & 1U; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }
  std::vector<Restriction> items() const;

  /// True iff the relation has no directed cycle.
  bool acyclic() const;

  /// "v0 > v1, v1 > v2"; "none" when empty.
  std::string to_string() const;

  friend bool operator==(const RestrictionSet&, const RestrictionSet&) = default;
  /// Lexicographic over the canonical item lists.
  friend std::strong_ordering operator<=>(const RestrictionSet& a, const RestrictionSet& b);

 private:
  static unsigned bit(Restriction r) { return static_cast<unsigned>(r.greater * kMaxPatternSize + r.lesser); }
  std::uint64_t mask_ = 0;
};

/// The permutation survives `rs` iff the digraph holding
/// both r and perm(r) for every r in rs is acyclic.
bool no_conflict(const Permutation& perm, const RestrictionSet& rs);

/// Automorphisms that survive `rs`.
PermutationGroup surviving(const PermutationGroup& group, const RestrictionSet& rs);

/// Number of the n! relative orderings of n vertices that satisfy `rs`
/// (linear extensions, by subset DP).
Count count_linear_extensions(int n, const RestrictionSet& rs);

/// Runs the matcher on K_n with and without `rs`; true iff
/// with == without / |Aut| exactly.
bool validate(const Pattern& p, const RestrictionSet& rs);

struct RestrictionGenOptions {
  /// Cap on emitted sets, counted in discovery order.
  std::size_t max_sets = 64;
};

/// Every distinct complete restriction set found by 2-cycle elimination.
/// Sorted canonically. A single empty set when |Aut| = 1.
/// Throws InternalError if |Aut| > 1 and no branch yields a valid set.
std::vector<RestrictionSet> res_set_generation(const Pattern& p, const RestrictionGenOptions& opts = {});

}  // namespace gpm

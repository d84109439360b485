#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omuco/core.hpp"

namespace omuco {

/// An outcome together with one solution that attains it.
struct LabeledOutcome {
  OutcomeVector outcome;
  SolutionVector preimage;
};

struct SolveStats {
  std::uint64_t subproblems = 0;  // right-hand sides enumerated
  std::uint64_t feasible = 0;     // subproblems with a solution
  std::uint64_t candidates = 0;   // outcomes handed to the filter
  std::uint64_t dominated_removed = 0;
  std::uint64_t duplicates_collapsed = 0;
  double wall_seconds = 0.0;
};

/// Nondominated outcomes in canonical (lexicographic) order, each paired with
/// one efficient representative: a minimal complete set.
struct ParetoResult {
  std::vector<OutcomeVector> nondominated;
  std::vector<SolutionVector> representatives;
  SolveStats stats;

  std::size_t size() const { return nondominated.size(); }
};

/// a <= b componentwise and a != b. Both must have the same layout.
bool dominates(const OutcomeVector& a, const OutcomeVector& b);

/// Sorts items by (outcome, preimage) and drops repeated outcomes, keeping the
/// first preimage of each.
std::vector<LabeledOutcome> canonicalize(std::vector<LabeledOutcome> items, std::uint64_t* collapsed = nullptr);

/// Reduces `items` to its nondominated outcomes. Uses the grid sweep when the
/// outcomes fit a small enough integer box, and pairwise comparison otherwise;
/// both give identical results.
ParetoResult filter_nondominated(std::vector<LabeledOutcome> items);

/// Comparison against the running archive of nondominated outcomes, after a
/// lexicographic sort. O(m * |archive| * d).
ParetoResult filter_nondominated_pairwise(std::vector<LabeledOutcome> items);

/// Prefix-minimum sweep over an integer grid.
///
/// Applies when all outcome components but at most one are integers and the
/// grid spanned by those components (after merging columns that are equal or
/// opposite on every item) has at most `max_cells` cells. Returns nullopt
/// otherwise. O(cells * axes + m * axes).
std::optional<ParetoResult> filter_nondominated_grid(std::vector<LabeledOutcome> items,
                                                     std::size_t max_cells = std::size_t{1} << 24);

}  // namespace omuco

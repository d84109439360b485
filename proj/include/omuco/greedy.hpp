#pragma once

#include <optional>
#include <vector>

#include "omuco/core.hpp"
#include "omuco/dominance.hpp"
#include "omuco/rhs_enum.hpp"
#include "omuco/subproblem.hpp"

namespace omuco {

// Greedy fast path for two objectives: one ordinal objective is turned into
// equality constraints, and each resulting subproblem is a basis problem of a
// partition matroid whose blocks are the categories of that objective.

/// groups[i] lists the 0-based items of constrained category i+1, best first
/// with respect to the other objective; ties by ascending item index.
struct CategoryPartition {
  std::vector<std::vector<int>> groups;
  int n = 0;
};

/// The instance with the constrained ordinal objective in the tilde slot.
/// When alpha is 0 the hat objective is moved there, which leaves the outcome
/// layout unchanged. Throws std::invalid_argument unless the instance has
/// exactly two objectives, at least one of them ordinal.
Instance constrained_view(const Instance& inst);

/// Partitions by tilde category and sorts each block by gamma*f, or by the
/// hat category in its preferred direction when gamma is 0.
/// Expects an instance as returned by constrained_view().
CategoryPartition partition_and_sort(const Instance& inst);

/// Takes the first cd.supplies[i] items of every block; nullopt when some
/// block is too small.
std::optional<SolutionVector> greedy_fill(const CategoryPartition& part, const CategoryDemand& cd);

struct GreedyCandidate {
  RhsVector rhs;
  SolutionVector solution;
  OutcomeVector outcome;
};

/// Runs greedy_fill over every b~ with alpha*b~ in U~ (or U~_w), in lattice
/// order, and returns the solutions found before any filtering.
/// `enumerated`, when given, receives the number of right-hand sides tried.
std::vector<GreedyCandidate> greedy_candidates(const Instance& inst, std::uint64_t* enumerated = nullptr);

/// Greedy candidates reduced to a minimal complete set.
ParetoResult solve_biobjective(const Instance& inst);

}  // namespace omuco

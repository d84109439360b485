#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "omuco/core.hpp"
#include "omuco/dominance.hpp"

namespace omuco {

enum class Algorithm { kAuto, kEpsilon, kGreedy, kBrute };

Algorithm algorithm_from_string(std::string_view name);
std::string to_string(Algorithm a);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kAuto;
  /// Augmentation parameter of the augmented inequality scalarization. When
  /// set, subproblems use the inequality form and every collected solution is
  /// efficient. Must satisfy 0 < delta < 1/((K~+K^)*n).
  std::optional<Rational> augmentation;
  /// Number of threads sharing the subproblems. Output does not depend on it.
  int workers = 1;
  /// Replaces the instance's cardinality constraint when set.
  std::optional<int> cardinality;
  /// Largest n accepted by the brute-force path.
  int brute_force_limit = 20;
};

/// Thrown by solve() for instances that fail validate().
class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// 1/(((K~+K^)*n + 1) * q), where q is the common denominator of f (1 when f
/// is integral or absent). Any two distinct values of gamma*f differ by at
/// least 1/q, so no nondominated point is lost.
Rational default_augmentation(const Instance& inst);

/// Computes the nondominated set and a minimal complete set.
///
/// Under kAuto: without a cardinality constraint and with no conflict between
/// senses the answer is all-zeros or all-ones outright; a lone f objective is
/// solved directly; two objectives go to the greedy path unless augmentation
/// is on; everything else is enumerated over U^e with one min-cost flow per
/// right-hand side.
ParetoResult solve(const Instance& inst, const SolverConfig& cfg = {});

/// Right-hand-side enumeration with one flow per subproblem, whatever the
/// number of objectives. Expects a validated instance with an ordinal
/// objective.
ParetoResult solve_epsilon(const Instance& inst, const SolverConfig& cfg);

/// Exhaustive enumeration of all 2^n selections (only those with exactly w
/// items under a cardinality constraint) followed by pairwise filtering.
/// Throws std::length_error when n exceeds `max_items`.
ParetoResult oracle_solve(const Instance& inst, int max_items = 20);

}  // namespace omuco

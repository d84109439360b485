#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omuco/rational.hpp"

namespace omuco {

/// Optimization sense of one objective. The numeric value is the multiplier
/// applied to the objective in the outcome vector.
enum class Sense : int { kMaximize = -1, kAbsent = 0, kMinimize = 1 };

constexpr int sign(Sense s) { return static_cast<int>(s); }

/// Throws std::invalid_argument unless value is -1, 0 or 1.
Sense sense_from_int(int value);

/// An ordinal objective over n items: item i belongs to category
/// assignment[i] in 1..categories, where category 1 is the best.
struct OrdinalObjective {
  int categories = 1;
  std::vector<int> assignment;

  std::size_t size() const { return assignment.size(); }
  int category(std::size_t item) const { return assignment[item]; }
  /// Number of items in each category, index 0 holding category 1.
  std::vector<int> category_sizes() const;

  friend bool operator==(const OrdinalObjective&, const OrdinalObjective&) = default;
};

/// A problem instance. An objective whose sense is kAbsent carries no data.
/// When `cardinality` is set exactly that many items must be selected.
struct Instance {
  int n = 0;
  Sense alpha = Sense::kAbsent;  // first ordinal objective
  Sense beta = Sense::kAbsent;   // second ordinal objective
  Sense gamma = Sense::kAbsent;  // real-valued sum objective
  std::optional<OrdinalObjective> tilde;
  std::optional<OrdinalObjective> hat;
  std::optional<std::vector<Rational>> f;
  std::optional<int> cardinality;

  int tilde_categories() const { return tilde ? tilde->categories : 0; }
  int hat_categories() const { return hat ? hat->categories : 0; }
  /// Number of objectives with a nonzero sense.
  int objective_count() const;
  /// True if one objective is minimized and another maximized.
  bool conflicting() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Binary selection vector x over the ground set.
struct SolutionVector {
  std::vector<std::uint8_t> bits;

  SolutionVector() = default;
  explicit SolutionVector(std::size_t n) : bits(n, 0) {}
  explicit SolutionVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  static SolutionVector zeros(std::size_t n) { return SolutionVector(n); }
  static SolutionVector ones(std::size_t n) { return SolutionVector(std::vector<std::uint8_t>(n, 1)); }
  /// Builds a selection from 0-based item indices.
  static SolutionVector from_items(std::size_t n, const std::vector<int>& items);

  std::size_t size() const { return bits.size(); }
  bool selected(std::size_t i) const { return bits[i] != 0; }
  int count() const;
  /// "010110"-style rendering, item 1 first.
  std::string to_string() const;

  friend bool operator==(const SolutionVector&, const SolutionVector&) = default;
  friend auto operator<=>(const SolutionVector&, const SolutionVector&) = default;
};

/// Incremental counting vector: counts[j] is the number of selected items in
/// category j+1 or worse. Always non-increasing.
struct CountingVector {
  std::vector<int> counts;

  friend bool operator==(const CountingVector&, const CountingVector&) = default;
};

/// Signed outcome vector laid out as [alpha*c~ | beta*c^ | gamma*f], with the
/// block of every absent objective omitted.
struct OutcomeVector {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }

  friend bool operator==(const OutcomeVector&, const OutcomeVector&) = default;
  friend auto operator<=>(const OutcomeVector&, const OutcomeVector&) = default;
};

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  int& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  int operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// K x n cost matrix: column i has ones in rows 1..o(i).
IntMatrix cost_matrix(const OrdinalObjective& obj, int n);

CountingVector counting_vector(const OrdinalObjective& obj, const SolutionVector& x);

OutcomeVector outcome(const Instance& inst, const SolutionVector& x);

/// Dimension of the outcome vectors of `inst`.
std::size_t outcome_dimension(const Instance& inst);

/// Column names for the outcome layout, e.g. {"tilde1","tilde2","hat1","f"}.
std::vector<std::string> outcome_labels(const Instance& inst);

struct ValidationReport {
  std::vector<std::string> violations;
  /// No cardinality constraint and no conflicting senses; the efficient set is
  /// known in closed form.
  bool trivial = false;
  /// Exactly two objectives; solvable by the greedy algorithm.
  bool bi_objective = false;
  bool three_objective = false;
  bool conflicting = false;

  bool valid() const { return violations.empty(); }
};

/// Checks every structural invariant of `inst`. Never throws.
ValidationReport validate(const Instance& inst);

}  // namespace omuco

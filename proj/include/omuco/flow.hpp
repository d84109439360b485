#pragma once

#include <vector>

#include "omuco/rational.hpp"

namespace omuco {

/// Zero-cost arc whose flow must lie in [lower, upper].
struct BoundedArc {
  int from = 0;
  int to = 0;
  int lower = 0;
  int upper = 0;
};

/// One unit-capacity arc per item.
struct ItemArc {
  int item = 0;
  Rational cost;
};

/// Parallel unit-capacity item arcs sharing endpoints.
struct ArcBundle {
  int from = 0;
  int to = 0;
  std::vector<ItemArc> arcs;
};

/// Small network over which a minimum-cost circulation is sought. Flow must be
/// conserved at every node; item arcs carry 0 or 1 units.
struct FlowNetwork {
  int node_count = 0;
  std::vector<BoundedArc> arcs;
  std::vector<ArcBundle> bundles;
};

enum class FlowStatus { kOptimal, kInfeasible };

struct FlowResult {
  FlowStatus status = FlowStatus::kInfeasible;
  /// Items whose arc carries one unit, ascending.
  std::vector<int> selected_items;
  Rational objective;

  bool optimal() const { return status == FlowStatus::kOptimal; }
};

/// Minimum-cost integral circulation by successive shortest paths.
///
/// Costs are brought to a common denominator and handled as exact integers.
/// Negative item arcs are saturated up front and arc lower bounds pre-pushed,
/// which leaves all residual costs non-negative; the resulting node
/// imbalances are then cleared along Dijkstra shortest paths with node
/// potentials. Within a bundle, arcs are used in (cost, item) order, so the
/// selected set of every bundle is a prefix of that order and the result is
/// deterministic.
FlowResult min_cost_flow(const FlowNetwork& net);

}  // namespace omuco

#pragma once

#include <optional>
#include <vector>

#include "omuco/core.hpp"
#include "omuco/flow.hpp"
#include "omuco/rhs_enum.hpp"

namespace omuco {

/// Exact per-category counts fixed by an equality right-hand side.
///
/// supplies[i] = |b~_i| - |b~_{i+1}| (with b~_{K~+1} = 0) is the number of
/// selected items in tilde category i+1; demands is the same for hat. An
/// absent side becomes a single catch-all category holding all `total` items.
struct CategoryDemand {
  std::vector<int> supplies;
  std::vector<int> demands;
  int total = 0;
};

CategoryDemand demands_from_rhs(const RhsVector& rhs);

/// Items grouped by (tilde category, hat category), each group in ascending
/// (cost, item) order. Built once per instance and shared by all subproblems.
struct CategoryGrid {
  struct Cell {
    int row = 0;  // 0-based tilde category
    int col = 0;  // 0-based hat category
    std::vector<ItemArc> items;
  };

  int rows = 1;
  int cols = 1;
  std::vector<Cell> cells;      // non-empty cells only
  std::vector<int> row_sizes;   // |E_i| for tilde
  std::vector<int> col_sizes;   // same for hat
  std::vector<Rational> item_cost;
};

/// Per-item cost gamma*f_i, plus delta*(alpha*o~(i) + beta*o^(i)) when an
/// augmentation delta is given. Item i contributes exactly o(i) ones to the
/// sum of its counting vector, so the augmentation term is per item.
CategoryGrid make_category_grid(const Instance& inst, const std::optional<Rational>& delta = std::nullopt);

/// Necessary condition on the marginals: every category holds at least as
/// many items as the right-hand side asks for. Exact when at most one side is
/// a real constraint.
bool quick_feasible(const CategoryGrid& grid, const CategoryDemand& cd);
bool quick_feasible(const Instance& inst, const CategoryDemand& cd);

/// One equality subproblem as a transportation problem over the grid.
struct TransportInstance {
  const CategoryGrid* grid = nullptr;
  std::vector<int> supplies;
  std::vector<int> demands;
  int total = 0;
};

TransportInstance build_transport(const CategoryGrid& grid, const CategoryDemand& cd);

/// Network: source, one node per tilde category, one per hat category, sink.
/// The sink-to-source arc carries exactly `total` units.
FlowNetwork transport_network(const TransportInstance& t);

/// Network for the inequality form alpha*C~ x <= b~, beta*C^ x <= b^ (plus
/// 1'x = w under a cardinality constraint).
///
/// Reversing the tilde rows and stacking [C~ reversed; 1'; C^] gives an
/// interval matrix, so each item covers a contiguous run of rows. Rows become
/// bounded back arcs of a path and items become forward arcs spanning their
/// run, which turns the system into a circulation.
FlowNetwork inequality_network(const Instance& inst, const CategoryGrid& grid, const RhsVector& rhs);

/// Solves one equality subproblem; nullopt when infeasible.
std::optional<SolutionVector> solve_equality_subproblem(const Instance& inst, const CategoryGrid& grid,
                                                        const RhsVector& rhs);

enum class ConstraintForm {
  kEquality,                 // (alpha*C~; beta*C^)
  kEqualityWithCardinality,  // (alpha*C~; 1'; beta*C^)
  kInequalityStandard,       // (alpha*C~ I 0; beta*C^ 0 I)
};

/// Constraint matrix of the scalarization in the given form. Absent ordinal
/// objectives contribute no rows.
IntMatrix constraint_matrix(const Instance& inst, ConstraintForm form);

}  // namespace omuco

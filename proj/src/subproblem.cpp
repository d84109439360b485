#include "omuco/subproblem.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace omuco {

namespace {

std::vector<int> category_counts(const std::vector<int>& b) {
  std::vector<int> counts(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int next = i + 1 < b.size() ? std::abs(b[i + 1]) : 0;
    counts[i] = std::abs(b[i]) - next;
  }
  return counts;
}

}  // namespace

CategoryDemand demands_from_rhs(const RhsVector& rhs) {
  CategoryDemand cd;
  cd.total = rhs.total();
  cd.supplies = rhs.b_tilde ? category_counts(*rhs.b_tilde) : std::vector<int>{cd.total};
  cd.demands = rhs.b_hat ? category_counts(*rhs.b_hat) : std::vector<int>{cd.total};
  return cd;
}

CategoryGrid make_category_grid(const Instance& inst, const std::optional<Rational>& delta) {
  const bool has_tilde = inst.alpha != Sense::kAbsent;
  const bool has_hat = inst.beta != Sense::kAbsent;
  CategoryGrid grid;
  grid.rows = has_tilde ? inst.tilde_categories() : 1;
  grid.cols = has_hat ? inst.hat_categories() : 1;
  grid.row_sizes.assign(static_cast<std::size_t>(grid.rows), 0);
  grid.col_sizes.assign(static_cast<std::size_t>(grid.cols), 0);
  grid.item_cost.resize(static_cast<std::size_t>(inst.n));

  std::map<std::pair<int, int>, std::vector<ItemArc>> cells;
  for (int i = 0; i < inst.n; ++i) {
    const auto item = static_cast<std::size_t>(i);
    int r = has_tilde ? inst.tilde->category(item) - 1 : 0;
    int c = has_hat ? inst.hat->category(item) - 1 : 0;
    Rational cost;
    if (inst.gamma != Sense::kAbsent) cost = sign(inst.gamma) * (*inst.f)[item];
    if (delta) {
      int ordinal = 0;
      if (has_tilde) ordinal += sign(inst.alpha) * (r + 1);
      if (has_hat) ordinal += sign(inst.beta) * (c + 1);
      cost += *delta * Rational(ordinal);
    }
    grid.item_cost[item] = cost;
    ++grid.row_sizes[static_cast<std::size_t>(r)];
    ++grid.col_sizes[static_cast<std::size_t>(c)];
    cells[{r, c}].push_back(ItemArc{i, cost});
  }
  for (auto& [key, items] : cells) {
    std::stable_sort(items.begin(), items.end(),
                     [](const ItemArc& a, const ItemArc& b) { return a.cost < b.cost; });
    grid.cells.push_back(CategoryGrid::Cell{key.first, key.second, std::move(items)});
  }
  return grid;
}

bool quick_feasible(const CategoryGrid& grid, const CategoryDemand& cd) {
  if (cd.supplies.size() != grid.row_sizes.size() || cd.demands.size() != grid.col_sizes.size()) {
    throw std::invalid_argument("demand shape does not match the category grid");
  }
  for (std::size_t i = 0; i < cd.supplies.size(); ++i) {
    if (cd.supplies[i] < 0 || cd.supplies[i] > grid.row_sizes[i]) return false;
  }
  for (std::size_t j = 0; j < cd.demands.size(); ++j) {
    if (cd.demands[j] < 0 || cd.demands[j] > grid.col_sizes[j]) return false;
  }
  return true;
}

bool quick_feasible(const Instance& inst, const CategoryDemand& cd) {
  return quick_feasible(make_category_grid(inst), cd);
}

TransportInstance build_transport(const CategoryGrid& grid, const CategoryDemand& cd) {
  return TransportInstance{&grid, cd.supplies, cd.demands, cd.total};
}

FlowNetwork transport_network(const TransportInstance& t) {
  const auto& grid = *t.grid;
  const int source = 0;
  const int sink = grid.rows + grid.cols + 1;
  auto supply_node = [](int r) { return 1 + r; };
  auto demand_node = [&](int c) { return 1 + grid.rows + c; };

  FlowNetwork net;
  net.node_count = sink + 1;
  net.arcs.push_back(BoundedArc{sink, source, t.total, t.total});
  for (int r = 0; r < grid.rows; ++r) {
    int s = t.supplies[static_cast<std::size_t>(r)];
    net.arcs.push_back(BoundedArc{source, supply_node(r), s, s});
  }
  for (int c = 0; c < grid.cols; ++c) {
    int d = t.demands[static_cast<std::size_t>(c)];
    net.arcs.push_back(BoundedArc{demand_node(c), sink, d, d});
  }
  for (const auto& cell : grid.cells) {
    net.bundles.push_back(ArcBundle{supply_node(cell.row), demand_node(cell.col), cell.items});
  }
  return net;
}

FlowNetwork inequality_network(const Instance& inst, const CategoryGrid& grid, const RhsVector& rhs) {
  const bool has_tilde = inst.alpha != Sense::kAbsent;
  const bool has_hat = inst.beta != Sense::kAbsent;
  const bool has_card = inst.cardinality.has_value();
  if (!has_tilde && !has_hat) throw std::invalid_argument("inequality form needs an ordinal objective");

  // Row order: c~_K .. c~_1, [1'x], c^_1 .. c^_K. Node r sits before row r.
  const int tilde_rows = has_tilde ? grid.rows : 0;
  const int hat_offset = tilde_rows + (has_card ? 1 : 0);
  const int rows = hat_offset + (has_hat ? grid.cols : 0);

  FlowNetwork net;
  net.node_count = rows + 1;
  auto row_arc = [&](int row, int sense, int b) {
    // sense*c <= b: an upper bound when minimizing, a lower bound otherwise.
    int lower = sense > 0 ? 0 : std::abs(b);
    int upper = sense > 0 ? b : inst.n;
    net.arcs.push_back(BoundedArc{row + 1, row, lower, upper});
  };
  for (int j = 0; j < tilde_rows; ++j) {
    row_arc(tilde_rows - 1 - j, sign(inst.alpha), (*rhs.b_tilde)[static_cast<std::size_t>(j)]);
  }
  if (has_card) net.arcs.push_back(BoundedArc{tilde_rows + 1, tilde_rows, *inst.cardinality, *inst.cardinality});
  if (has_hat) {
    for (int j = 0; j < grid.cols; ++j) row_arc(hat_offset + j, sign(inst.beta), (*rhs.b_hat)[static_cast<std::size_t>(j)]);
  }

  for (const auto& cell : grid.cells) {
    int first = has_tilde ? tilde_rows - 1 - cell.row : 0;
    int last = has_hat ? hat_offset + cell.col : rows - 1;
    net.bundles.push_back(ArcBundle{first, last + 1, cell.items});
  }
  return net;
}

std::optional<SolutionVector> solve_equality_subproblem(const Instance& inst, const CategoryGrid& grid,
                                                        const RhsVector& rhs) {
  CategoryDemand cd = demands_from_rhs(rhs);
  if (!quick_feasible(grid, cd)) return std::nullopt;
  FlowResult r = min_cost_flow(transport_network(build_transport(grid, cd)));
  if (!r.optimal()) return std::nullopt;
  return SolutionVector::from_items(static_cast<std::size_t>(inst.n), r.selected_items);
}

IntMatrix constraint_matrix(const Instance& inst, ConstraintForm form) {
  const bool has_tilde = inst.alpha != Sense::kAbsent;
  const bool has_hat = inst.beta != Sense::kAbsent;
  const int kt = has_tilde ? inst.tilde_categories() : 0;
  const int kh = has_hat ? inst.hat_categories() : 0;
  const int card = form == ConstraintForm::kEqualityWithCardinality ? 1 : 0;
  const int rows = kt + card + kh;
  const int cols = inst.n + (form == ConstraintForm::kInequalityStandard ? kt + kh : 0);

  IntMatrix a(rows, cols);
  for (int i = 0; i < inst.n; ++i) {
    const auto item = static_cast<std::size_t>(i);
    if (has_tilde) {
      for (int j = 0; j < inst.tilde->category(item); ++j) a(j, i) = sign(inst.alpha);
    }
    if (card) a(kt, i) = 1;
    if (has_hat) {
      for (int j = 0; j < inst.hat->category(item); ++j) a(kt + card + j, i) = sign(inst.beta);
    }
  }
  if (form == ConstraintForm::kInequalityStandard) {
    for (int r = 0; r < rows; ++r) a(r, inst.n + r) = 1;
  }
  return a;
}

}  // namespace omuco

#include "omuco/flow.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace omuco {

namespace {

using Cost = std::int64_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max();

struct Bundle {
  int from;
  int to;
  std::vector<Cost> cost;  // ascending, ties by item
  std::vector<int> item;
  int used = 0;            // arcs [0, used) carry flow
};

enum class Step : std::uint8_t { kNone, kFromSource, kToSink, kArcForward, kArcBackward, kBundleForward, kBundleBackward };

struct Parent {
  Step step = Step::kNone;
  int index = 0;
  int node = -1;
};

Cost scaled(const Rational& c, std::int64_t denominator) {
  __int128 v = static_cast<__int128>(c.num()) * (denominator / c.den());
  if (v > std::numeric_limits<Cost>::max() / 4 || v < -(std::numeric_limits<Cost>::max() / 4)) {
    throw std::overflow_error("arc cost too large for exact integer flow");
  }
  return static_cast<Cost>(v);
}

class Solver {
 public:
  explicit Solver(const FlowNetwork& net)
      : nodes_(net.node_count), source_(net.node_count), sink_(net.node_count + 1), arcs_(net.arcs) {
    std::int64_t denominator = 1;
    for (const auto& b : net.bundles) {
      for (const auto& a : b.arcs) denominator = lcm_checked(denominator, a.cost.den());
    }
    denominator_ = denominator;

    bundles_.reserve(net.bundles.size());
    for (const auto& b : net.bundles) {
      std::vector<std::size_t> order(b.arcs.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      auto by_cost = [&](std::size_t x, std::size_t y) {
        if (auto c = b.arcs[x].cost <=> b.arcs[y].cost; c != 0) return c < 0;
        return b.arcs[x].item < b.arcs[y].item;
      };
      if (!std::is_sorted(order.begin(), order.end(), by_cost)) std::sort(order.begin(), order.end(), by_cost);
      Bundle s{b.from, b.to, {}, {}, 0};
      s.cost.reserve(order.size());
      s.item.reserve(order.size());
      for (auto i : order) {
        s.cost.push_back(scaled(b.arcs[i].cost, denominator_));
        s.item.push_back(b.arcs[i].item);
      }
      bundles_.push_back(std::move(s));
    }

    const auto v = static_cast<std::size_t>(nodes_ + 2);
    out_arcs_.resize(v);
    in_arcs_.resize(v);
    out_bundles_.resize(v);
    in_bundles_.resize(v);
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
      out_arcs_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(i)].from)].push_back(i);
      in_arcs_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(i)].to)].push_back(i);
    }
    for (int i = 0; i < static_cast<int>(bundles_.size()); ++i) {
      out_bundles_[static_cast<std::size_t>(bundles_[static_cast<std::size_t>(i)].from)].push_back(i);
      in_bundles_[static_cast<std::size_t>(bundles_[static_cast<std::size_t>(i)].to)].push_back(i);
    }
  }

  FlowResult run() {
    FlowResult result;
    std::vector<std::int64_t> excess(static_cast<std::size_t>(nodes_), 0);
    flow_.assign(arcs_.size(), 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto& a = arcs_[i];
      if (a.lower > a.upper) return result;
      flow_[i] = a.lower;
      excess[static_cast<std::size_t>(a.to)] += a.lower;
      excess[static_cast<std::size_t>(a.from)] -= a.lower;
    }
    for (auto& b : bundles_) {
      b.used = static_cast<int>(std::lower_bound(b.cost.begin(), b.cost.end(), Cost{0}) - b.cost.begin());
      excess[static_cast<std::size_t>(b.to)] += b.used;
      excess[static_cast<std::size_t>(b.from)] -= b.used;
    }

    supply_.assign(static_cast<std::size_t>(nodes_), 0);
    demand_.assign(static_cast<std::size_t>(nodes_), 0);
    std::int64_t required = 0;
    for (std::size_t u = 0; u < excess.size(); ++u) {
      if (excess[u] > 0) {
        supply_[u] = excess[u];
        required += excess[u];
      } else {
        demand_[u] = -excess[u];
      }
    }

    potential_.assign(static_cast<std::size_t>(nodes_ + 2), 0);
    while (required > 0) {
      if (!shortest_path()) return result;
      required -= augment();
    }

    result.status = FlowStatus::kOptimal;
    Cost total = 0;
    for (const auto& b : bundles_) {
      for (int k = 0; k < b.used; ++k) {
        total += b.cost[static_cast<std::size_t>(k)];
        result.selected_items.push_back(b.item[static_cast<std::size_t>(k)]);
      }
    }
    std::sort(result.selected_items.begin(), result.selected_items.end());
    result.objective = Rational(total, denominator_);
    return result;
  }

 private:
  // Dense Dijkstra on reduced costs; the network has only a handful of nodes.
  bool shortest_path() {
    const auto v = static_cast<std::size_t>(nodes_ + 2);
    dist_.assign(v, kInf);
    parent_.assign(v, Parent{});
    std::vector<char> done(v, 0);
    dist_[static_cast<std::size_t>(source_)] = 0;

    auto relax = [&](int from, int to, Cost cost, Step step, int index) {
      Cost reduced = cost + potential_[static_cast<std::size_t>(from)] - potential_[static_cast<std::size_t>(to)];
      assert(reduced >= 0);
      Cost d = dist_[static_cast<std::size_t>(from)] + reduced;
      if (d < dist_[static_cast<std::size_t>(to)]) {
        dist_[static_cast<std::size_t>(to)] = d;
        parent_[static_cast<std::size_t>(to)] = Parent{step, index, from};
      }
    };

    for (;;) {
      int u = -1;
      for (int x = 0; x < static_cast<int>(v); ++x) {
        if (done[static_cast<std::size_t>(x)] || dist_[static_cast<std::size_t>(x)] == kInf) continue;
        if (u < 0 || dist_[static_cast<std::size_t>(x)] < dist_[static_cast<std::size_t>(u)]) u = x;
      }
      if (u < 0) break;
      done[static_cast<std::size_t>(u)] = 1;
      if (u == sink_) continue;
      if (u == source_) {
        for (int x = 0; x < nodes_; ++x) {
          if (supply_[static_cast<std::size_t>(x)] > 0) relax(u, x, 0, Step::kFromSource, x);
        }
        continue;
      }
      const auto su = static_cast<std::size_t>(u);
      if (demand_[su] > 0) relax(u, sink_, 0, Step::kToSink, u);
      for (int i : out_arcs_[su]) {
        const auto& a = arcs_[static_cast<std::size_t>(i)];
        if (flow_[static_cast<std::size_t>(i)] < a.upper) relax(u, a.to, 0, Step::kArcForward, i);
      }
      for (int i : in_arcs_[su]) {
        const auto& a = arcs_[static_cast<std::size_t>(i)];
        if (flow_[static_cast<std::size_t>(i)] > a.lower) relax(u, a.from, 0, Step::kArcBackward, i);
      }
      for (int i : out_bundles_[su]) {
        const auto& b = bundles_[static_cast<std::size_t>(i)];
        if (b.used < static_cast<int>(b.cost.size())) {
          relax(u, b.to, b.cost[static_cast<std::size_t>(b.used)], Step::kBundleForward, i);
        }
      }
      for (int i : in_bundles_[su]) {
        const auto& b = bundles_[static_cast<std::size_t>(i)];
        if (b.used > 0) relax(u, b.from, -b.cost[static_cast<std::size_t>(b.used) - 1], Step::kBundleBackward, i);
      }
    }

    if (dist_[static_cast<std::size_t>(sink_)] == kInf) return false;
    // Nodes unreachable now stay unreachable, so their potentials never matter.
    for (std::size_t x = 0; x < v; ++x) {
      if (dist_[x] != kInf) potential_[x] += dist_[x];
    }
    return true;
  }

  std::int64_t augment() {
    // Bundle steps may carry a run of equal-cost arcs at once; the reduced
    // cost of every arc in the run is the same.
    std::int64_t delta = std::numeric_limits<std::int64_t>::max();
    for (int x = sink_; x != source_;) {
      const auto& p = parent_[static_cast<std::size_t>(x)];
      switch (p.step) {
        case Step::kFromSource: delta = std::min(delta, supply_[static_cast<std::size_t>(p.index)]); break;
        case Step::kToSink: delta = std::min(delta, demand_[static_cast<std::size_t>(p.index)]); break;
        case Step::kArcForward: {
          const auto i = static_cast<std::size_t>(p.index);
          delta = std::min<std::int64_t>(delta, arcs_[i].upper - flow_[i]);
          break;
        }
        case Step::kArcBackward: {
          const auto i = static_cast<std::size_t>(p.index);
          delta = std::min<std::int64_t>(delta, flow_[i] - arcs_[i].lower);
          break;
        }
        case Step::kBundleForward: {
          const auto& b = bundles_[static_cast<std::size_t>(p.index)];
          auto first = b.cost.begin() + b.used;
          auto run = std::upper_bound(first, b.cost.end(), *first) - first;
          delta = std::min<std::int64_t>(delta, run);
          break;
        }
        case Step::kBundleBackward: {
          const auto& b = bundles_[static_cast<std::size_t>(p.index)];
          auto end = b.cost.begin() + b.used;
          auto run = end - std::lower_bound(b.cost.begin(), end, *(end - 1));
          delta = std::min<std::int64_t>(delta, run);
          break;
        }
        case Step::kNone: throw std::logic_error("broken augmenting path");
      }
      x = p.node;
    }

    for (int x = sink_; x != source_;) {
      const auto& p = parent_[static_cast<std::size_t>(x)];
      const auto i = static_cast<std::size_t>(p.index);
      switch (p.step) {
        case Step::kFromSource: supply_[i] -= delta; break;
        case Step::kToSink: demand_[i] -= delta; break;
        case Step::kArcForward: flow_[i] += static_cast<int>(delta); break;
        case Step::kArcBackward: flow_[i] -= static_cast<int>(delta); break;
        case Step::kBundleForward: bundles_[i].used += static_cast<int>(delta); break;
        case Step::kBundleBackward: bundles_[i].used -= static_cast<int>(delta); break;
        case Step::kNone: break;
      }
      x = p.node;
    }
    return delta;
  }

  int nodes_;
  int source_;
  int sink_;
  std::int64_t denominator_ = 1;
  const std::vector<BoundedArc>& arcs_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<int>> out_arcs_, in_arcs_, out_bundles_, in_bundles_;

  std::vector<int> flow_;
  std::vector<std::int64_t> supply_, demand_;
  std::vector<Cost> potential_, dist_;
  std::vector<Parent> parent_;
};

}  // namespace

FlowResult min_cost_flow(const FlowNetwork& net) {
  if (net.node_count < 0) throw std::invalid_argument("negative node count");
  return Solver(net).run();
}

}  // namespace omuco

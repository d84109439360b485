#include "omuco/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace omuco {

Instance constrained_view(const Instance& inst) {
  if (inst.objective_count() != 2 || (inst.alpha == Sense::kAbsent && inst.beta == Sense::kAbsent)) {
    throw std::invalid_argument("greedy algorithm needs exactly two objectives, one of them ordinal");
  }
  if (inst.alpha != Sense::kAbsent) return inst;
  Instance view = inst;
  view.alpha = inst.beta;
  view.tilde = inst.hat;
  view.beta = Sense::kAbsent;
  view.hat.reset();
  return view;
}

CategoryPartition partition_and_sort(const Instance& inst) {
  if (inst.alpha == Sense::kAbsent) throw std::invalid_argument("partition needs the tilde objective");
  CategoryPartition part;
  part.n = inst.n;
  part.groups.resize(static_cast<std::size_t>(inst.tilde_categories()));
  for (int i = 0; i < inst.n; ++i) {
    part.groups[static_cast<std::size_t>(inst.tilde->category(static_cast<std::size_t>(i)) - 1)].push_back(i);
  }

  for (auto& g : part.groups) {
    if (inst.gamma != Sense::kAbsent) {
      const auto& f = *inst.f;
      const int s = sign(inst.gamma);
      std::stable_sort(g.begin(), g.end(), [&](int a, int b) {
        return s > 0 ? f[static_cast<std::size_t>(a)] < f[static_cast<std::size_t>(b)]
                     : f[static_cast<std::size_t>(b)] < f[static_cast<std::size_t>(a)];
      });
    } else if (inst.beta != Sense::kAbsent) {
      const auto& hat = *inst.hat;
      const int s = sign(inst.beta);
      std::stable_sort(g.begin(), g.end(), [&](int a, int b) {
        return s * hat.category(static_cast<std::size_t>(a)) < s * hat.category(static_cast<std::size_t>(b));
      });
    }
  }
  return part;
}

std::optional<SolutionVector> greedy_fill(const CategoryPartition& part, const CategoryDemand& cd) {
  if (cd.supplies.size() != part.groups.size()) {
    throw std::invalid_argument("demand shape does not match the partition");
  }
  SolutionVector x(static_cast<std::size_t>(part.n));
  for (std::size_t i = 0; i < part.groups.size(); ++i) {
    const auto& g = part.groups[i];
    const int take = cd.supplies[i];
    if (take < 0 || static_cast<std::size_t>(take) > g.size()) return std::nullopt;
    for (int k = 0; k < take; ++k) x.bits[static_cast<std::size_t>(g[static_cast<std::size_t>(k)])] = 1;
  }
  return x;
}

std::vector<GreedyCandidate> greedy_candidates(const Instance& inst, std::uint64_t* enumerated) {
  const Instance view = constrained_view(inst);
  const CategoryPartition part = partition_and_sort(view);
  const int k = view.tilde_categories();
  const int s = sign(view.alpha);

  std::vector<GreedyCandidate> out;
  std::uint64_t tried = 0;
  auto visit = [&](LatticeCursor cursor) {
    for (; cursor.valid(); cursor.next()) {
      ++tried;
      RhsVector rhs;
      rhs.b_tilde.emplace(cursor.current());
      for (int& b : *rhs.b_tilde) b *= s;
      auto x = greedy_fill(part, demands_from_rhs(rhs));
      if (!x) continue;
      OutcomeVector z = outcome(inst, *x);
      if (inst.alpha == Sense::kAbsent) std::swap(rhs.b_tilde, rhs.b_hat);
      out.push_back(GreedyCandidate{std::move(rhs), std::move(*x), std::move(z)});
    }
  };
  if (view.cardinality) {
    visit(LatticeCursor::with_first(k, *view.cardinality));
  } else {
    visit(LatticeCursor::all(k, view.n));
  }
  if (enumerated) *enumerated = tried;
  return out;
}

ParetoResult solve_biobjective(const Instance& inst) {
  std::uint64_t tried = 0;
  auto candidates = greedy_candidates(inst, &tried);
  std::vector<LabeledOutcome> labeled;
  labeled.reserve(candidates.size());
  for (auto& c : candidates) labeled.push_back(LabeledOutcome{std::move(c.outcome), std::move(c.solution)});
  const auto feasible = static_cast<std::uint64_t>(labeled.size());
  ParetoResult result = filter_nondominated(std::move(labeled));
  result.stats.subproblems = tried;
  result.stats.feasible = feasible;
  return result;
}

}  // namespace omuco

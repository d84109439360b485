#include "omuco/solver.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

#include "omuco/greedy.hpp"
#include "omuco/rhs_enum.hpp"
#include "omuco/subproblem.hpp"

namespace omuco {

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "auto") return Algorithm::kAuto;
  if (name == "epsilon") return Algorithm::kEpsilon;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "brute") return Algorithm::kBrute;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kEpsilon: return "epsilon";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

namespace {

std::string first_violation(const ValidationReport& r) {
  return r.violations.empty() ? "invalid instance" : r.violations.front();
}

int ordinal_rows(const Instance& inst) {
  int k = 0;
  if (inst.alpha != Sense::kAbsent) k += inst.tilde_categories();
  if (inst.beta != Sense::kAbsent) k += inst.hat_categories();
  return k;
}

ParetoResult single_point(const Instance& inst, SolutionVector x) {
  ParetoResult r;
  r.nondominated.push_back(outcome(inst, x));
  r.representatives.push_back(std::move(x));
  r.stats.candidates = 1;
  return r;
}

// Only gamma*f is present: one nondominated value. Items of zero cost are left
// out so the representative is canonical.
ParetoResult solve_single_objective(const Instance& inst) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<Rational> cost(n);
  for (std::size_t i = 0; i < n; ++i) cost[i] = sign(inst.gamma) * (*inst.f)[i];

  SolutionVector x(n);
  if (inst.cardinality) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cost[static_cast<std::size_t>(a)] < cost[static_cast<std::size_t>(b)];
    });
    for (int k = 0; k < *inst.cardinality; ++k) x.bits[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i) x.bits[i] = cost[i].sign() < 0 ? 1 : 0;
  }
  return single_point(inst, std::move(x));
}

// Senses all in {0, 1} (or all in {0, -1}) with an ordinal objective and no
// cardinality constraint: the empty (or full) selection is the only
// efficient solution.
ParetoResult solve_trivial(const Instance& inst) {
  bool minimizing = inst.alpha == Sense::kMinimize || inst.beta == Sense::kMinimize;
  const auto n = static_cast<std::size_t>(inst.n);
  return single_point(inst, minimizing ? SolutionVector::zeros(n) : SolutionVector::ones(n));
}

struct WorkerOutput {
  std::vector<LabeledOutcome> candidates;
  std::uint64_t subproblems = 0;
  std::uint64_t feasible = 0;
  std::exception_ptr error;
};

void epsilon_worker(const Instance& inst, const CategoryGrid& grid, bool augmented, int worker, int workers,
                    WorkerOutput& out) {
  try {
    RhsEnumerator rhs_stream(inst);
    RhsVector rhs;
    std::uint64_t index = 0;
    while (rhs_stream.next(rhs)) {
      if (index++ % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(worker)) continue;
      ++out.subproblems;
      std::optional<SolutionVector> x;
      if (augmented) {
        FlowResult r = min_cost_flow(inequality_network(inst, grid, rhs));
        if (r.optimal()) x = SolutionVector::from_items(static_cast<std::size_t>(inst.n), r.selected_items);
      } else {
        x = solve_equality_subproblem(inst, grid, rhs);
      }
      if (!x) continue;
      ++out.feasible;
      OutcomeVector z = outcome(inst, *x);
      out.candidates.push_back(LabeledOutcome{std::move(z), std::move(*x)});
    }
  } catch (...) {
    out.error = std::current_exception();
  }
}

}  // namespace

InvalidInstance::InvalidInstance(ValidationReport report)
    : std::invalid_argument(first_violation(report)), report_(std::move(report)) {}

Rational default_augmentation(const Instance& inst) {
  std::int64_t q = 1;
  if (inst.gamma != Sense::kAbsent) {
    for (const auto& v : *inst.f) q = lcm_checked(q, v.den());
  }
  const std::int64_t spread = static_cast<std::int64_t>(ordinal_rows(inst)) * inst.n + 1;
  return Rational(1, spread) / Rational(q);
}

ParetoResult solve_epsilon(const Instance& inst, const SolverConfig& cfg) {
  if (inst.alpha == Sense::kAbsent && inst.beta == Sense::kAbsent) {
    throw std::invalid_argument("epsilon-constraint path needs an ordinal objective");
  }
  const bool augmented = cfg.augmentation.has_value();
  const CategoryGrid grid = make_category_grid(inst, cfg.augmentation);
  const int workers = std::max(1, cfg.workers);

  std::vector<WorkerOutput> outputs(static_cast<std::size_t>(workers));
  if (workers == 1) {
    epsilon_worker(inst, grid, augmented, 0, 1, outputs.front());
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back(epsilon_worker, std::cref(inst), std::cref(grid), augmented, w, workers,
                           std::ref(outputs[static_cast<std::size_t>(w)]));
    }
    for (auto& t : threads) t.join();
  }

  std::vector<LabeledOutcome> all;
  std::uint64_t subproblems = 0;
  std::uint64_t feasible = 0;
  for (auto& o : outputs) {
    if (o.error) std::rethrow_exception(o.error);
    subproblems += o.subproblems;
    feasible += o.feasible;
    std::move(o.candidates.begin(), o.candidates.end(), std::back_inserter(all));
  }
  ParetoResult result = filter_nondominated(std::move(all));
  result.stats.subproblems = subproblems;
  result.stats.feasible = feasible;
  return result;
}

ParetoResult oracle_solve(const Instance& inst, int max_items) {
  if (inst.n > max_items || inst.n > 30) {
    throw std::length_error("brute force refuses n = " + std::to_string(inst.n) + " (limit " +
                            std::to_string(std::min(max_items, 30)) + ")");
  }
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<LabeledOutcome> all;
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++total;
    SolutionVector x(n);
    for (std::size_t i = 0; i < n; ++i) x.bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    if (inst.cardinality && x.count() != *inst.cardinality) continue;
    OutcomeVector z = outcome(inst, x);
    all.push_back(LabeledOutcome{std::move(z), std::move(x)});
  }
  const auto feasible = static_cast<std::uint64_t>(all.size());
  ParetoResult result = filter_nondominated_pairwise(std::move(all));
  result.stats.subproblems = total;
  result.stats.feasible = feasible;
  return result;
}

ParetoResult solve(const Instance& input, const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Instance inst = input;
  if (cfg.cardinality) inst.cardinality = cfg.cardinality;
  ValidationReport report = validate(inst);
  if (!report.valid()) throw InvalidInstance(std::move(report));

  if (cfg.augmentation) {
    const int rows = ordinal_rows(inst);
    if (cfg.augmentation->sign() <= 0) throw std::invalid_argument("augmentation delta must be positive");
    if (rows > 0 && inst.n > 0 &&
        !(*cfg.augmentation * Rational(static_cast<std::int64_t>(rows) * inst.n) < Rational(1))) {
      throw std::invalid_argument("augmentation delta must be below 1/((K~+K^)*n)");
    }
  }

  const bool has_ordinal = inst.alpha != Sense::kAbsent || inst.beta != Sense::kAbsent;
  ParetoResult result;
  switch (cfg.algorithm) {
    case Algorithm::kBrute:
      result = oracle_solve(inst, cfg.brute_force_limit);
      break;
    case Algorithm::kGreedy:
      result = solve_biobjective(inst);
      break;
    case Algorithm::kEpsilon:
      result = has_ordinal ? solve_epsilon(inst, cfg) : solve_single_objective(inst);
      break;
    case Algorithm::kAuto:
      if (!has_ordinal) {
        result = solve_single_objective(inst);
      } else if (report.trivial) {
        result = solve_trivial(inst);
      } else if (report.bi_objective && !cfg.augmentation) {
        result = solve_biobjective(inst);
      } else {
        result = solve_epsilon(inst, cfg);
      }
      break;
  }
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace omuco

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <numeric>
#include <set>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "omuco/dominance.hpp"
#include "omuco/fixtures.hpp"
#include "omuco/greedy.hpp"
#include "omuco/io.hpp"
#include "omuco/rhs_enum.hpp"
#include "omuco/solver.hpp"
#include "omuco/subproblem.hpp"
#include "support/oracles.hpp"

using namespace omuco;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

SolutionVector bits(const std::string& s) {
  SolutionVector x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x.bits[i] = s[i] == '1';
  return x;
}

OutcomeVector ints(std::initializer_list<std::int64_t> v) { return OutcomeVector{{v.begin(), v.end()}}; }

// Seeded suite over the 12 conflicting sense patterns: n in 4..12, every
// (K~, K^) pair in {1,2,3}^2, with and without a cardinality constraint.
std::vector<Instance> conflicting_suite() {
  std::vector<Instance> suite;
  std::mt19937_64 rng(20240601);
  int pattern_index = 0;
  for (const auto& p : oracle::sense_patterns()) {
    if (!oracle::has_conflict(p)) continue;
    for (bool card : {false, true}) {
      for (int rep = 0; rep < 9; ++rep) {
        GeneratorSpec spec;
        spec.n = 4 + (rep + 2 * pattern_index + (card ? 5 : 0)) % 9;
        spec.ktilde = 1 + rep % 3;
        spec.khat = 1 + (rep / 3) % 3;
        spec.alpha = p[0];
        spec.beta = p[1];
        spec.gamma = p[2];
        spec.fmax = 20;
        spec.seed = rng();
        if (card) spec.w = static_cast<int>(uniform_int(rng, 0, spec.n));
        suite.push_back(generate_instance(spec));
      }
    }
    ++pattern_index;
  }
  return suite;
}

Verdict criterion1() {
  const auto t0 = Clock::now();
  const Instance inst = fixtures::six_item_example();
  const auto cands = greedy_candidates(inst);
  const std::vector<std::int64_t> fs = {13, 10, 8, 6, 7, 8};
  const std::vector<std::vector<int>> cs = {{3, 1, 0}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {3, 3, 2}, {3, 3, 3}};
  Verdict v;
  if (cands.size() != 6) {
    return {false, std::to_string(cands.size()) + " candidates"};
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (oracle::f_value(inst, cands[i].solution) != Rational(fs[i])) v.pass = false;
    if (oracle::counts(*inst.tilde, cands[i].solution) != cs[i]) v.pass = false;
  }
  SolverConfig cfg;
  cfg.algorithm = Algorithm::kGreedy;
  const auto res = solve(inst, cfg);
  const std::vector<OutcomeVector> expected = {ints({-3, -3, -3, 8}), ints({-3, -3, -2, 7}), ints({-3, -2, -2, 6})};
  if (res.nondominated != expected) v.pass = false;
  const double secs = seconds_since(t0);
  if (secs >= 1.0) v.pass = false;
  std::ostringstream d;
  d << "6 candidates, f = 13 10 8 6 7 8, front {(-3,-2,-2|6), (-3,-3,-2|7), (-3,-3,-3|8)}, " << secs << " s";
  v.detail = d.str();
  return v;
}

Verdict criterion2() {
  const std::vector<std::vector<int>> expected = {{3, 0, 0}, {3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1},
                                                  {3, 2, 2}, {3, 3, 0}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}};
  const auto got = enumerate_U_w(3, 6, 3);
  return {got == expected, std::to_string(got.size()) + " vectors in lexicographic order"};
}

Verdict criterion3() {
  const Instance a = fixtures::instance_a();
  const Instance b = fixtures::instance_b();
  bool ok = outcome(a, bits("1000")) == ints({1, 1, 0, 1, 1, 1, -10}) &&
            outcome(a, bits("0011")) == ints({2, 1, 0, 2, 1, 1, -5}) &&
            dominates(outcome(a, bits("1000")), outcome(a, bits("0011"))) &&
            outcome(b, bits("1100")) == ints({2, 1, 0, 2, 1, 0, -15}) &&
            outcome(b, bits("0011")) == ints({2, 1, 0, 2, 1, 0, -12}) &&
            dominates(outcome(b, bits("1100")), outcome(b, bits("0011")));
  SolverConfig cfg;
  cfg.algorithm = Algorithm::kBrute;
  const auto res = solve(b, cfg);
  std::set<SolutionVector> reps(res.representatives.begin(), res.representatives.end());
  ok = ok && res.size() == 15 && reps.size() == 15 && !reps.count(bits("0011"));
  return {ok, "z(x1) <= z(x2) on A, z(x3) <= z(x4) on B, " + std::to_string(res.size()) +
                  " efficient selections on B without (0,0,1,1)"};
}

Verdict criterion4(const std::vector<Instance>& suite) {
  const auto t0 = Clock::now();
  int mismatches = 0;
  for (const auto& inst : suite) {
    if (solve(inst).nondominated != oracle_solve(inst).nondominated) ++mismatches;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << suite.size() << " instances, " << mismatches << " mismatches, " << secs << " s";
  return {mismatches == 0 && suite.size() >= 200 && secs < 60.0, d.str()};
}

Verdict criterion5(const std::vector<Instance>& suite) {
  std::uint64_t compared = 0;
  int mismatches = 0;
  int instances = 0;
  for (const auto& inst : suite) {
    if (inst.objective_count() != 2) continue;
    ++instances;
    const Instance view = constrained_view(inst);
    const auto part = partition_and_sort(view);

    // Same subproblem as a transportation flow: constrained categories as
    // supplies, one catch-all demand, per-item cost of the other objective.
    Instance flow_inst = view;
    flow_inst.beta = Sense::kAbsent;
    flow_inst.hat.reset();
    std::vector<Rational> cost(static_cast<std::size_t>(inst.n));
    for (std::size_t i = 0; i < cost.size(); ++i) {
      cost[i] = view.gamma != Sense::kAbsent ? Rational(sign(view.gamma)) * (*view.f)[i]
                                             : Rational(sign(view.beta) * view.hat->category(i));
    }
    flow_inst.gamma = Sense::kMinimize;
    flow_inst.f = cost;
    const auto grid = make_category_grid(flow_inst);

    RhsEnumerator rhs_stream(flow_inst);
    for (RhsVector rhs; rhs_stream.next(rhs);) {
      const auto cd = demands_from_rhs(rhs);
      const auto x = greedy_fill(part, cd);
      const auto flow = min_cost_flow(transport_network(build_transport(grid, cd)));
      if (x.has_value() != flow.optimal()) {
        ++mismatches;
        continue;
      }
      if (!x) continue;
      Rational greedy_cost;
      for (std::size_t i = 0; i < cost.size(); ++i)
        if (x->selected(i)) greedy_cost += cost[i];
      ++compared;
      if (greedy_cost != flow.objective) ++mismatches;
    }
  }
  std::ostringstream d;
  d << instances << " bi-objective instances, " << compared << " feasible subproblems, " << mismatches
    << " mismatches";
  return {mismatches == 0 && compared > 0, d.str()};
}

Verdict criterion6() {
  std::mt19937_64 rng(77);
  auto pick = [&](int lo, int hi) { return static_cast<int>(uniform_int(rng, lo, hi)); };
  int instances = 0;
  std::uint64_t determinants = 0;
  std::uint64_t violations = 0;
  const ConstraintForm forms[] = {ConstraintForm::kEquality, ConstraintForm::kEqualityWithCardinality,
                                  ConstraintForm::kInequalityStandard};
  for (; instances < 60; ++instances) {
    GeneratorSpec spec;
    spec.n = pick(3, 12);
    spec.ktilde = pick(1, 4);
    spec.khat = pick(1, 4);
    spec.alpha = pick(0, 1) ? 1 : -1;
    spec.beta = pick(0, 1) ? 1 : -1;
    spec.gamma = pick(-1, 1);
    spec.fmax = 9;
    spec.seed = rng();
    const Instance inst = generate_instance(spec);
    for (auto form : forms) {
      const IntMatrix a = constraint_matrix(inst, form);
      const int max_k = std::min(a.rows, a.cols);
      for (int s = 0; s < 1000; ++s) {
        const int k = pick(1, max_k);
        std::vector<int> rows(static_cast<std::size_t>(a.rows)), cols(static_cast<std::size_t>(a.cols));
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<std::vector<std::int64_t>> sub(static_cast<std::size_t>(k),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(k)));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c)
            sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                a(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
        const std::int64_t det = oracle::bareiss_det(sub);
        ++determinants;
        if (det < -1 || det > 1) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << instances << " instances, " << determinants << " determinants over 3 forms, " << violations
    << " outside {-1,0,1}";
  return {violations == 0, d.str()};
}

Verdict criterion7() {
  std::vector<double> xs, ys;
  bool exact = true;
  std::ostringstream d;
  for (int n : {20, 40, 80, 160}) {
    GeneratorSpec spec;
    spec.n = n;
    spec.ktilde = 2;
    spec.khat = 2;
    spec.alpha = 1;
    spec.beta = 1;
    spec.gamma = -1;
    spec.fmax = 100;
    spec.seed = static_cast<std::uint64_t>(n);
    const Instance inst = generate_instance(spec);
    const auto t0 = Clock::now();
    const auto res = solve(inst);
    // |U_w| = w + 1 for two categories, so |U^e| = sum (w+1)^2.
    std::uint64_t closed = 0;
    for (std::uint64_t w = 0; w <= static_cast<std::uint64_t>(n); ++w) closed += (w + 1) * (w + 1);
    if (res.stats.subproblems != closed || count_Ue(inst) != closed) exact = false;
    xs.push_back(std::log(n));
    ys.push_back(std::log(static_cast<double>(res.stats.subproblems)));
    d << "n=" << n << ": " << res.stats.subproblems << " (" << seconds_since(t0) << " s); ";
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  d << "slope " << slope << " (limit 3.1)";
  return {exact && slope <= 3.1, d.str()};
}

Verdict criterion8(const std::vector<Instance>& suite) {
  std::uint64_t removed = 0;
  std::uint64_t candidates = 0;
  int incomplete = 0;
  for (const auto& inst : suite) {
    const int rows = (inst.alpha != Sense::kAbsent ? inst.tilde_categories() : 0) +
                     (inst.beta != Sense::kAbsent ? inst.hat_categories() : 0);
    SolverConfig cfg;
    cfg.algorithm = Algorithm::kEpsilon;
    cfg.augmentation = Rational(1, static_cast<std::int64_t>(rows) * inst.n + 1);
    const auto res = solve(inst, cfg);
    removed += res.stats.dominated_removed;
    candidates += res.stats.candidates;
    if (res.nondominated != oracle_solve(inst).nondominated) ++incomplete;
  }
  std::ostringstream d;
  d << suite.size() << " instances, " << candidates << " candidates, " << removed << " removed as dominated, "
    << incomplete << " fronts differing from brute force";
  return {removed == 0 && incomplete == 0, d.str()};
}

Verdict criterion9() {
  oracle::RandomInstances gen(99);
  int patterns = 0, runs = 0, failures = 0;
  for (const auto& p : oracle::sense_patterns()) {
    if (oracle::has_conflict(p)) continue;
    ++patterns;
    for (int t = 0; t < 10; ++t) {
      const Instance inst = gen.make(p[0], p[1], p[2], 1, 12, 3, false, t % 2 ? 0 : 20);
      ++runs;
      const auto res = solve(inst);
      const auto ref = oracle_solve(inst);
      const bool minimizing = p[0] > 0 || p[1] > 0 || p[2] > 0;
      const auto n = static_cast<std::size_t>(inst.n);
      const SolutionVector shortcut = minimizing ? SolutionVector::zeros(n) : SolutionVector::ones(n);
      bool ok = res.nondominated == ref.nondominated && res.representatives == ref.representatives &&
                res.size() == 1 && outcome(inst, shortcut) == res.nondominated.front();
      // With an ordinal objective the efficient set is exactly {0} or {1}.
      if (p[0] != 0 || p[1] != 0) ok = ok && res.representatives.front() == shortcut;
      if (!ok) ++failures;
    }
  }
  std::ostringstream d;
  d << patterns << " non-conflicting patterns, " << runs << " instances, " << failures << " failures";
  return {failures == 0, d.str()};
}

Verdict criterion10(const std::vector<Instance>& suite) {
  std::string reference, threaded;
  for (auto algorithm : {Algorithm::kAuto, Algorithm::kEpsilon}) {
    for (const auto& inst : suite) {
      SolverConfig one;
      one.algorithm = algorithm;
      SolverConfig eight = one;
      eight.workers = 8;
      reference += emit_result(solve(inst, one), inst, OutputFormat::kCsv);
      threaded += emit_result(solve(inst, eight), inst, OutputFormat::kCsv);
    }
  }
  std::ostringstream d;
  d << "auto and epsilon runs, " << reference.size() << " CSV bytes, "
    << (reference == threaded ? "identical" : "different");
  return {reference == threaded, d.str()};
}

}  // namespace

int main() {
  const auto suite = conflicting_suite();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 greedy candidates of the six-item example", criterion1},
      {"2 lattice slice U_3", criterion2},
      {"3 instance A/B dominance", criterion3},
      {"4 oracle equivalence", [&] { return criterion4(suite); }},
      {"5 greedy vs flow", [&] { return criterion5(suite); }},
      {"6 total unimodularity", criterion6},
      {"7 subproblem count", criterion7},
      {"8 augmentation", [&] { return criterion8(suite); }},
      {"9 shortcut cases", criterion9},
      {"10 determinism", [&] { return criterion10(suite); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << v.detail << std::endl;
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

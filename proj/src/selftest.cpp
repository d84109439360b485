#include "omuco/selftest.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "omuco/fixtures.hpp"
#include "omuco/greedy.hpp"
#include "omuco/io.hpp"
#include "omuco/rhs_enum.hpp"
#include "omuco/solver.hpp"

namespace omuco {

namespace {

OutcomeVector ints(std::initializer_list<std::int64_t> v) { return OutcomeVector{{v.begin(), v.end()}}; }

SolutionVector bits(const std::string& s) {
  SolutionVector x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x.bits[i] = s[i] == '1' ? 1 : 0;
  return x;
}

bool check_cost_matrix() {
  const auto inst = fixtures::six_item_example();
  IntMatrix c = cost_matrix(*inst.tilde, inst.n);
  const std::vector<int> expected = {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0};
  return c.rows == 3 && c.cols == 6 && c.data == expected;
}

bool check_counting_vectors() {
  const auto inst = fixtures::six_item_example();
  return counting_vector(*inst.tilde, bits("110010")).counts == std::vector<int>{3, 3, 3} &&
         counting_vector(*inst.tilde, bits("011111")).counts == std::vector<int>{5, 3, 2};
}

bool check_lattice() {
  const std::vector<std::vector<int>> expected = {{3, 0, 0}, {3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1},
                                                  {3, 2, 2}, {3, 3, 0}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}};
  return enumerate_U_w(3, 6, 3) == expected;
}

bool check_greedy_candidates() {
  const auto inst = fixtures::six_item_example();
  const auto cands = greedy_candidates(inst);
  const std::vector<std::string> xs = {"001101", "101001", "101100", "111000", "110100", "110010"};
  const std::vector<OutcomeVector> zs = {ints({-3, -1, 0, 13}), ints({-3, -1, -1, 10}), ints({-3, -2, -1, 8}),
                                         ints({-3, -2, -2, 6}), ints({-3, -3, -2, 7}), ints({-3, -3, -3, 8})};
  if (cands.size() != xs.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (cands[i].solution != bits(xs[i]) || cands[i].outcome != zs[i]) return false;
  }
  return true;
}

bool check_greedy_front() {
  const auto inst = fixtures::six_item_example();
  SolverConfig cfg;
  cfg.algorithm = Algorithm::kGreedy;
  const auto res = solve(inst, cfg);
  // Canonical order is lexicographic on the outcome.
  return res.nondominated == std::vector<OutcomeVector>{ints({-3, -3, -3, 8}), ints({-3, -3, -2, 7}),
                                                         ints({-3, -2, -2, 6})};
}

bool check_epsilon_matches_greedy() {
  const auto inst = fixtures::six_item_example();
  SolverConfig eps;
  eps.algorithm = Algorithm::kEpsilon;
  SolverConfig greedy;
  greedy.algorithm = Algorithm::kGreedy;
  return solve(inst, eps).nondominated == solve(inst, greedy).nondominated &&
         solve(inst, eps).nondominated == oracle_solve(inst).nondominated;
}

bool check_instance_a() {
  const auto inst = fixtures::instance_a();
  const auto z1 = outcome(inst, bits("1000"));
  const auto z2 = outcome(inst, bits("0011"));
  return z1 == ints({1, 1, 0, 1, 1, 1, -10}) && z2 == ints({2, 1, 0, 2, 1, 1, -5}) && dominates(z1, z2);
}

bool check_instance_b() {
  const auto inst = fixtures::instance_b();
  const auto z3 = outcome(inst, bits("1100"));
  const auto z4 = outcome(inst, bits("0011"));
  if (z3 != ints({2, 1, 0, 2, 1, 0, -15}) || z4 != ints({2, 1, 0, 2, 1, 0, -12}) || !dominates(z3, z4)) {
    return false;
  }
  SolverConfig cfg;
  cfg.algorithm = Algorithm::kBrute;
  const auto res = solve(inst, cfg);
  if (res.size() != 15) return false;
  for (const auto& x : res.representatives) {
    if (x == bits("0011")) return false;
  }
  return true;
}

bool check_instance_b_epsilon() {
  const auto inst = fixtures::instance_b();
  return solve(inst).nondominated == oracle_solve(inst).nondominated;
}

bool check_round_trip() {
  for (const auto& inst : {fixtures::six_item_example(), fixtures::instance_a(), fixtures::instance_b()}) {
    const std::string text = serialize_instance(inst);
    if (parse_instance(text) != inst || serialize_instance(parse_instance(text)) != text) return false;
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& out) {
  const std::vector<std::pair<const char*, std::function<bool()>>> checks = {
      {"cost matrix of the six-item example", check_cost_matrix},
      {"counting vectors (3,3,3) and (5,3,2)", check_counting_vectors},
      {"U_3 for K=3 in lexicographic order", check_lattice},
      {"six greedy candidates", check_greedy_candidates},
      {"greedy front of the six-item example", check_greedy_front},
      {"epsilon path agrees with greedy and brute force", check_epsilon_matches_greedy},
      {"instance A: single item dominates a pair", check_instance_a},
      {"instance B: 15 efficient selections", check_instance_b},
      {"instance B: epsilon path agrees with brute force", check_instance_b_epsilon},
      {"instance files round-trip", check_round_trip},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      out << "error in " << name << ": " << e.what() << '\n';
    }
    out << (ok ? "ok    " : "FAIL  ") << name << '\n';
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures;
}

}  // namespace omuco

#include "omuco/fixtures.hpp"

namespace omuco::fixtures {

namespace {

std::vector<Rational> to_rationals(std::initializer_list<std::int64_t> v) {
  return {v.begin(), v.end()};
}

Instance four_items(std::vector<int> tilde, std::vector<int> hat, std::initializer_list<std::int64_t> f) {
  Instance inst;
  inst.n = 4;
  inst.alpha = Sense::kMinimize;
  inst.beta = Sense::kMinimize;
  inst.gamma = Sense::kMaximize;
  inst.tilde = OrdinalObjective{3, std::move(tilde)};
  inst.hat = OrdinalObjective{3, std::move(hat)};
  inst.f = to_rationals(f);
  return inst;
}

}  // namespace

Instance six_item_example() {
  Instance inst;
  inst.n = 6;
  inst.alpha = Sense::kMaximize;
  inst.gamma = Sense::kMinimize;
  inst.tilde = OrdinalObjective{3, {3, 3, 1, 2, 3, 1}};
  inst.f = to_rationals({1, 2, 3, 4, 5, 6});
  inst.cardinality = 3;
  return inst;
}

Instance instance_a() { return four_items({2, 1, 2, 1}, {3, 2, 1, 3}, {10, 1, 3, 2}); }

Instance instance_b() { return four_items({1, 2, 1, 2}, {2, 1, 1, 2}, {10, 5, 1, 11}); }

}  // namespace omuco::fixtures

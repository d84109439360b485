#include "doctest.h"
#include "omuco/flow.hpp"

using namespace omuco;

TEST_CASE("picks the cheapest parallel arcs") {
  // 0 -> 1 via five items, 1 -> 0 must carry exactly two units.
  FlowNetwork net;
  net.node_count = 2;
  net.arcs.push_back(BoundedArc{1, 0, 2, 2});
  net.bundles.push_back(ArcBundle{0, 1, {{0, 5}, {1, 3}, {2, 4}, {3, 3}, {4, 9}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.selected_items == std::vector<int>{1, 3});
  CHECK(r.objective == Rational(6));
}

TEST_CASE("negative arcs are used whenever the bounds allow") {
  FlowNetwork net;
  net.node_count = 2;
  net.arcs.push_back(BoundedArc{1, 0, 0, 3});
  net.bundles.push_back(ArcBundle{0, 1, {{0, -2}, {1, 1}, {2, -5}, {3, -1}, {4, -3}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.selected_items == std::vector<int>{0, 2, 4});
  CHECK(r.objective == Rational(-10));
}

TEST_CASE("rational costs stay exact") {
  FlowNetwork net;
  net.node_count = 2;
  net.arcs.push_back(BoundedArc{1, 0, 1, 1});
  net.bundles.push_back(ArcBundle{0, 1, {{0, Rational(1, 3)}, {1, Rational(1, 4)}, {2, Rational(2, 7)}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.selected_items == std::vector<int>{1});
  CHECK(r.objective == Rational(1, 4));
}

TEST_CASE("ties go to the smaller item index") {
  FlowNetwork net;
  net.node_count = 2;
  net.arcs.push_back(BoundedArc{1, 0, 2, 2});
  net.bundles.push_back(ArcBundle{0, 1, {{4, 1}, {2, 1}, {7, 1}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.objective == Rational(2));
  CHECK(r.selected_items == std::vector<int>{2, 4});
}

TEST_CASE("infeasible bounds and missing capacity") {
  FlowNetwork net;
  net.node_count = 2;
  net.arcs.push_back(BoundedArc{1, 0, 3, 3});
  net.bundles.push_back(ArcBundle{0, 1, {{0, 1}, {1, 1}}});
  CHECK_FALSE(min_cost_flow(net).optimal());

  FlowNetwork crossed;
  crossed.node_count = 2;
  crossed.arcs.push_back(BoundedArc{1, 0, 2, 1});
  CHECK_FALSE(min_cost_flow(crossed).optimal());
}

TEST_CASE("two-stage transport with a cheaper detour") {
  // source 0 -> {1,2} -> 3 sink, sink -> source exactly 2.
  FlowNetwork net;
  net.node_count = 4;
  net.arcs.push_back(BoundedArc{3, 0, 2, 2});
  net.arcs.push_back(BoundedArc{0, 1, 0, 2});
  net.arcs.push_back(BoundedArc{0, 2, 0, 2});
  net.bundles.push_back(ArcBundle{1, 3, {{0, 10}, {1, 1}}});
  net.bundles.push_back(ArcBundle{2, 3, {{2, 2}, {3, 8}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.selected_items == std::vector<int>{1, 2});
  CHECK(r.objective == Rational(3));
}

TEST_CASE("lower bound forces an expensive arc") {
  FlowNetwork net;
  net.node_count = 4;
  net.arcs.push_back(BoundedArc{3, 0, 2, 2});
  net.arcs.push_back(BoundedArc{0, 1, 0, 2});
  net.arcs.push_back(BoundedArc{0, 2, 1, 2});
  net.bundles.push_back(ArcBundle{1, 3, {{0, 1}, {1, 1}}});
  net.bundles.push_back(ArcBundle{2, 3, {{2, 50}}});
  auto r = min_cost_flow(net);
  REQUIRE(r.optimal());
  CHECK(r.selected_items == std::vector<int>{0, 2});
  CHECK(r.objective == Rational(51));
}

TEST_CASE("empty network is trivially optimal") {
  FlowNetwork net;
  net.node_count = 1;
  auto r = min_cost_flow(net);
  CHECK(r.optimal());
  CHECK(r.selected_items.empty());
  CHECK(r.objective == Rational(0));
}

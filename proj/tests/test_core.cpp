#include "doctest.h"
#include "omuco/core.hpp"
#include "omuco/fixtures.hpp"
#include "support/oracles.hpp"

using namespace omuco;

namespace {
SolutionVector bits(const std::string& s) {
  SolutionVector x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x.bits[i] = s[i] == '1';
  return x;
}
OutcomeVector ints(std::initializer_list<std::int64_t> v) { return OutcomeVector{{v.begin(), v.end()}}; }
}  // namespace

TEST_CASE("cost matrix of the six-item example has interval columns") {
  auto inst = fixtures::six_item_example();
  IntMatrix c = cost_matrix(*inst.tilde, inst.n);
  const int expected[3][6] = {{1, 1, 1, 1, 1, 1}, {1, 1, 0, 1, 1, 0}, {1, 1, 0, 0, 1, 0}};
  REQUIRE(c.rows == 3);
  REQUIRE(c.cols == 6);
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) CHECK(c(r, i) == expected[r][i]);
}

TEST_CASE("counting vectors of the six-item example") {
  auto inst = fixtures::six_item_example();
  CHECK(counting_vector(*inst.tilde, bits("110010")).counts == std::vector<int>{3, 3, 3});
  CHECK(counting_vector(*inst.tilde, bits("011111")).counts == std::vector<int>{5, 3, 2});
  CHECK(counting_vector(*inst.tilde, bits("000000")).counts == std::vector<int>{0, 0, 0});
}

TEST_CASE("counting vector is non-increasing, starts at |x| and matches C x") {
  oracle::RandomInstances gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = gen.make(1, 0, 0, 0, 14, 5, false);
    SolutionVector x = oracle::from_mask(inst.n, gen.rng() & ((std::uint64_t{1} << inst.n) - 1));
    auto c = counting_vector(*inst.tilde, x).counts;
    CHECK(c == oracle::counts(*inst.tilde, x));
    CHECK(c.front() == x.count());
    CHECK(std::is_sorted(c.rbegin(), c.rend()));
    IntMatrix m = cost_matrix(*inst.tilde, inst.n);
    for (int r = 0; r < m.rows; ++r) {
      int dot = 0;
      for (int i = 0; i < inst.n; ++i) dot += m(r, i) * x.bits[static_cast<std::size_t>(i)];
      CHECK(dot == c[static_cast<std::size_t>(r)]);
    }
  }
}

TEST_CASE("outcome vectors of instances A and B") {
  auto a = fixtures::instance_a();
  CHECK(outcome(a, bits("1000")) == ints({1, 1, 0, 1, 1, 1, -10}));
  CHECK(outcome(a, bits("0011")) == ints({2, 1, 0, 2, 1, 1, -5}));
  auto b = fixtures::instance_b();
  CHECK(outcome(b, bits("1100")) == ints({2, 1, 0, 2, 1, 0, -15}));
  CHECK(outcome(b, bits("0011")) == ints({2, 1, 0, 2, 1, 0, -12}));
  CHECK(outcome(b, bits("0000")) == ints({0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("outcome layout omits absent objectives") {
  auto inst = fixtures::six_item_example();
  CHECK(outcome_dimension(inst) == 4);
  CHECK(outcome_labels(inst) == std::vector<std::string>{"tilde1", "tilde2", "tilde3", "f"});
  CHECK(outcome(inst, bits("111000")) == ints({-3, -2, -2, 6}));
  CHECK(outcome_labels(fixtures::instance_a()).size() == 7);
}

TEST_CASE("validate classifies and rejects") {
  auto a = fixtures::instance_a();
  auto r = validate(a);
  CHECK(r.valid());
  CHECK(r.three_objective);
  CHECK(r.conflicting);
  CHECK_FALSE(r.trivial);

  auto six = fixtures::six_item_example();
  r = validate(six);
  CHECK(r.valid());
  CHECK(r.bi_objective);

  Instance t = six;
  t.cardinality.reset();
  t.alpha = Sense::kMinimize;
  r = validate(t);
  CHECK(r.trivial);

  Instance none;
  none.n = 2;
  CHECK_FALSE(validate(none).valid());

  Instance bad = six;
  bad.tilde->assignment[0] = 4;
  CHECK_FALSE(validate(bad).valid());
  bad = six;
  bad.f->at(2) = Rational(-1);
  CHECK_FALSE(validate(bad).valid());
  bad = six;
  bad.cardinality = 7;
  CHECK_FALSE(validate(bad).valid());
  bad = six;
  bad.hat = OrdinalObjective{2, {1, 1, 1, 1, 1, 1}};
  CHECK_FALSE(validate(bad).valid());
  bad = six;
  bad.f->pop_back();
  CHECK_FALSE(validate(bad).valid());

  Instance empty;
  empty.gamma = Sense::kMinimize;
  empty.f = std::vector<Rational>{};
  CHECK(validate(empty).valid());
}

TEST_CASE("solution vector helpers") {
  auto x = SolutionVector::from_items(5, {0, 3});
  CHECK(x.to_string() == "10010");
  CHECK(x.count() == 2);
  CHECK(SolutionVector::ones(3).count() == 3);
  CHECK(SolutionVector::zeros(3) < SolutionVector::ones(3));
  CHECK_THROWS(sense_from_int(2));
}

TEST_CASE("cost matrix columns are prefix intervals") {
  oracle::RandomInstances gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = gen.make(-1, 0, 0, 0, 12, 6, false);
    IntMatrix m = cost_matrix(*inst.tilde, inst.n);
    for (int i = 0; i < inst.n; ++i) {
      CHECK(m(0, i) == 1);
      for (int j = 1; j < m.rows; ++j) CHECK(m(j, i) <= m(j - 1, i));
      int ones = 0;
      for (int j = 0; j < m.rows; ++j) ones += m(j, i);
      CHECK(ones == inst.tilde->category(static_cast<std::size_t>(i)));
    }
  }
}

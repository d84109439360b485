#include "omuco/core.hpp"

#include <stdexcept>

namespace omuco {

Sense sense_from_int(int value) {
  switch (value) {
    case -1: return Sense::kMaximize;
    case 0: return Sense::kAbsent;
    case 1: return Sense::kMinimize;
    default: throw std::invalid_argument("sense must be -1, 0 or 1, got " + std::to_string(value));
  }
}

std::vector<int> OrdinalObjective::category_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(categories), 0);
  for (int c : assignment) ++sizes[static_cast<std::size_t>(c - 1)];
  return sizes;
}

int Instance::objective_count() const {
  return (alpha != Sense::kAbsent) + (beta != Sense::kAbsent) + (gamma != Sense::kAbsent);
}

bool Instance::conflicting() const {
  bool has_min = alpha == Sense::kMinimize || beta == Sense::kMinimize || gamma == Sense::kMinimize;
  bool has_max = alpha == Sense::kMaximize || beta == Sense::kMaximize || gamma == Sense::kMaximize;
  return has_min && has_max;
}

SolutionVector SolutionVector::from_items(std::size_t n, const std::vector<int>& items) {
  SolutionVector x(n);
  for (int i : items) x.bits[static_cast<std::size_t>(i)] = 1;
  return x;
}

int SolutionVector::count() const {
  int c = 0;
  for (auto b : bits) c += b;
  return c;
}

std::string SolutionVector::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

IntMatrix cost_matrix(const OrdinalObjective& obj, int n) {
  IntMatrix c(obj.categories, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < obj.category(static_cast<std::size_t>(i)); ++j) c(j, i) = 1;
  }
  return c;
}

CountingVector counting_vector(const OrdinalObjective& obj, const SolutionVector& x) {
  // Histogram of selected categories, then suffix sums.
  std::vector<int> counts(static_cast<std::size_t>(obj.categories), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.selected(i)) ++counts[static_cast<std::size_t>(obj.category(i) - 1)];
  }
  for (int j = obj.categories - 2; j >= 0; --j) {
    counts[static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(j) + 1];
  }
  return CountingVector{std::move(counts)};
}

std::size_t outcome_dimension(const Instance& inst) {
  std::size_t d = 0;
  if (inst.alpha != Sense::kAbsent) d += static_cast<std::size_t>(inst.tilde_categories());
  if (inst.beta != Sense::kAbsent) d += static_cast<std::size_t>(inst.hat_categories());
  if (inst.gamma != Sense::kAbsent) d += 1;
  return d;
}

OutcomeVector outcome(const Instance& inst, const SolutionVector& x) {
  OutcomeVector z;
  z.values.reserve(outcome_dimension(inst));
  if (inst.alpha != Sense::kAbsent) {
    for (int c : counting_vector(*inst.tilde, x).counts) z.values.emplace_back(sign(inst.alpha) * c);
  }
  if (inst.beta != Sense::kAbsent) {
    for (int c : counting_vector(*inst.hat, x).counts) z.values.emplace_back(sign(inst.beta) * c);
  }
  if (inst.gamma != Sense::kAbsent) {
    Rational total;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.selected(i)) total += (*inst.f)[i];
    }
    z.values.push_back(sign(inst.gamma) == 1 ? total : -total);
  }
  return z;
}

std::vector<std::string> outcome_labels(const Instance& inst) {
  std::vector<std::string> labels;
  if (inst.alpha != Sense::kAbsent) {
    for (int j = 1; j <= inst.tilde_categories(); ++j) labels.push_back("tilde" + std::to_string(j));
  }
  if (inst.beta != Sense::kAbsent) {
    for (int j = 1; j <= inst.hat_categories(); ++j) labels.push_back("hat" + std::to_string(j));
  }
  if (inst.gamma != Sense::kAbsent) labels.emplace_back("f");
  return labels;
}

namespace {

void check_ordinal(const char* name, Sense sense, const std::optional<OrdinalObjective>& obj, int n,
                   std::vector<std::string>& out) {
  std::string label(name);
  if (sense == Sense::kAbsent) {
    if (obj) out.push_back(label + " objective given but its sense is 0");
    return;
  }
  if (!obj) {
    out.push_back(label + " objective missing but its sense is nonzero");
    return;
  }
  if (obj->categories < 1) {
    out.push_back(label + " category count must be positive");
    return;
  }
  if (static_cast<int>(obj->assignment.size()) != n) {
    out.push_back(label + " has " + std::to_string(obj->assignment.size()) + " categories for " +
                  std::to_string(n) + " items");
    return;
  }
  for (std::size_t i = 0; i < obj->assignment.size(); ++i) {
    int c = obj->assignment[i];
    if (c < 1 || c > obj->categories) {
      out.push_back(label + " category of item " + std::to_string(i + 1) + " out of range: " +
                    std::to_string(c));
    }
  }
}

}  // namespace

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  auto& v = report.violations;

  if (inst.n < 0) v.emplace_back("item count must be non-negative");
  if (inst.objective_count() == 0) v.emplace_back("no objective: alpha, beta and gamma are all 0");

  check_ordinal("tilde", inst.alpha, inst.tilde, inst.n, v);
  check_ordinal("hat", inst.beta, inst.hat, inst.n, v);

  if (inst.gamma == Sense::kAbsent) {
    if (inst.f) v.emplace_back("f given but gamma is 0");
  } else if (!inst.f) {
    v.emplace_back("f missing but gamma is nonzero");
  } else if (static_cast<int>(inst.f->size()) != inst.n) {
    v.push_back("f has " + std::to_string(inst.f->size()) + " entries for " + std::to_string(inst.n) +
                " items");
  } else {
    for (std::size_t i = 0; i < inst.f->size(); ++i) {
      if ((*inst.f)[i].sign() < 0) v.push_back("negative f for item " + std::to_string(i + 1));
    }
  }

  if (inst.cardinality && (*inst.cardinality < 0 || *inst.cardinality > inst.n)) {
    v.push_back("cardinality " + std::to_string(*inst.cardinality) + " outside 0.." +
                std::to_string(inst.n));
  }

  report.conflicting = inst.conflicting();
  report.trivial = !inst.cardinality && !report.conflicting && inst.objective_count() > 0;
  report.bi_objective = inst.objective_count() == 2;
  report.three_objective = inst.objective_count() == 3;
  return report;
}

}  // namespace omuco

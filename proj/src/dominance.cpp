#include "omuco/dominance.hpp"

#include <algorithm>
#include <cassert>

namespace omuco {

bool dominates(const OutcomeVector& a, const OutcomeVector& b) {
  assert(a.size() == b.size());
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.values[i] < a.values[i]) return false;
    if (a.values[i] < b.values[i]) strict = true;
  }
  return strict;
}

std::vector<LabeledOutcome> canonicalize(std::vector<LabeledOutcome> items, std::uint64_t* collapsed) {
  std::sort(items.begin(), items.end(), [](const LabeledOutcome& a, const LabeledOutcome& b) {
    if (auto c = a.outcome <=> b.outcome; c != 0) return c < 0;
    return a.preimage < b.preimage;
  });
  auto last = std::unique(items.begin(), items.end(), [](const LabeledOutcome& a, const LabeledOutcome& b) {
    return a.outcome == b.outcome;
  });
  if (collapsed) *collapsed = static_cast<std::uint64_t>(items.end() - last);
  items.erase(last, items.end());
  return items;
}

namespace {

ParetoResult assemble(std::vector<LabeledOutcome>& distinct, const std::vector<char>& keep,
                      std::uint64_t candidates, std::uint64_t collapsed) {
  ParetoResult result;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (!keep[i]) continue;
    result.nondominated.push_back(std::move(distinct[i].outcome));
    result.representatives.push_back(std::move(distinct[i].preimage));
  }
  result.stats.candidates = candidates;
  result.stats.duplicates_collapsed = collapsed;
  result.stats.dominated_removed = distinct.size() - result.nondominated.size();
  return result;
}

std::vector<char> pairwise_keep(const std::vector<LabeledOutcome>& distinct) {
  // A dominator is lexicographically smaller, so it has already been seen;
  // dominance is transitive, so checking the archive suffices.
  std::vector<char> keep(distinct.size(), 0);
  std::vector<std::size_t> archive;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool dominated = std::any_of(archive.begin(), archive.end(), [&](std::size_t a) {
      return dominates(distinct[a].outcome, distinct[i].outcome);
    });
    if (!dominated) {
      keep[i] = 1;
      archive.push_back(i);
    }
  }
  return keep;
}

std::optional<std::vector<char>> grid_keep(const std::vector<LabeledOutcome>& distinct, std::size_t max_cells) {
  const std::size_t m = distinct.size();
  if (m == 0) return std::vector<char>{};
  const std::size_t d = distinct.front().outcome.size();
  if (d == 0) return std::nullopt;

  auto value = [&](std::size_t item, std::size_t col) -> const Rational& {
    return distinct[item].outcome.values[col];
  };

  // Pick the scalar column: the single non-integer one, else the widest.
  std::vector<char> integral(d, 1);
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!value(i, c).is_integer()) {
        integral[c] = 0;
        break;
      }
    }
    if (!integral[c]) continue;
    lo[c] = hi[c] = value(0, c).num();
    for (std::size_t i = 1; i < m; ++i) {
      lo[c] = std::min(lo[c], value(i, c).num());
      hi[c] = std::max(hi[c], value(i, c).num());
    }
  }
  std::size_t scalar = d;
  for (std::size_t c = 0; c < d; ++c) {
    if (integral[c]) continue;
    if (scalar != d) return std::nullopt;
    scalar = c;
  }
  if (scalar == d) {
    scalar = 0;
    for (std::size_t c = 1; c < d; ++c) {
      if (hi[c] - lo[c] > hi[scalar] - lo[scalar]) scalar = c;
    }
  }

  // Columns that repeat another column add nothing; columns that negate one
  // pin it to equality.
  enum class Role { kDropped, kAxis, kEqualityAxis };
  std::vector<Role> role(d, Role::kAxis);
  role[scalar] = Role::kDropped;
  for (std::size_t a = 0; a < d; ++a) {
    if (role[a] == Role::kDropped) continue;
    for (std::size_t b = a + 1; b < d; ++b) {
      if (role[b] == Role::kDropped) continue;
      bool same = true;
      bool opposite = true;
      for (std::size_t i = 0; i < m && (same || opposite); ++i) {
        same = same && value(i, a).num() == value(i, b).num();
        opposite = opposite && value(i, a).num() == -value(i, b).num();
      }
      if (same || opposite) {
        role[b] = Role::kDropped;
        if (opposite && !same) role[a] = Role::kEqualityAxis;
      }
    }
  }

  struct Axis {
    std::size_t column;
    std::size_t stride;
    std::size_t extent;
    bool equality;
  };
  std::vector<Axis> axes;
  std::size_t cells = 1;
  for (std::size_t c = 0; c < d; ++c) {
    if (role[c] == Role::kDropped) continue;
    auto extent = static_cast<std::size_t>(hi[c] - lo[c] + 1);
    if (extent > max_cells / cells) return std::nullopt;
    axes.push_back({c, cells, extent, role[c] == Role::kEqualityAxis});
    cells *= extent;
  }

  std::vector<std::size_t> cell_of(m);
  std::vector<std::int32_t> own(cells, -1);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = 0;
    for (const auto& ax : axes) k += static_cast<std::size_t>(value(i, ax.column).num() - lo[ax.column]) * ax.stride;
    cell_of[i] = k;
    // Within a cell the outcomes differ only in the scalar; the smallest wins.
    if (own[k] < 0 || value(i, scalar) < value(static_cast<std::size_t>(own[k]), scalar)) {
      own[k] = static_cast<std::int32_t>(i);
    }
  }

  auto better = [&](std::int32_t a, std::int32_t b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return value(static_cast<std::size_t>(b), scalar) < value(static_cast<std::size_t>(a), scalar) ? b : a;
  };

  // best[k]: argmin of the scalar over all cells <= k on the free axes and
  // equal on the equality axes.
  std::vector<std::int32_t> best = own;
  for (const auto& ax : axes) {
    if (ax.equality) continue;
    for (std::size_t k = 0; k < cells; ++k) {
      if ((k / ax.stride) % ax.extent == 0) continue;
      best[k] = better(best[k], best[k - ax.stride]);
    }
  }

  std::vector<char> keep(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = cell_of[i];
    if (own[k] != static_cast<std::int32_t>(i)) continue;
    bool dominated = false;
    for (const auto& ax : axes) {
      if (ax.equality || (k / ax.stride) % ax.extent == 0) continue;
      std::int32_t b = best[k - ax.stride];
      if (b >= 0 && !(value(i, scalar) < value(static_cast<std::size_t>(b), scalar))) {
        dominated = true;
        break;
      }
    }
    keep[i] = dominated ? 0 : 1;
  }
  return keep;
}

}  // namespace

ParetoResult filter_nondominated_pairwise(std::vector<LabeledOutcome> items) {
  const std::uint64_t candidates = items.size();
  std::uint64_t collapsed = 0;
  auto distinct = canonicalize(std::move(items), &collapsed);
  return assemble(distinct, pairwise_keep(distinct), candidates, collapsed);
}

std::optional<ParetoResult> filter_nondominated_grid(std::vector<LabeledOutcome> items, std::size_t max_cells) {
  const std::uint64_t candidates = items.size();
  std::uint64_t collapsed = 0;
  auto distinct = canonicalize(std::move(items), &collapsed);
  auto keep = grid_keep(distinct, max_cells);
  if (!keep) return std::nullopt;
  return assemble(distinct, *keep, candidates, collapsed);
}

ParetoResult filter_nondominated(std::vector<LabeledOutcome> items) {
  const std::uint64_t candidates = items.size();
  std::uint64_t collapsed = 0;
  auto distinct = canonicalize(std::move(items), &collapsed);
  auto keep = grid_keep(distinct, std::size_t{1} << 24);
  if (!keep) keep = pairwise_keep(distinct);
  return assemble(distinct, *keep, candidates, collapsed);
}

}  // namespace omuco

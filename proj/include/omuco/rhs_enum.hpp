#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omuco/core.hpp"

namespace omuco {

/// Lazy cursor over non-increasing vectors u in Z^K_>= in lexicographic order.
///
/// Either the full lattice {u : u_1 <= n} or the slice {u : u_1 = w}.
class LatticeCursor {
 public:
  /// All u with n >= u_1 >= u_2 >= ... >= u_K >= 0.
  static LatticeCursor all(int categories, int n);
  /// All u with w = u_1 >= u_2 >= ... >= u_K >= 0.
  static LatticeCursor with_first(int categories, int w);

  bool valid() const { return valid_; }
  const std::vector<int>& current() const { return u_; }
  void next();

 private:
  LatticeCursor(int categories, int bound, bool fixed_first);

  std::vector<int> u_;
  int bound_;
  bool fixed_first_;
  bool valid_ = true;
};

std::vector<std::vector<int>> enumerate_U(int categories, int n);
std::vector<std::vector<int>> enumerate_U_w(int categories, int n, int w);

/// Right-hand side of one equality scalarization. A side is absent when the
/// corresponding ordinal objective is. Entries are signed: b = sense * u.
struct RhsVector {
  std::optional<std::vector<int>> b_tilde;
  std::optional<std::vector<int>> b_hat;

  /// Number of selected items every feasible solution has, |b_1|.
  int total() const;

  friend bool operator==(const RhsVector&, const RhsVector&) = default;
  friend auto operator<=>(const RhsVector&, const RhsVector&) = default;
};

/// Lazy stream over U^e (or U^e_w when the instance has a cardinality).
///
/// Order: ascending total w, then tilde lexicographically, then hat. Yields
/// nothing when neither ordinal objective is present.
class RhsEnumerator {
 public:
  explicit RhsEnumerator(const Instance& inst);

  /// Writes the next vector into `out`; returns false once exhausted.
  bool next(RhsVector& out);

 private:
  void reset_slice();
  void advance();

  int tilde_k_ = 0;
  int hat_k_ = 0;
  int tilde_sign_ = 0;
  int hat_sign_ = 0;
  int w_ = 0;
  int w_last_ = -1;
  std::optional<LatticeCursor> tilde_;
  std::optional<LatticeCursor> hat_;
  bool done_ = false;
};

std::vector<RhsVector> enumerate_Ue(const Instance& inst);

/// |U_w| for K categories: binom(w + K - 1, K - 1).
std::uint64_t count_U_w(int categories, int w);
/// |U| = sum over w = 0..n of |U_w|.
std::uint64_t count_U(int categories, int n);
/// Closed-form length of the RhsEnumerator stream for `inst`.
std::uint64_t count_Ue(const Instance& inst);

}  // namespace omuco

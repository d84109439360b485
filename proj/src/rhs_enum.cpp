#include "omuco/rhs_enum.hpp"

#include <cstdlib>
#include <stdexcept>

namespace omuco {

LatticeCursor::LatticeCursor(int categories, int bound, bool fixed_first)
    : u_(static_cast<std::size_t>(categories), 0), bound_(bound), fixed_first_(fixed_first) {
  if (categories < 1) throw std::invalid_argument("lattice needs at least one category");
  if (bound < 0) throw std::invalid_argument("lattice bound must be non-negative");
  if (fixed_first_) u_[0] = bound_;
}

LatticeCursor LatticeCursor::all(int categories, int n) { return {categories, n, false}; }

LatticeCursor LatticeCursor::with_first(int categories, int w) { return {categories, w, true}; }

void LatticeCursor::next() {
  if (!valid_) return;
  // Rightmost component that can grow without breaking monotonicity; all
  // components after it restart at zero.
  int first = fixed_first_ ? 1 : 0;
  for (int j = static_cast<int>(u_.size()) - 1; j >= first; --j) {
    int cap = j == 0 ? bound_ : u_[static_cast<std::size_t>(j) - 1];
    if (u_[static_cast<std::size_t>(j)] < cap) {
      ++u_[static_cast<std::size_t>(j)];
      for (std::size_t k = static_cast<std::size_t>(j) + 1; k < u_.size(); ++k) u_[k] = 0;
      return;
    }
  }
  valid_ = false;
}

std::vector<std::vector<int>> enumerate_U(int categories, int n) {
  std::vector<std::vector<int>> out;
  for (auto c = LatticeCursor::all(categories, n); c.valid(); c.next()) out.push_back(c.current());
  return out;
}

std::vector<std::vector<int>> enumerate_U_w(int categories, int n, int w) {
  if (w < 0 || w > n) throw std::invalid_argument("cardinality outside 0..n");
  std::vector<std::vector<int>> out;
  for (auto c = LatticeCursor::with_first(categories, w); c.valid(); c.next()) out.push_back(c.current());
  return out;
}

int RhsVector::total() const {
  if (b_tilde) return std::abs(b_tilde->front());
  if (b_hat) return std::abs(b_hat->front());
  return 0;
}

RhsEnumerator::RhsEnumerator(const Instance& inst) {
  if (inst.alpha != Sense::kAbsent) {
    tilde_k_ = inst.tilde_categories();
    tilde_sign_ = sign(inst.alpha);
  }
  if (inst.beta != Sense::kAbsent) {
    hat_k_ = inst.hat_categories();
    hat_sign_ = sign(inst.beta);
  }
  if (tilde_k_ == 0 && hat_k_ == 0) {
    done_ = true;
    return;
  }
  if (inst.cardinality) {
    w_ = *inst.cardinality;
    w_last_ = *inst.cardinality;
  } else {
    w_ = 0;
    w_last_ = inst.n;
  }
  reset_slice();
}

void RhsEnumerator::reset_slice() {
  if (tilde_k_ > 0) tilde_ = LatticeCursor::with_first(tilde_k_, w_);
  if (hat_k_ > 0) hat_ = LatticeCursor::with_first(hat_k_, w_);
}

void RhsEnumerator::advance() {
  if (hat_) {
    hat_->next();
    if (hat_->valid()) return;
    if (tilde_) hat_ = LatticeCursor::with_first(hat_k_, w_);
  }
  if (tilde_) {
    tilde_->next();
    if (tilde_->valid()) return;
  }
  ++w_;
  if (w_ > w_last_) {
    done_ = true;
    return;
  }
  reset_slice();
}

bool RhsEnumerator::next(RhsVector& out) {
  if (done_) return false;
  auto signed_copy = [](const std::vector<int>& u, int s, std::optional<std::vector<int>>& dst) {
    if (!dst) dst.emplace();
    dst->resize(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) (*dst)[j] = s * u[j];
  };
  if (tilde_) {
    signed_copy(tilde_->current(), tilde_sign_, out.b_tilde);
  } else {
    out.b_tilde.reset();
  }
  if (hat_) {
    signed_copy(hat_->current(), hat_sign_, out.b_hat);
  } else {
    out.b_hat.reset();
  }
  advance();
  return true;
}

std::vector<RhsVector> enumerate_Ue(const Instance& inst) {
  std::vector<RhsVector> out;
  RhsEnumerator e(inst);
  RhsVector rhs;
  while (e.next(rhs)) out.push_back(rhs);
  return out;
}

std::uint64_t count_U_w(int categories, int w) {
  // binom(w + K - 1, K - 1), built incrementally so every partial product is
  // itself a binomial coefficient.
  std::uint64_t result = 1;
  for (int i = 1; i < categories; ++i) {
    result = result * static_cast<std::uint64_t>(w + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t count_U(int categories, int n) {
  std::uint64_t total = 0;
  for (int w = 0; w <= n; ++w) total += count_U_w(categories, w);
  return total;
}

std::uint64_t count_Ue(const Instance& inst) {
  bool has_tilde = inst.alpha != Sense::kAbsent;
  bool has_hat = inst.beta != Sense::kAbsent;
  if (!has_tilde && !has_hat) return 0;
  int lo = inst.cardinality ? *inst.cardinality : 0;
  int hi = inst.cardinality ? *inst.cardinality : inst.n;
  std::uint64_t total = 0;
  for (int w = lo; w <= hi; ++w) {
    std::uint64_t t = has_tilde ? count_U_w(inst.tilde_categories(), w) : 1;
    std::uint64_t h = has_hat ? count_U_w(inst.hat_categories(), w) : 1;
    total += t * h;
  }
  return total;
}

}  // namespace omuco

#include "ospcohom/linalg.hpp"

#include <stdexcept>

namespace ospcohom {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar s;
  const SparseVec& small = a.size() < b.size() ? a : b;
  const SparseVec& large = a.size() < b.size() ? b : a;
  for (const auto& [i, v] : small) {
    auto it = large.find(i);
    if (it != large.end()) s += v * it->second;
  }
  return s;
}

bool is_zero(const SparseVec& v) { return v.empty(); }

Echelon::Reduction Echelon::reduce(SparseVec v) const {
  Reduction r;
  // Stored rows have no entries left of their pivot, so one left-to-right sweep suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Scalar c = it->second;
    const Row& row = rows_[p->second];
    axpy(v, -c, row.v);
    axpy(r.combination, c, row.combo);
    it = v.upper_bound(col);
  }
  r.residual = std::move(v);
  return r;
}

std::optional<SparseVec> Echelon::add(SparseVec v, std::size_t label) {
  Reduction r = reduce(std::move(v));
  SparseVec combo;
  combo[label] = Scalar(1);
  axpy(combo, Scalar(-1), r.combination);
  if (r.residual.empty()) return combo;
  const Scalar inv = Scalar(1) / r.residual.begin()->second;
  for (auto& [i, x] : r.residual) x *= inv;
  for (auto& [i, x] : combo) x *= inv;
  pivot_row_.emplace(r.residual.begin()->first, rows_.size());
  rows_.push_back(Row{std::move(r.residual), std::move(combo)});
  return std::nullopt;
}

bool Echelon::add(SparseVec v) {
  Reduction r = reduce(std::move(v));
  if (r.residual.empty()) return false;
  const Scalar inv = Scalar(1) / r.residual.begin()->second;
  for (auto& [i, x] : r.residual) x *= inv;
  pivot_row_.emplace(r.residual.begin()->first, rows_.size());
  rows_.push_back(Row{std::move(r.residual), {}});
  return true;
}

SparseVec Echelon::separating_functional(const SparseVec& residual) const {
  if (residual.empty()) throw std::invalid_argument("separating_functional: zero residual");
  const std::size_t c0 = residual.begin()->first;
  if (pivot_row_.count(c0)) throw std::invalid_argument("separating_functional: residual not reduced");
  // y = e_c0 + sum_p y_p e_p; row p only meets pivots added after it, so solve newest first.
  SparseVec y;
  y[c0] = Scalar(1);
  for (std::size_t idx = rows_.size(); idx-- > 0;) {
    const Row& row = rows_[idx];
    const std::size_t p = row.v.begin()->first;
    Scalar s;
    for (const auto& [i, x] : row.v) {
      if (i == p) continue;
      auto it = y.find(i);
      if (it != y.end()) s += x * it->second;
    }
    if (!s.is_zero()) y[p] = -s;
  }
  return y;
}

}  // namespace ospcohom

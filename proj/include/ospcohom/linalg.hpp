#pragma once

// Sparse exact linear algebra: an incrementally built row echelon form that
// remembers how each stored row was produced from the inputs.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ospcohom/scalar.hpp"

namespace ospcohom {

using SparseVec = std::map<std::size_t, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a x
Scalar dot(const SparseVec& a, const SparseVec& b);
bool is_zero(const SparseVec& v);

class Echelon {
 public:
  /// Reduces v; if it is independent it is stored and nullopt returned,
  /// otherwise returns the combination of earlier inputs (and this one, with
  /// coefficient 1 at `label`) that vanishes.
  std::optional<SparseVec> add(SparseVec v, std::size_t label);
  /// Inserts without tracking.
  bool add(SparseVec v);

  std::size_t rank() const { return rows_.size(); }

  struct Reduction {
    SparseVec residual;     // zero at every pivot
    SparseVec combination;  // v - residual = sum combination[label] * input[label]
  };
  Reduction reduce(SparseVec v) const;

  /// Functional y with y . row = 0 for every stored row and y . r = r[c] for a
  /// residual r from reduce(); c is the first nonzero coordinate of r.
  SparseVec separating_functional(const SparseVec& residual) const;

 private:
  struct Row {
    SparseVec v;      // pivot entry normalized to 1
    SparseVec combo;  // in terms of input labels
  };
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;  // coordinate -> index in rows_
};

/// Keys vectors by arbitrary ordered coordinates.
template <class Key>
class Indexer {
 public:
  std::size_t operator()(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(std::size_t i) const { return keys_.at(i); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, std::size_t> index_;
  std::vector<Key> keys_;
};

}  // namespace ospcohom

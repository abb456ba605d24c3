#pragma once

// Deterministic random test data. Seeds are fixed by callers so reports are reproducible.

#include <random>
#include <vector>

#include "ospcohom/diffop.hpp"

namespace ospcohom {

class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  /// Small rational in [-range, range] with denominators 1..3.
  Scalar scalar(int range = 3);
  Poly poly(int max_degree);
  /// Random superfunction; when parity is given only that part is kept.
  SuperFunction function(int max_degree, std::optional<Parity> parity = std::nullopt, bool theta2 = true);
  SuperFunction homogeneous(int max_degree, bool theta2 = true);
  /// Random operator of the given parity, half-order <= max_half_order.
  SuperDiffOp op(const Scalar& lambda, const Scalar& mu, Parity parity, int max_half_order, int max_degree,
                 Vars vars = Vars::two_theta);
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

/// Fixed test functions: x^n t^mask for n <= max_degree, all masks.
std::vector<SuperFunction> monomial_corpus(int max_degree, bool theta2 = true);

}  // namespace ospcohom

#pragma once

// Exact coboundary solving with nontriviality certificates, and truncated H^1
// dimension counts for osp(2|2) (absolute) and osp(2|2) relative to osp(1|2).

#include <array>
#include <optional>
#include <vector>

#include "ospcohom/cochain.hpp"
#include "ospcohom/linalg.hpp"

namespace ospcohom {

/// (generator, eps1, eps2, j, theta mask, x exponent)
using CochainCoord = std::array<int, 6>;

class CochainSpace {
 public:
  SparseVec vec(const Cochain1& Y);
  SparseVec vec(const Cochain2& T);
  /// Inverse of vec(Cochain1) for vectors built by this space.
  Cochain1 cochain(const SparseVec& v, const Cochain1& shape) const;
  const CochainCoord& coord(std::size_t i) const { return index_.key(i); }
  std::optional<std::size_t> find(const CochainCoord& c) const { return index_.find(c); }

 private:
  Indexer<CochainCoord> index_;
  Indexer<std::array<int, 7>> index2_;
};

struct BasisOptions {
  bool relative = false;
  int order = 6;   // half-order bound N: 2j + eps1 + eps2 <= N
  int degree = 4;  // coefficient degree bound M
  /// Keep only cochains of ad(X_x)-weight zero (h1_dimension works there).
  bool weight_zero = false;
  std::optional<Parity> parity;
};

/// Monomial cochains: one generator, one operator monomial, ordered by generator,
/// then (j, eps1, eps2), then theta mask, then x exponent.
std::vector<Cochain1> cochain_basis(const Scalar& lambda, const Scalar& mu, const BasisOptions& opts);

/// Monomial operators of ad(X_x)-weight w within the bounds.
std::vector<SuperDiffOp> weight_monomials(const Scalar& lambda, const Scalar& mu, const Scalar& w, int order,
                                          int degree, std::optional<Parity> parity = std::nullopt,
                                          Vars vars = Vars::two_theta);

/// Weight of the cochain monomial (g, coefficient x^n t^mask, key).
Scalar cochain_weight(GeneratorId g, int n, int mask, OpKey key, const Scalar& lambda, const Scalar& mu);

struct H1Report {
  Scalar lambda;
  Scalar mu;
  bool relative = false;
  int z1_dim = 0;
  int b1_dim = 0;
  int h1_dim = 0;
  int order = 0;
  int degree = 0;
  bool plateau = false;
};
nlohmann::json to_json(const H1Report& r);

/// N = 2(|mu - lambda| + 3) rounded up to an integer, M = 4.
std::pair<int, int> default_truncation(const Scalar& lambda, const Scalar& mu);

H1Report h1_dimension(const Scalar& lambda, const Scalar& mu, bool relative, int order, int degree);

/// Same count on the whole truncated cochain space, without the weight
/// grading; slow, meant as an independent cross-check at small bounds.
/// plateau is left false.
H1Report h1_dimension_ungraded(const Scalar& lambda, const Scalar& mu, bool relative, int order, int degree);

/// Kernel of delta1 on the truncated (weight-zero) cochain space.
std::vector<Cochain1> cocycle_basis(const Scalar& lambda, const Scalar& mu, const BasisOptions& opts);

/// Rank of the span of the given cochains.
std::size_t cochain_rank(const std::vector<Cochain1>& cochains);

/// Y = delta0(normalizer) + normalized, with normalized(X1) = 0.
struct Normalization {
  SuperDiffOp normalizer;
  Cochain1 normalized;
};
Normalization normalize(const Cochain1& Y);

/// Proof that a normalized cocycle is not delta0 of any operator: every solution
/// would have constant coefficients and weights in the listed set, and the
/// functional annihilates delta0 of each candidate while pairing nonzero with Y.
struct Certificate {
  Normalization normalization;
  std::vector<Scalar> weights;
  std::vector<SuperDiffOp> candidates;
  std::vector<std::pair<CochainCoord, Scalar>> functional;
  Scalar pairing;
};
nlohmann::json to_json(const Certificate& c);

struct SolveResult {
  std::optional<SuperDiffOp> solution;
  std::optional<Certificate> certificate;
  bool is_coboundary() const { return solution.has_value(); }
};

/// Requires a cocycle (throws std::invalid_argument otherwise).
SolveResult coboundary_solve(const Cochain1& Y);

/// Re-derives every claim of the certificate from Y alone.
bool verify_certificate(const Cochain1& Y, const Certificate& c);

/// Cohomology classes of cocycles with common (domain, lambda, mu) are linearly independent.
bool classes_independent(const std::vector<Cochain1>& cocycles);

}  // namespace ospcohom

#pragma once

// 1-cochains of a subalgebra of osp(2|2) with values in D_{lambda,mu}, and the
// Chevalley-Eilenberg differential in degrees 0 and 1.

#include <map>
#include <optional>
#include <utility>

#include "ospcohom/diffop.hpp"

namespace ospcohom {

/// Cached structure constants for each algebra.
const StructureConstants& structure(Algebra a);

class Cochain1 {
 public:
  /// `parity` is the total parity; `shifted` marks values in Pi(D).
  Cochain1(Algebra domain, Scalar lambda, Scalar mu, Parity parity, Vars vars = Vars::two_theta,
           bool shifted = false);

  Algebra domain() const { return domain_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  Parity parity() const { return parity_; }
  Vars vars() const { return vars_; }
  bool shifted() const { return shifted_; }

  /// Throws std::invalid_argument on weight, parity, or domain mismatch.
  void set(GeneratorId g, SuperDiffOp value);
  /// Zero operator when unset.
  SuperDiffOp value(GeneratorId g) const;
  const std::map<GeneratorId, SuperDiffOp>& values() const { return values_; }

  bool is_zero() const;

  Cochain1 operator-() const;
  Cochain1& operator+=(const Cochain1& o);
  Cochain1& operator-=(const Cochain1& o);
  Cochain1& operator*=(const Scalar& c);
  friend Cochain1 operator+(Cochain1 a, const Cochain1& b) { return a += b; }
  friend Cochain1 operator-(Cochain1 a, const Cochain1& b) { return a -= b; }
  friend Cochain1 operator*(Cochain1 a, const Scalar& c) { return a *= c; }
  friend Cochain1 operator*(const Scalar& c, Cochain1 a) { return a *= c; }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;

  /// Values of a Pi-shifted cochain carry the shift tag.
  Cochain1 with_shift(bool shifted) const;

 private:
  void check_compatible(const Cochain1& o) const;

  Algebra domain_;
  Scalar lambda_;
  Scalar mu_;
  Parity parity_;
  Vars vars_;
  bool shifted_ = false;
  std::map<GeneratorId, SuperDiffOp> values_;
};

/// Values on pairs (g, h) with g before h in the basis order, diagonal included.
using Cochain2 = std::map<std::pair<GeneratorId, GeneratorId>, SuperDiffOp>;

/// g -> (-1)^{|g||A|} g.A over the basis of `domain`.
Cochain1 delta0(const SuperDiffOp& A, Algebra domain = Algebra::osp22);
/// All nonzero entries of the 2-cochain dY.
Cochain2 delta1(const Cochain1& Y);
/// One entry of dY.
SuperDiffOp delta1_at(const Cochain1& Y, GeneratorId g, GeneratorId h);

struct CocycleCheck {
  bool ok = true;
  std::optional<std::pair<GeneratorId, GeneratorId>> witness;
  explicit operator bool() const { return ok; }
};
CocycleCheck is_cocycle(const Cochain1& Y);

/// Vanishes on osp(1|2) and X_G.Y(X_H) = (-1)^{|G||Y|} Y([X_G, X_H]) for G in osp(1|2), H in Pi(h).
bool is_relative_cochain(const Cochain1& Y);

/// Y^(g) = Pi(sigma o Y(g)); involutive, flips the cochain parity.
Cochain1 pi_twist(const Cochain1& Y);

nlohmann::json to_json(const Cochain1& Y);

}  // namespace ospcohom

#pragma once

// Normal-form differential operators between weighted densities:
//   A = sum a_{e1,e2,j} eta_1^{e1} eta_2^{e2} d_x^j,  e1, e2 in {0, 1},
// with superfunction coefficients a. Higher eta powers fold via eta_i^2 = -d_x.

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "ospcohom/contact.hpp"

namespace ospcohom {

struct OpKey {
  int eps1 = 0;
  int eps2 = 0;
  int j = 0;
  /// Half-integer order 2j + eps1 + eps2 (each eta counts one half).
  int half_order() const { return 2 * j + eps1 + eps2; }
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// Marks an element of the parity-shifted module Pi(D).
struct ParityShiftTag {
  bool shifted = false;
  ParityShiftTag operator*(ParityShiftTag o) const { return {shifted != o.shifted}; }
  friend bool operator==(const ParityShiftTag&, const ParityShiftTag&) = default;
};

class SuperDiffOp {
 public:
  SuperDiffOp(Scalar source_weight, Scalar target_weight, Vars vars = Vars::two_theta);

  static SuperDiffOp identity(Scalar weight, Vars vars = Vars::two_theta);
  /// Multiplication by f, from weight lambda to mu.
  static SuperDiffOp multiplication(const SuperFunction& f, Scalar lambda, Scalar mu, Vars vars = Vars::two_theta);
  /// Single normal-form monomial coefficient * eta_1^{e1} eta_2^{e2} d^j.
  static SuperDiffOp monomial(OpKey key, const SuperFunction& coefficient, Scalar lambda, Scalar mu,
                              Vars vars = Vars::two_theta);
  /// eta_{w_0} eta_{w_1} ... eta_{w_n} (leftmost first), folded to normal form.
  static SuperDiffOp eta_word(const std::vector<int>& word, Scalar lambda, Scalar mu, Vars vars = Vars::two_theta);
  static SuperDiffOp d_x(int j, Scalar lambda, Scalar mu, Vars vars = Vars::two_theta);
  /// d/dt_i = eta_i + t_i d_x as an operator.
  static SuperDiffOp d_theta(int i, Scalar lambda, Scalar mu, Vars vars = Vars::two_theta);
  /// Parity involution on functions, as an operator (weight preserving).
  static SuperDiffOp sigma(Scalar weight, Vars vars = Vars::two_theta);

  const Scalar& source_weight() const { return source_; }
  const Scalar& target_weight() const { return target_; }
  Vars vars() const { return vars_; }
  const std::map<OpKey, SuperFunction>& terms() const { return terms_; }
  ParityShiftTag shift() const { return shift_; }
  SuperDiffOp with_shift(ParityShiftTag t) const;
  SuperDiffOp with_weights(Scalar lambda, Scalar mu) const;

  bool is_zero() const { return terms_.empty(); }
  /// Natural parity (coefficient parity + e1 + e2) combined with the shift tag.
  /// nullopt when the terms disagree. Zero is even.
  std::optional<Parity> parity() const;
  Parity require_parity(std::string_view context) const;
  /// max 2j + e1 + e2 over terms, -1 for zero.
  int half_order() const;
  /// max x-degree over coefficients, -1 for zero.
  int coefficient_degree() const;

  void add_term(OpKey key, const SuperFunction& coefficient);

  SuperDiffOp operator-() const;
  SuperDiffOp& operator+=(const SuperDiffOp& o);
  SuperDiffOp& operator-=(const SuperDiffOp& o);
  SuperDiffOp& operator*=(const Scalar& c);
  friend SuperDiffOp operator+(SuperDiffOp a, const SuperDiffOp& b) { return a += b; }
  friend SuperDiffOp operator-(SuperDiffOp a, const SuperDiffOp& b) { return a -= b; }
  friend SuperDiffOp operator*(SuperDiffOp a, const Scalar& c) { return a *= c; }
  friend SuperDiffOp operator*(const Scalar& c, SuperDiffOp a) { return a *= c; }
  friend bool operator==(const SuperDiffOp&, const SuperDiffOp&) = default;

  /// Left multiplication of every coefficient by f (f * A).
  SuperDiffOp premultiply(const SuperFunction& f) const;

  std::string str() const;

 private:
  void check_compatible(const SuperDiffOp& o, const char* what) const;

  Scalar source_;
  Scalar target_;
  Vars vars_;
  ParityShiftTag shift_;
  std::map<OpKey, SuperFunction> terms_;
};

/// Applies the operator to the body of a density of weight source_weight.
/// Throws std::invalid_argument on weight or variable mismatch.
Density op_apply(const SuperDiffOp& A, const Density& D);
/// Applies to a bare superfunction (no weight bookkeeping).
SuperFunction op_apply(const SuperDiffOp& A, const SuperFunction& F);

/// A o B; requires B.target_weight == A.source_weight.
SuperDiffOp op_compose(const SuperDiffOp& A, const SuperDiffOp& B);

/// The operator L^lambda_{X} acting on weight-lambda densities.
SuperDiffOp lie_operator(const ContactField& X, const Scalar& lambda, Vars vars = Vars::two_theta);

/// X.A = L^mu_X o A - (-1)^{|A||X|} A o L^lambda_X (parity of A includes its shift tag).
SuperDiffOp module_action(const ContactField& X, const SuperDiffOp& A);

/// Eigenvalue of A under module_action(X_x, .). Throws std::invalid_argument for
/// x-dependent coefficients; nullopt when A is not an eigenvector.
std::optional<Scalar> weight_of(const SuperDiffOp& A);
/// ad(X_x)-weight of the monomial x^n t^mask eta^eps d^j between weights lambda, mu.
Scalar monomial_weight(int x_exponent, int mask, OpKey key, const Scalar& lambda, const Scalar& mu);

/// F = F1 + F2 t2 with d2 F1 = d2 F2 = 0 -> (F1 alpha^lambda, Pi(F2 alpha^{lambda+1/2})).
struct PhiSplit {
  Density first;
  Density second;  // t2-free, weight lambda + 1/2
  ParityShiftTag second_tag{true};
};
PhiSplit phi_split(const Density& D);
/// Inverse of phi_split.
Density phi_join(const Density& first, const Density& second);

/// 2x2 block operator on F^1_lambda (+) Pi(F^1_{lambda+1/2}).
struct BlockOperator {
  SuperDiffOp a11;  // D^1_{lambda, mu}
  SuperDiffOp a22;  // D^1_{lambda+1/2, mu+1/2}
  SuperDiffOp a21;  // Pi(D^1_{lambda, mu+1/2}): first slot -> second slot
  SuperDiffOp a12;  // Pi(D^1_{lambda+1/2, mu}): second slot -> first slot

  static BlockOperator zero(const Scalar& lambda, const Scalar& mu);
};

/// Phi_mu^{-1} o A o Phi_lambda as one operator on two-theta densities.
/// Throws std::invalid_argument when the block weights do not follow the pattern.
SuperDiffOp psi_transport(const BlockOperator& blocks);

nlohmann::json to_json(const SuperDiffOp& A);
SuperDiffOp superdiffop_from_json(const nlohmann::json& j);

}  // namespace ospcohom

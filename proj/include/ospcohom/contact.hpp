#pragma once

// Contact vector fields X_F on R^{1|2}, the contact bracket, weighted densities
// and the polynomial bases of osp(2|2) and its subalgebras.

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ospcohom/superfield.hpp"

namespace ospcohom {

/// Which odd variables are in play: R^{1|1} (t1 only) or R^{1|2}.
enum class Vars { one_theta, two_theta };

/// Basis generators of osp(2|2), in the fixed report order.
enum class GeneratorId { X1, Xx, Xx2, Xt1, Xt2, Xxt1, Xxt2, Xt1t2 };

inline constexpr std::array<GeneratorId, 8> all_generators{
    GeneratorId::X1,  GeneratorId::Xx,   GeneratorId::Xx2,  GeneratorId::Xt1,
    GeneratorId::Xt2, GeneratorId::Xxt1, GeneratorId::Xxt2, GeneratorId::Xt1t2};

std::string_view name(GeneratorId g);
GeneratorId generator_from_name(std::string_view n);
/// The generating superfunction: 1, x, x^2, t1, t2, x t1, x t2, t1 t2.
SuperFunction generating_function(GeneratorId g);
Parity parity(GeneratorId g);
/// Eigenvalue of ad(X_x): -1, 0, 1 for 1, x, x^2; -1/2, 1/2 for t_i, x t_i; 0 for t1 t2.
Scalar weight(GeneratorId g);

enum class Algebra { osp22, osp12, sl2, pi_h };
std::string_view name(Algebra a);
Algebra algebra_from_name(std::string_view n);

/// Contact field X_F for a parity-homogeneous generator F.
class ContactField {
 public:
  /// Throws std::invalid_argument for a mixed-parity generator.
  explicit ContactField(SuperFunction generator);
  explicit ContactField(GeneratorId g) : ContactField(generating_function(g)) {}

  const SuperFunction& generator() const { return generator_; }
  Parity parity() const { return parity_; }
  bool is_theta2_free() const { return generator_.is_theta2_free(); }

 private:
  SuperFunction generator_;
  Parity parity_;
};

/// X_F(G) = F G' - 1/2 (-1)^{|F|} sum_i eta_i(F) eta_i(G).
SuperFunction field_apply(const ContactField& X, const SuperFunction& G);
/// {F, G} = F G' - F' G - 1/2 (-1)^{|F|} sum_i eta_i(F) eta_i(G).
SuperFunction contact_bracket(const SuperFunction& F, const SuperFunction& G);

/// G alpha^lambda on R^{1|1} (t2-free body) or R^{1|2}.
class Density {
 public:
  Density(SuperFunction body, Scalar weight, Vars vars = Vars::two_theta);

  const SuperFunction& body() const { return body_; }
  const Scalar& weight() const { return weight_; }
  Vars vars() const { return vars_; }
  friend bool operator==(const Density&, const Density&) = default;

 private:
  SuperFunction body_;
  Scalar weight_;
  Vars vars_;
};

/// L^lambda_{X_F}(G) = X_F(G) + lambda F' G. One-theta densities require a t2-free field.
Density lie_derivative(const ContactField& X, const Density& D);

std::vector<GeneratorId> basis_ids(Algebra a);
std::vector<ContactField> basis_of(Algebra a);

/// Linear combination of basis generators.
using GeneratorCombination = std::map<GeneratorId, Scalar>;

/// Expands a superfunction in the generator monomials; throws std::domain_error
/// if it leaves the span of osp(2|2).
GeneratorCombination expand_in_generators(const SuperFunction& f);

/// bracket(g, h) = [X_g, X_h] expanded in the basis.
class StructureConstants {
 public:
  /// Throws std::domain_error if a bracket leaves the span (closure failure).
  explicit StructureConstants(Algebra a);

  Algebra algebra() const { return algebra_; }
  const std::vector<GeneratorId>& basis() const { return basis_; }
  const GeneratorCombination& bracket(GeneratorId g, GeneratorId h) const;

 private:
  Algebra algebra_;
  std::vector<GeneratorId> basis_;
  std::map<std::pair<GeneratorId, GeneratorId>, GeneratorCombination> table_;
};

/// Shared osp(2|2) table.
const StructureConstants& osp22_structure();

nlohmann::json to_json(const StructureConstants& sc);

}  // namespace ospcohom

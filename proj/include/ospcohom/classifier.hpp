#pragma once

// Invariant bilinear differential operators h (x) F_lambda -> F_mu under sl(2)
// or osp(1|2), found as the exact nullspace of the invariance equations over a
// constant-coefficient ansatz.

#include <optional>
#include <string>
#include <vector>

#include "ospcohom/contact.hpp"

namespace ospcohom {

/// h0 = span{x, 1} in F_{-1/2}; h1 = span{1} in F_0; h_full = span{t1, x, 1} in F^1_{-1/2}.
enum class SourceH { h0, h1, h_full };
std::string_view name(SourceH s);
SourceH source_h_from_name(std::string_view n);

/// t11: mu = lambda + k - 1/2; t12: mu = lambda + k. h0 is always t11, h1 always t12.
enum class InvariantType { t11, t12 };

/// t1^theta (eta1^eps_h d^j_h H) (eta1^eps_f d^j_f F), times (-1)^{|H| eps_f}.
struct BilinearTerm {
  int eps_h = 0;
  int j_h = 0;
  int eps_f = 0;
  int j_f = 0;
  int theta = 0;
  friend auto operator<=>(const BilinearTerm&, const BilinearTerm&) = default;
};

struct BilinearOp {
  SourceH source_h = SourceH::h0;
  Scalar lambda;
  Scalar mu;
  std::map<BilinearTerm, Scalar> terms;
  Parity parity = Parity::even;
};
nlohmann::json to_json(const BilinearOp& A);

SuperFunction bilinear_apply(const BilinearOp& A, const SuperFunction& h, const SuperFunction& f);

/// Weight of the h-slot densities and the generating functions spanning it.
Scalar h_weight(SourceH s);
std::vector<SuperFunction> h_basis(SourceH s);

Scalar target_weight(SourceH s, InvariantType t, const Scalar& lambda, int k);

/// Printed constraint polynomial whose zero set should carry the solutions;
/// nullopt for combinations without one (sl2 acting on h_full).
std::optional<Scalar> constraint_polynomial(Algebra a, SourceH s, InvariantType t, const Scalar& lambda, int k);

struct ClassificationResult {
  Algebra algebra = Algebra::sl2;
  SourceH source_h = SourceH::h0;
  InvariantType type = InvariantType::t11;
  Scalar lambda;
  Scalar mu;
  int k = 0;
  std::vector<BilinearOp> solution_basis;
  std::optional<Scalar> constraint_evaluation;
};
nlohmann::json to_json(const ClassificationResult& r);

/// a is sl2 or osp12; osp12 requires h_full. Throws std::invalid_argument otherwise or for k < 0.
ClassificationResult classify(Algebra a, SourceH s, const Scalar& lambda, int k,
                              InvariantType t = InvariantType::t11);

/// Invariance defect vanishes for every generator, h basis element and corpus monomial.
bool is_invariant(const BilinearOp& A, Algebra a);

/// The printed closed form for the case, if there is one.
std::optional<BilinearOp> closed_form(SourceH s, InvariantType t, const Scalar& lambda, int k);

/// The closed form is invariant and lies in the (one-dimensional) solution span.
bool check_closed_form(const ClassificationResult& r);

struct ScanCell {
  Scalar lambda;
  int k = 0;
  Scalar mu;
  int dim = 0;
  std::optional<Scalar> constraint;
  bool agrees = true;                     // dim > 0 exactly when the constraint vanishes
  std::optional<bool> closed_form_ok;     // only for nonempty cells
};

struct ScanTable {
  Algebra algebra;
  SourceH source_h;
  InvariantType type;
  std::vector<ScanCell> cells;
  bool all_agree() const;
};
nlohmann::json to_json(const ScanTable& t);

ScanTable scan_constraint_variety(Algebra a, SourceH s, InvariantType t, const std::vector<Scalar>& lambdas, int k_max,
                                  int jobs = 1);

}  // namespace ospcohom

#pragma once

// Explicit cocycles and coboundary generators, built from closed-form expressions.

#include <string>
#include <vector>

#include "ospcohom/cochain.hpp"

namespace ospcohom {

enum class ClaimedStatus { nontrivial_cocycle, coboundary_generator };
std::string_view to_string(ClaimedStatus s);

enum class ParameterKind { lambda, k };

struct CatalogInfo {
  std::string name;
  std::string symbol;
  ParameterKind kind;
  std::string range;  // human-readable validity range
  std::string weights;  // (lambda, mu) as a function of the parameter
  std::string module;   // what the values are operators on
  ClaimedStatus status;
  Parity parity;       // parity of the cochain as built
};

struct CatalogEntry {
  CatalogInfo info;
  Scalar parameter;
  Cochain1 cochain;
};

/// Every constructor, in a fixed order.
const std::vector<CatalogInfo>& catalog_list();
const CatalogInfo& catalog_info(std::string_view name);

/// Throws std::invalid_argument for an unknown name or a parameter out of range.
CatalogEntry make(std::string_view name, const Scalar& parameter);

/// The closed form split into its additive summands, each as its own cochain.
std::vector<std::pair<std::string, Cochain1>> catalog_summands(std::string_view name, const Scalar& parameter);

struct CoboundaryGenerator {
  std::string label;
  Parity listed_parity;
  SuperDiffOp op;
};
/// Operators whose delta0 generates relative coboundaries at (lambda, mu); union
/// of every matching case, empty when none applies.
std::vector<CoboundaryGenerator> relative_coboundary_generators(const Scalar& lambda, const Scalar& mu);

/// Which block of F^1_l (+) Pi(F^1_{l+1/2}) -> F^1_m (+) Pi(F^1_{m+1/2}) an operator lives in.
enum class Slot { a11, a22, a21, a12 };
std::string_view to_string(Slot s);

/// Lifts an osp(1|2) cochain on one-theta operators into osp(1|2) cochains on
/// two-theta operators through the block decomposition; the off-diagonal slots
/// use pi_twist. The lifted weights are those of the chosen slot.
Cochain1 lift_to_two_theta(const Cochain1& Y, Slot slot);

/// True when every value of `lifted` maps each corpus density into `slot` only,
/// agreeing there with the block built from Y.
bool lands_in_slot(const Cochain1& lifted, const Cochain1& Y, Slot slot, int corpus_degree = 4);

}  // namespace ospcohom

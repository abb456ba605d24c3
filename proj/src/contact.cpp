#include "ospcohom/contact.hpp"

#include <algorithm>
#include <stdexcept>

namespace ospcohom {

namespace {

struct GeneratorInfo {
  GeneratorId id;
  std::string_view name;
  int mask;
  int x_exponent;
};

constexpr std::array<GeneratorInfo, 8> generator_table{{
    {GeneratorId::X1, "X1", theta::one, 0},
    {GeneratorId::Xx, "Xx", theta::one, 1},
    {GeneratorId::Xx2, "Xx2", theta::one, 2},
    {GeneratorId::Xt1, "Xt1", theta::t1, 0},
    {GeneratorId::Xt2, "Xt2", theta::t2, 0},
    {GeneratorId::Xxt1, "Xxt1", theta::t1, 1},
    {GeneratorId::Xxt2, "Xxt2", theta::t2, 1},
    {GeneratorId::Xt1t2, "Xt1t2", theta::t12, 0},
}};

const GeneratorInfo& info(GeneratorId g) { return generator_table[static_cast<int>(g)]; }

}  // namespace

std::string_view name(GeneratorId g) { return info(g).name; }

GeneratorId generator_from_name(std::string_view n) {
  for (const auto& gi : generator_table)
    if (gi.name == n) return gi.id;
  throw std::invalid_argument("unknown generator '" + std::string(n) + "'");
}

SuperFunction generating_function(GeneratorId g) {
  return SuperFunction::monomial(info(g).mask, info(g).x_exponent);
}

Parity parity(GeneratorId g) { return parity_from_bit(theta::degree(info(g).mask)); }

Scalar weight(GeneratorId g) {
  return Scalar(info(g).x_exponent - 1) + Scalar(theta::degree(info(g).mask), 2);
}

std::string_view name(Algebra a) {
  switch (a) {
    case Algebra::osp22: return "osp22";
    case Algebra::osp12: return "osp12";
    case Algebra::sl2: return "sl2";
    case Algebra::pi_h: return "pi_h";
  }
  return "?";
}

Algebra algebra_from_name(std::string_view n) {
  for (Algebra a : {Algebra::osp22, Algebra::osp12, Algebra::sl2, Algebra::pi_h})
    if (name(a) == n) return a;
  throw std::invalid_argument("unknown algebra '" + std::string(n) + "'");
}

ContactField::ContactField(SuperFunction generator)
    : generator_(std::move(generator)), parity_(require_parity(generator_, "ContactField")) {}

namespace {

SuperFunction eta_pairing(const SuperFunction& F, Parity pf, const SuperFunction& G) {
  SuperFunction sum = eta_bar(F, 1) * eta_bar(G, 1) + eta_bar(F, 2) * eta_bar(G, 2);
  return sum * Scalar(-sign_pow(bit(pf)), 2);
}

}  // namespace

SuperFunction field_apply(const ContactField& X, const SuperFunction& G) {
  const SuperFunction& F = X.generator();
  return F * partial_x(G) + eta_pairing(F, X.parity(), G);
}

SuperFunction contact_bracket(const SuperFunction& F, const SuperFunction& G) {
  const Parity pf = require_parity(F, "contact_bracket");
  require_parity(G, "contact_bracket");
  return F * partial_x(G) - partial_x(F) * G + eta_pairing(F, pf, G);
}

Density::Density(SuperFunction body, Scalar weight, Vars vars)
    : body_(std::move(body)), weight_(std::move(weight)), vars_(vars) {
  if (vars_ == Vars::one_theta && !body_.is_theta2_free())
    throw std::invalid_argument("Density: one-theta density with t2-dependent body");
}

Density lie_derivative(const ContactField& X, const Density& D) {
  if (D.vars() == Vars::one_theta && !X.is_theta2_free())
    throw std::invalid_argument("lie_derivative: field leaves R^{1|1} densities");
  SuperFunction body = field_apply(X, D.body()) + D.weight() * (partial_x(X.generator()) * D.body());
  return Density(std::move(body), D.weight(), D.vars());
}

std::vector<GeneratorId> basis_ids(Algebra a) {
  using G = GeneratorId;
  switch (a) {
    case Algebra::osp22: return {all_generators.begin(), all_generators.end()};
    case Algebra::osp12: return {G::X1, G::Xx, G::Xx2, G::Xt1, G::Xxt1};
    case Algebra::sl2: return {G::X1, G::Xx, G::Xx2};
    case Algebra::pi_h: return {G::Xt2, G::Xxt2, G::Xt1t2};
  }
  return {};
}

std::vector<ContactField> basis_of(Algebra a) {
  std::vector<ContactField> out;
  for (GeneratorId g : basis_ids(a)) out.emplace_back(g);
  return out;
}

GeneratorCombination expand_in_generators(const SuperFunction& f) {
  GeneratorCombination out;
  for (int mask = 0; mask < 4; ++mask) {
    for (const auto& [e, c] : f.component(mask).terms()) {
      auto it = std::find_if(generator_table.begin(), generator_table.end(),
                             [&](const GeneratorInfo& gi) { return gi.mask == mask && gi.x_exponent == e; });
      if (it == generator_table.end())
        throw std::domain_error("superfunction " + f.str() + " leaves the span of osp(2|2)");
      out[it->id] = c;
    }
  }
  return out;
}

StructureConstants::StructureConstants(Algebra a) : algebra_(a), basis_(basis_ids(a)) {
  for (GeneratorId g : basis_) {
    for (GeneratorId h : basis_) {
      GeneratorCombination comb = expand_in_generators(contact_bracket(generating_function(g), generating_function(h)));
      for (const auto& [k, c] : comb) {
        if (std::find(basis_.begin(), basis_.end(), k) == basis_.end())
          throw std::domain_error("bracket [" + std::string(name(g)) + "," + std::string(name(h)) + "] leaves " +
                                  std::string(name(a)));
      }
      table_.emplace(std::pair{g, h}, std::move(comb));
    }
  }
}

const GeneratorCombination& StructureConstants::bracket(GeneratorId g, GeneratorId h) const {
  auto it = table_.find({g, h});
  if (it == table_.end()) throw std::out_of_range("generator outside the algebra basis");
  return it->second;
}

const StructureConstants& osp22_structure() {
  static const StructureConstants table(Algebra::osp22);
  return table;
}

nlohmann::json to_json(const StructureConstants& sc) {
  nlohmann::json entries = nlohmann::json::array();
  for (GeneratorId g : sc.basis()) {
    for (GeneratorId h : sc.basis()) {
      nlohmann::json result = nlohmann::json::object();
      for (const auto& [k, c] : sc.bracket(g, h)) result[std::string(name(k))] = c.str();
      entries.push_back({{"left", name(g)}, {"right", name(h)}, {"result", result}});
    }
  }
  nlohmann::json names = nlohmann::json::array();
  for (GeneratorId g : sc.basis()) names.push_back(name(g));
  return {{"algebra", name(sc.algebra())}, {"generators", names}, {"brackets", entries}};
}

}  // namespace ospcohom

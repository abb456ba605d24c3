#include "ospcohom/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ospcohom {

const StructureConstants& structure(Algebra a) {
  static const StructureConstants osp22(Algebra::osp22);
  static const StructureConstants osp12(Algebra::osp12);
  static const StructureConstants sl2(Algebra::sl2);
  switch (a) {
    case Algebra::osp22: return osp22;
    case Algebra::osp12: return osp12;
    case Algebra::sl2: return sl2;
    case Algebra::pi_h: break;
  }
  throw std::invalid_argument("pi_h is not a subalgebra");
}

namespace {

bool in_domain(Algebra a, GeneratorId g) {
  const auto ids = basis_ids(a);
  return std::find(ids.begin(), ids.end(), g) != ids.end();
}

}  // namespace

Cochain1::Cochain1(Algebra domain, Scalar lambda, Scalar mu, Parity parity, Vars vars, bool shifted)
    : domain_(domain), lambda_(std::move(lambda)), mu_(std::move(mu)), parity_(parity), vars_(vars),
      shifted_(shifted) {
  if (domain == Algebra::pi_h) throw std::invalid_argument("Cochain1: domain must be a subalgebra");
  if (vars == Vars::one_theta && domain == Algebra::osp22)
    throw std::invalid_argument("Cochain1: osp(2|2) does not act on one-theta operators");
}

void Cochain1::set(GeneratorId g, SuperDiffOp value) {
  if (!in_domain(domain_, g))
    throw std::invalid_argument("Cochain1::set: " + std::string(name(g)) + " outside " + std::string(name(domain_)));
  if (value.source_weight() != lambda_ || value.target_weight() != mu_ || value.vars() != vars_)
    throw std::invalid_argument("Cochain1::set: operator weights or variables do not match the cochain");
  value = value.with_shift({shifted_});
  if (value.is_zero()) {
    values_.erase(g);
    return;
  }
  const Parity p = value.require_parity("Cochain1::set");
  if (p != parity_ + ospcohom::parity(g))
    throw std::invalid_argument("Cochain1::set: value on " + std::string(name(g)) + " has the wrong parity");
  values_.insert_or_assign(g, std::move(value));
}

SuperDiffOp Cochain1::value(GeneratorId g) const {
  auto it = values_.find(g);
  if (it != values_.end()) return it->second;
  return SuperDiffOp(lambda_, mu_, vars_).with_shift({shifted_});
}

bool Cochain1::is_zero() const { return values_.empty(); }

void Cochain1::check_compatible(const Cochain1& o) const {
  if (domain_ != o.domain_ || lambda_ != o.lambda_ || mu_ != o.mu_ || parity_ != o.parity_ || vars_ != o.vars_ ||
      shifted_ != o.shifted_)
    throw std::invalid_argument("Cochain1: incompatible cochains");
}

Cochain1 Cochain1::operator-() const {
  Cochain1 out = *this;
  for (auto& [g, v] : out.values_) v = -v;
  return out;
}

Cochain1& Cochain1::operator+=(const Cochain1& o) {
  check_compatible(o);
  for (const auto& [g, v] : o.values_) set(g, value(g) + v);
  return *this;
}

Cochain1& Cochain1::operator-=(const Cochain1& o) {
  check_compatible(o);
  for (const auto& [g, v] : o.values_) set(g, value(g) - v);
  return *this;
}

Cochain1& Cochain1::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    values_.clear();
    return *this;
  }
  for (auto& [g, v] : values_) v *= c;
  return *this;
}

Cochain1 Cochain1::with_shift(bool shifted) const {
  Cochain1 out = *this;
  if (shifted != shifted_) out.parity_ = parity_ + Parity::odd;
  out.shifted_ = shifted;
  for (auto& [g, v] : out.values_) v = v.with_shift({shifted});
  return out;
}

Cochain1 delta0(const SuperDiffOp& A, Algebra domain) {
  const Parity pa = A.require_parity("delta0");
  Cochain1 out(domain, A.source_weight(), A.target_weight(), pa, A.vars(), A.shift().shifted);
  for (GeneratorId g : basis_ids(domain)) {
    SuperDiffOp v = module_action(ContactField(g), A);
    v *= Scalar(sign_pow(bit(parity(g)) * bit(pa)));
    out.set(g, std::move(v));
  }
  return out;
}

SuperDiffOp delta1_at(const Cochain1& Y, GeneratorId g, GeneratorId h) {
  const int py = bit(Y.parity());
  const int pg = bit(parity(g));
  const int ph = bit(parity(h));
  SuperDiffOp out = module_action(ContactField(g), Y.value(h)) * Scalar(sign_pow(pg * py));
  out -= module_action(ContactField(h), Y.value(g)) * Scalar(sign_pow(ph * (pg + py)));
  for (const auto& [k, c] : structure(Y.domain()).bracket(g, h)) out -= Y.value(k) * c;
  return out;
}

Cochain2 delta1(const Cochain1& Y) {
  Cochain2 out;
  const auto ids = basis_ids(Y.domain());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a; b < ids.size(); ++b) {
      SuperDiffOp v = delta1_at(Y, ids[a], ids[b]);
      if (!v.is_zero()) out.emplace(std::pair{ids[a], ids[b]}, std::move(v));
    }
  }
  return out;
}

CocycleCheck is_cocycle(const Cochain1& Y) {
  const auto ids = basis_ids(Y.domain());
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a; b < ids.size(); ++b)
      if (!delta1_at(Y, ids[a], ids[b]).is_zero()) return CocycleCheck{false, std::pair{ids[a], ids[b]}};
  return {};
}

bool is_relative_cochain(const Cochain1& Y) {
  if (Y.domain() != Algebra::osp22) return false;
  for (GeneratorId g : basis_ids(Algebra::osp12))
    if (!Y.value(g).is_zero()) return false;
  const int py = bit(Y.parity());
  for (GeneratorId g : basis_ids(Algebra::osp12)) {
    for (GeneratorId h : basis_ids(Algebra::pi_h)) {
      SuperDiffOp d = module_action(ContactField(g), Y.value(h));
      for (const auto& [k, c] : structure(Algebra::osp22).bracket(g, h))
        d -= Y.value(k) * (c * Scalar(sign_pow(bit(parity(g)) * py)));
      if (!d.is_zero()) return false;
    }
  }
  return true;
}

Cochain1 pi_twist(const Cochain1& Y) {
  Cochain1 out(Y.domain(), Y.lambda(), Y.mu(), Y.parity() + Parity::odd, Y.vars(), !Y.shifted());
  const SuperDiffOp s = SuperDiffOp::sigma(Y.mu(), Y.vars());
  for (const auto& [g, v] : Y.values()) out.set(g, op_compose(s, v.with_shift({})));
  return out;
}

nlohmann::json to_json(const Cochain1& Y) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [g, v] : Y.values()) values[std::string(name(g))] = to_json(v);
  return {{"domain", name(Y.domain())},
          {"lambda", Y.lambda().str()},
          {"mu", Y.mu().str()},
          {"parity", to_string(Y.parity())},
          {"parity_shift", Y.shifted()},
          {"values", values}};
}

}  // namespace ospcohom

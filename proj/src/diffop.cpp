#include "ospcohom/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace ospcohom {

namespace {

// eta_i o (eta_1^{e1} eta_2^{e2} d^j) in normal form: returns sign and key.
std::pair<int, OpKey> eta_times(int i, OpKey k) {
  if (i == 1) {
    if (k.eps1 == 0) return {1, {1, k.eps2, k.j}};
    return {-1, {0, k.eps2, k.j + 1}};
  }
  const int s = sign_pow(k.eps1);  // eta_2 anticommutes past eta_1
  if (k.eps2 == 0) return {s, {k.eps1, 1, k.j}};
  return {-s, {k.eps1, 0, k.j + 1}};
}

// eta_i o A, via eta_i(c G) = eta_i(c) G + sigma(c) eta_i(G).
SuperDiffOp left_eta(int i, const SuperDiffOp& A) {
  SuperDiffOp out(A.source_weight(), A.target_weight(), A.vars());
  for (const auto& [k, c] : A.terms()) {
    out.add_term(k, eta_bar(c, i));
    auto [s, k2] = eta_times(i, k);
    out.add_term(k2, c.sigma() * Scalar(s));
  }
  return out;
}

SuperDiffOp left_dx(const SuperDiffOp& A) {
  SuperDiffOp out(A.source_weight(), A.target_weight(), A.vars());
  for (const auto& [k, c] : A.terms()) {
    out.add_term(k, partial_x(c));
    out.add_term({k.eps1, k.eps2, k.j + 1}, c);
  }
  return out;
}

SuperFunction apply_monomial(OpKey k, const SuperFunction& F) {
  SuperFunction g = partial_x(F, k.j);
  if (k.eps2) g = eta_bar(g, 2);
  if (k.eps1) g = eta_bar(g, 1);
  return g;
}

std::string vars_name(Vars v) { return v == Vars::one_theta ? "one_theta" : "two_theta"; }

}  // namespace

SuperDiffOp::SuperDiffOp(Scalar source_weight, Scalar target_weight, Vars vars)
    : source_(std::move(source_weight)), target_(std::move(target_weight)), vars_(vars) {}

SuperDiffOp SuperDiffOp::identity(Scalar weight, Vars vars) {
  return multiplication(SuperFunction(1), weight, weight, vars);
}

SuperDiffOp SuperDiffOp::multiplication(const SuperFunction& f, Scalar lambda, Scalar mu, Vars vars) {
  return monomial({0, 0, 0}, f, std::move(lambda), std::move(mu), vars);
}

SuperDiffOp SuperDiffOp::monomial(OpKey key, const SuperFunction& coefficient, Scalar lambda, Scalar mu, Vars vars) {
  SuperDiffOp op(std::move(lambda), std::move(mu), vars);
  op.add_term(key, coefficient);
  return op;
}

SuperDiffOp SuperDiffOp::eta_word(const std::vector<int>& word, Scalar lambda, Scalar mu, Vars vars) {
  SuperDiffOp op = monomial({0, 0, 0}, SuperFunction(1), lambda, mu, vars);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it != 1 && *it != 2) throw std::invalid_argument("eta_word: letters must be 1 or 2");
    op = left_eta(*it, op);
  }
  return op;
}

SuperDiffOp SuperDiffOp::d_x(int j, Scalar lambda, Scalar mu, Vars vars) {
  return monomial({0, 0, j}, SuperFunction(1), std::move(lambda), std::move(mu), vars);
}

SuperDiffOp SuperDiffOp::d_theta(int i, Scalar lambda, Scalar mu, Vars vars) {
  SuperDiffOp op(std::move(lambda), std::move(mu), vars);
  op.add_term({i == 1 ? 1 : 0, i == 2 ? 1 : 0, 0}, SuperFunction(1));
  op.add_term({0, 0, 1}, i == 1 ? SuperFunction::t1() : SuperFunction::t2());
  return op;
}

SuperDiffOp SuperDiffOp::sigma(Scalar weight, Vars vars) {
  // (-1)^{n1 + n2} = (1 - 2 n1)(1 - 2 n2) with number operators n_i = t_i eta_i.
  auto factor = [&](int i) {
    SuperDiffOp f = identity(weight, vars);
    f.add_term({i == 1 ? 1 : 0, i == 2 ? 1 : 0, 0},
               (i == 1 ? SuperFunction::t1() : SuperFunction::t2()) * Scalar(-2));
    return f;
  };
  if (vars == Vars::one_theta) return factor(1);
  return op_compose(factor(1), factor(2));
}

SuperDiffOp SuperDiffOp::with_shift(ParityShiftTag t) const {
  SuperDiffOp out = *this;
  out.shift_ = t;
  return out;
}

SuperDiffOp SuperDiffOp::with_weights(Scalar lambda, Scalar mu) const {
  SuperDiffOp out = *this;
  out.source_ = std::move(lambda);
  out.target_ = std::move(mu);
  return out;
}

std::optional<Parity> SuperDiffOp::parity() const {
  std::optional<Parity> p;
  for (const auto& [k, c] : terms_) {
    auto pc = parity_of(c);
    if (!pc) return std::nullopt;
    Parity t = *pc + parity_from_bit(k.eps1 + k.eps2);
    if (p && *p != t) return std::nullopt;
    p = t;
  }
  Parity natural = p.value_or(Parity::even);
  return shift_.shifted ? natural + Parity::odd : natural;
}

Parity SuperDiffOp::require_parity(std::string_view context) const {
  auto p = parity();
  if (!p) throw std::invalid_argument(std::string(context) + ": mixed-parity operator");
  return *p;
}

int SuperDiffOp::half_order() const {
  int o = -1;
  for (const auto& [k, c] : terms_) o = std::max(o, k.half_order());
  return o;
}

int SuperDiffOp::coefficient_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, c.x_degree());
  return d;
}

void SuperDiffOp::add_term(OpKey key, const SuperFunction& coefficient) {
  if (key.eps1 < 0 || key.eps1 > 1 || key.eps2 < 0 || key.eps2 > 1 || key.j < 0)
    throw std::invalid_argument("SuperDiffOp: key outside normal form");
  if (coefficient.is_zero()) return;
  if (vars_ == Vars::one_theta && (key.eps2 != 0 || !coefficient.is_theta2_free()))
    throw std::invalid_argument("SuperDiffOp: t2 data in a one-theta operator");
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperDiffOp SuperDiffOp::operator-() const {
  SuperDiffOp out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

void SuperDiffOp::check_compatible(const SuperDiffOp& o, const char* what) const {
  if (source_ != o.source_ || target_ != o.target_ || vars_ != o.vars_)
    throw std::invalid_argument(std::string("SuperDiffOp ") + what + ": incompatible operators");
}

SuperDiffOp& SuperDiffOp::operator+=(const SuperDiffOp& o) {
  check_compatible(o, "+");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SuperDiffOp& SuperDiffOp::operator-=(const SuperDiffOp& o) {
  check_compatible(o, "-");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SuperDiffOp& SuperDiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SuperDiffOp SuperDiffOp::premultiply(const SuperFunction& f) const {
  SuperDiffOp out(source_, target_, vars_);
  out.shift_ = shift_;
  for (const auto& [k, c] : terms_) out.add_term(k, f * c);
  return out;
}

std::string SuperDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    if (k.eps1) os << "*eta1";
    if (k.eps2) os << "*eta2";
    if (k.j) os << "*dx^" << k.j;
  }
  if (shift_.shifted) return "Pi(" + os.str() + ")";
  return os.str();
}

Density op_apply(const SuperDiffOp& A, const Density& D) {
  if (D.weight() != A.source_weight())
    throw std::invalid_argument("op_apply: density weight " + D.weight().str() + " != source weight " +
                                A.source_weight().str());
  if (A.vars() == Vars::one_theta && D.vars() != Vars::one_theta)
    throw std::invalid_argument("op_apply: one-theta operator on a two-theta density");
  return Density(op_apply(A, D.body()), A.target_weight(), D.vars());
}

SuperFunction op_apply(const SuperDiffOp& A, const SuperFunction& F) {
  SuperFunction out;
  for (const auto& [k, c] : A.terms()) out += c * apply_monomial(k, F);
  return out;
}

SuperDiffOp op_compose(const SuperDiffOp& A, const SuperDiffOp& B) {
  if (B.target_weight() != A.source_weight())
    throw std::invalid_argument("op_compose: weight chain mismatch (" + B.target_weight().str() + " vs " +
                                A.source_weight().str() + ")");
  const Vars vars = (A.vars() == Vars::two_theta || B.vars() == Vars::two_theta) ? Vars::two_theta : Vars::one_theta;
  SuperDiffOp base = B.with_shift({}).with_weights(B.source_weight(), A.target_weight());
  if (vars != base.vars()) {
    SuperDiffOp widened(base.source_weight(), base.target_weight(), vars);
    for (const auto& [k, c] : base.terms()) widened.add_term(k, c);
    base = widened;
  }
  SuperDiffOp out(B.source_weight(), A.target_weight(), vars);
  // Share the d^j prefix work across A's terms.
  std::map<int, SuperDiffOp> dx_powers;
  dx_powers.emplace(0, base);
  for (const auto& [k, a] : A.terms()) {
    auto it = dx_powers.find(k.j);
    if (it == dx_powers.end()) {
      int top = dx_powers.rbegin()->first;
      SuperDiffOp cur = dx_powers.rbegin()->second;
      while (top < k.j) {
        cur = left_dx(cur);
        ++top;
        dx_powers.emplace(top, cur);
      }
      it = dx_powers.find(k.j);
    }
    SuperDiffOp t = it->second;
    if (k.eps2) t = left_eta(2, t);
    if (k.eps1) t = left_eta(1, t);
    for (const auto& [kt, c] : t.terms()) out.add_term(kt, a * c);
  }
  return out.with_shift(A.shift() * B.shift());
}

SuperDiffOp lie_operator(const ContactField& X, const Scalar& lambda, Vars vars) {
  if (vars == Vars::one_theta && !X.is_theta2_free())
    throw std::invalid_argument("lie_operator: field leaves R^{1|1}");
  const SuperFunction& F = X.generator();
  const Scalar c = Scalar(-sign_pow(bit(X.parity())), 2);
  SuperDiffOp op(lambda, lambda, vars);
  op.add_term({0, 0, 1}, F);
  op.add_term({0, 0, 0}, lambda * partial_x(F));
  op.add_term({1, 0, 0}, eta_bar(F, 1) * c);
  if (vars == Vars::two_theta) op.add_term({0, 1, 0}, eta_bar(F, 2) * c);
  return op;
}

SuperDiffOp module_action(const ContactField& X, const SuperDiffOp& A) {
  const Parity pa = A.require_parity("module_action");
  const SuperDiffOp plain = A.with_shift({});
  SuperDiffOp left = op_compose(lie_operator(X, A.target_weight(), A.vars()), plain);
  SuperDiffOp right = op_compose(plain, lie_operator(X, A.source_weight(), A.vars()));
  right *= Scalar(sign_pow(bit(pa) * bit(X.parity())));
  return (left - right).with_shift(A.shift());
}

Scalar monomial_weight(int x_exponent, int mask, OpKey key, const Scalar& lambda, const Scalar& mu) {
  return Scalar(x_exponent) + Scalar(theta::degree(mask) - key.eps1 - key.eps2, 2) - Scalar(key.j) + (mu - lambda);
}

std::optional<Scalar> weight_of(const SuperDiffOp& A) {
  if (A.coefficient_degree() > 0) throw std::invalid_argument("weight_of: x-dependent coefficients");
  if (A.is_zero()) return Scalar(0);
  const SuperDiffOp image = module_action(ContactField(GeneratorId::Xx), A);
  const auto& [k0, c0] = *A.terms().begin();
  std::optional<Scalar> w;
  for (int m = 0; m < 4 && !w; ++m) {
    const Scalar a = c0.component(m).coeff(0);
    if (a.is_zero()) continue;
    auto it = image.terms().find(k0);
    w = it == image.terms().end() ? Scalar(0) : it->second.component(m).coeff(0) / a;
  }
  if (image != A * *w) return std::nullopt;
  return w;
}

PhiSplit phi_split(const Density& D) {
  if (D.vars() != Vars::two_theta) throw std::invalid_argument("phi_split: expects a two-theta density");
  const SuperFunction& F = D.body();
  SuperFunction f1(F.component(theta::one), F.component(theta::t1), Poly{}, Poly{});
  // F2 t2 = c_t2 t2 + c_t12 t1 t2, so F2 = c_t2 + c_t12 t1.
  SuperFunction f2(F.component(theta::t2), F.component(theta::t12), Poly{}, Poly{});
  return PhiSplit{Density(std::move(f1), D.weight(), Vars::one_theta),
                  Density(std::move(f2), D.weight() + half(), Vars::one_theta)};
}

Density phi_join(const Density& first, const Density& second) {
  if (second.weight() != first.weight() + half()) throw std::invalid_argument("phi_join: weight mismatch");
  return Density(first.body() + second.body() * SuperFunction::t2(), first.weight(), Vars::two_theta);
}

BlockOperator BlockOperator::zero(const Scalar& lambda, const Scalar& mu) {
  return BlockOperator{SuperDiffOp(lambda, mu, Vars::one_theta),
                       SuperDiffOp(lambda + half(), mu + half(), Vars::one_theta),
                       SuperDiffOp(lambda, mu + half(), Vars::one_theta).with_shift({true}),
                       SuperDiffOp(lambda + half(), mu, Vars::one_theta).with_shift({true})};
}

SuperDiffOp psi_transport(const BlockOperator& b) {
  const Scalar lambda = b.a11.source_weight();
  const Scalar mu = b.a11.target_weight();
  const Scalar h = half();
  auto check = [](const SuperDiffOp& op, const Scalar& l, const Scalar& m, const char* which) {
    if (op.source_weight() != l || op.target_weight() != m)
      throw std::invalid_argument(std::string("psi_transport: block ") + which + " has weights (" +
                                  op.source_weight().str() + "," + op.target_weight().str() + "), expected (" +
                                  l.str() + "," + m.str() + ")");
    if (op.vars() != Vars::one_theta) throw std::invalid_argument(std::string("psi_transport: block ") + which +
                                                                  " must be a one-theta operator");
  };
  check(b.a11, lambda, mu, "a11");
  check(b.a22, lambda + h, mu + h, "a22");
  check(b.a21, lambda, mu + h, "a21");
  check(b.a12, lambda + h, mu, "a12");

  auto widen = [](const SuperDiffOp& op) {
    SuperDiffOp w(op.source_weight(), op.target_weight(), Vars::two_theta);
    for (const auto& [k, c] : op.terms()) w.add_term(k, c);
    return w;
  };
  // F -> F1 = F - t2 eta_2 F
  SuperDiffOp first = SuperDiffOp::identity(lambda);
  first.add_term({0, 1, 0}, -SuperFunction::t2());
  // F -> F2 = sigma(d_2 F)
  SuperDiffOp second = op_compose(SuperDiffOp::sigma(lambda + h),
                                  SuperDiffOp::d_theta(2, lambda, lambda + h));
  // G2 -> G2 t2 = t2 sigma(G2)
  SuperDiffOp embed = SuperDiffOp::sigma(mu + h).premultiply(SuperFunction::t2()).with_weights(mu + h, mu);

  SuperDiffOp out = op_compose(widen(b.a11), first);
  out += op_compose(widen(b.a12), second);
  out += op_compose(embed, op_compose(widen(b.a21), first));
  out += op_compose(embed, op_compose(widen(b.a22), second));
  return out.with_shift({});
}

nlohmann::json to_json(const SuperDiffOp& A) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : A.terms())
    terms.push_back({{"eps1", k.eps1}, {"eps2", k.eps2}, {"j", k.j}, {"coeff", to_json(c)}});
  return {{"source_weight", A.source_weight().str()},
          {"target_weight", A.target_weight().str()},
          {"vars", vars_name(A.vars())},
          {"parity_shift", A.shift().shifted},
          {"terms", terms}};
}

SuperDiffOp superdiffop_from_json(const nlohmann::json& j) {
  const Vars vars = j.value("vars", std::string("two_theta")) == "one_theta" ? Vars::one_theta : Vars::two_theta;
  SuperDiffOp op(Scalar::parse(j.at("source_weight").get<std::string>()),
                 Scalar::parse(j.at("target_weight").get<std::string>()), vars);
  for (const auto& t : j.at("terms"))
    op.add_term({t.at("eps1").get<int>(), t.at("eps2").get<int>(), t.at("j").get<int>()},
                superfunction_from_json(t.at("coeff")));
  return op.with_shift({j.value("parity_shift", false)});
}

}  // namespace ospcohom

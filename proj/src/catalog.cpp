#include "ospcohom/catalog.hpp"

#include <functional>
#include <stdexcept>

#include "ospcohom/corpus.hpp"

namespace ospcohom {

std::string_view to_string(ClaimedStatus s) {
  return s == ClaimedStatus::nontrivial_cocycle ? "nontrivial cocycle" : "coboundary generator";
}

std::string_view to_string(Slot s) {
  switch (s) {
    case Slot::a11: return "a11";
    case Slot::a22: return "a22";
    case Slot::a21: return "a21";
    case Slot::a12: return "a12";
  }
  return "?";
}

namespace {

// Builders for the closed forms. A summand maps the generating function G to an operator.
struct Ctx {
  Scalar lambda;
  Scalar mu;
  Vars vars;

  SuperDiffOp mul(const SuperFunction& f) const { return SuperDiffOp::multiplication(f, lambda, mu, vars); }
  SuperDiffOp eta(int i, int n) const {
    return SuperDiffOp::eta_word(std::vector<int>(static_cast<std::size_t>(n), i), lambda, mu, vars);
  }
  // coefficient * (operator word)
  SuperDiffOp coef(const SuperFunction& f, const SuperDiffOp& op) const { return op.premultiply(f); }
};

using Summand = std::function<SuperDiffOp(const Ctx&, const SuperFunction&, int sign_g)>;

struct Formula {
  Algebra domain;
  Vars vars;
  Scalar lambda;
  Scalar mu;
  std::vector<std::pair<std::string, Summand>> summands;
};

long require_k(const Scalar& p) {
  if (!p.is_integer() || p.sign() <= 0) throw std::invalid_argument("catalog: k must be a positive integer");
  return p.to_long();
}

SuperFunction d2(const SuperFunction& G) { return partial_theta(G, 2); }
SuperFunction e1(const SuperFunction& G) { return eta_bar(G, 1); }
SuperFunction e2(const SuperFunction& G) { return eta_bar(G, 2); }
SuperFunction dx(const SuperFunction& G, int n = 1) { return partial_x(G, n); }

Formula formula(std::string_view name, const Scalar& p) {
  const SuperFunction t2 = SuperFunction::t2();
  if (name == "upsilon") {
    return {Algebra::osp22, Vars::two_theta, p, p,
            {{"G'", [](const Ctx& c, const SuperFunction& G, int) { return c.mul(dx(G)); }}}};
  }
  if (name == "upsilon_tilde") {
    if (p.is_zero())
      return {Algebra::osp22, Vars::two_theta, p, p,
              {{"e1 e2 (G)", [](const Ctx& c, const SuperFunction& G, int) { return c.mul(e1(e2(G))); }}}};
    return {Algebra::osp22,
            Vars::two_theta,
            p,
            p,
            {{"2 lambda e1(d2 G)",
              [p](const Ctx& c, const SuperFunction& G, int) { return c.mul(e1(d2(G))) * (Scalar(2) * p); }},
             {"-s d2(G) e1", [](const Ctx& c, const SuperFunction& G, int s) { return c.coef(d2(G), c.eta(1, 1)) * Scalar(-s); }},
             {"-s t2 e2 e1(G) e2", [t2](const Ctx& c, const SuperFunction& G, int s) {
                return c.coef(t2 * e2(e1(G)), c.eta(2, 1)) * Scalar(-s);
              }}}};
  }
  if (name == "upsilon_k") {
    const int k = static_cast<int>(require_k(p));
    return {Algebra::osp22, Vars::two_theta, -p * half(), p * half(),
            {{"G' e1 e2^(2k-1)", [k](const Ctx& c, const SuperFunction& G, int) {
                return c.coef(dx(G), op_compose(c.eta(1, 1).with_weights(c.mu, c.mu), c.eta(2, 2 * k - 1)));
              }}}};
  }
  if (name == "upsilon_tilde_k") {
    const int k = static_cast<int>(require_k(p));
    return {Algebra::osp22,
            Vars::two_theta,
            -p * half(),
            p * half(),
            {{"k e1(d2 G) e1 e2^(2k-1)",
              [k](const Ctx& c, const SuperFunction& G, int) {
                return c.coef(e1(d2(G)), op_compose(c.eta(1, 1).with_weights(c.mu, c.mu), c.eta(2, 2 * k - 1))) *
                       Scalar(k);
              }},
             {"-s d2(G) e2^(2k+1)",
              [k](const Ctx& c, const SuperFunction& G, int s) {
                return c.coef(d2(G), c.eta(2, 2 * k + 1)) * Scalar(-s);
              }},
             {"+s e1(t2 d2 G) e1^(2k+1)", [k, t2](const Ctx& c, const SuperFunction& G, int s) {
                return c.coef(e1(t2 * d2(G)), c.eta(1, 2 * k + 1)) * Scalar(s);
              }}}};
  }
  if (name == "upsilon_bar_k") {
    const int k = static_cast<int>(require_k(p));
    std::vector<std::pair<std::string, Summand>> parts;
    if (k >= 2)
      parts.emplace_back("(k-1) G'' e1 e2^(2k-3)", [k](const Ctx& c, const SuperFunction& G, int) {
        return c.coef(dx(G, 2), op_compose(c.eta(1, 1).with_weights(c.mu, c.mu), c.eta(2, 2 * k - 3))) *
               Scalar(k - 1);
      });
    parts.emplace_back("+s e2(G') e1^(2k-1)", [k](const Ctx& c, const SuperFunction& G, int s) {
      return c.coef(e2(dx(G)), c.eta(1, 2 * k - 1)) * Scalar(s);
    });
    parts.emplace_back("-s e1(G') e2^(2k-1)", [k](const Ctx& c, const SuperFunction& G, int s) {
      return c.coef(e1(dx(G)), c.eta(2, 2 * k - 1)) * Scalar(-s);
    });
    return {Algebra::osp22, Vars::two_theta, -p * half(), p * half(), std::move(parts)};
  }
  if (name == "gamma") {
    return {Algebra::osp12, Vars::one_theta, p, p,
            {{"G'", [](const Ctx& c, const SuperFunction& G, int) { return c.mul(dx(G)); }}}};
  }
  if (name == "gamma_k") {
    const int k = static_cast<int>(require_k(p));
    return {Algebra::osp12, Vars::one_theta, (Scalar(1) - p) * half(), p * half(),
            {{"s e1^2(G) e1^(2k-1)", [k](const Ctx& c, const SuperFunction& G, int s) {
                return c.coef(e1(e1(G)), c.eta(1, 2 * k - 1)) * Scalar(s);
              }}}};
  }
  if (name == "gamma_tilde_k") {
    const int k = static_cast<int>(require_k(p));
    std::vector<std::pair<std::string, Summand>> parts;
    if (k >= 2)
      parts.emplace_back("s (k-1) e1^4(G) e1^(2k-3)", [k](const Ctx& c, const SuperFunction& G, int s) {
        return c.coef(e1(e1(e1(e1(G)))), c.eta(1, 2 * k - 3)) * Scalar(s * (k - 1));
      });
    parts.emplace_back("e1^3(G) e1^(2k-2)", [k](const Ctx& c, const SuperFunction& G, int) {
      return c.coef(e1(e1(e1(G))), c.eta(1, 2 * k - 2));
    });
    return {Algebra::osp12, Vars::one_theta, (Scalar(1) - p) * half(), p * half(), std::move(parts)};
  }
  throw std::invalid_argument("catalog: unknown entry '" + std::string(name) + "'");
}

Cochain1 build(const Formula& f, const std::vector<std::size_t>& which, Parity parity) {
  const Ctx ctx{f.lambda, f.mu, f.vars};
  Cochain1 Y(f.domain, f.lambda, f.mu, parity, f.vars);
  for (GeneratorId g : basis_ids(f.domain)) {
    const SuperFunction G = generating_function(g);
    const int s = sign_pow(bit(parity_of(G).value()));
    SuperDiffOp v(f.lambda, f.mu, f.vars);
    for (std::size_t i : which) v += f.summands[i].second(ctx, G, s);
    Y.set(g, v);
  }
  return Y;
}

std::vector<std::size_t> all_of(const Formula& f) {
  std::vector<std::size_t> v(f.summands.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Coboundary generator entries: the operator, its weight rule and listed parity.
struct GenSpec {
  std::string name;
  std::string label;
  Parity parity;
  bool uses_k;
};

const std::vector<GenSpec>& generator_specs() {
  static const std::vector<GenSpec> specs = {
      {"cob_d2pow_a", "d2^k", Parity::odd, true},
      {"cob_eta1_theta2", "(e1 + t2 e1 e2) d^(k-1)", Parity::odd, true},
      {"cob_d2pow_b", "d2^k", Parity::odd, true},
      {"cob_theta2_eta12", "t2 e1 e2 d^(k-1)", Parity::odd, true},
      {"cob_d2", "d2", Parity::odd, false},
      {"cob_theta2", "t2", Parity::odd, false},
      {"cob_eta1_d2", "e1 d2 d^(k-1)", Parity::even, true},
      {"cob_theta2_eta2", "t2 e2", Parity::even, false},
      {"cob_theta2_eta1_zero", "t2 e1", Parity::even, false},
      {"cob_theta2_eta2_zero", "t2 e2", Parity::even, false},
  };
  return specs;
}

SuperDiffOp d2_power(int k, const Scalar& l, const Scalar& m) {
  SuperDiffOp d = SuperDiffOp::d_theta(2, l, l);
  SuperDiffOp out = SuperDiffOp::identity(l);
  for (int i = 0; i < k; ++i) out = op_compose(d, out);
  return out.with_weights(l, m);
}

SuperDiffOp word(const std::vector<int>& w, int j, const SuperFunction& coeff, const Scalar& l, const Scalar& m) {
  return op_compose(SuperDiffOp::eta_word(w, l, l), SuperDiffOp::d_x(j, l, l)).premultiply(coeff).with_weights(l, m);
}

SuperDiffOp generator_op(std::string_view name, int k, const Scalar& l, const Scalar& m) {
  const SuperFunction one(1), t2 = SuperFunction::t2();
  if (name == "cob_d2pow_a" || name == "cob_d2pow_b") return d2_power(k, l, m);
  if (name == "cob_eta1_theta2") return word({1}, k - 1, one, l, m) + word({1, 2}, k - 1, t2, l, m);
  if (name == "cob_theta2_eta12") return word({1, 2}, k - 1, t2, l, m);
  if (name == "cob_d2") return SuperDiffOp::d_theta(2, l, m);
  if (name == "cob_theta2") return SuperDiffOp::multiplication(t2, l, m);
  if (name == "cob_eta1_d2")
    return op_compose(SuperDiffOp::eta_word({1}, l, l),
                      op_compose(SuperDiffOp::d_theta(2, l, l), SuperDiffOp::d_x(k - 1, l, l)))
        .with_weights(l, m);
  if (name == "cob_theta2_eta2" || name == "cob_theta2_eta2_zero") return word({2}, 0, t2, l, m);
  if (name == "cob_theta2_eta1_zero") return word({1}, 0, t2, l, m);
  throw std::invalid_argument("unknown generator");
}

// (lambda, mu) for a generator entry at parameter p.
std::pair<Scalar, Scalar> generator_weights(std::string_view name, const Scalar& p) {
  const Scalar h = half();
  if (name == "cob_d2pow_a" || name == "cob_eta1_theta2") return {(Scalar(1) - p) * h, p * h};
  if (name == "cob_d2pow_b" || name == "cob_theta2_eta12") return {-p * h, (p - Scalar(1)) * h};
  if (name == "cob_d2") {
    if (p.is_zero() || p == -h) throw std::invalid_argument("catalog: d2 generator needs lambda not in {0, -1/2}");
    return {p, p + h};
  }
  if (name == "cob_theta2") return {p, p - h};
  if (name == "cob_eta1_d2") return {-p * h, p * h};
  if (name == "cob_theta2_eta2") {
    if (p.is_zero()) throw std::invalid_argument("catalog: t2 e2 generator needs lambda != 0");
    return {p, p};
  }
  if (name == "cob_theta2_eta1_zero" || name == "cob_theta2_eta2_zero") {
    if (!p.is_zero()) throw std::invalid_argument("catalog: generator lives at lambda = mu = 0");
    return {p, p};
  }
  throw std::invalid_argument("unknown generator");
}

const GenSpec* find_generator(std::string_view name) {
  for (const auto& g : generator_specs())
    if (g.name == name) return &g;
  return nullptr;
}

}  // namespace

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> list = [] {
    using P = ParameterKind;
    const auto nc = ClaimedStatus::nontrivial_cocycle;
    const auto cg = ClaimedStatus::coboundary_generator;
    std::vector<CatalogInfo> v = {
        {"upsilon", "Upsilon_{l,l}", P::lambda, "lambda rational", "(lambda, lambda)", "osp22 on D2", nc, Parity::even},
        {"upsilon_tilde", "Upsilon~_{l,l}", P::lambda, "lambda rational (branch at 0)", "(lambda, lambda)",
         "osp22 on D2", nc, Parity::even},
        {"upsilon_k", "Upsilon_{-k/2,k/2}", P::k, "k >= 1", "(-k/2, k/2)", "osp22 on D2", nc, Parity::even},
        {"upsilon_tilde_k", "Upsilon~_{-k/2,k/2}", P::k, "k >= 1", "(-k/2, k/2)", "osp22 on D2", nc, Parity::even},
        {"upsilon_bar_k", "Upsilon-_{-k/2,k/2}", P::k, "k >= 1", "(-k/2, k/2)", "osp22 on D2", nc, Parity::even},
        {"gamma", "Gamma_{l,l}", P::lambda, "lambda rational", "(lambda, lambda)", "osp12 on D1", nc, Parity::even},
        {"gamma_k", "Gamma_{(1-k)/2,k/2}", P::k, "k >= 1", "((1-k)/2, k/2)", "osp12 on D1", nc, Parity::odd},
        {"gamma_tilde_k", "Gamma~_{(1-k)/2,k/2}", P::k, "k >= 1", "((1-k)/2, k/2)", "osp12 on D1", nc, Parity::odd},
    };
    const std::vector<std::pair<std::string, std::string>> rules = {
        {"k >= 1", "((1-k)/2, k/2)"}, {"k >= 1", "((1-k)/2, k/2)"},   {"k >= 1", "(-k/2, (k-1)/2)"},
        {"k >= 1", "(-k/2, (k-1)/2)"}, {"lambda not in {0, -1/2}", "(lambda, lambda+1/2)"},
        {"lambda rational", "(lambda, lambda-1/2)"}, {"k >= 1", "(-k/2, k/2)"},
        {"lambda != 0", "(lambda, lambda)"}, {"lambda = 0", "(0, 0)"}, {"lambda = 0", "(0, 0)"}};
    for (std::size_t i = 0; i < generator_specs().size(); ++i) {
      const auto& g = generator_specs()[i];
      v.push_back({g.name, "delta(" + g.label + ")", g.uses_k ? P::k : P::lambda, rules[i].first, rules[i].second,
                   "osp22 on D2, relative", cg, g.parity});
    }
    return v;
  }();
  return list;
}

const CatalogInfo& catalog_info(std::string_view name) {
  for (const auto& i : catalog_list())
    if (i.name == name) return i;
  throw std::invalid_argument("catalog: unknown entry '" + std::string(name) + "'");
}

CatalogEntry make(std::string_view name, const Scalar& parameter) {
  const CatalogInfo& info = catalog_info(name);
  if (const GenSpec* g = find_generator(name)) {
    const int k = g->uses_k ? static_cast<int>(require_k(parameter)) : 0;
    auto [l, m] = generator_weights(name, parameter);
    const SuperDiffOp A = generator_op(name, k, l, m);
    Cochain1 Y = delta0(A);
    if (Y.parity() != info.parity) {
      // a vanishing generator (d2^k, k >= 2) gives the zero cochain of either parity
      if (!Y.is_zero()) throw std::logic_error("catalog: generator parity differs from the listed one");
      Y = Cochain1(Algebra::osp22, l, m, info.parity);
    }
    return {info, parameter, std::move(Y)};
  }
  const Formula f = formula(name, parameter);
  return {info, parameter, build(f, all_of(f), info.parity)};
}

std::vector<std::pair<std::string, Cochain1>> catalog_summands(std::string_view name, const Scalar& parameter) {
  const CatalogInfo& info = catalog_info(name);
  std::vector<std::pair<std::string, Cochain1>> out;
  if (find_generator(name)) {
    out.emplace_back(info.symbol, make(name, parameter).cochain);
    return out;
  }
  const Formula f = formula(name, parameter);
  for (std::size_t i = 0; i < f.summands.size(); ++i) out.emplace_back(f.summands[i].first, build(f, {i}, info.parity));
  return out;
}

std::vector<CoboundaryGenerator> relative_coboundary_generators(const Scalar& lambda, const Scalar& mu) {
  std::vector<CoboundaryGenerator> out;
  for (const auto& g : generator_specs()) {
    // Solve the weight rule for the parameter, then confirm it reproduces (lambda, mu).
    Scalar p;
    if (g.uses_k) {
      if (g.name == "cob_d2pow_b" || g.name == "cob_theta2_eta12" || g.name == "cob_eta1_d2")
        p = -Scalar(2) * lambda;
      else
        p = Scalar(2) * mu;
      if (!p.is_integer() || p.sign() <= 0) continue;
    } else {
      p = lambda;
    }
    std::pair<Scalar, Scalar> w;
    try {
      w = generator_weights(g.name, p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (w.first != lambda || w.second != mu) continue;
    const int k = g.uses_k ? static_cast<int>(p.to_long()) : 0;
    out.push_back({g.name, g.parity, generator_op(g.name, k, lambda, mu)});
  }
  return out;
}

Cochain1 lift_to_two_theta(const Cochain1& Y, Slot slot) {
  if (Y.vars() != Vars::one_theta || Y.domain() != Algebra::osp12)
    throw std::invalid_argument("lift_to_two_theta: expects an osp(1|2) cochain on one-theta operators");
  const Scalar h = half();
  Scalar l = Y.lambda(), m = Y.mu();
  switch (slot) {
    case Slot::a11: break;
    case Slot::a22: l -= h; m -= h; break;
    case Slot::a21: m -= h; break;
    case Slot::a12: l -= h; break;
  }
  const bool off = slot == Slot::a21 || slot == Slot::a12;
  const Cochain1 blocks = off ? pi_twist(Y) : Y;
  Cochain1 out(Algebra::osp12, l, m, blocks.parity(), Vars::two_theta);
  for (GeneratorId g : basis_ids(Algebra::osp12)) {
    BlockOperator b = BlockOperator::zero(l, m);
    const SuperDiffOp v = blocks.value(g);
    switch (slot) {
      case Slot::a11: b.a11 = v; break;
      case Slot::a22: b.a22 = v; break;
      case Slot::a21: b.a21 = v; break;
      case Slot::a12: b.a12 = v; break;
    }
    out.set(g, psi_transport(b));
  }
  return out;
}

bool lands_in_slot(const Cochain1& lifted, const Cochain1& Y, Slot slot, int corpus_degree) {
  const bool off = slot == Slot::a21 || slot == Slot::a12;
  const Cochain1 blocks = off ? pi_twist(Y) : Y;
  for (GeneratorId g : basis_ids(Algebra::osp12)) {
    const SuperDiffOp op = lifted.value(g);
    const SuperDiffOp b = blocks.value(g);
    for (const SuperFunction& F : monomial_corpus(corpus_degree)) {
      const auto in = phi_split(Density(F, lifted.lambda()));
      const auto out = phi_split(op_apply(op, Density(F, lifted.lambda())));
      SuperFunction first, second;
      switch (slot) {
        case Slot::a11: first = op_apply(b, in.first.body()); break;
        case Slot::a22: second = op_apply(b, in.second.body()); break;
        case Slot::a21: second = op_apply(b, in.first.body()); break;
        case Slot::a12: first = op_apply(b, in.second.body()); break;
      }
      if (out.first.body() != first || out.second.body() != second) return false;
    }
  }
  return true;
}

}  // namespace ospcohom

#include "ospcohom/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ospcohom {

namespace {

Scalar coefficient_at(const Cochain1& Y, const CochainCoord& c) {
  const SuperDiffOp v = Y.value(static_cast<GeneratorId>(c[0]));
  const auto& terms = v.terms();
  auto it = terms.find(OpKey{c[1], c[2], c[3]});
  if (it == terms.end()) return Scalar(0);
  return it->second.component(c[4]).coeff(c[5]);
}

// Constant-coefficient monomials of weight w; j is pinned by the weight.
std::vector<SuperDiffOp> constant_monomials(const Scalar& lambda, const Scalar& mu, const Scalar& w, Parity natural,
                                            bool shifted, Vars vars) {
  std::vector<SuperDiffOp> out;
  for (int e1 = 0; e1 <= 1; ++e1) {
    for (int e2 = 0; e2 <= (vars == Vars::two_theta ? 1 : 0); ++e2) {
      for (int mask = 0; mask < 4; ++mask) {
        if (vars == Vars::one_theta && (mask & theta::t2)) continue;
        if (parity_from_bit(theta::degree(mask) + e1 + e2) != natural) continue;
        const Scalar j = monomial_weight(0, mask, {e1, e2, 0}, lambda, mu) - w;
        if (!j.is_integer() || j.sign() < 0) continue;
        out.push_back(SuperDiffOp::monomial({e1, e2, static_cast<int>(j.to_long())}, SuperFunction::monomial(mask),
                                            lambda, mu, vars)
                          .with_shift({shifted}));
      }
    }
  }
  return out;
}

std::vector<Scalar> weights_present(const Cochain1& Y) {
  std::set<Scalar> ws;
  for (const auto& [g, op] : Y.values())
    for (const auto& [k, c] : op.terms())
      for (int mask = 0; mask < 4; ++mask)
        for (const auto& [n, v] : c.component(mask).terms())
          ws.insert(cochain_weight(g, n, mask, k, Y.lambda(), Y.mu()));
  return {ws.begin(), ws.end()};
}

std::vector<SuperDiffOp> candidates_for(const Cochain1& Y, const std::vector<Scalar>& ws) {
  std::vector<SuperDiffOp> out;
  const Parity natural = Y.parity() + parity_from_bit(Y.shifted() ? 1 : 0);
  for (const Scalar& w : ws) {
    auto c = constant_monomials(Y.lambda(), Y.mu(), w, natural, Y.shifted(), Y.vars());
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

struct Counts {
  int z = 0;
  int b = 0;
  int h = 0;
};

Counts count(const Scalar& lambda, const Scalar& mu, bool relative, int order, int degree, bool graded = true) {
  BasisOptions opts;
  opts.relative = relative;
  opts.order = order;
  opts.degree = degree;
  opts.weight_zero = graded;
  const auto basis = cochain_basis(lambda, mu, opts);
  CochainSpace space;
  std::vector<std::size_t> coord_of;
  for (const auto& Y : basis) coord_of.push_back(space.vec(Y).begin()->first);

  Echelon images;
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto k = images.add(space.vec(delta1(basis[i])), i);
    if (!k) continue;
    SparseVec v;
    for (const auto& [label, c] : *k) v[coord_of[label]] = c;
    kernel.push_back(std::move(v));
  }

  Echelon bound;
  std::vector<SuperDiffOp> ops;
  if (graded) {
    ops = weight_monomials(lambda, mu, Scalar(0), order + 2, degree + 2);
  } else {
    // every monomial in the widened window, whatever its weight
    for (int j = 0; 2 * j <= order + 2; ++j)
      for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2) {
          const OpKey key{e1, e2, j};
          if (key.half_order() > order + 2) continue;
          for (int mask = 0; mask < 4; ++mask)
            for (int n = 0; n <= degree + 2; ++n)
              ops.push_back(SuperDiffOp::monomial(key, SuperFunction::monomial(mask, n), lambda, mu));
        }
  }
  for (const auto& A : ops) bound.add(space.vec(delta0(A)));
  Counts out;
  out.z = static_cast<int>(kernel.size());
  for (auto& v : kernel)
    if (bound.add(std::move(v))) ++out.h;
  out.b = out.z - out.h;
  return out;
}

}  // namespace

SparseVec CochainSpace::vec(const Cochain1& Y) {
  SparseVec v;
  for (const auto& [g, op] : Y.values())
    for (const auto& [k, c] : op.terms())
      for (int mask = 0; mask < 4; ++mask)
        for (const auto& [n, x] : c.component(mask).terms())
          v[index_({static_cast<int>(g), k.eps1, k.eps2, k.j, mask, n})] = x;
  return v;
}

SparseVec CochainSpace::vec(const Cochain2& T) {
  SparseVec v;
  for (const auto& [gh, op] : T)
    for (const auto& [k, c] : op.terms())
      for (int mask = 0; mask < 4; ++mask)
        for (const auto& [n, x] : c.component(mask).terms())
          v[index2_({static_cast<int>(gh.first), static_cast<int>(gh.second), k.eps1, k.eps2, k.j, mask, n})] = x;
  return v;
}

Cochain1 CochainSpace::cochain(const SparseVec& v, const Cochain1& shape) const {
  std::map<GeneratorId, SuperDiffOp> ops;
  for (const auto& [i, x] : v) {
    const CochainCoord& c = index_.key(i);
    const auto g = static_cast<GeneratorId>(c[0]);
    auto it = ops.try_emplace(g, shape.lambda(), shape.mu(), shape.vars()).first;
    it->second.add_term({c[1], c[2], c[3]}, SuperFunction::monomial(c[4], c[5], x));
  }
  Cochain1 out(shape.domain(), shape.lambda(), shape.mu(), shape.parity(), shape.vars(), shape.shifted());
  for (auto& [g, op] : ops) out.set(g, std::move(op));
  return out;
}

Scalar cochain_weight(GeneratorId g, int n, int mask, OpKey key, const Scalar& lambda, const Scalar& mu) {
  return monomial_weight(n, mask, key, lambda, mu) - weight(g);
}

std::vector<Cochain1> cochain_basis(const Scalar& lambda, const Scalar& mu, const BasisOptions& opts) {
  std::vector<Cochain1> out;
  const Algebra support = opts.relative ? Algebra::pi_h : Algebra::osp22;
  for (GeneratorId g : basis_ids(support)) {
    for (int j = 0; 2 * j <= opts.order; ++j) {
      for (int e1 = 0; e1 <= 1; ++e1) {
        for (int e2 = 0; e2 <= 1; ++e2) {
          const OpKey key{e1, e2, j};
          if (key.half_order() > opts.order) continue;
          for (int mask = 0; mask < 4; ++mask) {
            const Parity p = parity_from_bit(theta::degree(mask) + e1 + e2) + parity(g);
            if (opts.parity && *opts.parity != p) continue;
            for (int n = 0; n <= opts.degree; ++n) {
              if (opts.weight_zero && !cochain_weight(g, n, mask, key, lambda, mu).is_zero()) continue;
              Cochain1 Y(Algebra::osp22, lambda, mu, p);
              Y.set(g, SuperDiffOp::monomial(key, SuperFunction::monomial(mask, n), lambda, mu));
              out.push_back(std::move(Y));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<SuperDiffOp> weight_monomials(const Scalar& lambda, const Scalar& mu, const Scalar& w, int order,
                                          int degree, std::optional<Parity> parity, Vars vars) {
  std::vector<SuperDiffOp> out;
  for (int j = 0; 2 * j <= order; ++j) {
    for (int e1 = 0; e1 <= 1; ++e1) {
      for (int e2 = 0; e2 <= (vars == Vars::two_theta ? 1 : 0); ++e2) {
        const OpKey key{e1, e2, j};
        if (key.half_order() > order) continue;
        for (int mask = 0; mask < 4; ++mask) {
          if (vars == Vars::one_theta && (mask & theta::t2)) continue;
          if (parity && parity_from_bit(theta::degree(mask) + e1 + e2) != *parity) continue;
          for (int n = 0; n <= degree; ++n)
            if (monomial_weight(n, mask, key, lambda, mu) == w)
              out.push_back(SuperDiffOp::monomial(key, SuperFunction::monomial(mask, n), lambda, mu, vars));
        }
      }
    }
  }
  return out;
}

nlohmann::json to_json(const H1Report& r) {
  return {{"lambda", r.lambda.str()},
          {"mu", r.mu.str()},
          {"relative", r.relative},
          {"z1_dim", r.z1_dim},
          {"b1_dim", r.b1_dim},
          {"h1_dim", r.h1_dim},
          {"truncation", {{"order", r.order}, {"degree", r.degree}}},
          {"plateau", r.plateau}};
}

std::pair<int, int> default_truncation(const Scalar& lambda, const Scalar& mu) {
  Scalar d = mu - lambda;
  if (d.sign() < 0) d = -d;
  const Scalar n = Scalar(2) * (d + Scalar(3));
  long v = static_cast<long>(n.to_double());
  if (Scalar(v) < n) ++v;
  return {static_cast<int>(v), 4};
}

H1Report h1_dimension(const Scalar& lambda, const Scalar& mu, bool relative, int order, int degree) {
  if (order < 1 || degree < 1) throw std::invalid_argument("h1_dimension: bounds must be >= 1");
  const Counts c = count(lambda, mu, relative, order, degree);
  const Counts next = count(lambda, mu, relative, order + 1, degree + 1);
  H1Report r;
  r.lambda = lambda;
  r.mu = mu;
  r.relative = relative;
  r.z1_dim = c.z;
  r.b1_dim = c.b;
  r.h1_dim = c.h;
  r.order = order;
  r.degree = degree;
  r.plateau = next.h == c.h;
  return r;
}

H1Report h1_dimension_ungraded(const Scalar& lambda, const Scalar& mu, bool relative, int order, int degree) {
  if (order < 1 || degree < 1) throw std::invalid_argument("h1_dimension: bounds must be >= 1");
  const Counts c = count(lambda, mu, relative, order, degree, false);
  H1Report r;
  r.lambda = lambda;
  r.mu = mu;
  r.relative = relative;
  r.z1_dim = c.z;
  r.b1_dim = c.b;
  r.h1_dim = c.h;
  r.order = order;
  r.degree = degree;
  return r;
}

std::vector<Cochain1> cocycle_basis(const Scalar& lambda, const Scalar& mu, const BasisOptions& opts) {
  const auto basis = cochain_basis(lambda, mu, opts);
  std::vector<Cochain1> out;
  Echelon img;
  CochainSpace space;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto k = img.add(space.vec(delta1(basis[i])), i);
    if (!k) continue;
    const Parity p = basis[i].parity();
    Cochain1 Y(Algebra::osp22, lambda, mu, p);
    for (const auto& [label, c] : *k) Y += basis[label] * c;
    out.push_back(std::move(Y));
  }
  return out;
}

std::size_t cochain_rank(const std::vector<Cochain1>& cochains) {
  CochainSpace space;
  Echelon e;
  for (const auto& Y : cochains) e.add(space.vec(Y));
  return e.rank();
}

Normalization normalize(const Cochain1& Y) {
  SuperDiffOp A0(Y.lambda(), Y.mu(), Y.vars());
  const SuperDiffOp y1 = Y.value(GeneratorId::X1);
  for (const auto& [k, c] : y1.terms()) {
    SuperFunction prim(c.component(0).antiderivative(), c.component(1).antiderivative(),
                       c.component(2).antiderivative(), c.component(3).antiderivative());
    A0.add_term(k, prim);
  }
  A0 = A0.with_shift({Y.shifted()});
  if (A0.is_zero()) return {A0, Y};
  return {A0, Y - delta0(A0, Y.domain())};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : c.weights) ws.push_back(w.str());
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& op : c.candidates) cands.push_back(to_json(op));
  nlohmann::json fn = nlohmann::json::array();
  for (const auto& [coord, x] : c.functional)
    fn.push_back({{"generator", name(static_cast<GeneratorId>(coord[0]))},
                  {"eps1", coord[1]},
                  {"eps2", coord[2]},
                  {"j", coord[3]},
                  {"theta", coord[4]},
                  {"x_exponent", coord[5]},
                  {"coeff", x.str()}});
  return {{"normalizer", to_json(c.normalization.normalizer)},
          {"weights", ws},
          {"candidate_count", c.candidates.size()},
          {"functional", fn},
          {"pairing", c.pairing.str()}};
}

SolveResult coboundary_solve(const Cochain1& Y) {
  if (!is_cocycle(Y)) throw std::invalid_argument("coboundary_solve: input is not a cocycle");
  Normalization norm = normalize(Y);
  SolveResult out;
  if (norm.normalized.is_zero()) {
    out.solution = norm.normalizer;
    return out;
  }
  const auto ws = weights_present(norm.normalized);
  const auto cands = candidates_for(Y, ws);
  CochainSpace space;
  Echelon e;
  for (std::size_t i = 0; i < cands.size(); ++i) e.add(space.vec(delta0(cands[i], Y.domain())), i);
  const SparseVec target = space.vec(norm.normalized);
  auto r = e.reduce(target);
  if (r.residual.empty()) {
    SuperDiffOp A = norm.normalizer;
    for (const auto& [label, c] : r.combination) A += cands[label] * c;
    if (!(delta0(A, Y.domain()) == Y)) throw std::logic_error("coboundary_solve: round trip failed");
    out.solution = A;
    return out;
  }
  const SparseVec y = e.separating_functional(r.residual);
  Certificate cert{std::move(norm), ws, cands, {}, dot(y, target)};
  for (const auto& [i, x] : y) cert.functional.emplace_back(space.coord(i), x);
  out.certificate = std::move(cert);
  return out;
}

bool verify_certificate(const Cochain1& Y, const Certificate& c) {
  if (!is_cocycle(Y)) return false;
  const Normalization norm = normalize(Y);
  if (!(norm.normalizer == c.normalization.normalizer) || !(norm.normalized == c.normalization.normalized))
    return false;
  if (!norm.normalized.value(GeneratorId::X1).is_zero()) return false;
  if (weights_present(norm.normalized) != c.weights) return false;
  // the candidate list must contain every constant monomial the weights allow
  const auto needed = candidates_for(Y, c.weights);
  for (const auto& op : needed)
    if (std::find(c.candidates.begin(), c.candidates.end(), op) == c.candidates.end()) return false;
  auto pair_with = [&](const Cochain1& Z) {
    Scalar s;
    for (const auto& [coord, x] : c.functional) s += x * coefficient_at(Z, coord);
    return s;
  };
  for (const auto& op : c.candidates)
    if (!pair_with(delta0(op, Y.domain())).is_zero()) return false;
  const Scalar p = pair_with(norm.normalized);
  return !p.is_zero() && p == c.pairing;
}

bool classes_independent(const std::vector<Cochain1>& cocycles) {
  if (cocycles.empty()) return true;
  std::vector<Cochain1> normalized;
  std::set<Scalar> ws;
  for (const auto& Y : cocycles) {
    if (!is_cocycle(Y)) return false;
    normalized.push_back(normalize(Y).normalized);
    for (const auto& w : weights_present(normalized.back())) ws.insert(w);
  }
  const std::vector<Scalar> wl(ws.begin(), ws.end());
  CochainSpace space;
  Echelon e;
  for (const auto& Y : cocycles) {
    for (const auto& op : candidates_for(Y, wl)) e.add(space.vec(delta0(op, Y.domain())));
  }
  for (const auto& Y : normalized)
    if (!e.add(space.vec(Y))) return false;
  return true;
}

}  // namespace ospcohom

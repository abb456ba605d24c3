#include "ospcohom/classifier.hpp"

#include <stdexcept>

#include "ospcohom/linalg.hpp"
#include "ospcohom/parallel.hpp"

namespace ospcohom {

std::string_view name(SourceH s) {
  switch (s) {
    case SourceH::h0: return "h0";
    case SourceH::h1: return "h1";
    case SourceH::h_full: return "h_full";
  }
  return "?";
}

SourceH source_h_from_name(std::string_view n) {
  for (SourceH s : {SourceH::h0, SourceH::h1, SourceH::h_full})
    if (name(s) == n) return s;
  throw std::invalid_argument("unknown h-slot '" + std::string(n) + "'");
}

Scalar h_weight(SourceH s) { return s == SourceH::h1 ? Scalar(0) : -half(); }

std::vector<SuperFunction> h_basis(SourceH s) {
  switch (s) {
    case SourceH::h0: return {SuperFunction::x(), SuperFunction(1)};
    case SourceH::h1: return {SuperFunction(1)};
    case SourceH::h_full: return {SuperFunction::t1(), SuperFunction::x(), SuperFunction(1)};
  }
  return {};
}

namespace {

bool super_slots(SourceH s) { return s == SourceH::h_full; }

InvariantType effective_type(SourceH s, InvariantType t) {
  if (s == SourceH::h0) return InvariantType::t11;
  if (s == SourceH::h1) return InvariantType::t12;
  return t;
}

SuperFunction slot_derivative(const SuperFunction& f, int eps, int j) {
  SuperFunction g = partial_x(f, j);
  return eps ? eta_bar(g, 1) : g;
}

Parity fparity(const SuperFunction& f) { return parity_of(f).value_or(Parity::even); }

SuperFunction term_apply(const BilinearTerm& t, const SuperFunction& h, const SuperFunction& f) {
  SuperFunction out = slot_derivative(h, t.eps_h, t.j_h) * slot_derivative(f, t.eps_f, t.j_f);
  if (bit(fparity(h)) * t.eps_f % 2) out = -out;
  return t.theta ? SuperFunction::t1() * out : out;
}

Parity term_parity(const BilinearTerm& t) { return parity_from_bit(t.theta + t.eps_h + t.eps_f); }

// Test functions for the f-slot: every monomial up to the given degree.
std::vector<SuperFunction> f_corpus(bool super, int degree) {
  std::vector<SuperFunction> out;
  for (int n = 0; n <= degree; ++n) {
    out.push_back(SuperFunction::monomial(theta::one, n));
    if (super) out.push_back(SuperFunction::monomial(theta::t1, n));
  }
  return out;
}

int corpus_degree(int k) { return k + 4; }

// Invariance under X_x kills every component of nonzero weight, so only terms
// with 2(j_h + j_f) + eps_h + eps_f - theta = 2(mu - lambda - w_h) are kept.
std::vector<BilinearTerm> ansatz(SourceH s, const Scalar& lambda, const Scalar& mu, int k) {
  std::vector<BilinearTerm> out;
  const Scalar order = Scalar(2) * (mu - lambda - h_weight(s));
  const int emax = super_slots(s) ? 1 : 0;
  for (int jh = 0; jh <= 2; ++jh)
    for (int eh = 0; eh <= emax; ++eh)
      for (int jf = 0; jf <= k + 1; ++jf)
        for (int ef = 0; ef <= emax; ++ef)
          for (int th = 0; th <= emax; ++th)
            if (Scalar(2 * (jh + jf) + eh + ef - th) == order) out.push_back({eh, jh, ef, jf, th});
  return out;
}

// Coordinates (block index, mask, x exponent) of a superfunction, appended to v.
void append(SparseVec& v, Indexer<std::array<int, 5>>& idx, std::array<int, 3> block, const SuperFunction& f) {
  for (int mask = 0; mask < 4; ++mask)
    for (const auto& [n, c] : f.component(mask).terms()) {
      const std::size_t i = idx({block[0], block[1], block[2], mask, n});
      auto it = v.find(i);
      if (it == v.end()) {
        v.emplace(i, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
      }
    }
}

struct Problem {
  Algebra algebra;
  SourceH source;
  Scalar lambda;
  Scalar mu;
  int k;
  std::vector<SuperFunction> hs;
  std::vector<SuperFunction> fs;
  std::vector<ContactField> fields;
};

Problem make_problem(Algebra a, SourceH s, const Scalar& lambda, const Scalar& mu, int k) {
  return {a, s, lambda, mu, k, h_basis(s), f_corpus(super_slots(s), corpus_degree(k)), basis_of(a)};
}

SuperFunction defect(const Problem& P, const ContactField& X, const BilinearTerm& t, const SuperFunction& h,
                     const SuperFunction& f) {
  const Vars v = Vars::one_theta;
  const SuperFunction out = lie_derivative(X, Density(term_apply(t, h, f), P.mu, v)).body();
  const SuperFunction Xh = lie_derivative(X, Density(h, h_weight(P.source), v)).body();
  const SuperFunction Xf = lie_derivative(X, Density(f, P.lambda, v)).body();
  const int xs = bit(X.parity());
  SuperFunction through = term_apply(t, Xh, f);
  SuperFunction second = term_apply(t, h, Xf);
  if (xs && bit(fparity(h))) second = -second;
  through += second;
  if (xs && bit(term_parity(t))) through = -through;
  return out - through;
}

SparseVec defect_vector(const Problem& P, const BilinearTerm& t, Indexer<std::array<int, 5>>& idx) {
  SparseVec v;
  for (std::size_t x = 0; x < P.fields.size(); ++x)
    for (std::size_t a = 0; a < P.hs.size(); ++a)
      for (std::size_t b = 0; b < P.fs.size(); ++b)
        append(v, idx, {static_cast<int>(x), static_cast<int>(a), static_cast<int>(b)},
               defect(P, P.fields[x], t, P.hs[a], P.fs[b]));
  return v;
}

SparseVec eval_vector(const Problem& P, const BilinearOp& A, Indexer<std::array<int, 5>>& idx) {
  SparseVec v;
  for (std::size_t a = 0; a < P.hs.size(); ++a)
    for (std::size_t b = 0; b < P.fs.size(); ++b)
      append(v, idx, {0, static_cast<int>(a), static_cast<int>(b)}, bilinear_apply(A, P.hs[a], P.fs[b]));
  return v;
}

BilinearOp single(const Problem& P, const BilinearTerm& t) {
  BilinearOp A{P.source, P.lambda, P.mu, {{t, Scalar(1)}}, term_parity(t)};
  return A;
}

void check_algebra(Algebra a, SourceH s) {
  if (a != Algebra::sl2 && a != Algebra::osp12) throw std::invalid_argument("classify: algebra must be sl2 or osp12");
  if (a == Algebra::osp12 && s != SourceH::h_full) throw std::invalid_argument("classify: osp12 acts on h_full only");
}

}  // namespace

nlohmann::json to_json(const BilinearOp& A) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : A.terms)
    terms.push_back({{"h_eta", t.eps_h}, {"h_j", t.j_h}, {"f_eta", t.eps_f}, {"f_j", t.j_f}, {"theta", t.theta}, {"coeff", c.str()}});
  return {{"source_h", name(A.source_h)},
          {"lambda", A.lambda.str()},
          {"mu", A.mu.str()},
          {"parity", to_string(A.parity)},
          {"terms", terms}};
}

SuperFunction bilinear_apply(const BilinearOp& A, const SuperFunction& h, const SuperFunction& f) {
  SuperFunction out;
  for (const auto& [t, c] : A.terms) out += c * term_apply(t, h, f);
  return out;
}

Scalar target_weight(SourceH s, InvariantType t, const Scalar& lambda, int k) {
  return effective_type(s, t) == InvariantType::t11 ? lambda + Scalar(k) - half() : lambda + Scalar(k);
}

std::optional<Scalar> constraint_polynomial(Algebra a, SourceH s, InvariantType t, const Scalar& l, int k) {
  const Scalar K(k), two(2);
  if (s == SourceH::h0) return K * (K - 1) * (two * l + K - 1) * (two * l + K - 2);
  if (s == SourceH::h1) return K * (two * l + K - 1);
  if (a != Algebra::osp12) return std::nullopt;
  if (t == InvariantType::t11) return K * (K - 1) * (two * l + K - 1);
  return K * (two * l + K) * (two * l + K - 1);
}

nlohmann::json to_json(const ClassificationResult& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& A : r.solution_basis) basis.push_back(to_json(A));
  nlohmann::json j = {{"algebra", name(r.algebra)},
                      {"source_h", name(r.source_h)},
                      {"type", r.type == InvariantType::t11 ? "11" : "12"},
                      {"lambda", r.lambda.str()},
                      {"mu", r.mu.str()},
                      {"k", r.k},
                      {"solution_basis", basis}};
  j["constraint_evaluation"] = r.constraint_evaluation ? nlohmann::json(r.constraint_evaluation->str()) : nlohmann::json(nullptr);
  return j;
}

ClassificationResult classify(Algebra a, SourceH s, const Scalar& lambda, int k, InvariantType t) {
  check_algebra(a, s);
  if (k < 0) throw std::invalid_argument("classify: k must be non-negative");
  const InvariantType et = effective_type(s, t);
  const Scalar mu = target_weight(s, et, lambda, k);
  const Problem P = make_problem(a, s, lambda, mu, k);

  // drop ansatz terms that are redundant as bilinear maps on h x F
  std::vector<BilinearTerm> terms;
  {
    Indexer<std::array<int, 5>> idx;
    Echelon e;
    for (const auto& t : ansatz(s, lambda, mu, k))
      if (e.add(eval_vector(P, single(P, t), idx))) terms.push_back(t);
  }

  ClassificationResult r{a, s, et, lambda, mu, k, {}, constraint_polynomial(a, s, et, lambda, k)};
  Indexer<std::array<int, 5>> idx;
  Echelon e;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto kernel = e.add(defect_vector(P, terms[i], idx), i);
    if (!kernel) continue;
    BilinearOp A{s, lambda, mu, {}, term_parity(terms[i])};
    for (const auto& [label, c] : *kernel) A.terms[terms[label]] = c;
    r.solution_basis.push_back(std::move(A));
  }
  return r;
}

bool is_invariant(const BilinearOp& A, Algebra a) {
  int k = 0;
  for (const auto& [t, c] : A.terms) k = std::max(k, t.j_f);
  const Problem P = make_problem(a, A.source_h, A.lambda, A.mu, k);
  for (const auto& X : P.fields)
    for (const auto& h : P.hs)
      for (const auto& f : P.fs) {
        SuperFunction d;
        for (const auto& [t, c] : A.terms) d += c * defect(P, X, t, h, f);
        if (!d.is_zero()) return false;
      }
  return true;
}

std::optional<BilinearOp> closed_form(SourceH s, InvariantType t, const Scalar& l, int k) {
  const InvariantType et = effective_type(s, t);
  const Scalar K(k), two(2);
  BilinearOp A{s, l, target_weight(s, et, l, k), {}, Parity::even};
  auto put = [&](BilinearTerm term, const Scalar& c) {
    if (!c.is_zero()) A.terms[term] = c;
  };
  switch (s) {
    case SourceH::h0:
      put({0, 0, 0, k}, 1);
      if (k >= 1) put({0, 1, 0, k - 1}, K * (two * l + K - 1));
      break;
    case SourceH::h1:
      put({0, 0, 0, k}, 1);
      break;
    case SourceH::h_full:
      if (et == InvariantType::t11) {
        put({0, 0, 0, k}, 1);
        if (k >= 1) {
          put({0, 1, 0, k - 1}, K * (two * l + K - 1));
          put({1, 0, 1, k - 1}, -K);
        }
      } else {
        A.parity = Parity::odd;
        put({0, 0, 1, k}, 1);
        put({1, 0, 0, k}, two * l + K);
        if (k >= 1) put({0, 1, 1, k - 1}, K * (two * l + K));
      }
      break;
  }
  return A;
}

bool check_closed_form(const ClassificationResult& r) {
  if (r.solution_basis.empty()) return false;
  const auto cf = closed_form(r.source_h, r.type, r.lambda, r.k);
  if (!cf || !is_invariant(*cf, r.algebra)) return false;
  const Problem P = make_problem(r.algebra, r.source_h, r.lambda, r.mu, r.k);
  Indexer<std::array<int, 5>> idx;
  Echelon e;
  for (const auto& A : r.solution_basis) e.add(eval_vector(P, A, idx));
  const SparseVec c = eval_vector(P, *cf, idx);
  if (is_zero(c)) return false;
  return is_zero(e.reduce(c).residual);
}

bool ScanTable::all_agree() const {
  for (const auto& c : cells)
    if (!c.agrees || (c.closed_form_ok && !*c.closed_form_ok)) return false;
  return true;
}

nlohmann::json to_json(const ScanTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : t.cells) {
    nlohmann::json j = {{"lambda", c.lambda.str()}, {"k", c.k}, {"mu", c.mu.str()}, {"dim", c.dim}, {"agrees", c.agrees}};
    j["constraint"] = c.constraint ? nlohmann::json(c.constraint->str()) : nlohmann::json(nullptr);
    j["closed_form_ok"] = c.closed_form_ok ? nlohmann::json(*c.closed_form_ok) : nlohmann::json(nullptr);
    cells.push_back(std::move(j));
  }
  return {{"algebra", name(t.algebra)},
          {"source_h", name(t.source_h)},
          {"type", t.type == InvariantType::t11 ? "11" : "12"},
          {"all_agree", t.all_agree()},
          {"cells", cells}};
}

ScanTable scan_constraint_variety(Algebra a, SourceH s, InvariantType t, const std::vector<Scalar>& lambdas, int k_max,
                                  int jobs) {
  check_algebra(a, s);
  const std::size_t per = static_cast<std::size_t>(k_max + 1);
  auto cells = parallel_map<ScanCell>(lambdas.size() * per, jobs, [&](std::size_t i) {
    const Scalar& l = lambdas[i / per];
    const int k = static_cast<int>(i % per);
    const ClassificationResult r = classify(a, s, l, k, t);
    ScanCell c{l, k, r.mu, static_cast<int>(r.solution_basis.size()), r.constraint_evaluation, true, std::nullopt};
    if (c.constraint) c.agrees = (c.dim > 0) == c.constraint->is_zero();
    if (c.dim > 0) c.closed_form_ok = check_closed_form(r);
    return c;
  });
  return {a, s, effective_type(s, t), std::move(cells)};
}

}  // namespace ospcohom

#include "ospcohom/corpus.hpp"

namespace ospcohom {

Scalar Corpus::scalar(int range) {
  const int num = uniform(-range, range);
  const int den = uniform(1, 3);
  return Scalar(num, den);
}

Poly Corpus::poly(int max_degree) {
  Poly p;
  for (int e = 0; e <= max_degree; ++e)
    if (uniform(0, 2) != 0) p.add_term(e, scalar());
  return p;
}

SuperFunction Corpus::function(int max_degree, std::optional<Parity> parity, bool theta2) {
  SuperFunction f(poly(max_degree), poly(max_degree), theta2 ? poly(max_degree) : Poly{},
                  theta2 ? poly(max_degree) : Poly{});
  if (!parity) return f;
  return *parity == Parity::even ? f.even_part() : f.odd_part();
}

SuperFunction Corpus::homogeneous(int max_degree, bool theta2) {
  return function(max_degree, uniform(0, 1) ? Parity::odd : Parity::even, theta2);
}

SuperDiffOp Corpus::op(const Scalar& lambda, const Scalar& mu, Parity parity, int max_half_order, int max_degree,
                       Vars vars) {
  const bool t2 = vars == Vars::two_theta;
  SuperDiffOp A(lambda, mu, vars);
  for (int h = 0; h <= max_half_order; ++h) {
    for (int e1 = 0; e1 <= 1; ++e1) {
      for (int e2 = 0; e2 <= (t2 ? 1 : 0); ++e2) {
        if ((h - e1 - e2) < 0 || (h - e1 - e2) % 2 != 0) continue;
        if (uniform(0, 1) == 0) continue;
        const Parity cp = parity + parity_from_bit(e1 + e2);
        A.add_term({e1, e2, (h - e1 - e2) / 2}, function(max_degree, cp, t2));
      }
    }
  }
  return A;
}

std::vector<SuperFunction> monomial_corpus(int max_degree, bool theta2) {
  std::vector<SuperFunction> out;
  for (int mask = 0; mask < 4; ++mask) {
    if (!theta2 && (mask & theta::t2)) continue;
    for (int n = 0; n <= max_degree; ++n) out.push_back(SuperFunction::monomial(mask, n));
  }
  return out;
}

}  // namespace ospcohom

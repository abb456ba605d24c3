#include <doctest.h>

#include "ospcohom/corpus.hpp"

using namespace ospcohom;

namespace {

// eta_{w0} ... eta_{wn} d^j applied by repeated differentiation.
SuperFunction apply_word(const std::vector<int>& word, int j, const SuperFunction& F) {
  SuperFunction g = partial_x(F, j);
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = eta_bar(g, *it);
  return g;
}

}  // namespace

TEST_CASE("op_apply examples") {
  const Scalar l(1), m(2);
  const auto D = Density(SuperFunction::monomial(0, 2), l);
  CHECK(op_apply(SuperDiffOp::identity(l), D).body() == D.body());
  CHECK(op_apply(SuperDiffOp::eta_word({1, 2}, l, m), SuperFunction::t12()) == SuperFunction(-1));
  CHECK(op_apply(SuperDiffOp::d_x(1, l, m), SuperFunction::t1()).is_zero());
  CHECK_THROWS_AS(op_apply(SuperDiffOp::identity(m), D), std::invalid_argument);
}

TEST_CASE("composition identities") {
  const Scalar l(0);
  const auto e1 = SuperDiffOp::eta_word({1}, l, l);
  const auto e2 = SuperDiffOp::eta_word({2}, l, l);
  CHECK(op_compose(e1, e1) == -SuperDiffOp::d_x(1, l, l));
  CHECK((op_compose(e1, e2) + op_compose(e2, e1)).is_zero());
  Corpus c(31);
  const auto A = c.op(l, Scalar(1), Parity::odd, 4, 2);
  CHECK(op_compose(A, SuperDiffOp::identity(l)) == A);
  CHECK_THROWS_AS(op_compose(A, SuperDiffOp::identity(Scalar(1))), std::invalid_argument);
}

TEST_CASE("composition agrees with sequential application") {
  Corpus c(32);
  for (int n = 0; n < 30; ++n) {
    const auto B = c.op(Scalar(0), half(), n % 2 ? Parity::odd : Parity::even, 4, 2);
    const auto A = c.op(half(), Scalar(1), Parity::odd, 3, 2);
    const auto AB = op_compose(A, B);
    CHECK(AB.half_order() <= A.half_order() + B.half_order());
    for (int t = 0; t < 5; ++t) {
      const SuperFunction F = c.function(5);
      CHECK(op_apply(AB, F) == op_apply(A, op_apply(B, F)));
    }
  }
}

TEST_CASE("normal form folds long eta words") {
  Corpus c(33);
  for (int n = 0; n < 40; ++n) {
    std::vector<int> word;
    const int len = c.uniform(0, 6);
    for (int i = 0; i < len; ++i) word.push_back(c.uniform(1, 2));
    const int j = c.uniform(0, 2);
    const auto op = op_compose(SuperDiffOp::eta_word(word, 0, 0), SuperDiffOp::d_x(j, 0, 0));
    for (int t = 0; t < 4; ++t) {
      const SuperFunction F = c.function(7);
      CHECK(op_apply(op, F) == apply_word(word, j, F));
    }
  }
  // eta_2^{2k-1} = (-1)^{k-1} eta_2 d^{k-1}
  const auto e = SuperDiffOp::eta_word({2, 2, 2, 2, 2}, 0, 0);
  CHECK(e == SuperDiffOp::monomial({0, 1, 2}, SuperFunction(1), 0, 0));
}

TEST_CASE("module action examples") {
  const Scalar l(1, 2);
  Corpus c(34);
  SuperDiffOp constant(l, l);
  constant.add_term({1, 1, 2}, SuperFunction(Scalar(3)));
  constant.add_term({0, 0, 1}, SuperFunction::t12());
  CHECK(module_action(ContactField(GeneratorId::X1), constant).is_zero());
  CHECK(module_action(ContactField(GeneratorId::X1), SuperDiffOp::multiplication(SuperFunction::x(), l, l)) ==
        SuperDiffOp::identity(l));
  for (GeneratorId g : all_generators)
    CHECK(module_action(ContactField(g), SuperDiffOp::identity(l)).is_zero());
}

TEST_CASE("module action is a representation") {
  Corpus c(35);
  for (int li = -2; li <= 2; ++li) {
    for (int mi = -2; mi <= 2; ++mi) {
      const Scalar l(li, 2), m(mi, 2);
      const auto A = c.op(l, m, (li + mi) % 2 ? Parity::odd : Parity::even, 6, 2);
      for (GeneratorId a : all_generators)
        for (GeneratorId b : all_generators) {
          const ContactField X(a), Y(b);
          const ContactField Z(contact_bracket(X.generator(), Y.generator()));
          const int s = sign_pow(bit(parity(a)) * bit(parity(b)));
          const auto lhs = module_action(X, module_action(Y, A)) - module_action(Y, module_action(X, A)) * Scalar(s);
          CHECK(lhs == module_action(Z, A));
        }
    }
  }
}

TEST_CASE("weights") {
  const Scalar l(1, 3);
  CHECK(weight_of(SuperDiffOp::d_x(1, l, l)) == Scalar(-1));
  CHECK(weight_of(SuperDiffOp::identity(l)) == Scalar(0));
  CHECK(weight_of(SuperDiffOp::multiplication(SuperFunction::t12(), l, l)) == Scalar(1));
  CHECK_THROWS_AS(weight_of(SuperDiffOp::multiplication(SuperFunction::x(), l, l)), std::invalid_argument);
  SuperDiffOp mixed = SuperDiffOp::identity(l) + SuperDiffOp::d_x(1, l, l);
  CHECK_FALSE(weight_of(mixed).has_value());
  for (int mask = 0; mask < 4; ++mask)
    for (int e1 = 0; e1 <= 1; ++e1)
      for (int e2 = 0; e2 <= 1; ++e2)
        for (int j = 0; j <= 2; ++j) {
          const Scalar m = l + Scalar(3, 2);
          const OpKey k{e1, e2, j};
          const auto op = SuperDiffOp::monomial(k, SuperFunction::monomial(mask), l, m);
          CHECK(weight_of(op) == monomial_weight(0, mask, k, l, m));
        }
}

TEST_CASE("phi split") {
  const Scalar l(1, 2);
  auto s = phi_split(Density(SuperFunction::x() + SuperFunction::monomial(theta::t2, 1), l));
  CHECK(s.first.body() == SuperFunction::x());
  CHECK(s.second.body() == SuperFunction::x());
  CHECK(s.second.weight() == Scalar(1));
  s = phi_split(Density(SuperFunction::t12(), l));
  CHECK(s.first.body().is_zero());
  CHECK(s.second.body() == SuperFunction::t1());
  s = phi_split(Density(SuperFunction(1), l));
  CHECK(s.first.body() == SuperFunction(1));
  CHECK(s.second.body().is_zero());
  Corpus c(36);
  for (int n = 0; n < 20; ++n) {
    const Density D(c.function(4), l);
    const auto p = phi_split(D);
    CHECK(phi_join(p.first, p.second) == D);
  }
}

TEST_CASE("phi split intertwines osp(1|2)") {
  Corpus c(37);
  for (const Scalar& l : {Scalar(-1), Scalar(0), half()}) {
    for (int n = 0; n < 50; ++n) {
      const Density D(c.function(4), l);
      const auto p = phi_split(D);
      for (GeneratorId g : basis_ids(Algebra::osp12)) {
        const ContactField X(g);
        const auto q = phi_split(lie_derivative(X, D));
        CHECK(q.first == lie_derivative(X, p.first));
        CHECK(q.second == lie_derivative(X, p.second));
      }
    }
  }
}

TEST_CASE("psi transport") {
  const Scalar l(1, 2), m(3, 2);
  auto blocks = BlockOperator::zero(l, l);
  blocks.a11 = SuperDiffOp::identity(l, Vars::one_theta);
  blocks.a22 = SuperDiffOp::identity(l + half(), Vars::one_theta);
  CHECK(psi_transport(blocks) == SuperDiffOp::identity(l));

  blocks = BlockOperator::zero(l, l - half());
  blocks.a21 = SuperDiffOp::identity(l, Vars::one_theta).with_shift({true});
  const auto op = psi_transport(blocks);
  Corpus c(38);
  for (int n = 0; n < 20; ++n) {
    const SuperFunction F = c.function(4);
    CHECK(op_apply(op, F) == phi_split(Density(F, l)).first.body() * SuperFunction::t2());
  }

  Corpus r(39);
  blocks = BlockOperator::zero(l, m);
  blocks.a11 = r.op(l, m, Parity::even, 4, 2, Vars::one_theta);
  blocks.a22 = r.op(l + half(), m + half(), Parity::even, 4, 2, Vars::one_theta);
  blocks.a21 = r.op(l, m + half(), Parity::odd, 4, 2, Vars::one_theta);
  blocks.a12 = r.op(l + half(), m, Parity::odd, 4, 2, Vars::one_theta);
  const auto full = psi_transport(blocks);
  for (int n = 0; n < 20; ++n) {
    const Density D(c.function(5), l);
    const auto in = phi_split(D);
    const auto out = phi_split(op_apply(full, D));
    CHECK(out.first.body() == op_apply(blocks.a11, in.first.body()) + op_apply(blocks.a12, in.second.body()));
    CHECK(out.second.body() == op_apply(blocks.a21, in.first.body()) + op_apply(blocks.a22, in.second.body()));
  }
  blocks.a12 = SuperDiffOp(l, m, Vars::one_theta);
  CHECK_THROWS_AS(psi_transport(blocks), std::invalid_argument);
}

TEST_CASE("json round trip") {
  Corpus c(40);
  const auto A = c.op(Scalar(1, 2), Scalar(-3, 2), Parity::odd, 5, 3);
  CHECK(superdiffop_from_json(to_json(A)) == A);
}

#include <doctest.h>

#include "ospcohom/cochain.hpp"
#include "ospcohom/corpus.hpp"

using namespace ospcohom;

TEST_CASE("delta0 examples") {
  const Scalar l(1, 2);
  CHECK(delta0(SuperDiffOp::identity(l)).is_zero());
  const auto d = delta0(SuperDiffOp::multiplication(SuperFunction::x(), l, l));
  CHECK(d.value(GeneratorId::X1) == SuperDiffOp::identity(l));
}

TEST_CASE("delta1 of a non-cocycle") {
  const Scalar l(1);
  Cochain1 Y(Algebra::osp22, l, l, Parity::even);
  Y.set(GeneratorId::X1, SuperDiffOp::identity(l));
  const auto t = delta1(Y);
  CHECK(t.count({GeneratorId::X1, GeneratorId::Xx}) == 1);
  const auto check = is_cocycle(Y);
  CHECK_FALSE(check.ok);
  CHECK(check.witness.has_value());
}

TEST_CASE("delta squared vanishes") {
  Corpus c(41);
  int n = 0;
  for (int li = -2; li <= 2; ++li) {
    for (int mi = -2; mi <= 2; ++mi) {
      for (Parity p : {Parity::even, Parity::odd}) {
        const auto A = c.op(Scalar(li, 2), Scalar(mi, 2), p, 5, 2);
        CHECK(delta1(delta0(A)).empty());
        if (++n >= 100) return;
      }
    }
  }
}

TEST_CASE("cochain parity is enforced") {
  Cochain1 Y(Algebra::osp22, 0, 0, Parity::even);
  CHECK_THROWS_AS(Y.set(GeneratorId::Xt1, SuperDiffOp::identity(0)), std::invalid_argument);
  CHECK_THROWS_AS(Y.set(GeneratorId::X1, SuperDiffOp::identity(1)), std::invalid_argument);
  Y.set(GeneratorId::Xt1, SuperDiffOp::multiplication(SuperFunction::t1(), 0, 0));
  CHECK_FALSE(Y.is_zero());
}

TEST_CASE("pi twist") {
  const Scalar l(1, 2);
  Cochain1 zero(Algebra::osp12, l, l, Parity::even, Vars::one_theta);
  CHECK(pi_twist(zero).is_zero());
  Corpus c(42);
  const auto A = c.op(l, Scalar(1), Parity::odd, 4, 2, Vars::one_theta);
  const auto Y = delta0(A, Algebra::osp12);
  const auto T = pi_twist(Y);
  CHECK(T.parity() != Y.parity());
  CHECK(is_cocycle(T).ok);
  CHECK(pi_twist(T) == Y);
  Cochain1 bad(Algebra::osp12, l, l, Parity::even, Vars::one_theta);
  bad.set(GeneratorId::X1, SuperDiffOp::identity(l, Vars::one_theta));
  CHECK_FALSE(is_cocycle(pi_twist(bad)).ok);
}

TEST_CASE("relative cochains") {
  Cochain1 zero(Algebra::osp22, 1, 1, Parity::even);
  CHECK(is_relative_cochain(zero));
  Cochain1 Y(Algebra::osp22, 1, 1, Parity::even);
  Y.set(GeneratorId::Xx, SuperDiffOp::identity(1));
  CHECK_FALSE(is_relative_cochain(Y));
}

#include <doctest.h>

#include "ospcohom/corpus.hpp"

using namespace ospcohom;

TEST_CASE("field_apply examples") {
  CHECK(field_apply(ContactField(GeneratorId::X1), SuperFunction::monomial(0, 3)) == SuperFunction::monomial(0, 2, 3));
  CHECK(field_apply(ContactField(GeneratorId::Xt1), SuperFunction::t1()) == SuperFunction(half()));
  CHECK(field_apply(ContactField(GeneratorId::Xx), SuperFunction(1)).is_zero());
  CHECK_THROWS_AS(ContactField(SuperFunction::x() + SuperFunction::t1()), std::invalid_argument);
}

TEST_CASE("bracket examples") {
  CHECK(contact_bracket(SuperFunction(1), SuperFunction::x()) == SuperFunction(1));
  CHECK(contact_bracket(SuperFunction::t1(), SuperFunction::t1()) == SuperFunction(half()));
  CHECK(contact_bracket(SuperFunction::x(), SuperFunction::t12()).is_zero());
}

TEST_CASE("bracket matches the commutator of fields") {
  Corpus c(21);
  for (int n = 0; n < 50; ++n) {
    const SuperFunction F = c.homogeneous(3), G = c.homogeneous(3);
    const ContactField XF(F), XG(G);
    const ContactField XB(contact_bracket(F, G));
    const int s = sign_pow(bit(XF.parity()) * bit(XG.parity()));
    for (int t = 0; t < 10; ++t) {
      const SuperFunction T = c.function(4);
      CHECK(field_apply(XF, field_apply(XG, T)) - field_apply(XG, field_apply(XF, T)) * Scalar(s) ==
            field_apply(XB, T));
    }
    CHECK(contact_bracket(F, G) == contact_bracket(G, F) * Scalar(-s));
  }
}

TEST_CASE("jacobi on generators") {
  for (GeneratorId a : all_generators)
    for (GeneratorId b : all_generators)
      for (GeneratorId d : all_generators) {
        const auto F = generating_function(a), G = generating_function(b), H = generating_function(d);
        const int pf = bit(parity(a)), pg = bit(parity(b));
        const SuperFunction lhs = contact_bracket(F, contact_bracket(G, H));
        const SuperFunction rhs = contact_bracket(contact_bracket(F, G), H) +
                                  contact_bracket(G, contact_bracket(F, H)) * Scalar(sign_pow(pf * pg));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("lie derivative examples and module axiom") {
  const Scalar l = Scalar(3, 2);
  CHECK(lie_derivative(ContactField(GeneratorId::Xx), Density(SuperFunction(1), l)).body() == SuperFunction(l));
  CHECK(lie_derivative(ContactField(GeneratorId::Xx2), Density(SuperFunction(1), l)).body() ==
        SuperFunction::monomial(0, 1, 2 * l));
  CHECK_THROWS_AS(lie_derivative(ContactField(GeneratorId::Xt2), Density(SuperFunction::t1(), l, Vars::one_theta)),
                  std::invalid_argument);
  Corpus c(22);
  for (int li = -2; li <= 2; ++li) {
    const Scalar lambda(li, 2);
    for (GeneratorId a : all_generators)
      for (GeneratorId b : all_generators) {
        const ContactField XA(a), XB(b);
        const ContactField XC(contact_bracket(XA.generator(), XB.generator()));
        const Density D(c.function(3), lambda);
        const int s = sign_pow(bit(parity(a)) * bit(parity(b)));
        const SuperFunction lhs = lie_derivative(XC, D).body();
        const SuperFunction rhs = lie_derivative(XA, lie_derivative(XB, D)).body() -
                                  lie_derivative(XB, lie_derivative(XA, D)).body() * Scalar(s);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("bases and structure constants") {
  CHECK(basis_of(Algebra::sl2).size() == 3);
  CHECK(basis_of(Algebra::osp22).size() == 8);
  int odd = 0;
  for (const auto& X : basis_of(Algebra::osp22)) odd += bit(X.parity());
  CHECK(odd == 4);
  CHECK(basis_of(Algebra::pi_h).size() == 3);
  const auto& sc = osp22_structure();
  CHECK(sc.bracket(GeneratorId::X1, GeneratorId::Xx) == GeneratorCombination{{GeneratorId::X1, Scalar(1)}});
  CHECK(sc.bracket(GeneratorId::Xt1, GeneratorId::Xt1) == GeneratorCombination{{GeneratorId::X1, half()}});
  CHECK(sc.bracket(GeneratorId::Xt1t2, GeneratorId::Xt1) == GeneratorCombination{{GeneratorId::Xt2, -half()}});
  const StructureConstants osp12(Algebra::osp12);
  for (GeneratorId g : osp12.basis())
    for (GeneratorId h : osp12.basis()) CHECK(osp12.bracket(g, h) == sc.bracket(g, h));
  for (GeneratorId g : all_generators) {
    const auto& r = sc.bracket(GeneratorId::Xx, g);
    if (weight(g).is_zero()) {
      CHECK(r.empty());
    } else {
      CHECK(r == GeneratorCombination{{g, weight(g)}});
    }
  }
  CHECK(to_json(sc)["brackets"].size() == 64);
}

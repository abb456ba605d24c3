#include <doctest.h>

#include "ospcohom/corpus.hpp"

using namespace ospcohom;

TEST_CASE("scalar parse and print") {
  CHECK(Scalar::parse("6/4") == Scalar(3, 2));
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK(Scalar::parse("7").str() == "7");
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("poly round trip") {
  Poly p = Poly::parse("1 + 3*x - 1/2*x^2");
  CHECK(p.str() == "1 + 3*x - 1/2*x^2");
  CHECK(Poly::parse(p.str()) == p);
  CHECK(Poly::parse("-x^3").coeff(3) == Scalar(-1));
  CHECK(p.derivative(2) == Poly(Scalar(-1)));
  CHECK(p.antiderivative().derivative() == p);
}

TEST_CASE("grassmann products") {
  const auto t1 = SuperFunction::t1();
  const auto t2 = SuperFunction::t2();
  CHECK(t1 * t2 == SuperFunction::t12());
  CHECK(t2 * t1 == -SuperFunction::t12());
  CHECK((t1 * t1).is_zero());
  // (x + t1)^2, term by term: x*x + x*t1 + t1*x + t1*t1
  const SuperFunction x = SuperFunction::x();
  const SuperFunction expanded = x * x + x * t1 + t1 * x + t1 * t1;
  CHECK((x + t1) * (x + t1) == expanded);
  CHECK(expanded == SuperFunction::monomial(theta::one, 2) + SuperFunction::monomial(theta::t1, 1, 2));
}

TEST_CASE("derivations on examples") {
  CHECK(partial_x(SuperFunction::monomial(theta::t1, 2)) == SuperFunction::monomial(theta::t1, 1, 2));
  CHECK(partial_x(SuperFunction::t12()).is_zero());
  CHECK(partial_theta(SuperFunction::t1(), 1) == SuperFunction(1));
  CHECK(partial_theta(SuperFunction::t12(), 2) == -SuperFunction::t1());
  CHECK(partial_theta(SuperFunction::monomial(0, 2), 1).is_zero());
  CHECK(eta_bar(SuperFunction::x(), 1) == -SuperFunction::t1());
  CHECK(eta_bar(eta_bar(SuperFunction::monomial(0, 2), 1), 1) == SuperFunction::monomial(0, 1, -2));
  CHECK(eta_bar(SuperFunction::t12(), 1) == SuperFunction::t2());
}

TEST_CASE("parity") {
  CHECK(parity_of(SuperFunction::x() + SuperFunction::t12()) == Parity::even);
  CHECK(parity_of(SuperFunction::t1()) == Parity::odd);
  CHECK_FALSE(parity_of(SuperFunction::x() + SuperFunction::t2()).has_value());
  CHECK_THROWS_AS(require_parity(SuperFunction::x() + SuperFunction::t2(), "t"), std::invalid_argument);
}

TEST_CASE("eta identities on a corpus") {
  Corpus c(11);
  for (int n = 0; n < 60; ++n) {
    const SuperFunction F = c.function(4);
    for (int i = 1; i <= 2; ++i) CHECK(eta_bar(eta_bar(F, i), i) == -partial_x(F));
    CHECK((eta_bar(eta_bar(F, 2), 1) + eta_bar(eta_bar(F, 1), 2)).is_zero());
  }
}

TEST_CASE("odd derivations obey graded Leibniz") {
  Corpus c(12);
  for (int n = 0; n < 60; ++n) {
    const SuperFunction F = c.homogeneous(3);
    const SuperFunction G = c.function(3);
    const int s = sign_pow(bit(*parity_of(F)));
    for (int i = 1; i <= 2; ++i) {
      CHECK(partial_theta(F * G, i) == partial_theta(F, i) * G + F * partial_theta(G, i) * Scalar(s));
      CHECK(eta_bar(F * G, i) == eta_bar(F, i) * G + F * eta_bar(G, i) * Scalar(s));
    }
  }
}

TEST_CASE("associative and supercommutative") {
  Corpus c(13);
  for (int n = 0; n < 60; ++n) {
    const SuperFunction F = c.homogeneous(3), G = c.homogeneous(3), H = c.function(2);
    CHECK((F * G) * H == F * (G * H));
    const int s = sign_pow(bit(*parity_of(F)) * bit(*parity_of(G)));
    CHECK(F * G == G * F * Scalar(s));
  }
}

TEST_CASE("json round trip") {
  Corpus c(14);
  const SuperFunction F = c.function(3);
  CHECK(superfunction_from_json(to_json(F)) == F);
}

#include <doctest.h>

#include "ospcohom/catalog.hpp"
#include "ospcohom/cohomology.hpp"
#include "ospcohom/corpus.hpp"

using namespace ospcohom;

TEST_CASE("delta0 of d2 is the odd relative coboundary") {
  const Scalar l(1), m(3, 2);
  const auto Y = delta0(SuperDiffOp::d_theta(2, l, m));
  CHECK(Y.parity() == Parity::odd);
  CHECK(is_cocycle(Y).ok);
  CHECK(is_relative_cochain(Y));
}

TEST_CASE("relative cochain examples") {
  CHECK(is_relative_cochain(make("upsilon_tilde", Scalar(1)).cochain));
  CHECK_FALSE(is_relative_cochain(make("upsilon", Scalar(1)).cochain));
  CHECK(is_relative_cochain(Cochain1(Algebra::osp22, Scalar(1), Scalar(1), Parity::even)));
  for (int k = 1; k <= 4; ++k) CHECK(is_relative_cochain(make("upsilon_tilde_k", Scalar(k)).cochain));
}

TEST_CASE("zero cochain is a cocycle") {
  CHECK(is_cocycle(Cochain1(Algebra::osp22, Scalar(2), Scalar(-1), Parity::odd)).ok);
}

TEST_CASE("coboundary_solve round trips") {
  Corpus c(77);
  const Scalar l(1, 2), m(1);
  const SuperDiffOp d2 = SuperDiffOp::d_theta(2, l, m);
  const auto r = coboundary_solve(delta0(d2));
  REQUIRE(r.is_coboundary());
  CHECK(delta0(*r.solution) == delta0(d2));
  for (int i = 0; i < 20; ++i) {
    const Scalar a = c.scalar(2), b = a + Scalar(c.uniform(0, 4), 2);
    const Parity p = c.uniform(0, 1) ? Parity::odd : Parity::even;
    const SuperDiffOp A = c.op(a, b, p, 4, 3);
    const auto Y = delta0(A);
    const auto s = coboundary_solve(Y);
    REQUIRE(s.is_coboundary());
    CHECK(delta0(*s.solution) == Y);
  }
}

TEST_CASE("coboundary_solve rejects non-cocycles") {
  Cochain1 Y(Algebra::osp22, Scalar(1), Scalar(1), Parity::even);
  Y.set(GeneratorId::X1, SuperDiffOp::identity(Scalar(1)));
  CHECK_THROWS_AS(coboundary_solve(Y), std::invalid_argument);
}

TEST_CASE("certificates") {
  for (const auto& [n, p] : std::vector<std::pair<std::string, Scalar>>{
           {"upsilon", Scalar(1)}, {"upsilon_tilde_k", Scalar(1)}, {"upsilon_bar_k", Scalar(2)}}) {
    INFO(n);
    const auto Y = make(n, p).cochain;
    const auto r = coboundary_solve(Y);
    REQUIRE_FALSE(r.is_coboundary());
    const auto& cert = *r.certificate;
    CHECK(verify_certificate(Y, cert));
    CHECK_FALSE(cert.pairing.is_zero());
    CHECK(cert.normalization.normalized.value(GeneratorId::X1).is_zero());
    // tampering with the pairing breaks it
    auto bad = cert;
    bad.pairing += Scalar(1);
    CHECK_FALSE(verify_certificate(Y, bad));
    // adding a coboundary does not change the class
    const auto Z = Y + delta0(SuperDiffOp::multiplication(SuperFunction::x() * SuperFunction::t12(), Y.lambda(),
                                                          Y.mu()));
    const auto rz = coboundary_solve(Z);
    REQUIRE_FALSE(rz.is_coboundary());
    CHECK(verify_certificate(Z, *rz.certificate));
  }
}

TEST_CASE("normalization") {
  const auto Y = make("upsilon", Scalar(1, 2)).cochain;
  const auto n = normalize(Y);
  CHECK(n.normalized.value(GeneratorId::X1).is_zero());
  CHECK(delta0(n.normalizer) + n.normalized == Y);
}

TEST_CASE("cochain_basis shape") {
  BasisOptions o;
  o.order = 3;
  o.degree = 2;
  const auto abs = cochain_basis(Scalar(0), Scalar(1), o);
  o.relative = true;
  const auto rel = cochain_basis(Scalar(0), Scalar(1), o);
  CHECK(abs.size() % 8 == 0);
  CHECK(rel.size() * 8 == abs.size() * 3);
  for (const auto& Y : rel)
    for (GeneratorId g : basis_ids(Algebra::osp12)) CHECK(Y.value(g).is_zero());
  o.relative = false;
  CHECK(cochain_basis(Scalar(0), Scalar(1), o) == abs);
}

TEST_CASE("h1 examples") {
  const auto a = h1_dimension(Scalar(1), Scalar(1), false, 6, 4);
  CHECK(a.h1_dim == 2);
  CHECK(a.plateau);
  CHECK(a.h1_dim == a.z1_dim - a.b1_dim);
  const auto b = h1_dimension(Scalar(-1, 2), Scalar(1, 2), false, 8, 4);
  CHECK(b.h1_dim == 3);
  CHECK(b.plateau);
  const auto c = h1_dimension(Scalar(1, 2), Scalar(1), false, 7, 4);
  CHECK(c.h1_dim == 0);
  CHECK(c.plateau);
  CHECK(h1_dimension(Scalar(0), Scalar(0), true, 6, 4).h1_dim == 0);
  CHECK(h1_dimension(Scalar(-1), Scalar(1), true, 10, 4).h1_dim == 1);
  CHECK_THROWS_AS(h1_dimension(Scalar(0), Scalar(0), false, 0, 4), std::invalid_argument);
}

TEST_CASE("graded and ungraded counts agree") {
  for (const auto& [l, m, rel] : std::vector<std::tuple<Scalar, Scalar, bool>>{
           {Scalar(1), Scalar(1), false}, {Scalar(-1, 2), Scalar(1, 2), false}, {Scalar(0), Scalar(1, 2), false},
           {Scalar(1), Scalar(1), true}}) {
    const auto g = h1_dimension(l, m, rel, 4, 2);
    const auto u = h1_dimension_ungraded(l, m, rel, 4, 2);
    CHECK(g.h1_dim == u.h1_dim);
  }
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(Scalar(1), Scalar(1)) == std::pair{6, 4});
  CHECK(default_truncation(Scalar(-1, 2), Scalar(1, 2)) == std::pair{8, 4});
  CHECK(default_truncation(Scalar(0), Scalar(1, 3)) == std::pair{7, 4});
}

TEST_CASE("report json") {
  const auto j = to_json(h1_dimension(Scalar(1), Scalar(1), false, 6, 4));
  CHECK(j["lambda"] == "1");
  CHECK(j["truncation"]["order"] == 6);
  CHECK(j["h1_dim"] == 2);
}

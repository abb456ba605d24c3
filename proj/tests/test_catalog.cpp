#include <doctest.h>

#include "ospcohom/catalog.hpp"
#include "ospcohom/cohomology.hpp"
#include "ospcohom/corpus.hpp"

using namespace ospcohom;

namespace {

std::vector<Scalar> lambda_grid() {
  std::vector<Scalar> v;
  for (int i = -4; i <= 4; ++i) v.emplace_back(i, 2);
  return v;
}

bool cocycle(const Cochain1& Y) { return is_cocycle(Y).ok; }

}  // namespace

TEST_CASE("lambda families are cocycles") {
  for (const char* name : {"upsilon", "upsilon_tilde", "gamma"}) {
    for (const Scalar& l : lambda_grid()) {
      INFO(std::string(name) << " at " << l.str());
      const auto e = make(name, l);
      CHECK(cocycle(e.cochain));
      CHECK(e.cochain.parity() == e.info.parity);
      CHECK(e.cochain.lambda() == l);
      CHECK(e.cochain.mu() == l);
    }
  }
}

TEST_CASE("k families are cocycles") {
  for (const char* name : {"upsilon_k", "upsilon_tilde_k", "upsilon_bar_k", "gamma_k", "gamma_tilde_k"}) {
    for (int k = 1; k <= 4; ++k) {
      INFO(std::string(name) << " k=" << k);
      const auto e = make(name, Scalar(k));
      CHECK(cocycle(e.cochain));
      CHECK_FALSE(e.cochain.is_zero());
      CHECK(e.cochain.parity() == e.info.parity);
    }
  }
}

TEST_CASE("catalog rejects bad input") {
  CHECK_THROWS_AS(make("nope", Scalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(make("upsilon_k", Scalar(0)), std::invalid_argument);
  CHECK_THROWS_AS(make("upsilon_k", Scalar(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make("cob_d2", Scalar(0)), std::invalid_argument);
  CHECK(catalog_list().size() >= 10);
}

TEST_CASE("osp22 cocycles are nontrivial with checkable certificates") {
  std::vector<std::pair<const char*, Scalar>> cases = {{"upsilon", Scalar(1)},       {"upsilon", Scalar(0)},
                                                       {"upsilon_tilde", Scalar(1)}, {"upsilon_tilde", Scalar(0)},
                                                       {"upsilon", Scalar(-1, 2)},   {"upsilon_tilde", Scalar(3, 2)}};
  for (int k = 1; k <= 3; ++k)
    for (const char* n : {"upsilon_k", "upsilon_tilde_k", "upsilon_bar_k"}) cases.emplace_back(n, Scalar(k));
  for (const auto& [n, p] : cases) {
    INFO(std::string(n) << " " << p.str());
    const auto Y = make(n, p).cochain;
    const auto r = coboundary_solve(Y);
    REQUIRE_FALSE(r.is_coboundary());
    CHECK(verify_certificate(Y, *r.certificate));
  }
}

TEST_CASE("classes at a common point are independent") {
  CHECK(classes_independent({make("upsilon", Scalar(1)).cochain, make("upsilon_tilde", Scalar(1)).cochain}));
  CHECK(classes_independent({make("upsilon", Scalar(0)).cochain, make("upsilon_tilde", Scalar(0)).cochain}));
  for (int k = 1; k <= 2; ++k)
    CHECK(classes_independent({make("upsilon_k", Scalar(k)).cochain, make("upsilon_tilde_k", Scalar(k)).cochain,
                               make("upsilon_bar_k", Scalar(k)).cochain}));
}

TEST_CASE("coboundary generators give relative coboundaries") {
  for (const auto& info : catalog_list()) {
    if (info.status != ClaimedStatus::coboundary_generator) continue;
    std::vector<Scalar> params;
    if (info.kind == ParameterKind::k)
      params = {Scalar(1), Scalar(2), Scalar(3)};
    else
      params = lambda_grid();
    for (const Scalar& p : params) {
      CatalogEntry e{info, p, Cochain1(Algebra::osp22, 0, 0, Parity::even)};
      try {
        e = make(info.name, p);
      } catch (const std::invalid_argument&) {
        continue;
      }
      INFO(info.name << " " << p.str());
      CHECK(cocycle(e.cochain));
      CHECK(is_relative_cochain(e.cochain));
    }
  }
}

TEST_CASE("generator lookup by weights") {
  const auto g = relative_coboundary_generators(Scalar(0), Scalar(0));
  CHECK(g.size() == 2);
  CHECK(relative_coboundary_generators(Scalar(7, 3), Scalar(-5)).empty());
  CHECK_FALSE(relative_coboundary_generators(Scalar(-1), Scalar(1)).empty());
}

TEST_CASE("summands add up") {
  for (const char* n : {"upsilon_tilde", "upsilon_tilde_k", "upsilon_bar_k", "gamma_tilde_k"}) {
    const Scalar p(2);
    Cochain1 sum = make(n, p).cochain;
    for (const auto& [label, Y] : catalog_summands(n, p)) sum -= Y;
    CHECK(sum.is_zero());
  }
}

TEST_CASE("lifts land in their slot and stay cocycles") {
  for (const char* n : {"gamma", "gamma_k", "gamma_tilde_k"}) {
    for (int p = 1; p <= 2; ++p) {
      const auto Y = make(n, Scalar(p)).cochain;
      for (Slot s : {Slot::a11, Slot::a22, Slot::a21, Slot::a12}) {
        INFO(std::string(n) << " " << p << " " << to_string(s));
        const auto L = lift_to_two_theta(Y, s);
        CHECK(lands_in_slot(L, Y, s, 3));
        CHECK(cocycle(L));
      }
    }
  }
}

TEST_CASE("explicit values") {
  const auto Y = make("upsilon", Scalar(1)).cochain;
  CHECK(Y.value(GeneratorId::Xx2) ==
        SuperDiffOp::multiplication(SuperFunction::x() * Scalar(2), Scalar(1), Scalar(1)));
  const auto T = make("upsilon_tilde", Scalar(0)).cochain;
  CHECK(T.value(GeneratorId::Xt1t2) == SuperDiffOp::multiplication(SuperFunction(-1), Scalar(0), Scalar(0)));
  CHECK(make("gamma", Scalar(1, 2)).cochain.vars() == Vars::one_theta);
}

TEST_CASE("upsilon_tilde_k on X_t1t2 acts as -k e1 e2^(2k-1) on even functions") {
  Corpus c(2202);
  for (int k = 1; k <= 3; ++k) {
    const Scalar l(-k, 2), m(k, 2);
    const SuperDiffOp v = make("upsilon_tilde_k", Scalar(k)).cochain.value(GeneratorId::Xt1t2);
    for (int i = 0; i < 20; ++i) {
      const SuperFunction F = c.function(3, Parity::even);
      SuperFunction expect = F;
      for (int r = 0; r < 2 * k - 1; ++r) expect = eta_bar(expect, 2);
      expect = eta_bar(expect, 1) * Scalar(-k);
      CHECK(op_apply(v, Density(F, l)) == Density(expect, m));
    }
  }
}

TEST_CASE("listed parities") {
  for (const auto& info : catalog_list()) {
    const Scalar p = info.kind == ParameterKind::k ? Scalar(1) : (info.name == "cob_theta2_eta1_zero" ||
                                                                   info.name == "cob_theta2_eta2_zero"
                                                                       ? Scalar(0)
                                                                       : Scalar(1));
    INFO(info.name);
    const auto e = make(info.name, p);
    CHECK(e.cochain.parity() == info.parity);
    if (info.status == ClaimedStatus::coboundary_generator) {
      for (const auto& g : relative_coboundary_generators(e.cochain.lambda(), e.cochain.mu()))
        if (g.label == info.name) {
          CHECK(g.listed_parity == info.parity);
          CHECK(g.op.parity() == info.parity);
        }
    }
  }
}

TEST_CASE("every summand has weight zero") {
  for (const char* n : {"upsilon_tilde", "upsilon_tilde_k", "upsilon_bar_k", "gamma_tilde_k"})
    for (int p = 1; p <= 3; ++p)
      for (const auto& [label, Y] : catalog_summands(n, Scalar(p))) {
        INFO(std::string(n) << " " << p << " " << label);
        for (const auto& [g, v] : Y.values()) {
          if (v.is_zero()) continue;
          // value of weight w_g under ad(X_x) makes the cochain weight zero
          for (const auto& [key, coeff] : v.terms())
            for (int mask = 0; mask < 4; ++mask)
              for (const auto& [ex, x] : coeff.component(mask).terms())
                CHECK(monomial_weight(ex, mask, key, Y.lambda(), Y.mu()) == weight(g));
        }
      }
}

TEST_CASE("relative generator examples") {
  const auto a = relative_coboundary_generators(Scalar(1), Scalar(3, 2));
  REQUIRE(a.size() == 1);
  CHECK(a[0].label == "cob_d2");
  CHECK(a[0].op == SuperDiffOp::d_theta(2, Scalar(1), Scalar(3, 2)));
  const auto b = relative_coboundary_generators(Scalar(1), Scalar(1, 2));
  REQUIRE(b.size() == 1);
  CHECK(b[0].op == SuperDiffOp::multiplication(SuperFunction::t2(), Scalar(1), Scalar(1, 2)));
  CHECK(relative_coboundary_generators(Scalar(0), Scalar(1, 2)).size() == 2);
}

#include <doctest.h>

#include "ospcohom/classifier.hpp"

using namespace ospcohom;

TEST_CASE("h0 examples") {
  const auto r = classify(Algebra::sl2, SourceH::h0, Scalar(1), 0);
  REQUIRE(r.solution_basis.size() == 1);
  CHECK(r.constraint_evaluation == Scalar(0));
  CHECK(r.mu == Scalar(1, 2));
  CHECK(check_closed_form(r));
  // only hf survives
  CHECK(r.solution_basis[0].terms.size() == 1);
  CHECK(r.solution_basis[0].terms.begin()->first == BilinearTerm{0, 0, 0, 0});

  const auto e = classify(Algebra::sl2, SourceH::h0, Scalar(1, 4), 2);
  CHECK(e.solution_basis.empty());
  CHECK(e.constraint_evaluation == Scalar(2) * Scalar(1) * Scalar(3, 2) * Scalar(1, 2));

  const auto h = classify(Algebra::sl2, SourceH::h0, Scalar(1, 2), 1);
  REQUIRE(h.solution_basis.size() == 1);
  CHECK(check_closed_form(h));
  const BilinearOp& A = h.solution_basis[0];
  const Scalar a = A.terms.at({0, 0, 0, 1});
  CHECK(A.terms.at({0, 1, 0, 0}) == a);  // h f' + h' f
}

TEST_CASE("h1 examples") {
  CHECK(classify(Algebra::sl2, SourceH::h1, Scalar(3, 7), 0).solution_basis.size() == 1);
  CHECK(classify(Algebra::sl2, SourceH::h1, Scalar(-1), 3).solution_basis.size() == 1);
  CHECK(classify(Algebra::sl2, SourceH::h1, Scalar(-1), 2).solution_basis.empty());
}

TEST_CASE("osp12 examples") {
  const auto r = classify(Algebra::osp12, SourceH::h_full, Scalar(0), 1, InvariantType::t12);
  REQUIRE(r.solution_basis.size() == 1);
  CHECK(r.constraint_evaluation == Scalar(0));
  CHECK(check_closed_form(r));
  CHECK(r.solution_basis[0].parity == Parity::odd);

  const auto k0 = classify(Algebra::osp12, SourceH::h_full, Scalar(1), 0, InvariantType::t12);
  REQUIRE(k0.solution_basis.size() == 1);
  CHECK(check_closed_form(k0));

  const auto c11 = classify(Algebra::osp12, SourceH::h_full, Scalar(-1), 3, InvariantType::t11);
  REQUIRE(c11.solution_basis.size() == 1);
  CHECK(check_closed_form(c11));
  CHECK(c11.solution_basis[0].parity == Parity::even);
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(classify(Algebra::osp12, SourceH::h0, Scalar(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(classify(Algebra::osp22, SourceH::h_full, Scalar(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(classify(Algebra::sl2, SourceH::h0, Scalar(0), -1), std::invalid_argument);
  CHECK_FALSE(check_closed_form(classify(Algebra::sl2, SourceH::h0, Scalar(1, 4), 2)));
}

TEST_CASE("solutions are invariant") {
  for (int k = 0; k <= 3; ++k)
    for (InvariantType t : {InvariantType::t11, InvariantType::t12})
      for (const Scalar l : {Scalar(-1), Scalar(-1, 2), Scalar(0), Scalar(1, 2)}) {
        const auto r = classify(Algebra::osp12, SourceH::h_full, l, k, t);
        for (const auto& A : r.solution_basis) {
          CHECK(is_invariant(A, Algebra::osp12));
          CHECK(is_invariant(A, Algebra::sl2));
        }
      }
}

TEST_CASE("osp12 solutions sit inside the sl2 solutions") {
  for (int k = 0; k <= 3; ++k)
    for (InvariantType t : {InvariantType::t11, InvariantType::t12})
      for (int li = -4; li <= 4; ++li) {
        const Scalar l(li, 2);
        const auto s = classify(Algebra::osp12, SourceH::h_full, l, k, t);
        const auto b = classify(Algebra::sl2, SourceH::h_full, l, k, t);
        CHECK(s.solution_basis.size() <= b.solution_basis.size());
      }
}

namespace {

// classical dimension for h0 / h1 with target mu, or 0 when the order is not a non-negative integer
int classical_dim(SourceH s, const Scalar& lambda, const Scalar& mu) {
  const Scalar k = mu - lambda + (s == SourceH::h0 ? half() : Scalar(0));
  if (!k.is_integer() || k.sign() < 0) return 0;
  return static_cast<int>(classify(Algebra::sl2, s, lambda, static_cast<int>(k.to_long())).solution_basis.size());
}

}  // namespace

TEST_CASE("sl2 on h_full splits into the eight classical blocks") {
  const Scalar h = half();
  for (int k = 0; k <= 3; ++k)
    for (InvariantType t : {InvariantType::t11, InvariantType::t12})
      for (int li = -4; li <= 4; ++li) {
        const Scalar l(li, 2);
        const auto r = classify(Algebra::sl2, SourceH::h_full, l, k, t);
        const Scalar m = r.mu;
        int blocks = 0;
        for (SourceH s : {SourceH::h0, SourceH::h1})
          for (const Scalar& src : {l, l + h})
            for (const Scalar& dst : {m, m + h}) {
              blocks += classical_dim(s, src, dst);
            }
        INFO("lambda=" << l.str() << " k=" << k << " type=" << static_cast<int>(t));
        CHECK(static_cast<int>(r.solution_basis.size()) == blocks);
      }
}

TEST_CASE("scan agrees with the printed zero sets") {
  std::vector<Scalar> ls;
  for (int i = -8; i <= 8; i += 2) ls.emplace_back(i, 4);
  CHECK(scan_constraint_variety(Algebra::sl2, SourceH::h0, InvariantType::t11, ls, 3, 2).all_agree());
  CHECK(scan_constraint_variety(Algebra::sl2, SourceH::h1, InvariantType::t12, ls, 3, 2).all_agree());
  CHECK(scan_constraint_variety(Algebra::osp12, SourceH::h_full, InvariantType::t12, ls, 3, 2).all_agree());
}

TEST_CASE("json") {
  const auto r = classify(Algebra::osp12, SourceH::h_full, Scalar(0), 1, InvariantType::t12);
  const auto j = to_json(r);
  CHECK(j["algebra"] == "osp12");
  CHECK(j["solution_basis"].size() == 1);
  CHECK(j["solution_basis"][0]["parity"] == "odd");
}

#include "fixtures.hpp"
#include "orbitlie/structure.hpp"

#include <doctest.h>

using namespace orbitlie;
using namespace fixtures;

namespace {

// x -> -x^T on sl2 in the basis (H, E, F)
RatMatrix sl2_theta() { return m({{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}); }

RatMatrix block(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

HomogeneousSpaceSpec hyperbolic() {
  const auto g = sl2();
  const auto h = span(3, {v({0, 1, -1})});
  return HomogeneousSpaceSpec(g, h, killing_complement(g, h), RatMatrix::identity(2));
}

HomogeneousSpaceSpec h3_with_j() {
  const auto g = LieAlgebra::from_brackets({"e1", "e2", "e3", "J"}, {{0, 1, 1, 2}, {3, 0, 1, 1}, {3, 1, -1, 0}});
  return HomogeneousSpaceSpec(g, span(4, {v({0, 0, 0, 1})}), span(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}),
                              RatMatrix::identity(3));
}

HomogeneousSpaceSpec sl2_r() {
  const auto g = direct_sum(sl2(), LieAlgebra::abelian(1, {"f0"}));
  const auto h = span(4, {v({0, 1, -1, 1})});
  return HomogeneousSpaceSpec(g, h, killing_complement(g, h), RatMatrix::identity(3));
}

}  // namespace

TEST_CASE("cartan data on sl2") {
  const auto cd = cartan_data(sl2(), Subspace::full(3), sl2_theta());
  CHECK(cd.checks.all_pass());
  CHECK(cd.k == span(3, {v({0, 1, -1})}));
  CHECK(cd.p == span(3, {v({1, 0, 0}), v({0, 1, 1})}));
  // identity is not Cartan on a noncompact algebra
  const auto bad = cartan_data(sl2(), Subspace::full(3), RatMatrix::identity(3));
  CHECK_FALSE(bad.checks.passed("minus_b_theta_positive_definite"));
}

TEST_CASE("iwasawa on sl2") {
  const auto g = sl2();
  const auto cd = cartan_data(g, Subspace::full(3), sl2_theta());
  const auto iw = iwasawa(g, Subspace::full(3), cd);
  CHECK(iw.k.dim() == 1);
  CHECK(iw.a == span(3, {v({1, 0, 0})}));
  CHECK(iw.n_plus == span(3, {v({0, 1, 0})}));
  CHECK(iw.s == span(3, {v({1, 0, 0}), v({0, 1, 0})}));
  REQUIRE(iw.roots.size() == 2);
  CHECK(iw.roots[0].functional == v({-2}));
  CHECK(iw.roots[1].functional == v({2}));
  CHECK(iw.checks.all_pass());
}

TEST_CASE("iwasawa rejects compact input") {
  const auto cd = cartan_data(so3(), Subspace::full(3), RatMatrix::identity(3));
  CHECK(cd.checks.all_pass());
  CHECK(cd.p.is_zero());
  CHECK_THROWS_AS(iwasawa(so3(), Subspace::full(3), cd), StructureError);
}

TEST_CASE("iwasawa on sl2 + sl2") {
  const auto g = direct_sum(sl2(), sl2());
  const auto th = block(sl2_theta(), sl2_theta());
  const auto cd = cartan_data(g, Subspace::full(6), th);
  REQUIRE(cd.checks.all_pass());
  const auto iw = iwasawa(g, Subspace::full(6), cd);
  CHECK(iw.a.dim() == 2);
  CHECK(iw.n_plus.dim() == 2);
  CHECK(iw.s.dim() == 4);
  CHECK(iw.roots.size() == 4);
  // a regular vector on a wall is refused
  IwasawaOptions wall;
  wall.regular = {1.0, 0.0};
  CHECK_THROWS_AS(iwasawa(g, Subspace::full(6), cd, wall), StructureError);
}

TEST_CASE("o algebra") {
  const auto oa = o_algebra(h3_with_j());
  CHECK(oa.o == span(4, {v({0, 0, 1, 0}), v({0, 0, 0, 1})}));
  CHECK(oa.p.is_zero());
  CHECK(oa.checks.all_pass());
  CHECK(o_algebra(hyperbolic()).o == Subspace::full(3));
  // so3 + R with m tilted so that Nil = R f0 is not inside m
  const auto g = direct_sum(so3(), LieAlgebra::abelian(1, {"f0"}));
  const HomogeneousSpaceSpec tilted(g, span(4, {v({1, 0, 0, 1})}), span(4, {v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({1, 0, 0, -1})}),
                                    RatMatrix::identity(3));
  CHECK_THROWS_AS(o_algebra(tilted), StructureError);
}

TEST_CASE("gnc and nilpotent step") {
  const auto g = sl2_semi_r2();
  const HomogeneousSpaceSpec flat(g, Subspace::zero(5), Subspace::full(5), RatMatrix::identity(5));
  const auto c = gnc_check(flat, levi(g));
  CHECK_FALSE(c.pass);
  CHECK_FALSE(c.detail.empty());
  CHECK(gnc_check(sl2_r(), levi(sl2_r().g())).pass);
  const auto t = thm_nil_check(h3_with_j(), levi(h3_with_j().g()));
  CHECK(t.applicable);
  CHECK(t.step == 2);
  CHECK(t.checks.all_pass());
}

TEST_CASE("rn decomposition and submersion: symmetric base") {
  StructureInput in;
  in.theta = sl2_theta();
  const auto s = hyperbolic();
  const auto rn = rn_decompose(s, in);
  CHECK(rn.checks.all_pass());
  CHECK(rn.f.is_zero());
  CHECK(rn.u.canonical() == span(3, {v({1, 0, 0}), v({0, 1, 0})}));
  CHECK(rn.n_step == 0);
  // u basis (H, E); E has m part (E+F)/2
  CHECK(rn.pullback_ip == RatMatrix::from_rows({v({1, 0}), RatVector{Rational(0), Rational(1, 4)}}, 2));
  const auto sd = submersion_decompose(s, rn);
  CHECK(sd.case_number == 1);
  CHECK(sd.checks.all_pass());
  CHECK(sd.q == s.h().canonical());
  CHECK(sd.fiber->n.dim() == 0);
  StructureInput none;
  CHECK_THROWS_AS(rn_decompose(s, none), StructureError);
}

TEST_CASE("rn decomposition and submersion: nilmanifold") {
  const auto s = h3_with_j();
  const auto rn = rn_decompose(s);
  CHECK(rn.checks.all_pass());
  CHECK(rn.s.is_zero());
  CHECK(rn.u == span(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}));
  CHECK(rn.n_step == 2);
  const auto sd = submersion_decompose(s, rn);
  CHECK(sd.case_number == 2);
  CHECK(sd.checks.all_pass());
  CHECK(sd.fiber->n.dim() == 3);
}

TEST_CASE("rn decomposition and submersion: mixed") {
  StructureInput in;
  in.theta = block(sl2_theta(), RatMatrix::identity(1));
  const auto s = sl2_r();
  const auto rn = rn_decompose(s, in);
  CHECK(rn.checks.all_pass());
  CHECK(rn.f.is_zero());
  CHECK(rn.n_step == 1);
  CHECK(rn.s_commutes_nil);
  const auto sd = submersion_decompose(s, rn);
  CHECK(sd.case_number == 3);
  CHECK(sd.checks.all_pass());
  CHECK(sd.fiber->n.dim() == 1);
  const auto sn = s_not_orthogonal_check(s, rn);
  CHECK(sn.nonzero);
  CHECK(sn.max_pairing == Rational(1, 2));
  CHECK(sn.witness == "<ev(E), ev(f0)> = -1/2");
}

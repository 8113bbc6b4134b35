#include "fixtures.hpp"
#include "orbitlie/nilmanifold.hpp"

#include <doctest.h>

using namespace orbitlie;
using namespace fixtures;

namespace {

HomogeneousSpaceSpec hyperbolic() {
  const auto g = sl2();
  const auto h = span(3, {v({0, 1, -1})});
  return HomogeneousSpaceSpec(g, h, killing_complement(g, h), RatMatrix::identity(2));
}

HomogeneousSpaceSpec sol() {
  return HomogeneousSpaceSpec(e11(), Subspace::zero(3), Subspace::full(3), RatMatrix::identity(3));
}

HomogeneousSpaceSpec euclid(std::size_t n) {
  return HomogeneousSpaceSpec(LieAlgebra::abelian(n), Subspace::zero(n), Subspace::full(n), RatMatrix::identity(n));
}

// h3 + J with explicit metric on m = h3.
HomogeneousSpaceSpec h3_with_j(const RatMatrix& ip) {
  const auto g = LieAlgebra::from_brackets({"e1", "e2", "e3", "J"}, {{0, 1, 1, 2}, {3, 0, 1, 1}, {3, 1, -1, 0}});
  return HomogeneousSpaceSpec(g, span(4, {v({0, 0, 0, 1})}), span(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0})}), ip);
}

}  // namespace

TEST_CASE("killing complement") {
  const auto g = sl2();
  CHECK(killing_complement(g, span(3, {v({0, 1, -1})})) == span(3, {v({1, 0, 0}), v({0, 1, 1})}));
  CHECK(killing_complement(g, Subspace::zero(3)) == Subspace::full(3));
  const auto gr = direct_sum(sl2(), LieAlgebra::abelian(1, {"f0"}));
  CHECK(killing_complement(gr, span(4, {v({0, 1, -1, 1})})) == span(4, {v({1, 0, 0, 0}), v({0, 1, 1, 0}), v({0, 0, 0, 1})}));
  CHECK_THROWS_AS(killing_complement(g, span(3, {v({1, 0, 0})})), SpecError);
}

TEST_CASE("validate") {
  CHECK(validate(euclid(3)).all_pass());
  CHECK(validate(h3_with_j(RatMatrix::identity(3))).all_pass());
  auto bad = validate(h3_with_j(m({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})));
  CHECK_FALSE(bad.passed("ip_ad_h_invariant"));
  CHECK(bad.find("ip_ad_h_invariant")->detail == "(J, e1, e2) = 1");
  CHECK(validate(hyperbolic()).all_pass());
}

TEST_CASE("normalizer data") {
  const auto hp = normalizer_data(hyperbolic());
  CHECK(hp.c_m_h.is_zero());
  CHECK(hp.f.is_zero());
  CHECK(hp.checks.all_pass());
  const auto hs = h3_with_j(RatMatrix::identity(3));
  const auto nd = normalizer_data(hs);
  CHECK(nd.c_m_h == span(4, {v({0, 0, 1, 0})}));
  CHECK(nd.center_g == nd.c_m_h);
  CHECK(nd.f.is_zero());
  CHECK(nd.checks.all_pass());
  CHECK(nd.n_g_h == normalizer(hs.g(), hs.h()));
  const auto e = normalizer_data(euclid(3));
  CHECK(e.c_m_h == Subspace::full(3));
  CHECK(e.center_g == Subspace::full(3));
  CHECK(e.f.is_zero());
}

TEST_CASE("transitivity") {
  const auto s = hyperbolic();
  CHECK(transitivity_check(s, whole(s.g()), Subspace::zero(3)).transitive);
  const auto r = transitivity_check(s, Subspace::zero(3), Subspace::zero(3));
  CHECK_FALSE(r.transitive);
  CHECK(r.missing.dim() == 2);
  CHECK_THROWS_AS(transitivity_check(s, Subspace::zero(3), span(3, {v({1, 0, 0})})), SpecError);
}

TEST_CASE("nilradical transitivity") {
  CHECK(nilrad_transitivity(h3_with_j(RatMatrix::identity(3))).all_pass());
  CHECK(nilrad_transitivity(hyperbolic()).all_pass());
  auto s = nilrad_transitivity(sol());
  CHECK_FALSE(s.passed("hypothesis_skew_on_c_m_h"));
  CHECK(s.find("hypothesis_skew_on_c_m_h")->detail == "Y = e1");
}

TEST_CASE("compatible triple") {
  const auto s = hyperbolic();
  CHECK(compatible_triple_check(s, s.h(), whole(s.g())).all_pass());
  CHECK_THROWS_AS(compatible_triple_check(s, span(3, {v({1, 0, 0})}), whole(s.g())), SpecError);
}

TEST_CASE("geodesic vectors") {
  auto e = geodesic_vector(euclid(3), v({1, 2, 3}));
  REQUIRE(e.feasible());
  CHECK(is_zero(e.certificate->z));
  const auto hs = h3_with_j(RatMatrix::identity(3));
  auto r = geodesic_vector(hs, v({1, 0, 1, 0}));
  REQUIRE(r.feasible());
  CHECK(r.certificate->z == v({0, 0, 0, 1}));
  CHECK(is_zero(r.certificate->residuals));
  auto s = geodesic_vector(sol(), v({0, 1, 0}));
  REQUIRE_FALSE(s.feasible());
  CHECK(s.infeasible->value != 0);
  CHECK(verify_infeasibility(sol(), *s.infeasible));
  // <[e2,e1], e2> = -1 is the e1 equation
  const auto b = -sol().inner(sol().g().bracket(v({0, 1, 0}), v({1, 0, 0})), v({0, 1, 0}));
  CHECK(b == 1);
}

TEST_CASE("geodesic vector homogeneity") {
  const auto hs = h3_with_j(RatMatrix::identity(3));
  SampleStream st(3);
  for (int i = 0; i < 50; ++i) {
    auto x = hs.from_m(st.next_vector(3));
    if (is_zero(x)) continue;
    auto r = geodesic_vector(hs, x);
    REQUIRE(r.feasible());
    const Rational lam = rat(-3, 2);
    CHECK(is_zero(geodesic_residuals(hs, lam * x, lam * r.certificate->z)));
  }
}

TEST_CASE("check_go verdicts") {
  auto hv = check_go(hyperbolic(), {});
  CHECK(hv.kind == VerdictKind::ProvedGO);
  CHECK(hv.certificate == "symmetric");
  GoOptions o;
  o.samples = 1000;
  o.seed = 7;
  auto h3v = check_go(h3_with_j(RatMatrix::identity(3)), o);
  CHECK(h3v.kind == VerdictKind::ProbablyGO);
  CHECK(h3v.feasible == 1000);
  o.samples = 100;
  auto sv = check_go(sol(), o);
  CHECK(sv.kind == VerdictKind::NotGO);
  REQUIRE(sv.witness);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    (void)seed;
    CHECK(verify_infeasibility(sol(), *sv.witness));
  }
  CHECK(natural_reductivity(hyperbolic()).holds);
  auto nr = natural_reductivity(sol());
  CHECK_FALSE(nr.holds);
  CHECK(nr.witness == "(e1, e2, e2) = 2");
}

TEST_CASE("naturally reductive implies Z = 0") {
  const auto s = hyperbolic();
  SampleStream st(5);
  for (int i = 0; i < 30; ++i) {
    auto x = s.from_m(st.next_vector(2));
    CHECK(is_zero(geodesic_residuals(s, x, zero_vector(3))));
  }
}

TEST_CASE("sample stream is reproducible") {
  SampleStream a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(abs(x) <= 7);
  }
}

TEST_CASE("skew consequence") {
  CHECK(skew_consequence(h3_with_j(RatMatrix::identity(3))).pass);
  CHECK(skew_consequence(hyperbolic()).pass);
  auto s = skew_consequence(sol());
  CHECK_FALSE(s.pass);
  CHECK(s.detail == "Y = e1");
}

TEST_CASE("totally geodesic subspaces") {
  const auto s = hyperbolic();
  auto same = totally_geodesic_sub(s, whole(s.g()));
  CHECK(same.spec.g().dim() == 3);
  CHECK(same.kernel.is_zero());
  CHECK(validate(same.spec).all_pass());
  CHECK_THROWS_AS(totally_geodesic_sub(s, span(3, {v({1, 0, 0})})), SpecError);
  const auto gr = direct_sum(sl2(), LieAlgebra::abelian(1, {"f0"}));
  const auto h = span(4, {v({0, 1, -1, 1})});
  const HomogeneousSpaceSpec cover(gr, h, killing_complement(gr, h), m({{8, 0, 0}, {0, 8, 0}, {0, 0, 1}}));
  auto fiber = totally_geodesic_sub(cover, span(4, {v({0, 0, 0, 1})}));
  CHECK(fiber.spec.g().dim() == 1);
  CHECK(fiber.spec.dim_h() == 0);
  CHECK(fiber.spec.ip() == m({{1}}));
  CHECK(validate(fiber.spec).all_pass());
}

TEST_CASE("skew derivations") {
  auto ab = make_nilmanifold(LieAlgebra::abelian(4), RatMatrix::identity(4));
  CHECK(skew_derivations(ab).size() == 6);
  auto h = make_nilmanifold(h3(), RatMatrix::identity(3));
  auto d = skew_derivations(h);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == m({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
  // diag(1,2,1): e1 -> e2, e2 -> -2 e1 is still skew and a derivation.
  auto an = make_nilmanifold(h3(), m({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  auto da = skew_derivations(an);
  REQUIRE(da.size() == 1);
  CHECK(da[0] == m({{0, -2, 0}, {1, 0, 0}, {0, 0, 0}}));
  for (const auto& ns : {ab, h, an})
    for (const auto& dm : skew_derivations(ns)) {
      CHECK((dm.transpose() * ns.ip + ns.ip * dm).is_zero());
      for (std::size_t i = 0; i < ns.n.dim(); ++i)
        for (std::size_t j = 0; j < ns.n.dim(); ++j) {
          const auto x = ns.n.basis_vector(i), y = ns.n.basis_vector(j);
          CHECK(dm.apply(ns.n.bracket(x, y)) == ns.n.bracket(dm.apply(x), y) + ns.n.bracket(x, dm.apply(y)));
        }
      for (const auto& zb : ns.z.basis()) CHECK(ns.z.contains(dm.apply(zb)));
      for (const auto& vb : ns.v.basis()) CHECK(ns.v.contains(dm.apply(vb)));
    }
  CHECK_THROWS_AS(make_nilmanifold(sl2(), RatMatrix::identity(3)), SpecError);
}

TEST_CASE("isometry algebra spec") {
  auto h = to_homogeneous_spec(make_nilmanifold(h3(), RatMatrix::identity(3)), {"J"});
  CHECK(h.g().dim() == 4);
  CHECK(h.dim_h() == 1);
  CHECK(h.g() == h3_with_j(RatMatrix::identity(3)).g());
  auto r2 = to_homogeneous_spec(make_nilmanifold(LieAlgebra::abelian(2), RatMatrix::identity(2)));
  CHECK(r2.g().dim() == 3);
  const auto free2 = LieAlgebra::from_brackets({"x1", "x2", "x3", "y12", "y13", "y23"}, {{0, 1, 1, 3}, {0, 2, 1, 4}, {1, 2, 1, 5}});
  const auto ip = m({{1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  auto t = to_homogeneous_spec(make_nilmanifold(free2, ip));
  CHECK(t.dim_h() == 0);
  CHECK(t.g() == free2);
}

TEST_CASE("go_nil_solve agrees with the general solver") {
  const auto ns = make_nilmanifold(h3(), RatMatrix::identity(3));
  auto a0 = go_nil_solve(ns, v({1, 0, 0}), v({0, 0, 0}));
  REQUIRE(a0);
  CHECK(a0->is_zero());
  auto a1 = go_nil_solve(ns, v({1, 0, 0}), v({0, 0, 1}));
  REQUIRE(a1);
  CHECK(*a1 == skew_derivations(ns)[0]);
  auto ab = make_nilmanifold(LieAlgebra::abelian(3), RatMatrix::identity(3));
  auto a2 = go_nil_solve(ab, v({0, 0, 0}), v({1, 2, 3}));
  REQUIRE(a2);
  const auto hs = to_homogeneous_spec(ns);
  SampleStream st(17);
  for (int i = 0; i < 200; ++i) {
    auto x = st.next_vector(2);
    auto w = st.next();
    const RatVector xv = {x[0], x[1], 0}, wv = {0, 0, w};
    auto a = go_nil_solve(ns, xv, wv);
    auto gv = geodesic_vector(hs, {x[0], x[1], w, 0});
    REQUIRE(a);
    REQUIRE(gv.feasible());
    // Z = c D1 acts on n as c * D1.
    CHECK(*a == gv.certificate->z[3] * skew_derivations(ns)[0]);
  }
}

TEST_CASE("commuting blocks") {
  const auto p = direct_sum(h3(), LieAlgebra::from_brackets({"f1", "f2", "f3"}, {{0, 1, 1, 2}}));
  const auto ns = make_nilmanifold(p, RatMatrix::identity(6));
  const std::vector<Subspace> blocks = {span(6, {v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0})}), span(6, {v({0, 0, 0, 1, 0, 0}), v({0, 0, 0, 0, 1, 0})})};
  CHECK(commuting_blocks_check(ns, blocks).all_pass());
  CHECK(commuting_blocks_check(make_nilmanifold(h3(), RatMatrix::identity(3)), {span(3, {v({1, 0, 0}), v({0, 1, 0})})}).all_pass());
  const auto free2 = LieAlgebra::from_brackets({"x1", "x2", "x3", "y12", "y13", "y23"}, {{0, 1, 1, 3}, {0, 2, 1, 4}, {1, 2, 1, 5}});
  const auto ip = m({{1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  const auto bad = make_nilmanifold(free2, ip);
  CHECK(skew_derivations(bad).empty());
  auto r = commuting_blocks_check(bad, {span(6, {v({1, 0, 0, 0, 0, 0})}), span(6, {v({0, 1, 0, 0, 0, 0}), v({0, 0, 1, 0, 0, 0})})});
  CHECK_FALSE(r.passed("blocks_commute"));
  CHECK(r.find("blocks_commute")->detail == "[x1, x2] = y12");
  CHECK_THROWS_AS(commuting_blocks_check(ns, {blocks[0]}), SpecError);
}

TEST_CASE("invariant subalgebras") {
  const auto ns = make_nilmanifold(h3(), RatMatrix::identity(3));
  CHECK(invariant_subalgebra_ideal_check(ns, ns.z).pass);
  CHECK_THROWS_AS(invariant_subalgebra_ideal_check(ns, span(3, {v({1, 0, 0}), v({0, 0, 1})})), SpecError);
  const auto p = direct_sum(h3(), LieAlgebra::from_brackets({"f1", "f2", "f3"}, {{0, 1, 1, 2}}));
  const auto pn = make_nilmanifold(p, RatMatrix::identity(6));
  CHECK(invariant_subalgebra_ideal_check(pn, span(6, {v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0}), v({0, 0, 1, 0, 0, 0})})).pass);
}

TEST_CASE("two-step group model") {
  const TwoStepGroup ab(LieAlgebra::abelian(3));
  CHECK(ab.bch2(v({1, 2, 3}), v({1, 1, 1})) == v({2, 3, 4}));
  const TwoStepGroup hg(h3());
  CHECK(hg.bch2(v({1, 0, 0}), v({0, 1, 0})) == RatVector{1, 1, rat(1, 2)});
  CHECK(is_zero(hg.bch2(v({1, -2, 5}), v({-1, 2, -5}))));
  SampleStream st(9);
  for (int i = 0; i < 100; ++i) {
    const auto x = st.next_vector(3), y = st.next_vector(3), z = st.next_vector(3);
    CHECK(hg.log2(hg.exp2(x)) == x);
    CHECK(hg.bch2(hg.bch2(x, y), z) == hg.bch2(x, hg.bch2(y, z)));
  }
  const auto f3 = LieAlgebra::from_brackets({"x1", "x2", "x3", "x4", "x5"}, {{0, 1, 1, 2}, {0, 2, 1, 3}, {1, 2, 1, 4}});
  CHECK_THROWS_AS(TwoStepGroup{f3}, SpecError);
  CHECK(step_bound_check(make_nilmanifold(f3, RatMatrix::identity(5)), true).step == 3);
  CHECK_FALSE(step_bound_check(make_nilmanifold(f3, RatMatrix::identity(5)), true).consistent);
  CHECK(step_bound_check(make_nilmanifold(h3(), RatMatrix::identity(3)), true).consistent);
}

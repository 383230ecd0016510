#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logres/invariants.hpp"
#include "support.hpp"

using namespace logres;
using testing::Gen;
using testing::morphism;

namespace {
const std::vector<std::string> uvw{"u", "v", "w"};

MonomialIdeal ideal(std::vector<Monomial> gens) { return MonomialIdeal::from_generators(3, std::move(gens)); }

}  // namespace

TEST_CASE("rho at the Example 1 origin and its charts") {
  CHECK(rho(testing::example1()) == 1);
  CHECK(rho(testing::example1(), 0) == 0);
  CHECK(rho(testing::example1(), 1) == 1);
  CHECK(rho(morphism(uvw, {true, false, false}, {"u^2", "u^5*v^2 + u^4*w", "u^5*v"})) == 0);
  MorphismChart vchart = morphism(uvw, {true, true, false}, {"u^2*v^2", "u^4*v^4*w + u^3*v^5", "u^4*v^5"});
  CHECK(rho(vchart) == kInfinity);
  CHECK(to_weierstrass(vchart).d == kInfinity);
  CHECK_THROWS(rho(testing::example1(), 3));
}

TEST_CASE("rho reads the truncated part only") {
  MorphismChart m = testing::example1();
  m.precision = 6;
  // Generators of F_1 have degree ≥ 6; truncating to degree 5 leaves nothing.
  CHECK(rho(m) == kInfinity);
  m.precision = 12;
  CHECK(rho(m) == 1);
}

TEST_CASE("Weierstrass data of Example 1") {
  WeierstrassData w = to_weierstrass(testing::example1());
  CHECK(w.alpha == Monomial{2, 0, 0});
  CHECK(w.delta == Monomial{3, 0, 0});
  CHECK(w.d == 2);
  CHECK(d_invariant(w) == 2);
  REQUIRE(w.weierstrass);
  CHECK(w.v == 1);
  CHECK(w.T == std::vector<Polynomial>{testing::P("u*w + v^2", uvw), testing::P("u*v", uvw)});
  CHECK(w.g[0].is_zero());
  // coefficient(i, j) counts T from 1, so i = 1 is σ_2.
  CHECK(w.coefficient(1, 0) == testing::P("u*w", uvw));
  CHECK(w.coefficient(1, 1).is_zero());
  CHECK(w.coefficient(2, 1) == testing::P("u", uvw));
  CHECK(w.notes.empty());
}

TEST_CASE("Example 1 is prepared at a generic 1-point") {
  PreparedCheck pc = check_prepared(to_weierstrass(testing::example1()));
  REQUIRE(pc.prepared);
  const PreparedData& p = *pc.data;
  CHECK(p.kind == PointKind::generic_one_point);
  CHECK(p.i0 == 2);
  CHECK(p.beta == Monomial{1, 0, 0});
  REQUIRE(p.coefficients.size() == 1);
  CHECK(p.coefficients[0].i == 3);
  CHECK(p.coefficients[0].monomial == Monomial{1, 0, 0});
  DeclaredData decl = declared_ideal(p);
  CHECK(decl.ideal == ideal({{0, 2, 0}, {1, 0, 0}}));
  CHECK(decl.divisor == std::vector<bool>{true, true, false});

  HGIdeals hg = H_G_ideals(p.weierstrass);
  // H_2 = α u^α ∂_w(u^δ u w) = 2 u^2 u^4; H_3 = 0 since a_30 = 0.
  CHECK(hg.H == std::vector<Polynomial>{testing::P("2*u^6", uvw), Polynomial(3)});
  CHECK(hg.G == std::vector<Polynomial>{testing::P("2*u^7", uvw)});
  CHECK(iota(hg.G, decl.divisor) == 0u);
}

TEST_CASE("non-generic 1-points and 2-points") {
  PreparedCheck ng = check_prepared(to_weierstrass(morphism(uvw, {true, false, false}, {"u^2", "u^3*(v^2+u*w)", "u^4*v*w"})));
  REQUIRE(ng.prepared);
  CHECK(ng.data->kind == PointKind::nongeneric_one_point);
  DeclaredData d1 = declared_ideal(*ng.data);
  CHECK(d1.divisor == std::vector<bool>{true, true, true});
  CHECK(d1.ideal == ideal({{0, 2, 0}, {1, 1, 1}, {1, 0, 1}}));

  PreparedCheck tp = check_prepared(
      to_weierstrass(morphism(uvw, {true, true, false}, {"u^2*v", "u^3*v^2*(w^2+u*v)", "u^4*v^3*w"})));
  REQUIRE(tp.prepared);
  CHECK(tp.data->kind == PointKind::two_point);
  CHECK(tp.data->v == 2);
  CHECK(tp.data->beta == Monomial{1, 1, 0});
  CHECK(declared_ideal(*tp.data).ideal == ideal({{0, 0, 2}, {1, 1, 1}, {1, 1, 0}}));

  // δ + β proportional to α is rejected.
  PreparedCheck dep = check_prepared(
      to_weierstrass(morphism(uvw, {true, true, false}, {"u^2*v^2", "u^3*v^3*(w^2+u*v)", "u^4*v^3*w"})));
  CHECK_FALSE(dep.prepared);
}

TEST_CASE("a_i0 that is not a monomial times a unit is not prepared") {
  WeierstrassData w = to_weierstrass(morphism(uvw, {true, false, false}, {"u^2", "u^3*(v*w+u*w)", "u^4*v"}));
  CHECK(w.d == 2);
  CHECK_FALSE(w.notes.empty());
  // The distinguished variable carries no a_{2,d−1} term after completing the power.
  CHECK(w.coefficient(1, 1).is_zero());
  PreparedCheck pc = check_prepared(w);
  CHECK_FALSE(pc.prepared);
  CHECK(pc.reason.find("a_20") != std::string::npos);
}

TEST_CASE("J ideal when ord T < d") {
  WeierstrassData w = to_weierstrass(morphism(uvw, {true, false, false}, {"u^2", "u^3*(v^3+u*v)", "u^4*w"}));
  CHECK(w.d == 3);
  JIdealData j = J_ideal(w);
  CHECK(j.mu == 2);
  // u·m + m^3 written out by hand.
  CHECK(j.ideal == ideal({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}));
  for (const auto& [a, k] : j.alpha_k) CHECK((a == 1 && k == 2));
  CHECK_THROWS_AS(J_ideal(to_weierstrass(testing::example1())), InvariantError);
}

TEST_CASE("d = 0 at a 2-point with a unit T") {
  MorphismChart m = morphism(uvw, {true, true, false}, {"u^2*v^2", "u^3*v^4*(1+u)"});
  CHECK(to_weierstrass(m).d == 0);
  CHECK(rho(m) == 0);
}

TEST_CASE("d and rho agree on Weierstrass fixtures") {
  Gen g(51);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    MorphismChart m = testing::weierstrass_fixture(g, g.coin());
    WeierstrassData w;
    try {
      w = to_weierstrass(m);
    } catch (const InvariantError&) {
      continue;
    }
    unsigned r = rho(m);
    INFO(m.component_strings()[1] << " d=" << natural_or_infinity(w.d) << " rho=" << natural_or_infinity(r));
    if (w.d <= 1) CHECK(r == 0);
    if (r == 0) CHECK(w.d <= 1);
    if (w.d >= 2 && w.d != kInfinity) CHECK(r == w.d - 1);
    CHECK((w.d == kInfinity) == (r == kInfinity));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("rho does not increase under combinatorial blowups") {
  Gen g(52);
  int samples = 0;
  for (int t = 0; t < 60; ++t) {
    MorphismChart m = testing::two_point_fixture(g);
    unsigned before = rho(m);
    BlowupStep step = blowup(m.chart, BlowupCenter{{0, 1}});
    for (std::size_t c = 0; c < step.children.size(); ++c) {
      MorphismChart child = pullback_morphism(m, step, c);
      CHECK(rho(child) <= before);
      ++samples;
      // Other points over the origin: the new divisor is {x_c = 0}, the other center coordinate moves.
      std::size_t other = 1 - step.children[c].chart_variable;
      std::vector<Rational> at(3, 0);
      at[other] = g.nonzero_rational();
      INFO(m.component_strings()[1] << " child " << c << " at " << to_string(at[other]));
      CHECK(rho(recenter(child, at)) <= before);
      ++samples;
    }
  }
  CHECK(samples >= 100);
}

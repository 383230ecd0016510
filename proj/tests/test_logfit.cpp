#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logres/logfit.hpp"
#include "logres/monomial.hpp"
#include "support.hpp"

using namespace logres;
using testing::Gen;

namespace {
const std::vector<std::string> uvw{"u", "v", "w"};

std::vector<Monomial> staircase(const std::vector<Polynomial>& gens, std::size_t n) {
  MonomializeResult r = monomialize(gens, n);
  REQUIRE(r.decided);
  return r.ideal.generators;
}
}  // namespace

TEST_CASE("log Jacobian of Example 1") {
  MorphismChart m = testing::example1();
  PolyMatrix a = log_jacobian(m);
  REQUIRE(a.size() == 3);
  CHECK(a[0][0] == testing::P("2*u^2", uvw));
  CHECK(a[0][1].is_zero());
  CHECK(a[1][0] == testing::P("4*u^4*w + 3*u^3*v^2", uvw));
  CHECK(a[1][1] == testing::P("2*u^3*v", uvw));
  CHECK(a[1][2] == testing::P("u^4", uvw));
  CHECK(a[2][0] == testing::P("4*u^4*v", uvw));
  CHECK(a[2][1] == testing::P("u^4", uvw));
  CHECK(a == testing::oracle_log_jacobian(m));
}

TEST_CASE("cofactor determinants agree with Leibniz expansion") {
  Gen g(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t k = static_cast<std::size_t>(g.integer(1, 4));
    PolyMatrix a(k, std::vector<Polynomial>(k, Polynomial(3)));
    for (auto& row : a)
      for (auto& e : row) e = g.coin() ? g.polynomial(3, 2, 2) : Polynomial(3);
    CHECK(determinant(a) == testing::leibniz_det(a, 3));
  }
}

TEST_CASE("nonzero minors agree with the oracle as multisets") {
  Gen g(32);
  for (int t = 0; t < 20; ++t) {
    MorphismChart m{Chart{uvw, {true, g.coin(), false}, 16}, {}, kInfinity};
    for (int i = 0; i < 3; ++i) m.components.push_back(g.polynomial(3, 3, 3));
    for (std::size_t s = 1; s <= 3; ++s) {
      auto mine = nonzero_minors(log_jacobian(m), s);
      auto theirs = testing::oracle_minors(m, s);
      auto key = [](std::vector<Polynomial> v) {
        std::sort(v.begin(), v.end(), canonical_less);
        return v;
      };
      CHECK(key(mine) == key(theirs));
    }
  }
}

TEST_CASE("Example 1 Fitting ideals at the origin") {
  MorphismChart m = testing::example1();
  // Values from Leibniz-expanded minors, independent of the library's cofactor code.
  auto f0 = testing::oracle_staircase(testing::oracle_minors(m, 3));
  auto f1 = testing::oracle_staircase(testing::oracle_minors(m, 2));
  auto f2 = testing::oracle_staircase(testing::oracle_minors(m, 1));
  REQUIRE(f0);
  REQUIRE(f1);
  REQUIRE(f2);
  CHECK(*f0 == std::vector<Monomial>{{10, 0, 0}});
  CHECK(*f1 == std::vector<Monomial>{{5, 1, 0}, {6, 0, 0}});
  CHECK(*f2 == std::vector<Monomial>{{2, 0, 0}});

  CHECK(staircase(fitting_ideal(m, 0).generators, 3) == *f0);
  CHECK(staircase(fitting_ideal(m, 1).generators, 3) == *f1);
  CHECK(staircase(fitting_ideal(m, 2).generators, 3) == *f2);
  CHECK_THROWS(fitting_ideal(m, 3));

  MonomialIdeal f1_ideal = monomialize(fitting_ideal(m, 1).generators, 3).ideal;
  CHECK(f1_ideal == MonomialIdeal::from_generators(3, {{1, 0, 0}, {0, 1, 0}}).times({5, 0, 0}));
  CHECK(f1_ideal.to_string(uvw) == "(u^5*v, u^6)");
  CHECK(log_rank_at_origin(m) == 0);
}

TEST_CASE("log rank counts the unit minors at the origin") {
  CHECK(log_rank_at_origin(testing::morphism({"u", "v"}, {false, false}, {"u", "v"})) == 2);
  CHECK(log_rank_at_origin(testing::morphism({"u", "v"}, {true, false}, {"u", "v"})) == 1);
  CHECK(log_rank_at_origin(testing::morphism({"u", "v"}, {true, true}, {"u*v", "u^2"})) == 0);
  // d(1 + u) has log coefficient u: vanishing at the origin.
  CHECK(log_rank_at_origin(testing::morphism({"u", "v"}, {true, false}, {"1 + u", "v^2"})) == 0);
}

TEST_CASE("Example 1 transform laws under the {u,v} blowup") {
  MorphismChart m = testing::example1();
  BlowupStep step = blowup(m.chart, make_center(m.chart, {"u", "v"}));
  auto checks = verify_fitting_transform(m, step);
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO("child " << c.child << " k " << c.k << ": " << c.expected << " vs " << c.actual);
    CHECK(c.verdict == Verdict::pass);
  }
  // The center is not combinatorial, so only F_0 is compared.
  for (const auto& c : checks) CHECK(c.k == 0);
}

TEST_CASE("combinatorial blowups preserve every Fitting ideal") {
  MorphismChart m = testing::morphism({"u1", "u2", "v"}, {true, true, false}, {"u1^2*u2", "u1*u2^3*(1+v)", "u1^3*u2^2*v"});
  BlowupStep step = blowup(m.chart, make_center(m.chart, {"u1", "u2"}));
  auto checks = verify_fitting_transform(m, step);
  unsigned ks = 0;
  for (const auto& c : checks) {
    INFO("child " << c.child << " k " << c.k << ": " << c.expected << " vs " << c.actual);
    CHECK(c.verdict == Verdict::pass);
    ks = std::max(ks, c.k);
  }
  CHECK(ks == 2);
}

TEST_CASE("undecidable Fitting comparisons are reported as such") {
  // F_2 of v w + u^2 w with u, v exceptional is (u^2 w, v w, v + u^2); v + u^2 is neither
  // monomial times unit nor inside the staircase of the others.
  MorphismChart m = testing::morphism(uvw, {true, true, false}, {"v*w + u^2*w"});
  BlowupStep step = blowup(m.chart, make_center(m.chart, {"u", "v"}));
  bool any_undecidable = false;
  for (const auto& c : verify_fitting_transform(m, step))
    if (c.verdict == Verdict::undecidable) any_undecidable = true;
  CHECK(any_undecidable);
  CHECK(to_string(Verdict::undecidable) == "undecidable");
}

TEST_CASE("transform laws on generated morphisms agree with the minors oracle") {
  Gen g(33);
  int decided = 0;
  for (int t = 0; t < 150; ++t) {
    MorphismChart m = testing::hp_fixture(g).morphism;
    std::size_t n = m.chart.dim();
    std::vector<std::size_t> coords(n);
    std::iota(coords.begin(), coords.end(), 0);
    g.shuffle(coords);
    std::vector<std::size_t> center(coords.begin(), coords.begin() + g.integer(2, static_cast<long>(n)));
    std::sort(center.begin(), center.end());
    BlowupCenter c{center};
    testing::TransformOutcome oracle = testing::oracle_transform_law(m, c);
    if (!oracle.decided) continue;
    ++decided;
    INFO(m.component_strings()[0] << " ... center size " << center.size() << " " << oracle.detail);
    CHECK(oracle.holds);
    for (const auto& check : verify_fitting_transform(m, blowup(m.chart, c))) CHECK(check.verdict == Verdict::pass);
  }
  CHECK(decided >= 100);
}

#include <set>

#include "doctest.h"
#include "ramify/catalog.hpp"
#include "ramify/errors.hpp"
#include "ramify/galois.hpp"
#include "ramify/ramification.hpp"

using namespace ramify;

namespace {

const GroundField Q2{GroundKind::PAdic, 2};

// equal to the precision both sides carry
bool close(const TowerElem& x, const TowerElem& y) { return !(x - y).valuation().exact; }

GaloisData load(const std::string& name) { return galois_data(build_extension(builtin_spec(name), 32)); }

// true when some root of P in L is fixed by every element of h
bool contains_root_of(const GaloisData& gd, Mask h, const std::vector<long>& P) {
  for (const auto& z : find_roots(poly_from_ints(gd.ext.L, P), gd.ext.L)) {
    bool fixed = true;
    for (int a = 0; a < gd.degree(); ++a)
      if ((h >> a) & 1) fixed = fixed && close(gd.apply(a, z), z);
    if (fixed) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("profiles match hand computations on every catalog entry") {
  for (const auto& item : builtin_catalog()) {
    CAPTURE(item.spec.name);
    Extension ext = build_extension(item.spec, 32);
    auto np = conjugate_profile(ext);
    CHECK(np == item.expected_profile);
    GaloisData gd = galois_data(ext);
    CHECK(root_profile(gd) == np);
    Rat sum(0);
    for (const auto& r : np) sum += r;
    ValResult vd = poly_eval(poly_derivative(ext.minpoly), ext.alpha).valuation();
    CHECK(vd.exact);
    CHECK(vd.value == sum);
  }
}

TEST_CASE("group tables satisfy the group axioms") {
  for (const auto& item : builtin_catalog()) {
    CAPTURE(item.spec.name);
    GaloisData gd = load(item.spec.name);
    const GaloisGroup& G = gd.group;
    REQUIRE(G.order == gd.ext.degree());
    for (int a = 0; a < G.order; ++a) {
      std::set<int> row, col;
      for (int b = 0; b < G.order; ++b) {
        row.insert(G.compose(a, b));
        col.insert(G.compose(b, a));
      }
      CHECK(row.size() == static_cast<std::size_t>(G.order));
      CHECK(col.size() == static_cast<std::size_t>(G.order));
      CHECK(G.compose(G.identity, a) == a);
      CHECK(G.compose(a, G.inverse(a)) == G.identity);
      for (int b = 0; b < G.order; ++b)
        for (int c = 0; c < G.order; ++c)
          CHECK(G.compose(G.compose(a, b), c) == G.compose(a, G.compose(b, c)));
    }
    // composition agrees with the action on the generator
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b)
        CHECK(close(gd.apply(a, gd.roots[b]), gd.roots[G.compose(a, b)]));
  }
}

TEST_CASE("x^3-2 over Q_2 is not Galois") {
  ExtensionSpec s;
  s.name = "cube";
  s.ground = Q2;
  s.steps = {StepSpec::eisenstein_ground({-2, 0, 0})};
  Extension ext = build_extension(s, 32);
  try {
    galois_data(ext);
    FAIL("expected NotGalois");
  } catch (const NotGalois& e) {
    CHECK(e.roots_found == 1);
    CHECK(e.degree == 3);
  }
}

TEST_CASE("a designated generator of a proper order is rejected") {
  ExtensionSpec s = builtin_spec("sqrt2");
  s.generator = {GroundElem::integer(0), GroundElem::integer(2)};
  CHECK_THROWS_AS(build_extension(s, 32), GeneratorFailure);
}

TEST_CASE("zeta8 lattice") {
  GaloisData gd = load("zeta8");
  auto lat = subextension_lattice(gd);
  CHECK(lat.size() == 5);
  std::vector<Mask> quad;
  for (const auto& m : lat)
    if (m.degree == 2) quad.push_back(m.subgroup);
  REQUIRE(quad.size() == 3);
  for (const auto& P : std::vector<std::vector<long>>{{1, 0, 1}, {-2, 0, 1}, {2, 0, 1}}) {
    int hits = 0;
    for (Mask h : quad) hits += contains_root_of(gd, h, P);
    CHECK(hits == 1);
  }
  for (const auto& m : lat) CHECK(m.normal);
}

TEST_CASE("tame cube has group S3 with one normal proper subgroup") {
  GaloisData gd = load("tamecube_q2");
  CHECK(gd.degree() == 6);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && gd.group.compose(a, b) == gd.group.compose(b, a);
  CHECK_FALSE(abelian);
  auto subs = gd.group.subgroups();
  CHECK(subs.size() == 6);
  int normal_proper = 0;
  for (Mask h : subs)
    if (h != gd.group.full() && popcount(h) > 1 && gd.group.is_normal(h)) ++normal_proper;
  CHECK(normal_proper == 1);
  CHECK(popcount(gd.inertia()) == 3);
}

TEST_CASE("Laurent base: Artin-Schreier quadratic") {
  GaloisData gd = load("as2");
  CHECK(gd.degree() == 2);
  CHECK(gd.i_max == Rat(1));
  CHECK(gd.ext.L->e() == 2);
}

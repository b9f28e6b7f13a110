#include <random>

#include "doctest.h"
#include "ramify/errors.hpp"
#include "ramify/linalg.hpp"
#include "ramify/poly.hpp"
#include "ramify/tower.hpp"

using namespace ramify;

namespace {

const GroundField Q2{GroundKind::PAdic, 2};
const GroundField Q3{GroundKind::PAdic, 3};
const GroundField F2t{GroundKind::Laurent, 2};

bool same(const TowerElem& a, const TowerElem& b) { return (a - b).is_zero_at_precision(); }

TowerElem random_elem(const FieldPtr& F, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-1000, 1000);
  Coords c;
  for (int k = 0; k < F->degree(); ++k) c.push_back(GroundElem::integer(d(rng)));
  if (F->ground_field().kind == GroundKind::Laurent) {
    c.clear();
    std::uniform_int_distribution<std::uint32_t> bit(0, 1);
    for (int k = 0; k < F->degree(); ++k) {
      std::vector<std::uint32_t> t(8);
      for (auto& x : t) x = bit(rng);
      c.push_back(GroundElem::laurent(t));
    }
  }
  return TowerField::from_coords(F, c);
}

}  // namespace

TEST_CASE("ground ring valuations and inverses") {
  GroundRing R(Q3, 10);
  CHECK(R.val(R.from_int(18)) == 2);
  CHECK(R.val(R.zero()) == 10);
  GroundElem u = R.from_int(7);
  GroundElem out;
  R.mul(out, u, R.inv_unit(u));
  CHECK(R.equal(out, R.one()));
  CHECK(R.str(R.from_int(-5)) == "-5");
  GroundRing T(F2t, 8);
  GroundElem a = T.reduce(GroundElem::laurent({1, 1}));  // 1+t
  T.mul(out, a, T.inv_unit(a));
  CHECK(T.equal(out, T.one()));
  CHECK(T.str(T.reduce(GroundElem::laurent({0, 1, 1}))) == "t^2+t");
}

TEST_CASE("quadratic Eisenstein arithmetic") {
  FieldPtr L = TowerField::build(Q2, 32, {StepSpec::eisenstein_ground({-2, 0})});
  CHECK(L->degree() == 2);
  CHECK(L->e() == 2);
  CHECK(L->f() == 1);
  TowerElem pi = TowerField::uniformizer(L);
  CHECK(same(pi * pi, TowerField::from_int(L, 2)));
  CHECK(pi.valuation() == ValResult::Exact(Rat(1, 2)));
  CHECK(pi.pow(3).valuation() == ValResult::Exact(Rat(3, 2)));
  CHECK(TowerField::zero(L).valuation() == ValResult::AtLeast(Rat(32)));
  TowerElem u = TowerField::one(L) + pi;
  CHECK(same(u * u.inverse(), TowerField::one(L)));
  TowerElem q = TowerField::from_int(L, 2).div_uniformizer();
  CHECK(same(q, pi));
  CHECK(q.prec() == Rat(31));
  CHECK(same(pi.pow(5).divide(pi.pow(2)), pi.pow(3)));
  CHECK_THROWS_AS(pi.inverse(), NotAUnit);
  CHECK(TowerField::residue_reps(L).size() == 2);
}

TEST_CASE("Eisenstein and unramified steps are validated") {
  CHECK_THROWS_AS(TowerField::build(Q2, 16, {StepSpec::eisenstein_ground({-4, 0})}), NotEisenstein);
  CHECK_THROWS_AS(TowerField::build(Q2, 16, {StepSpec::eisenstein_ground({2, 1})}), NotEisenstein);
  CHECK_THROWS_AS(TowerField::build(Q2, 16, {StepSpec::unramified(2, {1, 0, 1})}), ReducibleModulus);
  CHECK_THROWS_AS(TowerField::build(Q2, 16, {StepSpec::unramified(2), StepSpec::unramified(2)}), DomainError);
}

TEST_CASE("cyclotomic tower identities") {
  FieldPtr L = TowerField::build(Q2, 32, {StepSpec::eisenstein_ground({2, 4, 6, 4})});
  TowerElem zeta = TowerField::one(L) + TowerField::uniformizer(L);
  CHECK(same(zeta.pow(4), TowerField::from_int(L, -1)));
  CHECK(same(zeta.pow(8), TowerField::one(L)));
  CHECK((zeta - zeta.pow(3)).valuation() == ValResult::Exact(Rat(1, 2)));
  CHECK((zeta + zeta).valuation() == ValResult::Exact(Rat(1)));
}

TEST_CASE("two-level Eisenstein tower") {
  FieldPtr F = TowerField::build(Q2, 24, {StepSpec::eisenstein_ground({-2, 0})});
  TowerElem pi_f = TowerField::uniformizer(F);
  StepSpec s = StepSpec::eisenstein({(-pi_f).coords(), Coords(2)});
  FieldPtr T = TowerField::extend(F, s);
  CHECK(T->degree() == 4);
  CHECK(T->e() == 4);
  TowerElem y = TowerField::uniformizer(T);
  CHECK(y.valuation() == ValResult::Exact(Rat(1, 4)));
  CHECK(same(y.pow(4), TowerField::from_int(T, 2)));
  CHECK(same(TowerField::embed(T, pi_f), y * y));
  CHECK(same(TowerField::from_int(T, 2).div_uniformizer(3), y));
  TowerElem u = TowerField::from_int(T, 3) + y.pow(3);
  CHECK(same(u * u.inverse(), TowerField::one(T)));
}

TEST_CASE("unramified below Eisenstein") {
  FieldPtr U = TowerField::build(Q2, 24, {StepSpec::unramified(2)});
  TowerElem w = TowerField::generator(U);
  CHECK(same(w * w + w + TowerField::one(U), TowerField::zero(U)));
  FieldPtr L = TowerField::extend(U, StepSpec::eisenstein_ground({2, 2}));
  CHECK(L->e() == 2);
  CHECK(L->f() == 2);
  CHECK(L->residue_size() == 4);
  CHECK(TowerField::residue_reps(L).size() == 4);
  TowerElem pi = TowerField::uniformizer(L);
  TowerElem x = TowerField::embed(L, w) + pi;
  CHECK(same(x * x.inverse(), TowerField::one(L)));
  CHECK(same((pi * TowerField::embed(L, w)).div_uniformizer(), TowerField::embed(L, w)));
}

TEST_CASE("equal characteristic Artin-Schreier step") {
  GroundElem t = GroundElem::laurent({0, 1});
  FieldPtr L = TowerField::build(F2t, 32, {StepSpec::eisenstein({{t}, {t}})});
  TowerElem pi = TowerField::uniformizer(L);
  TowerElem T = TowerField::from_ground(L, t);
  CHECK(same(pi * pi, T * pi + T));
  CHECK(pi.valuation() == ValResult::Exact(Rat(1, 2)));
  CHECK(same(T.div_uniformizer(2) * pi * pi, T));
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(3);
  std::vector<FieldPtr> fields{
      TowerField::build(Q2, 20, {StepSpec::eisenstein_ground({2, 4, 6, 4})}),
      TowerField::build(Q3, 12, {StepSpec::eisenstein_ground({3, 9, 18, 21, 15, 6})}),
      TowerField::build(F2t, 16, {StepSpec::eisenstein({{GroundElem::laurent({0, 1})}, {GroundElem::laurent({0, 1})}})}),
      TowerField::extend(TowerField::build(Q2, 20, {StepSpec::unramified(2)}), StepSpec::eisenstein_ground({-2, 0, 0})),
  };
  for (const auto& F : fields) {
    for (int it = 0; it < 40; ++it) {
      TowerElem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK(same((a * b) * c, a * (b * c)));
      CHECK(same(a * (b + c), a * b + a * c));
      CHECK(same(a * b, b * a));
      ValResult va = a.valuation(), vb = b.valuation();
      if (va.exact && vb.exact) CHECK((a * b).valuation() == ValResult::Exact(va.value + vb.value));
      if (a.is_unit()) CHECK(same(a * a.inverse(), TowerField::one(F)));
    }
  }
}

TEST_CASE("Newton polygons") {
  FieldPtr L = TowerField::build(Q2, 32, {StepSpec::eisenstein_ground({-2, 0})});
  FieldPtr K = L->base();
  Poly P = poly_from_ints(K, {-2, 0, 1});
  NewtonPolygon np = newton_polygon(P, Rat(32));
  CHECK(np.zero_roots == 0);
  CHECK(np.root_valuations() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  Poly Q = taylor_shift(P, TowerField::uniformizer(L));
  NewtonPolygon nq = newton_polygon(Q, Rat(32));
  CHECK(nq.zero_roots == 1);
  CHECK(nq.root_valuations() == std::vector<Rat>{Rat(3, 2)});
  // an uncertain coefficient under the hull is refused
  std::vector<ValResult> v{ValResult::Exact(Rat(4)), ValResult::AtLeast(Rat(1)), ValResult::Exact(Rat(0))};
  CHECK_THROWS_AS(newton_polygon(v, Rat(32)), InsufficientPrecision);
  v[1] = ValResult::AtLeast(Rat(3));
  CHECK(newton_polygon(v, Rat(32)).root_valuations() == std::vector<Rat>{Rat(2), Rat(2)});
}

TEST_CASE("Newton polygon slopes agree with root differences") {
  // x^4+1 at alpha = zeta_8: roots differ by valuations 1/2,1/2,1
  FieldPtr L = TowerField::build(Q2, 32, {StepSpec::eisenstein_ground({2, 4, 6, 4})});
  FieldPtr K = L->base();
  TowerElem zeta = TowerField::one(L) + TowerField::uniformizer(L);
  Poly P = poly_from_ints(K, {1, 0, 0, 0, 1});
  CHECK(poly_eval(P, zeta).is_zero_at_precision());
  NewtonPolygon np = newton_polygon(taylor_shift(P, zeta), Rat(32));
  CHECK(np.root_valuations() == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 2)});
  std::vector<Rat> direct;
  for (int k : {3, 5, 7}) direct.push_back((zeta.pow(k) - zeta).valuation().value);
  std::sort(direct.rbegin(), direct.rend());
  CHECK(direct == np.root_valuations());
}

TEST_CASE("saturated solver and index valuation") {
  GroundRing R(Q2, 16);
  GMatrix A{{R.from_int(1), R.from_int(0)}, {R.from_int(3), R.from_int(2)}};
  CHECK(index_valuation(R, A) == 1);
  GMatrix B{{R.from_int(1), R.from_int(2)}, {R.from_int(3), R.from_int(5)}};
  SaturatedSolver S(R, B);
  REQUIRE(S.saturated());
  int residual = 0;
  auto x = S.solve({R.from_int(5), R.from_int(13)}, &residual);
  CHECK(residual == 16);
  CHECK(R.equal(x[0], R.from_int(1)));
  CHECK(R.equal(x[1], R.from_int(2)));
  CHECK_FALSE(SaturatedSolver(R, A).saturated());
}

#include <random>

#include "doctest.h"
#include "ramify/errors.hpp"
#include "ramify/finite_field.hpp"
#include "ramify/pl_function.hpp"
#include "ramify/rat.hpp"

using namespace ramify;

TEST_CASE("rationals stay canonical") {
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(4, 2).str() == "2/1");
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("rational field laws on random samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), n(1, 30);
  for (int it = 0; it < 300; ++it) {
    Rat a(d(rng), n(rng)), b(d(rng), n(rng)), c(d(rng), n(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (b.sign() != 0) CHECK((a / b) * b == a);
    CHECK(Rat::parse(a.str()) == a);
  }
}

TEST_CASE("builtin residue moduli are irreducible") {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned f = 1; f <= 4; ++f) {
      CAPTURE(p);
      CAPTURE(f);
      FiniteField F = FiniteField::builtin(p, f);
      CHECK(F.degree() == f);
    }
}

TEST_CASE("reducible modulus is rejected with a factor") {
  try {
    FiniteField F(2, {1, 0, 1});  // x^2+1 = (x+1)^2
    FAIL("expected rejection");
  } catch (const ReducibleModulus& e) {
    CHECK(e.factor == std::vector<unsigned>{1, 1});
  }
  CHECK_THROWS_AS(FiniteField(3, {2, 0, 1}), ReducibleModulus);  // x^2+2 = (x+1)(x+2)
}

TEST_CASE("small finite fields satisfy the field axioms exhaustively") {
  for (auto [p, f] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    FiniteField F = FiniteField::builtin(p, f);
    auto el = F.elements();
    CHECK(el.size() == F.size());
    for (const auto& a : el) {
      CHECK(F.index(a) < F.size());
      if (!F.is_zero(a)) {
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.pow(a, F.size() - 1) == F.one());
      }
      for (const auto& b : el) {
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (const auto& c : el) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
    // the generator has full degree
    CHECK(F.element_degree(F.gen()) == f);
  }
}

TEST_CASE("piecewise linear evaluation and inversion") {
  PLFunction F({{Rat(0), Rat(0)}, {Rat(3, 2), Rat(3)}}, Rat(1));
  CHECK(F.eval(Rat(1, 2)) == Rat(1));
  CHECK(F.eval(Rat(2)) == Rat(7, 2));
  CHECK(F.knots().size() == 1);
  CHECK(F.slopes() == std::vector<Rat>{Rat(2), Rat(1)});
  PLFunction G = F.inverse();
  CHECK(G.eval(Rat(3)) == Rat(3, 2));
  CHECK(G.inverse() == F);
  CHECK_THROWS_AS(PLFunction({{Rat(0), Rat(0)}, {Rat(1), Rat(-1)}}, Rat(1)), DomainError);
  CHECK_THROWS_AS(PLFunction({{Rat(0), Rat(0)}}, Rat(0)), DomainError);
  CHECK_THROWS_AS(F.eval(Rat(-1)), DomainError);
  // collinear points collapse
  PLFunction H({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, Rat(2));
  CHECK(H.knots().empty());
}

TEST_CASE("inverse round trip on random monotone functions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(1, 9);
  for (int it = 0; it < 100; ++it) {
    std::vector<PLFunction::Point> pts{{Rat(0), Rat(0)}};
    for (int k = 0; k < 4; ++k) pts.push_back({pts.back().x + Rat(d(rng), 4), pts.back().y + Rat(d(rng), 3)});
    PLFunction F(pts, Rat(d(rng), 2));
    PLFunction G = F.inverse();
    for (int k = 0; k < 10; ++k) {
      Rat x(d(rng) * k, 7);
      CHECK(G.eval(F.eval(x)) == x);
    }
  }
}

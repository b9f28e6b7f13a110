#include <algorithm>
#include <random>

#include "doctest.h"
#include "ramify/catalog.hpp"
#include "ramify/pm_oracle.hpp"
#include "ramify/ramification.hpp"

using namespace ramify;

namespace {

struct Loaded {
  GaloisData gd;
  Breaks br;
};

Loaded load(const std::string& name) {
  Extension ext = build_extension(builtin_spec(name), 32);
  GaloisData gd = galois_data(ext);
  Breaks br = breaks(conjugate_profile(ext));
  return {std::move(gd), std::move(br)};
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& item : builtin_catalog()) out.push_back(item.spec.name);
  return out;
}

}  // namespace

TEST_CASE("herbrand function examples") {
  PLFunction f = herbrand({Rat(3, 2)});
  CHECK(f.eval(Rat(3, 2)) == Rat(3));
  CHECK(f.eval(Rat(1)) == Rat(2));
  CHECK(f.eval(Rat(2)) == Rat(7, 2));

  PLFunction z = herbrand({Rat(1, 2), Rat(1, 2), Rat(1)});
  auto knots = z.knots();
  REQUIRE(knots.size() == 2);
  CHECK(knots[0] == PLFunction::Point{Rat(1, 2), Rat(2)});
  CHECK(knots[1] == PLFunction::Point{Rat(1), Rat(3)});

  CHECK(herbrand({Rat(0)}) == PLFunction::identity());
  CHECK(herbrand({}) == PLFunction::identity());

  Breaks t = breaks({});
  CHECK(t.trivial);
  CHECK(t.u_max == ExtRat::minus_infinity());
  CHECK(t.u_max.str() == "-inf");
}

TEST_CASE("herbrand function properties on random profiles") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 7), num(0, 12), den(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rat> prof;
    int n = len(rng);
    for (int k = 0; k < n; ++k) prof.push_back(Rat(num(rng), den(rng)));
    std::sort(prof.begin(), prof.end());
    Breaks br = breaks(prof);
    CHECK(br.f.eval(Rat(0)) == Rat(0));
    CHECK(br.u_max.value == br.f.eval(br.i_max.value));
    CHECK(br.i_max.value == prof.back());
    CHECK(br.f.final_slope() == Rat(1));
    const long positive = std::count_if(prof.begin(), prof.end(), [](const Rat& r) { return r.sign() > 0; });
    CHECK(br.f.initial_slope() == Rat(positive + 1));
    auto sl = br.f.slopes();
    for (std::size_t k = 1; k < sl.size(); ++k) CHECK(sl[k] < sl[k - 1]);
    for (int j = 0; j <= 40; ++j) {
      Rat x(j, 3);
      CHECK(br.p_inv.eval(br.f.eval(x)) == x);
      // slope just right of x counts the profile entries >= the point, plus one
      Rat mid = x + Rat(1, 997);
      long cnt = std::count_if(prof.begin(), prof.end(), [&](const Rat& r) { return r >= mid; }) + 1;
      CHECK((br.f.eval(mid + Rat(1, 100000)) - br.f.eval(mid)) * Rat(100000) == Rat(cnt));
    }
    for (std::size_t k = 0; k < prof.size(); ++k) CHECK(br.upper[k] == br.f.eval(prof[k]));
  }
}

TEST_CASE("disc cover examples for x^2-2") {
  Loaded s = load("sqrt2");
  DiscCover a = disc_cover(s.gd.pairwise, s.br, Rat(2));
  CHECK(a.radius == Rat(1));
  CHECK(a.components == 1);
  CHECK_FALSE(a.separates);
  DiscCover b = disc_cover(s.gd.pairwise, s.br, Rat(7, 2));
  CHECK(b.radius == Rat(2));
  CHECK(b.components == 2);
  CHECK(b.separates);
  CHECK(conductor(s.gd.pairwise, s.br) == ExtRat::of(Rat(3)));
  CHECK_FALSE(disc_cover(s.gd.pairwise, s.br, Rat(3)).separates);
  CHECK(disc_cover(s.gd.pairwise, s.br, Rat(301, 100)).separates);
}

TEST_CASE("distance identity examples") {
  Loaded s = load("sqrt2");
  const FieldPtr& L = s.gd.ext.L;
  IdentityCheck z = distance_identity_check(s.gd, s.br, TowerField::zero(L));
  CHECK(z.certified);
  CHECK(z.holds);
  CHECK(z.lhs == ValResult::Exact(Rat(1)));
  CHECK(z.nearest == Rat(1, 2));

  IdentityCheck w = distance_identity_check(s.gd, s.br, s.gd.roots[0] + TowerField::from_int(L, 4));
  CHECK(w.certified);
  CHECK(w.holds);
  CHECK(w.lhs == ValResult::Exact(Rat(7, 2)));
  CHECK(w.nearest == Rat(2));
  CHECK(w.rhs == Rat(7, 2));

  IdentityCheck k = distance_identity_check(s.gd, s.br, TowerField::from_int(s.gd.ext.K, 3));
  CHECK(k.holds);
  CHECK(k.lhs == ValResult::Exact(Rat(0)));
}

TEST_CASE("distance identity on random points of every catalog entry") {
  std::mt19937_64 rng(11);
  for (const auto& name : names()) {
    CAPTURE(name);
    Loaded s = load(name);
    if (s.br.trivial) continue;
    const FieldPtr& L = s.gd.ext.L;
    auto reps = TowerField::residue_reps(L);
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    std::uniform_int_distribution<int> root(0, s.gd.degree() - 1), depth(0, 8);
    const TowerElem pi = TowerField::uniformizer(L);
    int certified = 0;
    for (int trial = 0; trial < 60; ++trial) {
      TowerElem u = reps[pick(rng)];
      if (!u.is_unit()) u = TowerField::one(L);
      u = u + pi * reps[pick(rng)];
      TowerElem beta = s.gd.roots[root(rng)] + pi.pow(depth(rng)) * u;
      IdentityCheck ic = distance_identity_check(s.gd, s.br, beta);
      if (!ic.certified) continue;
      ++certified;
      CHECK(ic.holds);
      CHECK(ic.lhs.value == s.br.f.eval(ic.nearest));
    }
    CHECK(certified >= 40);
  }
}

TEST_CASE("Krasner examples") {
  Loaded s = load("sqrt2");
  const FieldPtr& L = s.gd.ext.L;
  CHECK(krasner_check(s.gd, s.gd.roots[0] + TowerField::from_int(L, 4)) == 0);
  CHECK(krasner_check(s.gd, s.gd.roots[1] + TowerField::from_int(L, 4)) == 1);
  CHECK(krasner_check(s.gd, s.gd.roots[0] + TowerField::from_int(L, 2)) == -1);
  CHECK(krasner_check(s.gd, TowerField::zero(L)) == -1);
}

TEST_CASE("classical numbering shifts") {
  CHECK(serre_lower(Rat(3, 2), 2) == Rat(2));
  CHECK(serre_upper(Rat(3)) == Rat(2));
  CHECK(serre_lower(Rat(1, 2), 4) == Rat(1));
}

TEST_CASE("filtrations are monotone and exhaust the group") {
  for (const auto& name : names()) {
    CAPTURE(name);
    Loaded s = load(name);
    const int d = s.gd.degree();
    Mask prev_up = s.gd.group.full(), prev_low = s.gd.group.full();
    for (const auto& m : m_grid(Rat(6), 6)) {
      Mask up = upper_group(s.gd, s.br, m), low = lower_group(s.gd, m);
      CHECK((up & ~prev_up) == 0);
      CHECK((low & ~prev_low) == 0);
      CHECK(s.gd.group.closure(up) == up);
      CHECK(s.gd.group.is_normal(up));
      // the two numberings agree through f
      CHECK(upper_group(s.gd, s.br, s.br.f.eval(m)) == low);
      if (!s.br.trivial && m > s.br.u_max.value) CHECK(popcount(up) == 1);
      prev_up = up;
      prev_low = low;
    }
    for (int a = 0; a < d; ++a) {
      auto u = upper_index(s.gd, s.br, a);
      CHECK(u.has_value() == (a != s.gd.group.identity));
    }
  }
}

TEST_CASE("disc separation and the sampled condition coincide") {
  for (const auto& name : names()) {
    CAPTURE(name);
    Loaded s = load(name);
    if (s.br.trivial) continue;
    ExtRat c = conductor(s.gd.pairwise, s.br);
    CHECK(c == s.br.u_max);
    bool seen = false;
    for (const auto& m : m_grid(s.br.u_max.value + Rat(2), 4)) {
      CAPTURE(m.str());
      DiscCover dc = disc_cover(s.gd.pairwise, s.br, m);
      CHECK(dc.separates == (m > c.value));
      QSample q = sampled_q(s.gd, s.br, m);
      CHECK(q.membership_ok);
      CHECK(q.holds == dc.separates);
      if (seen) CHECK(dc.separates);
      seen = seen || dc.separates;
    }
  }
}

TEST_CASE("wild inertia sits just above 1") {
  for (const auto& name : names()) {
    CAPTURE(name);
    Loaded s = load(name);
    const Mask I = s.gd.inertia();
    const int p = static_cast<int>(s.gd.ext.L->ring().p());
    int wild = 1;
    for (int n = popcount(I); n % p == 0; n /= p) wild *= p;
    CHECK(upper_group(s.gd, s.br, Rat(1, 2)) == I);
    CHECK(upper_group(s.gd, s.br, Rat(1)) == I);
    Rat next = Rat(2);
    for (const auto& u : s.br.upper)
      if (u > Rat(1) && u < next) next = u;
    CHECK(popcount(upper_group(s.gd, s.br, (Rat(1) + next) / Rat(2))) == wild);
  }
}

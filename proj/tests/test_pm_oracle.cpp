#include <cmath>

#include "doctest.h"
#include "ramify/catalog.hpp"
#include "ramify/errors.hpp"
#include "ramify/pm_oracle.hpp"

using namespace ramify;

namespace {

struct Loaded {
  GaloisData gd;
  Breaks br;
  std::vector<Subfield> lattice;
};

Loaded load(const std::string& name) {
  Extension ext = build_extension(builtin_spec(name), 32);
  GaloisData gd = galois_data(ext);
  Breaks br = breaks(conjugate_profile(ext));
  auto lat = subextension_lattice(gd);
  return {std::move(gd), std::move(br), std::move(lat)};
}

TestField field(const std::string& label, FieldPtr E) {
  TestField tf;
  tf.label = label;
  tf.kind = "tame";
  tf.E = std::move(E);
  return tf;
}

FieldPtr sqrt_minus2(const FieldPtr& K) { return TowerField::extend(K, StepSpec::eisenstein_ground({2, 0})); }

}  // namespace

TEST_CASE("witness enumeration examples") {
  Loaded s = load("sqrt2");
  const FieldPtr& K = s.gd.ext.K;
  WitnessSet a = hom_witnesses(s.gd, s.br, K, Rat(1), 8, EnumMode::Brute);
  CHECK(a.count == 1);
  CHECK(a.scanned == 2);
  REQUIRE(a.beta.size() == 1);
  CHECK(a.beta[0].valuation().value >= Rat(1));
  WitnessSet b = hom_witnesses(s.gd, s.br, K, Rat(3, 2), 8, EnumMode::Brute);
  CHECK(b.count == 0);
  CHECK(b.scanned == 4);

  Loaded u = load("unram2");
  WitnessSet c = hom_witnesses(u.gd, u.br, u.gd.ext.K, Rat(1, 2), 8, EnumMode::Brute);
  CHECK(c.count == 0);
  CHECK(cut_index(Rat(1, 2), 1) == 1);
  CHECK(cut_index(Rat(3, 2), 2) == 3);
  CHECK(cut_index(Rat(5, 3), 2) == 4);
}

TEST_CASE("brute enumeration refuses huge scans") {
  Loaded s = load("sqrt2");
  CHECK_THROWS_AS(hom_witnesses(s.gd, s.br, s.gd.ext.K, Rat(30), 1, EnumMode::Brute), EnumerationTooLarge);
  WitnessSet w = hom_witnesses(s.gd, s.br, s.gd.ext.K, Rat(30), 1, EnumMode::Smart);
  CHECK(w.count == 0);
}

TEST_CASE("Q_2(sqrt(-2)) is a counterexample for x^2-2 at m = 2") {
  Loaded s = load("sqrt2");
  TestField tf = field("Q2(sqrt-2)", sqrt_minus2(s.gd.ext.K));
  PmVerdict v = pm_verdict(s.gd, s.br, tf, Rat(2), false);
  CHECK(v.kind == VerdictKind::Counterexample);
  CHECK_FALSE(v.embedding);
  CHECK(v.vp.value >= Rat(2));
  MaxVp mx = max_vp_smart(s.gd, s.br, tf.E);
  CHECK_FALSE(mx.embeds);
  CHECK(mx.value == ValResult::Exact(Rat(5, 2)));
  CHECK(pm_verdict(s.gd, s.br, tf, Rat(5, 2), false).kind == VerdictKind::Counterexample);
  CHECK(pm_verdict(s.gd, s.br, tf, Rat(11, 4), false).kind != VerdictKind::Counterexample);
}

TEST_CASE("smart search agrees with brute enumeration") {
  for (const auto& name : {"sqrt2", "zeta4", "as2", "tamesq3", "unram2", "tame3_q7"}) {
    CAPTURE(name);
    Loaded s = load(name);
    CatalogOptions opt;
    opt.cap = 24;
    for (const auto& tf : test_catalog(s.gd, s.br, s.lattice, opt)) {
      CAPTURE(tf.label);
      MaxVp sm = max_vp_smart(s.gd, s.br, tf.E);
      MaxVp br;
      try {
        br = max_vp_brute(s.gd, s.br, tf.E, 20000);
      } catch (const EnumerationTooLarge&) {
        continue;
      }
      CHECK(sm.embeds == br.embeds);
      CHECK(sm.embeds == tf.embeds);
      if (!sm.embeds) CHECK(sm.value == br.value);
      if (s.br.trivial) continue;
      for (const auto& m : m_grid(s.br.u_max.value + Rat(1), 2)) {
        const double classes = std::pow(double(tf.E->ring().p()), double(cut_index(m, tf.E->e()) * tf.E->f()));
        if (classes > 4096) continue;
        WitnessSet a = hom_witnesses(s.gd, s.br, tf.E, m, 4, EnumMode::Brute);
        WitnessSet b = hom_witnesses(s.gd, s.br, tf.E, m, 4, EnumMode::Smart);
        CHECK(a.count == b.count);
        CHECK(a.scanned == b.scanned);
      }
    }
  }
}

TEST_CASE("counterexamples are downward closed and vanish above u") {
  for (const auto& name : {"sqrt2", "zeta4", "as2", "tamesq3", "tame3_q7"}) {
    CAPTURE(name);
    Loaded s = load(name);
    CatalogOptions opt;
    opt.cap = 24;
    const Rat& u = s.br.u_max.value;
    for (const auto& tf : test_catalog(s.gd, s.br, s.lattice, opt)) {
      CAPTURE(tf.label);
      bool above = false;
      auto grid = m_grid(u + Rat(1), 4);
      for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        PmVerdict v = pm_verdict(s.gd, s.br, tf, *it, true);
        bool ce = v.kind == VerdictKind::Counterexample;
        if (above) CHECK(ce);
        above = above || ce;
        if (*it > u) CHECK_FALSE(ce);
        if (tf.embeds) CHECK_FALSE(ce);
      }
    }
  }
}

TEST_CASE("lower bound and window for x^2-2") {
  Loaded s = load("sqrt2");
  PmScan scan = pm_scan(s.gd, s.br, s.lattice, CatalogOptions{});
  CHECK(scan.sound);
  CHECK(scan.smart_brute_agree);
  CHECK_FALSE(scan.tame);
  CHECK(scan.lower_bound == ExtRat::of(Rat(11, 4)));
  CHECK(scan.window.pass());
  for (const auto& row : scan.rows)
    if (row.m > Rat(3)) CHECK(row.counterexamples == 0);
}

TEST_CASE("tame extensions reach u itself") {
  Loaded s = load("tamesq3");
  PmScan scan = pm_scan(s.gd, s.br, s.lattice, CatalogOptions{});
  CHECK(scan.tame);
  CHECK(scan.counterexample_at_u);
  CHECK(scan.lower_bound == ExtRat::of(Rat(1)));
  CHECK(scan.window.pass());
}

TEST_CASE("grid of rationals") {
  auto g = m_grid(Rat(1), 3);
  std::vector<Rat> want{Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
  CHECK(g == want);
}

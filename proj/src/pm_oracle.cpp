#include "ramify/pm_oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

mpz_class ipow(std::uint64_t q, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(std::max(0L, k)));
  return r;
}

std::string digit_str(const std::vector<std::uint64_t>& d) {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "." : "") + std::to_string(d[k]);
  return s.empty() ? "0" : s;
}

// pi_E-adic digit expansions with residue representatives.
struct DigitSpace {
  FieldPtr E;
  std::vector<TowerElem> reps;
  std::vector<TowerElem> pis;
  Poly P;

  DigitSpace(const GaloisData& gd, const FieldPtr& F) : E(F) {
    reps = TowerField::residue_reps(E);
    P = poly_embed(E, gd.ext.minpoly);
    pis.push_back(TowerField::one(E));
  }
  const TowerElem& pi_pow(std::size_t k) {
    while (pis.size() <= k) pis.push_back(pis.back() * TowerField::uniformizer(E));
    return pis[k];
  }
  TowerElem child(const TowerElem& c, std::size_t k, std::size_t r) {
    if (r == 0) return c;
    return c + reps[r] * pi_pow(k);
  }
  ValResult vp(const TowerElem& x) const { return poly_eval(P, x).valuation(); }
};

Rat level_of(long k, int e) { return Rat(k, e); }

std::vector<TowerElem> step_poly(const FieldPtr& floor, const StepSpec& st) {
  std::vector<TowerElem> out;
  for (const auto& c : st.coeffs) out.push_back(TowerField::from_coords(floor, c));
  out.push_back(TowerField::one(floor));
  return out;
}

// In characteristic p a polynomial in x^p defines an inseparable extension.
bool inseparable(const GroundField& g, const std::vector<Coords>& c, const GroundRing& R) {
  if (g.kind != GroundKind::Laurent) return false;
  const long p = g.p;
  if (static_cast<long>(c.size()) % p != 0) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (static_cast<long>(k) % p == 0) continue;
    for (const auto& x : c[k])
      if (!R.is_zero(x)) return false;
  }
  return true;
}

TestField make_field(std::string label, std::string kind, FieldPtr E) {
  TestField tf;
  tf.label = std::move(label);
  tf.kind = std::move(kind);
  tf.E = std::move(E);
  return tf;
}

}  // namespace

long cut_index(const Rat& m, int e) {
  if (m.sign() <= 0) return 0;
  return (m * Rat(e)).ceil_si();
}

std::vector<TestField> test_catalog(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                                    const CatalogOptions& opt) {
  const FieldPtr& K = gd.ext.K;
  const FieldPtr& L = gd.ext.L;
  const GroundRing& R = K->ring();
  std::vector<TestField> out;

  out.push_back(make_field("K", "base", K));
  for (std::size_t s = 0; s < lattice.size(); ++s) {
    const Subfield& M = lattice[s];
    if (M.order == gd.degree()) continue;
    FieldPtr E = K;
    for (const auto& st : M.tower) E = TowerField::extend(E, st);
    out.push_back(make_field("sub" + std::to_string(s) + " deg" + std::to_string(M.degree) + " e" +
                                 std::to_string(M.e) + " f" + std::to_string(M.f),
                             "subfield", E));
  }

  // tame twists x^e' - w pi_K
  std::vector<std::pair<std::string, TowerElem>> units{{"1", TowerField::one(K)},
                                                      {"-1", -TowerField::one(K)},
                                                      {"1+pi", TowerField::one(K) + TowerField::uniformizer(K)}};
  std::vector<std::pair<FieldPtr, Poly>> tame;
  for (int ep = 2; ep <= opt.tame_max; ++ep) {
    for (const auto& [wname, w] : units) {
      std::vector<Coords> c(ep, Coords{R.zero()});
      c[0] = (-(w * TowerField::uniformizer(K))).coords();
      if (inseparable(K->ground_field(), c, R)) continue;
      StepSpec st = StepSpec::eisenstein(c);
      FieldPtr E = TowerField::extend(K, st);
      Poly Q = step_poly(K, st);
      bool dup = false;
      for (const auto& [F, Qf] : tame) {
        if (F->degree() != ep) continue;
        if (!find_roots(poly_embed(F, Q), F).empty()) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      tame.push_back({E, Q});
      TestField tf = make_field("tame e'=" + std::to_string(ep) + " w=" + wname, "tame", E);
      tf.twist = ep;
      out.push_back(tf);
    }
  }

  // perturbations of chi(x^e'), chi the Eisenstein polynomial of pi_L over the unramified floor
  bool unram_floor = L->e() > 1 && L->base() && L->step().kind == StepSpec::Kind::Eisenstein;
  for (FieldPtr F = L->base(); unram_floor && F && F->base(); F = F->base())
    if (F->step().kind != StepSpec::Kind::Unramified) unram_floor = false;
  if (unram_floor && !br.trivial) {
    const FieldPtr& U = L->base();
    const StepSpec& top = L->step();
    const Rat u = br.u_max.value;
    auto build = [&](int ep, const Rat& mc, long a, long k) -> bool {
      const long D = static_cast<long>(top.degree) * ep;
      std::vector<Coords> c(D, Coords(U->degree(), R.zero()));
      for (int j = 0; j < top.degree; ++j) c[j * ep] = top.coeffs[j];
      GroundElem sum;
      R.add(sum, c[k][0], R.uniformizer_pow(static_cast<int>(a)));
      c[k][0] = sum;
      if (inseparable(K->ground_field(), c, R)) return false;
      FieldPtr E;
      try {
        E = TowerField::extend(U, StepSpec::eisenstein(c));
      } catch (const NotEisenstein&) {
        return false;
      }
      TestField tf = make_field("perturb e'=" + std::to_string(ep) + " m=" + mc.str(), "perturb", E);
      tf.twist = ep;
      tf.level = mc;
      out.push_back(tf);
      return true;
    };
    for (int ep = 1; ep <= opt.tame_max; ++ep) {
      const long D = static_cast<long>(top.degree) * ep;
      // levels a + k/D in [u-1, u), highest first
      std::vector<std::pair<long, long>> levels;
      for (long a = 1; Rat(a) < u; ++a)
        for (long k = 0; k < D; ++k) {
          Rat mc = Rat(a) + Rat(k, D);
          if (mc >= u || mc < u - Rat(1) || (k == 0 && a < 2)) continue;
          levels.emplace_back(a, k);
        }
      std::sort(levels.begin(), levels.end(), [&](const auto& x, const auto& y) {
        return Rat(x.first) + Rat(x.second, D) < Rat(y.first) + Rat(y.second, D);
      });
      bool any = false;
      for (const auto& [a, k] : levels) {
        Rat mc = Rat(a) + Rat(k, D);
        if (mc.den_si() <= opt.grid_den) any = build(ep, mc, a, k) || any;
      }
      // every coarse level inseparable: fall back to the finest separable one
      for (auto it = levels.rbegin(); !any && it != levels.rend(); ++it)
        any = build(ep, Rat(it->first) + Rat(it->second, D), it->first, it->second);
    }
  }

  if (static_cast<int>(out.size()) > opt.cap) out.resize(opt.cap);
  for (auto& tf : out) {
    RootSearchStats stats;
    tf.embeds = !find_roots(poly_embed(tf.E, gd.ext.minpoly), tf.E, &stats).empty();
    tf.root_search_nodes = stats.nodes;
  }
  return out;
}

MaxVp max_vp_smart(const GaloisData& gd, const Breaks& br, const FieldPtr& E) {
  MaxVp res;
  if (br.trivial) {
    res.embeds = true;
    return res;
  }
  DigitSpace ds(gd, E);
  const int e = E->e();
  bool have = false;
  std::vector<std::uint64_t> digits;
  std::function<bool(const TowerElem&, long)> rec = [&](const TowerElem& c, long k) -> bool {
    ++res.nodes;
    ValResult v = ds.vp(c);
    if (v.lt(br.f.eval(level_of(k, e)))) {
      if (!have || v.value > res.value.value) {
        have = true;
        res.value = v;
        res.witness = c;
        res.digits = digits;
      }
      return false;
    }
    // some root lies within k/e of c; beyond i_max Krasner puts L inside E
    if (level_of(k, e) > gd.i_max) return true;
    for (std::size_t r = 0; r < ds.reps.size(); ++r) {
      digits.push_back(r);
      bool hit = rec(ds.child(c, static_cast<std::size_t>(k), r), k + 1);
      digits.pop_back();
      if (hit) return true;
    }
    return false;
  };
  res.embeds = rec(TowerField::zero(E), 0);
  return res;
}

MaxVp max_vp_brute(const GaloisData& gd, const Breaks& br, const FieldPtr& E, std::uint64_t limit) {
  MaxVp res;
  if (br.trivial) {
    res.embeds = true;
    return res;
  }
  DigitSpace ds(gd, E);
  const int e = E->e();
  const long D = (gd.i_max * Rat(e)).floor_si() + 1;
  mpz_class size = ipow(ds.reps.size(), D);
  if (size > limit) throw EnumerationTooLarge("brute maximum over too many classes", size.get_d());
  const Rat thr = br.f.eval(level_of(D, e));
  const std::size_t q = ds.reps.size();
  std::vector<std::uint64_t> d(D, 0);
  bool have = false;
  for (std::uint64_t n = 0; n < size.get_ui(); ++n) {
    std::uint64_t t = n;
    TowerElem c = TowerField::zero(E);
    for (long j = 0; j < D; ++j) {
      d[j] = t % q;
      t /= q;
      c = ds.child(c, static_cast<std::size_t>(j), d[j]);
    }
    ++res.nodes;
    ValResult v = ds.vp(c);
    if (!v.lt(thr)) {
      res.embeds = true;
      return res;
    }
    if (!have || v.value > res.value.value) {
      have = true;
      res.value = v;
      res.witness = c;
      res.digits = d;
    }
  }
  // trailing zero digits carry no information
  while (!res.digits.empty() && res.digits.back() == 0) res.digits.pop_back();
  return res;
}

WitnessSet hom_witnesses(const GaloisData& gd, const Breaks& br, const FieldPtr& E, const Rat& m, std::size_t cap,
                         EnumMode mode) {
  WitnessSet ws;
  DigitSpace ds(gd, E);
  const int e = E->e();
  const long cut = cut_index(m, e);
  const std::size_t q = ds.reps.size();
  ws.scanned = ipow(q, cut);
  auto record = [&](const TowerElem& c, const std::vector<std::uint64_t>& d) {
    if (ws.beta.size() < cap) {
      ws.beta.push_back(c.capped(m));
      ws.digits.push_back(d);
    }
  };
  if (mode == EnumMode::Brute) {
    if (ws.scanned > 10000000) throw EnumerationTooLarge("hom enumeration too large", ws.scanned.get_d());
    std::vector<std::uint64_t> d(cut, 0);
    for (std::uint64_t n = 0; n < ws.scanned.get_ui(); ++n) {
      std::uint64_t t = n;
      TowerElem c = TowerField::zero(E);
      for (long j = 0; j < cut; ++j) {
        d[j] = t % q;
        t /= q;
        c = ds.child(c, static_cast<std::size_t>(j), d[j]);
      }
      if (ds.vp(c).ge(m)) {
        ++ws.count;
        record(c, d);
      }
    }
    return ws;
  }
  std::vector<std::uint64_t> digits;
  std::function<void(const TowerElem&, long)> rec = [&](const TowerElem& c, long k) {
    ValResult v = ds.vp(c);
    if (k == cut) {
      if (v.ge(m)) {
        ++ws.count;
        record(c, digits);
      }
      return;
    }
    if (!br.trivial && v.lt(br.f.eval(level_of(k, e)))) {
      // v(P) is constant on the class
      if (v.ge(m)) {
        ws.count += ipow(q, cut - k);
        std::vector<std::uint64_t> d = digits;
        d.resize(cut, 0);
        record(c, d);
      }
      return;
    }
    for (std::size_t r = 0; r < q; ++r) {
      digits.push_back(r);
      rec(ds.child(c, static_cast<std::size_t>(k), r), k + 1);
      digits.pop_back();
    }
  };
  rec(TowerField::zero(E), 0);
  return ws;
}

std::string PmVerdict::str() const {
  switch (kind) {
    case VerdictKind::TrueByBound:
      return "true-by-bound";
    case VerdictKind::Counterexample:
      return "counterexample";
    default:
      return embedding ? "true-by-embedding" : "true-by-exhaustion";
  }
}

PmVerdict pm_verdict(const GaloisData& gd, const Breaks& br, const TestField& tf, const Rat& m, bool allow_bound) {
  PmVerdict v;
  if (br.trivial || tf.embeds) {
    v.embedding = true;
    return v;
  }
  if (allow_bound && m > br.u_max.value) {
    v.kind = VerdictKind::TrueByBound;
    return v;
  }
  WitnessSet ws = hom_witnesses(gd, br, tf.E, m, 1, EnumMode::Smart);
  v.scanned = ws.scanned;
  if (ws.count == 0) return v;
  v.kind = VerdictKind::Counterexample;
  v.witness = ws.beta[0];
  v.witness_digits = digit_str(ws.digits[0]);
  v.vp = poly_eval(poly_embed(tf.E, gd.ext.minpoly), ws.beta[0]).valuation();
  v.proof_nodes = tf.root_search_nodes;
  if (!v.vp.ge(m)) throw IdentityFailure("witness fails v(P(beta)) >= m");
  return v;
}

std::vector<Rat> m_grid(const Rat& hi, int den) {
  std::set<Rat> s;
  for (long b = 1; b <= den; ++b)
    for (long a = 1; Rat(a, b) <= hi; ++a) s.insert(Rat(a, b));
  return {s.begin(), s.end()};
}

WindowCheck pm_window_check(const GaloisData& gd, const Breaks& br, const ExtRat& lower, bool tame,
                                  int e_window) {
  WindowCheck w;
  if (br.trivial || lower.neg_inf) {
    w.vacuous = true;
    return w;
  }
  (void)tame;
  w.e_window = e_window;
  w.hi = br.u_max.value;
  w.lo = w.hi - Rat(1, e_window);
  w.in_window = w.lo <= lower.value && lower.value <= w.hi;
  w.crude_bound = Rat(gd.degree()) * br.i_max.value;
  w.crude_ok = lower.value <= w.crude_bound;
  return w;
}

PmScan pm_scan(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice, const CatalogOptions& opt) {
  PmScan scan;
  if (br.trivial) {
    scan.lower_bound = ExtRat::minus_infinity();
    scan.window.vacuous = true;
    return scan;
  }
  const FieldPtr& L = gd.ext.L;
  const unsigned p = L->ring().p();
  scan.tame = L->e() % static_cast<int>(p) != 0;
  const Rat u = br.u_max.value;
  auto catalog = test_catalog(gd, br, lattice, opt);
  std::vector<Rat> grid = m_grid(std::max(u, Rat(1)) + Rat(1), opt.grid_den);
  for (const auto& tf : catalog)
    if (tf.kind == "perturb") grid.push_back(tf.level);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  int e_window = scan.tame ? L->e() : 1;
  for (const auto& tf : catalog) {
    FieldScan fs;
    fs.label = tf.label;
    fs.kind = tf.kind;
    fs.twist = tf.twist;
    fs.embeds = tf.embeds;
    if (!scan.tame && (tf.kind == "tame" || tf.kind == "perturb")) e_window = std::max(e_window, tf.twist);
    if (!tf.embeds) {
      MaxVp mv = max_vp_smart(gd, br, tf.E);
      if (mv.embeds) throw IdentityFailure("disc search found a root that root finding missed in " + tf.label);
      fs.max_vp = mv.value;
      fs.witness_digits = digit_str(mv.digits);
      fs.nodes = mv.nodes;
      if (!mv.value.exact || mv.value.value > u) scan.sound = false;
      const long D = (gd.i_max * Rat(tf.E->e())).floor_si() + 1;
      if (ipow(tf.E->residue_size(), D) <= opt.brute_limit) {
        MaxVp mb = max_vp_brute(gd, br, tf.E, opt.brute_limit);
        ++fs.brute_checks;
        if (mb.embeds || !(mb.value == mv.value)) scan.smart_brute_agree = false;
      }
    }
    scan.fields.push_back(fs);
  }

  for (const auto& m : grid) {
    ScanRow row;
    row.m = m;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto& fs = scan.fields[i];
      if (fs.embeds || !fs.max_vp.ge(m)) continue;
      if (row.counterexamples++ == 0) {
        row.first_field = fs.label;
        row.witness = fs.witness_digits;
      }
      if (fs.kind == "perturb" && m < u && (m > scan.best_perturb || (m == scan.best_perturb && fs.twist > scan.best_perturb_twist))) {
        scan.best_perturb = m;
        scan.best_perturb_twist = fs.twist;
      }
    }
    // witness enumeration must agree with the maxima, and with brute force on small instances
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto& fs = scan.fields[i];
      if (fs.embeds) continue;
      const auto& E = catalog[i].E;
      mpz_class size = ipow(E->residue_size(), cut_index(m, E->e()));
      if (size > 4096) continue;
      WitnessSet smart = hom_witnesses(gd, br, E, m, 1, EnumMode::Smart);
      WitnessSet brute = hom_witnesses(gd, br, E, m, 1, EnumMode::Brute);
      ++scan.brute_checks;
      if (smart.count != brute.count || (smart.count > 0) != fs.max_vp.ge(m)) scan.smart_brute_agree = false;
    }
    if (m == u && row.counterexamples > 0) scan.counterexample_at_u = true;
    scan.rows.push_back(row);
  }
  for (const auto& fs : scan.fields) scan.brute_checks += fs.brute_checks;

  Rat lb(0);
  for (const auto& row : scan.rows)
    if (row.counterexamples > 0 && (row.m < u || (scan.tame && row.m == u))) lb = std::max(lb, row.m);
  scan.lower_bound = ExtRat::of(lb);
  scan.window = pm_window_check(gd, br, scan.lower_bound, scan.tame, e_window);
  return scan;
}

}  // namespace ramify

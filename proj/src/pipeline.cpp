#include "ramify/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(double& slot) : slot_(slot), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    slot_ += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  double& slot_;
  std::chrono::steady_clock::time_point t0_;
};

std::uint64_t seed_of(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

TowerElem random_element(const FieldPtr& F, std::mt19937_64& rng, int digits) {
  auto reps = TowerField::residue_reps(F);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  TowerElem x = TowerField::zero(F);
  TowerElem pk = TowerField::one(F);
  const TowerElem pi = TowerField::uniformizer(F);
  for (int j = 0; j < digits; ++j) {
    x += reps[pick(rng)] * pk;
    pk *= pi;
  }
  return x;
}

void check(Analysis& a, const std::string& name, bool ok) {
  a.checks[name] = ok;
  if (!ok) a.failures.push_back(name);
}

void run_disc_scan(Analysis& a) {
  const GaloisData& gd = *a.gd;
  const Rat hi = std::max(a.br.u_max.value, Rat(2)) + Rat(2);
  bool agree = true, monotone = true, seen = false;
  for (const auto& m : m_grid(hi, 4)) {
    DiscCover dc = disc_cover(gd.pairwise, a.br, m);
    QSample qs = sampled_q(gd, a.br, m);
    DiscRow row{m, dc.radius, dc.components, dc.separates, qs.holds, qs.samples, qs.membership_ok};
    if (row.qpp != row.q || !row.membership) agree = false;
    if (seen && !row.qpp) monotone = false;
    seen = seen || row.qpp;
    a.disc.push_back(row);
  }
  check(a, "q_equivalence", agree);
  check(a, "qpp_monotone", monotone);
}

void run_identity(Analysis& a, int need) {
  const GaloisData& gd = *a.gd;
  const FieldPtr& K = gd.ext.K;
  const FieldPtr& L = gd.ext.L;
  std::mt19937_64 rng(seed_of(a.spec.name));
  const int depth_k = (a.br.i_max.value * Rat(K->e())).ceil_si() + 3;
  const int depth_l = (a.br.i_max.value * Rat(L->e())).ceil_si() + 3;
  // beta landing on a root is uncertifiable at any precision; redraw
  const int budget = 4 * need;
  auto tally = [&](IdentityStats& st, const TowerElem& beta) {
    ++st.samples;
    IdentityCheck ic = distance_identity_check(gd, a.br, beta);
    if (!ic.certified) return;
    ++st.certified;
    if (ic.holds) ++st.holds;
  };
  while (a.identity_base.certified < need && a.identity_base.samples < budget)
    tally(a.identity_base, random_element(K, rng, depth_k));
  // points of L at prescribed distance from a root
  std::uniform_int_distribution<int> root(0, gd.degree() - 1), depth(0, depth_l);
  const TowerElem pi = TowerField::uniformizer(L);
  for (int s = 0; a.identity_ext.certified < need && s < budget; ++s) {
    if (s % 4 == 0) {
      tally(a.identity_ext, random_element(L, rng, depth_l));
      continue;
    }
    TowerElem unit = random_element(L, rng, 3);
    if (!unit.is_unit()) unit += TowerField::one(L);
    if (!unit.is_unit()) unit = TowerField::one(L);
    tally(a.identity_ext, gd.roots[root(rng)] + pi.pow(depth(rng)) * unit);
  }
  check(a, "distance_identity", a.identity_base.pass(need) && a.identity_ext.pass(need));
}

void run_break_checks(Analysis& a) {
  const GaloisData& gd = *a.gd;
  const Breaks& br = a.br;
  check(a, "profile_routes_agree", a.profile_np == a.profile_roots);
  Rat sum(0);
  for (const auto& r : a.profile_np) sum += r;
  a.v_derivative = poly_eval(poly_derivative(gd.ext.minpoly), gd.ext.alpha).valuation();
  check(a, "different_identity", a.v_derivative.exact && a.v_derivative.value == sum);
  check(a, "u_is_f_of_i", br.u_max.value == br.f.eval(br.i_max.value) &&
                              br.p_inv.eval(br.u_max.value) == br.i_max.value && br.f.eval(Rat(0)) == Rat(0));
  // slope of f drops at each break by the multiplicity of the break
  bool drops = true;
  auto slopes = br.f.slopes();
  auto knots = br.f.knots();
  for (std::size_t k = 0; k < knots.size(); ++k) {
    long mult = std::count(br.lower.begin(), br.lower.end(), knots[k].x);
    if (slopes[k] - slopes[k + 1] != Rat(mult)) drops = false;
  }
  check(a, "slope_drops", drops);
  check(a, "conductor_is_u", a.conductor == br.u_max);

  bool kr = true;
  const TowerElem pi = TowerField::uniformizer(gd.ext.L);
  const int beyond = (br.i_max.value * Rat(gd.ext.L->e())).floor_si() + 1;
  for (int r = 0; r < gd.degree(); ++r)
    if (krasner_check(gd, gd.roots[r] + pi.pow(beyond)) != r) kr = false;
  check(a, "krasner", kr);

  // just above 1 the upper filtration is the wild inertia group
  const Mask I = gd.inertia();
  int wild = 1;
  const int p = static_cast<int>(gd.ext.L->ring().p());
  for (int n = popcount(I); n % p == 0; n /= p) wild *= p;
  Rat next = Rat(2);
  for (const auto& u : br.upper)
    if (u > Rat(1) && u < next) next = u;
  check(a, "wild_inertia", popcount(upper_group(gd, br, (Rat(1) + next) / Rat(2))) == wild);
}

Analysis analyze_at(const ExtensionSpec& spec, const AnalyzeOptions& opt, int N) {
  Analysis a;
  a.spec = spec;
  a.precision = N;
  Extension ext;
  {
    Stopwatch sw(a.timing_ms["build"]);
    ext = build_extension(spec, N);
  }
  try {
    Stopwatch sw(a.timing_ms["galois"]);
    a.gd = galois_data(ext);
  } catch (const NotGalois& e) {
    a.galois = false;
    a.roots_found = e.roots_found;
    return a;
  }
  a.galois = true;
  const GaloisData& gd = *a.gd;
  a.roots_found = gd.degree();
  {
    Stopwatch sw(a.timing_ms["ramification"]);
    a.profile_np = conjugate_profile(ext);
    a.profile_roots = root_profile(gd);
    a.br = breaks(a.profile_np);
    a.conductor = conductor(gd.pairwise, a.br);
    if (!a.br.trivial) {
      run_break_checks(a);
      run_disc_scan(a);
    }
  }
  if (!a.br.trivial) {
    Stopwatch sw(a.timing_ms["identity"]);
    run_identity(a, opt.identity_samples);
  }
  {
    Stopwatch sw(a.timing_ms["lattice"]);
    a.lattice = subextension_lattice(gd);
  }
  if (opt.filtration) {
    Stopwatch sw(a.timing_ms["filtration"]);
    a.compat = quotient_compatibility_check(gd, a.br, a.lattice);
    a.member_u = member_u(*a.compat, a.lattice);
    a.table = fixed_field_table(gd, a.br, a.lattice, a.member_u, opt.table_grid);
    a.props = filtration_props(gd, a.br, a.lattice, a.member_u);
    check(a, "quotient_compatibility", a.compat->pass());
    check(a, "fixed_field_table", a.table->pass());
    check(a, "filtration_props", a.props->pass());
  }
  if (opt.oracle && !a.br.trivial) {
    Stopwatch sw(a.timing_ms["oracle"]);
    a.pm = pm_scan(gd, a.br, a.lattice, opt.catalog);
    check(a, "pm_sound", a.pm->sound);
    check(a, "pm_smart_brute", a.pm->smart_brute_agree);
    check(a, "pm_window", a.pm->window.pass());
  }
  return a;
}

}  // namespace

Analysis analyze(const ExtensionSpec& spec, const AnalyzeOptions& opt) {
  for (int N = opt.precision;; N *= 2) {
    try {
      return analyze_at(spec, opt, N);
    } catch (const InsufficientPrecision&) {
      if (N * 2 > opt.max_precision) throw;
    }
  }
}

}  // namespace ramify

#include "ramify/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

FieldPtr ground_of(FieldPtr F) {
  while (F->base()) F = F->base();
  return F;
}

TowerElem residue_generator(const FieldPtr& L) {
  TowerElem w = TowerField::zero(L);
  for (FieldPtr F = L; F->base(); F = F->base())
    if (F->step().kind == StepSpec::Kind::Unramified) w = w + TowerField::embed(L, TowerField::generator(F));
  return w;
}

Poly minpoly_from_basis(const FieldPtr& K, const PowerBasis& B, const TowerElem& gen, int deg) {
  bool in_span = false;
  auto c = B.coefficients(gen.pow(deg), &in_span);
  if (!in_span) throw DomainError("generator power outside the span of lower powers");
  Poly P;
  for (int j = 0; j < deg; ++j) P.push_back(-TowerField::from_ground(K, c[j]));
  P.push_back(TowerField::one(K));
  return P;
}

}  // namespace

// ---------------------------------------------------------------------------

GMatrix PowerBasis::matrix(const std::vector<TowerElem>& powers) {
  if (powers.empty()) return {};
  const int rows = powers[0].field()->degree();
  GMatrix A(rows, std::vector<GroundElem>(powers.size()));
  for (std::size_t j = 0; j < powers.size(); ++j)
    for (int k = 0; k < rows; ++k) A[k][j] = powers[j].coords()[k];
  return A;
}

static std::vector<TowerElem> power_list(const FieldPtr& L, const TowerElem& gen, int count) {
  std::vector<TowerElem> pw{TowerField::one(L)};
  for (int j = 1; j < count; ++j) pw.push_back(pw.back() * gen);
  return pw;
}

PowerBasis::PowerBasis(const FieldPtr& L, const TowerElem& gen, int count)
    : L_(L), powers_(power_list(L, TowerField::embed(L, gen), count)), solver_(L->ring(), matrix(powers_)) {}

std::vector<GroundElem> PowerBasis::coefficients(const TowerElem& y, bool* in_span) const {
  int residual = 0;
  auto c = solver_.solve(TowerField::embed(L_, y).coords(), &residual);
  // digits beyond the element's own precision are noise
  if (in_span) *in_span = residual >= std::min<long>(L_->precision(), y.prec().floor_si() - 1);
  return c;
}

TowerElem PowerBasis::evaluate(const std::vector<GroundElem>& g, const std::vector<TowerElem>& powers) const {
  TowerElem r = TowerField::zero(powers[0].field());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (L_->ring().is_zero(g[k])) continue;
    r = r + powers[k] * TowerField::from_ground(powers[0].field(), g[k]);
  }
  return r;
}

// ---------------------------------------------------------------------------

Extension build_extension(const ExtensionSpec& spec, int precision) {
  Extension ext;
  ext.spec = spec;
  ext.L = TowerField::build(spec.ground, precision, spec.steps);
  ext.K = ground_of(ext.L);
  const FieldPtr& L = ext.L;
  const int d = L->degree();
  if (d == 1) {
    ext.alpha = TowerField::zero(L);
    ext.minpoly = poly_from_ints(ext.K, {0, 1});
    ext.generator_kind = "trivial";
    return ext;
  }
  std::vector<std::pair<std::string, TowerElem>> cands;
  if (!spec.generator.empty()) {
    cands.emplace_back("designated", TowerField::from_coords(L, spec.generator));
  } else {
    TowerElem pi = TowerField::uniformizer(L);
    TowerElem one = TowerField::one(L);
    if (L->f() == 1) {
      cands.emplace_back("uniformizer", pi);
    } else {
      TowerElem w = residue_generator(L);
      if (L->e() == 1) {
        cands.emplace_back("residue", w);
        cands.emplace_back("residue+1", w + one);
      } else {
        cands.emplace_back("uniformizer+residue", pi + w);
        cands.emplace_back("uniformizer+residue+1", pi + w + one);
        cands.emplace_back("uniformizer*residue+residue", pi * w + w);
        for (int k = 2; k < 8; ++k) cands.emplace_back("residue+uniformizer^k", w + pi.pow(k));
        for (int k = 1; k < 7; ++k) cands.emplace_back("residue^k+uniformizer", w.pow(k + 1) + pi + TowerField::from_int(L, k));
      }
    }
  }
  long worst = 0;
  for (const auto& [kind, gen] : cands) {
    PowerBasis B(L, gen, d);
    if (!B.saturated()) {
      GMatrix A(d, std::vector<GroundElem>(d));
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) A[k][j] = B.powers()[j].coords()[k];
      worst = index_valuation(L->ring(), A);
      continue;
    }
    ext.alpha = gen;
    ext.generator_kind = kind;
    ext.minpoly = minpoly_from_basis(ext.K, B, gen, d);
    return ext;
  }
  throw GeneratorFailure("no candidate generates the ring of integers; v_K(index) = " + std::to_string(worst), worst);
}

// ---------------------------------------------------------------------------

std::vector<TowerElem> find_roots(const Poly& P0, const FieldPtr& F, RootSearchStats* stats) {
  Poly P = poly_embed(F, P0);
  const int d = poly_degree(P);
  const int e = F->e();
  const int N = F->precision();
  const Rat NR(N);
  auto reps = TowerField::residue_reps(F);
  std::vector<TowerElem> pipow{TowerField::one(F)};
  TowerElem pi = TowerField::uniformizer(F);
  auto pi_pow = [&](int j) -> const TowerElem& {
    while (static_cast<int>(pipow.size()) <= j) pipow.push_back(pipow.back() * pi);
    return pipow[j];
  };
  struct Node {
    TowerElem b;
    int depth;
    std::vector<std::uint32_t> digits;
  };
  std::vector<std::pair<std::vector<std::uint32_t>, TowerElem>> found;
  std::vector<Node> stack{{TowerField::zero(F), 0, {}}};
  std::uint64_t nodes = 0;

  auto refine = [&](Node nd, const Rat& S) {
    for (;;) {
      Rat level = S + Rat(nd.depth, e);
      if (level >= NR - Rat(1)) break;
      int hit = -1;
      TowerElem hit_c;
      for (std::size_t r = 0; r < reps.size(); ++r) {
        TowerElem c = nd.b + reps[r] * pi_pow(nd.depth);
        ++nodes;
        ValResult vp = poly_eval(P, c).valuation();
        if (vp.exact && vp.value == level) continue;
        if (vp.exact && vp.value < level) throw Error("root refinement left the certified class");
        if (!vp.exact && vp.value <= level) throw InsufficientPrecision("root refinement is ambiguous", 2L * N);
        if (hit >= 0) throw InsufficientPrecision("root refinement is ambiguous", 2L * N);
        hit = static_cast<int>(r);
        hit_c = c;
      }
      if (hit < 0) throw Error("root refinement lost the root");
      nd.b = hit_c;
      nd.digits.push_back(static_cast<std::uint32_t>(hit));
      ++nd.depth;
    }
    found.emplace_back(nd.digits, nd.b.capped(Rat(nd.depth, e)));
  };

  while (!stack.empty()) {
    Node nd = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    if (nd.depth > N * e) throw InsufficientPrecision("root search exceeded the working precision", 2L * N);
    Poly Q = taylor_shift(P, nd.b);
    std::vector<ValResult> vals;
    for (const auto& c : Q) vals.push_back(c.valuation());
    const bool c0_inf = !vals[0].exact;
    if (c0_inf) vals[0] = ValResult::AtLeast(NR + Rat(1));
    NewtonPolygon np = newton_polygon(vals, NR);
    std::vector<Rat> rv = np.root_valuations();
    const Rat thr(nd.depth, e);
    bool unique;
    Rat w2, S(0);
    if (c0_inf) {
      if (!vals[1].exact) throw InsufficientPrecision("approximate root with uncertified derivative", 2L * N);
      Rat w1_lb = Q[0].valuation().value - vals[1].value;
      if (!rv.empty() && !(w1_lb > rv[0])) throw InsufficientPrecision("approximate root is not isolated", 2L * N);
      unique = true;
      w2 = rv.empty() ? Rat(-1) : rv[0];
      for (const auto& r : rv) S += r;
    } else {
      if (rv.empty() || rv[0] < thr) continue;  // no root in this class
      unique = rv.size() == 1 || rv[0] > rv[1];
      w2 = rv.size() > 1 ? rv[1] : Rat(-1);
      for (std::size_t k = 1; k < rv.size(); ++k) S += rv[k];
    }
    if (unique && thr > w2) {
      refine(nd, S);
      continue;
    }
    for (std::size_t r = reps.size(); r-- > 0;) {
      Node ch{nd.b + reps[r] * pi_pow(nd.depth), nd.depth + 1, nd.digits};
      ch.digits.push_back(static_cast<std::uint32_t>(r));
      stack.push_back(std::move(ch));
    }
  }
  if (stats) stats->nodes += nodes;
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TowerElem> out;
  for (auto& f : found) out.push_back(f.second);
  if (static_cast<int>(out.size()) > d) throw Error("more roots than the degree");
  return out;
}

std::vector<Rat> conjugate_profile(const Extension& ext) {
  if (ext.degree() == 1) return {};
  Poly Q = taylor_shift(ext.minpoly, ext.alpha);
  if (Q[0].valuation().exact) throw IdentityFailure("generator is not a root of its minimal polynomial");
  NewtonPolygon np = newton_polygon(Q, Rat(ext.L->precision()));
  if (np.zero_roots != 1) throw InsufficientPrecision("profile polygon is not certified", 2L * ext.L->precision());
  auto rv = np.root_valuations();
  std::sort(rv.begin(), rv.end());
  return rv;
}

// ---------------------------------------------------------------------------

int popcount(Mask m) { return __builtin_popcount(m); }

int GaloisGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  throw Error("element without inverse");
}

Mask GaloisGroup::closure(Mask m) const {
  m |= Mask(1) << identity;
  for (;;) {
    Mask next = m;
    for (int a = 0; a < order; ++a) {
      if (!(m >> a & 1)) continue;
      for (int b = 0; b < order; ++b)
        if (m >> b & 1) next |= Mask(1) << table[a][b];
    }
    if (next == m) return m;
    m = next;
  }
}

bool GaloisGroup::is_normal(Mask h) const {
  for (int g = 0; g < order; ++g) {
    int gi = inverse(g);
    for (int x = 0; x < order; ++x)
      if ((h >> x & 1) && !(h >> table[table[g][x]][gi] & 1)) return false;
  }
  return true;
}

std::vector<Mask> GaloisGroup::subgroups() const {
  std::set<Mask> seen{closure(0)};
  std::vector<Mask> queue{closure(0)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Mask h = queue[i];
    for (int g = 0; g < order; ++g) {
      if (h >> g & 1) continue;
      Mask k = closure(h | Mask(1) << g);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  return out;
}

TowerElem GaloisData::apply(int a, const TowerElem& y) const {
  auto g = basis->coefficients(y);
  return basis->evaluate(g, root_powers[a]).capped(y.prec());
}

TowerElem GaloisData::norm(Mask h, const TowerElem& y) const {
  TowerElem r = TowerField::one(ext.L);
  for (int a = 0; a < group.order; ++a)
    if (h >> a & 1) r = r * apply(a, y);
  return r;
}

TowerElem GaloisData::trace(Mask h, const TowerElem& y) const {
  TowerElem r = TowerField::zero(ext.L);
  for (int a = 0; a < group.order; ++a)
    if (h >> a & 1) r = r + apply(a, y);
  return r;
}

int GaloisData::match_root(const TowerElem& x) const {
  int hit = -1;
  for (int a = 0; a < static_cast<int>(roots.size()); ++a) {
    ValResult v = (x - roots[a]).valuation();
    if (v.value > i_max) {
      if (hit >= 0) throw Error("two roots closer than their separation");
      hit = a;
    }
  }
  return hit;
}

Mask GaloisData::inertia() const {
  Mask m = Mask(1) << group.identity;
  for (int a = 0; a < group.order; ++a)
    if (a != group.identity && order_fn[a].sign() > 0) m |= Mask(1) << a;
  return m;
}

GaloisData galois_data(const Extension& ext) {
  GaloisData gd;
  gd.ext = ext;
  const int d = ext.degree();
  const FieldPtr& L = ext.L;
  if (d > 24) throw DomainError("extensions of degree above 24 are out of range");
  gd.basis = std::make_shared<PowerBasis>(L, ext.alpha, d);
  if (d == 1) {
    gd.roots = {ext.alpha};
    gd.group.order = 1;
    gd.group.identity = 0;
    gd.group.table = {{0}};
    gd.pairwise = {{Rat(0)}};
    gd.order_fn = {Rat(0)};
    gd.i_max = Rat(-1);
    gd.root_powers = {{TowerField::one(L)}};
    return gd;
  }
  gd.roots = find_roots(ext.minpoly, L);
  if (static_cast<int>(gd.roots.size()) < d)
    throw NotGalois("minimal polynomial has " + std::to_string(gd.roots.size()) + " of " + std::to_string(d) +
                        " roots in L",
                    static_cast<int>(gd.roots.size()), d);
  gd.pairwise.assign(d, std::vector<Rat>(d, Rat(0)));
  gd.i_max = Rat(-1);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      ValResult v = (gd.roots[a] - gd.roots[b]).valuation();
      if (!v.exact) throw InsufficientPrecision("root separation not certified", 2L * L->precision());
      gd.pairwise[a][b] = v.value;
      gd.i_max = std::max(gd.i_max, v.value);
    }
  int id = gd.match_root(ext.alpha);
  if (id < 0) throw IdentityFailure("generator not found among the roots");
  gd.group.order = d;
  gd.group.identity = id;
  gd.order_fn.assign(d, Rat(0));
  for (int a = 0; a < d; ++a)
    if (a != id) gd.order_fn[a] = gd.pairwise[a][id];
  gd.root_powers.resize(d);
  for (int a = 0; a < d; ++a) {
    gd.root_powers[a] = {TowerField::one(L)};
    for (int k = 1; k < d; ++k) gd.root_powers[a].push_back(gd.root_powers[a].back() * gd.roots[a]);
  }
  std::vector<std::vector<GroundElem>> g(d);
  for (int b = 0; b < d; ++b) g[b] = gd.basis->coefficients(gd.roots[b]);
  gd.group.table.assign(d, std::vector<int>(d, -1));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      TowerElem img = gd.basis->evaluate(g[b], gd.root_powers[a]).capped(gd.roots[b].prec());
      int k = gd.match_root(img);
      if (k < 0) throw InsufficientPrecision("conjugate image not matched to a root", 2L * L->precision());
      gd.group.table[a][b] = k;
    }
  // group axioms
  for (int a = 0; a < d; ++a) {
    std::vector<bool> row(d, false), col(d, false);
    for (int b = 0; b < d; ++b) {
      row[gd.group.table[a][b]] = true;
      col[gd.group.table[b][a]] = true;
    }
    for (int b = 0; b < d; ++b)
      if (!row[b] || !col[b]) throw IdentityFailure("composition table is not a Latin square");
    if (gd.group.table[a][id] != a || gd.group.table[id][a] != a) throw IdentityFailure("identity misplaced");
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (gd.group.table[gd.group.table[a][b]][c] != gd.group.table[a][gd.group.table[b][c]])
          throw IdentityFailure("composition is not associative");
  return gd;
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  TowerElem y;
  Rat v;
};

bool invariant_under(const GaloisData& gd, Mask h, const TowerElem& y) {
  for (int a = 0; a < gd.group.order; ++a) {
    if (!(h >> a & 1)) continue;
    if (!(gd.apply(a, y) - y).valuation().ge(Rat(gd.ext.L->precision() / 2))) return false;
  }
  return true;
}

TowerElem unramified_generator(const GaloisData& gd, Mask hi, int f_m) {
  const FieldPtr& L = gd.ext.L;
  auto reps = TowerField::residue_reps(L);
  TowerElem pi = TowerField::uniformizer(L);
  for (int j = 0; j < L->e(); ++j) {
    TowerElem pj = pi.pow(j);
    for (std::size_t r = 1; r < reps.size(); ++r) {
      for (int kind = 0; kind < 2; ++kind) {
        TowerElem y = kind == 0 ? gd.trace(hi, reps[r] * pj) : gd.norm(hi, reps[r] + pj);
        ValResult v = y.valuation();
        if (!v.exact || !v.value.is_integer()) continue;
        if (v.value.sign() > 0) y = y.div_ground_uniformizer(static_cast<int>(v.value.num_si()));
        if (PowerBasis(L, y, f_m).saturated()) return y;
      }
    }
  }
  throw GeneratorFailure("no generator for the residue field of the fixed field", 0);
}

TowerElem ramified_generator(const GaloisData& gd, Mask h, int e_m) {
  const FieldPtr& L = gd.ext.L;
  auto reps = TowerField::residue_reps(L);
  TowerElem pi = TowerField::uniformizer(L);
  std::vector<Candidate> cands;
  auto consider = [&](const TowerElem& y) {
    ValResult v = y.valuation();
    if (!v.exact) return;
    Rat scaled = v.value * Rat(e_m);
    if (!scaled.is_integer()) return;
    cands.push_back({y, v.value});
  };
  consider(gd.norm(h, pi));
  for (int k = 1; k <= L->e() && cands.size() < 64; ++k) {
    TowerElem pk = pi.pow(k);
    for (const auto& r : reps) consider(gd.trace(h, r * pk));
    consider(gd.norm(h, pk + TowerField::one(L)) - TowerField::one(L));
  }
  auto finish = [&](const TowerElem& y, long a) {
    // y has valuation a/e_m with gcd(a, e_m) = 1: pi_M = y^s / p^t
    for (long s = 1; s <= e_m; ++s)
      if ((s * a) % e_m == 1 % e_m) {
        long t = (s * a - 1) / e_m;
        return y.pow(static_cast<std::uint64_t>(s)).div_ground_uniformizer(static_cast<int>(t));
      }
    throw Error("unreachable");
  };
  for (const auto& c : cands) {
    long a = (c.v * Rat(e_m)).num_si();
    if (std::gcd(a, static_cast<long>(e_m)) == 1) return finish(c.y, a);
  }
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      long a = (cands[i].v * Rat(e_m)).num_si(), b = (cands[j].v * Rat(e_m)).num_si();
      for (long s = 1; s < e_m; ++s) {
        long c = s * a + b;
        if (std::gcd(c, static_cast<long>(e_m)) == 1)
          return finish(cands[i].y.pow(static_cast<std::uint64_t>(s)) * cands[j].y, c);
      }
    }
  throw GeneratorFailure("no uniformizer found for the fixed field", 0);
}

std::string make_label(const Subfield& s) {
  return "deg" + std::to_string(s.degree) + " e" + std::to_string(s.e) + " f" + std::to_string(s.f) + " " +
         poly_str(s.minpoly, 8);
}

}  // namespace

Subfield fixed_field(const GaloisData& gd, Mask h) {
  const FieldPtr& L = gd.ext.L;
  const FieldPtr& K = gd.ext.K;
  const int d = gd.degree();
  Subfield s;
  s.subgroup = h;
  s.order = popcount(h);
  s.degree = d / s.order;
  s.normal = gd.group.is_normal(h);
  Mask I = gd.inertia();
  s.e = L->e() / popcount(h & I);
  s.f = s.degree / s.e;
  if (s.order == d) {
    s.gamma = TowerField::zero(L);
    s.minpoly = poly_from_ints(K, {0, 1});
    s.label = make_label(s);
    return s;
  }
  if (s.order == 1) {
    s.gamma = gd.ext.alpha;
    s.minpoly = gd.ext.minpoly;
    s.tower = gd.ext.spec.steps;
    s.label = make_label(s);
    return s;
  }
  Mask hi = gd.group.closure(h | I);
  TowerElem omega, pim;
  if (s.f > 1) omega = unramified_generator(gd, hi, s.f);
  if (s.e > 1) pim = ramified_generator(gd, h, s.e);
  std::vector<TowerElem> cands;
  if (s.e == 1) {
    cands.push_back(omega);
  } else if (s.f == 1) {
    cands.push_back(pim);
  } else {
    TowerElem one = TowerField::one(L);
    cands = {omega + pim, omega + pim + pim * pim, omega * (one + pim), omega * omega + pim, omega + pim * omega};
  }
  for (const auto& gamma : cands) {
    PowerBasis B(L, gamma, s.degree);
    if (!B.saturated()) continue;
    bool in_span = false;
    B.coefficients(gamma.pow(s.degree), &in_span);
    if (!in_span) continue;
    if (!invariant_under(gd, h, gamma)) throw IdentityFailure("fixed-field generator is not invariant");
    s.gamma = gamma;
    s.minpoly = minpoly_from_basis(K, B, gamma, s.degree);
    const Rat known(std::max(1L, gamma.prec().floor_si() - 1));
    for (auto& c : s.minpoly) c = c.capped(known);
    break;
  }
  if (s.minpoly.empty()) throw GeneratorFailure("no certified generator for a fixed field", 0);

  // standalone tower
  auto exact_coeffs = [&](const Poly& P) {
    std::vector<GroundElem> out;
    for (const auto& c : P) out.push_back(c.coords()[0]);
    return out;
  };
  if (s.e == 1) {
    StepSpec st = StepSpec::unramified(s.degree);
    st.lift = exact_coeffs(s.minpoly);
    s.tower = {st};
  } else if (s.f == 1) {
    auto c = exact_coeffs(s.minpoly);
    c.pop_back();
    std::vector<std::vector<GroundElem>> cc;
    for (auto& x : c) cc.push_back({x});
    s.tower = {StepSpec::eisenstein(cc)};
  } else {
    PowerBasis B(L, omega, s.f);
    StepSpec st = StepSpec::unramified(s.f);
    st.lift = exact_coeffs(minpoly_from_basis(K, B, omega, s.f));
    // relative Eisenstein polynomial: product over the cosets of H inside HI
    Poly E{TowerField::one(L)};
    Mask covered = 0;
    for (int a = 0; a < d; ++a) {
      if (!(hi >> a & 1) || (covered >> a & 1)) continue;
      for (int b = 0; b < d; ++b)
        if (h >> b & 1) covered |= Mask(1) << gd.group.compose(a, b);
      E = poly_mul(E, Poly{-gd.apply(a, pim), TowerField::one(L)});
    }
    std::vector<std::vector<GroundElem>> cc;
    for (int k = 0; k < s.e; ++k) {
      bool in_span = false;
      cc.push_back(B.coefficients(E[k], &in_span));
      if (!in_span) throw IdentityFailure("relative Eisenstein coefficient outside the unramified subfield");
    }
    s.tower = {st, StepSpec::eisenstein(cc)};
  }
  s.label = make_label(s);
  return s;
}

std::vector<Subfield> subextension_lattice(const GaloisData& gd) {
  std::vector<Subfield> out;
  for (Mask h : gd.group.subgroups()) out.push_back(fixed_field(gd, h));
  return out;
}

}  // namespace ramify

#include "ramify/ramification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ramify/errors.hpp"
#include "ramify/finite_field.hpp"

namespace ramify {

PLFunction herbrand(const std::vector<Rat>& profile) {
  std::vector<Rat> pos;
  for (const auto& r : profile)
    if (r.sign() > 0) pos.push_back(r);
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<PLFunction::Point> pts{{Rat(0), Rat(0)}};
  Rat x(0), y(0);
  for (const auto& b : pos) {
    long count = 1 + std::count_if(profile.begin(), profile.end(), [&](const Rat& r) { return r >= b; });
    y += Rat(count) * (b - x);
    x = b;
    pts.push_back({x, y});
  }
  return PLFunction(std::move(pts), Rat(1));
}

Breaks breaks(const std::vector<Rat>& profile) {
  Breaks br;
  br.lower = profile;
  std::sort(br.lower.begin(), br.lower.end());
  br.f = herbrand(br.lower);
  br.p_inv = br.f.inverse();
  if (profile.empty()) return br;
  br.trivial = false;
  br.i_max = ExtRat::of(br.lower.back());
  br.u_max = ExtRat::of(br.f.eval(br.lower.back()));
  for (const auto& r : br.lower) br.upper.push_back(br.f.eval(r));
  return br;
}

std::vector<Rat> root_profile(const GaloisData& gd) {
  std::vector<Rat> out;
  for (int a = 0; a < gd.degree(); ++a)
    if (a != gd.group.identity) out.push_back(gd.order_fn[a]);
  std::sort(out.begin(), out.end());
  return out;
}

DiscCover disc_cover(const std::vector<std::vector<Rat>>& pairwise, const Breaks& br, const Rat& m) {
  if (m.sign() < 0) throw DomainError("disc cover needs m >= 0");
  DiscCover dc;
  dc.radius = br.p_inv.eval(m);
  const int d = static_cast<int>(pairwise.size());
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (pairwise[a][b] >= dc.radius) parent[find(a)] = find(b);
  std::map<int, int> ids;
  dc.component.resize(d);
  for (int a = 0; a < d; ++a) {
    int r = find(a);
    if (!ids.count(r)) ids[r] = static_cast<int>(ids.size());
    dc.component[a] = ids[r];
  }
  dc.components = static_cast<int>(ids.size());
  dc.separates = dc.components == d;
  return dc;
}

namespace {

// Smallest prime not dividing n.
int coprime_degree(int n) {
  for (int q : {2, 3, 5, 7})
    if (n % q != 0) return q;
  return 11;
}

}  // namespace

QSample sampled_q(const GaloisData& gd, const Breaks& br, const Rat& m) {
  QSample qs;
  const int d = gd.degree();
  if (d == 1) return qs;
  const FieldPtr& L = gd.ext.L;
  const Rat r = br.p_inv.eval(m);
  const Rat scaled = r * Rat(L->e());
  FieldPtr A;
  TowerElem y;
  if (scaled.is_integer()) {
    // an unramified direction keeps the sample off every root
    int n = coprime_degree(L->f());
    A = TowerField::extend(L, StepSpec::unramified(n));
    y = TowerField::uniformizer_pow(A, static_cast<int>(scaled.num_si())) * TowerField::generator(A);
  } else {
    long a = scaled.num_si(), b = scaled.den_si();
    std::vector<std::vector<GroundElem>> c(b, Coords(L->degree()));
    c[0] = (-TowerField::uniformizer(L)).coords();
    A = TowerField::extend(L, StepSpec::eisenstein(c));
    y = TowerField::generator(A).pow(static_cast<std::uint64_t>(a));
  }
  Poly P = poly_embed(A, gd.ext.minpoly);
  for (int i = 0; i < d; ++i) {
    TowerElem x = TowerField::embed(A, gd.roots[i]) + y;
    ++qs.samples;
    if (!poly_eval(P, x).valuation().ge(m)) qs.membership_ok = false;
    std::vector<ValResult> dist;
    for (int j = 0; j < d; ++j) dist.push_back((TowerField::embed(A, gd.roots[j]) - x).valuation());
    Rat best(-1);
    for (const auto& v : dist) {
      if (!v.exact) throw InsufficientPrecision("sample distance not certified", 2L * L->precision());
      best = std::max(best, v.value);
    }
    bool ok = false;
    for (int j = 0; j < d; ++j) {
      if (dist[j].value != best) continue;
      Rat sep(-1);
      for (int k = 0; k < d; ++k)
        if (k != j) sep = std::max(sep, gd.pairwise[j][k]);
      if (best > sep) ok = true;
    }
    if (!ok) qs.holds = false;
  }
  return qs;
}

ExtRat conductor(const std::vector<std::vector<Rat>>& pairwise, const Breaks& br) {
  const int d = static_cast<int>(pairwise.size());
  if (d <= 1) return ExtRat::minus_infinity();
  std::vector<Rat> cand{Rat(0)};
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) cand.push_back(br.f.eval(std::max(pairwise[a][b], Rat(0))));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  auto just_above = [&](std::size_t k) {
    Rat gap = k + 1 < cand.size() ? (cand[k + 1] - cand[k]) / Rat(2) : Rat(1);
    return cand[k] + gap;
  };
  // separation is monotone in m; find the first candidate just above which it holds
  std::size_t lo = 0, hi = cand.size() - 1;
  if (!disc_cover(pairwise, br, just_above(hi)).separates) throw IdentityFailure("discs never separate the roots");
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (disc_cover(pairwise, br, just_above(mid)).separates)
      hi = mid;
    else
      lo = mid + 1;
  }
  return ExtRat::of(cand[lo]);
}

IdentityCheck distance_identity_check(const GaloisData& gd, const Breaks& br, const TowerElem& beta) {
  IdentityCheck ic;
  FieldPtr F = common_field(gd.roots[0], beta);
  TowerElem b = TowerField::embed(F, beta);
  ic.lhs = poly_eval(poly_embed(F, gd.ext.minpoly), b).valuation();
  bool exact = true;
  Rat best(-1);
  for (const auto& z : gd.roots) {
    ValResult v = (TowerField::embed(F, z) - b).valuation();
    if (v.value > best) {
      best = v.value;
      exact = v.exact;
    } else if (v.value == best) {
      exact = exact && v.exact;
    }
  }
  ic.nearest = best;
  if (best.sign() < 0) best = Rat(0);
  ic.rhs = br.f.eval(best);
  ic.certified = exact && ic.lhs.exact;
  ic.holds = ic.certified && ic.lhs.value == ic.rhs;
  return ic;
}

int krasner_check(const GaloisData& gd, const TowerElem& x) {
  const int d = gd.degree();
  for (int j = 0; j < d; ++j) {
    Rat sep(-1);
    for (int k = 0; k < d; ++k)
      if (k != j) sep = std::max(sep, gd.pairwise[j][k]);
    FieldPtr F = common_field(gd.roots[j], x);
    if ((TowerField::embed(F, x) - TowerField::embed(F, gd.roots[j])).valuation().value > sep) return j;
  }
  return -1;
}

Rat serre_lower(const Rat& i, int e) { return i * Rat(e) - Rat(1); }
Rat serre_upper(const Rat& u) { return u - Rat(1); }

std::optional<Rat> upper_index(const GaloisData& gd, const Breaks& br, int a) {
  if (a == gd.group.identity) return std::nullopt;
  return br.f.eval(gd.order_fn[a]);
}

Mask upper_group(const GaloisData& gd, const Breaks& br, const Rat& u) {
  Mask m = 0;
  for (int a = 0; a < gd.degree(); ++a) {
    auto ua = upper_index(gd, br, a);
    if (!ua || *ua >= u) m |= Mask(1) << a;
  }
  return m;
}

Mask lower_group(const GaloisData& gd, const Rat& i) {
  Mask m = 0;
  for (int a = 0; a < gd.degree(); ++a)
    if (a == gd.group.identity || gd.order_fn[a] >= i) m |= Mask(1) << a;
  return m;
}

}  // namespace ramify

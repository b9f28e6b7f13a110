#include "ramify/filtration.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

int UpperChain::order_at(const Rat& u) const {
  return 1 + static_cast<int>(std::count_if(indices.begin(), indices.end(), [&](const Rat& x) { return x >= u; }));
}

std::vector<Rat> UpperChain::breaks() const {
  std::vector<Rat> b = indices;
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

ExtRat UpperChain::top() const { return indices.empty() ? ExtRat::minus_infinity() : ExtRat::of(indices.back()); }

std::string UpperChain::str() const {
  std::string s = "order " + std::to_string(order) + ":";
  for (const auto& b : breaks()) s += " " + b.str() + "->" + std::to_string(order_at(b));
  return s;
}

UpperChain upper_chain(const GaloisData& gd, const Breaks& br) {
  UpperChain c;
  c.order = gd.degree();
  for (int a = 0; a < gd.degree(); ++a)
    if (auto u = upper_index(gd, br, a)) c.indices.push_back(*u);
  std::sort(c.indices.begin(), c.indices.end());
  return c;
}

UpperChain induced_quotient_filtration(const GaloisData& gd, const Breaks& br, Mask h) {
  if (!gd.group.is_normal(h)) throw DomainError("quotient by a non-normal subgroup");
  UpperChain c;
  const int d = gd.degree();
  c.order = d / popcount(h);
  Mask seen = h;
  for (int a = 0; a < d; ++a) {
    if (seen >> a & 1) continue;
    // tau lies in the image of G^(u) iff some element of its coset does
    Rat best(-1);
    for (int b = 0; b < d; ++b) {
      if (!(h >> b & 1)) continue;
      int s = gd.group.compose(a, b);
      seen |= Mask(1) << s;
      best = std::max(best, *upper_index(gd, br, s));
    }
    c.indices.push_back(best);
  }
  std::sort(c.indices.begin(), c.indices.end());
  return c;
}

UpperChain direct_chain(const GaloisData& gd, const Subfield& m) {
  UpperChain c;
  c.order = m.degree;
  if (m.degree == 1) return c;
  ExtensionSpec spec;
  spec.name = m.label;
  spec.ground = gd.ext.K->ground_field();
  spec.steps = m.tower;
  Extension ext = build_extension(spec, gd.ext.L->precision());
  GaloisData md = galois_data(ext);
  Breaks mb = breaks(conjugate_profile(ext));
  if (root_profile(md) != mb.lower) throw IdentityFailure("profile routes disagree on " + m.label);
  return upper_chain(md, mb);
}

bool CompatReport::pass() const {
  if (!left_continuous || !separated) return false;
  for (const auto& r : rows)
    if (!r.match) return false;
  for (const auto& c : composites)
    if (!c.ok) return false;
  return true;
}

int lattice_index(const std::vector<Subfield>& lattice, Mask h) {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].subgroup == h) return static_cast<int>(i);
  return -1;
}

CompatReport quotient_compatibility_check(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice) {
  CompatReport rep;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subfield& m = lattice[i];
    if (!m.normal) continue;
    CompatRow row;
    row.member = static_cast<int>(i);
    row.label = m.label;
    row.induced = induced_quotient_filtration(gd, br, m.subgroup);
    row.direct = m.order == 1 ? upper_chain(gd, br) : direct_chain(gd, m);
    row.match = row.induced == row.direct;
    rep.rows.push_back(row);
  }

  // left continuity and separation of the subgroup chain itself
  UpperChain full = upper_chain(gd, br);
  auto bs = full.breaks();
  for (std::size_t k = 0; k < bs.size(); ++k) {
    Rat prev = k ? bs[k - 1] : Rat(-1);
    Rat eps = (bs[k] - prev) / Rat(2);
    if (upper_group(gd, br, bs[k]) != upper_group(gd, br, bs[k] - eps)) rep.left_continuous = false;
  }
  if (upper_group(gd, br, Rat(0)) != gd.group.full()) rep.separated = false;
  if (!br.trivial && upper_group(gd, br, br.u_max.value + Rat(1, 1024)) != (Mask(1) << gd.group.identity))
    rep.separated = false;

  auto u = member_u(rep, lattice);
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = a + 1; b < lattice.size(); ++b) {
      if (!lattice[a].normal || !lattice[b].normal) continue;
      CompositeRow c;
      c.a = static_cast<int>(a);
      c.b = static_cast<int>(b);
      c.ab = lattice_index(lattice, lattice[a].subgroup & lattice[b].subgroup);
      if (c.ab < 0) throw IdentityFailure("composite outside the lattice");
      c.ua = u[a];
      c.ub = u[b];
      c.uab = u[c.ab];
      ExtRat mx = c.ua.neg_inf ? c.ub : (c.ub.neg_inf ? c.ua : ExtRat::of(std::max(c.ua.value, c.ub.value)));
      c.ok = mx == c.uab;
      rep.composites.push_back(c);
    }
  return rep;
}

std::vector<ExtRat> member_u(const CompatReport& rep, const std::vector<Subfield>& lattice) {
  std::vector<ExtRat> u(lattice.size());
  for (const auto& r : rep.rows) u[r.member] = r.direct.top();
  return u;
}

bool FixedFieldTable::pass() const {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

FixedFieldTable fixed_field_table(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                                  const std::vector<ExtRat>& u, const std::vector<Rat>& grid) {
  FixedFieldTable t;
  UpperChain full = upper_chain(gd, br);
  auto bs = full.breaks();
  for (const auto& m : grid) {
    TableRow row;
    row.m = m;
    Mask below = gd.group.full(), at_most = gd.group.full();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (!lattice[i].normal) continue;
      if (u[i].neg_inf || u[i].value < m) below &= lattice[i].subgroup;
      if (u[i].neg_inf || u[i].value <= m) at_most &= lattice[i].subgroup;
    }
    // m+ : step past m by less than the gap to the next break
    Rat next = m + Rat(1);
    for (const auto& b : bs)
      if (b > m) {
        next = b;
        break;
      }
    Rat plus = m + (next - m) / Rat(2);
    row.below = lattice_index(lattice, below);
    row.at_most = lattice_index(lattice, at_most);
    row.fixed = lattice_index(lattice, upper_group(gd, br, m));
    row.fixed_plus = lattice_index(lattice, upper_group(gd, br, plus));
    row.ok = row.below >= 0 && row.below == row.fixed && row.at_most >= 0 && row.at_most == row.fixed_plus;
    t.rows.push_back(row);
  }
  return t;
}

FiltrationProps filtration_props(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                         const std::vector<ExtRat>& u) {
  FiltrationProps r;
  const Mask one = Mask(1) << gd.group.identity;
  if (!br.trivial) {
    for (const Rat& m : {br.u_max.value + Rat(1, 4), br.u_max.value + Rat(1, 2), br.u_max.value + Rat(1)})
      if (upper_group(gd, br, m) != one) r.above_top_trivial = false;
  }
  const Mask I = gd.inertia();
  for (const Rat& m : {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
    if (upper_group(gd, br, m) != I) r.low_is_inertia = false;

  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subfield& M = lattice[i];
    if (!M.normal || M.degree == 1) continue;
    if (M.e == 1 && !(u[i] == ExtRat::of(Rat(0)))) r.unramified_zero = false;
    if (M.e > 1 && (u[i].neg_inf || u[i].value < Rat(1))) r.unramified_zero = false;
    if (M.e != 1 || M.order == 1) continue;
    // Gal(L/M) with its own Herbrand function against the restriction from G
    ++r.base_change_members;
    std::vector<Rat> prof;
    for (int a = 0; a < gd.degree(); ++a)
      if ((M.subgroup >> a & 1) && a != gd.group.identity) prof.push_back(gd.order_fn[a]);
    PLFunction fh = herbrand(prof);
    for (int a = 0; a < gd.degree(); ++a)
      if ((M.subgroup >> a & 1) && a != gd.group.identity && fh.eval(gd.order_fn[a]) != br.f.eval(gd.order_fn[a]))
        r.base_change = false;
  }
  return r;
}

}  // namespace ramify

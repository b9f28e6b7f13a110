#include "ramify/poly.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

Poly poly_from_ints(const FieldPtr& F, const std::vector<long>& coeffs) {
  Poly P;
  for (long c : coeffs) P.push_back(TowerField::from_int(F, c));
  return P;
}

Poly poly_embed(const FieldPtr& F, const Poly& P) {
  Poly out;
  out.reserve(P.size());
  for (const auto& c : P) out.push_back(TowerField::embed(F, c));
  return out;
}

TowerElem poly_eval(const Poly& P, const TowerElem& x) {
  if (P.empty()) return TowerField::zero(x.field());
  FieldPtr F = common_field(P.back(), x);
  TowerElem r = TowerField::embed(F, P.back());
  for (std::size_t i = P.size() - 1; i-- > 0;) r = r * x + P[i];
  return r;
}

Poly taylor_shift(const Poly& P, const TowerElem& a) {
  if (P.empty()) return P;
  FieldPtr F = common_field(P.back(), a);
  Poly c = poly_embed(F, P);
  TowerElem x = TowerField::embed(F, a);
  const std::size_t n = c.size();
  // repeated synthetic division by (y - a)
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i-- > k;) c[i] = c[i] + c[i + 1] * x;
  return c;
}

Poly poly_derivative(const Poly& P) {
  Poly out;
  for (std::size_t i = 1; i < P.size(); ++i)
    out.push_back(P[i] * TowerField::from_int(P[i].field(), static_cast<long>(i)));
  return out;
}

Poly poly_mul(const Poly& A, const Poly& B) {
  if (A.empty() || B.empty()) return {};
  FieldPtr F = common_field(A.front(), B.front());
  Poly out(A.size() + B.size() - 1, TowerField::zero(F));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) out[i + j] = out[i + j] + A[i] * B[j];
  return out;
}

int poly_degree(const Poly& P) { return static_cast<int>(P.size()) - 1; }

std::vector<std::string> poly_coeff_strs(const Poly& P, int digits) {
  std::vector<std::string> out;
  for (const auto& c : P) {
    for (std::size_t k = 1; k < c.coords().size(); ++k)
      if (!c.field()->ring().is_zero(c.coords()[k])) throw DomainError("coefficient is not a ground element");
    int known = static_cast<int>(std::min<long>(c.prec().ceil_si(), c.field()->precision()));
    out.push_back(c.field()->ring().str(c.coords()[0], digits < 0 ? known : std::min(known, digits)));
  }
  return out;
}

std::string poly_str(const Poly& P, int digits) {
  auto cs = poly_coeff_strs(P, digits);
  std::string s;
  for (std::size_t i = cs.size(); i-- > 0;) {
    std::string c = cs[i];
    if (c == "0") continue;
    bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    bool compound = c.find_first_of("+-") != std::string::npos;
    if (!s.empty() || neg) s += neg ? "-" : "+";
    if (i == 0) {
      s += c;
      continue;
    }
    if (c != "1") s += compound ? "(" + c + ")" : c;
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::vector<Rat> NewtonPolygon::root_valuations() const {
  std::vector<Rat> out;
  for (const auto& s : segments)
    for (int k = 0; k < s.length; ++k) out.push_back(s.root_valuation());
  return out;
}

NewtonPolygon newton_polygon(const std::vector<ValResult>& vals, const Rat& ceiling) {
  struct Pt {
    int x;
    Rat y;
  };
  std::vector<Pt> hull;
  auto cross_nonpos = [](const Pt& o, const Pt& a, const Pt& b) {
    Rat c = Rat(a.x - o.x) * (b.y - o.y) - (a.y - o.y) * Rat(b.x - o.x);
    return c.sign() <= 0;
  };
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
    if (!vals[i].exact) continue;
    Pt p{i, vals[i].value};
    while (hull.size() >= 2 && cross_nonpos(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  NewtonPolygon np;
  if (hull.empty()) {
    for (const auto& v : vals)
      if (v.value < ceiling) throw InsufficientPrecision("Newton polygon has no certified vertex");
    np.zero_roots = static_cast<int>(vals.size());
    return np;
  }
  auto line_at = [&](int i) -> Rat {
    for (std::size_t k = 0; k + 1 < hull.size(); ++k)
      if (hull[k].x <= i && i <= hull[k + 1].x)
        return hull[k].y + (hull[k + 1].y - hull[k].y) / Rat(hull[k + 1].x - hull[k].x) * Rat(i - hull[k].x);
    return hull.front().y;
  };
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
    if (vals[i].exact || vals[i].value >= ceiling) continue;
    if (i < hull.front().x || i > hull.back().x || vals[i].value < line_at(i))
      throw InsufficientPrecision("uncertified coefficient may move the Newton polygon");
  }
  np.zero_roots = hull.front().x;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    int len = hull[k + 1].x - hull[k].x;
    np.segments.push_back({(hull[k + 1].y - hull[k].y) / Rat(len), len});
  }
  return np;
}

NewtonPolygon newton_polygon(const Poly& P, const Rat& ceiling) {
  std::vector<ValResult> v;
  v.reserve(P.size());
  for (const auto& c : P) v.push_back(c.valuation());
  return newton_polygon(v, ceiling);
}

}  // namespace ramify

#pragma once

#include <string>
#include <vector>

#include "ramify/tower.hpp"

namespace ramify {

// Coefficients low to high.
using Poly = std::vector<TowerElem>;

Poly poly_from_ints(const FieldPtr& F, const std::vector<long>& coeffs);
Poly poly_embed(const FieldPtr& F, const Poly& P);
TowerElem poly_eval(const Poly& P, const TowerElem& x);
// Coefficients of P(x + a), living in the field of a (or of P if larger).
Poly taylor_shift(const Poly& P, const TowerElem& a);
Poly poly_derivative(const Poly& P);
Poly poly_mul(const Poly& A, const Poly& B);
int poly_degree(const Poly& P);
// Printable form for polynomials with ground-level coefficients, e.g. "x^2-2".
std::string poly_str(const Poly& P, int digits = -1);
// digits < 0 prints every certified digit
std::vector<std::string> poly_coeff_strs(const Poly& P, int digits = -1);

struct NPSegment {
  Rat slope;
  int length = 0;
  Rat root_valuation() const { return -slope; }
  friend bool operator==(const NPSegment&, const NPSegment&) = default;
};

struct NewtonPolygon {
  int zero_roots = 0;
  std::vector<NPSegment> segments;  // hull slopes strictly increasing
  // nonzero root valuations with multiplicity, largest first
  std::vector<Rat> root_valuations() const;
};

// AtLeast(b) with b >= ceiling is read as +inf; other uncertain points must
// lie on or above the hull built from certified points.
NewtonPolygon newton_polygon(const std::vector<ValResult>& vals, const Rat& ceiling);
NewtonPolygon newton_polygon(const Poly& P, const Rat& ceiling);

}  // namespace ramify

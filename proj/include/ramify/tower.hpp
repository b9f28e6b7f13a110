#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramify/ground.hpp"
#include "ramify/rat.hpp"

namespace ramify {

struct StepSpec {
  enum class Kind { Unramified, Eisenstein };
  Kind kind = Kind::Eisenstein;
  int degree = 0;
  // Unramified: residue modulus over F_p (low to high, monic), or an exact monic lift.
  std::vector<unsigned> modulus;
  std::vector<GroundElem> lift;
  // Eisenstein: c_0..c_{degree-1} of the monic polynomial, each in flat floor coordinates.
  std::vector<std::vector<GroundElem>> coeffs;

  static StepSpec unramified(int degree, std::vector<unsigned> modulus = {});
  static StepSpec eisenstein(std::vector<std::vector<GroundElem>> coeffs);
  // ground-level coefficients c_0..c_{n-1}
  static StepSpec eisenstein_ground(const std::vector<long>& coeffs);
};

struct ValResult {
  Rat value;
  bool exact = false;

  static ValResult Exact(Rat v) { return {std::move(v), true}; }
  static ValResult AtLeast(Rat v) { return {std::move(v), false}; }
  // certified v >= r
  bool ge(const Rat& r) const { return value >= r; }
  // certified v < r
  bool lt(const Rat& r) const { return exact && value < r; }
  std::string str() const { return exact ? value.str() : ">=" + value.str(); }
  friend bool operator==(const ValResult&, const ValResult&) = default;
};

class TowerField;
class TowerElem;
using FieldPtr = std::shared_ptr<const TowerField>;
using Coords = std::vector<GroundElem>;

class TowerField {
 public:
  static FieldPtr ground(GroundField g, int prec);
  static FieldPtr extend(const FieldPtr& base, const StepSpec& step);
  static FieldPtr build(GroundField g, int prec, const std::vector<StepSpec>& steps);
  FieldPtr with_precision(int prec) const;

  const GroundRing& ring() const { return ring_; }
  const GroundField& ground_field() const { return ring_.field(); }
  int precision() const { return ring_.prec(); }
  int degree() const { return dim_; }
  int e() const { return e_; }
  int f() const { return f_; }
  int depth() const { return base_ ? base_->depth() + 1 : 0; }
  const FieldPtr& base() const { return base_; }
  const StepSpec& step() const { return step_; }
  std::vector<StepSpec> steps() const;
  // True when `this` appears in the floor chain of `other` (or is `other`).
  bool is_floor_of(const TowerField& other) const;
  std::string describe() const;

  // valuation offset of flat coordinate k, in units of 1/e
  int offset_num(int k) const { return offsets_[k]; }
  std::uint64_t residue_size() const { return q_; }
  const std::vector<int>& residue_indices() const { return residue_idx_; }

  // Constructors for elements need the owning pointer.
  static TowerElem zero(const FieldPtr& F);
  static TowerElem one(const FieldPtr& F);
  static TowerElem from_int(const FieldPtr& F, long v);
  static TowerElem from_ground(const FieldPtr& F, const GroundElem& g);
  static TowerElem from_coords(const FieldPtr& F, Coords c);  // reduces exact coordinates
  static TowerElem generator(const FieldPtr& F);               // class of the top step variable
  static TowerElem uniformizer(const FieldPtr& F);
  static TowerElem uniformizer_pow(const FieldPtr& F, int k);
  static std::vector<TowerElem> residue_reps(const FieldPtr& F);
  static TowerElem embed(const FieldPtr& F, const TowerElem& x);

  // raw arithmetic on reduced coordinate arrays of length degree()
  void mul_coords(const GroundElem* a, const GroundElem* b, GroundElem* out) const;
  // a / pi_T, assuming divisibility
  void div_uniformizer_coords(const GroundElem* a, GroundElem* out) const;
  bool coords_zero(const GroundElem* a, int n) const;

 private:
  TowerField(GroundRing ring) : ring_(std::move(ring)) {}
  void finish();

  GroundRing ring_;
  FieldPtr base_;
  StepSpec step_;
  int n_ = 1;
  int dim_ = 1;
  int e_ = 1;
  int f_ = 1;
  std::uint64_t q_ = 0;
  bool scalar_poly_ = true;
  std::vector<Coords> q_coeffs_;  // reduced floor coordinates of c_0..c_{n-1}
  std::vector<bool> q_scalar_;
  std::vector<int> offsets_;
  std::vector<int> residue_idx_;
  Coords uniformizer_;
  Coords inv_pi_numer_;  // W with pi_T * W = pi_F, Eisenstein levels only
};

class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(FieldPtr home, Coords c, Rat prec);

  const FieldPtr& field() const { return home_; }
  const Coords& coords() const { return c_; }
  const Rat& prec() const { return prec_; }
  bool full_precision() const;

  ValResult valuation() const;
  bool is_zero_at_precision() const;  // every coordinate vanishes
  bool is_unit() const;

  TowerElem operator-() const;
  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  TowerElem& operator+=(const TowerElem& b) { return *this = *this + b; }
  TowerElem& operator-=(const TowerElem& b) { return *this = *this - b; }
  TowerElem& operator*=(const TowerElem& b) { return *this = *this * b; }

  TowerElem pow(std::uint64_t n) const;
  TowerElem inverse() const;  // units only
  TowerElem div_uniformizer(int k = 1) const;
  TowerElem div_ground_uniformizer(int k) const;
  // x / y for v(x) >= v(y), v(y) certified
  TowerElem divide(const TowerElem& y) const;
  TowerElem capped(const Rat& prec) const;
  std::vector<unsigned> residue() const;  // residue coordinates over F_p
  std::string str() const;

 private:
  FieldPtr home_;
  Coords c_;
  Rat prec_;
};

// Coerce two elements to a common field (one must be a floor of the other).
FieldPtr common_field(const TowerElem& a, const TowerElem& b);

}  // namespace ramify

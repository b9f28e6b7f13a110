#include "ramify/tower.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "ramify/errors.hpp"
#include "ramify/finite_field.hpp"

namespace ramify {

StepSpec StepSpec::unramified(int degree, std::vector<unsigned> modulus) {
  StepSpec s;
  s.kind = Kind::Unramified;
  s.degree = degree;
  s.modulus = std::move(modulus);
  return s;
}

StepSpec StepSpec::eisenstein(std::vector<std::vector<GroundElem>> coeffs) {
  StepSpec s;
  s.kind = Kind::Eisenstein;
  s.degree = static_cast<int>(coeffs.size());
  s.coeffs = std::move(coeffs);
  return s;
}

StepSpec StepSpec::eisenstein_ground(const std::vector<long>& coeffs) {
  std::vector<std::vector<GroundElem>> c;
  for (long v : coeffs) c.push_back({GroundElem::integer(v)});
  return eisenstein(std::move(c));
}

FieldPtr TowerField::ground(GroundField g, int prec) {
  auto F = std::shared_ptr<TowerField>(new TowerField(GroundRing(g, prec)));
  F->finish();
  return F;
}

FieldPtr TowerField::build(GroundField g, int prec, const std::vector<StepSpec>& steps) {
  FieldPtr F = ground(g, prec);
  for (const auto& s : steps) F = extend(F, s);
  return F;
}

FieldPtr TowerField::with_precision(int prec) const { return build(ground_field(), prec, steps()); }

std::vector<StepSpec> TowerField::steps() const {
  std::vector<StepSpec> out;
  for (const TowerField* F = this; F->base_; F = F->base_.get()) out.push_back(F->step_);
  std::reverse(out.begin(), out.end());
  return out;
}

bool TowerField::is_floor_of(const TowerField& other) const {
  for (const TowerField* F = &other; F; F = F->base_.get())
    if (F == this) return true;
  return false;
}

std::string TowerField::describe() const {
  std::string s = ground_field().str();
  for (const auto& st : steps()) {
    s += st.kind == StepSpec::Kind::Unramified ? " -> U" : " -> E";
    s += std::to_string(st.degree);
  }
  return s;
}

FieldPtr TowerField::extend(const FieldPtr& base, const StepSpec& step) {
  if (!base) throw DomainError("extension of a null field");
  if (step.degree < 1) throw DomainError("step degree must be positive");
  auto T = std::shared_ptr<TowerField>(new TowerField(base->ring_));
  const GroundRing& R = base->ring_;
  const int n = step.degree;
  const int Dp = base->dim_;
  T->base_ = base;
  T->step_ = step;
  T->n_ = n;
  T->dim_ = n * Dp;
  T->q_coeffs_.assign(n, Coords(Dp));
  T->q_scalar_.assign(n, true);
  if (step.kind == StepSpec::Kind::Unramified) {
    std::vector<GroundElem> lift;
    if (!step.lift.empty()) {
      if (static_cast<int>(step.lift.size()) != n + 1) throw DomainError("unramified lift has wrong length");
      for (const auto& c : step.lift) lift.push_back(R.reduce(c));
      if (!R.equal(lift.back(), R.one())) throw DomainError("unramified lift must be monic");
    } else {
      auto mod = step.modulus.empty() ? FiniteField::builtin_modulus(R.p(), n) : step.modulus;
      if (static_cast<int>(mod.size()) != n + 1) throw DomainError("residue modulus has wrong length");
      for (unsigned c : mod) lift.push_back(R.from_int(c));
    }
    std::vector<unsigned> residue;
    for (const auto& c : lift) residue.push_back(R.residue(c));
    FiniteField check(R.p(), residue);  // throws on reducible moduli
    if (std::gcd(n, base->f_) != 1)
      throw DomainError("unramified step degree must be coprime to the floor residue degree");
    for (int i = 0; i < n; ++i) T->q_coeffs_[i][0] = lift[i];
    T->e_ = base->e_;
    T->f_ = base->f_ * n;
  } else {
    if (static_cast<int>(step.coeffs.size()) != n) throw DomainError("Eisenstein step has wrong coefficient count");
    Rat unit_val(1, base->e_);
    for (int i = 0; i < n; ++i) {
      Coords c = step.coeffs[i];
      if (static_cast<int>(c.size()) > Dp) throw DomainError("Eisenstein coefficient exceeds floor dimension");
      c.resize(Dp);
      TowerElem x = from_coords(base, c);
      ValResult v = x.valuation();
      if (i == 0) {
        if (!(v.exact && v.value == unit_val))
          throw NotEisenstein("constant term must have valuation exactly " + unit_val.str() + ", got " + v.str());
      } else if (!v.ge(unit_val)) {
        throw NotEisenstein("coefficient " + std::to_string(i) + " has valuation " + v.str() + " below " +
                            unit_val.str());
      }
      T->q_coeffs_[i] = x.coords();
      for (int k = 1; k < Dp; ++k)
        if (!R.is_zero(T->q_coeffs_[i][k])) T->q_scalar_[i] = false;
    }
    T->e_ = base->e_ * n;
    T->f_ = base->f_;
  }
  T->finish();
  return T;
}

void TowerField::finish() {
  const GroundRing& R = ring_;
  if (!base_) {
    offsets_ = {0};
    residue_idx_ = {0};
    uniformizer_ = {R.uniformizer_pow(1)};
  } else {
    const int Dp = base_->dim_;
    const bool eis = step_.kind == StepSpec::Kind::Eisenstein;
    offsets_.resize(dim_);
    residue_idx_.clear();
    for (int k = 0; k < dim_; ++k) {
      int i = k / Dp, kf = k % Dp;
      offsets_[k] = eis ? base_->offsets_[kf] * n_ + i : base_->offsets_[kf];
      if (offsets_[k] == 0) residue_idx_.push_back(k);
    }
    if (eis) {
      uniformizer_.assign(dim_, GroundElem{});
      uniformizer_[Dp] = R.one();
      if (n_ == 1) {
        // x + c_0: the generator is -c_0, already a floor uniformizer times a unit
        uniformizer_.assign(dim_, GroundElem{});
        for (int k = 0; k < Dp; ++k) R.neg(uniformizer_[k], q_coeffs_[0][k]);
      }
      // W with pi * W = pi_F, computed one digit deeper and reduced
      FieldPtr deeper = base_->with_precision(precision() + 1);
      Coords c0 = step_.coeffs[0];
      c0.resize(Dp);
      TowerElem eps = from_coords(deeper, c0).div_uniformizer(1);
      Coords eps_c = eps.coords();
      for (auto& c : eps_c) c = R.reduce(c);
      TowerElem eps_inv = TowerElem(base_, eps_c, Rat(precision())).inverse();
      if (n_ == 1) {
        // pi_T = -c_0 = -pi_F * eps, so W = -eps^{-1}
        inv_pi_numer_ = (-eps_inv).coords();
      } else {
        Coords S(dim_);
        for (int k = 0; k < Dp; ++k) S[(n_ - 1) * Dp + k] = k == 0 ? R.one() : GroundElem{};
        for (int j = 0; j + 1 < n_; ++j)
          for (int k = 0; k < Dp; ++k) S[j * Dp + k] = q_coeffs_[j + 1][k];
        Coords inv_full(dim_);
        for (int k = 0; k < Dp; ++k) inv_full[k] = eps_inv.coords()[k];
        Coords W(dim_);
        mul_coords(S.data(), inv_full.data(), W.data());
        for (auto& c : W) R.neg(c, c);
        inv_pi_numer_ = std::move(W);
      }
    } else {
      uniformizer_.assign(dim_, GroundElem{});
      for (int k = 0; k < Dp; ++k) uniformizer_[k] = base_->uniformizer_[k];
    }
  }
  q_ = 1;
  for (int i = 0; i < f_; ++i) q_ *= R.p();
}

bool TowerField::coords_zero(const GroundElem* a, int n) const {
  for (int i = 0; i < n; ++i)
    if (!ring_.is_zero(a[i])) return false;
  return true;
}

void TowerField::mul_coords(const GroundElem* a, const GroundElem* b, GroundElem* out) const {
  const GroundRing& R = ring_;
  if (!base_) {
    R.mul(out[0], a[0], b[0]);
    return;
  }
  const int n = n_, Dp = base_->dim_;
  std::vector<GroundElem> tmp((2 * n - 1) * Dp);
  if (Dp == 1) {
    for (int i = 0; i < n; ++i) {
      if (R.is_zero(a[i])) continue;
      for (int j = 0; j < n; ++j)
        if (!R.is_zero(b[j])) R.addmul(tmp[i + j], a[i], b[j]);
    }
    for (auto& t : tmp) R.normalize(t);
    for (int s = 2 * n - 2; s >= n; --s) {
      GroundElem t = tmp[s];
      if (R.is_zero(t)) continue;
      for (int i = 0; i < n; ++i)
        if (!R.is_zero(q_coeffs_[i][0])) R.submul(tmp[s - n + i], t, q_coeffs_[i][0]);
      for (int i = 0; i < n; ++i) R.normalize(tmp[s - n + i]);
    }
  } else {
    Coords prod(Dp);
    std::vector<bool> za(n), zb(n);
    for (int i = 0; i < n; ++i) {
      za[i] = coords_zero(a + i * Dp, Dp);
      zb[i] = coords_zero(b + i * Dp, Dp);
    }
    for (int i = 0; i < n; ++i) {
      if (za[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (zb[j]) continue;
        base_->mul_coords(a + i * Dp, b + j * Dp, prod.data());
        for (int k = 0; k < Dp; ++k) R.add(tmp[(i + j) * Dp + k], tmp[(i + j) * Dp + k], prod[k]);
      }
    }
    for (int s = 2 * n - 2; s >= n; --s) {
      const GroundElem* t = &tmp[s * Dp];
      if (coords_zero(t, Dp)) continue;
      Coords tv(t, t + Dp);
      for (int i = 0; i < n; ++i) {
        GroundElem* dst = &tmp[(s - n + i) * Dp];
        if (q_scalar_[i]) {
          if (R.is_zero(q_coeffs_[i][0])) continue;
          for (int k = 0; k < Dp; ++k) {
            R.submul(dst[k], tv[k], q_coeffs_[i][0]);
            R.normalize(dst[k]);
          }
        } else {
          base_->mul_coords(tv.data(), q_coeffs_[i].data(), prod.data());
          for (int k = 0; k < Dp; ++k) R.sub(dst[k], dst[k], prod[k]);
        }
      }
    }
  }
  for (int k = 0; k < n * Dp; ++k) out[k] = std::move(tmp[k]);
}

void TowerField::div_uniformizer_coords(const GroundElem* a, GroundElem* out) const {
  const GroundRing& R = ring_;
  if (!base_) {
    out[0] = R.div_uniformizer(a[0], 1);
    return;
  }
  const int Dp = base_->dim_;
  Coords y(a, a + dim_);
  if (step_.kind == StepSpec::Kind::Eisenstein) {
    Coords t(dim_);
    mul_coords(a, inv_pi_numer_.data(), t.data());
    y = std::move(t);
  }
  for (int i = 0; i < n_; ++i) base_->div_uniformizer_coords(y.data() + i * Dp, out + i * Dp);
}

TowerElem TowerField::zero(const FieldPtr& F) { return TowerElem(F, Coords(F->dim_), Rat(F->precision())); }

TowerElem TowerField::one(const FieldPtr& F) { return from_int(F, 1); }

TowerElem TowerField::from_int(const FieldPtr& F, long v) {
  Coords c(F->dim_);
  c[0] = F->ring_.from_int(v);
  return TowerElem(F, std::move(c), Rat(F->precision()));
}

TowerElem TowerField::from_ground(const FieldPtr& F, const GroundElem& g) {
  Coords c(F->dim_);
  c[0] = F->ring_.reduce(g);
  return TowerElem(F, std::move(c), Rat(F->precision()));
}

TowerElem TowerField::from_coords(const FieldPtr& F, Coords c) {
  if (static_cast<int>(c.size()) > F->dim_) throw DomainError("too many coordinates");
  c.resize(F->dim_);
  for (auto& x : c) x = F->ring_.reduce(x);
  return TowerElem(F, std::move(c), Rat(F->precision()));
}

TowerElem TowerField::generator(const FieldPtr& F) {
  if (!F->base_) throw DomainError("ground field has no step generator");
  Coords c(F->dim_);
  if (F->n_ == 1) {
    for (int k = 0; k < F->base_->dim_; ++k) F->ring_.neg(c[k], F->q_coeffs_[0][k]);
  } else {
    c[F->base_->dim_] = F->ring_.one();
  }
  return TowerElem(F, std::move(c), Rat(F->precision()));
}

TowerElem TowerField::uniformizer(const FieldPtr& F) { return TowerElem(F, F->uniformizer_, Rat(F->precision())); }

TowerElem TowerField::uniformizer_pow(const FieldPtr& F, int k) {
  TowerElem r = one(F);
  TowerElem u = uniformizer(F);
  // square-and-multiply; a power past the precision is zero anyway
  while (k > 0) {
    if (k & 1) r = r * u;
    u = u * u;
    k >>= 1;
  }
  return r;
}

std::vector<TowerElem> TowerField::residue_reps(const FieldPtr& F) {
  std::vector<TowerElem> out;
  const unsigned p = F->ring_.p();
  const auto& idx = F->residue_idx_;
  for (std::uint64_t n = 0; n < F->q_; ++n) {
    Coords c(F->dim_);
    std::uint64_t t = n;
    for (int k : idx) {
      c[k] = F->ring_.from_int(static_cast<long>(t % p));
      t /= p;
    }
    out.emplace_back(F, std::move(c), Rat(F->precision()));
  }
  return out;
}

TowerElem TowerField::embed(const FieldPtr& F, const TowerElem& x) {
  if (x.field() == F) return x;
  if (!x.field() || !x.field()->is_floor_of(*F)) throw DomainError("element is not in a floor of the target field");
  if (x.field()->precision() != F->precision()) throw DomainError("precision mismatch in embedding");
  Coords c = x.coords();
  c.resize(F->dim_);
  return TowerElem(F, std::move(c), x.prec());
}

// ---------------------------------------------------------------------------

TowerElem::TowerElem(FieldPtr home, Coords c, Rat prec) : home_(std::move(home)), c_(std::move(c)), prec_(std::move(prec)) {
  if (static_cast<int>(c_.size()) != home_->degree()) throw DomainError("coordinate count mismatch");
  if (prec_ > Rat(home_->precision())) prec_ = Rat(home_->precision());
}

bool TowerElem::full_precision() const { return prec_ == Rat(home_->precision()); }

ValResult TowerElem::valuation() const {
  const GroundRing& R = home_->ring();
  int best = INT_MAX;
  const int e = home_->e();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (R.is_zero(c_[k])) continue;
    int v = R.val(c_[k]) * e + home_->offset_num(static_cast<int>(k));
    best = std::min(best, v);
  }
  if (best == INT_MAX) return ValResult::AtLeast(prec_);
  Rat v(best, e);
  if (v < prec_) return ValResult::Exact(v);
  return ValResult::AtLeast(prec_);
}

bool TowerElem::is_zero_at_precision() const { return home_->coords_zero(c_.data(), static_cast<int>(c_.size())); }

bool TowerElem::is_unit() const {
  auto v = valuation();
  return v.exact && v.value.sign() == 0;
}

FieldPtr common_field(const TowerElem& a, const TowerElem& b) {
  if (!a.field() || !b.field()) throw DomainError("uninitialised element");
  if (a.field() == b.field()) return a.field();
  if (a.field()->is_floor_of(*b.field())) return b.field();
  if (b.field()->is_floor_of(*a.field())) return a.field();
  throw DomainError("elements live in unrelated fields");
}

TowerElem TowerElem::operator-() const {
  Coords c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) home_->ring().neg(c[k], c_[k]);
  return TowerElem(home_, std::move(c), prec_);
}

TowerElem operator+(const TowerElem& a0, const TowerElem& b0) {
  FieldPtr F = common_field(a0, b0);
  TowerElem a = TowerField::embed(F, a0), b = TowerField::embed(F, b0);
  Coords c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) F->ring().add(c[k], a.c_[k], b.c_[k]);
  return TowerElem(F, std::move(c), std::min(a.prec_, b.prec_));
}

TowerElem operator-(const TowerElem& a0, const TowerElem& b0) {
  FieldPtr F = common_field(a0, b0);
  TowerElem a = TowerField::embed(F, a0), b = TowerField::embed(F, b0);
  Coords c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) F->ring().sub(c[k], a.c_[k], b.c_[k]);
  return TowerElem(F, std::move(c), std::min(a.prec_, b.prec_));
}

TowerElem operator*(const TowerElem& a0, const TowerElem& b0) {
  FieldPtr F = common_field(a0, b0);
  TowerElem a = TowerField::embed(F, a0), b = TowerField::embed(F, b0);
  Coords c(a.c_.size());
  F->mul_coords(a.c_.data(), b.c_.data(), c.data());
  Rat N(F->precision());
  Rat prec = N;
  bool fa = a.prec_ == N, fb = b.prec_ == N;
  if (!(fa && fb)) {
    if (!fa) prec = std::min(prec, a.prec_ + b.valuation().value);
    if (!fb) prec = std::min(prec, b.prec_ + a.valuation().value);
  }
  return TowerElem(F, std::move(c), prec);
}

TowerElem TowerElem::pow(std::uint64_t n) const {
  TowerElem r = TowerField::one(home_);
  TowerElem b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

TowerElem TowerElem::inverse() const {
  ValResult v = valuation();
  if (!v.exact) throw InsufficientPrecision("cannot invert an element of uncertified valuation", home_->precision() * 2);
  if (v.value.sign() != 0) throw NotAUnit("element of valuation " + v.value.str() + " is not a unit");
  TowerElem y = pow(home_->residue_size() - 2);
  TowerElem two = TowerField::from_int(home_, 2);
  const long target = static_cast<long>(home_->precision()) * home_->e();
  for (long acc = 1; acc < target; acc *= 2) y = y * (two - *this * y);
  return TowerElem(home_, y.c_, prec_);
}

TowerElem TowerElem::div_uniformizer(int k) const {
  TowerElem x = *this;
  const Rat step(1, home_->e());
  const Rat cap(home_->precision() - 1);
  for (int i = 0; i < k; ++i) {
    ValResult v = x.valuation();
    if (!v.ge(step)) {
      if (!v.exact) throw InsufficientPrecision("division by uniformizer needs more digits", home_->precision() * 2);
      throw DomainError("element not divisible by the uniformizer");
    }
    Coords out(x.c_.size());
    home_->div_uniformizer_coords(x.c_.data(), out.data());
    x = TowerElem(home_, std::move(out), std::min(x.prec_ - step, cap));
  }
  return x;
}

TowerElem TowerElem::div_ground_uniformizer(int k) const {
  ValResult v = valuation();
  if (!v.ge(Rat(k))) {
    if (!v.exact) throw InsufficientPrecision("division by ground uniformizer needs more digits", home_->precision() * 2);
    throw DomainError("element not divisible by the ground uniformizer power");
  }
  Coords c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = home_->ring().div_uniformizer(c_[i], k);
  Rat prec = std::min(prec_ - Rat(k), Rat(home_->precision() - k));
  return TowerElem(home_, std::move(c), prec);
}

TowerElem TowerElem::divide(const TowerElem& y0) const {
  FieldPtr F = common_field(*this, y0);
  TowerElem x = TowerField::embed(F, *this), y = TowerField::embed(F, y0);
  ValResult vy = y.valuation();
  if (!vy.exact) throw InsufficientPrecision("divisor valuation not certified", F->precision() * 2);
  if (!x.valuation().ge(vy.value)) throw DomainError("quotient is not integral");
  int k = static_cast<int>((vy.value * Rat(F->e())).num_si());
  return x.div_uniformizer(k) * y.div_uniformizer(k).inverse();
}

TowerElem TowerElem::capped(const Rat& prec) const { return TowerElem(home_, c_, std::min(prec_, prec)); }

std::vector<unsigned> TowerElem::residue() const {
  std::vector<unsigned> out;
  for (int k : home_->residue_indices()) out.push_back(home_->ring().residue(c_[k]));
  return out;
}

std::string TowerElem::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ",";
    s += home_->ring().str(c_[k]);
  }
  return s + "]";
}

}  // namespace ramify

#include "ramify/ground.hpp"
#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

std::string GroundField::str() const {
  if (kind == GroundKind::PAdic) return "Q_" + std::to_string(p);
  return "F_" + std::to_string(p) + "((t))";
}

GroundElem GroundElem::integer(long v) {
  // for Laurent grounds reduce() reads this as a constant
  GroundElem e;
  e.z = v;
  return e;
}

GroundElem GroundElem::from_mpz(const mpz_class& v) {
  GroundElem e;
  e.z = v;
  return e;
}

GroundElem GroundElem::laurent(std::vector<std::uint32_t> coeffs) {
  GroundElem e;
  e.t = std::move(coeffs);
  return e;
}

GroundRing::GroundRing(GroundField field, int prec) : field_(field), prec_(prec) {
  if (prec < 1) throw DomainError("precision must be positive");
  mpz_ui_pow_ui(mod_.get_mpz_t(), field_.p, static_cast<unsigned long>(prec));
}

static void trim(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

GroundElem GroundRing::from_int(long v) const {
  GroundElem e;
  if (padic()) {
    e.z = v;
    mpz_fdiv_r(e.z.get_mpz_t(), e.z.get_mpz_t(), mod_.get_mpz_t());
  } else {
    long r = v % static_cast<long>(field_.p);
    if (r < 0) r += field_.p;
    if (r) e.t = {static_cast<std::uint32_t>(r)};
  }
  return e;
}

GroundElem GroundRing::reduce(const GroundElem& exact) const {
  GroundElem e;
  if (padic()) {
    e.z = exact.z;
    mpz_fdiv_r(e.z.get_mpz_t(), e.z.get_mpz_t(), mod_.get_mpz_t());
    return e;
  }
  if (exact.t.empty() && exact.z != 0) return from_int(mpz_fdiv_ui(exact.z.get_mpz_t(), field_.p));
  e.t = exact.t;
  if (static_cast<int>(e.t.size()) > prec_) e.t.resize(prec_);
  for (auto& c : e.t) c %= field_.p;
  trim(e.t);
  return e;
}

GroundElem GroundRing::uniformizer_pow(int k) const {
  GroundElem e;
  if (k >= prec_) return e;
  if (padic()) {
    mpz_ui_pow_ui(e.z.get_mpz_t(), field_.p, static_cast<unsigned long>(k));
  } else {
    e.t.assign(k + 1, 0);
    e.t[k] = 1;
  }
  return e;
}

bool GroundRing::is_zero(const GroundElem& a) const { return padic() ? a.z == 0 : a.t.empty(); }

bool GroundRing::equal(const GroundElem& a, const GroundElem& b) const {
  return padic() ? a.z == b.z : a.t == b.t;
}

int GroundRing::val(const GroundElem& a) const {
  if (padic()) {
    if (a.z == 0) return prec_;
    if (field_.p == 2) return static_cast<int>(mpz_scan1(a.z.get_mpz_t(), 0));
    thread_local mpz_class tmp;
    return static_cast<int>(mpz_remove(tmp.get_mpz_t(), a.z.get_mpz_t(), mpz_class(field_.p).get_mpz_t()));
  }
  for (std::size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i]) return static_cast<int>(i);
  return prec_;
}

void GroundRing::normalize(GroundElem& a) const {
  if (padic()) {
    if (field_.p == 2)
      mpz_fdiv_r_2exp(a.z.get_mpz_t(), a.z.get_mpz_t(), static_cast<mp_bitcnt_t>(prec_));
    else
      mpz_fdiv_r(a.z.get_mpz_t(), a.z.get_mpz_t(), mod_.get_mpz_t());
  } else {
    if (static_cast<int>(a.t.size()) > prec_) a.t.resize(prec_);
    for (auto& c : a.t) c %= field_.p;
    trim(a.t);
  }
}

void GroundRing::add(GroundElem& out, const GroundElem& a, const GroundElem& b) const {
  if (padic()) {
    mpz_add(out.z.get_mpz_t(), a.z.get_mpz_t(), b.z.get_mpz_t());
    if (out.z >= mod_) out.z -= mod_;
    return;
  }
  std::vector<std::uint32_t> r(std::max(a.t.size(), b.t.size()), 0);
  for (std::size_t i = 0; i < a.t.size(); ++i) r[i] = a.t[i];
  for (std::size_t i = 0; i < b.t.size(); ++i) r[i] = (r[i] + b.t[i]) % field_.p;
  trim(r);
  out.t = std::move(r);
}

void GroundRing::sub(GroundElem& out, const GroundElem& a, const GroundElem& b) const {
  if (padic()) {
    mpz_sub(out.z.get_mpz_t(), a.z.get_mpz_t(), b.z.get_mpz_t());
    if (out.z < 0) out.z += mod_;
    return;
  }
  std::vector<std::uint32_t> r(std::max(a.t.size(), b.t.size()), 0);
  for (std::size_t i = 0; i < a.t.size(); ++i) r[i] = a.t[i];
  for (std::size_t i = 0; i < b.t.size(); ++i) r[i] = (r[i] + field_.p - b.t[i]) % field_.p;
  trim(r);
  out.t = std::move(r);
}

void GroundRing::neg(GroundElem& out, const GroundElem& a) const { sub(out, zero(), a); }

static void laurent_mul_acc(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b, unsigned p, int prec, bool subtract) {
  if (a.empty() || b.empty()) return;
  std::size_t n = std::min<std::size_t>(a.size() + b.size() - 1, prec);
  if (acc.size() < n) acc.resize(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      std::uint32_t prod = a[i] * b[j] % p;
      acc[i + j] = subtract ? (acc[i + j] + p - prod) % p : (acc[i + j] + prod) % p;
    }
  }
  trim(acc);
}

void GroundRing::mul(GroundElem& out, const GroundElem& a, const GroundElem& b) const {
  if (padic()) {
    mpz_mul(out.z.get_mpz_t(), a.z.get_mpz_t(), b.z.get_mpz_t());
    normalize(out);
    return;
  }
  std::vector<std::uint32_t> r;
  laurent_mul_acc(r, a.t, b.t, field_.p, prec_, false);
  out.t = std::move(r);
}

void GroundRing::addmul(GroundElem& acc, const GroundElem& a, const GroundElem& b) const {
  if (padic()) {
    mpz_addmul(acc.z.get_mpz_t(), a.z.get_mpz_t(), b.z.get_mpz_t());
    return;
  }
  laurent_mul_acc(acc.t, a.t, b.t, field_.p, prec_, false);
}

void GroundRing::submul(GroundElem& acc, const GroundElem& a, const GroundElem& b) const {
  if (padic()) {
    mpz_submul(acc.z.get_mpz_t(), a.z.get_mpz_t(), b.z.get_mpz_t());
    return;
  }
  laurent_mul_acc(acc.t, a.t, b.t, field_.p, prec_, true);
}

GroundElem GroundRing::inv_unit(const GroundElem& a) const {
  if (val(a) != 0) throw NotAUnit("ground element is not a unit");
  GroundElem r;
  if (padic()) {
    mpz_invert(r.z.get_mpz_t(), a.z.get_mpz_t(), mod_.get_mpz_t());
    return r;
  }
  // power series inverse, one coefficient at a time
  unsigned p = field_.p;
  unsigned a0inv = 1;
  for (unsigned c = 1; c < p; ++c)
    if (a.t[0] * c % p == 1) a0inv = c;
  std::vector<std::uint32_t> b(prec_, 0);
  for (int n = 0; n < prec_; ++n) {
    std::uint64_t s = n == 0 ? 1 : 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.t.size()); ++k) s += static_cast<std::uint64_t>(p - a.t[k]) * b[n - k];
    b[n] = static_cast<std::uint32_t>(s % p * a0inv % p);
  }
  trim(b);
  r.t = std::move(b);
  return r;
}

GroundElem GroundRing::div_uniformizer(const GroundElem& a, int k) const {
  if (k == 0) return a;
  if (val(a) < k) throw DomainError("ground element not divisible by uniformizer power");
  GroundElem r;
  if (padic()) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), field_.p, static_cast<unsigned long>(k));
    mpz_divexact(r.z.get_mpz_t(), a.z.get_mpz_t(), pk.get_mpz_t());
    return r;
  }
  if (static_cast<int>(a.t.size()) > k) r.t.assign(a.t.begin() + k, a.t.end());
  return r;
}

unsigned GroundRing::residue(const GroundElem& a) const {
  if (padic()) return static_cast<unsigned>(mpz_fdiv_ui(a.z.get_mpz_t(), field_.p));
  return a.t.empty() ? 0 : a.t[0];
}

mpz_class GroundRing::balanced(const GroundElem& a) const {
  mpz_class z = a.z;
  if (2 * z > mod_) z -= mod_;
  return z;
}

std::string GroundRing::str(const GroundElem& a) const {
  if (padic()) return balanced(a).get_str();
  if (a.t.empty()) return "0";
  std::string s;
  for (std::size_t i = a.t.size(); i-- > 0;) {
    if (!a.t[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(a.t[i]);
      continue;
    }
    if (a.t[i] != 1) s += std::to_string(a.t[i]);
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::string GroundRing::str(const GroundElem& a, int digits) const {
  if (digits >= prec_) return str(a);
  if (padic()) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), field_.p, static_cast<unsigned long>(std::max(digits, 0)));
    mpz_class z = a.z % m;
    if (2 * z > m) z -= m;
    return z.get_str();
  }
  GroundElem b = a;
  if (static_cast<int>(b.t.size()) > digits) b.t.resize(std::max(digits, 0));
  return str(b);
}

}  // namespace ramify

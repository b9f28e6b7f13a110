#include "ramify/finite_field.hpp"

#include <string>

#include "ramify/errors.hpp"

namespace ramify {

namespace fp_poly {

std::vector<unsigned> trim(std::vector<unsigned> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1;
  for (unsigned e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::vector<unsigned> mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  a = trim(std::move(a));
  auto bt = trim(b);
  if (bt.empty()) throw DivisionByZero();
  unsigned lead_inv = inv_mod(bt.back(), p);
  while (a.size() >= bt.size()) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - bt.size();
    for (std::size_t i = 0; i < bt.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * bt[i] % p) % p;
    a = trim(std::move(a));
  }
  return a;
}

std::vector<unsigned> find_factor(const std::vector<unsigned>& a, unsigned p) {
  auto at = trim(a);
  int n = static_cast<int>(at.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<unsigned> g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      if (mod(at, g, p).empty()) return g;
    }
  }
  return {};
}

}  // namespace fp_poly

FiniteField::FiniteField(unsigned p, std::vector<unsigned> modulus) : p_(p), mod_(std::move(modulus)) {
  if (p < 2) throw DomainError("characteristic must be prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("characteristic must be prime");
  for (auto& c : mod_) c %= p;
  mod_ = fp_poly::trim(std::move(mod_));
  if (mod_.size() < 2 || mod_.back() != 1) throw DomainError("modulus must be monic of degree >= 1");
  f_ = static_cast<unsigned>(mod_.size() - 1);
  if (f_ > 6) throw DomainError("residue degree above 6 is unsupported");
  auto factor = fp_poly::find_factor(mod_, p_);
  if (!factor.empty()) {
    std::string s;
    for (std::size_t i = factor.size(); i-- > 0;) s += std::to_string(factor[i]) + (i ? "," : "");
    throw ReducibleModulus("modulus is reducible, factor coefficients (high to low) " + s, factor);
  }
  size_ = 1;
  for (unsigned i = 0; i < f_; ++i) size_ *= p_;
}

std::vector<unsigned> FiniteField::builtin_modulus(unsigned p, unsigned f) {
  if (f == 1) return {0, 1};
  // Conway-style small moduli; each one is re-verified by the constructor.
  switch (p) {
    case 2:
      if (f == 2) return {1, 1, 1};
      if (f == 3) return {1, 1, 0, 1};
      if (f == 4) return {1, 1, 0, 0, 1};
      break;
    case 3:
      if (f == 2) return {2, 2, 1};
      if (f == 3) return {1, 2, 0, 1};
      if (f == 4) return {2, 0, 0, 2, 1};
      break;
    case 5:
      if (f == 2) return {2, 4, 1};
      if (f == 3) return {3, 3, 0, 1};
      if (f == 4) return {2, 4, 4, 0, 1};
      break;
    case 7:
      if (f == 2) return {3, 6, 1};
      if (f == 3) return {4, 0, 6, 1};
      if (f == 4) return {3, 4, 5, 0, 1};
      break;
    default:
      break;
  }
  // Fall back to the first irreducible in lexicographic order.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < f; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> g(f + 1, 0);
    g[f] = 1;
    std::uint64_t t = idx;
    for (unsigned i = 0; i < f; ++i) {
      g[i] = t % p;
      t /= p;
    }
    if (g[0] != 0 && fp_poly::find_factor(g, p).empty()) return g;
  }
  throw DomainError("no irreducible polynomial found");
}

FiniteField FiniteField::builtin(unsigned p, unsigned f) { return FiniteField(p, builtin_modulus(p, f)); }

FiniteField::Elem FiniteField::one() const {
  Elem e(f_, 0);
  e[0] = 1;
  return e;
}

FiniteField::Elem FiniteField::gen() const {
  if (f_ == 1) return from_int(static_cast<long>(p_ - mod_[0]));
  Elem e(f_, 0);
  e[1] = 1;
  return e;
}

FiniteField::Elem FiniteField::from_int(long v) const {
  Elem e(f_, 0);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  e[0] = static_cast<unsigned>(r);
  return e;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (unsigned i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (unsigned i = 0; i < f_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const { return sub(zero(), a); }

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
  std::vector<unsigned> prod(2 * f_ - 1, 0);
  for (unsigned i = 0; i < f_; ++i)
    for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  auto r = fp_poly::mod(std::move(prod), mod_, p_);
  r.resize(f_, 0);
  return r;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero();
  return pow(a, size_ - 2);
}

bool FiniteField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

FiniteField::Elem FiniteField::element(std::uint64_t index) const {
  Elem e(f_);
  for (unsigned i = 0; i < f_; ++i) {
    e[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index(const Elem& a) const {
  std::uint64_t r = 0;
  for (unsigned i = f_; i-- > 0;) r = r * p_ + a[i];
  return r;
}

std::vector<FiniteField::Elem> FiniteField::elements() const {
  std::vector<Elem> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

unsigned FiniteField::element_degree(const Elem& a) const {
  Elem x = frobenius(a);
  unsigned k = 1;
  while (x != a) {
    x = frobenius(x);
    ++k;
  }
  return k;
}

}  // namespace ramify

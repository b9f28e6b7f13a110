#pragma once

#include <cstdint>
#include <vector>

namespace ramify {

// F_{p^f} = F_p[x]/(modulus). Elements are coefficient vectors of length f.
class FiniteField {
 public:
  using Elem = std::vector<unsigned>;

  // modulus: monic, low to high, size f+1. Throws ReducibleModulus.
  FiniteField(unsigned p, std::vector<unsigned> modulus);
  static FiniteField builtin(unsigned p, unsigned f);
  static std::vector<unsigned> builtin_modulus(unsigned p, unsigned f);

  unsigned p() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t size() const { return size_; }
  const std::vector<unsigned>& modulus() const { return mod_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem gen() const;
  Elem from_int(long v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t n) const;
  Elem inv(const Elem& a) const;
  Elem frobenius(const Elem& a) const { return pow(a, p_); }
  bool is_zero(const Elem& a) const;

  Elem element(std::uint64_t index) const;
  std::uint64_t index(const Elem& a) const;
  std::vector<Elem> elements() const;

  // Smallest k >= 1 with a^{p^k} = a.
  unsigned element_degree(const Elem& a) const;

 private:
  unsigned p_;
  unsigned f_;
  std::uint64_t size_;
  std::vector<unsigned> mod_;
};

// Polynomials over F_p, low to high, trimmed.
namespace fp_poly {
std::vector<unsigned> trim(std::vector<unsigned> a);
std::vector<unsigned> mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p);
// First monic factor of degree 1..deg/2 found, or empty if irreducible.
std::vector<unsigned> find_factor(const std::vector<unsigned>& a, unsigned p);
}  // namespace fp_poly

}  // namespace ramify

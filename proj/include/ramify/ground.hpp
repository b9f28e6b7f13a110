#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ramify {

enum class GroundKind { PAdic, Laurent };

// Q_p or F_p((t)).
struct GroundField {
  GroundKind kind = GroundKind::PAdic;
  unsigned p = 2;
  std::string str() const;
  friend bool operator==(const GroundField&, const GroundField&) = default;
};

// An element of O_K. Only one of the two members is used, depending on the
// ground kind. Outside a GroundRing the value is exact (any integer, any
// polynomial in t); inside it is reduced mod pi^N.
struct GroundElem {
  mpz_class z;
  std::vector<std::uint32_t> t;

  static GroundElem integer(long v);
  static GroundElem from_mpz(const mpz_class& v);
  static GroundElem laurent(std::vector<std::uint32_t> coeffs);
};

// O_K / pi^N.
class GroundRing {
 public:
  GroundRing(GroundField field, int prec);

  const GroundField& field() const { return field_; }
  unsigned p() const { return field_.p; }
  int prec() const { return prec_; }
  bool padic() const { return field_.kind == GroundKind::PAdic; }

  GroundElem zero() const { return {}; }
  GroundElem one() const { return from_int(1); }
  GroundElem from_int(long v) const;
  GroundElem reduce(const GroundElem& exact) const;
  GroundElem uniformizer_pow(int k) const;

  bool is_zero(const GroundElem& a) const;
  bool equal(const GroundElem& a, const GroundElem& b) const;
  int val(const GroundElem& a) const;  // prec when zero

  void add(GroundElem& out, const GroundElem& a, const GroundElem& b) const;
  void sub(GroundElem& out, const GroundElem& a, const GroundElem& b) const;
  void neg(GroundElem& out, const GroundElem& a) const;
  void mul(GroundElem& out, const GroundElem& a, const GroundElem& b) const;
  // Lazy accumulation; call normalize before reading the value.
  void addmul(GroundElem& acc, const GroundElem& a, const GroundElem& b) const;
  void submul(GroundElem& acc, const GroundElem& a, const GroundElem& b) const;
  void normalize(GroundElem& a) const;

  GroundElem inv_unit(const GroundElem& a) const;
  // a / pi^k for a divisible by pi^k; the top k digits of the result are unknown and set to 0.
  GroundElem div_uniformizer(const GroundElem& a, int k) const;
  unsigned residue(const GroundElem& a) const;

  // Balanced integer for Q_p; polynomial in t otherwise.
  std::string str(const GroundElem& a) const;
  // truncated modulo the uniformizer to the given power
  std::string str(const GroundElem& a, int digits) const;
  mpz_class balanced(const GroundElem& a) const;

 private:
  GroundField field_;
  int prec_;
  mpz_class mod_;
};

}  // namespace ramify

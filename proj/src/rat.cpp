#include "ramify/rat.hpp"

#include "ramify/errors.hpp"

namespace ramify {

Rat::Rat(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, 1);
  q_ /= den;
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(t), mpz_class(1));
    return Rat(mpz_class(t.substr(0, slash)), mpz_class(t.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal: " + t);
  }
}

long Rat::num_si() const {
  if (!q_.get_num().fits_slong_p()) throw DomainError("numerator overflow");
  return q_.get_num().get_si();
}

long Rat::den_si() const {
  if (!q_.get_den().fits_slong_p()) throw DomainError("denominator overflow");
  return q_.get_den().get_si();
}

std::string Rat::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.q_ == 0) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ramify

#include "foldlie/rat.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace foldlie {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rat Rat::parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  return Rat(q);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

std::size_t Rat::hash() const {
  std::size_t h = std::hash<long>{}(mpz_get_si(v_.get_num_mpz_t()));
  h ^= std::hash<long>{}(mpz_get_si(v_.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Rat& Rat::operator+=(const Rat& o) {
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rat operator-(const Rat& a) {
  Rat r;
  mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rat result(1);
  Rat b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace foldlie

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace foldlie {

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class& q);

  /// Parses "p", "p/q" or "-p/q".
  static Rat parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat inverse() const;
  Rat abs() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  std::size_t hash() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, int exponent);

}  // namespace foldlie

namespace Eigen {

template <>
struct NumTraits<foldlie::Rat> : GenericNumTraits<foldlie::Rat> {
  using Real = foldlie::Rat;
  using NonInteger = foldlie::Rat;
  using Nested = foldlie::Rat;
  using Literal = foldlie::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(1L << 30); }
  static inline Real lowest() { return Real(-(1L << 30)); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

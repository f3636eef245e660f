#pragma once

#include <Eigen/Core>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "foldlie/linalg.hpp"
#include "foldlie/rat.hpp"

namespace foldlie {

using Exponent = std::vector<int>;

/// Ordered list of variable names shared by polynomials of one ring.
class PolyRing {
 public:
  PolyRing() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit PolyRing(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return *names_; }
  int size() const { return static_cast<int>(names_->size()); }
  int index(const std::string& name) const;
  bool contains(const std::string& name) const;
  bool operator==(const PolyRing& o) const { return names_ == o.names_ || *names_ == *o.names_; }

  class MultiPoly var(const std::string& name) const;
  class MultiPoly var(int i) const;
  std::vector<class MultiPoly> vars() const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Constants built without a ring combine with any ring; otherwise both
/// operands must share the same variable order.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rat& c);
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rat(c)) {}
  MultiPoly(PolyRing ring, const Rat& c = Rat(0));

  static MultiPoly monomial(const PolyRing& ring, const Exponent& e, const Rat& c = Rat(1));

  const PolyRing& ring() const { return ring_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(const Exponent& e) const;
  int total_degree() const;
  int degree_in(int var) const;
  int degree_in(const std::string& name) const;
  /// Degree under the given variable weights; -1 for the zero polynomial.
  int weighted_degree(const std::vector<int>& weights) const;
  bool is_weighted_homogeneous(const std::vector<int>& weights, int degree) const;
  bool depends_on(const std::string& name) const;

  Rat eval(const std::vector<Rat>& point) const;
  Rat eval(const std::map<std::string, Rat>& point) const;
  /// Substitutes images[i] for variable i; images share one target ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Substitutes only the named variables, keeping the ring.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
  /// Re-expresses the polynomial in a ring containing all of its variables.
  MultiPoly embed(const PolyRing& target) const;
  MultiPoly derivative(int var) const;
  MultiPoly derivative(const std::string& name) const;
  /// Part of the polynomial of the given weighted degree.
  MultiPoly homogeneous_part(const std::vector<int>& weights, int degree) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  MultiPoly& operator/=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rat& c) { return a /= c; }
  friend MultiPoly operator/(MultiPoly a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void unify(const MultiPoly& o);
  void add_term(const Exponent& e, const Rat& c);

  PolyRing ring_;
  std::map<Exponent, Rat> terms_;
};

MultiPoly pow(const MultiPoly& p, int exponent);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

using PolyMatrix = MatrixX<MultiPoly>;
using PolyVector = VectorX<MultiPoly>;

PolyMatrix to_poly(const RatMatrix& m);
/// Evaluates every entry at a rational point.
RatMatrix eval(const PolyMatrix& m, const std::vector<Rat>& point);

/// Evaluates p at the given assignment; every variable of p must be assigned.
Rat poly_eval(const MultiPoly& p, const std::map<std::string, Rat>& point);

/// Elementary symmetric polynomial e_k in the variables of ring.
MultiPoly elementary_symmetric(const PolyRing& ring, int k);

/// True when target lies in the subalgebra generated by gens, tested
/// degree-by-degree under weights (all of gens and target weighted-homogeneous).
bool in_generated_subalgebra(const MultiPoly& target, const std::vector<MultiPoly>& gens,
                             const std::vector<int>& weights);

}  // namespace foldlie

namespace Eigen {

template <>
struct NumTraits<foldlie::MultiPoly> : GenericNumTraits<foldlie::MultiPoly> {
  using Real = foldlie::MultiPoly;
  using NonInteger = foldlie::MultiPoly;
  using Nested = foldlie::MultiPoly;
  using Literal = foldlie::MultiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

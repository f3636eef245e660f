#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "foldlie/linalg.hpp"
#include "foldlie/poly.hpp"

namespace foldlie {

/// Coefficients c_0..c_n of det(x I - m), with c_n = 1.
///
/// Faddeev–LeVerrier recursion; the only divisions are by the integers 1..n,
/// so it works verbatim over Rat and over MultiPoly entries.
template <class T>
std::vector<T> char_poly_coeffs(const MatrixX<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  MatrixX<T> acc = MatrixX<T>::Constant(n, n, T(0));
  for (int k = 1; k <= n; ++k) {
    acc = matmul(m, acc);
    for (int i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    MatrixX<T> am = matmul(m, acc);
    c[n - k] = -generic_trace(am) / Rat(k);
  }
  return c;
}

/// e_k of the eigenvalues, i.e. (-1)^k times the x^{n-k} coefficient.
template <class T>
std::vector<T> exterior_traces(const MatrixX<T>& m) {
  auto c = char_poly_coeffs(m);
  const int n = static_cast<int>(m.rows());
  std::vector<T> e(n + 1, T(0));
  e[0] = T(1);
  for (int k = 1; k <= n; ++k) e[k] = (k % 2 ? -c[n - k] : c[n - k]);
  return e;
}

/// Characteristic polynomial as a polynomial in one variable.
MultiPoly char_poly(const RatMatrix& m, const std::string& var = "x");

/// tr(Λ^k m) for 1 <= k <= n.
Rat exterior_trace(const RatMatrix& m, int k);

/// Pfaffian of a skew-symmetric matrix of even size, by expansion along row 0.
template <class T>
T pfaffian(const MatrixX<T>& m) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw std::invalid_argument("pfaffian: non-square matrix");
  if (n % 2) return T(0);
  if (n == 0) return T(1);
  T total(0);
  for (int j = 1; j < n; ++j) {
    if (m(0, j) == T(0)) continue;
    std::vector<int> keep;
    for (int i = 1; i < n; ++i)
      if (i != j) keep.push_back(i);
    MatrixX<T> minor(n - 2, n - 2);
    for (int a = 0; a < n - 2; ++a)
      for (int b = 0; b < n - 2; ++b) minor(a, b) = m(keep[a], keep[b]);
    T term = m(0, j) * pfaffian(minor);
    if (j % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace foldlie

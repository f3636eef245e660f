#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "foldlie/rat.hpp"

namespace foldlie {

template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rat>;
using RatVector = VectorX<Rat>;

struct RowEchelon {
  RatMatrix reduced;
  std::vector<int> pivots;
};

/// Reduced row echelon form; pivots are chosen leftmost.
RowEchelon rref(RatMatrix m);
int rank(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);
/// Same basis packed as the columns of a matrix (cols(m) x nullity).
RatMatrix nullspace_matrix(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);
Rat determinant(RatMatrix m);
/// Some x with a x = b, if one exists.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

RatMatrix identity(int n);
RatMatrix zeros(int rows, int cols);
RatMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
RatVector vec(std::initializer_list<Rat> entries);
RatMatrix diag(const std::vector<Rat>& entries);
/// Matrix unit E_ij with 1-based indices.
RatMatrix unit(int n, int i, int j);

bool is_zero(const RatMatrix& m);
Rat trace(const RatMatrix& m);
/// Column-major flattening of a square matrix.
RatVector flatten(const RatMatrix& m);
RatMatrix unflatten(const RatVector& v, int n);
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);
RatMatrix hstack(const std::vector<RatVector>& cols);

std::string to_string(const RatMatrix& m);

struct MatrixHash {
  std::size_t operator()(const RatMatrix& m) const;
};
struct MatrixEqual {
  bool operator()(const RatMatrix& a, const RatMatrix& b) const;
};

template <class T>
MatrixX<T> matmul(const MatrixX<T>& a, const MatrixX<T>& b) {
  return a.lazyProduct(b);
}

template <class T>
T generic_trace(const MatrixX<T>& m) {
  T t(0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace foldlie

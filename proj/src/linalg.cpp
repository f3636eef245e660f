#include "foldlie/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace foldlie {

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rat inv = m(r, c).inverse();
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (int j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const int cols = static_cast<int>(m.cols());
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = RatVector::Constant(cols, Rat(0));
    v(f) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v(e.pivots[i]) = -e.reduced(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix nullspace_matrix(const RatMatrix& m) {
  auto basis = nullspace(m);
  RatMatrix out = zeros(static_cast<int>(m.cols()), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<int>(j)) = basis[j];
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const int n = static_cast<int>(m.rows());
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity(n);
  RowEchelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return RatMatrix(e.reduced.rightCols(n));
}

Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const int n = static_cast<int>(m.rows());
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rat(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const Rat inv = m(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rat f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  RatMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RatVector x = RatVector::Constant(cols, Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x(e.pivots[i]) = e.reduced(static_cast<int>(i), cols);
  return x;
}

RatMatrix identity(int n) {
  RatMatrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix zeros(int rows, int cols) { return RatMatrix::Constant(rows, cols, Rat(0)); }

RatMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  RatMatrix m = zeros(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("from_rows: ragged rows");
    int j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RatVector vec(std::initializer_list<Rat> entries) {
  RatVector v(static_cast<int>(entries.size()));
  int i = 0;
  for (const auto& x : entries) v(i++) = x;
  return v;
}

RatMatrix diag(const std::vector<Rat>& entries) {
  const int n = static_cast<int>(entries.size());
  RatMatrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

RatMatrix unit(int n, int i, int j) {
  RatMatrix m = zeros(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

bool is_zero(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Rat trace(const RatMatrix& m) { return generic_trace(m); }

RatVector flatten(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  RatVector v(n * m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < n; ++i) v(j * n + i) = m(i, j);
  return v;
}

RatMatrix unflatten(const RatVector& v, int n) {
  RatMatrix m(n, v.size() / n);
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = v(j * n + i);
  return m;
}

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) {
  return RatMatrix(matmul(a, b)) - RatMatrix(matmul(b, a));
}

RatMatrix hstack(const std::vector<RatVector>& cols) {
  if (cols.empty()) return RatMatrix(0, 0);
  RatMatrix m(cols.front().size(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<int>(j)) = cols[j];
  return m;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

std::size_t MatrixHash::operator()(const RatMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.rows() * 131 + m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) h = h * 1000003ULL ^ m(i, j).hash();
  return h;
}

bool MatrixEqual::operator()(const RatMatrix& a, const RatMatrix& b) const {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace foldlie

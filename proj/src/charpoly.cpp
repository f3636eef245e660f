#include "foldlie/charpoly.hpp"

#include <stdexcept>

namespace foldlie {

MultiPoly char_poly(const RatMatrix& m, const std::string& var) {
  const auto c = char_poly_coeffs(m);
  PolyRing ring({var});
  MultiPoly p(ring);
  for (std::size_t k = 0; k < c.size(); ++k) p += MultiPoly::monomial(ring, {static_cast<int>(k)}, c[k]);
  return p;
}

Rat exterior_trace(const RatMatrix& m, int k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exterior_trace: non-square matrix");
  if (k < 1 || k > m.rows()) throw std::out_of_range("exterior_trace: k out of range");
  return exterior_traces(m)[k];
}

}  // namespace foldlie

#pragma once

#include "orbitlie/lie_algebra.hpp"

namespace fixtures {

using namespace orbitlie;

inline RatVector v(std::initializer_list<int> xs) {
  RatVector out;
  for (int x : xs) out.push_back(Rational(x));
  return out;
}

inline RatMatrix m(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    RatVector row;
    for (int x : r) row.push_back(Rational(x));
    cols = row.size();
    rs.push_back(row);
  }
  return RatMatrix::from_rows(rs, cols);
}

inline Subspace span(std::size_t n, std::vector<RatVector> vs) { return Subspace::span(n, vs).canonical(); }

// [e1,e2]=e3
inline LieAlgebra h3() { return LieAlgebra::from_brackets({"e1", "e2", "e3"}, {{0, 1, 1, 2}}); }

// (H,E,F): [H,E]=2E, [H,F]=-2F, [E,F]=H
inline LieAlgebra sl2() {
  return LieAlgebra::from_brackets({"H", "E", "F"}, {{0, 1, 2, 1}, {0, 2, -2, 2}, {1, 2, 1, 0}});
}

inline LieAlgebra so3() {
  return LieAlgebra::from_brackets({"e1", "e2", "e3"}, {{0, 1, 1, 2}, {1, 2, 1, 0}, {2, 0, 1, 1}});
}

// [e1,e2]=e2, [e1,e3]=-e3
inline LieAlgebra e11() { return LieAlgebra::from_brackets({"e1", "e2", "e3"}, {{0, 1, 1, 1}, {0, 2, -1, 2}}); }

// sl2 acting on R^2 = span{u1,u2}: H u1 = u1, H u2 = -u2, E u2 = u1, F u1 = u2
inline LieAlgebra sl2_semi_r2() {
  return LieAlgebra::from_brackets({"H", "E", "F", "u1", "u2"},
                                   {{0, 1, 2, 1}, {0, 2, -2, 2}, {1, 2, 1, 0}, {0, 3, 1, 3}, {0, 4, -1, 4}, {1, 4, 1, 3}, {2, 3, 1, 4}});
}

// Brute-force Killing form straight from structure constants.
inline RatMatrix killing_oracle(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) b(i, j) += g.structure(i, k)[l] * g.structure(j, l)[k];
  return b;
}

}  // namespace fixtures

#pragma once

#include "orbitlie/matrix.hpp"

#include <Eigen/Dense>

namespace orbitlie {

struct SymEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k belongs to values(k)
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal max is <= tol.
/// Throws std::invalid_argument when M is not symmetric within tol.
SymEigen sym_eigen(const Eigen::MatrixXd& m, double tol = 1e-12);

/// exp(A) by scaling and squaring with a Taylor kernel.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

Eigen::MatrixXd to_eigen(const RatMatrix& m);
Eigen::VectorXd to_eigen(const RatVector& v);

}  // namespace orbitlie

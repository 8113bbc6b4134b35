#include "orbitlie/float_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orbitlie {

SymEigen sym_eigen(const Eigen::MatrixXd& m, double tol) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("sym_eigen: matrix not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol && n > 0)
    throw std::invalid_argument("sym_eigen: matrix not symmetric within tolerance");

  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  SymEigen out;
  auto off = [&] {
    double mx = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) mx = std::max(mx, std::abs(a(i, j)));
    return mx;
  };
  const int max_sweeps = 100;
  while (off() > tol) {
    if (++out.sweeps > max_sweeps) throw std::runtime_error("sym_eigen: no convergence");
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        // Rutishauser's stable rotation angle.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("expm: matrix not square");
  if (n == 0) return a;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
  const Eigen::MatrixXd b = a / std::ldexp(1.0, s);
  // ||b|| <= 1/2: 20 Taylor terms are far below double precision.
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m(i, j));
  return out;
}

Eigen::VectorXd to_eigen(const RatVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_double(v[i]);
  return out;
}

}  // namespace orbitlie

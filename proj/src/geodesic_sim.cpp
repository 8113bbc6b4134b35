#include "orbitlie/geodesic_sim.hpp"

#include "orbitlie/float_linalg.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace orbitlie {

namespace {

std::vector<Eigen::MatrixXd> ad_matrices(const LieAlgebra& q) {
  std::vector<Eigen::MatrixXd> out;
  for (std::size_t i = 0; i < q.dim(); ++i) out.push_back(to_eigen(q.ad_basis(i)));
  return out;
}

Eigen::MatrixXd combine(const std::vector<Eigen::MatrixXd>& ms, const Eigen::VectorXd& c) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(ms.at(0).rows(), ms.at(0).cols());
  for (std::size_t i = 0; i < ms.size(); ++i) out += c(static_cast<Eigen::Index>(i)) * ms[i];
  return out;
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  Eigen::VectorXd out(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

Eigen::MatrixXd unflatten(const Eigen::VectorXd& v, Eigen::Index rows) {
  const Eigen::Index cols = v.size() / rows;
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = v(i * cols + j);
  return out;
}

bool finite(const Eigen::VectorXd& v) { return v.allFinite(); }

// M = R Q, R upper triangular with positive diagonal, Q orthogonal; returns R.
Eigen::MatrixXd rq_upper(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Eigen::VectorXd u = m.row(i).transpose();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      r(i, j) = m.row(i).dot(q.row(j));
      u -= r(i, j) * q.row(j).transpose();
    }
    r(i, i) = u.norm();
    if (r(i, i) == 0) throw SimulationError("rq_upper: singular matrix");
    q.row(i) = u.transpose() / r(i, i);
  }
  return r;
}

Eigen::VectorXd solve_coords(const std::vector<Eigen::MatrixXd>& basis, const Eigen::MatrixXd& v) {
  Eigen::MatrixXd a(v.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = flatten(basis[i]);
  return a.colPivHouseholderQr().solve(flatten(v));
}

}  // namespace

GroupModel two_step_model(const HomogeneousSpaceSpec& spec) {
  const auto& g = spec.g();
  if (!is_ideal(g, spec.m())) throw SimulationError("two_step_model: m is not an ideal");
  const auto sd = series(restrict_to(g, spec.m()));
  if (!sd.nilpotent || sd.step > 2) throw SimulationError("two_step_model: m is not 2-step nilpotent");
  GroupModel out;
  out.kind = GroupModel::Kind::TwoStep;
  out.s = spec.m();
  return out;
}

GroupModel matrix_model(std::vector<Eigen::MatrixXd> matrices, Subspace s, bool rq_projection) {
  GroupModel out;
  out.kind = GroupModel::Kind::Matrix;
  out.matrices = std::move(matrices);
  out.s = std::move(s);
  out.rq_projection = rq_projection;
  if (out.matrices.size() != out.s.ambient_dim()) throw SimulationError("matrix_model: one matrix per basis vector of g");
  return out;
}

std::vector<Eigen::MatrixXd> model_rep(const GroupModel& model) {
  if (model.kind != GroupModel::Kind::Matrix) return {};
  std::vector<Eigen::MatrixXd> out;
  for (const auto& b : model.s.basis()) out.push_back(combine(model.matrices, to_eigen(b)));
  return out;
}

MetricAlgebra metric_algebra(const HomogeneousSpaceSpec& spec, const Subspace& s) {
  if (!is_subalgebra(spec.g(), s)) throw SimulationError("metric_algebra: s is not a subalgebra");
  MetricAlgebra out{restrict_to(spec.g(), s), RatMatrix(s.dim(), s.dim())};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) out.ip(i, j) = spec.inner(s.basis_vector(i), s.basis_vector(j));
  if (!is_positive_definite(out.ip)) throw SimulationError("metric_algebra: s does not project onto m");
  return out;
}

Trajectory integrate(const MetricAlgebra& ma, const RatVector& v0, double t_end, std::size_t steps,
                     const std::vector<Eigen::MatrixXd>* rep) {
  if (steps < 1) throw SimulationError("integrate: steps must be >= 1");
  const std::size_t n = ma.q.dim();
  if (v0.size() != n) throw SimulationError("integrate: v0 has wrong length");
  if (!is_positive_definite(ma.ip)) throw SimulationError("integrate: ip is not positive definite");
  if (!rep) {
    const auto sd = series(ma.q);
    if (!sd.nilpotent || sd.step > 2) throw SimulationError("integrate: exponential coordinates need step <= 2");
  } else if (rep->size() != n) {
    throw SimulationError("integrate: representation has wrong size");
  }
  const auto ads = ad_matrices(ma.q);
  const Eigen::MatrixXd gm = to_eigen(ma.ip);
  const Eigen::MatrixXd gi = gm.inverse();
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  const Eigen::Index rows = rep ? rep->at(0).rows() : 0;

  // state = (v, point)
  auto rhs = [&](const Eigen::VectorXd& s) {
    const Eigen::VectorXd v = s.head(ni);
    const Eigen::MatrixXd adv = combine(ads, v);
    Eigen::VectorXd out(s.size());
    out.head(ni) = gi * (adv.transpose() * (gm * v));
    if (rep) {
      const Eigen::MatrixXd p = unflatten(s.tail(s.size() - ni), rows);
      out.tail(s.size() - ni) = flatten(p * combine(*rep, v));
    } else {
      const Eigen::VectorXd x = s.tail(ni);
      out.tail(ni) = v + 0.5 * (combine(ads, x) * v);
    }
    return out;
  };

  Eigen::VectorXd s(ni + (rep ? rows * rows : ni));
  s.head(ni) = to_eigen(v0);
  if (rep)
    s.tail(rows * rows) = flatten(Eigen::MatrixXd::Identity(rows, rows));
  else
    s.tail(ni).setZero();

  Trajectory t;
  const double h = t_end / static_cast<double>(steps);
  auto record = [&](std::size_t k) {
    t.times.push_back(static_cast<double>(k) * h);
    t.velocities.push_back(s.head(ni));
    t.points.push_back(s.tail(s.size() - ni));
  };
  record(0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const Eigen::VectorXd k1 = rhs(s);
    const Eigen::VectorXd k2 = rhs(s + 0.5 * h * k1);
    const Eigen::VectorXd k3 = rhs(s + 0.5 * h * k2);
    const Eigen::VectorXd k4 = rhs(s + h * k3);
    s += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!finite(s)) throw SimulationError("integrate: non-finite state");
    record(k);
  }
  return t;
}

Trajectory orbit_curve(const HomogeneousSpaceSpec& spec, const GroupModel& model, const RatVector& x, const RatVector& z,
                       double t_end, std::size_t steps) {
  if (steps < 1) throw SimulationError("orbit_curve: steps must be >= 1");
  const auto& g = spec.g();
  if (!spec.m().contains(x)) throw SimulationError("orbit_curve: X is not in m");
  if (!spec.h().contains(z)) throw SimulationError("orbit_curve: Z is not in h");
  const double h = t_end / static_cast<double>(steps);
  Trajectory t;

  if (model.kind == GroupModel::Kind::TwoStep) {
    const auto& m = spec.m();
    if (!(model.s == m)) throw SimulationError("orbit_curve: unsupported group model");
    const Eigen::Index n = static_cast<Eigen::Index>(m.dim());
    const auto q = restrict_to(g, m);
    const auto ads = ad_matrices(q);
    RatMatrix d(m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto c = m.coordinates(g.bracket(z, m.basis_vector(j)));
      if (!c) throw SimulationError("orbit_curve: ad(Z) does not preserve m");
      for (std::size_t i = 0; i < m.dim(); ++i) d(i, j) = (*c)[i];
    }
    // (w, y)' = (D w, w): w(t) = exp(tD) X is the body velocity, y = int w.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    a.topLeftCorner(n, n) = to_eigen(d);
    a.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    // Exponential coordinates: x = y + 1/2 int [y, w], by 5-point Gauss-Legendre per step.
    static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
    static const double weights[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                                      0.2369268850561891};
    std::vector<Eigen::MatrixXd> en;
    for (double nd : nodes) en.push_back(expm(a * (0.5 * (nd + 1.0) * h)));
    const Eigen::MatrixXd eh = expm(a * h);
    Eigen::VectorXd st = Eigen::VectorXd::Zero(2 * n);
    st.head(n) = to_eigen(*m.coordinates(spec.m_part(x)));
    Eigen::VectorXd integral = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k <= steps; ++k) {
      t.times.push_back(static_cast<double>(k) * h);
      t.velocities.push_back(st.head(n));
      t.points.push_back(st.tail(n) + 0.5 * integral);
      if (k == steps) break;
      for (int j = 0; j < 5; ++j) {
        const Eigen::VectorXd sj = en[j] * st;
        integral += 0.5 * h * weights[j] * (combine(ads, sj.tail(n)) * sj.head(n));
      }
      st = eh * st;
      if (!finite(st)) throw SimulationError("orbit_curve: non-finite state");
    }
    return t;
  }

  const auto sb = model_rep(model);
  const Eigen::MatrixXd gen = combine(model.matrices, to_eigen(x) + to_eigen(z));
  const double delta = 1e-6;
  const Eigen::MatrixXd ep = expm(gen * delta);
  const Eigen::MatrixXd em = expm(gen * -delta);
  auto project = [&](const Eigen::MatrixXd& mt) { return model.rq_projection ? rq_upper(mt) : mt; };
  for (std::size_t k = 0; k <= steps; ++k) {
    const double tk = static_cast<double>(k) * h;
    const Eigen::MatrixXd mt = expm(gen * tk);
    const Eigen::MatrixXd p = project(mt);
    const Eigen::MatrixXd dp = (project(mt * ep) - project(mt * em)) / (2 * delta);
    const Eigen::MatrixXd v = p.inverse() * dp;
    if (!p.allFinite() || !v.allFinite()) throw SimulationError("orbit_curve: non-finite state");
    t.times.push_back(tk);
    t.points.push_back(flatten(p));
    t.velocities.push_back(solve_coords(sb, v));
  }
  return t;
}

Deviation compare(const Trajectory& a, const Trajectory& b) {
  if (a.times.size() != b.times.size()) throw SimulationError("compare: grid mismatch");
  Deviation d;
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    if (std::abs(a.times[k] - b.times[k]) > 1e-12) throw SimulationError("compare: grid mismatch");
    if (a.points[k].size() != b.points[k].size() || a.velocities[k].size() != b.velocities[k].size())
      throw SimulationError("compare: coordinate mismatch");
    d.points = std::max(d.points, (a.points[k] - b.points[k]).lpNorm<Eigen::Infinity>());
    d.velocities = std::max(d.velocities, (a.velocities[k] - b.velocities[k]).lpNorm<Eigen::Infinity>());
  }
  return d;
}

double speed_drift(const Trajectory& t, const RatMatrix& ip) {
  const Eigen::MatrixXd gm = to_eigen(ip);
  double drift = 0;
  const double s0 = std::sqrt(t.velocities.at(0).dot(gm * t.velocities[0]));
  for (const auto& v : t.velocities) drift = std::max(drift, std::abs(std::sqrt(v.dot(gm * v)) - s0));
  return drift;
}

void write_trajectory(std::ostream& os, const Trajectory& t) {
  const auto np = t.points.empty() ? 0 : t.points[0].size();
  const auto nv = t.velocities.empty() ? 0 : t.velocities[0].size();
  os << "# t";
  for (Eigen::Index i = 0; i < np; ++i) os << " x" << i + 1;
  for (Eigen::Index i = 0; i < nv; ++i) os << " v" << i + 1;
  os << "\n";
  char buf[64];
  for (std::size_t k = 0; k < t.times.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", t.times[k]);
    os << buf;
    for (Eigen::Index i = 0; i < np; ++i) {
      std::snprintf(buf, sizeof buf, " %.17g", t.points[k](i));
      os << buf;
    }
    for (Eigen::Index i = 0; i < nv; ++i) {
      std::snprintf(buf, sizeof buf, " %.17g", t.velocities[k](i));
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace orbitlie

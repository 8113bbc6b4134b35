#pragma once

#include "orbitlie/metric_space.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <stdexcept>

namespace orbitlie {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Points are exponential coordinates (2-step) or row-major matrix entries (matrix groups).
/// Velocities are body-frame coordinates in the basis of the simply transitive algebra.
struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;
  std::vector<Eigen::VectorXd> velocities;
};

/// Left-invariant metric on a simply transitive group; ip is the Gram matrix on q's basis.
struct MetricAlgebra {
  LieAlgebra q;
  RatMatrix ip;
};

/// How points of the simply transitive group S are represented.
struct GroupModel {
  enum class Kind { TwoStep, Matrix };
  Kind kind = Kind::TwoStep;
  Subspace s;                             // simply transitive subalgebra, g coordinates
  std::vector<Eigen::MatrixXd> matrices;  // images of the g basis (Matrix only)
  bool rq_projection = false;             // S is upper triangular and G = S K with K orthogonal
};

/// S = m; requires m to be a 2-step nilpotent ideal.
GroupModel two_step_model(const HomogeneousSpaceSpec& spec);
GroupModel matrix_model(std::vector<Eigen::MatrixXd> matrices, Subspace s, bool rq_projection);

/// q = s with the metric transported from m along the projection s -> m.
MetricAlgebra metric_algebra(const HomogeneousSpaceSpec& spec, const Subspace& s);

/// Body velocity obeys v' = ad*_v v with <ad*_v w, u> = <w, [v,u]>.
/// rep: matrices of q's basis for the matrix model; exponential coordinates otherwise (q of step <= 2).
Trajectory integrate(const MetricAlgebra& ma, const RatVector& v0, double t_end, std::size_t steps,
                     const std::vector<Eigen::MatrixXd>* rep = nullptr);

/// exp(t(X+Z)) projected to S on the uniform grid t_k = k t_end / steps.
Trajectory orbit_curve(const HomogeneousSpaceSpec& spec, const GroupModel& model, const RatVector& x, const RatVector& z,
                       double t_end, std::size_t steps);

/// Matrices of the basis of s under the model.
std::vector<Eigen::MatrixXd> model_rep(const GroupModel& model);

struct Deviation {
  double points = 0;
  double velocities = 0;
  double max() const { return std::max(points, velocities); }
};
Deviation compare(const Trajectory& a, const Trajectory& b);

/// max_t | |v(t)| - |v(0)| | for the metric ip.
double speed_drift(const Trajectory& t, const RatMatrix& ip);

/// Columns: t, point coordinates, velocity coordinates; whitespace separated, one line per time.
void write_trajectory(std::ostream& os, const Trajectory& t);

}  // namespace orbitlie

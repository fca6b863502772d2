#pragma once

#include <Eigen/Core>

namespace sqmap {
namespace opt {

// Standard Adam with bias correction. The caller applies the returned step
// to its parameters (needed here because the rotation block updates a
// manifold, not a flat vector).
class Adam {
 public:
  Adam(int dim, double beta1, double beta2, double epsilon);

  // Returns -lr .* m_hat ./ (sqrt(v_hat) + epsilon) and advances the moment
  // state. lr is a per-coordinate learning rate vector.
  // Throws std::invalid_argument on a non-finite gradient.
  Eigen::VectorXd step(const Eigen::VectorXd& grad, const Eigen::VectorXd& lr);

  int iterations() const { return t_; }

 private:
  double beta1_, beta2_, epsilon_;
  int t_ = 0;
  Eigen::VectorXd m_, v_;
};

}  // namespace opt
}  // namespace sqmap

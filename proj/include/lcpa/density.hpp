#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "lcpa/params.hpp"

namespace lcpa {

/// Atomic 3x3 density matrix, indices 0..2 for levels |1>..|3>.
class DensityMatrix3 {
 public:
  DensityMatrix3() : rho_(Eigen::Matrix3cd::Zero()) { rho_(0, 0) = 1.0; }
  explicit DensityMatrix3(const Eigen::Matrix3cd& rho) : rho_(rho) {}

  /// Builds from populations and upper-triangle coherences; the lower triangle
  /// follows from Hermiticity.
  static DensityMatrix3 from_parts(double p11, double p22, double p33, cplx r12, cplx r13,
                                   cplx r23);

  /// 1-based element access, rho_mn.
  cplx operator()(int m, int n) const { return rho_(m - 1, n - 1); }
  const Eigen::Matrix3cd& matrix() const { return rho_; }

  double population(int m) const { return rho_(m - 1, m - 1).real(); }
  double trace() const { return rho_.trace().real(); }

  /// Returns a description of the first violated invariant, if any.
  std::optional<std::string> check(double herm_tol = 1e-10, double trace_tol = 1e-10,
                                   double pop_tol = 1e-8) const;

 private:
  Eigen::Matrix3cd rho_;
};

}  // namespace lcpa

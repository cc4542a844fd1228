// Copyright 2026 The qframes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qframes/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qframes/rng.hpp"

namespace qframes {

bool is_rotation(const Rotation& r, double tol) {
  if (!r.allFinite()) return false;
  const double ortho =
      (r.transpose() * r - Rotation::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

Rotation rotation_from_quaternion(double w, double x, double y, double z) {
  Eigen::Quaterniond q(w, x, y, z);
  if (q.norm() < 1e-12) {
    throw std::invalid_argument("quaternion must be nonzero");
  }
  q.normalize();
  return q.toRotationMatrix();
}

Eigen::Vector4d quaternion_of(const Rotation& r) {
  Eigen::Quaterniond q(r);
  q.normalize();
  if (q.w() < 0.0) q.coeffs() *= -1.0;
  return Eigen::Vector4d(q.w(), q.x(), q.y(), q.z());
}

Rotation axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double norm = axis.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("rotation axis must be nonzero");
  }
  return Eigen::AngleAxisd(angle, axis / norm).toRotationMatrix();
}

Rotation align_z_to(const Eigen::Vector3d& target) {
  const double norm = target.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("target direction must be nonzero");
  }
  const Eigen::Vector3d t = target / norm;
  return Eigen::Quaterniond::FromTwoVectors(Eigen::Vector3d::UnitZ(), t)
      .toRotationMatrix();
}

Rotation random_rotation(Rng& rng) {
  Eigen::Vector4d q;
  do {
    for (int i = 0; i < 4; ++i) q[i] = rng.normal();
  } while (q.norm() < 1e-6);
  q.normalize();
  return rotation_from_quaternion(q[0], q[1], q[2], q[3]);
}

std::vector<Eigen::Vector3d> fibonacci_sphere(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_sphere: n must be >= 1");
  std::vector<Eigen::Vector3d> points;
  points.reserve(n);
  const double golden_angle =
      std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = (n == 1) ? 1.0 : 1.0 - 2.0 * i / (n - 1.0);
    const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    points.emplace_back(radius * std::cos(phi), radius * std::sin(phi), z);
  }
  return points;
}

std::vector<Rotation> so3_grid(int n_axes, int n_angles) {
  if (n_axes < 1 || n_angles < 1) {
    throw std::invalid_argument("so3_grid: grid sizes must be >= 1");
  }
  const auto axes = fibonacci_sphere(n_axes);
  std::vector<Rotation> rotations;
  rotations.reserve(static_cast<std::size_t>(n_axes) * n_angles);
  for (const auto& axis : axes) {
    for (int j = 0; j < n_angles; ++j) {
      const double angle =
          2.0 * std::numbers::pi * (j + 0.5) / n_angles;
      rotations.push_back(axis_angle(axis, angle));
    }
  }
  return rotations;
}

}  // namespace qframes

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

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qframes {

class Rng;

using Rotation = Eigen::Matrix3d;

bool is_rotation(const Rotation& r, double tol = 1e-12);

/// Rotation from a (not necessarily normalized) quaternion (w, x, y, z).
Rotation rotation_from_quaternion(double w, double x, double y, double z);

/// Unit quaternion (w, x, y, z) of a rotation, with w >= 0.
Eigen::Vector4d quaternion_of(const Rotation& r);

Rotation axis_angle(const Eigen::Vector3d& axis, double angle);

/// Some rotation mapping +z to the given direction.
Rotation align_z_to(const Eigen::Vector3d& target);

/// Haar-ish random rotation from four normal deviates (quaternion method).
Rotation random_rotation(Rng& rng);

/// n approximately evenly spread unit vectors (golden-angle spiral).
std::vector<Eigen::Vector3d> fibonacci_sphere(int n);

/// Deterministic low-discrepancy rotation grid: Fibonacci-sphere axes times
/// a midpoint-rule grid of in-plane angles.
std::vector<Rotation> so3_grid(int n_axes, int n_angles);

}  // namespace qframes

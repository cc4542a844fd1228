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

/// A d x d Hermitian matrix. Construction symmetrizes away Hermiticity drift
/// below 1e-12 and rejects anything larger, so downstream arithmetic can rely
/// on exact Hermiticity.
class HermitianOp {
 public:
  explicit HermitianOp(Eigen::MatrixXcd matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

  static HermitianOp identity(int d);
  static HermitianOp zero(int d);

  HermitianOp operator+(const HermitianOp& other) const;
  HermitianOp operator-(const HermitianOp& other) const;
  HermitianOp operator*(double scale) const;

 private:
  Eigen::MatrixXcd matrix_;
};

inline HermitianOp operator*(double scale, const HermitianOp& op) {
  return op * scale;
}

/// Hilbert-Schmidt inner product tr(a b); real for Hermitian arguments.
double hs_inner(const HermitianOp& a, const HermitianOp& b);
double hs_norm_sq(const HermitianOp& a);

/// An orthonormal basis of the d^2-dimensional real space of Hermitian
/// operators on C^d. The first element is I/sqrt(d); the remaining d^2 - 1
/// elements are traceless and span the traceless subspace.
class HermBasis {
 public:
  explicit HermBasis(std::vector<HermitianOp> elements);

  int dim() const { return elements_.front().dim(); }           // d
  int size() const { return static_cast<int>(elements_.size()); }  // d^2
  const HermitianOp& element(int i) const { return elements_[i]; }

 private:
  std::vector<HermitianOp> elements_;
};

/// {I, sigma_x, sigma_y, sigma_z} / sqrt(2), the d = 2 case of
/// gellmann_basis.
HermBasis pauli_basis();

/// Normalized generalized Gell-Mann construction for any d >= 2: I/sqrt(d),
/// then for each index pair the symmetric and antisymmetric off-diagonal
/// elements, then the diagonal elements.
HermBasis gellmann_basis(int d);

using OpCoords = Eigen::VectorXd;

/// Coordinates c_i = <<B_i | v>>; an isometry onto R^{d^2}.
OpCoords to_coords(const HermitianOp& v, const HermBasis& basis);
HermitianOp from_coords(const OpCoords& c, const HermBasis& basis);

struct IdentityDecomposition {
  HermitianOp traceless;  // v - (tr(v)/d) I
  double trace;
};

IdentityDecomposition project_identity_component(const HermitianOp& v);

struct PsdReport {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
};

PsdReport psd_check(const HermitianOp& v, double tol = 1e-10);

/// rho = (I + r . sigma)/2 for a Bloch vector with ||r|| <= 1.
HermitianOp density_from_bloch(const Eigen::Vector3d& r);

/// Pure qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, i.e. the
/// density operator with unit Bloch vector
/// (sin t cos p, sin t sin p, cos t).
HermitianOp pure_state(double theta, double phi = 0.0);

/// Bloch vector (tr(sigma_i rho)) of a d = 2 operator.
Eigen::Vector3d bloch_vector(const HermitianOp& rho);

/// Checks trace 1 and positive semidefiniteness within tol.
bool is_density(const HermitianOp& op, double tol = 1e-10);

}  // namespace qframes

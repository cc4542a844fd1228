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

#include "qframes/herm_space.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace qframes {

namespace {

using Complex = std::complex<double>;

constexpr double kHermTol = 1e-12;

}  // namespace

HermitianOp::HermitianOp(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("operator must be a non-empty square matrix");
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("operator entries must be finite");
  }
  const double drift =
      (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (drift > kHermTol * std::max(1.0, matrix_.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
}

HermitianOp HermitianOp::identity(int d) {
  return HermitianOp(Eigen::MatrixXcd::Identity(d, d));
}

HermitianOp HermitianOp::zero(int d) {
  return HermitianOp(Eigen::MatrixXcd::Zero(d, d));
}

HermitianOp HermitianOp::operator+(const HermitianOp& other) const {
  return HermitianOp(matrix_ + other.matrix_);
}

HermitianOp HermitianOp::operator-(const HermitianOp& other) const {
  return HermitianOp(matrix_ - other.matrix_);
}

HermitianOp HermitianOp::operator*(double scale) const {
  return HermitianOp(scale * matrix_);
}

double hs_inner(const HermitianOp& a, const HermitianOp& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  const Complex value = (a.matrix() * b.matrix()).trace();
  return value.real();
}

double hs_norm_sq(const HermitianOp& a) { return hs_inner(a, a); }

HermBasis::HermBasis(std::vector<HermitianOp> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("basis must be non-empty");
  }
  const int d = elements_.front().dim();
  if (static_cast<int>(elements_.size()) != d * d) {
    throw std::invalid_argument("basis must contain d^2 elements");
  }
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  if ((elements_.front().matrix() -
       inv_sqrt_d * Eigen::MatrixXcd::Identity(d, d))
          .cwiseAbs()
          .maxCoeff() > kHermTol) {
    throw std::invalid_argument("basis must start with I/sqrt(d)");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].dim() != d) {
      throw std::invalid_argument("basis elements must share one dimension");
    }
    if (i > 0 && std::abs(elements_[i].trace()) > kHermTol) {
      throw std::invalid_argument("basis tail must be traceless");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(hs_inner(elements_[i], elements_[j]) - expected) >
          kHermTol) {
        throw std::invalid_argument("basis is not orthonormal");
      }
    }
  }
}

HermBasis pauli_basis() { return gellmann_basis(2); }

HermBasis gellmann_basis(int d) {
  if (d < 2) {
    throw std::invalid_argument("basis requires d >= 2");
  }
  std::vector<HermitianOp> elements;
  elements.reserve(static_cast<std::size_t>(d) * d);

  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  elements.push_back(
      HermitianOp(inv_sqrt_d * Eigen::MatrixXcd::Identity(d, d)));

  const double inv_sqrt_2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(j, k) = inv_sqrt_2;
      sym(k, j) = inv_sqrt_2;
      elements.push_back(HermitianOp(std::move(sym)));

      Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(d, d);
      anti(j, k) = Complex(0.0, -inv_sqrt_2);
      anti(k, j) = Complex(0.0, inv_sqrt_2);
      elements.push_back(HermitianOp(std::move(anti)));
    }
  }
  for (int l = 1; l < d; ++l) {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = scale;
    diag(l, l) = -static_cast<double>(l) * scale;
    elements.push_back(HermitianOp(std::move(diag)));
  }
  // For d = 2 this ordering is exactly I, sigma_x, sigma_y, sigma_z / sqrt 2.
  return HermBasis(std::move(elements));
}

OpCoords to_coords(const HermitianOp& v, const HermBasis& basis) {
  if (v.dim() != basis.dim()) {
    throw std::invalid_argument("to_coords: dimension mismatch");
  }
  OpCoords c(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    c[i] = hs_inner(basis.element(i), v);
  }
  return c;
}

HermitianOp from_coords(const OpCoords& c, const HermBasis& basis) {
  if (c.size() != basis.size()) {
    throw std::invalid_argument("from_coords: coordinate count mismatch");
  }
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.size(); ++i) {
    acc += c[i] * basis.element(i).matrix();
  }
  return HermitianOp(std::move(acc));
}

IdentityDecomposition project_identity_component(const HermitianOp& v) {
  const double tau = v.trace();
  const double d = static_cast<double>(v.dim());
  HermitianOp traceless =
      v - HermitianOp::identity(v.dim()) * (tau / d);
  return IdentityDecomposition{std::move(traceless), tau};
}

PsdReport psd_check(const HermitianOp& v, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      v.matrix(), Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  return PsdReport{min_eig >= -tol, min_eig};
}

HermitianOp density_from_bloch(const Eigen::Vector3d& r) {
  if (r.norm() > 1.0 + 1e-12) {
    throw std::invalid_argument("Bloch vector lies outside the unit ball");
  }
  Eigen::MatrixXcd m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + r.z()), 0.0);
  m(0, 1) = Complex(0.5 * r.x(), -0.5 * r.y());
  m(1, 0) = Complex(0.5 * r.x(), 0.5 * r.y());
  m(1, 1) = Complex(0.5 * (1.0 - r.z()), 0.0);
  return HermitianOp(std::move(m));
}

HermitianOp pure_state(double theta, double phi) {
  const double st = std::sin(theta);
  return density_from_bloch(
      Eigen::Vector3d(st * std::cos(phi), st * std::sin(phi),
                      std::cos(theta)));
}

Eigen::Vector3d bloch_vector(const HermitianOp& rho) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("bloch_vector requires a qubit operator");
  }
  const auto& m = rho.matrix();
  return Eigen::Vector3d(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
                         (m(0, 0) - m(1, 1)).real());
}

bool is_density(const HermitianOp& op, double tol) {
  if (std::abs(op.trace() - 1.0) > tol) return false;
  return psd_check(op, tol).is_psd;
}

}  // namespace qframes

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

#include "qframes/coord_frame.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qframes/rng.hpp"

namespace qframes {

namespace {

constexpr double kSingularRatio = 1e-12;

// Eigendecomposition of the frame operator, shared by the dual constructions.
struct FrameOperatorEig {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  explicit FrameOperatorEig(const CoordFrame& frame)
      : solver(frame.frame_operator()) {
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("frame operator eigendecomposition failed");
    }
  }
  double min_eig() const { return solver.eigenvalues().minCoeff(); }
  double max_eig() const { return solver.eigenvalues().maxCoeff(); }
  Eigen::MatrixXd inverse() const {
    return solver.eigenvectors() *
           solver.eigenvalues().cwiseInverse().asDiagonal() *
           solver.eigenvectors().transpose();
  }
};

}  // namespace

CoordFrame::CoordFrame(std::vector<CoordVector> vectors) {
  if (vectors.empty()) {
    throw std::invalid_argument("frame requires at least one vector");
  }
  const auto n = vectors.front().size();
  if (n == 0) {
    throw std::invalid_argument("frame vectors must be non-empty");
  }
  columns_.resize(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) {
      throw std::invalid_argument("frame vectors must share one dimension");
    }
    if (!vectors[k].allFinite()) {
      throw std::invalid_argument("frame vectors must be finite");
    }
    columns_.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  if (columns_.cols() < columns_.rows()) {
    throw std::invalid_argument("frame needs at least N vectors in R^N");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns_.transpose());
  if (qr.rank() < n) {
    throw std::invalid_argument("frame vectors do not span the space");
  }
}

DualFrame::DualFrame(Eigen::MatrixXd synthesis, std::string note)
    : synthesis_(std::move(synthesis)), note_(std::move(note)) {
  if (!synthesis_.allFinite()) {
    throw std::invalid_argument("dual frame vectors must be finite");
  }
}

NoiseSpec NoiseSpec::uncorrelated(Eigen::VectorXd variances) {
  if ((variances.array() < 0.0).any() || !variances.allFinite()) {
    throw std::invalid_argument("noise variances must be finite and >= 0");
  }
  return NoiseSpec{std::move(variances), std::nullopt};
}

NoiseSpec NoiseSpec::correlated(Eigen::MatrixXd covariance) {
  if (covariance.rows() != covariance.cols() || !covariance.allFinite()) {
    throw std::invalid_argument("covariance must be a finite square matrix");
  }
  const double scale = covariance.cwiseAbs().maxCoeff();
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, scale)) {
    throw std::invalid_argument("covariance must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance);
  if (eig.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument("covariance must be positive semidefinite");
  }
  NoiseSpec spec;
  spec.variances = covariance.diagonal();
  spec.covariance = std::move(covariance);
  return spec;
}

Eigen::MatrixXd NoiseSpec::cov(int m) const {
  if (covariance) {
    if (covariance->rows() != m) {
      throw std::invalid_argument("noise covariance dimension mismatch");
    }
    return *covariance;
  }
  if (variances.size() != m) {
    throw std::invalid_argument("noise variance dimension mismatch");
  }
  return variances.asDiagonal();
}

CoordVector analyze(const CoordFrame& frame, const CoordVector& v) {
  if (v.size() != frame.dim()) {
    throw std::invalid_argument("analyze: vector dimension mismatch");
  }
  return frame.analysis_matrix() * v;
}

CoordVector synthesize(const CoordFrame& frame, const CoordVector& w) {
  if (w.size() != frame.size()) {
    throw std::invalid_argument("synthesize: coefficient dimension mismatch");
  }
  return frame.synthesis_matrix() * w;
}

FrameBounds frame_bounds(const CoordFrame& frame) {
  FrameOperatorEig eig(frame);
  FrameBounds bounds{eig.min_eig(), eig.max_eig()};
  if (bounds.lower <= kSingularRatio * bounds.upper) {
    throw std::runtime_error("frame operator is numerically rank-deficient");
  }
  return bounds;
}

DualFrame canonical_dual(const CoordFrame& frame) {
  FrameOperatorEig eig(frame);
  if (eig.min_eig() <= kSingularRatio * eig.max_eig()) {
    throw std::runtime_error(
        "canonical dual: frame operator numerically singular");
  }
  return DualFrame(eig.inverse() * frame.synthesis_matrix());
}

DualFrame random_dual(const CoordFrame& frame, std::uint64_t seed) {
  const int m = frame.size();
  const int n = frame.dim();
  DualFrame canonical = canonical_dual(frame);
  if (m == n) {
    return DualFrame(canonical.synthesis_matrix(),
                     "dual frame is unique (M = N); canonical dual returned");
  }
  FrameOperatorEig eig(frame);
  const Eigen::MatrixXd a = frame.analysis_matrix();
  const Eigen::MatrixXd projector =
      Eigen::MatrixXd::Identity(m, m) - a * eig.inverse() * a.transpose();
  Rng rng(seed);
  Eigen::MatrixXd g(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = rng.normal();
  }
  return DualFrame(canonical.synthesis_matrix() + g * projector);
}

CoordVector reconstruct(const DualFrame& dual, const CoordVector& observed) {
  if (observed.size() != dual.size()) {
    throw std::invalid_argument("reconstruct: coefficient dimension mismatch");
  }
  return dual.synthesis_matrix() * observed;
}

double expected_recon_error(const CoordFrame& frame, const DualFrame& dual,
                            const NoiseSpec& noise) {
  if (dual.size() != frame.size() || dual.dim() != frame.dim()) {
    throw std::invalid_argument("expected_recon_error: frame/dual mismatch");
  }
  const Eigen::MatrixXd cov = noise.cov(frame.size());
  const Eigen::MatrixXd gram =
      dual.synthesis_matrix().transpose() * dual.synthesis_matrix();
  return cov.cwiseProduct(gram).sum();
}

EntfReport entf_check(const CoordFrame& frame, double tol) {
  EntfReport report;
  const FrameBounds bounds = frame_bounds(frame);
  report.lower = bounds.lower;
  report.upper = bounds.upper;
  report.is_tight = bounds.is_tight(tol);

  const int m = frame.size();
  double norm_sum = 0.0;
  Eigen::VectorXd norms(m);
  for (int k = 0; k < m; ++k) {
    norms[k] = frame.vector(k).norm();
    norm_sum += norms[k];
  }
  report.common_norm = norm_sum / m;
  report.norm_spread =
      (norms.array() - report.common_norm).abs().maxCoeff();
  report.is_equal_norm =
      report.norm_spread <= tol * std::max(1.0, report.common_norm);
  report.cn_ma2_residual = std::abs(
      report.lower * frame.dim() - m * report.common_norm * report.common_norm);
  return report;
}

}  // namespace qframes

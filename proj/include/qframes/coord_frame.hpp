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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qframes {

using CoordVector = Eigen::VectorXd;

/// A finite frame for R^N: M >= N vectors that span the space. Vectors are
/// stored explicitly; the analysis/synthesis matrices are materialized on
/// demand (M and N are small throughout).
///
/// Conventions: the analysis operator A is the M x N matrix whose k-th row is
/// f_k^T, so (A v)_k = <f_k, v>. The synthesis operator is A^T. The frame
/// operator is S = A^T A = sum_k f_k f_k^T.
class CoordFrame {
 public:
  explicit CoordFrame(std::vector<CoordVector> vectors);

  int size() const { return static_cast<int>(columns_.cols()); }  // M
  int dim() const { return static_cast<int>(columns_.rows()); }   // N

  CoordVector vector(int k) const { return columns_.col(k); }

  Eigen::MatrixXd analysis_matrix() const { return columns_.transpose(); }
  Eigen::MatrixXd synthesis_matrix() const { return columns_; }
  Eigen::MatrixXd frame_operator() const { return columns_ * columns_.transpose(); }

 private:
  Eigen::MatrixXd columns_;  // N x M, column k = f_k
};

/// Tightest constants 0 < C <= D with C ||v||^2 <= ||A v||^2 <= D ||v||^2,
/// i.e. the extreme eigenvalues of the frame operator.
struct FrameBounds {
  double lower = 0.0;  // C
  double upper = 0.0;  // D

  bool is_tight(double tol = 1e-10) const {
    return (upper - lower) <= tol * upper;
  }
};

/// A dual frame of a source frame, represented by its synthesis matrix
/// L (N x M, column k = dual vector k). Satisfies L A = I on R^N.
class DualFrame {
 public:
  DualFrame(Eigen::MatrixXd synthesis, std::string note = {});

  int size() const { return static_cast<int>(synthesis_.cols()); }
  int dim() const { return static_cast<int>(synthesis_.rows()); }

  CoordVector vector(int k) const { return synthesis_.col(k); }
  const Eigen::MatrixXd& synthesis_matrix() const { return synthesis_; }
  const std::string& note() const { return note_; }

 private:
  Eigen::MatrixXd synthesis_;
  std::string note_;
};

/// Second-order model for additive error on the frame coefficients: either
/// per-coefficient variances (pairwise uncorrelated) or a full covariance
/// matrix, which takes precedence when present.
struct NoiseSpec {
  Eigen::VectorXd variances;
  std::optional<Eigen::MatrixXd> covariance;

  static NoiseSpec uncorrelated(Eigen::VectorXd variances);
  static NoiseSpec correlated(Eigen::MatrixXd covariance);

  /// Dense M x M covariance (diagonal when only variances are given).
  Eigen::MatrixXd cov(int m) const;
};

struct EntfReport {
  bool is_tight = false;
  bool is_equal_norm = false;
  double lower = 0.0;            // C
  double upper = 0.0;            // D
  double common_norm = 0.0;      // a (mean vector norm)
  double norm_spread = 0.0;      // max_k | ||f_k|| - a |
  double cn_ma2_residual = 0.0;  // | C N - M a^2 |
};

/// Frame coefficients a_k = <f_k, v>.
CoordVector analyze(const CoordFrame& frame, const CoordVector& v);

/// sum_k w_k f_k.
CoordVector synthesize(const CoordFrame& frame, const CoordVector& w);

FrameBounds frame_bounds(const CoordFrame& frame);

/// The dual whose synthesis matrix is the Moore-Penrose pseudoinverse of the
/// analysis matrix, computed through the N x N frame operator. Throws if the
/// frame operator is numerically singular (lambda_min < 1e-12 lambda_max).
DualFrame canonical_dual(const CoordFrame& frame);

/// A random dual: L = L_can + G P, with G an N x M standard-normal matrix
/// (row-major fill from the seed) and P the orthogonal projector onto
/// range(A)^perp. When M = N the dual is unique and the canonical dual is
/// returned with an explanatory note.
DualFrame random_dual(const CoordFrame& frame, std::uint64_t seed);

/// Applies the dual's synthesis matrix to an observed coefficient vector.
CoordVector reconstruct(const DualFrame& dual, const CoordVector& observed);

/// Exact expected squared reconstruction error
/// E[ ||L e||^2 ] = sum_jk Cov(e_j, e_k) <l_j, l_k>.
double expected_recon_error(const CoordFrame& frame, const DualFrame& dual,
                            const NoiseSpec& noise);

/// Reports tightness and norm equality, and the residual of C N = M a^2.
EntfReport entf_check(const CoordFrame& frame, double tol = 1e-10);

}  // namespace qframes

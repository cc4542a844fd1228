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
#include <optional>
#include <string>
#include <vector>

#include "qframes/herm_space.hpp"
#include "qframes/rotation.hpp"

namespace qframes {

/// Qubit coefficient constraints of a POVM in the normalized Pauli basis:
/// per-element trace bounds and positivity cone, trace-sum and
/// traceless-component-sum constraints across the collection.
struct QubitCoeffReport {
  Eigen::MatrixXd coeffs;      // M x 4, row k = coordinates of E_k
  bool c0_range_ok = false;    // 0 <= c_k0 <= d for every k
  bool cone_ok = false;        // c_k1^2 + c_k2^2 + c_k3^2 <= c_k0^2
  double c0_sum = 0.0;         // should equal d / sqrt(2)
  Eigen::Vector3d ci_sums;     // should vanish
};

struct PovmValidationReport {
  bool valid = false;
  std::vector<double> element_min_eigs;
  double completeness_residual = 0.0;  // Hilbert-Schmidt norm of sum - I
  double trace_sum = 0.0;
  std::optional<QubitCoeffReport> qubit_coeffs;  // only for d = 2
};

/// Report-style check; accepts arbitrary element lists, including invalid
/// ones.
PovmValidationReport validate_povm(const std::vector<HermitianOp>& elements,
                                   double tol = 1e-10);

/// A positive operator-valued measure: PSD Hermitian elements summing to the
/// identity. The constructor enforces both conditions.
class Povm {
 public:
  explicit Povm(std::vector<HermitianOp> elements, double tol = 1e-10);

  int size() const { return static_cast<int>(elements_.size()); }  // M
  int dim() const { return elements_.front().dim(); }              // d
  const HermitianOp& element(int k) const { return elements_[k]; }
  const std::vector<HermitianOp>& elements() const { return elements_; }

 private:
  std::vector<HermitianOp> elements_;
};

/// Outcome probabilities p(k) = tr(E_k rho), clamped to [0, 1].
Eigen::VectorXd probabilities(const Povm& povm, const HermitianOp& rho);

/// The traceless representations S_k = E_k/tr(E_k) - I/d and
/// Q_k = sqrt(tr(E_k)) S_k.
struct TracelessRep {
  std::vector<HermitianOp> s_ops;
  std::vector<HermitianOp> q_ops;
  Eigen::VectorXd traces;
};

TracelessRep traceless_rep(const Povm& povm);

struct IcReport {
  bool is_ic = false;
  int rank = 0;
  bool minimal = false;       // IC with exactly d^2 elements
  bool overcomplete = false;  // IC with more than d^2 elements
};

/// Informational completeness as a rank test on the M x d^2 stack of element
/// coordinates.
IcReport ic_check(const Povm& povm);

struct TightIcReport {
  bool is_tight_ic = false;
  double frame_bound = 0.0;  // C
  double residual = 0.0;     // max deviation of the Q frame operator from C I
};

/// Builds the frame operator of {Q_k} on the traceless subspace and compares
/// it with C I.
TightIcReport tight_ic_check(const Povm& povm, double tol = 1e-10);

struct EntfParams {
  double frame_bound = 0.0;  // C
  double common_norm = 0.0;  // a
  int count = 0;             // M
  int space_dim = 0;         // N = d^2 - 1
  double cn_ma2_residual = 0.0;
};

/// Frame-bound and norm parameters of the Q_k family; rejects collections
/// that are not equal-norm or not tight within tol.
EntfParams entf_params(const TracelessRep& rep, double tol = 1e-8);

/// Coordinates of the Q_k in the traceless tail of the Gell-Mann basis
/// (M x (d^2 - 1)); the working representation for all frame computations.
Eigen::MatrixXd q_frame_coords(const TracelessRep& rep);

// --- Platonic qubit POVM families ---

enum class Solid {
  kAntipodalPair,  // M = 2, degenerate (a standard projective measurement)
  kTetrahedron,    // M = 4
  kOctahedron,     // M = 6
  kCube,           // M = 8
  kIcosahedron,    // M = 12
};

int solid_vertex_count(Solid solid);
const char* solid_name(Solid solid);
Solid solid_from_name(const std::string& name);
Solid solid_from_vertex_count(int m);

/// Canonical unit-vertex table of a solid (fixed ordering; antipodal pair is
/// +z, -z; tetrahedron leads with +z).
std::vector<Eigen::Vector3d> canonical_vertices(Solid solid);

struct PlatonicSpec {
  Solid solid = Solid::kTetrahedron;
  Rotation rotation = Rotation::Identity();
  std::vector<double> weights;  // element traces; empty means uniform 2/M
};

/// E_k = w_k (I + n_k . sigma)/2 with n_k the rotated canonical vertices and
/// w_k = tr(E_k) (default 2/M). Throws if the weights break positivity or
/// completeness.
Povm platonic_povm(const PlatonicSpec& spec);

}  // namespace qframes

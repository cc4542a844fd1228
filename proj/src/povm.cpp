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

#include "qframes/povm.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qframes {

namespace {

constexpr double kPsdTol = 1e-10;

Eigen::MatrixXd coordinate_stack(const std::vector<HermitianOp>& ops) {
  const int d = ops.front().dim();
  const HermBasis basis = gellmann_basis(d);
  Eigen::MatrixXd stack(static_cast<int>(ops.size()), d * d);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    stack.row(static_cast<int>(k)) = to_coords(ops[k], basis).transpose();
  }
  return stack;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = 1e-10 * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++rank;
  }
  return rank;
}

}  // namespace

PovmValidationReport validate_povm(const std::vector<HermitianOp>& elements,
                                   double tol) {
  if (elements.empty()) {
    throw std::invalid_argument("POVM requires at least one element");
  }
  const int d = elements.front().dim();
  for (const auto& e : elements) {
    if (e.dim() != d) {
      throw std::invalid_argument("POVM elements must share one dimension");
    }
  }

  PovmValidationReport report;
  HermitianOp sum = HermitianOp::zero(d);
  bool psd_ok = true;
  for (const auto& e : elements) {
    const PsdReport psd = psd_check(e, tol);
    report.element_min_eigs.push_back(psd.min_eigenvalue);
    psd_ok = psd_ok && psd.is_psd;
    sum = sum + e;
    report.trace_sum += e.trace();
  }
  const HermitianOp defect = sum - HermitianOp::identity(d);
  report.completeness_residual = std::sqrt(std::max(0.0, hs_norm_sq(defect)));
  report.valid = psd_ok && report.completeness_residual <= tol;

  if (d == 2) {
    QubitCoeffReport qr;
    const HermBasis basis = pauli_basis();
    qr.coeffs.resize(static_cast<int>(elements.size()), 4);
    qr.c0_range_ok = true;
    qr.cone_ok = true;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const OpCoords c = to_coords(elements[k], basis);
      qr.coeffs.row(static_cast<int>(k)) = c.transpose();
      if (c[0] < -tol || c[0] > 2.0 + tol) qr.c0_range_ok = false;
      if (c.tail(3).squaredNorm() > c[0] * c[0] + tol) qr.cone_ok = false;
    }
    qr.c0_sum = qr.coeffs.col(0).sum();
    qr.ci_sums = qr.coeffs.rightCols(3).colwise().sum().transpose();
    report.qubit_coeffs = std::move(qr);
  }
  return report;
}

Povm::Povm(std::vector<HermitianOp> elements, double tol)
    : elements_(std::move(elements)) {
  const PovmValidationReport report = validate_povm(elements_, tol);
  if (!report.valid) {
    throw std::invalid_argument(
        "elements do not form a POVM (PSD or completeness violated)");
  }
}

Eigen::VectorXd probabilities(const Povm& povm, const HermitianOp& rho) {
  if (rho.dim() != povm.dim()) {
    throw std::invalid_argument("probabilities: dimension mismatch");
  }
  if (!is_density(rho, 1e-8)) {
    throw std::invalid_argument("probabilities: rho is not a density operator");
  }
  Eigen::VectorXd p(povm.size());
  for (int k = 0; k < povm.size(); ++k) {
    const double value = hs_inner(povm.element(k), rho);
    if (value < -1e-12 || value > 1.0 + 1e-12) {
      throw std::runtime_error("probability outside [0, 1]");
    }
    p[k] = std::min(std::max(value, 0.0), 1.0);
  }
  return p;
}

TracelessRep traceless_rep(const Povm& povm) {
  TracelessRep rep;
  const int d = povm.dim();
  rep.traces.resize(povm.size());
  const HermitianOp scaled_identity = HermitianOp::identity(d) * (1.0 / d);
  for (int k = 0; k < povm.size(); ++k) {
    const double tr = povm.element(k).trace();
    if (tr <= 1e-12) {
      throw std::invalid_argument(
          "traceless_rep: POVM element with (near-)zero trace");
    }
    rep.traces[k] = tr;
    HermitianOp s = povm.element(k) * (1.0 / tr) - scaled_identity;
    rep.q_ops.push_back(s * std::sqrt(tr));
    rep.s_ops.push_back(std::move(s));
  }
  return rep;
}

IcReport ic_check(const Povm& povm) {
  IcReport report;
  const int full = povm.dim() * povm.dim();
  report.rank = numeric_rank(coordinate_stack(povm.elements()));
  report.is_ic = report.rank == full;
  report.minimal = report.is_ic && povm.size() == full;
  report.overcomplete = report.is_ic && povm.size() > full;
  return report;
}

Eigen::MatrixXd q_frame_coords(const TracelessRep& rep) {
  const int d = rep.q_ops.front().dim();
  const HermBasis basis = gellmann_basis(d);
  const int n = d * d - 1;
  Eigen::MatrixXd coords(static_cast<int>(rep.q_ops.size()), n);
  for (std::size_t k = 0; k < rep.q_ops.size(); ++k) {
    coords.row(static_cast<int>(k)) =
        to_coords(rep.q_ops[k], basis).tail(n).transpose();
  }
  return coords;
}

TightIcReport tight_ic_check(const Povm& povm, double tol) {
  const TracelessRep rep = traceless_rep(povm);
  const Eigen::MatrixXd q = q_frame_coords(rep);
  const int n = static_cast<int>(q.cols());
  const Eigen::MatrixXd frame_op = q.transpose() * q;

  TightIcReport report;
  report.frame_bound = frame_op.trace() / n;
  report.residual =
      (frame_op - report.frame_bound * Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  report.is_tight_ic = report.frame_bound > tol && report.residual <= tol;
  return report;
}

EntfParams entf_params(const TracelessRep& rep, double tol) {
  const Eigen::MatrixXd q = q_frame_coords(rep);
  const int m = static_cast<int>(q.rows());
  const int n = static_cast<int>(q.cols());

  const Eigen::VectorXd norms = q.rowwise().norm();
  const double a = norms.mean();
  const double norm_spread = (norms.array() - a).abs().maxCoeff();
  if (norm_spread > tol * std::max(1.0, a)) {
    std::string detail = "entf_params: Q_k norms are not equal;";
    for (int k = 0; k < m; ++k) {
      detail += " " + std::to_string(norms[k]);
    }
    throw std::invalid_argument(detail);
  }

  const Eigen::MatrixXd frame_op = q.transpose() * q;
  const double c = frame_op.trace() / n;
  const double residual =
      (frame_op - c * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (residual > tol * std::max(1.0, c)) {
    throw std::invalid_argument("entf_params: Q_k frame is not tight");
  }

  EntfParams params;
  params.frame_bound = c;
  params.common_norm = a;
  params.count = m;
  params.space_dim = n;
  params.cn_ma2_residual = std::abs(c * n - m * a * a);
  return params;
}

int solid_vertex_count(Solid solid) {
  switch (solid) {
    case Solid::kAntipodalPair: return 2;
    case Solid::kTetrahedron: return 4;
    case Solid::kOctahedron: return 6;
    case Solid::kCube: return 8;
    case Solid::kIcosahedron: return 12;
  }
  throw std::invalid_argument("unknown solid");
}

const char* solid_name(Solid solid) {
  switch (solid) {
    case Solid::kAntipodalPair: return "antipodal-pair";
    case Solid::kTetrahedron: return "tetrahedron";
    case Solid::kOctahedron: return "octahedron";
    case Solid::kCube: return "cube";
    case Solid::kIcosahedron: return "icosahedron";
  }
  throw std::invalid_argument("unknown solid");
}

Solid solid_from_name(const std::string& name) {
  if (name == "antipodal-pair" || name == "pair") return Solid::kAntipodalPair;
  if (name == "tetrahedron") return Solid::kTetrahedron;
  if (name == "octahedron") return Solid::kOctahedron;
  if (name == "cube") return Solid::kCube;
  if (name == "icosahedron") return Solid::kIcosahedron;
  throw std::invalid_argument("unknown solid name: " + name);
}

Solid solid_from_vertex_count(int m) {
  switch (m) {
    case 2: return Solid::kAntipodalPair;
    case 4: return Solid::kTetrahedron;
    case 6: return Solid::kOctahedron;
    case 8: return Solid::kCube;
    case 12: return Solid::kIcosahedron;
    default:
      throw std::invalid_argument("no solid with " + std::to_string(m) +
                                  " vertices");
  }
}

std::vector<Eigen::Vector3d> canonical_vertices(Solid solid) {
  using V = Eigen::Vector3d;
  switch (solid) {
    case Solid::kAntipodalPair:
      return {V(0, 0, 1), V(0, 0, -1)};
    case Solid::kTetrahedron: {
      const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
      return {V(0, 0, 1), V(2.0 * s2 / 3.0, 0, -1.0 / 3.0),
              V(-s2 / 3.0, s6 / 3.0, -1.0 / 3.0),
              V(-s2 / 3.0, -s6 / 3.0, -1.0 / 3.0)};
    }
    case Solid::kOctahedron:
      return {V(1, 0, 0),  V(-1, 0, 0), V(0, 1, 0),
              V(0, -1, 0), V(0, 0, 1),  V(0, 0, -1)};
    case Solid::kCube: {
      std::vector<V> vertices;
      const double c = 1.0 / std::sqrt(3.0);
      for (const double x : {1.0, -1.0}) {
        for (const double y : {1.0, -1.0}) {
          for (const double z : {1.0, -1.0}) {
            vertices.emplace_back(c * x, c * y, c * z);
          }
        }
      }
      return vertices;
    }
    case Solid::kIcosahedron: {
      const double phi = 0.5 * (1.0 + std::sqrt(5.0));
      const double scale = 1.0 / std::sqrt(1.0 + phi * phi);
      std::vector<V> vertices;
      for (const double a : {1.0, -1.0}) {
        for (const double b : {1.0, -1.0}) {
          vertices.emplace_back(scale * V(0, a, b * phi));
        }
      }
      for (const double a : {1.0, -1.0}) {
        for (const double b : {1.0, -1.0}) {
          vertices.emplace_back(scale * V(a, b * phi, 0));
        }
      }
      for (const double a : {1.0, -1.0}) {
        for (const double b : {1.0, -1.0}) {
          vertices.emplace_back(scale * V(a * phi, 0, b));
        }
      }
      return vertices;
    }
  }
  throw std::invalid_argument("unknown solid");
}

Povm platonic_povm(const PlatonicSpec& spec) {
  if (!is_rotation(spec.rotation)) {
    throw std::invalid_argument("platonic_povm: rotation must be in SO(3)");
  }
  const auto vertices = canonical_vertices(spec.solid);
  const int m = static_cast<int>(vertices.size());
  std::vector<double> weights = spec.weights;
  if (weights.empty()) {
    weights.assign(m, 2.0 / m);
  }
  if (static_cast<int>(weights.size()) != m) {
    throw std::invalid_argument("platonic_povm: weight count mismatch");
  }
  double weight_sum = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("platonic_povm: weights must be positive");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 2.0) > 1e-10) {
    throw std::invalid_argument("platonic_povm: weights must sum to 2");
  }

  std::vector<HermitianOp> elements;
  elements.reserve(m);
  for (int k = 0; k < m; ++k) {
    const Eigen::Vector3d n = spec.rotation * vertices[k];
    elements.push_back(density_from_bloch(n) * weights[k]);
  }
  // The Povm constructor re-checks positivity and completeness; non-uniform
  // weights can break completeness even though each element stays PSD.
  try {
    return Povm(std::move(elements));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "platonic_povm: weights do not yield a valid POVM");
  }
}

}  // namespace qframes

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

#include "qframes/povm_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qframes {

namespace {

using nlohmann::json;

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd complex_matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("POVM element must be a non-empty matrix");
  }
  const auto n = rows.size();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != n) {
      throw std::invalid_argument("POVM element matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& entry = row.at(j);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("matrix entries must be [re, im] pairs");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::complex<double>(entry.at(0).get<double>(),
                               entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

std::string povm_to_json(const Povm& povm,
                         const std::optional<PlatonicSpec>& origin) {
  json doc;
  doc["format"] = "qframes.povm";
  doc["version"] = 1;
  doc["dim"] = povm.dim();
  json elements = json::array();
  for (const auto& e : povm.elements()) {
    elements.push_back(complex_matrix_to_json(e.matrix()));
  }
  doc["elements"] = std::move(elements);
  if (origin) {
    json meta;
    meta["solid"] = solid_name(origin->solid);
    const Eigen::Vector4d q = quaternion_of(origin->rotation);
    meta["rotation_quaternion"] = {q[0], q[1], q[2], q[3]};
    std::vector<double> weights = origin->weights;
    if (weights.empty()) {
      const int m = solid_vertex_count(origin->solid);
      weights.assign(m, 2.0 / m);
    }
    meta["weights"] = weights;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

PovmDocument povm_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("POVM document parse error: ") +
                                err.what());
  }
  if (doc.value("format", "") != "qframes.povm") {
    throw std::invalid_argument("not a qframes.povm document");
  }
  if (!doc.contains("elements") || !doc["elements"].is_array() ||
      doc["elements"].empty()) {
    throw std::invalid_argument("POVM document has no elements");
  }
  std::vector<HermitianOp> elements;
  for (const auto& entry : doc["elements"]) {
    elements.emplace_back(complex_matrix_from_json(entry));
  }
  const int dim = doc.value("dim", elements.front().dim());
  if (dim != elements.front().dim()) {
    throw std::invalid_argument("declared dim does not match elements");
  }

  PovmDocument result{Povm(std::move(elements)), {}, {}, {}};
  if (doc.contains("metadata")) {
    const auto& meta = doc["metadata"];
    if (meta.contains("solid")) {
      result.solid = meta["solid"].get<std::string>();
    }
    if (meta.contains("rotation_quaternion")) {
      const auto& q = meta["rotation_quaternion"];
      if (q.size() != 4) {
        throw std::invalid_argument("rotation_quaternion must have 4 entries");
      }
      result.rotation_quaternion = Eigen::Vector4d(
          q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
          q.at(3).get<double>());
    }
    if (meta.contains("weights")) {
      result.weights = meta["weights"].get<std::vector<double>>();
    }
  }
  return result;
}

void save_povm(const Povm& povm, const std::string& path,
               const std::optional<PlatonicSpec>& origin) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << povm_to_json(povm, origin);
}

PovmDocument load_povm(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return povm_from_json(buffer.str());
}

}  // namespace qframes

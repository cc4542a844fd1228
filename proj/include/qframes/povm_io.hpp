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

#include <optional>
#include <string>

#include "qframes/povm.hpp"

namespace qframes {

/// JSON document schema "qframes.povm" v1: dimension, complex element
/// matrices as [re, im] pairs, and optional construction metadata (solid
/// name, rotation quaternion, weights).
struct PovmDocument {
  Povm povm;
  std::optional<std::string> solid;
  std::optional<Eigen::Vector4d> rotation_quaternion;
  std::optional<std::vector<double>> weights;
};

std::string povm_to_json(const Povm& povm,
                         const std::optional<PlatonicSpec>& origin = {});
PovmDocument povm_from_json(const std::string& text);

void save_povm(const Povm& povm, const std::string& path,
               const std::optional<PlatonicSpec>& origin = {});
PovmDocument load_povm(const std::string& path);

}  // namespace qframes

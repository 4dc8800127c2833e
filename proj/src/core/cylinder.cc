// Copyright 2026 The UMV Design Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "umv/core/cylinder.h"

#include <cmath>

#include "umv/common/errors.h"

namespace umv::core {

void Validate(const CylinderSpec& spec) {
  if (!(spec.length > 0) || !std::isfinite(spec.length)) {
    throw InvalidSpecError("cylinder length must be positive");
  }
  if (!(spec.radius >= 0) || !std::isfinite(spec.radius)) {
    throw InvalidSpecError("cylinder radius must be non-negative");
  }
  if (!(spec.mass > 0) || !std::isfinite(spec.mass)) {
    throw InvalidSpecError("cylinder mass must be positive");
  }
}

LinkInertia CylinderInertia(const CylinderSpec& spec) {
  Validate(spec);
  const double l = spec.length, r = spec.radius;
  return LinkInertia{spec.mass, 0.5 * l,
                     spec.mass * (l * l / 12.0 + r * r / 4.0)};
}

double AxialInertia(const CylinderSpec& spec) {
  Validate(spec);
  return 0.5 * spec.mass * spec.radius * spec.radius;
}

}  // namespace umv::core

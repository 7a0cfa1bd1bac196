// Copyright 2026 The MARC Solver Authors. All rights reserved.
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

#ifndef MARC_SRC_LINEAR_SYSTEM_H_
#define MARC_SRC_LINEAR_SYSTEM_H_

#include <optional>
#include <vector>

#include "marc/rational.h"

namespace marc::internal {

// Solves the square system matrix * x = rhs exactly. Returns nullopt when the
// matrix is singular.
std::optional<std::vector<Rational>> SolveSquare(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs);

}  // namespace marc::internal

#endif  // MARC_SRC_LINEAR_SYSTEM_H_

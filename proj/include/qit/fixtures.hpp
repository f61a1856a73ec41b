// Copyright 2026 The qit developers
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

#pragma once

#include "qit/types.hpp"

namespace qit {
namespace fixtures {

// Three-qubit state (|000> + |011> + |100> - |111>)/2 on [a, b, c]. Its X
// information about qubit a is perfectly present in b and in c separately,
// while Y and Z information is perfectly absent from each — the standard
// witness that two mutually unbiased absent bases do not make a state a
// product.
Ket shared_x_state();

// Its two-qubit marginals.
Matrix shared_x_marginal_ab();
Matrix shared_x_marginal_ac();

}  // namespace fixtures
}  // namespace qit

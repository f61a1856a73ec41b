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

#include "qit/fixtures.hpp"

#include "qit/core.hpp"

namespace qit {
namespace fixtures {

Ket shared_x_state() {
  Ket psi = Ket::Zero(8);
  psi(0b000) = 0.5;
  psi(0b011) = 0.5;
  psi(0b100) = 0.5;
  psi(0b111) = -0.5;
  return psi;
}

Matrix shared_x_marginal_ab() {
  return reduced_density(shared_x_state(), SystemShape{2, 2, 2}, {0, 1});
}

Matrix shared_x_marginal_ac() {
  return reduced_density(shared_x_state(), SystemShape{2, 2, 2}, {0, 2});
}

}  // namespace fixtures
}  // namespace qit

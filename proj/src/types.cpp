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

#include "qit/types.hpp"

#include <sstream>

namespace qit {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 1) throw DomainError("SystemShape: factor dimensions must be positive");
  }
}

int SystemShape::dim(int factor) const {
  if (factor < 0 || factor >= factors())
    throw DimensionError("SystemShape: factor index " + std::to_string(factor) +
                         " out of range for " + to_string());
  return dims_[factor];
}

long SystemShape::total() const {
  long t = 1;
  for (int d : dims_) t *= d;
  return t;
}

std::vector<long> SystemShape::strides() const {
  std::vector<long> s(dims_.size(), 1);
  for (int f = factors() - 2; f >= 0; --f) s[f] = s[f + 1] * dims_[f + 1];
  return s;
}

SystemShape SystemShape::subset(const std::vector<int>& factors) const {
  std::vector<int> d;
  d.reserve(factors.size());
  for (int f : factors) d.push_back(dim(f));
  return SystemShape(d);
}

void SystemShape::require_total(long n, const std::string& what) const {
  if (total() != n)
    throw DimensionError(what + ": dimension " + std::to_string(n) +
                         " does not match shape " + to_string());
}

std::string SystemShape::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << "]";
  return os.str();
}

}  // namespace qit

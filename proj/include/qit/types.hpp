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

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // operators, projectors, density operators
using Ket = Eigen::VectorXcd;      // amplitude vectors (pre-probabilities when pure)

// Tolerance policy. Everything is double precision; predicates compare in
// Frobenius norm against an absolute tolerance.
inline constexpr double kDefaultTol = 1e-10;       // default predicate tolerance
inline constexpr double kValidationTol = 1e-8;     // decomposition/basis validation
inline constexpr double kRankCutoff = 1e-12;       // eigenvalues below this count as zero
inline constexpr double kSvdRelCutoff = 1e-9;      // relative singular-value rank threshold
inline constexpr double kEdgeTol = 1e-10;          // inner products below this are "zero" edges

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operator/ket/shape sizes that do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Inputs outside an operation's domain (non-density operator, zero ket,
// non-prime dimension, out-of-range parameter, failed validation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Unreadable files or malformed structured documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Ordered list of subsystem dimensions of a tensor-product space.
// Composite indices are row-major: the leftmost factor varies slowest.
class SystemShape {
 public:
  SystemShape() = default;
  SystemShape(std::initializer_list<int> dims) : SystemShape(std::vector<int>(dims)) {}
  explicit SystemShape(std::vector<int> dims);

  int factors() const { return static_cast<int>(dims_.size()); }
  int dim(int factor) const;
  long total() const;
  const std::vector<int>& dims() const { return dims_; }

  // Row-major strides: stride(f) = product of dims of all factors right of f.
  std::vector<long> strides() const;

  // Sub-shape made of the given factors, in the order given.
  SystemShape subset(const std::vector<int>& factors) const;

  // Throws DimensionError unless total() == n.
  void require_total(long n, const std::string& what) const;

  bool operator==(const SystemShape&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> dims_;
};

}  // namespace qit

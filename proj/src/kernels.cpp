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

#include "qit/kernels.hpp"

#include <algorithm>

namespace qit {

namespace {

// Work sizes below this stay single-threaded; OpenMP overhead dominates on
// the few-qubit spaces that make up most calls.
constexpr long kParallelThreshold = 1 << 14;

// offsets[i] = flat offset of the i-th mixed-radix index over `dims` with the
// given strides.
std::vector<long> flat_offsets(const std::vector<int>& dims, const std::vector<long>& strides) {
  long n = 1;
  for (int d : dims) n *= d;
  std::vector<long> off(static_cast<size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    long rem = i;
    long o = 0;
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
      o += (rem % dims[f]) * strides[f];
      rem /= dims[f];
    }
    off[static_cast<size_t>(i)] = o;
  }
  return off;
}

void check_factor_list(const SystemShape& shape, const std::vector<int>& factors,
                       const char* what, bool require_increasing) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 0 || factors[i] >= shape.factors())
      throw DimensionError(std::string(what) + ": factor index out of range");
    if (require_increasing && i > 0 && factors[i] <= factors[i - 1])
      throw DimensionError(std::string(what) + ": factor list must be strictly increasing");
  }
}

}  // namespace

Matrix tensor(const Matrix& a, const Matrix& b) {
  const long ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  const long work = out.rows() * out.cols();
#pragma omp parallel for collapse(2) if (work >= kParallelThreshold)
  for (long i = 0; i < ra; ++i)
    for (long j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  const long na = a.size(), nb = b.size();
  Ket out(na * nb);
#pragma omp parallel for if (na * nb >= kParallelThreshold)
  for (long i = 0; i < na; ++i) out.segment(i * nb, nb) = a(i) * b;
  return out;
}

Matrix partial_trace(const Matrix& op, const SystemShape& shape,
                     const std::vector<int>& keep) {
  if (op.rows() != op.cols()) throw DimensionError("partial_trace: operator must be square");
  shape.require_total(op.rows(), "partial_trace");
  check_factor_list(shape, keep, "partial_trace", /*require_increasing=*/true);

  const auto strides = shape.strides();
  std::vector<int> traced;
  for (int f = 0; f < shape.factors(); ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  std::vector<int> keep_dims, trace_dims;
  std::vector<long> keep_strides, trace_strides;
  for (int f : keep) {
    keep_dims.push_back(shape.dim(f));
    keep_strides.push_back(strides[f]);
  }
  for (int f : traced) {
    trace_dims.push_back(shape.dim(f));
    trace_strides.push_back(strides[f]);
  }

  const auto koff = flat_offsets(keep_dims, keep_strides);
  const auto toff = flat_offsets(trace_dims, trace_strides);
  const long nk = static_cast<long>(koff.size());
  const long nt = static_cast<long>(toff.size());

  Matrix out(nk, nk);
#pragma omp parallel for collapse(2) if (nk * nk * nt >= kParallelThreshold)
  for (long r = 0; r < nk; ++r)
    for (long c = 0; c < nk; ++c) {
      Complex sum{0.0, 0.0};
      for (long t = 0; t < nt; ++t) sum += op(koff[r] + toff[t], koff[c] + toff[t]);
      out(r, c) = sum;
    }
  return out;
}

Matrix embed(const Matrix& op, const SystemShape& shape, const std::vector<int>& factors) {
  if (op.rows() != op.cols()) throw DimensionError("embed: operator must be square");
  check_factor_list(shape, factors, "embed", /*require_increasing=*/false);
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i] == factors[j]) throw DimensionError("embed: repeated factor index");
  SystemShape local = shape.subset(factors);
  local.require_total(op.rows(), "embed");

  const auto strides = shape.strides();
  std::vector<int> rest;
  for (int f = 0; f < shape.factors(); ++f)
    if (std::find(factors.begin(), factors.end(), f) == factors.end()) rest.push_back(f);

  std::vector<int> fdims, rdims;
  std::vector<long> fstrides, rstrides;
  for (int f : factors) {
    fdims.push_back(shape.dim(f));
    fstrides.push_back(strides[f]);
  }
  for (int f : rest) {
    rdims.push_back(shape.dim(f));
    rstrides.push_back(strides[f]);
  }

  const auto foff = flat_offsets(fdims, fstrides);
  const auto roff = flat_offsets(rdims, rstrides);
  const long nf = static_cast<long>(foff.size());
  const long nr = static_cast<long>(roff.size());

  Matrix out = Matrix::Zero(shape.total(), shape.total());
#pragma omp parallel for if (nf * nf * nr >= kParallelThreshold)
  for (long r = 0; r < nf; ++r)
    for (long c = 0; c < nf; ++c) {
      const Complex v = op(r, c);
      if (v == Complex{0.0, 0.0}) continue;
      for (long t = 0; t < nr; ++t) out(foff[r] + roff[t], foff[c] + roff[t]) = v;
    }
  return out;
}

namespace {

// index map old flat index -> new flat index under the factor permutation
std::vector<long> permutation_map(const SystemShape& shape, const std::vector<int>& perm) {
  check_factor_list(shape, perm, "permute_factors", /*require_increasing=*/false);
  if (static_cast<int>(perm.size()) != shape.factors())
    throw DimensionError("permute_factors: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (seen[static_cast<size_t>(p)]) throw DimensionError("permute_factors: not a permutation");
    seen[static_cast<size_t>(p)] = true;
  }

  const auto old_strides = shape.strides();
  SystemShape new_shape = shape.subset(perm);
  const auto new_strides = new_shape.strides();

  const long n = shape.total();
  std::vector<long> map(static_cast<size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    long idx = 0;
    for (int nf = 0; nf < shape.factors(); ++nf) {
      const int of = perm[static_cast<size_t>(nf)];
      const long digit = (i / old_strides[static_cast<size_t>(of)]) % shape.dim(of);
      idx += digit * new_strides[static_cast<size_t>(nf)];
    }
    map[static_cast<size_t>(i)] = idx;
  }
  return map;
}

}  // namespace

Ket permute_factors(const Ket& k, const SystemShape& shape, const std::vector<int>& perm) {
  shape.require_total(k.size(), "permute_factors");
  const auto map = permutation_map(shape, perm);
  Ket out(k.size());
  for (long i = 0; i < k.size(); ++i) out(map[static_cast<size_t>(i)]) = k(i);
  return out;
}

Matrix permute_factors(const Matrix& op, const SystemShape& shape, const std::vector<int>& perm) {
  if (op.rows() != op.cols()) throw DimensionError("permute_factors: operator must be square");
  shape.require_total(op.rows(), "permute_factors");
  const auto map = permutation_map(shape, perm);
  Matrix out(op.rows(), op.cols());
  const long n = op.rows();
#pragma omp parallel for if (n * n >= kParallelThreshold)
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c)
      out(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = op(r, c);
  return out;
}

namespace reference {

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long r = 0; r < out.rows(); ++r)
    for (long c = 0; c < out.cols(); ++c)
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  Ket out(a.size() * b.size());
  for (long i = 0; i < out.size(); ++i) out(i) = a(i / b.size()) * b(i % b.size());
  return out;
}

Matrix partial_trace(const Matrix& op, const SystemShape& shape,
                     const std::vector<int>& keep) {
  if (op.rows() != op.cols()) throw DimensionError("partial_trace: operator must be square");
  shape.require_total(op.rows(), "partial_trace");

  SystemShape out_shape = shape.subset(keep);
  Matrix out = Matrix::Zero(out_shape.total(), out_shape.total());

  const int nf = shape.factors();
  auto digits_of = [&](long flat) {
    std::vector<int> d(static_cast<size_t>(nf));
    for (int f = nf - 1; f >= 0; --f) {
      d[static_cast<size_t>(f)] = static_cast<int>(flat % shape.dim(f));
      flat /= shape.dim(f);
    }
    return d;
  };

  for (long r = 0; r < op.rows(); ++r) {
    const auto rd = digits_of(r);
    for (long c = 0; c < op.cols(); ++c) {
      const auto cd = digits_of(c);
      bool diagonal_on_traced = true;
      for (int f = 0; f < nf; ++f) {
        if (std::find(keep.begin(), keep.end(), f) == keep.end() &&
            rd[static_cast<size_t>(f)] != cd[static_cast<size_t>(f)]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      long ro = 0, co = 0;
      for (int f : keep) {
        ro = ro * shape.dim(f) + rd[static_cast<size_t>(f)];
        co = co * shape.dim(f) + cd[static_cast<size_t>(f)];
      }
      out(ro, co) += op(r, c);
    }
  }
  return out;
}

}  // namespace reference

}  // namespace qit

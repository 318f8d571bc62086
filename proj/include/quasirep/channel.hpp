// Copyright 2026 The quasirep Authors
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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quasirep/linalg.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

/// Completely positive, trace-nonincreasing map B(C^d_in) -> B(C^d_out).
///
/// The Kraus list is the ground truth; the superoperator
/// sum_k K (x) conj(K) acts on row-major vectorizations and is computed once
/// at construction.
class Channel {
 public:
  /// Validates shapes and sum_k K^dagger K <= I (to `tol`).
  Channel(Eigen::Index d_in, Eigen::Index d_out, std::vector<CMat> kraus, double tol = 1e-10)
      : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
    if (d_in < 1 || d_out < 1) throw DimensionError("Channel: dims must be >= 1");
    if (kraus_.empty()) throw ConstructionError("Channel: empty Kraus list");
    for (const auto& k : kraus_) {
      if (k.rows() != d_out || k.cols() != d_in)
        throw DimensionError("Channel: Kraus operator has shape " + std::to_string(k.rows()) +
                             "x" + std::to_string(k.cols()) + ", expected " +
                             std::to_string(d_out) + "x" + std::to_string(d_in));
      if (!all_finite(k)) throw ConstructionError("Channel: non-finite Kraus entry");
    }
    const double slack = min_hermitian_eigenvalue(CMat::Identity(d_in, d_in) - kraus_sum());
    if (slack < -tol)
      throw ConstructionError("Channel: not trace-nonincreasing (I - sum K^dagger K has eigenvalue " +
                              std::to_string(slack) + ")");
    superop_ = CMat::Zero(d_out * d_out, d_in * d_in);
    for (const auto& k : kraus_) superop_ += kron(k, k.conjugate());
  }

  static Channel identity(Eigen::Index d) { return Channel(d, d, {CMat::Identity(d, d)}); }

  static Channel unitary(const CMat& u) {
    require_square(u, "Channel::unitary");
    return Channel(u.cols(), u.rows(), {u});
  }

  /// rho -> Tr(rho) I / d.
  static Channel fully_depolarizing(Eigen::Index d) {
    std::vector<CMat> ks;
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        CMat k = CMat::Zero(d, d);
        k(i, j) = w;
        ks.push_back(k);
      }
    return Channel(d, d, std::move(ks));
  }

  Eigen::Index d_in() const { return d_in_; }
  Eigen::Index d_out() const { return d_out_; }
  const std::vector<CMat>& kraus() const { return kraus_; }
  const CMat& superop() const { return superop_; }

  CMat apply(const CMat& x) const {
    if (x.rows() != d_in_ || x.cols() != d_in_) throw DimensionError("Channel::apply: shape mismatch");
    CMat out = CMat::Zero(d_out_, d_out_);
    for (const auto& k : kraus_) out += k * x * k.adjoint();
    return out;
  }

  /// sum_k K^dagger K.
  CMat kraus_sum() const {
    CMat s = CMat::Zero(d_in_, d_in_);
    for (const auto& k : kraus_) s += k.adjoint() * k;
    return s;
  }

  /// Choi matrix sum_ij |i><j| (x) E(|i><j|), (d_in d_out) x (d_in d_out).
  CMat choi() const {
    CMat c = CMat::Zero(d_in_ * d_out_, d_in_ * d_out_);
    for (Eigen::Index i = 0; i < d_in_; ++i)
      for (Eigen::Index j = 0; j < d_in_; ++j) {
        CMat eij = CMat::Zero(d_in_, d_in_);
        eij(i, j) = 1.0;
        c.block(i * d_out_, j * d_out_, d_out_, d_out_) = apply(eij);
      }
    return c;
  }

 private:
  Eigen::Index d_in_;
  Eigen::Index d_out_;
  std::vector<CMat> kraus_;
  CMat superop_;
};

/// Sequential composition: apply `first`, then `second`.
inline Channel compose(const Channel& second, const Channel& first) {
  if (first.d_out() != second.d_in())
    throw DimensionError("compose: intermediate dimensions differ");
  std::vector<CMat> ks;
  ks.reserve(first.kraus().size() * second.kraus().size());
  for (const auto& b : second.kraus())
    for (const auto& a : first.kraus()) ks.push_back(b * a);
  return Channel(first.d_in(), second.d_out(), std::move(ks));
}

/// CPTP map from a Haar-random Stinespring isometry with environment
/// dimension d_in * d_out. Deterministic in `seed`.
inline Channel random_channel(Eigen::Index d_in, Eigen::Index d_out, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || d_in > 4 || d_out > 4)
    throw DimensionError("random_channel: dims must lie in 1..4");
  Rng rng(seed);
  const Eigen::Index env = d_in * d_out;
  const CMat v = haar_isometry(d_out * env, d_in, rng);
  std::vector<CMat> ks;
  ks.reserve(static_cast<std::size_t>(env));
  for (Eigen::Index e = 0; e < env; ++e) {
    CMat k(d_out, d_in);
    for (Eigen::Index o = 0; o < d_out; ++o) k.row(o) = v.row(o * env + e);
    ks.push_back(std::move(k));
  }
  return Channel(d_in, d_out, std::move(ks));
}

}  // namespace quasirep

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

// Seeded samplers for the random objects used by the checks and tests.

#include <array>
#include <cstdint>
#include <random>

#include "quasirep/linalg.hpp"

namespace quasirep {

using Rng = std::mt19937_64;

/// Seed for trial `index` derived from a parent seed; independent of call order.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline RMat uniform_real_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng, double lo = -1.0,
                                double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Entries with independent standard normal real and imaginary parts.
inline CMat ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = n01(rng);
      const double im = n01(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

/// Uniform complex entries in the unit square [-1,1] + i[-1,1].
inline CMat uniform_complex_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = dist(rng);
      const double im = dist(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

/// Haar-distributed isometry (rows >= cols): QR of a Ginibre matrix with the
/// phases of R's diagonal absorbed into Q (Mezzadri's construction).
inline CMat haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (cols > rows) throw DimensionError("haar_isometry: cols must not exceed rows");
  const CMat g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(rows, cols);
  const CMat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const cplx diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

inline CMat haar_unitary(Eigen::Index d, Rng& rng) { return haar_isometry(d, d, rng); }

/// Random density matrix G G^dagger / Tr(G G^dagger) with G Ginibre (Hilbert-Schmidt measure).
inline CMat random_density_matrix(Eigen::Index d, Rng& rng) {
  const CMat g = ginibre(d, d, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

/// Random effect V^dagger diag(u) V with V Haar and u uniform in [0,1]^d, so 0 <= E <= I.
inline CMat random_effect(Eigen::Index d, Rng& rng) {
  const CMat v = haar_unitary(d, rng);
  CVec u(d);
  for (Eigen::Index k = 0; k < d; ++k) u(k) = uniform(rng, 0.0, 1.0);
  return v.adjoint() * u.asDiagonal() * v;
}

}  // namespace quasirep

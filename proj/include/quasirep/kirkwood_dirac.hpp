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

/// \file kirkwood_dirac.hpp
/// Kirkwood-Dirac distributions mu(a, b | rho) = <a|rho|b><b|a> for a pair of
/// orthonormal bases, and the KD frame / dual frame
///   F_ab = |a><b| <a|b>,   G_ab = |a><b| / <b|a>.
/// The index set a x b is flattened row-major: label (a, b) sits at a*d + b.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "quasirep/frames.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

inline constexpr double kOverlapFloor = 1e-10;

class KdBases {
 public:
  /// Columns of `basis_a` and `basis_b` are the basis vectors |a>, |b>.
  KdBases(CMat basis_a, CMat basis_b, double unitarity_tol = 1e-10,
          double overlap_floor = kOverlapFloor)
      : a_(std::move(basis_a)), b_(std::move(basis_b)), floor_(overlap_floor) {
    require_square(a_, "KdBases");
    require_same_shape(a_, b_, "KdBases");
    const Eigen::Index d = a_.rows();
    if (d < 1) throw DimensionError("KdBases: empty basis");
    if (max_abs(a_.adjoint() * a_ - CMat::Identity(d, d)) > unitarity_tol ||
        max_abs(b_.adjoint() * b_ - CMat::Identity(d, d)) > unitarity_tol)
      throw ConstructionError("KdBases: basis matrices must be unitary");
    overlap_ = a_.adjoint() * b_;
    faithful_ = overlap_.cwiseAbs().minCoeff() > floor_;
  }

  Eigen::Index dim() const { return a_.rows(); }
  const CMat& basis_a() const { return a_; }
  const CMat& basis_b() const { return b_; }
  /// O(a, b) = <a|b>.
  const CMat& overlap() const { return overlap_; }
  bool faithful() const { return faithful_; }
  double overlap_floor() const { return floor_; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (Eigen::Index a = 0; a < dim(); ++a)
      for (Eigen::Index b = 0; b < dim(); ++b)
        out.push_back(std::to_string(a) + "," + std::to_string(b));
    return out;
  }

 private:
  CMat a_;
  CMat b_;
  CMat overlap_;
  double floor_;
  bool faithful_ = false;
};

// Basis presets: named unitaries whose columns form the second basis.

inline CMat computational_basis(Eigen::Index d) { return CMat::Identity(d, d); }

inline CMat fourier_basis(Eigen::Index d) {
  CMat f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k)
      f(j, k) = norm * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                           static_cast<double>(d));
  return f;
}

/// Normalized Sylvester-Hadamard matrix; d must be a power of two.
/// For d = 2 the columns are |+> and |->.
inline CMat hadamard_basis(Eigen::Index d) {
  if (d < 1 || (d & (d - 1)) != 0)
    throw DimensionError("hadamard_basis: d must be a power of two, got " + std::to_string(d));
  RMat h = RMat::Ones(1, 1);
  while (h.rows() < d) {
    RMat next(2 * h.rows(), 2 * h.rows());
    next << h, h, h, -h;
    h = next;
  }
  return (h / std::sqrt(static_cast<double>(d))).cast<cplx>();
}

/// `name` in {"computational", "hadamard", "fourier"}.
inline CMat basis_preset(const std::string& name, Eigen::Index d) {
  if (name == "computational") return computational_basis(d);
  if (name == "hadamard") return hadamard_basis(d);
  if (name == "fourier") return fourier_basis(d);
  throw ConstructionError("unknown basis preset '" + name + "'");
}

/// Computational basis against a preset.
inline KdBases kd_bases_preset(const std::string& name, Eigen::Index d) {
  return KdBases(computational_basis(d), basis_preset(name, d));
}

/// Computational basis against V |e_i> for a Haar-random V, resampled until
/// every overlap exceeds the floor.
inline KdBases random_faithful_kd_bases(Eigen::Index d, std::uint64_t seed,
                                        double overlap_floor = kOverlapFloor) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    KdBases kb(computational_basis(d), haar_unitary(d, rng), 1e-10, overlap_floor);
    if (kb.faithful()) return kb;
  }
  throw ConstructionError("random_faithful_kd_bases: no faithful sample found");
}

/// d x d table, entry (a, b) = <a|rho|b><b|a>. Defined for every pair of bases,
/// faithful or not.
inline CMat kd_distribution(const KdBases& kb, const CMat& rho) {
  if (rho.rows() != kb.dim() || rho.cols() != kb.dim())
    throw DimensionError("kd_distribution: state shape does not match the bases");
  const CMat sandwiched = kb.basis_a().adjoint() * rho * kb.basis_b();
  return sandwiched.cwiseProduct(kb.overlap().conjugate());
}

/// F_ab = |a><b| <a|b> with dual G_ab = |a><b| / <b|a>. Requires faithful bases.
inline DualPair kd_frame_pair(const KdBases& kb) {
  if (!kb.faithful())
    throw NonFaithfulBasesError("kd_frame_pair: some overlap |<a|b>| is below " +
                                std::to_string(kb.overlap_floor()));
  const Eigen::Index d = kb.dim();
  std::vector<CMat> f, g;
  f.reserve(static_cast<std::size_t>(d * d));
  g.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      const CMat ket_bra = kb.basis_a().col(a) * kb.basis_b().col(b).adjoint();
      const cplx ab = kb.overlap()(a, b);
      f.push_back(ket_bra * ab);
      g.push_back(ket_bra / std::conj(ab));
    }
  const auto labels = kb.labels();
  return DualPair::checked(Frame(d, labels, std::move(f)), Frame(d, labels, std::move(g)));
}

/// Flattens a d x d KD table row-major, matching the frame label order.
inline CVec flatten_kd_table(const CMat& table) {
  CVec v(table.size());
  for (Eigen::Index a = 0; a < table.rows(); ++a)
    for (Eigen::Index b = 0; b < table.cols(); ++b) v(a * table.cols() + b) = table(a, b);
  return v;
}

}  // namespace quasirep

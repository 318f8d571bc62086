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

/// \file frames.hpp
/// Frames for the operator space B(C^d) and the representations they induce.
///
/// A frame {F_l} is stored through its analysis matrix, whose row l is
/// vec(F_l)^dagger, so that (analysis * vec(X))_l = Tr(F_l^dagger X). A dual
/// frame {G_l} is stored through its synthesis matrix, whose column l is
/// vec(G_l). The dual pair identity sum_l <F_l, X> G_l = X is then
/// synthesis * analysis = identity.

#include <string>
#include <utility>
#include <vector>

#include "quasirep/channel.hpp"
#include "quasirep/linalg.hpp"

namespace quasirep {

class Frame {
 public:
  Frame(Eigen::Index d, std::vector<std::string> labels, std::vector<CMat> elements)
      : d_(d), labels_(std::move(labels)), elements_(std::move(elements)) {
    validate();
  }

  /// Elements with labels "0", "1", ...
  Frame(Eigen::Index d, std::vector<CMat> elements) : d_(d), elements_(std::move(elements)) {
    labels_ = default_labels(elements_.size());
    validate();
  }

  Eigen::Index hilbert_dim() const { return d_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(elements_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<CMat>& elements() const { return elements_; }
  const CMat& operator[](std::size_t i) const { return elements_[i]; }

  /// |Lambda| x d^2, row l = vec(F_l)^dagger.
  CMat analysis() const {
    CMat m(size(), d_ * d_);
    for (Eigen::Index l = 0; l < size(); ++l) m.row(l) = vectorize(elements_[l]).adjoint();
    return m;
  }

  /// d^2 x |Lambda|, column l = vec(F_l). Used when this family plays the dual role.
  CMat synthesis() const {
    CMat m(d_ * d_, size());
    for (Eigen::Index l = 0; l < size(); ++l) m.col(l) = vectorize(elements_[l]);
    return m;
  }

  bool spans(const Tolerance& tol = {}) const {
    return numerical_rank(analysis(), tol) == d_ * d_;
  }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }

 private:
  void validate() const {
    if (d_ < 1) throw DimensionError("Frame: d must be >= 1");
    if (labels_.size() != elements_.size())
      throw DimensionError("Frame: " + std::to_string(labels_.size()) + " labels for " +
                           std::to_string(elements_.size()) + " elements");
    if (elements_.empty()) throw ConstructionError("Frame: no elements");
    for (const auto& e : elements_) {
      if (e.rows() != d_ || e.cols() != d_)
        throw DimensionError("Frame: element is " + std::to_string(e.rows()) + "x" +
                             std::to_string(e.cols()) + ", expected " + std::to_string(d_) + "x" +
                             std::to_string(d_));
      if (!all_finite(e)) throw ConstructionError("Frame: non-finite element entry");
    }
  }

  Eigen::Index d_;
  std::vector<std::string> labels_;
  std::vector<CMat> elements_;
};

/// A frame together with a dual frame over the same index set.
class DualPair {
 public:
  /// Checks the reconstruction identity on a full operator basis and throws
  /// ConstructionError if it fails by more than `tol`.
  static DualPair checked(Frame frame, Frame dual, double tol = 1e-9) {
    DualPair p(std::move(frame), std::move(dual));
    const double r = p.reconstruction_residual();
    if (!(r <= tol))
      throw ConstructionError("DualPair: reconstruction identity fails (residual " +
                              std::to_string(r) + ")");
    return p;
  }

  /// No reconstruction check; shapes only. For auditing user-supplied pairs
  /// that may be wrong.
  static DualPair unchecked(Frame frame, Frame dual) {
    return DualPair(std::move(frame), std::move(dual));
  }

  const Frame& frame() const { return frame_; }
  const Frame& dual() const { return dual_; }
  Eigen::Index hilbert_dim() const { return frame_.hilbert_dim(); }
  Eigen::Index size() const { return frame_.size(); }
  const std::vector<std::string>& labels() const { return frame_.labels(); }
  const CMat& analysis() const { return analysis_; }
  const CMat& synthesis() const { return synthesis_; }

  /// max |sum_l <F_l, X> G_l - X| over the matrix-unit basis X = E_ij, which
  /// is the max-norm of synthesis * analysis - I.
  double reconstruction_residual() const {
    const Eigen::Index n = hilbert_dim() * hilbert_dim();
    return max_abs(synthesis_ * analysis_ - CMat::Identity(n, n));
  }

 private:
  DualPair(Frame frame, Frame dual) : frame_(std::move(frame)), dual_(std::move(dual)) {
    if (frame_.hilbert_dim() != dual_.hilbert_dim() || frame_.size() != dual_.size())
      throw DimensionError("DualPair: frame and dual differ in dimension or index set size");
    analysis_ = frame_.analysis();
    synthesis_ = dual_.synthesis();
  }

  Frame frame_;
  Frame dual_;
  CMat analysis_;
  CMat synthesis_;
};

/// Superoperator of S(A) = sum_l <F_l, A> F_l, i.e. sum_l vec(F_l) vec(F_l)^dagger.
inline CMat frame_operator(const Frame& f) {
  const CMat a = f.analysis();
  return a.adjoint() * a;
}

/// Canonical dual G_l = S^{-1}(F_l). Throws SingularFrameError unless f spans.
inline DualPair canonical_dual(const Frame& f, const Tolerance& tol = {}) {
  const CMat s = frame_operator(f);
  const auto rr = rank_range(s, tol);
  const Eigen::Index n = f.hilbert_dim() * f.hilbert_dim();
  if (rr.rank < n)
    throw SingularFrameError("canonical_dual: frame spans only " + std::to_string(rr.rank) +
                             " of " + std::to_string(n) + " operator dimensions");
  const CMat g = s.ldlt().solve(f.synthesis());
  std::vector<CMat> dual;
  dual.reserve(static_cast<std::size_t>(f.size()));
  for (Eigen::Index l = 0; l < f.size(); ++l) dual.push_back(devectorize(g.col(l)));
  return DualPair::checked(f, Frame(f.hilbert_dim(), f.labels(), std::move(dual)));
}

/// mu(l | X) = <F_l, X>_HS.
inline CVec represent_state(const DualPair& p, const CMat& x) {
  if (x.rows() != p.hilbert_dim() || x.cols() != p.hilbert_dim())
    throw DimensionError("represent_state: operator shape does not match the frame");
  return p.analysis() * vectorize(x);
}

/// xi(E | l) = <E, G_l>_HS = Tr(E^dagger G_l), returned as a row vector.
inline Eigen::RowVectorXcd represent_effect(const DualPair& p, const CMat& e) {
  if (e.rows() != p.hilbert_dim() || e.cols() != p.hilbert_dim())
    throw DimensionError("represent_effect: operator shape does not match the frame");
  return vectorize(e).adjoint() * p.synthesis();
}

/// Gamma(l_out | l_in) = <F^out_{l_out}, E(G^in_{l_in})>_HS.
inline CMat represent_channel(const DualPair& out, const DualPair& in, const Channel& ch) {
  if (ch.d_in() != in.hilbert_dim() || ch.d_out() != out.hilbert_dim())
    throw DimensionError("represent_channel: channel dims do not match the dual pairs");
  return out.analysis() * ch.superop() * in.synthesis();
}

/// sum_l mu_l G_l.
inline CMat reconstruct_operator(const DualPair& p, const CVec& mu) {
  if (mu.size() != p.size())
    throw DimensionError("reconstruct_operator: expected " + std::to_string(p.size()) +
                         " coefficients, got " + std::to_string(mu.size()));
  return devectorize(p.synthesis() * mu);
}

struct BornProbe {
  cplx lhs;  ///< sum_l mu(l | rho) xi(E | l)
  cplx rhs;  ///< Tr(E rho)
  double residual = 0.0;
};

inline BornProbe born_probe(const DualPair& p, const CMat& rho, const CMat& eff) {
  const CVec mu = represent_state(p, rho);
  const Eigen::RowVectorXcd xi = represent_effect(p, eff);
  BornProbe out;
  out.lhs = (xi * mu)(0);
  out.rhs = (eff * rho).trace();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

struct ExtractedFrame {
  Frame frame;
  bool faithful = false;
};

/// Riesz extraction: the unique F_l with Tr(F_l^dagger X) = (m vec X)_l, so
/// vec(F_l) = (row l of m)^dagger. Faithful iff m has rank d^2.
inline ExtractedFrame frame_from_linear_map(const CMat& m, Eigen::Index d,
                                            const Tolerance& tol = {}) {
  if (d < 1 || m.cols() != d * d)
    throw DimensionError("frame_from_linear_map: expected " + std::to_string(d * d) +
                         " columns, got " + std::to_string(m.cols()));
  std::vector<CMat> elements;
  elements.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index l = 0; l < m.rows(); ++l) elements.push_back(devectorize(m.row(l).adjoint()));
  const bool faithful = numerical_rank(m, tol) == d * d;
  return {Frame(d, std::move(elements)), faithful};
}

// ---------------------------------------------------------------------------
// Standard frames

/// Matrix units E_ij, labels "ij" in row-major order. Orthonormal basis.
inline Frame matrix_unit_frame(Eigen::Index d) {
  std::vector<CMat> els;
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      CMat e = CMat::Zero(d, d);
      e(i, j) = 1.0;
      els.push_back(e);
      labels.push_back(std::to_string(i) + std::to_string(j));
    }
  return Frame(d, std::move(labels), std::move(els));
}

inline std::vector<CMat> pauli_matrices() {
  CMat i2 = CMat::Identity(2, 2);
  CMat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -I_UNIT, I_UNIT, 0;
  z << 1, 0, 0, -1;
  return {i2, x, y, z};
}

/// {sigma_k / sqrt 2}: a Parseval (orthonormal) qubit frame.
inline Frame pauli_frame() {
  auto ps = pauli_matrices();
  for (auto& p : ps) p /= std::sqrt(2.0);
  return Frame(2, {"I", "X", "Y", "Z"}, std::move(ps));
}

}  // namespace quasirep

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

/// \file gpt.hpp
/// Finite-dimensional GPT systems of two kinds:
///  - quantum(d): the real space B(C^d)_sa, coordinatized by an HS-orthonormal
///    Hermitian basis {H_k}, so x_k = Tr(H_k X);
///  - classical(n): R^n with the standard basis.
///
/// Each system carries spanning states (columns), spanning effects (rows), the
/// deterministic effect u and identity-resolution coefficients t with
///   sum_ij t_ij s_i e_j = id.
///
/// `operator_basis()` maps complexified real coordinates into the operator
/// coordinates used by frames: column k is vec(H_k) for quantum systems and
/// e_k for classical ones. It is unitary, so it identifies C(A) with B(C^d)
/// (resp. C^n) without distorting inner products.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quasirep/channel.hpp"
#include "quasirep/complexify.hpp"
#include "quasirep/linalg.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

enum class SystemKind { quantum, classical };

inline std::string to_string(SystemKind k) {
  return k == SystemKind::quantum ? "quantum" : "classical";
}

inline SystemKind system_kind_from_string(const std::string& s) {
  if (s == "quantum") return SystemKind::quantum;
  if (s == "classical") return SystemKind::classical;
  throw ConstructionError("unknown system kind '" + s + "'");
}

/// HS-orthonormal Hermitian basis of B(C^d): E_jj for each j, then for each
/// j < k the pair (E_jk + E_kj)/sqrt2, i(E_kj - E_jk)/sqrt2.
inline std::vector<CMat> hermitian_basis(Eigen::Index d) {
  std::vector<CMat> out;
  for (Eigen::Index j = 0; j < d; ++j) {
    CMat e = CMat::Zero(d, d);
    e(j, j) = 1.0;
    out.push_back(e);
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      CMat sym = CMat::Zero(d, d), asym = CMat::Zero(d, d);
      sym(j, k) = r;
      sym(k, j) = r;
      asym(k, j) = I_UNIT * r;
      asym(j, k) = -I_UNIT * r;
      out.push_back(sym);
      out.push_back(asym);
    }
  return out;
}

/// d^2 pure states: |j> for each j, then (|j>+|k>)/sqrt2 and (|j>+i|k>)/sqrt2
/// for each j < k. Returned as projectors.
inline std::vector<CMat> tomographic_pure_states(Eigen::Index d) {
  std::vector<CMat> out;
  auto proj = [](const CVec& v) -> CMat { return v * v.adjoint(); };
  for (Eigen::Index j = 0; j < d; ++j) {
    CVec v = CVec::Zero(d);
    v(j) = 1.0;
    out.push_back(proj(v));
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      CVec plus = CVec::Zero(d), plus_i = CVec::Zero(d);
      plus(j) = r;
      plus(k) = r;
      plus_i(j) = r;
      plus_i(k) = I_UNIT * r;
      out.push_back(proj(plus));
      out.push_back(proj(plus_i));
    }
  return out;
}

class GptSystem {
 public:
  /// Generic constructor: states are columns, effects are rows, both in real
  /// coordinates. Solves for t and checks spanning.
  GptSystem(SystemKind kind, Eigen::Index dim, RMat states, RMat effects, std::int64_t seed = 0,
            std::string name = {})
      : kind_(kind), dim_(dim), seed_(seed), states_(std::move(states)), effects_(std::move(effects)) {
    if (dim < 1) throw DimensionError("GptSystem: dim must be >= 1");
    if (kind == SystemKind::quantum && dim > 4)
      throw DimensionError("GptSystem: quantum systems support d <= 4");
    real_dim_ = kind == SystemKind::quantum ? dim * dim : dim;
    name_ = name.empty() ? default_name(kind, dim) : std::move(name);
    if (states_.rows() != real_dim_ || effects_.cols() != real_dim_)
      throw DimensionError("GptSystem: state/effect coordinates have the wrong length");
    if (kind == SystemKind::quantum) {
      basis_ = hermitian_basis(dim);
      operator_basis_ = CMat(real_dim_, real_dim_);
      for (Eigen::Index k = 0; k < real_dim_; ++k)
        operator_basis_.col(k) = vectorize(basis_[static_cast<std::size_t>(k)]);
      u_ = real_coords(CMat::Identity(dim, dim));
    } else {
      operator_basis_ = CMat::Identity(real_dim_, real_dim_);
      u_ = RVec::Ones(real_dim_);
    }
    if (numerical_rank(states_) != real_dim_)
      throw SpanningError("GptSystem: states do not span the real space");
    if (numerical_rank(effects_) != real_dim_)
      throw SpanningError("GptSystem: effects do not span the dual space");
    t_ = solve_identity_resolution(states_, effects_);
  }

  SystemKind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  Eigen::Index real_dim() const { return real_dim_; }
  std::int64_t seed() const { return seed_; }
  const std::string& name() const { return name_; }
  /// real_dim x #states.
  const RMat& states() const { return states_; }
  /// #effects x real_dim.
  const RMat& effects() const { return effects_; }
  /// Deterministic effect as a covector in real coordinates.
  const RVec& u() const { return u_; }
  /// #states x #effects.
  const RMat& t() const { return t_; }
  const CMat& operator_basis() const { return operator_basis_; }

  /// Real coordinates of a self-adjoint operator (quantum) or a vector (classical).
  RVec real_coords(const CMat& x) const {
    if (kind_ == SystemKind::quantum) {
      if (x.rows() != dim_ || x.cols() != dim_)
        throw DimensionError("real_coords: operator shape mismatch");
      RVec c(real_dim_);
      for (Eigen::Index k = 0; k < real_dim_; ++k)
        c(k) = (basis_[static_cast<std::size_t>(k)] * x).trace().real();
      return c;
    }
    if (x.size() != real_dim_) throw DimensionError("real_coords: vector length mismatch");
    return x.reshaped().real();
  }

  /// Operator coordinates (vec of a d x d matrix, or C^n) of complexified real coordinates.
  CVec to_operator_coords(const CVec& complex_coords) const {
    return operator_basis_ * complex_coords;
  }

  /// Covector in operator coordinates of C(e) for a real covector e.
  Eigen::RowVectorXcd effect_operator_coords(const RVec& e) const {
    return complexify_map(e.transpose()) * operator_basis_.adjoint();
  }

  /// The operator sum_k x_k H_k (quantum only).
  CMat operator_of(const RVec& coords) const {
    if (kind_ != SystemKind::quantum) throw Error("operator_of: classical system");
    return devectorize(operator_basis_ * coords.cast<cplx>());
  }

  static std::string default_name(SystemKind kind, Eigen::Index dim) {
    return to_string(kind) + "-" + std::to_string(dim);
  }

  /// Minimal-norm solution of S t E = I, with residual check.
  static RMat solve_identity_resolution(const RMat& states, const RMat& effects,
                                        double tol = 1e-10) {
    const RMat t = pseudo_inverse(states) * pseudo_inverse(effects);
    const Eigen::Index n = states.rows();
    const double res = (states * t * effects - RMat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(res <= tol))
      throw SpanningError("identity resolution residual " + std::to_string(res) +
                          " exceeds tolerance");
    return t;
  }

 private:
  SystemKind kind_;
  Eigen::Index dim_;
  Eigen::Index real_dim_ = 0;
  std::int64_t seed_;
  std::string name_;
  RMat states_;
  RMat effects_;
  RVec u_;
  RMat t_;
  CMat operator_basis_;
  std::vector<CMat> basis_;
};

/// Bundled systems. Quantum: the d^2 tomographic pure states, effects
/// X -> Tr(s_i X), u = trace. Classical: delta distributions, indicator
/// effects, u = all ones. `seed` is recorded for the descriptor; the bundled
/// families are deterministic.
inline GptSystem make_system(SystemKind kind, Eigen::Index dim, std::int64_t seed = 0) {
  if (dim < 1) throw DimensionError("make_system: dim must be >= 1");
  if (kind == SystemKind::classical) {
    return GptSystem(kind, dim, RMat::Identity(dim, dim), RMat::Identity(dim, dim), seed);
  }
  if (dim > 4) throw DimensionError("make_system: quantum systems support d <= 4");
  const auto pure = tomographic_pure_states(dim);
  const Eigen::Index n = dim * dim;
  const auto basis = hermitian_basis(dim);
  RMat states(n, static_cast<Eigen::Index>(pure.size()));
  for (Eigen::Index i = 0; i < states.cols(); ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      states(k, i) = (basis[static_cast<std::size_t>(k)] * pure[static_cast<std::size_t>(i)])
                         .trace()
                         .real();
  // Tr(s_i X) = sum_k x_k Tr(s_i H_k), the same numbers transposed.
  const RMat effects = states.transpose();
  return GptSystem(kind, dim, states, effects, seed);
}

/// Quantum system whose state family is `state_ops` (possibly overcomplete).
inline GptSystem make_quantum_system(Eigen::Index d, const std::vector<CMat>& state_ops,
                                     std::int64_t seed = 0, std::string name = {}) {
  const Eigen::Index n = d * d;
  const auto basis = hermitian_basis(d);
  RMat states(n, static_cast<Eigen::Index>(state_ops.size()));
  for (Eigen::Index i = 0; i < states.cols(); ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      states(k, i) =
          (basis[static_cast<std::size_t>(k)] * state_ops[static_cast<std::size_t>(i)])
              .trace()
              .real();
  return GptSystem(SystemKind::quantum, d, states, states.transpose(), seed, std::move(name));
}

inline RMat identity_resolution(const GptSystem& sys) {
  return GptSystem::solve_identity_resolution(sys.states(), sys.effects());
}

/// A process between two systems as a real matrix on real coordinates.
struct GptProcess {
  GptSystem source;
  GptSystem target;
  RMat matrix;  ///< target.real_dim x source.real_dim

  GptProcess(GptSystem src, GptSystem tgt, RMat m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.real_dim() || matrix.cols() != source.real_dim())
      throw DimensionError("GptProcess: matrix is " + std::to_string(matrix.rows()) + "x" +
                           std::to_string(matrix.cols()) + ", expected " +
                           std::to_string(target.real_dim()) + "x" +
                           std::to_string(source.real_dim()));
    if (!all_finite(matrix)) throw ConstructionError("GptProcess: non-finite entries");
  }

  /// Nonnegative entries and column sums at most one (classical kind only).
  bool substochastic(double tol = 1e-12) const {
    if (source.kind() != SystemKind::classical || target.kind() != SystemKind::classical)
      return false;
    if (matrix.size() == 0) return true;
    if (matrix.minCoeff() < -tol) return false;
    return matrix.colwise().sum().maxCoeff() <= 1.0 + tol;
  }

  /// Superoperator in operator coordinates: basis_out C(T) basis_in^dagger.
  CMat operator_matrix() const {
    return target.operator_basis() * complexify_map(matrix) * source.operator_basis().adjoint();
  }
};

/// Real coordinate matrix of a quantum channel, basis_out^dagger S basis_in.
/// CP maps preserve self-adjointness, so the result is real.
inline GptProcess process_from_channel(const Channel& ch, const GptSystem& src,
                                       const GptSystem& tgt, double tol = 1e-10) {
  if (src.kind() != SystemKind::quantum || tgt.kind() != SystemKind::quantum)
    throw DimensionError("process_from_channel: systems must be quantum");
  if (ch.d_in() != src.dim() || ch.d_out() != tgt.dim())
    throw DimensionError("process_from_channel: channel dims do not match the systems");
  const CMat m = tgt.operator_basis().adjoint() * ch.superop() * src.operator_basis();
  if (max_abs(m.imag()) > tol)
    throw Error("process_from_channel: real-coordinate matrix has an imaginary part");
  return GptProcess(src, tgt, m.real());
}

/// Coefficients r with T = sum_ij r_ij s_i e_j, where s_i are target states
/// and e_j source effects. Throws SpanningError if the reassembly residual
/// exceeds `tol`.
inline RMat tomographic_decompose(const GptProcess& t, double tol = 1e-10) {
  const RMat& s = t.target.states();
  const RMat& e = t.source.effects();
  const RMat r = pseudo_inverse(s) * t.matrix * pseudo_inverse(e);
  const double res = (s * r * e - t.matrix).cwiseAbs().maxCoeff();
  if (!(res <= tol))
    throw SpanningError("tomographic_decompose: reassembly residual " + std::to_string(res));
  return r;
}

/// Random column-substochastic n_out x n_in matrix: uniform nonnegative
/// columns rescaled to a random total mass in [0, 1].
inline RMat random_substochastic(Eigen::Index n_in, Eigen::Index n_out, Rng& rng) {
  RMat m = uniform_real_matrix(n_out, n_in, rng, 0.0, 1.0);
  for (Eigen::Index j = 0; j < n_in; ++j) {
    const double mass = uniform(rng, 0.0, 1.0);
    const double sum = m.col(j).sum();
    if (sum > 0.0) m.col(j) *= mass / sum;
  }
  return m;
}

/// Random subnormalized probability vector.
inline RVec random_subnormalized_distribution(Eigen::Index n, Rng& rng) {
  return random_substochastic(1, n, rng).col(0);
}

/// Random response function with entries in [0, 1].
inline RVec random_response(Eigen::Index n, Rng& rng) {
  return uniform_real_matrix(n, 1, rng, 0.0, 1.0).col(0);
}

}  // namespace quasirep

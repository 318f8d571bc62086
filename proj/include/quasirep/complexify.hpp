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

/// \file complexify.hpp
/// Complexification of real vector spaces and real-linear maps.
///
/// An element of C(W) has two encodings:
///  - the pair encoding (w1, w2), stored as one real vector of length 2n with
///    w1 on top, where i acts through J(w1, w2) = (-w2, w1);
///  - the coordinate encoding w1 + i w2 in C^n, used by every other header.
/// Tensor products use row-major Kronecker order throughout, so the
/// associator of real or complex tensor products is the identity on
/// coordinates.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quasirep/linalg.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

struct RealSpace {
  Eigen::Index dim = 1;
  std::string label;

  RealSpace() = default;
  RealSpace(Eigen::Index d, std::string name) : dim(d), label(std::move(name)) {
    if (d < 1) throw DimensionError("RealSpace: dim must be >= 1");
  }
};

class ComplexifiedSpace {
 public:
  explicit ComplexifiedSpace(RealSpace base) : base_(std::move(base)) {}

  const RealSpace& base() const { return base_; }
  Eigen::Index complex_dim() const { return base_.dim; }
  Eigen::Index pair_length() const { return 2 * base_.dim; }

  /// J = [[0, -I], [I, 0]] on the pair encoding; J^2 = -I.
  RMat complex_structure() const {
    const Eigen::Index n = base_.dim;
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -RMat::Identity(n, n);
    j.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    return j;
  }

  /// Standard embedding w -> (w, 0).
  RVec embed(const RVec& w) const {
    check_base(w, "embed");
    RVec out = RVec::Zero(pair_length());
    out.head(base_.dim) = w;
    return out;
  }

  /// (a + bi)(w1, w2) = (a w1 - b w2, b w1 + a w2).
  RVec scale(cplx alpha, const RVec& pair) const {
    check_pair(pair, "scale");
    const Eigen::Index n = base_.dim;
    RVec out(2 * n);
    out.head(n) = alpha.real() * pair.head(n) - alpha.imag() * pair.tail(n);
    out.tail(n) = alpha.imag() * pair.head(n) + alpha.real() * pair.tail(n);
    return out;
  }

  CVec to_coords(const RVec& pair) const {
    check_pair(pair, "to_coords");
    const Eigen::Index n = base_.dim;
    return pair.head(n).cast<cplx>() + I_UNIT * pair.tail(n).cast<cplx>();
  }

  RVec from_coords(const CVec& z) const {
    if (z.size() != base_.dim) throw DimensionError("from_coords: length mismatch");
    RVec out(pair_length());
    out.head(base_.dim) = z.real();
    out.tail(base_.dim) = z.imag();
    return out;
  }

 private:
  void check_base(const RVec& w, const char* what) const {
    if (w.size() != base_.dim)
      throw DimensionError(std::string(what) + ": expected length " + std::to_string(base_.dim) +
                           ", got " + std::to_string(w.size()));
  }
  void check_pair(const RVec& p, const char* what) const {
    if (p.size() != pair_length())
      throw DimensionError(std::string(what) + ": expected pair length " +
                           std::to_string(pair_length()) + ", got " + std::to_string(p.size()));
  }

  RealSpace base_;
};

/// C(f) in coordinates: the same matrix over C.
inline CMat complexify_map(const RMat& f) {
  if (!all_finite(f)) throw Error("complexify_map: non-finite entries");
  return f.cast<cplx>();
}

/// C(f) acting on pair encodings: (w1, w2) -> (f w1, f w2).
inline RMat complexify_map_pairs(const RMat& f) {
  RMat out = RMat::Zero(2 * f.rows(), 2 * f.cols());
  out.topLeftCorner(f.rows(), f.cols()) = f;
  out.bottomRightCorner(f.rows(), f.cols()) = f;
  return out;
}

/// An R-linear map W -> C^m, written componentwise as P + iQ.
struct RealToComplexMap {
  RMat real_part;
  RMat imag_part;
};

/// The unique C-linear F : W_C -> V with F o e_C = fhat, namely F = P + iQ
/// acting on the coordinate encoding.
inline CMat unique_extension(const RealToComplexMap& fhat) {
  if (fhat.real_part.rows() != fhat.imag_part.rows() ||
      fhat.real_part.cols() != fhat.imag_part.cols())
    throw DimensionError("unique_extension: real and imaginary parts differ in shape");
  return fhat.real_part.cast<cplx>() + I_UNIT * fhat.imag_part.cast<cplx>();
}

/// Complex rank of the complexified family. Columns of `vectors` are the real
/// vectors; a real spanning set of R^n must give rank n.
inline Eigen::Index complexified_span_rank(const RMat& vectors, const Tolerance& tol = {}) {
  return numerical_rank(complexify_map(vectors), tol);
}

// ---------------------------------------------------------------------------
// Monoidal structure

/// epsilon : C -> C(R), x + iy -> (x, y).
inline RVec epsilon(cplx z) {
  RVec out(2);
  out << z.real(), z.imag();
  return out;
}

inline cplx epsilon_inverse(const RVec& pair) {
  if (pair.size() != 2) throw DimensionError("epsilon_inverse: expected a pair in C(R)");
  return {pair(0), pair(1)};
}

/// mu-hat on a simple tensor of pairs:
/// (w1, w2) (x) (v1, v2) -> (w1 (x) v1 - w2 (x) v2, w1 (x) v2 + w2 (x) v1).
inline RVec mu_hat(const RVec& w_pair, const RVec& v_pair) {
  if (w_pair.size() % 2 != 0 || v_pair.size() % 2 != 0)
    throw DimensionError("mu_hat: pair encodings must have even length");
  const Eigen::Index n = w_pair.size() / 2;
  const Eigen::Index m = v_pair.size() / 2;
  const RVec w1 = w_pair.head(n), w2 = w_pair.tail(n);
  const RVec v1 = v_pair.head(m), v2 = v_pair.tail(m);
  RVec out(2 * n * m);
  out.head(n * m) = kron(w1, v1) - kron(w2, v2);
  out.tail(n * m) = kron(w1, v2) + kron(w2, v1);
  return out;
}

/// Coordinates in C(W) (x) C(V) = C^{nm} of the simple tensor x (x) y.
inline CVec simple_tensor_coords(const RVec& w_pair, const RVec& v_pair) {
  const ComplexifiedSpace w(RealSpace(w_pair.size() / 2, "W"));
  const ComplexifiedSpace v(RealSpace(v_pair.size() / 2, "V"));
  return kron(w.to_coords(w_pair), v.to_coords(v_pair));
}

/// Matrix of mu_{W,V} : C(W) (x) C(V) -> C(W (x) V), from tensor coordinates to
/// the coordinate encoding of C(W (x) V). Built as the C-linear extension of
/// mu_hat from the C-basis {(e_a, 0) (x) (e_b, 0)}.
inline CMat mu_matrix(Eigen::Index n, Eigen::Index m) {
  const ComplexifiedSpace target(RealSpace(n * m, "WV"));
  CMat out(n * m, n * m);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      RVec wa = RVec::Zero(2 * n), vb = RVec::Zero(2 * m);
      wa(a) = 1.0;
      vb(b) = 1.0;
      out.col(a * m + b) = target.to_coords(mu_hat(wa, vb));
    }
  return out;
}

/// Inverse of mu_{W,V} assembled on the real basis {(x, 0), (0, x)} of
/// C(W (x) V), x = e_a (x) e_b:
///   (x, 0) -> (e_a, 0) (x) (e_b, 0),   (0, x) -> (e_a, 0) (x) (0, e_b).
/// Returned as the real-linear map on pair encodings: first block acts on the
/// (x, 0) part, second block on the (0, x) part.
inline std::pair<CMat, CMat> mu_inverse_blocks(Eigen::Index n, Eigen::Index m) {
  CMat on_real(n * m, n * m), on_imag(n * m, n * m);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      RVec wa = RVec::Zero(2 * n), vb = RVec::Zero(2 * m), ivb = RVec::Zero(2 * m);
      wa(a) = 1.0;
      vb(b) = 1.0;
      ivb(m + b) = 1.0;
      on_real.col(a * m + b) = simple_tensor_coords(wa, vb);
      on_imag.col(a * m + b) = simple_tensor_coords(wa, ivb);
    }
  return {on_real, on_imag};
}

/// Apply mu^{-1} to a pair-encoded element of C(W (x) V).
inline CVec apply_mu_inverse(const std::pair<CMat, CMat>& blocks, const RVec& pair) {
  const Eigen::Index k = blocks.first.cols();
  return blocks.first * pair.head(k).cast<cplx>() + blocks.second * pair.tail(k).cast<cplx>();
}

struct CoherenceReport {
  bool epsilon_iso = false;
  bool mu_iso = false;
  double epsilon_max_residual = 0.0;
  double mu_max_residual = 0.0;
  double naturality_max_residual = 0.0;
  double associativity_max_residual = 0.0;
  double unitality_max_residual = 0.0;
  std::int64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Eigen::Index> dims;
  std::string product_order = "row-major";

  bool all_pass(double tol) const {
    return epsilon_iso && mu_iso && naturality_max_residual <= tol &&
           associativity_max_residual <= tol && unitality_max_residual <= tol;
  }
};

namespace detail {

inline RVec random_pair(Eigen::Index n, Rng& rng) {
  return uniform_real_matrix(2 * n, 1, rng).col(0);
}

}  // namespace detail

/// Numerically checks that C is strong monoidal on spaces of dimension
/// (dim_w, dim_v, dim_z): epsilon and mu are isomorphisms, mu is natural, and
/// the associativity square and both unit triangles commute. Random maps and
/// simple tensors are drawn uniformly from [-1, 1], seeded.
inline CoherenceReport monoidal_coherence(Eigen::Index dim_w, Eigen::Index dim_v, Eigen::Index dim_z,
                                          std::size_t trials, std::int64_t seed,
                                          double tol = 1e-12) {
  if (dim_w < 1 || dim_v < 1 || dim_z < 1)
    throw DimensionError("monoidal_coherence: dims must be >= 1");
  CoherenceReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.dims = {dim_w, dim_v, dim_z};
  Rng rng(static_cast<std::uint64_t>(seed));

  const Eigen::Index n = dim_w, m = dim_v, p = dim_z;

  // epsilon: C-linear and bijective.
  double eps_res = 0.0;
  const ComplexifiedSpace c_r(RealSpace(1, "R"));
  const RMat j1 = c_r.complex_structure();
  for (std::size_t t = 0; t < trials; ++t) {
    const cplx z(uniform(rng, -1, 1), uniform(rng, -1, 1));
    eps_res = std::max(eps_res, std::abs(epsilon_inverse(epsilon(z)) - z));
    eps_res = std::max(eps_res, (epsilon(I_UNIT * z) - j1 * epsilon(z)).cwiseAbs().maxCoeff());
    const RVec xy = detail::random_pair(1, rng);
    eps_res = std::max(eps_res, (epsilon(epsilon_inverse(xy)) - xy).cwiseAbs().maxCoeff());
  }
  rep.epsilon_max_residual = eps_res;
  rep.epsilon_iso = eps_res <= tol;

  // mu_{W,V}: matrix agrees with mu_hat on simple tensors, and the basis-built
  // inverse is C-linear and two-sided.
  const CMat mu_wv = mu_matrix(n, m);
  const auto inv_blocks = mu_inverse_blocks(n, m);
  const ComplexifiedSpace c_wv(RealSpace(n * m, "WV"));
  double mu_res = 0.0;
  mu_res = std::max(mu_res, max_abs(inv_blocks.second - I_UNIT * inv_blocks.first));
  mu_res = std::max(mu_res, max_abs(inv_blocks.first * mu_wv - CMat::Identity(n * m, n * m)));
  mu_res = std::max(mu_res, max_abs(mu_wv * inv_blocks.first - CMat::Identity(n * m, n * m)));
  for (std::size_t t = 0; t < trials; ++t) {
    const RVec x = detail::random_pair(n, rng);
    const RVec y = detail::random_pair(m, rng);
    const CVec tensor = simple_tensor_coords(x, y);
    const RVec direct = mu_hat(x, y);
    mu_res = std::max(mu_res, (c_wv.from_coords(mu_wv * tensor) - direct).cwiseAbs().maxCoeff());
    mu_res = std::max(mu_res, max_abs(apply_mu_inverse(inv_blocks, direct) - tensor));
  }
  rep.mu_max_residual = mu_res;
  rep.mu_iso = mu_res <= tol;

  // Naturality: C(f (x) g) o mu_{W,V} = mu_{W',V'} o (C(f) (x) C(g)).
  double nat = 0.0;
  const Eigen::Index n2 = dim_z, m2 = dim_w;
  const CMat mu_w2v2 = mu_matrix(n2, m2);
  for (std::size_t t = 0; t < trials; ++t) {
    const RMat f = uniform_real_matrix(n2, n, rng);
    const RMat g = uniform_real_matrix(m2, m, rng);
    const CMat lhs = complexify_map(kron(f, g)) * mu_wv;
    const CMat rhs = mu_w2v2 * kron(complexify_map(f), complexify_map(g));
    nat = std::max(nat, max_abs(lhs - rhs));

    const RVec x = detail::random_pair(n, rng);
    const RVec y = detail::random_pair(m, rng);
    const RVec lhs_pair = complexify_map_pairs(kron(f, g)) * mu_hat(x, y);
    const RVec rhs_pair = mu_hat(complexify_map_pairs(f) * x, complexify_map_pairs(g) * y);
    nat = std::max(nat, (lhs_pair - rhs_pair).cwiseAbs().maxCoeff());
  }
  rep.naturality_max_residual = nat;

  // Associativity on simple tensors x (x) y (x) z, x in C(W), y in C(V), z in C(Z).
  // Both associators are the identity on row-major coordinates.
  double assoc = 0.0;
  const CMat mu_v_z = mu_matrix(m, p);
  const CMat mu_w_vz = mu_matrix(n, m * p);
  const CMat mu_w_v = mu_wv;
  const CMat mu_wv_z = mu_matrix(n * m, p);
  {
    const CMat lhs = mu_w_vz * kron(CMat::Identity(n, n), mu_v_z);
    const CMat rhs = mu_wv_z * kron(mu_w_v, CMat::Identity(p, p));
    assoc = std::max(assoc, max_abs(lhs - rhs));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const RVec x = detail::random_pair(n, rng);
    const RVec y = detail::random_pair(m, rng);
    const RVec z = detail::random_pair(p, rng);
    const RVec lhs = mu_hat(x, mu_hat(y, z));
    const RVec rhs = mu_hat(mu_hat(x, y), z);
    assoc = std::max(assoc, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  rep.associativity_max_residual = assoc;

  // Unitality: C(l) o mu_{R,V} o (epsilon (x) id) = l and the mirrored triangle.
  double unit = 0.0;
  for (const Eigen::Index dim : {n, m, p}) {
    const ComplexifiedSpace cv(RealSpace(dim, "V"));
    for (std::size_t t = 0; t < trials; ++t) {
      const cplx alpha(uniform(rng, -1, 1), uniform(rng, -1, 1));
      const RVec v = detail::random_pair(dim, rng);
      const RVec expected = cv.scale(alpha, v);
      // R (x) V = V and V (x) R = V on coordinates, so the unitors act as identity.
      const RVec left = mu_hat(epsilon(alpha), v);
      const RVec right = mu_hat(v, epsilon(alpha));
      unit = std::max(unit, (left - expected).cwiseAbs().maxCoeff());
      unit = std::max(unit, (right - expected).cwiseAbs().maxCoeff());
    }
  }
  rep.unitality_max_residual = unit;
  return rep;
}

inline CoherenceReport monoidal_coherence(Eigen::Index dim_w, Eigen::Index dim_v, std::size_t trials,
                                          std::int64_t seed) {
  return monoidal_coherence(dim_w, dim_v, dim_v, trials, seed);
}

}  // namespace quasirep

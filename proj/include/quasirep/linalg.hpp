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

/// \file linalg.hpp
/// Dense complex linear algebra shared by every other header: Hilbert-Schmidt
/// geometry, the row-major vectorization convention, Kronecker products and
/// SVD-based rank / range / pseudo-inverse.
///
/// Vectorization is row-major: vec(X)[i*d + j] = X(i, j). With this choice
///   vec(A X B) = (A (x) B^T) vec(X)   and   Tr(F^dagger X) = vec(F)^dagger vec(X).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "quasirep/errors.hpp"

namespace quasirep {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Absolute and relative tolerances. `abs` bounds entrywise identities, `rel`
/// is the singular value cutoff relative to the largest singular value.
struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-8;

  constexpr Tolerance() = default;
  constexpr Tolerance(double abs_tol, double rel_tol) : abs(abs_tol), rel(rel_tol) {
    if (abs_tol < 0.0 || rel_tol < 0.0) throw Error("Tolerance: negative tolerance");
  }
};

inline constexpr cplx I_UNIT{0.0, 1.0};

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(std::abs(m(i, j)))) return false;
  return true;
}

/// Entrywise max norm; zero for empty matrices.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

inline void require_same_shape(const CMat& a, const CMat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch (" + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()) + ")");
}

inline void require_square(const CMat& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionError(std::string(what) + ": matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

/// <A, B>_HS = Tr(A^dagger B). Conjugate-linear in the first slot.
inline cplx hs_inner(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "hs_inner");
  require_square(a, "hs_inner");
  return (a.conjugate().cwiseProduct(b)).sum();
}

inline CVec vectorize(const CMat& a) {
  require_square(a, "vectorize");
  const Eigen::Index d = a.rows();
  CVec v(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = a(i, j);
  return v;
}

/// Inverse of vectorize. Throws when the length is not a perfect square.
inline CMat devectorize(const CVec& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size())
    throw DimensionError("devectorize: length " + std::to_string(v.size()) +
                         " is not a perfect square");
  CMat a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = v(i * d + j);
  return a;
}

/// Integer square root of an operator-space dimension; throws if not a square.
inline Eigen::Index hilbert_dim_of(Eigen::Index operator_dim) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(operator_dim))));
  if (d * d != operator_dim)
    throw DimensionError("operator dimension " + std::to_string(operator_dim) +
                         " is not a perfect square");
  return d;
}

template <class DA, class DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                                         a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline cplx trace(const CMat& a) {
  require_square(a, "trace");
  return a.trace();
}

struct RankRange {
  Eigen::Index rank = 0;
  CMat range_basis;     ///< rows x rank, orthonormal columns spanning the image
  CMat pseudo_inverse;  ///< cols x rows Moore-Penrose inverse
  RVec singular_values;
};

/// Numerical rank, an orthonormal basis of the image and the Moore-Penrose
/// inverse, all from one SVD. Singular values at or below rel * sigma_max are
/// treated as zero, so the zero matrix has rank 0.
inline RankRange rank_range(const CMat& a, const Tolerance& tol = {}) {
  RankRange out;
  if (a.size() == 0) {
    out.range_basis = CMat(a.rows(), 0);
    out.pseudo_inverse = CMat::Zero(a.cols(), a.rows());
    return out;
  }
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.singular_values = svd.singularValues();
  const double smax = out.singular_values(0);
  const double cut = tol.rel * smax;
  Eigen::Index r = 0;
  while (r < out.singular_values.size() && out.singular_values(r) > cut) ++r;
  out.rank = r;
  out.range_basis = svd.matrixU().leftCols(r);
  const CMat v = svd.matrixV().leftCols(r);
  RVec inv_s = out.singular_values.head(r).cwiseInverse();
  out.pseudo_inverse = v * inv_s.cast<cplx>().asDiagonal() * out.range_basis.adjoint();
  return out;
}

inline CMat pseudo_inverse(const CMat& a, const Tolerance& tol = {}) {
  return rank_range(a, tol).pseudo_inverse;
}

inline Eigen::Index numerical_rank(const CMat& a, const Tolerance& tol = {}) {
  return rank_range(a, tol).rank;
}

/// Real-matrix convenience wrapper.
inline Eigen::Index numerical_rank(const RMat& a, const Tolerance& tol = {}) {
  return rank_range(a.cast<cplx>(), tol).rank;
}

inline RMat pseudo_inverse(const RMat& a, const Tolerance& tol = {}) {
  return rank_range(a.cast<cplx>(), tol).pseudo_inverse.real();
}

inline bool is_hermitian(const CMat& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

/// Smallest eigenvalue of the Hermitian part of a square matrix.
inline double min_hermitian_eigenvalue(const CMat& a) {
  require_square(a, "min_hermitian_eigenvalue");
  if (a.rows() == 0) return 0.0;
  const CMat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace quasirep

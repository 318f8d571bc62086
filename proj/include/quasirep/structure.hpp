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

/// \file structure.hpp
/// Quasiprobability representations as semi-functors, and their factorization
///   Gamma(T) = chi_out C(T) phi_in,   chi phi = D,   phi chi = id.
///
/// Every map here is written in operator coordinates: vec(X) for quantum
/// systems, C^n for classical ones. GptSystem::operator_basis() converts from
/// complexified real coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quasirep/channel.hpp"
#include "quasirep/complexify.hpp"
#include "quasirep/frames.hpp"
#include "quasirep/gpt.hpp"
#include "quasirep/kirkwood_dirac.hpp"
#include "quasirep/linalg.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

/// The data a representation holds for one system.
struct SystemRep {
  std::vector<std::string> labels;
  CMat analysis;   ///< |Lambda| x N: states to quasiprobabilities
  CMat synthesis;  ///< N x |Lambda|: columns are the dual elements
  CMat id_image;   ///< analysis * synthesis
};

class Representation {
 public:
  Representation() = default;

  /// Adds a system without checking the reconstruction identity. Audits of
  /// such a representation report the failure rather than throw.
  Representation& add(const std::string& id, std::vector<std::string> labels, CMat analysis,
                      CMat synthesis) {
    if (analysis.rows() != synthesis.cols() || analysis.cols() != synthesis.rows())
      throw DimensionError("Representation: analysis and synthesis shapes are incompatible");
    if (static_cast<Eigen::Index>(labels.size()) != analysis.rows())
      throw DimensionError("Representation: label count does not match |Lambda|");
    if (!all_finite(analysis) || !all_finite(synthesis))
      throw ConstructionError("Representation: non-finite entries");
    SystemRep r{std::move(labels), std::move(analysis), std::move(synthesis), {}};
    r.id_image = r.analysis * r.synthesis;
    systems_[id] = std::move(r);
    return *this;
  }

  Representation& add(const std::string& id, const DualPair& p) {
    return add(id, p.labels(), p.analysis(), p.synthesis());
  }

  bool has(const std::string& id) const { return systems_.count(id) != 0; }

  const SystemRep& at(const std::string& id) const {
    auto it = systems_.find(id);
    if (it == systems_.end()) throw ConstructionError("Representation: no system '" + id + "'");
    return it->second;
  }

  const std::map<std::string, SystemRep>& systems() const { return systems_; }

  /// Gamma = analysis_out * superop * synthesis_in.
  CMat apply(const std::string& in, const std::string& out, const CMat& superop) const {
    const auto& a = at(in);
    const auto& b = at(out);
    if (superop.rows() != b.analysis.cols() || superop.cols() != a.synthesis.rows())
      throw DimensionError("Representation::apply: superoperator shape mismatch");
    return b.analysis * superop * a.synthesis;
  }

  CMat apply(const std::string& in, const std::string& out, const Channel& ch) const {
    return apply(in, out, ch.superop());
  }

  /// The image of the identity process, D.
  const CMat& id_image(const std::string& id) const { return at(id).id_image; }

  /// mu = analysis * x for x in operator coordinates.
  CVec represent_state(const std::string& id, const CVec& x) const {
    const auto& r = at(id);
    if (x.size() != r.analysis.cols()) throw DimensionError("represent_state: length mismatch");
    return r.analysis * x;
  }

  /// xi = c * synthesis for a covector c in operator coordinates.
  Eigen::RowVectorXcd represent_effect(const std::string& id, const Eigen::RowVectorXcd& c) const {
    const auto& r = at(id);
    if (c.size() != r.synthesis.rows()) throw DimensionError("represent_effect: length mismatch");
    return c * r.synthesis;
  }

 private:
  std::map<std::string, SystemRep> systems_;
};

/// Representation induced by valid dual pairs; throws ConstructionError on
/// a pair that fails reconstruction by more than `tol`.
inline Representation build_representation(const std::map<std::string, DualPair>& assignment,
                                           double tol = 1e-9) {
  Representation rep;
  for (const auto& [id, pair] : assignment) {
    const double r = pair.reconstruction_residual();
    if (!(r <= tol))
      throw ConstructionError("build_representation: pair for '" + id +
                              "' fails reconstruction (residual " + std::to_string(r) + ")");
    rep.add(id, pair);
  }
  return rep;
}

/// Standard KD representation, one faithful pair of bases per system.
inline Representation kd_representation(const std::map<std::string, KdBases>& kbs) {
  std::map<std::string, DualPair> pairs;
  for (const auto& [id, kb] : kbs) pairs.emplace(id, kd_frame_pair(kb));
  return build_representation(pairs);
}

/// The delta-basis representation of a classical system: analysis = synthesis = I.
inline Representation& add_classical_identity(Representation& rep, const GptSystem& sys) {
  const Eigen::Index n = sys.real_dim();
  return rep.add(sys.name(), Frame::default_labels(static_cast<std::size_t>(n)),
                 CMat::Identity(n, n), CMat::Identity(n, n));
}

// ---------------------------------------------------------------------------
// chi and phi

struct ChiPhi {
  CMat chi;  ///< |Lambda| x N
  CMat phi;  ///< N x |Lambda|
  Eigen::Index dim = 0;  ///< N, the operator-coordinate dimension
  std::vector<std::string> labels;
};

/// chi = sum_ij t_ij M(s_i) C(e_j), using the representation only through
/// its action on the spanning states.
inline CMat extract_chi(const Representation& rep, const GptSystem& sys) {
  const auto& r = rep.at(sys.name());
  const CMat& b = sys.operator_basis();
  if (r.analysis.cols() != b.rows())
    throw DimensionError("extract_chi: representation and system disagree on dimension");
  const RMat& t = sys.t();
  const Eigen::Index lam = r.analysis.rows();
  CMat chi = CMat::Zero(lam, b.rows());
  for (Eigen::Index i = 0; i < sys.states().cols(); ++i) {
    const CVec mu = rep.represent_state(sys.name(), b * sys.states().col(i).cast<cplx>());
    for (Eigen::Index j = 0; j < sys.effects().rows(); ++j) {
      if (t(i, j) == 0.0) continue;
      const RVec e = sys.effects().row(j).transpose();
      chi += t(i, j) * mu * sys.effect_operator_coords(e);
    }
  }
  return chi;
}

/// pinv(chi) D, with no injectivity check. Used by audits, which must not throw.
inline CMat phi_from_corestriction(const CMat& chi, const CMat& d_mat) {
  return pseudo_inverse(chi) * d_mat;
}

/// phi = (corestriction of chi)^{-1} D. Throws InjectivityError unless chi has
/// full column rank.
inline CMat extract_phi(const Representation& rep, const GptSystem& sys, const CMat& chi,
                        const Tolerance& tol = {}) {
  const auto rr = rank_range(chi, tol);
  if (rr.rank != chi.cols())
    throw InjectivityError("extract_phi: chi has rank " + std::to_string(rr.rank) + ", expected " +
                           std::to_string(chi.cols()));
  return rr.pseudo_inverse * rep.id_image(sys.name());
}

/// phi = sum_ij t_ij C(s_i) N(e_j), an independent route to the same map.
inline CMat extract_phi_effect_sum(const Representation& rep, const GptSystem& sys) {
  const auto& r = rep.at(sys.name());
  const CMat& b = sys.operator_basis();
  const RMat& t = sys.t();
  CMat phi = CMat::Zero(b.rows(), r.synthesis.cols());
  for (Eigen::Index i = 0; i < sys.states().cols(); ++i) {
    const CVec s = b * sys.states().col(i).cast<cplx>();
    for (Eigen::Index j = 0; j < sys.effects().rows(); ++j) {
      if (t(i, j) == 0.0) continue;
      const RVec e = sys.effects().row(j).transpose();
      phi += t(i, j) * s * rep.represent_effect(sys.name(), sys.effect_operator_coords(e));
    }
  }
  return phi;
}

inline ChiPhi extract_chi_phi(const Representation& rep, const GptSystem& sys,
                              const Tolerance& tol = {}) {
  ChiPhi cp;
  cp.chi = extract_chi(rep, sys);
  cp.phi = extract_phi(rep, sys, cp.chi, tol);
  cp.dim = cp.chi.cols();
  cp.labels = rep.at(sys.name()).labels;
  return cp;
}

/// F_l from row l of chi (vec(F_l)^dagger), G_l from column l of phi.
/// Throws ConstructionError if the result fails reconstruction.
inline DualPair frames_from_chi_phi(const ChiPhi& cp, double tol = 1e-9) {
  const Eigen::Index d = hilbert_dim_of(cp.dim);
  if (cp.chi.rows() != cp.phi.cols() || cp.chi.cols() != cp.dim || cp.phi.rows() != cp.dim)
    throw DimensionError("frames_from_chi_phi: chi and phi shapes are inconsistent");
  std::vector<CMat> f, g;
  for (Eigen::Index l = 0; l < cp.chi.rows(); ++l) {
    f.push_back(devectorize(cp.chi.row(l).adjoint()));
    g.push_back(devectorize(cp.phi.col(l)));
  }
  auto labels = cp.labels.empty() ? Frame::default_labels(f.size()) : cp.labels;
  return DualPair::checked(Frame(d, labels, std::move(f)), Frame(d, labels, std::move(g)), tol);
}

/// D(l', l) = <F_l', G_l>_HS, computed element by element.
inline CMat gram_matrix(const DualPair& p) {
  CMat g(p.size(), p.size());
  for (Eigen::Index a = 0; a < p.size(); ++a)
    for (Eigen::Index b = 0; b < p.size(); ++b)
      g(a, b) = hs_inner(p.frame()[static_cast<std::size_t>(a)], p.dual()[static_cast<std::size_t>(b)]);
  return g;
}

// ---------------------------------------------------------------------------
// Idempotent splittings

struct Splitting {
  CMat iota;  ///< n x r
  CMat pi;    ///< r x n
};

inline double idempotent_residual(const CMat& d_mat) {
  return max_abs(d_mat * d_mat - d_mat);
}

/// D = iota pi with pi iota = I_r, iota an orthonormal basis of the image.
inline Splitting split_idempotent(const CMat& d_mat, const Tolerance& tol = {},
                                  double idempotent_tol = 1e-9) {
  require_square(d_mat, "split_idempotent");
  const double res = idempotent_residual(d_mat);
  if (!(res <= idempotent_tol))
    throw IdempotentError("split_idempotent: ||D^2 - D||_max = " + std::to_string(res));
  const auto rr = rank_range(d_mat, tol);
  return {rr.range_basis, rr.range_basis.adjoint() * d_mat};
}

/// Max residual of the three identities iota2 xi = iota1, xi pi1 = pi2,
/// xi (pi1 iota2) = I.
inline double intertwiner_residual(const Splitting& s1, const Splitting& s2, const CMat& xi) {
  const Eigen::Index r = xi.rows();
  double res = max_abs(s2.iota * xi - s1.iota);
  res = std::max(res, max_abs(xi * s1.pi - s2.pi));
  res = std::max(res, max_abs(xi * (s1.pi * s2.iota) - CMat::Identity(r, r)));
  return res;
}

/// The unique xi = pi2 iota1 connecting two splittings of one idempotent.
/// Throws SplittingMismatchError if they split different idempotents or an
/// intertwining identity fails.
inline CMat splitting_isomorphism(const Splitting& s1, const Splitting& s2, double tol = 1e-9) {
  if (s1.iota.rows() != s2.iota.rows() || s1.iota.cols() != s2.iota.cols())
    throw SplittingMismatchError("splitting_isomorphism: splittings have different shapes");
  const double diff = max_abs(s1.iota * s1.pi - s2.iota * s2.pi);
  if (!(diff <= tol))
    throw SplittingMismatchError("splitting_isomorphism: idempotents differ by " +
                                 std::to_string(diff));
  CMat xi = s2.pi * s1.iota;
  const double res = intertwiner_residual(s1, s2, xi);
  if (!(res <= tol))
    throw SplittingMismatchError("splitting_isomorphism: intertwiner residual " +
                                 std::to_string(res));
  return xi;
}

// ---------------------------------------------------------------------------
// Factorization checks

/// max_T || Gamma(T) - chi_out C(T) phi_in ||_max, with C(T) the
/// complexified real-coordinate matrix of T.
inline double verify_decomposition(const Representation& rep, const GptSystem& sys_in,
                                   const ChiPhi& cp_in, const GptSystem& sys_out,
                                   const ChiPhi& cp_out, const std::vector<Channel>& channels) {
  double worst = 0.0;
  for (const auto& ch : channels) {
    const GptProcess p = process_from_channel(ch, sys_in, sys_out);
    const CMat lhs = rep.apply(sys_in.name(), sys_out.name(), ch);
    const CMat rhs = cp_out.chi * sys_out.operator_basis() * complexify_map(p.matrix) *
                     sys_in.operator_basis().adjoint() * cp_in.phi;
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

inline double verify_decomposition(const Representation& rep, const GptSystem& sys_in,
                                   const GptSystem& sys_out, const std::vector<Channel>& channels) {
  return verify_decomposition(rep, sys_in, extract_chi_phi(rep, sys_in), sys_out,
                              extract_chi_phi(rep, sys_out), channels);
}

/// Same check for arbitrary processes (either kind); Gamma(T) is taken from
/// the operator-coordinate superoperator of T.
inline double verify_decomposition(const Representation& rep, const ChiPhi& cp_in,
                                   const ChiPhi& cp_out, const std::vector<GptProcess>& procs) {
  double worst = 0.0;
  for (const auto& p : procs) {
    const CMat lhs = rep.apply(p.source.name(), p.target.name(), p.operator_matrix());
    const CMat rhs = cp_out.chi * p.target.operator_basis() * complexify_map(p.matrix) *
                     p.source.operator_basis().adjoint() * cp_in.phi;
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

struct AuditOptions {
  double tol = 1e-9;
  double decomposition_tol = 1e-8;
};

struct AuditReport {
  bool semifunctorial = false;
  double semifunctorial_residual = 0.0;
  bool idempotent = false;
  double idempotent_residual = 0.0;
  bool empirically_adequate = false;
  double adequacy_residual = 0.0;
  bool linear = false;
  double linearity_residual = 0.0;
  bool discard_preserving = false;
  double discard_residual = 0.0;
  bool functorial = false;
  double functorial_residual = 0.0;
  double decomposition_residual = 0.0;
  bool dim_check = false;
  std::int64_t seed = 0;
  std::size_t trials = 0;
  double tol = 1e-9;
  double decomposition_tol = 1e-8;

  /// Gating checks; discard preservation and functoriality are reported only.
  bool passes() const {
    return semifunctorial && empirically_adequate && linear &&
           decomposition_residual <= decomposition_tol;
  }
};

namespace detail {

inline Channel random_quantum_channel(const GptSystem& a, const GptSystem& b, Rng& rng) {
  return random_channel(a.dim(), b.dim(), rng());
}

}  // namespace detail

/// Samples `trials` channels, states and effects per system pair of the same
/// kind and fills every field. Each trial draws from child_seed(seed, trial).
/// Failures are recorded, never thrown; a system missing from `rep` is a
/// ConstructionError.
inline AuditReport audit_representation(const Representation& rep,
                                        const std::vector<GptSystem>& systems, std::size_t trials,
                                        std::int64_t seed, const AuditOptions& opt = {}) {
  if (trials < 1) throw ConstructionError("audit_representation: trials must be >= 1");
  if (systems.empty()) throw ConstructionError("audit_representation: no systems");
  for (const auto& s : systems) {
    const auto& r = rep.at(s.name());
    if (r.analysis.cols() != s.operator_basis().rows())
      throw ConstructionError("audit_representation: '" + s.name() +
                              "' has the wrong operator dimension");
  }

  AuditReport rep_out;
  rep_out.seed = seed;
  rep_out.trials = trials;
  rep_out.tol = opt.tol;
  rep_out.decomposition_tol = opt.decomposition_tol;

  // Per-system structure: idempotency, functoriality, rank, discard.
  std::vector<ChiPhi> cps;
  double idem = 0.0, func = 0.0, disc = 0.0;
  bool dims_ok = true;
  for (const auto& s : systems) {
    const auto& r = rep.at(s.name());
    idem = std::max(idem, idempotent_residual(r.id_image));
    const Eigen::Index lam = r.id_image.rows();
    func = r.id_image.rows() == r.id_image.cols() && lam == s.real_dim()
               ? std::max(func, max_abs(r.id_image - CMat::Identity(lam, lam)))
               : std::max(func, 1.0);
    ChiPhi cp;
    cp.chi = extract_chi(rep, s);
    cp.phi = phi_from_corestriction(cp.chi, r.id_image);
    cp.dim = cp.chi.cols();
    cp.labels = r.labels;
    dims_ok = dims_ok && numerical_rank(cp.chi) == s.real_dim();
    const Eigen::RowVectorXcd ones = Eigen::RowVectorXcd::Ones(lam);
    disc = std::max(disc, max_abs(ones * cp.chi - s.effect_operator_coords(s.u())));
    cps.push_back(std::move(cp));
  }
  rep_out.idempotent_residual = idem;
  rep_out.idempotent = idem <= opt.tol;
  rep_out.functorial_residual = func;
  rep_out.functorial = func <= opt.tol;
  rep_out.discard_residual = disc;
  rep_out.discard_preserving = disc <= opt.tol;
  rep_out.dim_check = dims_ok;

  double semi = 0.0, adequacy = 0.0, lin = 0.0, decomp = 0.0;
  const std::size_t n = systems.size();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(child_seed(static_cast<std::uint64_t>(seed), trial));
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        const GptSystem& a = systems[ia];
        const GptSystem& b = systems[ib];
        if (a.kind() != b.kind()) continue;
        // A third system of the same kind closes a composable triple.
        std::vector<std::size_t> same;
        for (std::size_t k = 0; k < n; ++k)
          if (systems[k].kind() == a.kind()) same.push_back(k);
        const GptSystem& c = systems[same[rng() % same.size()]];

        if (a.kind() == SystemKind::quantum) {
          const Channel t1 = detail::random_quantum_channel(a, b, rng);
          const Channel t2 = detail::random_quantum_channel(b, c, rng);
          const CMat g1 = rep.apply(a.name(), b.name(), t1);
          const CMat g2 = rep.apply(b.name(), c.name(), t2);
          semi = std::max(semi, max_abs(rep.apply(a.name(), c.name(), compose(t2, t1)) - g2 * g1));

          // Closed diagrams: with and without the channel.
          const CMat rho = random_density_matrix(a.dim(), rng);
          const CMat eff_b = random_effect(b.dim(), rng);
          const CMat eff_a = random_effect(a.dim(), rng);
          const CVec mu = rep.represent_state(a.name(), vectorize(rho));
          const Eigen::RowVectorXcd xi_b =
              rep.represent_effect(b.name(), vectorize(eff_b).adjoint());
          const Eigen::RowVectorXcd xi_a =
              rep.represent_effect(a.name(), vectorize(eff_a).adjoint());
          const cplx p_through = (xi_b * g1 * mu)(0);
          const double q_through = (eff_b * t1.apply(rho)).trace().real();
          const cplx p_direct = (xi_a * mu)(0);
          const double q_direct = (eff_a * rho).trace().real();
          adequacy = std::max(adequacy, std::abs(p_through - cplx(q_through, 0.0)));
          adequacy = std::max(adequacy, std::abs(p_direct - cplx(q_direct, 0.0)));

          // Linearity: a physical mixture, then arbitrary real coefficients.
          const Channel t3 = detail::random_quantum_channel(a, b, rng);
          const CMat g3 = rep.apply(a.name(), b.name(), t3);
          const double w = uniform(rng, 0.0, 1.0);
          lin = std::max(lin, max_abs(rep.apply(a.name(), b.name(),
                                                (w * t1.superop() + (1.0 - w) * t3.superop())
                                                    .eval()) -
                                      (w * g1 + (1.0 - w) * g3)));
          const double al = uniform(rng, -2.0, 2.0), be = uniform(rng, -2.0, 2.0);
          lin = std::max(lin, max_abs(rep.apply(a.name(), b.name(),
                                                (al * t1.superop() + be * t3.superop()).eval()) -
                                      (al * g1 + be * g3)));

          decomp = std::max(decomp, verify_decomposition(rep, a, cps[ia], b, cps[ib], {t1}));
        } else {
          const RMat m1 = random_substochastic(a.real_dim(), b.real_dim(), rng);
          const RMat m2 = random_substochastic(b.real_dim(), c.real_dim(), rng);
          const CMat g1 = rep.apply(a.name(), b.name(), complexify_map(m1));
          const CMat g2 = rep.apply(b.name(), c.name(), complexify_map(m2));
          semi = std::max(semi,
                          max_abs(rep.apply(a.name(), c.name(), complexify_map(m2 * m1)) - g2 * g1));

          const RVec p = random_subnormalized_distribution(a.real_dim(), rng);
          const RVec r_b = random_response(b.real_dim(), rng);
          const RVec r_a = random_response(a.real_dim(), rng);
          const CVec mu = rep.represent_state(a.name(), p.cast<cplx>());
          const cplx p_through =
              (rep.represent_effect(b.name(), r_b.transpose().cast<cplx>()) * g1 * mu)(0);
          const cplx p_direct = (rep.represent_effect(a.name(), r_a.transpose().cast<cplx>()) * mu)(0);
          adequacy = std::max(adequacy, std::abs(p_through - cplx(r_b.dot(m1 * p), 0.0)));
          adequacy = std::max(adequacy, std::abs(p_direct - cplx(r_a.dot(p), 0.0)));

          const RMat m3 = random_substochastic(a.real_dim(), b.real_dim(), rng);
          const CMat g3 = rep.apply(a.name(), b.name(), complexify_map(m3));
          const double w = uniform(rng, 0.0, 1.0);
          lin = std::max(lin, max_abs(rep.apply(a.name(), b.name(),
                                                complexify_map(w * m1 + (1.0 - w) * m3)) -
                                      (w * g1 + (1.0 - w) * g3)));
          const double al = uniform(rng, -2.0, 2.0), be = uniform(rng, -2.0, 2.0);
          lin = std::max(lin, max_abs(rep.apply(a.name(), b.name(),
                                                complexify_map(al * m1 + be * m3)) -
                                      (al * g1 + be * g3)));

          decomp = std::max(decomp, verify_decomposition(rep, cps[ia], cps[ib],
                                                         {GptProcess(a, b, m1)}));
        }
      }
    }
  }
  rep_out.semifunctorial_residual = semi;
  rep_out.semifunctorial = semi <= opt.tol && rep_out.idempotent;
  rep_out.adequacy_residual = adequacy;
  rep_out.empirically_adequate = adequacy <= opt.tol;
  rep_out.linearity_residual = lin;
  rep_out.linear = lin <= opt.tol;
  rep_out.decomposition_residual = decomp;
  return rep_out;
}

}  // namespace quasirep

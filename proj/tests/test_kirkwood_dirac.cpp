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
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quasirep/kirkwood_dirac.hpp"
#include "quasirep/structure.hpp"

using namespace quasirep;

namespace {

CMat plus_y_state() {
  CMat rho(2, 2);
  rho << 0.5, -0.5 * I_UNIT, 0.5 * I_UNIT, 0.5;
  return rho;
}

}  // namespace

TEST(KirkwoodDirac, QubitMubTableForZeroState) {
  const KdBases kb = kd_bases_preset("hadamard", 2);
  CMat rho = CMat::Zero(2, 2);
  rho(0, 0) = 1.0;
  CMat expect(2, 2);
  expect << 0.5, 0.5, 0.0, 0.0;
  EXPECT_LE(oracle::max_abs(CMat(kd_distribution(kb, rho) - expect)), 1e-12);
}

TEST(KirkwoodDirac, YEigenstateHasComplexEntry) {
  const KdBases kb = kd_bases_preset("hadamard", 2);
  const CMat table = kd_distribution(kb, plus_y_state());
  EXPECT_LE(std::abs(table(0, 0) - cplx(0.25, -0.25)), 1e-12);
  EXPECT_LE(std::abs(table.sum() - cplx(1.0, 0.0)), 1e-12);
}

TEST(KirkwoodDirac, MatchesDirectEvaluation) {
  Rng rng(1);
  for (Eigen::Index d : {2, 3}) {
    const KdBases kb = random_faithful_kd_bases(d, 10 + static_cast<std::uint64_t>(d));
    for (int k = 0; k < 10; ++k) {
      const CMat rho = random_density_matrix(d, rng);
      const CMat direct = oracle::direct_kd(kb.basis_a(), kb.basis_b(), rho);
      EXPECT_LE(oracle::max_abs(CMat(kd_distribution(kb, rho) - direct)), 1e-12);
    }
  }
}

TEST(KirkwoodDirac, FrameElementsHaveTheExpectedForm) {
  const DualPair p = kd_frame_pair(kd_bases_preset("hadamard", 2));
  // F_{0,+} = |0><+| / sqrt 2.
  CMat expect(2, 2);
  expect << 0.5, 0.5, 0.0, 0.0;
  EXPECT_LE(oracle::max_abs(CMat(p.frame()[0] - expect)), 1e-15);
  EXPECT_EQ(p.labels()[1], "0,1");
}

TEST(KirkwoodDirac, FramePairIsBiorthogonal) {
  for (Eigen::Index d : {2, 3, 4}) {
    const DualPair p = kd_frame_pair(random_faithful_kd_bases(d, 3));
    const Eigen::Index n = d * d;
    CMat g(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        g(a, b) = oracle::hs(p.frame()[static_cast<std::size_t>(a)], p.dual()[static_cast<std::size_t>(b)]);
    EXPECT_LE(oracle::max_abs(CMat(g - CMat::Identity(n, n))), 1e-12);
  }
}

TEST(KirkwoodDirac, FrameReproducesDistribution) {
  Rng rng(2);
  for (Eigen::Index d : {2, 3}) {
    const KdBases kb = kd_bases_preset("fourier", d);
    const DualPair p = kd_frame_pair(kb);
    for (int k = 0; k < 20; ++k) {
      const CMat rho = random_density_matrix(d, rng);
      const CVec via_frame = represent_state(p, rho);
      EXPECT_LE(oracle::max_abs(CMat(via_frame - flatten_kd_table(kd_distribution(kb, rho)))),
                1e-12);
    }
  }
}

TEST(KirkwoodDirac, XzPlaneStatesHaveRealTables) {
  const KdBases kb = kd_bases_preset("hadamard", 2);
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const double th = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double r = uniform(rng, 0.0, 1.0);
    CMat rho(2, 2);
    rho << 0.5 * (1 + r * std::cos(th)), 0.5 * r * std::sin(th), 0.5 * r * std::sin(th),
        0.5 * (1 - r * std::cos(th));
    EXPECT_LE(kd_distribution(kb, rho).imag().cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(KirkwoodDirac, IdenticalBasesAreNotFaithful) {
  const KdBases kb = kd_bases_preset("computational", 2);
  EXPECT_FALSE(kb.faithful());
  EXPECT_THROW(kd_frame_pair(kb), NonFaithfulBasesError);
  // The distribution itself is still defined.
  EXPECT_NO_THROW(kd_distribution(kb, CMat::Identity(2, 2) / 2.0));
}

TEST(KirkwoodDirac, PresetsAndValidation) {
  EXPECT_THROW(hadamard_basis(3), DimensionError);
  EXPECT_THROW(basis_preset("nope", 2), ConstructionError);
  EXPECT_THROW(KdBases(CMat::Identity(2, 2), 2.0 * CMat::Identity(2, 2)), ConstructionError);
  EXPECT_THROW(kd_distribution(kd_bases_preset("fourier", 3), CMat::Identity(2, 2)),
               DimensionError);
  const CMat f = fourier_basis(4);
  EXPECT_LE(oracle::max_abs(CMat(f.adjoint() * f - CMat::Identity(4, 4))), 1e-14);
}

TEST(KirkwoodDirac, RepresentationIsFunctorial) {
  const KdBases kb = kd_bases_preset("hadamard", 2);
  const Representation rep = kd_representation({{"quantum-2", kb}});
  EXPECT_LE(oracle::max_abs(CMat(rep.id_image("quantum-2") - CMat::Identity(4, 4))), 1e-12);
  CMat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const Channel u = Channel::unitary(h);
  const CMat g = rep.apply("quantum-2", "quantum-2", u);
  const CMat gg = rep.apply("quantum-2", "quantum-2", compose(u, u));
  EXPECT_LE(oracle::max_abs(CMat(g * g - gg)), 1e-9);
  EXPECT_LE(oracle::max_abs(CMat(gg - CMat::Identity(4, 4))), 1e-9);
  EXPECT_THROW(kd_representation({{"quantum-2", kd_bases_preset("computational", 2)}}),
               NonFaithfulBasesError);
}

TEST(KirkwoodDirac, DiscardIsPreserved) {
  Rng rng(4);
  const KdBases kb = random_faithful_kd_bases(3, 8);
  for (int k = 0; k < 20; ++k) {
    const CMat g = ginibre(3, 3, rng);
    const CMat rho = g * g.adjoint();  // unnormalized on purpose
    EXPECT_LE(std::abs(kd_distribution(kb, rho).sum() - rho.trace()), 1e-12);
  }
}

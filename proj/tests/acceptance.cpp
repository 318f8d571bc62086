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
// Acceptance suite: one PASS/FAIL line per criterion, at the stated
// tolerances. Reference values come from the independent routines in
// oracles.hpp. Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quasirep/quasirep.hpp"

using namespace quasirep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body,
               double time_limit_s = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0.0 && secs > time_limit_s) {
    out.pass = false;
    out.detail += "; over time limit";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs", secs);
  std::printf("%s %2d %s: %s (%s%s)\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(),
              timing, time_limit_s > 0.0 ? (" of " + io::format_double(time_limit_s) + "s").c_str() : "");
  if (!out.pass) ++g_failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Frame random_frame(Eigen::Index d, Eigen::Index size, Rng& rng) {
  std::vector<CMat> els;
  for (Eigen::Index k = 0; k < size; ++k) els.push_back(ginibre(d, d, rng));
  return Frame(d, std::move(els));
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QUASIREP_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const auto suite_start = std::chrono::steady_clock::now();

  criterion(1, "Born-rule adequacy", [] {
    Rng rng(1001);
    double worst = 0.0;
    int n = 0;
    for (Eigen::Index d : {2, 3})
      for (int k = 0; k < 100; ++k, ++n) {
        const DualPair p = canonical_dual(random_frame(d, d * d + k % 4, rng));
        const CMat rho = random_density_matrix(d, rng), e = random_effect(d, rng);
        const BornProbe b = born_probe(p, rho, e);
        worst = std::max(worst, std::abs(b.lhs - oracle::hs(e, rho)));
      }
    return Outcome{worst <= 1e-10, std::to_string(n) + " triples, max residual " + sci(worst) +
                                       " <= 1e-10"};
  }, 5.0);

  criterion(2, "Idempotency of the identity image", [] {
    Rng rng(1002);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Eigen::Index d = k % 2 ? 3 : 2;
      const Eigen::Index size = d * d + (k / 2) % 4;
      const std::string id = "quantum-" + std::to_string(d);
      const Representation rep = build_representation({{id, canonical_dual(random_frame(d, size, rng))}});
      const CMat g = rep.apply(id, id, Channel::identity(d));
      worst = std::max(worst, oracle::max_abs(CMat(g * g - g)));
    }
    return Outcome{worst <= 1e-9, "50 frames, max ||G^2 - G|| " + sci(worst) + " <= 1e-9"};
  });

  criterion(3, "KD exactness", [] {
    const KdBases kb = kd_bases_preset("hadamard", 2);
    CMat zero = CMat::Zero(2, 2);
    zero(0, 0) = 1.0;
    CMat expect(2, 2);
    expect << 0.5, 0.5, 0.0, 0.0;
    const double e0 = oracle::max_abs(CMat(kd_distribution(kb, zero) - expect));
    CMat y(2, 2);
    y << 0.5, -0.5 * I_UNIT, 0.5 * I_UNIT, 0.5;
    const double ey = std::abs(kd_distribution(kb, y)(0, 0) - cplx(0.25, -0.25));
    // The fixed values above were also checked against the direct oracle.
    const double eo = std::max(
        oracle::max_abs(CMat(oracle::direct_kd(kb.basis_a(), kb.basis_b(), zero) - expect)),
        std::abs(oracle::direct_kd(kb.basis_a(), kb.basis_b(), y)(0, 0) - cplx(0.25, -0.25)));
    Rng rng(1003);
    double sum_err = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Eigen::Index d = 2 + k % 3;
      const KdBases rb = random_faithful_kd_bases(d, static_cast<std::uint64_t>(k));
      const CMat rho = random_density_matrix(d, rng);
      sum_err = std::max(sum_err, std::abs(kd_distribution(rb, rho).sum() - rho.trace()));
    }
    const bool ok = e0 <= 1e-12 && ey <= 1e-12 && eo <= 1e-12 && sum_err <= 1e-12;
    return Outcome{ok, "|0><0| err " + sci(e0) + ", (0,+) err " + sci(ey) + ", oracle err " +
                           sci(eo) + ", sum err over 100 states " + sci(sum_err) + " <= 1e-12"};
  });

  criterion(4, "KD biorthogonality", [] {
    double worst = 0.0;
    for (Eigen::Index d : {2, 3})
      for (std::uint64_t s = 0; s < 10; ++s) {
        const DualPair p = kd_frame_pair(random_faithful_kd_bases(d, 400 + s));
        const Eigen::Index n = d * d;
        CMat g(n, n);
        for (Eigen::Index a = 0; a < n; ++a)
          for (Eigen::Index b = 0; b < n; ++b)
            g(a, b) = oracle::hs(p.frame()[static_cast<std::size_t>(a)],
                                 p.dual()[static_cast<std::size_t>(b)]);
        worst = std::max(worst, oracle::max_abs(CMat(g - CMat::Identity(n, n))));
      }
    return Outcome{worst <= 1e-12, "20 basis pairs, max |Gram - I| " + sci(worst) + " <= 1e-12"};
  });

  criterion(5, "Factorization through chi and phi", [] {
    const GptSystem q2 = make_system(SystemKind::quantum, 2);
    const GptSystem q3 = make_system(SystemKind::quantum, 3);
    Rng rng(1005);
    const Representation functorial = kd_representation(
        {{q2.name(), random_faithful_kd_bases(2, 51)}, {q3.name(), random_faithful_kd_bases(3, 52)}});
    const Representation semi =
        build_representation({{q2.name(), canonical_dual(random_frame(2, 7, rng))},
                              {q3.name(), canonical_dual(random_frame(3, 12, rng))}});
    const bool semi_strict = oracle::max_abs(CMat(semi.id_image(q2.name()) - CMat::Identity(7, 7))) > 1e-3;
    double decomp = 0.0, left_inv = 0.0;
    bool ranks = true;
    for (const Representation* rep : {&functorial, &semi}) {
      std::map<std::string, ChiPhi> cps;
      for (const GptSystem* s : {&q2, &q3}) {
        ChiPhi cp = extract_chi_phi(*rep, *s);
        left_inv = std::max(left_inv, oracle::max_abs(CMat(cp.phi * cp.chi -
                                                           CMat::Identity(cp.dim, cp.dim))));
        ranks = ranks && oracle::rank_lu(cp.chi) == s->real_dim();
        cps.emplace(s->name(), std::move(cp));
      }
      std::uint64_t seed = 5000;
      for (const GptSystem* a : {&q2, &q3})
        for (const GptSystem* b : {&q2, &q3}) {
          std::vector<Channel> chs;
          for (int k = 0; k < 10; ++k) chs.push_back(random_channel(a->dim(), b->dim(), seed++));
          decomp = std::max(decomp, verify_decomposition(*rep, *a, cps.at(a->name()), *b,
                                                         cps.at(b->name()), chs));
        }
    }
    const bool ok = decomp <= 1e-8 && left_inv <= 1e-9 && ranks && semi_strict;
    return Outcome{ok, "40 channels x 2 representations, decomposition " + sci(decomp) +
                           " <= 1e-8, |phi chi - I| " + sci(left_inv) + " <= 1e-9, rank(chi) = d^2 " +
                           (ranks ? "yes" : "no")};
  }, 30.0);

  criterion(6, "Splitting uniqueness", [] {
    Rng rng(1006);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Eigen::Index n = 4 + k % 4;
      const Eigen::Index r = 1 + k % (n - 1);
      const CMat chi = ginibre(n, r, rng);
      const CMat raw = ginibre(r, n, rng);
      const CMat phi = (raw * chi).inverse() * raw;
      const Splitting s1{chi, phi};
      const Splitting s2 = split_idempotent(chi * phi);
      const CMat xi = splitting_isomorphism(s1, s2);
      worst = std::max(worst, intertwiner_residual(s1, s2, xi));
    }
    return Outcome{worst <= 1e-9, "20 idempotents, max intertwiner residual " + sci(worst) +
                                      " <= 1e-9"};
  });

  criterion(7, "Complexification coherence", [] {
    double worst = 0.0;
    bool isos = true;
    for (auto dims : {std::array<Eigen::Index, 3>{1, 1, 1}, {2, 2, 2}, {2, 3, 1}, {3, 3, 2}}) {
      const auto r = monoidal_coherence(dims[0], dims[1], dims[2], 50, 700 + dims[0] * 10 + dims[1]);
      isos = isos && r.epsilon_iso && r.mu_iso;
      worst = std::max({worst, r.epsilon_max_residual, r.mu_max_residual,
                        r.naturality_max_residual, r.associativity_max_residual,
                        r.unitality_max_residual});
    }
    Rng rng(1007);
    bool spans = true;
    for (int k = 0; k < 20; ++k) {
      const Eigen::Index n = 2 + k % 4, r = 1 + k % n;
      spans = spans && complexified_span_rank(uniform_real_matrix(n, n + 2, rng)) == n;
      spans = spans && complexified_span_rank(uniform_real_matrix(n, r, rng) *
                                              uniform_real_matrix(r, n + 2, rng)) == r;
    }
    const bool ok = isos && worst <= 1e-12 && spans;
    return Outcome{ok, "4 dim triples x 50 trials, max residual " + sci(worst) +
                           " <= 1e-12, span ranks exact " + (spans ? "yes" : "no")};
  }, 5.0);

  criterion(8, "Frame and linear map round trip", [] {
    Rng rng(1008);
    double worst = 0.0;
    int missed = 0, false_pos = 0;
    for (int k = 0; k < 20; ++k) {
      const Eigen::Index d = 2 + k % 2;
      const Frame f = random_frame(d, d * d + k % 3, rng);
      const ExtractedFrame back = frame_from_linear_map(f.analysis(), d);
      if (!back.faithful) ++missed;
      for (std::size_t l = 0; l < f.elements().size(); ++l)
        worst = std::max(worst, oracle::max_abs(CMat(back.frame[l] - f[l])));
      const Eigen::Index r = 1 + k % (d * d - 1);
      const CMat deficient = ginibre(d * d + 1, r, rng) * ginibre(r, d * d, rng);
      if (frame_from_linear_map(deficient, d).faithful) ++false_pos;
    }
    const bool ok = worst <= 1e-12 && missed == 0 && false_pos == 0;
    return Outcome{ok, "20 frames, max error " + sci(worst) + " <= 1e-12, false positives " +
                           std::to_string(false_pos) + " of 20, missed " + std::to_string(missed)};
  });

  criterion(9, "Tomographic machinery", [] {
    std::vector<GptSystem> systems;
    for (Eigen::Index d = 1; d <= 4; ++d) systems.push_back(make_system(SystemKind::quantum, d));
    for (Eigen::Index n = 1; n <= 8; ++n) systems.push_back(make_system(SystemKind::classical, n));
    double id_res = 0.0;
    for (const auto& s : systems) {
      const RMat t = identity_resolution(s);
      const Eigen::Index n = s.real_dim();
      id_res = std::max(id_res, oracle::max_abs(RMat(s.states() * t * s.effects() -
                                                     RMat::Identity(n, n))));
    }
    Rng rng(1009);
    double reassembly = 0.0;
    for (int k = 0; k < 50; ++k) {
      const GptSystem& a = systems[rng() % systems.size()];
      const GptSystem& b = systems[rng() % systems.size()];
      const GptProcess p(a, b, uniform_real_matrix(b.real_dim(), a.real_dim(), rng));
      const RMat r = tomographic_decompose(p);
      reassembly = std::max(reassembly,
                            oracle::max_abs(RMat(b.states() * r * a.effects() - p.matrix)));
    }
    const bool ok = id_res <= 1e-10 && reassembly <= 1e-10;
    return Outcome{ok, "12 systems, identity residual " + sci(id_res) +
                           ", 50 processes, reassembly " + sci(reassembly) + " <= 1e-10"};
  });

  criterion(10, "CLI determinism", [&] {
    const std::string dir = QUASIREP_SCRATCH;
    const std::string fx = QUASIREP_FIXTURES;
    const std::string audit = "audit --bases random --system quantum:2 --system quantum:3 "
                              "--system classical:3 --trials 10 --seed 2024 --out ";
    const std::string kd = "kd-table --bases fourier --dim 3 --random-state --seed 2024 --out ";
    const int codes[] = {run_cli(audit + dir + "/acc_a1.json"), run_cli(audit + dir + "/acc_a2.json"),
                         run_cli(kd + dir + "/acc_k1.csv"), run_cli(kd + dir + "/acc_k2.csv")};
    bool ok = true;
    for (int c : codes) ok = ok && c == 0;
    const std::string a1 = slurp(dir + "/acc_a1.json"), k1 = slurp(dir + "/acc_k1.csv");
    const bool same = !a1.empty() && !k1.empty() && a1 == slurp(dir + "/acc_a2.json") &&
                      k1 == slurp(dir + "/acc_k2.csv");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    return Outcome{ok && same, std::string("audit and kd-table outputs byte-identical: ") +
                                   (same ? "yes" : "no") + ", acceptance run so far " +
                                   sci(secs) + "s"};
  });

  std::printf("%s: %d of 10 criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures ? 1 : 0;
}

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

// quasirep: KD tables, representation audits and complexification checks.
//
// Exit codes: 0 every gating check passed, 1 a check failed, 2 the run could
// not be set up (bad flags, unreadable or invalid input).

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quasirep/quasirep.hpp"

namespace {

using quasirep::io::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSetup = 2;

struct RunConfig {
  std::string command;
  std::int64_t seed = 0;
  std::size_t trials = 20;
  double tol = 1e-9;
  bool tol_set = false;
  std::string out;
  std::string bases = "hadamard";
  int dim = 2;
  std::string state;
  bool random_state = false;
  bool frame_route = false;
  std::string frame_file;
  std::vector<std::string> systems{"quantum:2"};
  std::vector<int> dims{2, 2, 2};
};

// Values from --config fill every field not given on the command line.
void merge_config(RunConfig& cfg, const CLI::App& sub, const json& j) {
  auto unset = [&](const char* flag) { return sub.count(flag) == 0; };
  try {
    if (j.contains("seed") && unset("--seed")) cfg.seed = j["seed"].get<std::int64_t>();
    if (j.contains("trials") && unset("--trials")) cfg.trials = j["trials"].get<std::size_t>();
    if (j.contains("tol") && unset("--tol")) {
      cfg.tol = j["tol"].get<double>();
      cfg.tol_set = true;
    }
    if (j.contains("out") && unset("--out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("bases") && unset("--bases")) cfg.bases = j["bases"].get<std::string>();
    if (j.contains("dim") && unset("--dim")) cfg.dim = j["dim"].get<int>();
    if (j.contains("state") && unset("--state")) cfg.state = j["state"].get<std::string>();
    if (j.contains("random_state") && unset("--random-state"))
      cfg.random_state = j["random_state"].get<bool>();
    if (j.contains("frame") && cfg.command == "audit" && unset("--frame"))
      cfg.frame_file = j["frame"].get<std::string>();
    if (j.contains("frame") && cfg.command == "kd-table" && unset("--frame"))
      cfg.frame_route = j["frame"].get<bool>();
    if (j.contains("systems") && unset("--system"))
      cfg.systems = j["systems"].get<std::vector<std::string>>();
    if (j.contains("dims") && unset("--dims")) cfg.dims = j["dims"].get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw quasirep::ConstructionError(std::string("config: ") + e.what());
  }
  if (j.contains("command") && j["command"] != cfg.command)
    throw quasirep::ConstructionError("config: command '" + j["command"].get<std::string>() +
                                      "' does not match '" + cfg.command + "'");
  if (cfg.trials < 1) throw quasirep::ConstructionError("trials must be >= 1");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    quasirep::io::write_text_file(cfg.out, text);
  }
}

int run_kd_table(const RunConfig& cfg) {
  using namespace quasirep;
  const KdBases kb = kd_bases_preset(cfg.bases, cfg.dim);
  CMat rho;
  if (!cfg.state.empty()) {
    rho = io::cmat_from_json(io::read_json_file(cfg.state));
  } else if (cfg.random_state) {
    Rng rng(static_cast<std::uint64_t>(cfg.seed));
    rho = random_density_matrix(cfg.dim, rng);
  } else {
    throw ConstructionError("kd-table needs --state FILE or --random-state");
  }
  CMat table;
  if (cfg.frame_route) {
    // Through the frame; refuses bases whose overlaps vanish.
    const DualPair pair = kd_frame_pair(kb);
    const CVec mu = represent_state(pair, rho);
    table = mu.reshaped<Eigen::RowMajor>(kb.dim(), kb.dim());
  } else {
    table = kd_distribution(kb, rho);
  }
  emit(cfg, io::kd_table_csv(table));
  return kExitPass;
}

quasirep::GptSystem parse_system(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw quasirep::ConstructionError("system '" + spec + "' is not KIND:DIM");
  int dim = 0;
  try {
    dim = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw quasirep::ConstructionError("system '" + spec + "' has a bad dimension");
  }
  return quasirep::make_system(quasirep::system_kind_from_string(spec.substr(0, colon)), dim);
}

int run_audit(const RunConfig& cfg) {
  using namespace quasirep;
  std::vector<GptSystem> systems;
  for (const auto& s : cfg.systems) {
    auto sys = parse_system(s);
    bool dup = false;
    for (const auto& have : systems) dup = dup || have.name() == sys.name();
    if (!dup) systems.push_back(std::move(sys));
  }

  Representation rep;
  std::string source;
  for (const auto& sys : systems) {
    if (sys.kind() == SystemKind::classical) {
      add_classical_identity(rep, sys);
      continue;
    }
    if (!cfg.frame_file.empty()) {
      const auto ff = io::frame_file_from_json(io::read_json_file(cfg.frame_file));
      if (ff.frame.hilbert_dim() != sys.dim())
        throw ConstructionError("frame file has d = " + std::to_string(ff.frame.hilbert_dim()) +
                                " but the audit includes " + sys.name());
      // A user-supplied dual is audited as given: a bad one is a failed
      // check, not a setup error.
      rep.add(sys.name(), ff.dual ? DualPair::unchecked(ff.frame, *ff.dual)
                                  : canonical_dual(ff.frame));
      source = "frame:" + cfg.frame_file;
    } else if (cfg.bases == "random") {
      rep.add(sys.name(),
              kd_frame_pair(random_faithful_kd_bases(
                  sys.dim(), child_seed(static_cast<std::uint64_t>(cfg.seed),
                                        static_cast<std::uint64_t>(sys.dim())))));
      source = "kd:random";
    } else {
      rep.add(sys.name(), kd_frame_pair(kd_bases_preset(cfg.bases, sys.dim())));
      source = "kd:" + cfg.bases;
    }
  }
  if (source.empty()) source = "classical-identity";

  AuditOptions opt;
  opt.tol = cfg.tol;
  const AuditReport report = audit_representation(rep, systems, cfg.trials, cfg.seed, opt);
  json out;
  out["representation"] = source;
  out["systems"] = json::array();
  for (const auto& s : systems) out["systems"].push_back(io::system_to_json(s));
  out["report"] = io::audit_report_to_json(report);
  emit(cfg, io::dump(out));
  return report.passes() ? kExitPass : kExitFail;
}

int run_coherence(const RunConfig& cfg) {
  using namespace quasirep;
  if (cfg.dims.size() != 3) throw ConstructionError("--dims takes three values W,V,Z");
  const double tol = cfg.tol_set ? cfg.tol : 1e-12;
  const CoherenceReport r =
      monoidal_coherence(cfg.dims[0], cfg.dims[1], cfg.dims[2], cfg.trials, cfg.seed, tol);
  json out = io::coherence_report_to_json(r);
  out["tol"] = tol;
  out["pass"] = r.all_pass(tol);
  emit(cfg, io::dump(out));
  return r.all_pass(tol) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiprobability representations: KD tables, audits, coherence checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--trials", cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
    sub->add_option_function<double>(
        "--tol",
        [&](double t) {
          cfg.tol = t;
          cfg.tol_set = true;
        },
        "Tolerance (max norm)");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  };

  auto* kd = app.add_subcommand("kd-table", "Kirkwood-Dirac table of a state as CSV");
  common(kd);
  kd->add_option("--bases", cfg.bases, "computational|hadamard|fourier (against computational)");
  kd->add_option("--dim", cfg.dim, "Hilbert space dimension")->check(CLI::Range(1, 4));
  kd->add_option("--state", cfg.state, "State as a JSON matrix");
  kd->add_flag("--random-state", cfg.random_state, "Use a seeded random density matrix");
  kd->add_flag("--frame", cfg.frame_route, "Compute through the KD frame (needs faithful bases)");

  auto* audit = app.add_subcommand("audit", "Audit a representation and emit a JSON report");
  common(audit);
  audit->add_option("--bases", cfg.bases, "KD bases preset, or 'random'");
  audit->add_option("--frame", cfg.frame_file, "Frame JSON file (optional dual)");
  audit->add_option("--system", cfg.systems, "Systems as KIND:DIM, e.g. quantum:2 classical:3");

  auto* coh = app.add_subcommand("coherence", "Check monoidal coherence of complexification");
  common(coh);
  coh->add_option("--dims", cfg.dims, "Three dimensions W,V,Z")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSetup;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (!config_path.empty()) merge_config(cfg, *sub, quasirep::io::read_json_file(config_path));
    if (cfg.command == "kd-table") return run_kd_table(cfg);
    if (cfg.command == "audit") return run_audit(cfg);
    return run_coherence(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSetup;
  }
}

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

/// \file io.hpp
/// JSON and CSV serialization. Matrices are stored row-major as
///   {"rows": r, "cols": c, "re": [...], "im": [...]}
/// with "im" optional (zero when absent). Doubles go through "%.17g" so a
/// written file reads back bit-identically.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasirep/channel.hpp"
#include "quasirep/complexify.hpp"
#include "quasirep/frames.hpp"
#include "quasirep/gpt.hpp"
#include "quasirep/kirkwood_dirac.hpp"
#include "quasirep/structure.hpp"

namespace quasirep::io {

using json = nlohmann::ordered_json;

/// "%.17g", with negative zero printed as 0.
inline std::string format_double(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json cmat_to_json(const CMat& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

inline CMat cmat_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw ConstructionError("matrix: negative shape");
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>()
                                     : std::vector<double>(re.size(), 0.0);
    const auto n = static_cast<std::size_t>(rows * cols);
    if (re.size() != n || im.size() != n)
      throw ConstructionError("matrix: expected " + std::to_string(n) + " entries");
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index k = 0; k < cols; ++k) {
        const auto idx = static_cast<std::size_t>(i * cols + k);
        m(i, k) = cplx(re[idx], im[idx]);
      }
    return m;
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("matrix: ") + e.what());
  }
}

inline json rmat_to_json(const RMat& m) {
  json j = cmat_to_json(m.cast<cplx>());
  j.erase("im");
  return j;
}

inline RMat rmat_from_json(const json& j) {
  const CMat m = cmat_from_json(j);
  if (max_abs(m.imag()) != 0.0) throw ConstructionError("matrix: expected real entries");
  return m.real();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConstructionError("'" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConstructionError("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Frames and channels

/// {"d", "labels"?, "elements": [matrix], "dual"?: [matrix]}
struct FrameFile {
  Frame frame;
  std::optional<Frame> dual;
};

inline FrameFile frame_file_from_json(const json& j) {
  try {
    const auto d = j.at("d").get<Eigen::Index>();
    std::vector<CMat> els;
    for (const auto& e : j.at("elements")) els.push_back(cmat_from_json(e));
    auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>()
                                       : Frame::default_labels(els.size());
    Frame f(d, labels, std::move(els));
    if (!j.contains("dual")) return {f, std::nullopt};
    std::vector<CMat> dual;
    for (const auto& e : j.at("dual")) dual.push_back(cmat_from_json(e));
    return {f, Frame(d, labels, std::move(dual))};
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("frame file: ") + e.what());
  }
}

inline json frame_to_json(const Frame& f, const Frame* dual = nullptr) {
  json j{{"d", f.hilbert_dim()}, {"labels", f.labels()}, {"elements", json::array()}};
  for (const auto& e : f.elements()) j["elements"].push_back(cmat_to_json(e));
  if (dual) {
    j["dual"] = json::array();
    for (const auto& e : dual->elements()) j["dual"].push_back(cmat_to_json(e));
  }
  return j;
}

/// {"d_in", "d_out", "kraus": [matrix]}
inline Channel channel_from_json(const json& j) {
  try {
    std::vector<CMat> ks;
    for (const auto& k : j.at("kraus")) ks.push_back(cmat_from_json(k));
    return Channel(j.at("d_in").get<Eigen::Index>(), j.at("d_out").get<Eigen::Index>(),
                   std::move(ks));
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("channel: ") + e.what());
  }
}

inline json channel_to_json(const Channel& ch) {
  json j{{"d_in", ch.d_in()}, {"d_out", ch.d_out()}, {"kraus", json::array()}};
  for (const auto& k : ch.kraus()) j["kraus"].push_back(cmat_to_json(k));
  return j;
}

// ---------------------------------------------------------------------------
// GPT descriptors

inline json system_to_json(const GptSystem& s) {
  return json{{"kind", to_string(s.kind())}, {"dim", s.dim()}, {"seed", s.seed()}};
}

inline GptSystem system_from_json(const json& j) {
  try {
    return make_system(system_kind_from_string(j.at("kind").get<std::string>()),
                       j.at("dim").get<Eigen::Index>(), j.value("seed", std::int64_t{0}));
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("system: ") + e.what());
  }
}

inline json process_to_json(const GptProcess& p) {
  return json{{"source", system_to_json(p.source)},
              {"target", system_to_json(p.target)},
              {"matrix", rmat_to_json(p.matrix)}};
}

inline GptProcess process_from_json(const json& j) {
  try {
    return GptProcess(system_from_json(j.at("source")), system_from_json(j.at("target")),
                      rmat_from_json(j.at("matrix")));
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("process: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json audit_report_to_json(const AuditReport& r) {
  return json{{"semifunctorial", r.semifunctorial},
              {"semifunctorial_max_residual", r.semifunctorial_residual},
              {"idempotent", r.idempotent},
              {"idempotent_max_residual", r.idempotent_residual},
              {"empirically_adequate", r.empirically_adequate},
              {"empirical_adequacy_max_residual", r.adequacy_residual},
              {"linear", r.linear},
              {"linearity_max_residual", r.linearity_residual},
              {"discard_preserving", r.discard_preserving},
              {"discard_max_residual", r.discard_residual},
              {"functorial", r.functorial},
              {"functorial_max_residual", r.functorial_residual},
              {"decomposition_residual", r.decomposition_residual},
              {"dim_check", r.dim_check},
              {"norm", "max"},
              {"tol", r.tol},
              {"decomposition_tol", r.decomposition_tol},
              {"seed", r.seed},
              {"trials", r.trials},
              {"pass", r.passes()}};
}

inline json coherence_report_to_json(const CoherenceReport& r) {
  return json{{"epsilon_iso", r.epsilon_iso},
              {"mu_iso", r.mu_iso},
              {"epsilon_max_residual", r.epsilon_max_residual},
              {"mu_max_residual", r.mu_max_residual},
              {"naturality_max_residual", r.naturality_max_residual},
              {"associativity_max_residual", r.associativity_max_residual},
              {"unitality_max_residual", r.unitality_max_residual},
              {"dims", r.dims},
              {"product_order", r.product_order},
              {"seed", r.seed},
              {"trials", r.trials}};
}

/// Deterministic JSON text: two-space indent, 17 significant digits.
inline std::string dump(const json& j) {
  // nlohmann prints doubles with max_digits10 already; the indent is fixed.
  return j.dump(2) + "\n";
}

/// a_label,b_label,re,im rows followed by "sum,,re,im".
inline std::string kd_table_csv(const CMat& table) {
  std::ostringstream out;
  out << "a_label,b_label,re,im\n";
  cplx total = 0.0;
  for (Eigen::Index a = 0; a < table.rows(); ++a)
    for (Eigen::Index b = 0; b < table.cols(); ++b) {
      out << a << ',' << b << ',' << format_double(table(a, b).real()) << ','
          << format_double(table(a, b).imag()) << '\n';
      total += table(a, b);
    }
  out << "sum,," << format_double(total.real()) << ',' << format_double(total.imag()) << '\n';
  return out.str();
}

}  // namespace quasirep::io

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
#include "quasirep/io.hpp"

using namespace quasirep;
using quasirep::io::json;

TEST(Io, MatrixRoundTripIsExact) {
  Rng rng(1);
  const CMat m = ginibre(3, 2, rng);
  const json j = json::parse(io::dump(io::cmat_to_json(m)));
  EXPECT_EQ(io::cmat_from_json(j), m);
}

TEST(Io, MatrixParseErrors) {
  EXPECT_THROW(io::cmat_from_json(json{{"rows", 2}}), ConstructionError);
  EXPECT_THROW(io::cmat_from_json(json{{"rows", 2}, {"cols", 2}, {"re", {1.0}}}), ConstructionError);
  const CMat real = io::cmat_from_json(json{{"rows", 1}, {"cols", 2}, {"re", {1.0, 2.0}}});
  EXPECT_EQ(real(0, 1), cplx(2.0, 0.0));
  EXPECT_THROW(io::rmat_from_json(io::cmat_to_json(CMat::Identity(2, 2) * I_UNIT)),
               ConstructionError);
}

TEST(Io, FrameAndChannelRoundTrip) {
  const Frame p = pauli_frame();
  const auto ff = io::frame_file_from_json(io::frame_to_json(p, &p));
  ASSERT_TRUE(ff.dual.has_value());
  EXPECT_EQ(ff.frame.labels(), p.labels());
  for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(ff.frame[l], p[l]);

  const Channel ch = random_channel(2, 3, 5);
  const Channel back = io::channel_from_json(io::channel_to_json(ch));
  EXPECT_EQ(back.superop(), ch.superop());
}

TEST(Io, SystemAndProcessDescriptors) {
  const GptSystem q = make_system(SystemKind::quantum, 2, 7);
  const json j = io::system_to_json(q);
  EXPECT_EQ(j.dump(), R"({"kind":"quantum","dim":2,"seed":7})");
  EXPECT_EQ(io::system_from_json(j).name(), "quantum-2");
  const GptProcess p = process_from_channel(random_channel(2, 2, 1), q, q);
  const GptProcess back = io::process_from_json(io::process_to_json(p));
  EXPECT_EQ(back.matrix, p.matrix);
  EXPECT_THROW(io::system_from_json(json{{"kind", "other"}, {"dim", 2}}), ConstructionError);
}

TEST(Io, KdCsvFormat) {
  CMat t(2, 2);
  t << 0.5, 0.5, 0.0, 0.0;
  EXPECT_EQ(io::kd_table_csv(t),
            "a_label,b_label,re,im\n0,0,0.5,0\n0,1,0.5,0\n1,0,0,0\n1,1,0,0\nsum,,1,0\n");
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(Io, AuditReportHasEveryField) {
  AuditReport r;
  r.seed = 3;
  const json j = io::audit_report_to_json(r);
  for (const char* key : {"semifunctorial", "empirically_adequate", "linear", "discard_preserving",
                          "functorial", "decomposition_residual", "dim_check", "seed", "trials"})
    EXPECT_TRUE(j.contains(key)) << key;
}

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

// Everything in one include.

#include "quasirep/channel.hpp"
#include "quasirep/complexify.hpp"
#include "quasirep/errors.hpp"
#include "quasirep/frames.hpp"
#include "quasirep/gpt.hpp"
#include "quasirep/io.hpp"
#include "quasirep/kirkwood_dirac.hpp"
#include "quasirep/linalg.hpp"
#include "quasirep/random.hpp"
#include "quasirep/structure.hpp"

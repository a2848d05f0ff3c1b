// Copyright 2026 The neon2rvv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Differential validation: every conversion recipe is executed against the
// NEON lane-semantics oracle over deterministic, edge-case-first inputs.
// A conversion is trusted only if results, lane framing and the full memory
// image agree bit for bit (NaNs compared after canonicalization).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/recipe_engine.hpp"

namespace neon2rvv {

// Shared memory-image geometry for load/store cases. Stores land at an
// interior offset so framing errors clobber surrounding canary bytes.
inline constexpr size_t kDiffMemoryBytes = 96;
inline constexpr uint64_t kDiffMemoryAddr = 40;

// One differential test case: concrete bindings plus the initial memory
// image (empty for families that do not touch memory).
struct DiffCase {
  Bindings bindings;
  std::vector<uint8_t> memory;
};

// Deterministic case list: the all-zero case first, then all-ones, then
// structured edge sweeps (lane extremes, float specials, boundary
// immediates), then SplitMix64-driven random cases, `count` in total.
std::vector<DiffCase> gen_cases(NeonIntrinsicId id, unsigned count,
                                uint64_t seed);

// Outcome of differentially checking one intrinsic at one configuration.
struct DiffOutcome {
  NeonIntrinsicId id;
  RecipeTier tier{RecipeTier::Unsupported};  // recipe selected at this cfg
  uint64_t cases = 0;
  uint64_t mismatches = 0;
  uint64_t recipe_ops = 0;       // max dynamic ops of the selected recipe
  uint64_t fallback_ops = 0;     // scalar-baseline charge per invocation
  double op_ratio = 1.0;         // fallback_ops / recipe_ops (1.0 on fallback)
  std::string first_mismatch;    // empty when clean
};

DiffOutcome diff_intrinsic(NeonIntrinsicId id, const VlenConfig& cfg,
                           unsigned cases, uint64_t seed);

struct DiffOptions {
  std::vector<unsigned> vlens{64, 128, 256};
  bool zvfh = true;
  unsigned cases_per_intrinsic = 1000;
  uint64_t seed = 20260814;
};

struct DiffRow {
  std::string intrinsic;
  unsigned vlen = 0;
  std::string tier;
  uint64_t cases = 0;
  uint64_t mismatches = 0;
  uint64_t recipe_ops = 0;
  uint64_t fallback_ops = 0;
  double op_ratio = 1.0;
  std::string first_mismatch;
};

struct DiffReport {
  DiffOptions options;
  std::vector<DiffRow> rows;  // catalog order within each vlen
  uint64_t total_cases = 0;
  uint64_t total_mismatches = 0;

  bool ok() const { return total_mismatches == 0; }
};

// Runs the whole catalog across the requested configurations.
DiffReport run_diff(const DiffOptions& options);

// Human-readable summary; verbose adds one line per intrinsic/vlen row.
std::string report_text(const DiffReport& report, bool verbose);

// Stable JSON form: fixed key order, byte-identical across runs.
nlohmann::ordered_json report_json(const DiffReport& report);

}  // namespace neon2rvv

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

#include "neon2rvv/diff_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "neon2rvv/rvv_machine.hpp"

namespace neon2rvv {

namespace {

// Bit patterns worth hitting on every intrinsic before random search.
std::vector<uint64_t> edge_patterns(ElementType e) {
  unsigned w = bit_width(e);
  if (elem_class(e) != ElemClass::Float) {
    uint64_t m = lane_mask(w);
    return {0,
            m,
            1,
            m >> 1,                    // INT_MAX pattern
            uint64_t{1} << (w - 1),    // INT_MIN pattern
            0xAAAAAAAAAAAAAAAAULL & m,
            0x5555555555555555ULL & m};
  }
  switch (w) {
    case 16:
      return {0x0000, 0x8000, 0x3C00, 0xBC00, 0x7C00,
              0xFC00, 0x7E00, 0x7C01, 0x0001, 0x7BFF};
    case 32:
      return {0x00000000, 0x80000000, 0x3F800000, 0xBF800000, 0x7F800000,
              0xFF800000, 0x7FC00000, 0x7F800001, 0x00000001, 0x7F7FFFFF};
    default:
      return {0,
              0x8000000000000000ULL,   // -0
              0x3FF0000000000000ULL,   // 1.0
              0xBFF0000000000000ULL,   // -1.0
              0x7FF0000000000000ULL,   // +inf
              0xFFF0000000000000ULL,   // -inf
              0x7FF8000000000000ULL,   // quiet NaN
              0x7FF0000000000001ULL,   // signaling NaN
              1,                       // smallest denormal
              0x7FEFFFFFFFFFFFFFULL};  // largest finite
  }
}

std::string hex64(uint64_t v, unsigned width_bits) {
  char buf[24];
  snprintf(buf, sizeof buf, "%0*llx", static_cast<int>(width_bits / 4),
           static_cast<unsigned long long>(v));
  return buf;
}

std::string ratio_text(double r) {
  char buf[32];
  snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

std::vector<std::byte> to_bytes(const std::vector<uint8_t>& v) {
  std::vector<std::byte> out(v.size());
  std::memcpy(out.data(), v.data(), v.size());
  return out;
}

// Compares one executed conversion against the oracle. Returns a detail
// string on the first divergence, nullopt when everything agrees.
std::optional<std::string> compare_outputs(const EvalOutput& expected,
                                           const ExecResult& got,
                                           ElementType out_elem,
                                           const std::vector<std::byte>& mem_a,
                                           const std::vector<std::byte>& mem_b) {
  if (expected.vec) {
    if (!got.output_vec) return "missing vector result";
    VectorValue e = canonicalize_nans(*expected.vec);
    VectorValue g = canonicalize_nans(*got.output_vec);
    if (!(e == g)) {
      return "result expected " + e.to_string() + " got " + g.to_string();
    }
  }
  if (expected.scalar) {
    if (!got.output_scalar) return "missing scalar result";
    unsigned w = bit_width(out_elem);
    uint64_t e = *expected.scalar;
    uint64_t g = *got.output_scalar;
    if (elem_class(out_elem) == ElemClass::Float) {
      if (is_nan_pattern(e, w)) e = canonical_nan(w);
      if (is_nan_pattern(g, w)) g = canonical_nan(w);
    }
    if (e != g) {
      return "scalar expected 0x" + hex64(e, w) + " got 0x" + hex64(g, w);
    }
  }
  for (size_t i = 0; i < mem_a.size(); ++i) {
    if (mem_a[i] != mem_b[i]) {
      return "memory image diverges at byte " + std::to_string(i) +
             " (expected 0x" + hex64(std::to_integer<uint64_t>(mem_a[i]), 8) +
             " got 0x" + hex64(std::to_integer<uint64_t>(mem_b[i]), 8) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<DiffCase> gen_cases(NeonIntrinsicId id, unsigned count,
                                uint64_t seed) {
  NeonSignature sig = signature(id);
  SplitMix64 rng(seed);
  std::vector<uint64_t> edges = edge_patterns(id.elem);
  unsigned num_edges = static_cast<unsigned>(edges.size());

  std::vector<int64_t> imm_edges;
  if (sig.imm) {
    imm_edges.push_back(sig.imm->lo);
    if (sig.imm->hi != sig.imm->lo) {
      imm_edges.push_back(sig.imm->hi);
      if (sig.imm->hi - sig.imm->lo >= 2) {
        imm_edges.push_back(sig.imm->lo + 1);
        imm_edges.push_back(sig.imm->hi - 1);
        imm_edges.push_back((sig.imm->lo + sig.imm->hi) / 2);
      }
    }
  }

  std::vector<DiffCase> out;
  out.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    DiffCase c;
    bool structured = k >= 2 && k < 2 + num_edges;
    for (size_t arg = 0; arg < sig.vec_args.size(); ++arg) {
      const NeonVectorType& t = sig.vec_args[arg];
      uint64_t m = lane_mask(bit_width(t.elem));
      VectorValue v = VectorValue::zeros(t.elem, t.lanes);
      if (k == 0) {
        // all zero
      } else if (k == 1) {
        v = VectorValue::splat(t.elem, t.lanes, m);
      } else if (structured) {
        // Offset per argument so operand pairs are misaligned and ordered
        // comparisons see both outcomes.
        for (unsigned j = 0; j < t.lanes; ++j) {
          v.set_lane(j, edges[(j + 3 * arg + (k - 2)) % num_edges]);
        }
      } else {
        for (unsigned j = 0; j < t.lanes; ++j) v.set_lane(j, rng.next() & m);
      }
      c.bindings.vectors.push_back(std::move(v));
    }
    if (sig.scalar_arg) {
      uint64_t m = lane_mask(bit_width(id.elem));
      if (k == 0) {
        c.bindings.scalar = 0;
      } else if (k == 1) {
        c.bindings.scalar = m;
      } else if (structured) {
        c.bindings.scalar = edges[(k - 2) % num_edges];
      } else {
        c.bindings.scalar = rng.next() & m;
      }
    }
    if (sig.imm) {
      if (k < imm_edges.size()) {
        c.bindings.imm = imm_edges[k];
      } else {
        uint64_t span = static_cast<uint64_t>(sig.imm->hi - sig.imm->lo) + 1;
        c.bindings.imm = sig.imm->lo + static_cast<int64_t>(rng.below(span));
      }
    }
    if (sig.memory) {
      c.bindings.addr = kDiffMemoryAddr;
      c.memory.resize(kDiffMemoryBytes);
      if (k == 0) {
        std::fill(c.memory.begin(), c.memory.end(), uint8_t{0});
      } else if (k == 1) {
        std::fill(c.memory.begin(), c.memory.end(), uint8_t{0xFF});
      } else {
        for (auto& byte : c.memory) {
          byte = static_cast<uint8_t>(rng.next() & 0xFF);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

DiffOutcome diff_intrinsic(NeonIntrinsicId id, const VlenConfig& cfg,
                           unsigned cases, uint64_t seed) {
  DiffOutcome o;
  o.id = id;
  Recipe selected = lookup_recipe(id, cfg);
  o.tier = selected.tier;
  o.fallback_ops = fallback_charge(id);
  bool customized = selected.tier != RecipeTier::ElementwiseFallback;
  Recipe forced_fb = fallback_recipe(id);

  NeonSignature sig = signature(id);
  ElementType out_elem =
      sig.result_vec ? sig.result_vec->elem : id.elem;

  auto record = [&](uint64_t k, const std::string& detail) {
    o.mismatches++;
    if (o.first_mismatch.empty()) {
      o.first_mismatch = "case " + std::to_string(k) + ": " + detail;
    }
  };

  std::vector<DiffCase> list = gen_cases(id, cases, seed);
  for (uint64_t k = 0; k < list.size(); ++k) {
    const DiffCase& c = list[k];
    o.cases++;

    std::vector<std::byte> mem_oracle = to_bytes(c.memory);
    EvalArgs ea{c.bindings.vectors, c.bindings.scalar, c.bindings.imm,
                c.bindings.addr};
    EvalOutput expected;
    try {
      expected = eval_neon(id, ea, mem_oracle);
    } catch (const std::exception& ex) {
      record(k, std::string("oracle failure: ") + ex.what());
      continue;
    }

    std::vector<std::byte> mem_rvv = to_bytes(c.memory);
    try {
      RvvProgram prog = instantiate(selected, cfg, c.bindings);
      ExecResult got = exec(prog, cfg, mem_rvv);
      o.recipe_ops = std::max(o.recipe_ops, got.stats.dynamic_op_count);
      if (auto detail =
              compare_outputs(expected, got, out_elem, mem_oracle, mem_rvv)) {
        record(k, *detail);
      }
    } catch (const std::exception& ex) {
      record(k, std::string("recipe failure: ") + ex.what());
    }

    // When a customized recipe was selected, also push the same case through
    // the forced scalar fallback so the baseline stays validated.
    if (customized) {
      std::vector<std::byte> mem_fb = to_bytes(c.memory);
      try {
        RvvProgram prog = instantiate(forced_fb, cfg, c.bindings);
        ExecResult got = exec(prog, cfg, mem_fb);
        if (got.stats.dynamic_op_count != o.fallback_ops) {
          record(k, "fallback charge " + std::to_string(o.fallback_ops) +
                        " but executed " +
                        std::to_string(got.stats.dynamic_op_count) + " ops");
        } else if (auto detail = compare_outputs(expected, got, out_elem,
                                                 mem_oracle, mem_fb)) {
          record(k, "forced fallback: " + *detail);
        }
      } catch (const std::exception& ex) {
        record(k, std::string("forced fallback failure: ") + ex.what());
      }
    }
  }

  if (!customized || o.recipe_ops == 0) {
    o.recipe_ops = customized ? o.recipe_ops : o.fallback_ops;
  }
  o.op_ratio = customized && o.recipe_ops > 0
                   ? static_cast<double>(o.fallback_ops) /
                         static_cast<double>(o.recipe_ops)
                   : 1.0;
  return o;
}

DiffReport run_diff(const DiffOptions& options) {
  DiffReport report;
  report.options = options;
  const std::vector<NeonIntrinsicId>& catalog = neon_catalog();
  for (unsigned vlen : options.vlens) {
    VlenConfig cfg{vlen, options.zvfh};
    for (size_t i = 0; i < catalog.size(); ++i) {
      uint64_t s =
          SplitMix64(options.seed ^ (static_cast<uint64_t>(vlen) << 32) ^ i)
              .next();
      DiffOutcome o =
          diff_intrinsic(catalog[i], cfg, options.cases_per_intrinsic, s);
      DiffRow row;
      row.intrinsic = catalog[i].name();
      row.vlen = vlen;
      row.tier = std::string(tier_name(o.tier));
      row.cases = o.cases;
      row.mismatches = o.mismatches;
      row.recipe_ops = o.recipe_ops;
      row.fallback_ops = o.fallback_ops;
      row.op_ratio = o.op_ratio;
      row.first_mismatch = o.first_mismatch;
      report.total_cases += o.cases;
      report.total_mismatches += o.mismatches;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string report_text(const DiffReport& report, bool verbose) {
  std::string out;
  out += "neon2rvv differential check: seed=" +
         std::to_string(report.options.seed) + ", cases/intrinsic=" +
         std::to_string(report.options.cases_per_intrinsic) + ", zvfh=" +
         (report.options.zvfh ? "on" : "off") + "\n";
  for (unsigned vlen : report.options.vlens) {
    uint64_t cases = 0, mism = 0, direct = 0, composite = 0, fallback = 0;
    for (const DiffRow& r : report.rows) {
      if (r.vlen != vlen) continue;
      cases += r.cases;
      mism += r.mismatches;
      if (r.tier == "direct") ++direct;
      if (r.tier == "composite") ++composite;
      if (r.tier == "fallback") ++fallback;
    }
    out += "  vlen=" + std::to_string(vlen) + ": " +
           std::to_string(direct + composite + fallback) + " intrinsics (" +
           std::to_string(direct) + " direct, " + std::to_string(composite) +
           " composite, " + std::to_string(fallback) + " fallback), " +
           std::to_string(cases) + " cases, " + std::to_string(mism) +
           " mismatches\n";
  }
  if (verbose) {
    for (const DiffRow& r : report.rows) {
      out += "  " + r.intrinsic + " vlen=" + std::to_string(r.vlen) + " " +
             r.tier + " ops=" + std::to_string(r.recipe_ops) + " fallback=" +
             std::to_string(r.fallback_ops) + " ratio=" +
             ratio_text(r.op_ratio) + " cases=" + std::to_string(r.cases) +
             " mismatches=" + std::to_string(r.mismatches) + "\n";
    }
  }
  for (const DiffRow& r : report.rows) {
    if (!r.first_mismatch.empty()) {
      out += "  MISMATCH " + r.intrinsic + " vlen=" +
             std::to_string(r.vlen) + ": " + r.first_mismatch + "\n";
    }
  }
  out += "total: " + std::to_string(report.total_cases) + " cases, " +
         std::to_string(report.total_mismatches) + " mismatches\n";
  out += report.ok() ? "result: OK\n" : "result: MISMATCH\n";
  return out;
}

nlohmann::ordered_json report_json(const DiffReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = "neon2rvv-check";
  j["seed"] = report.options.seed;
  j["cases_per_intrinsic"] = report.options.cases_per_intrinsic;
  j["zvfh"] = report.options.zvfh;
  j["vlens"] = report.options.vlens;
  j["total_cases"] = report.total_cases;
  j["total_mismatches"] = report.total_mismatches;
  j["ok"] = report.ok();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const DiffRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["intrinsic"] = r.intrinsic;
    row["vlen"] = r.vlen;
    row["tier"] = r.tier;
    row["cases"] = r.cases;
    row["mismatches"] = r.mismatches;
    row["recipe_ops"] = r.recipe_ops;
    row["fallback_ops"] = r.fallback_ops;
    row["op_ratio"] = std::round(r.op_ratio * 10000.0) / 10000.0;
    if (!r.first_mismatch.empty()) row["first_mismatch"] = r.first_mismatch;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace neon2rvv

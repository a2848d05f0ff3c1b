// Copyright 2026 The neon2rvv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits non-zero if any criterion fails.
//
//   A1  full differential validation is clean and fast
//   A2  type availability counts across vlen and zvfh
//   A3  rbit conversion is exhaustively correct and involutive
//   A4  store conversions frame memory exactly
//   A5  the add-kernel round trip, semantic and textual
//   A6  op-count proxy never regresses and matches frozen showcases
//   A7  translation is a fixed point and preserves non-NEON bytes

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "neon2rvv/diff_harness.hpp"
#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/recipe_engine.hpp"
#include "neon2rvv/rewriter.hpp"
#include "neon2rvv/rvv_machine.hpp"
#include "neon2rvv/vector_types.hpp"

namespace fs = std::filesystem;
using namespace neon2rvv;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << ": " << name << ": " << detail
            << "\n";
  if (!ok) ++g_failures;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A1: the whole catalog, three vector lengths, 1000 deterministic cases per
// intrinsic per length, every case also executed on the forced fallback path.
void a1_full_differential() {
  auto start = std::chrono::steady_clock::now();
  DiffOptions opts;  // vlens {64,128,256}, 1000 cases, seed 20260814
  DiffReport rep = run_diff(opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  uint64_t expect_cases = uint64_t(neon_catalog().size()) * 3 * 1000;
  bool ok = rep.ok() && rep.total_cases == expect_cases && secs < 300.0;
  std::ostringstream d;
  d << rep.total_cases << " cases across vlen {64,128,256}, "
    << rep.total_mismatches << " mismatches, " << std::fixed
    << std::setprecision(1) << secs << "s";
  report("A1 differential validation", ok, d.str());
}

// A2: 0/11/22 types available at vlen 32/64/128 with zvfh; dropping zvfh
// removes exactly the three half-precision cells (one at 64, two at 128).
void a2_type_availability() {
  auto count = [](unsigned vlen, bool zvfh) {
    unsigned n = 0;
    for (const NeonVectorType& t : all_neon_types())
      if (map_type(t, VlenConfig{vlen, zvfh}).mapped()) ++n;
    return n;
  };
  unsigned c32 = count(32, true), c64 = count(64, true), c128 = count(128, true);
  unsigned n64 = count(64, false), n128 = count(128, false);
  unsigned flipped = 0;
  bool all_f16 = true;
  for (const NeonVectorType& t : all_neon_types()) {
    for (unsigned vlen : {64u, 128u}) {
      if (map_type(t, VlenConfig{vlen, true}).mapped() !=
          map_type(t, VlenConfig{vlen, false}).mapped()) {
        ++flipped;
        all_f16 = all_f16 && t.elem == ElementType::F16;
      }
    }
  }
  bool ok = c32 == 0 && c64 == 11 && c128 == 22 && n64 == 10 && n128 == 20 &&
            flipped == 3 && all_f16;
  std::ostringstream d;
  d << "mapped " << c32 << "/" << c64 << "/" << c128
    << " at vlen 32/64/128 with zvfh; without zvfh " << n64 << "/" << n128
    << " (" << flipped << " f16 cells gated)";
  report("A2 type availability", ok, d.str());
}

// A3: every byte value through every rbit form agrees with the oracle and an
// independent bit-by-bit reversal; double application is the identity.
void a3_rbit_exhaustive() {
  auto ref_reverse = [](uint8_t b) {
    uint8_t out = 0;
    for (int i = 0; i < 8; ++i)
      if (b & (1u << i)) out |= 1u << (7 - i);
    return out;
  };
  VlenConfig cfg{128, true};
  uint64_t checked = 0, wrong = 0;
  for (const char* name : {"vrbit_s8", "vrbit_u8", "vrbitq_s8", "vrbitq_u8"}) {
    NeonIntrinsicId id = *parse_intrinsic_name(name);
    unsigned lanes = intrinsic_lanes(id);
    ElementType elem = signature(id).vec_args[0].elem;
    Recipe recipe = lookup_recipe(id, cfg);
    for (unsigned base = 0; base < 256; base += lanes) {
      std::vector<uint64_t> in(lanes);
      for (unsigned i = 0; i < lanes; ++i) in[i] = (base + i) & 0xFF;
      VectorValue v(elem, in);
      EvalArgs ea;
      ea.vectors = {v};
      VectorValue oracle = *eval_neon(id, ea).vec;
      Bindings b;
      b.vectors = {v};
      VectorValue machine = *exec(instantiate(recipe, cfg, b), cfg).output_vec;
      for (unsigned i = 0; i < lanes; ++i) {
        ++checked;
        uint8_t expect = ref_reverse(uint8_t(in[i]));
        if (oracle.lane(i) != expect || machine.lane(i) != expect) ++wrong;
      }
    }
  }
  // Involution over random vectors.
  SplitMix64 rng(20260814);
  NeonIntrinsicId q = *parse_intrinsic_name("vrbitq_u8");
  Recipe recipe = lookup_recipe(q, cfg);
  uint64_t invol_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<uint64_t> lanes(16);
    for (auto& l : lanes) l = rng.next() & 0xFF;
    VectorValue v(ElementType::U8, lanes);
    Bindings b1;
    b1.vectors = {v};
    VectorValue once = *exec(instantiate(recipe, cfg, b1), cfg).output_vec;
    Bindings b2;
    b2.vectors = {once};
    VectorValue twice = *exec(instantiate(recipe, cfg, b2), cfg).output_vec;
    if (!(twice == v)) ++invol_bad;
  }
  bool ok = wrong == 0 && invol_bad == 0 && checked == 4 * 256;
  std::ostringstream d;
  d << checked << " byte values over 4 forms, " << wrong
    << " disagreements; 1000 involution trials, " << invol_bad << " failures";
  report("A3 rbit exhaustive", ok, d.str());
}

// A4: a 4-lane store at vlen=256 (vlmax 8) writes exactly 16 bytes at the
// interior offset and leaves every surrounding canary byte untouched.
void a4_store_framing() {
  VlenConfig cfg{256, true};
  NeonIntrinsicId id = *parse_intrinsic_name("vst1q_s32");
  Recipe recipe = lookup_recipe(id, cfg);
  std::vector<std::byte> mem(kDiffMemoryBytes, std::byte{kTailCanaryByte});
  Bindings b;
  b.vectors = {VectorValue::from_i64(ElementType::I32,
                                     {0x01020304, 0x11121314, 0x21222324,
                                      0x31323334})};
  b.addr = kDiffMemoryAddr;
  exec(instantiate(recipe, cfg, b), cfg, mem);
  std::vector<std::byte> expect(kDiffMemoryBytes, std::byte{kTailCanaryByte});
  EvalArgs ea;
  ea.vectors = b.vectors;
  ea.addr = kDiffMemoryAddr;
  eval_neon(id, ea, expect);
  size_t changed = 0;
  bool frame_ok = true, rest_ok = true;
  for (size_t i = 0; i < mem.size(); ++i) {
    if (mem[i] != std::byte{kTailCanaryByte}) ++changed;
    bool in_frame = i >= kDiffMemoryAddr && i < kDiffMemoryAddr + 16;
    if (in_frame && mem[i] != expect[i]) frame_ok = false;
    if (!in_frame && mem[i] != std::byte{kTailCanaryByte}) rest_ok = false;
  }
  bool ok = changed == 16 && frame_ok && rest_ok && mem == expect;
  std::ostringstream d;
  d << changed << " bytes written at [" << kDiffMemoryAddr << ","
    << kDiffMemoryAddr + 16 << "), canaries "
    << (rest_ok ? "intact" : "CLOBBERED") << ", image "
    << (mem == expect ? "matches oracle" : "DIFFERS");
  report("A4 store framing", ok, d.str());
}

// A5: the canonical add kernel, checked two ways at vlen=128: executing the
// conversion recipes reproduces NEON's [4,6,8,10], and translating the
// fixture emits vle32/vadd/vse32 in source order.
void a5_listing_roundtrip() {
  VlenConfig cfg{128, true};
  std::vector<std::byte> mem(kDiffMemoryBytes, std::byte{0});
  auto put32 = [&](size_t at, uint32_t v) {
    for (int i = 0; i < 4; ++i) mem[at + i] = std::byte((v >> (8 * i)) & 0xFF);
  };
  for (int i = 0; i < 4; ++i) put32(0 + 4 * i, uint32_t(i));      // a
  for (int i = 0; i < 4; ++i) put32(16 + 4 * i, uint32_t(4 + i));  // b
  auto run1 = [&](const char* name, Bindings b) {
    Recipe r = lookup_recipe(*parse_intrinsic_name(name), cfg);
    return exec(instantiate(r, cfg, b), cfg, mem);
  };
  Bindings la;
  la.addr = 0;
  VectorValue va = *run1("vld1q_s32", la).output_vec;
  Bindings lb;
  lb.addr = 16;
  VectorValue vb = *run1("vld1q_s32", lb).output_vec;
  Bindings add;
  add.vectors = {va, vb};
  VectorValue vc = *run1("vaddq_s32", add).output_vec;
  Bindings st;
  st.vectors = {vc};
  st.addr = 32;
  run1("vst1q_s32", st);
  bool semantic = vc == VectorValue::from_i64(ElementType::I32, {4, 6, 8, 10});
  for (int i = 0; i < 4; ++i) {
    uint32_t got = 0;
    for (int j = 0; j < 4; ++j)
      got |= uint32_t(mem[32 + 4 * i + j]) << (8 * j);
    semantic = semantic && got == uint32_t(4 + 2 * i);
  }

  std::string src = slurp(fs::path(NEON2RVV_FIXTURE_DIR) /
                          "listing_roundtrip.c");
  RewriteResult res = rewrite_source(src, cfg, RewriteMode::Strict);
  size_t p_le = res.text.find("__riscv_vle32_v_i32m1");
  size_t p_add = res.text.find("__riscv_vadd_vv_i32m1");
  size_t p_se = res.text.find("__riscv_vse32_v_i32m1");
  bool textual = res.ok && p_le != std::string::npos &&
                 p_add != std::string::npos && p_se != std::string::npos &&
                 p_le < p_add && p_add < p_se &&
                 res.text.find("arm_neon.h") == std::string::npos;
  bool ok = semantic && textual;
  std::ostringstream d;
  d << "semantics " << (semantic ? "[4 6 8 10]" : "WRONG") << ", translation "
    << (textual ? "emits vle32/vadd/vse32 in order" : "MISSING expected ops");
  report("A5 add-kernel round trip", ok, d.str());
}

// A6: customized conversions never need more ops than the scalar baseline
// charge anywhere, and the showcase trio at vlen=128 matches frozen ratios.
void a6_op_ratios() {
  uint64_t rows = 0, below_one = 0;
  for (unsigned vlen : {64u, 128u, 256u}) {
    VlenConfig cfg{vlen, true};
    for (NeonIntrinsicId id : neon_catalog()) {
      Recipe r = lookup_recipe(id, cfg);
      if (r.tier == RecipeTier::ElementwiseFallback) continue;
      ++rows;
      uint64_t ops = recipe_opcodes(r, cfg).size();
      if (ops > fallback_charge(id)) ++below_one;
    }
  }
  VlenConfig cfg{128, true};
  auto ratio = [&](const char* name) {
    NeonIntrinsicId id = *parse_intrinsic_name(name);
    Recipe r = lookup_recipe(id, cfg);
    return double(fallback_charge(id)) /
           double(recipe_opcodes(r, cfg).size());
  };
  double ceq = ratio("vceqq_s32");
  double gh = ratio("vget_high_s32");
  double rbit = ratio("vrbitq_u8");
  bool frozen = std::fabs(ceq - 4.0) < 1e-9 && std::fabs(gh - 6.0) < 1e-9 &&
                std::fabs(rbit - 64.0 / 15.0) < 1e-9 && ceq > 1.0 &&
                gh > 1.0 && rbit > 1.0;
  bool ok = below_one == 0 && rows > 0 && frozen;
  std::ostringstream d;
  d << rows << " customized rows with ratio >= 1 (" << below_one
    << " regressions); showcases " << std::fixed << std::setprecision(2) << ceq
    << "/" << gh << "/" << rbit << " vs 4.00/6.00/4.27";
  report("A6 op-count proxy", ok, d.str());
}

// A7: translating every fixture is idempotent (the output is a fixed point)
// and bytes outside NEON constructs survive, including comment/string traps
// and entire NEON-free files.
void a7_fixed_point() {
  VlenConfig cfg{128, true};
  fs::path dir(NEON2RVV_FIXTURE_DIR);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".c") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  size_t translated = 0, not_fixed = 0;
  bool traps_ok = true, passthrough_ok = true, corpus_ok = files.size() >= 10;
  for (const fs::path& f : files) {
    std::string src = slurp(f);
    RewriteResult once = rewrite_source(src, cfg, RewriteMode::Permissive);
    if (!once.ok) {
      ++not_fixed;
      continue;
    }
    ++translated;
    RewriteResult twice = rewrite_source(once.text, cfg,
                                         RewriteMode::Permissive);
    if (!twice.ok || twice.text != once.text) ++not_fixed;
    if (f.filename() == "traps_comments.c") {
      for (const char* trap :
           {"/* TRAP1: vaddq_s32(a, b) inside a block comment must stay NEON. "
            "*/",
            "// TRAP2: int32x4_t and vld1q_s32 in a line comment must stay "
            "NEON.",
            "\"vmulq_s8(int8x16_t) inside a string stays NEON\"",
            "\"escaped quote \\\" then vsubq_u16 stays too\"",
            "// trailing TRAP6: vmulq_s32(a, b)"})
        traps_ok = traps_ok && once.text.find(trap) != std::string::npos;
      traps_ok =
          traps_ok && once.text.find("__riscv_vadd_vv_i32m1(a, b, 4)") !=
                          std::string::npos;
    }
    if (f.filename() == "no_neon.c")
      passthrough_ok = !once.changed && once.text == src;
  }
  bool ok = corpus_ok && not_fixed == 0 && translated == files.size() &&
            traps_ok && passthrough_ok;
  std::ostringstream d;
  d << translated << "/" << files.size() << " fixtures translated, "
    << not_fixed << " not a fixed point; traps "
    << (traps_ok ? "preserved" : "DAMAGED") << "; NEON-free file "
    << (passthrough_ok ? "byte-identical" : "MODIFIED");
  report("A7 translation fixed point", ok, d.str());
}

}  // namespace

int main() {
  a1_full_differential();
  a2_type_availability();
  a3_rbit_exhaustive();
  a4_store_framing();
  a5_listing_roundtrip();
  a6_op_ratios();
  a7_fixed_point();
  if (g_failures == 0) {
    std::cout << "acceptance: all 7 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}

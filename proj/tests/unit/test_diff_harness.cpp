// Copyright 2026 The neon2rvv Authors
// SPDX-License-Identifier: Apache-2.0

#include "neon2rvv/diff_harness.hpp"

#include <algorithm>

#include "doctest.h"

using namespace neon2rvv;

namespace {

NeonIntrinsicId by_name(const std::string& name) {
  auto id = parse_intrinsic_name(name);
  REQUIRE_MESSAGE(id.has_value(), name);
  return *id;
}

bool all_lanes_are(const VectorValue& v, uint64_t bits) {
  for (unsigned i = 0; i < v.lanes(); ++i)
    if (v.lane(i) != bits) return false;
  return true;
}

}  // namespace

TEST_CASE("gen_cases is deterministic and edge-first") {
  NeonIntrinsicId id = by_name("vaddq_s32");
  auto a = gen_cases(id, 50, 20260814);
  auto b = gen_cases(id, 50, 20260814);
  REQUIRE(a.size() == 50);
  REQUIRE(b.size() == 50);
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].bindings.vectors.size() == b[i].bindings.vectors.size());
    for (size_t j = 0; j < a[i].bindings.vectors.size(); ++j)
      CHECK(a[i].bindings.vectors[j] == b[i].bindings.vectors[j]);
    CHECK(a[i].memory == b[i].memory);
  }
  // Case 0: all lanes zero. Case 1: all lanes ones (full mask).
  CHECK(all_lanes_are(a[0].bindings.vectors[0], 0));
  CHECK(all_lanes_are(a[0].bindings.vectors[1], 0));
  CHECK(all_lanes_are(a[1].bindings.vectors[0], 0xFFFFFFFFULL));

  // A different seed changes the random tail but not the edge block.
  auto c = gen_cases(id, 50, 7);
  CHECK(all_lanes_are(c[0].bindings.vectors[0], 0));
  bool any_difference = false;
  for (size_t i = 0; i < c.size(); ++i)
    any_difference =
        any_difference || !(c[i].bindings.vectors[0] == a[i].bindings.vectors[0]);
  CHECK(any_difference);
}

TEST_CASE("gen_cases covers lane extremes and float specials") {
  auto cases = gen_cases(by_name("vminq_f32"), 200, 1);
  bool saw_qnan = false, saw_inf = false, saw_neg_zero = false,
       saw_snan = false;
  for (const DiffCase& c : cases) {
    for (const VectorValue& v : c.bindings.vectors) {
      for (unsigned i = 0; i < v.lanes(); ++i) {
        uint64_t bits = v.lane(i);
        if (bits == 0x7FC00000ULL) saw_qnan = true;
        if (bits == 0x7F800001ULL) saw_snan = true;
        if (bits == 0x7F800000ULL || bits == 0xFF800000ULL) saw_inf = true;
        if (bits == 0x80000000ULL) saw_neg_zero = true;
      }
    }
  }
  CHECK(saw_qnan);
  CHECK(saw_snan);
  CHECK(saw_inf);
  CHECK(saw_neg_zero);

  auto icases = gen_cases(by_name("vadd_s8"), 100, 1);
  bool saw_min = false, saw_max = false;
  for (const DiffCase& c : icases) {
    for (const VectorValue& v : c.bindings.vectors) {
      for (unsigned i = 0; i < v.lanes(); ++i) {
        if (v.lane(i) == 0x80) saw_min = true;
        if (v.lane(i) == 0x7F) saw_max = true;
      }
    }
  }
  CHECK(saw_min);
  CHECK(saw_max);
}

TEST_CASE("gen_cases sweeps boundary immediates") {
  auto cases = gen_cases(by_name("vshrq_n_s16"), 300, 20260814);
  std::vector<int64_t> imms;
  for (const DiffCase& c : cases) {
    REQUIRE(c.bindings.imm.has_value());
    CHECK(*c.bindings.imm >= 1);
    CHECK(*c.bindings.imm <= 16);
    imms.push_back(*c.bindings.imm);
  }
  // Both boundaries appear, and early: lo and hi lead the sweep.
  CHECK(imms[0] == 1);
  CHECK(std::count(imms.begin(), imms.end(), 16) > 0);
  CHECK(std::count(imms.begin(), imms.end(), 1) > 0);

  auto lanes = gen_cases(by_name("vgetq_lane_s32"), 100, 20260814);
  bool lane0 = false, lane3 = false;
  for (const DiffCase& c : lanes) {
    lane0 = lane0 || *c.bindings.imm == 0;
    lane3 = lane3 || *c.bindings.imm == 3;
  }
  CHECK(lane0);
  CHECK(lane3);
}

TEST_CASE("memory families get a canary-patterned image") {
  auto cases = gen_cases(by_name("vst1q_s32"), 10, 20260814);
  for (const DiffCase& c : cases) {
    REQUIRE(c.memory.size() == kDiffMemoryBytes);
    REQUIRE(c.bindings.addr.has_value());
    CHECK(*c.bindings.addr == kDiffMemoryAddr);
  }
  auto pure = gen_cases(by_name("vaddq_s32"), 10, 20260814);
  for (const DiffCase& c : pure) CHECK(c.memory.empty());
}

TEST_CASE("diff_intrinsic frozen outcomes at vlen 128") {
  VlenConfig cfg{128, true};
  DiffOutcome add = diff_intrinsic(by_name("vaddq_s32"), cfg, 200, 20260814);
  CHECK(add.tier == RecipeTier::Direct);
  CHECK(add.cases == 200);
  CHECK(add.mismatches == 0);
  CHECK(add.first_mismatch.empty());
  CHECK(add.recipe_ops == 1);
  CHECK(add.fallback_ops == 12);
  CHECK(add.op_ratio == doctest::Approx(12.0));

  DiffOutcome ceq = diff_intrinsic(by_name("vceqq_s32"), cfg, 200, 20260814);
  CHECK(ceq.tier == RecipeTier::Composite);
  CHECK(ceq.recipe_ops == 3);
  CHECK(ceq.fallback_ops == 12);
  CHECK(ceq.op_ratio == doctest::Approx(4.0));

  DiffOutcome fmin = diff_intrinsic(by_name("vminq_f32"), cfg, 200, 20260814);
  CHECK(fmin.mismatches == 0);
  CHECK(fmin.recipe_ops == 5);
  CHECK(fmin.fallback_ops == 20);
  CHECK(fmin.op_ratio == doctest::Approx(4.0));

  DiffOutcome gh = diff_intrinsic(by_name("vget_high_s32"), cfg, 200, 20260814);
  CHECK(gh.recipe_ops == 1);
  CHECK(gh.fallback_ops == 6);
  CHECK(gh.op_ratio == doctest::Approx(6.0));

  DiffOutcome rbit = diff_intrinsic(by_name("vrbitq_u8"), cfg, 200, 20260814);
  CHECK(rbit.recipe_ops == 15);
  CHECK(rbit.fallback_ops == 64);
  CHECK(rbit.op_ratio == doctest::Approx(64.0 / 15.0));

  // On the fallback path the ratio is pinned at 1.
  DiffOutcome fb = diff_intrinsic(by_name("vaddq_s32"), VlenConfig{64, true},
                                  200, 20260814);
  CHECK(fb.tier == RecipeTier::ElementwiseFallback);
  CHECK(fb.mismatches == 0);
  CHECK(fb.op_ratio == doctest::Approx(1.0));
}

TEST_CASE("run_diff over a reduced matrix") {
  DiffOptions opts;
  opts.vlens = {64, 128};
  opts.cases_per_intrinsic = 10;
  DiffReport rep = run_diff(opts);
  CHECK(rep.ok());
  CHECK(rep.rows.size() == neon_catalog().size() * 2);
  CHECK(rep.total_cases == uint64_t(neon_catalog().size()) * 2 * 10);
  CHECK(rep.total_mismatches == 0);
  for (const DiffRow& row : rep.rows) {
    CHECK(row.cases == 10);
    CHECK(row.mismatches == 0);
    CHECK(row.op_ratio >= 1.0);  // conversions never lose to the baseline
    CHECK((row.vlen == 64 || row.vlen == 128));
  }
  // Rows come out in vlen-major, catalog order: stable for diffing reports.
  CHECK(rep.rows[0].vlen == 64);
  CHECK(rep.rows[neon_catalog().size()].vlen == 128);
  CHECK(rep.rows[0].intrinsic == neon_catalog()[0].name());
}

TEST_CASE("reports serialize deterministically") {
  DiffOptions opts;
  opts.vlens = {128};
  opts.cases_per_intrinsic = 5;
  DiffReport a = run_diff(opts);
  DiffReport b = run_diff(opts);
  CHECK(report_json(a).dump(2) == report_json(b).dump(2));

  nlohmann::ordered_json j = report_json(a);
  CHECK(j["seed"] == 20260814);
  CHECK(j["cases_per_intrinsic"] == 5);
  CHECK(j["vlens"][0] == 128);
  CHECK(j["total_cases"] == a.total_cases);
  CHECK(j["total_mismatches"] == 0);
  CHECK(j["ok"] == true);
  CHECK(j["rows"].size() == a.rows.size());
  CHECK(j["rows"][0].contains("intrinsic"));
  CHECK(j["rows"][0].contains("op_ratio"));

  std::string text = report_text(a, false);
  CHECK(text.find("result: OK") != std::string::npos);
  CHECK(text.find("455") != std::string::npos);
  std::string verbose = report_text(a, true);
  CHECK(verbose.find("vaddq_s32") != std::string::npos);
  CHECK(verbose.size() > text.size());
}

TEST_CASE("memory image comparison catches framing differences") {
  // Same store executed via recipe and oracle produces identical images;
  // this is the property the harness enforces on every case.
  VlenConfig cfg{256, true};
  DiffOutcome st = diff_intrinsic(by_name("vst1q_s32"), cfg, 100, 20260814);
  CHECK(st.mismatches == 0);
  DiffOutcome ld = diff_intrinsic(by_name("vld1q_u8"), cfg, 100, 20260814);
  CHECK(ld.mismatches == 0);
}

TEST_CASE("f16 intrinsics fall back without zvfh and still agree") {
  VlenConfig no_zvfh{128, false};
  DiffOutcome out = diff_intrinsic(by_name("vdupq_n_f16"), no_zvfh, 50, 1);
  CHECK(out.tier == RecipeTier::ElementwiseFallback);
  CHECK(out.mismatches == 0);
  VlenConfig with{128, true};
  DiffOutcome direct = diff_intrinsic(by_name("vdupq_n_f16"), with, 50, 1);
  CHECK(direct.tier == RecipeTier::Direct);
  CHECK(direct.mismatches == 0);
  DiffOutcome comb = diff_intrinsic(by_name("vcombine_f16"), with, 50, 1);
  CHECK(comb.mismatches == 0);
}

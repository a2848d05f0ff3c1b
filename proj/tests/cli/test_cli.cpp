// Copyright 2026 The neon2rvv Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the installed command line: exit-code contract
// (0 success, 1 differential mismatch, 2 usage/IO/strict errors), file
// outputs and the JSON exports.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const char* kCli = NEON2RVV_CLI_PATH;
const char* kFixtures = NEON2RVV_FIXTURE_DIR;

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("neon2rvv_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with `args` appended, capturing stdout/stderr separately.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int seq = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(seq) + ".txt");
  fs::path err = scratch_dir() / ("err" + std::to_string(seq) + ".txt");
  ++seq;
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + kCli + "\" " +
                    args + " > \"" + out.string() + "\" 2> \"" +
                    err.string() + "\"";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fixture(const std::string& name) {
  return (fs::path(kFixtures) / name).string();
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("translate a fixture to a file") {
  fs::path out = scratch_dir() / "listing.rvv.c";
  CliResult r = run_cli("translate \"" + fixture("listing_roundtrip.c") +
                        "\" -o \"" + out.string() + "\" --vlen 128");
  CHECK(r.exit_code == 0);
  std::string text = slurp(out);
  CHECK(has(text, "__riscv_vle32_v_i32m1"));
  CHECK(has(text, "__riscv_vadd_vv_i32m1"));
  CHECK(has(text, "__riscv_vse32_v_i32m1"));
  CHECK(has(text, "#include <riscv_vector.h>"));
  CHECK_FALSE(has(text, "arm_neon.h"));
  // The summary line lands on stderr so stdout stays pipeable.
  CHECK(has(r.err, "call sites"));
}

TEST_CASE("translate writes to stdout by default") {
  CliResult r = run_cli("translate \"" + fixture("listing_roundtrip.c") +
                        "\" --vlen 128 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "__riscv_vadd_vv_i32m1"));
  CHECK(r.err.empty());
}

TEST_CASE("translate reads stdin when input is -") {
  CliResult r = run_cli("translate - --vlen 128 --quiet < \"" +
                        fixture("listing_roundtrip.c") + "\"");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "__riscv_vadd_vv_i32m1"));
}

TEST_CASE("strict translation fails when vlen is too small") {
  CliResult r = run_cli("translate \"" + fixture("listing_roundtrip.c") +
                        "\" --vlen 64 --strict");
  CHECK(r.exit_code == 2);
  CHECK(has(r.err, "error"));
  CHECK(has(r.err, "int32x4_t"));
}

TEST_CASE("permissive translation of the same input succeeds") {
  CliResult r = run_cli("translate \"" + fixture("listing_roundtrip.c") +
                        "\" --vlen 64 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "typedef struct"));
  CHECK(has(r.out, "n2r_vaddq_s32"));
}

TEST_CASE("sources without NEON pass through byte-identically") {
  CliResult r = run_cli("translate \"" + fixture("no_neon.c") +
                        "\" --vlen 128 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(fixture("no_neon.c")));
}

TEST_CASE("missing input file is an IO error") {
  CliResult r = run_cli("translate /nonexistent/input.c --vlen 128");
  CHECK(r.exit_code == 2);
  CHECK(has(r.err, "cannot open"));
}

TEST_CASE("invalid vlen is rejected up front") {
  CHECK(run_cli("translate x.c --vlen 100").exit_code == 2);
  CHECK(run_cli("mappings --vlen 17").exit_code == 2);
  CliResult r = run_cli("bench-proxy --vlen 100");
  CHECK(r.exit_code == 2);
  CHECK(has(r.err, "invalid vlen"));
}

TEST_CASE("NEON2RVV_VLEN environment variable selects the target") {
  CliResult r = run_cli("mappings", "NEON2RVV_VLEN=64");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "type mappings at vlen=64"));
  CHECK(has(r.out, "mapped 10/22"));
  // An explicit flag beats the environment.
  CliResult f = run_cli("mappings --vlen 128", "NEON2RVV_VLEN=64");
  CHECK(has(f.out, "type mappings at vlen=128"));
}

TEST_CASE("check validates a reduced matrix cleanly") {
  fs::path json = scratch_dir() / "check.json";
  CliResult r = run_cli("check --vlen 64 128 --cases 5 --json \"" +
                        json.string() + "\"");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "result: OK"));
  CHECK(has(r.out, " 0 mismatches"));
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["total_mismatches"] == 0);
  CHECK(j["rows"].size() == 455 * 2);
  CHECK(j["cases_per_intrinsic"] == 5);
}

TEST_CASE("mappings text and JSON export") {
  CliResult r = run_cli("mappings --vlen 128");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "int32x4_t      -> vint32m1_t (fixed_vint32m1_t)"));
  CHECK(has(r.out, "mapped 20/22"));  // no zvfh: the two f16 types miss
  CliResult z = run_cli("mappings --vlen 128 --zvfh");
  CHECK(has(z.out, "mapped 22/22"));
  CliResult s = run_cli("mappings --vlen 64");
  CHECK(has(s.out, "vlen-too-small"));

  fs::path json = scratch_dir() / "mappings.json";
  CliResult jr = run_cli("mappings --vlen 128 --zvfh --json \"" +
                         json.string() + "\"");
  CHECK(jr.exit_code == 0);
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["tool"] == "neon2rvv-mappings");
  CHECK(j["types"].size() == 22);
  CHECK(j["mapped"] == 22);
  CHECK(j["recipes"].size() == 455);
  bool found = false;
  for (const auto& row : j["recipes"]) {
    if (row["intrinsic"] != "vceqq_s32") continue;
    found = true;
    CHECK(row["tier"] == "composite");
    CHECK(row["method"] == 5);
    CHECK(row["rvv_ops"].size() == 3);
    CHECK(row["fallback_charge"] == 12);
  }
  CHECK(found);
}

TEST_CASE("coverage summary") {
  CliResult r = run_cli("coverage --vlen 128 --zvfh");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "27 families, 455 intrinsics"));
  CHECK(has(r.out, "455 customized"));
  CliResult f = run_cli("coverage --vlen 128");
  // Without zvfh the 13 f16 intrinsics drop to the fallback.
  CHECK(has(f.out, "442 customized"));
  CHECK(has(f.out, "13 fallback"));
}

TEST_CASE("bench-proxy emits the op-count table") {
  fs::path json = scratch_dir() / "proxy.json";
  CliResult r = run_cli("bench-proxy --vlen 128 --json \"" + json.string() +
                        "\"");
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "ratio range over customized recipes: 1.00"));
  CHECK(has(r.out, "48.00"));
  auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["rows"].size() == 455);
  for (const auto& row : j["rows"]) {
    if (row["intrinsic"] == "vceqq_s32") CHECK(row["op_ratio"] == 4.0);
    if (row["intrinsic"] == "vget_high_s32") CHECK(row["op_ratio"] == 6.0);
    if (row["intrinsic"] == "vaddq_s8") CHECK(row["op_ratio"] == 48.0);
  }
}

TEST_CASE("translated output is accepted unchanged on a second pass") {
  fs::path once = scratch_dir() / "once.c";
  fs::path twice = scratch_dir() / "twice.c";
  CHECK(run_cli("translate \"" + fixture("listing_roundtrip.c") +
                "\" -o \"" + once.string() + "\" --vlen 128 --quiet")
            .exit_code == 0);
  CHECK(run_cli("translate \"" + once.string() + "\" -o \"" + twice.string() +
                "\" --vlen 128 --quiet")
            .exit_code == 0);
  CHECK(slurp(once) == slurp(twice));
}

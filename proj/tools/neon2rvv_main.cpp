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
// neon2rvv command line: translate NEON C sources to RVV, validate the
// conversion database differentially, and export mapping/coverage data.
//
// Exit codes: 0 success, 1 differential mismatches, 2 usage/IO/strict errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "neon2rvv/diff_harness.hpp"
#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/recipe_engine.hpp"
#include "neon2rvv/rewriter.hpp"
#include "neon2rvv/vector_types.hpp"

namespace {

using neon2rvv::VlenConfig;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

bool read_file(const std::string& path, std::string& out, std::string& err) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text,
                std::string& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot write " + path;
    return false;
  }
  out << text;
  return out.good();
}

bool check_cfg(const VlenConfig& cfg) {
  if (!cfg.valid()) {
    std::cerr << "neon2rvv: invalid vlen " << cfg.vlen_bits
              << " (expected a power of two between 32 and 65536)\n";
    return false;
  }
  return true;
}

nlohmann::ordered_json recipes_json(const VlenConfig& cfg) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const neon2rvv::NeonIntrinsicId& id : neon2rvv::neon_catalog()) {
    neon2rvv::Recipe customized = neon2rvv::customized_recipe(id);
    neon2rvv::Recipe selected = neon2rvv::lookup_recipe(id, cfg);
    nlohmann::ordered_json row;
    row["intrinsic"] = id.name();
    row["tier"] = std::string(neon2rvv::tier_name(customized.tier));
    row["method"] = static_cast<int>(customized.method);
    row["min_vlen"] = customized.min_vlen_bits;
    row["requires_zvfh"] = customized.requires_zvfh;
    row["available"] =
        selected.tier != neon2rvv::RecipeTier::ElementwiseFallback;
    row["selected_tier"] = std::string(neon2rvv::tier_name(selected.tier));
    row["rvv_ops"] = neon2rvv::recipe_opcodes(customized, cfg);
    row["fallback_charge"] = neon2rvv::fallback_charge(id);
    arr.push_back(std::move(row));
  }
  return arr;
}

int cmd_translate(const std::string& input, const std::string& output,
                  unsigned vlen, bool zvfh, bool strict, bool quiet) {
  VlenConfig cfg{vlen, zvfh};
  if (!check_cfg(cfg)) return kExitError;
  std::string src, err;
  if (!read_file(input, src, err)) {
    std::cerr << "neon2rvv: " << err << "\n";
    return kExitError;
  }
  neon2rvv::RewriteResult res = neon2rvv::rewrite_source(
      src, cfg,
      strict ? neon2rvv::RewriteMode::Strict : neon2rvv::RewriteMode::Permissive);
  std::string label = input == "-" ? "<stdin>" : input;
  for (const neon2rvv::Diagnostic& d : res.diagnostics) {
    std::cerr << label << ":" << d.render() << "\n";
  }
  if (!quiet) {
    std::cerr << "neon2rvv: " << label << ": " << res.stats.call_sites
              << " call sites (" << res.stats.direct << " direct, "
              << res.stats.composite << " composite, " << res.stats.fallback
              << " fallback), " << res.stats.types_rewritten
              << " type tokens rewritten, " << res.stats.struct_types
              << " struct types, " << res.stats.unknown
              << " unknown identifiers\n";
  }
  if (!res.ok) return kExitError;
  if (output.empty() || output == "-") {
    std::cout << res.text;
  } else if (!write_file(output, res.text, err)) {
    std::cerr << "neon2rvv: " << err << "\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_check(std::vector<unsigned> vlens, bool zvfh, unsigned cases,
              uint64_t seed, const std::string& json_path, bool verbose) {
  for (unsigned v : vlens) {
    if (!check_cfg(VlenConfig{v, zvfh})) return kExitError;
  }
  neon2rvv::DiffOptions opts;
  opts.vlens = std::move(vlens);
  opts.zvfh = zvfh;
  opts.cases_per_intrinsic = cases;
  opts.seed = seed;
  neon2rvv::DiffReport report = neon2rvv::run_diff(opts);
  std::cout << neon2rvv::report_text(report, verbose);
  if (!json_path.empty()) {
    std::string err;
    if (!write_file(json_path, neon2rvv::report_json(report).dump(2) + "\n",
                    err)) {
      std::cerr << "neon2rvv: " << err << "\n";
      return kExitError;
    }
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_mappings(unsigned vlen, bool zvfh, const std::string& json_path) {
  VlenConfig cfg{vlen, zvfh};
  if (!check_cfg(cfg)) return kExitError;
  unsigned mapped = 0;
  std::cout << "type mappings at vlen=" << cfg.vlen_bits << ", zvfh="
            << (cfg.zvfh ? "on" : "off") << "\n";
  for (const neon2rvv::NeonVectorType& t : neon2rvv::all_neon_types()) {
    neon2rvv::MappingResult m = neon2rvv::map_type(t, cfg);
    std::string name = t.name();
    name.resize(14, ' ');
    if (m.mapped()) {
      ++mapped;
      std::cout << "  " << name << " -> " << m.rvv->name() << " ("
                << m.rvv->fixed_name() << ")\n";
    } else {
      std::cout << "  " << name << " -> unavailable ("
                << neon2rvv::map_failure_name(*m.failure) << ")\n";
    }
  }
  std::cout << "mapped " << mapped << "/" << neon2rvv::all_neon_types().size()
            << "\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["tool"] = "neon2rvv-mappings";
    j["vlen"] = cfg.vlen_bits;
    j["zvfh"] = cfg.zvfh;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const neon2rvv::TypeMappingRow& row : neon2rvv::mapping_table()) {
      neon2rvv::MappingResult m = neon2rvv::map_type(row.neon, cfg);
      nlohmann::ordered_json tr;
      tr["neon"] = row.neon.name();
      tr["min_vlen"] = row.vlen_min;
      tr["requires_zvfh"] = row.requires_zvfh;
      tr["mapped"] = m.mapped();
      if (m.mapped()) {
        tr["rvv"] = m.rvv->name();
        tr["fixed"] = m.rvv->fixed_name();
      } else {
        tr["failure"] = std::string(neon2rvv::map_failure_name(*m.failure));
      }
      types.push_back(std::move(tr));
    }
    j["types"] = std::move(types);
    j["mapped"] = mapped;
    j["recipes"] = recipes_json(cfg);
    std::string err;
    if (!write_file(json_path, j.dump(2) + "\n", err)) {
      std::cerr << "neon2rvv: " << err << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

int cmd_coverage(unsigned vlen, bool zvfh, const std::string& json_path) {
  VlenConfig cfg{vlen, zvfh};
  if (!check_cfg(cfg)) return kExitError;
  const std::vector<neon2rvv::NeonIntrinsicId>& catalog =
      neon2rvv::neon_catalog();
  uint64_t direct = 0, composite = 0, fallback = 0;
  for (const neon2rvv::NeonIntrinsicId& id : catalog) {
    switch (neon2rvv::lookup_recipe(id, cfg).tier) {
      case neon2rvv::RecipeTier::Direct:
        ++direct;
        break;
      case neon2rvv::RecipeTier::Composite:
        ++composite;
        break;
      default:
        ++fallback;
        break;
    }
  }
  std::cout << "catalog: " << neon2rvv::kNumNeonFamilies << " families, "
            << catalog.size() << " intrinsics\n";
  std::cout << "at vlen=" << cfg.vlen_bits << " (zvfh="
            << (cfg.zvfh ? "on" : "off") << "): " << (direct + composite)
            << " customized (" << direct << " direct, " << composite
            << " composite), " << fallback << " fallback\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["tool"] = "neon2rvv-coverage";
    j["vlen"] = cfg.vlen_bits;
    j["zvfh"] = cfg.zvfh;
    j["families"] = neon2rvv::kNumNeonFamilies;
    j["intrinsics"] = catalog.size();
    j["direct"] = direct;
    j["composite"] = composite;
    j["fallback"] = fallback;
    j["recipes"] = recipes_json(cfg);
    std::string err;
    if (!write_file(json_path, j.dump(2) + "\n", err)) {
      std::cerr << "neon2rvv: " << err << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

int cmd_bench_proxy(unsigned vlen, bool zvfh, const std::string& json_path) {
  VlenConfig cfg{vlen, zvfh};
  if (!check_cfg(cfg)) return kExitError;
  std::cout << "op-count proxy at vlen=" << cfg.vlen_bits << " (zvfh="
            << (cfg.zvfh ? "on" : "off")
            << "): customized recipe ops vs scalar fallback charge\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  double min_ratio = 1e300, max_ratio = 0;
  std::string min_name, max_name;
  for (const neon2rvv::NeonIntrinsicId& id : neon2rvv::neon_catalog()) {
    neon2rvv::Recipe selected = neon2rvv::lookup_recipe(id, cfg);
    bool customized =
        selected.tier != neon2rvv::RecipeTier::ElementwiseFallback;
    uint64_t charge = neon2rvv::fallback_charge(id);
    uint64_t ops =
        customized ? neon2rvv::recipe_opcodes(selected, cfg).size() : charge;
    double ratio =
        ops > 0 ? static_cast<double>(charge) / static_cast<double>(ops) : 1.0;
    char line[160];
    snprintf(line, sizeof line, "  %-18s %-9s ops=%-3llu fallback=%-3llu ratio=%.2f",
             id.name().c_str(),
             std::string(neon2rvv::tier_name(selected.tier)).c_str(),
             static_cast<unsigned long long>(ops),
             static_cast<unsigned long long>(charge), ratio);
    std::cout << line << "\n";
    if (customized) {
      if (ratio < min_ratio) {
        min_ratio = ratio;
        min_name = id.name();
      }
      if (ratio > max_ratio) {
        max_ratio = ratio;
        max_name = id.name();
      }
    }
    nlohmann::ordered_json row;
    row["intrinsic"] = id.name();
    row["tier"] = std::string(neon2rvv::tier_name(selected.tier));
    row["recipe_ops"] = ops;
    row["fallback_ops"] = charge;
    row["op_ratio"] = std::round(ratio * 10000.0) / 10000.0;
    arr.push_back(std::move(row));
  }
  char summary[160];
  snprintf(summary, sizeof summary,
           "ratio range over customized recipes: %.2f (%s) .. %.2f (%s)",
           min_ratio, min_name.c_str(), max_ratio, max_name.c_str());
  std::cout << summary << "\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["tool"] = "neon2rvv-bench-proxy";
    j["vlen"] = cfg.vlen_bits;
    j["zvfh"] = cfg.zvfh;
    j["rows"] = std::move(arr);
    std::string err;
    if (!write_file(json_path, j.dump(2) + "\n", err)) {
      std::cerr << "neon2rvv: " << err << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neon2rvv: NEON to RISC-V Vector source migration"};
  app.require_subcommand(1);

  // translate
  auto* tr = app.add_subcommand("translate",
                                "Rewrite a NEON C source to RVV intrinsics");
  std::string tr_input;
  std::string tr_output;
  unsigned tr_vlen = 128;
  bool tr_zvfh = false, tr_strict = false, tr_quiet = false;
  tr->add_option("input", tr_input, "input C file, or - for stdin")->required();
  tr->add_option("-o,--output", tr_output, "output file (default: stdout)");
  tr->add_option("--vlen", tr_vlen, "target VLEN in bits")
      ->envname("NEON2RVV_VLEN");
  tr->add_flag("--zvfh", tr_zvfh, "target supports the zvfh extension");
  tr->add_flag("--strict", tr_strict,
               "fail on any site without a vector conversion");
  tr->add_flag("--quiet", tr_quiet, "suppress the summary line");

  // check
  auto* ck = app.add_subcommand(
      "check", "Differentially validate every recipe against the NEON oracle");
  std::vector<unsigned> ck_vlens{64, 128, 256};
  bool ck_no_zvfh = false, ck_verbose = false;
  unsigned ck_cases = 1000;
  uint64_t ck_seed = 20260814;
  std::string ck_json;
  ck->add_option("--vlen", ck_vlens, "VLEN values to validate against");
  ck->add_flag("--no-zvfh", ck_no_zvfh, "validate without the zvfh extension");
  ck->add_option("--cases", ck_cases, "cases per intrinsic per VLEN");
  ck->add_option("--seed", ck_seed, "deterministic RNG seed");
  ck->add_option("--json", ck_json, "write the full report as JSON");
  ck->add_flag("--verbose", ck_verbose, "print one line per intrinsic row");

  // mappings
  auto* mp = app.add_subcommand("mappings",
                                "Show the NEON to RVV type mapping table");
  unsigned mp_vlen = 128;
  bool mp_zvfh = false;
  std::string mp_json;
  mp->add_option("--vlen", mp_vlen, "target VLEN in bits")
      ->envname("NEON2RVV_VLEN");
  mp->add_flag("--zvfh", mp_zvfh, "target supports the zvfh extension");
  mp->add_option("--json", mp_json, "write mappings and recipes as JSON");

  // coverage
  auto* cv = app.add_subcommand("coverage",
                                "Summarize catalog coverage at a target");
  unsigned cv_vlen = 128;
  bool cv_zvfh = false;
  std::string cv_json;
  cv->add_option("--vlen", cv_vlen, "target VLEN in bits")
      ->envname("NEON2RVV_VLEN");
  cv->add_flag("--zvfh", cv_zvfh, "target supports the zvfh extension");
  cv->add_option("--json", cv_json, "write the coverage report as JSON");

  // bench-proxy
  auto* bp = app.add_subcommand(
      "bench-proxy", "Static op-count comparison against the scalar baseline");
  unsigned bp_vlen = 128;
  bool bp_zvfh = false;
  std::string bp_json;
  bp->add_option("--vlen", bp_vlen, "target VLEN in bits")
      ->envname("NEON2RVV_VLEN");
  bp->add_flag("--zvfh", bp_zvfh, "target supports the zvfh extension");
  bp->add_option("--json", bp_json, "write the proxy table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (tr->parsed()) {
      return cmd_translate(tr_input, tr_output, tr_vlen, tr_zvfh, tr_strict,
                           tr_quiet);
    }
    if (ck->parsed()) {
      return cmd_check(ck_vlens, !ck_no_zvfh, ck_cases, ck_seed, ck_json,
                       ck_verbose);
    }
    if (mp->parsed()) return cmd_mappings(mp_vlen, mp_zvfh, mp_json);
    if (cv->parsed()) return cmd_coverage(cv_vlen, cv_zvfh, cv_json);
    if (bp->parsed()) return cmd_bench_proxy(bp_vlen, bp_zvfh, bp_json);
  } catch (const std::exception& ex) {
    std::cerr << "neon2rvv: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

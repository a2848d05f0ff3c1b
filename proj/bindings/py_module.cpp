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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "neon2rvv/diff_harness.hpp"
#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/recipe_engine.hpp"
#include "neon2rvv/rewriter.hpp"
#include "neon2rvv/vector_types.hpp"

namespace py = pybind11;

namespace {

neon2rvv::VlenConfig make_cfg(unsigned vlen, bool zvfh) {
  neon2rvv::VlenConfig cfg{vlen, zvfh};
  if (!cfg.valid()) {
    throw std::invalid_argument("invalid vlen " + std::to_string(vlen) +
                                " (expected a power of two in [32, 65536])");
  }
  return cfg;
}

py::dict translate(const std::string& source, unsigned vlen, bool zvfh,
                   bool strict) {
  neon2rvv::VlenConfig cfg = make_cfg(vlen, zvfh);
  neon2rvv::RewriteResult res = neon2rvv::rewrite_source(
      source, cfg,
      strict ? neon2rvv::RewriteMode::Strict
             : neon2rvv::RewriteMode::Permissive);
  py::list diags;
  for (const neon2rvv::Diagnostic& d : res.diagnostics) {
    diags.append(d.render());
  }
  py::dict stats;
  stats["call_sites"] = res.stats.call_sites;
  stats["direct"] = res.stats.direct;
  stats["composite"] = res.stats.composite;
  stats["fallback"] = res.stats.fallback;
  stats["unknown"] = res.stats.unknown;
  stats["types_rewritten"] = res.stats.types_rewritten;
  stats["struct_types"] = res.stats.struct_types;
  py::dict out;
  out["text"] = res.text;
  out["ok"] = res.ok;
  out["changed"] = res.changed;
  out["diagnostics"] = std::move(diags);
  out["stats"] = std::move(stats);
  return out;
}

py::dict check(std::vector<unsigned> vlens, unsigned cases, bool zvfh,
               uint64_t seed) {
  for (unsigned v : vlens) make_cfg(v, zvfh);
  neon2rvv::DiffOptions opts;
  opts.vlens = std::move(vlens);
  opts.cases_per_intrinsic = cases;
  opts.zvfh = zvfh;
  opts.seed = seed;
  neon2rvv::DiffReport report = neon2rvv::run_diff(opts);
  py::dict out;
  out["ok"] = report.ok();
  out["total_cases"] = report.total_cases;
  out["total_mismatches"] = report.total_mismatches;
  out["text"] = neon2rvv::report_text(report, false);
  out["json"] = neon2rvv::report_json(report).dump(2);
  return out;
}

py::dict map_type_py(const std::string& neon, unsigned vlen, bool zvfh) {
  std::optional<neon2rvv::NeonVectorType> t = neon2rvv::parse_neon_type(neon);
  if (!t) throw std::invalid_argument("unknown NEON vector type: " + neon);
  neon2rvv::MappingResult m = neon2rvv::map_type(*t, make_cfg(vlen, zvfh));
  py::dict out;
  out["neon"] = t->name();
  out["mapped"] = m.mapped();
  if (m.mapped()) {
    out["rvv"] = m.rvv->name();
    out["fixed"] = m.rvv->fixed_name();
  } else {
    out["failure"] = std::string(neon2rvv::map_failure_name(*m.failure));
  }
  return out;
}

unsigned mapped_type_count(unsigned vlen, bool zvfh) {
  neon2rvv::VlenConfig cfg = make_cfg(vlen, zvfh);
  unsigned n = 0;
  for (const neon2rvv::NeonVectorType& t : neon2rvv::all_neon_types()) {
    if (neon2rvv::map_type(t, cfg).mapped()) ++n;
  }
  return n;
}

std::vector<std::string> catalog() {
  std::vector<std::string> names;
  for (const neon2rvv::NeonIntrinsicId& id : neon2rvv::neon_catalog()) {
    names.push_back(id.name());
  }
  return names;
}

}  // namespace

PYBIND11_MODULE(_neon2rvv, m) {
  m.doc() =
      "NEON to RISC-V Vector source migration: translation, verified type "
      "and intrinsic mappings, and differential validation.";
  m.attr("__version__") = "1.0.0";
  m.def("translate", &translate, py::arg("source"), py::arg("vlen") = 128,
        py::arg("zvfh") = false, py::arg("strict") = false,
        "Rewrite NEON C source text to RVV intrinsics.");
  m.def("check", &check,
        py::arg("vlens") = std::vector<unsigned>{64, 128, 256},
        py::arg("cases") = 100, py::arg("zvfh") = true,
        py::arg("seed") = static_cast<uint64_t>(20260814),
        "Differentially validate every conversion recipe.");
  m.def("map_type", &map_type_py, py::arg("neon"), py::arg("vlen") = 128,
        py::arg("zvfh") = false,
        "Map one NEON vector type to its RVV register type.");
  m.def("mapped_type_count", &mapped_type_count, py::arg("vlen") = 128,
        py::arg("zvfh") = false,
        "Number of the 22 NEON vector types representable at a target.");
  m.def("catalog", &catalog, "All supported NEON intrinsic names.");
}

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
// Source-to-source rewriting of NEON C sources into RVV C sources.
//
// The rewriter is token level, not AST level: it walks the byte stream,
// skips comments and literals, and touches only NEON type names and
// intrinsic call sites. Every byte it does not understand is preserved
// verbatim. Running the rewriter on its own output is the identity.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "neon2rvv/vector_types.hpp"

namespace neon2rvv {

enum class RewriteMode {
  // Unconvertible sites are hard errors.
  Strict,
  // Unconvertible types fall back to struct emulation and scalar loops;
  // unknown NEON identifiers are warnings and left untouched.
  Permissive,
};

enum class Severity { Error, Warning, Note };

std::string_view severity_name(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  unsigned line = 0;  // 1-based, in the original source
  unsigned col = 0;   // 1-based byte column
  std::string message;

  // "<line>:<col>: <severity>: <message>"
  std::string render() const;
};

struct RewriteStats {
  size_t call_sites = 0;       // intrinsic calls rewritten
  size_t direct = 0;           // of which single-intrinsic
  size_t composite = 0;        // of which multi-op helper
  size_t fallback = 0;         // of which scalar-loop helper
  size_t unknown = 0;          // NEON-shaped identifiers left untouched
  size_t types_rewritten = 0;  // type tokens renamed to fixed RVV spellings
  size_t struct_types = 0;     // distinct types emulated with structs
};

struct RewriteResult {
  std::string text;  // rewritten source; equals the input when !changed
  bool changed = false;
  bool ok = true;  // no error diagnostics
  std::vector<Diagnostic> diagnostics;
  RewriteStats stats;
};

// Marker macro guarding the generated prelude. Its presence in a source
// identifies the file as already translated.
inline constexpr std::string_view kPreludeMarker =
    "NEON2RVV_TRANSLATION_PRELUDE";

RewriteResult rewrite_source(std::string_view source, const VlenConfig& cfg,
                             RewriteMode mode);

}  // namespace neon2rvv

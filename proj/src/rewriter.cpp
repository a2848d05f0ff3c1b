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

#include "neon2rvv/rewriter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/recipe_engine.hpp"

namespace neon2rvv {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Known NEON operation prefixes, used only to flag identifiers the catalog
// does not cover. An identifier must both start with one of these and end in
// a lane-suffix shape to be reported.
constexpr std::string_view kNeonPrefixes[] = {
    "vaba",    "vabd",   "vabs",   "vadd",  "vand",  "vbic",  "vbsl",
    "vcage",   "vcagt",  "vcale",  "vcalt", "vceq",  "vcge",  "vcgt",
    "vcle",    "vcls",   "vclt",   "vclz",  "vcnt",  "vcombine",
    "vcreate", "vcvt",   "vdiv",   "vdup",  "veor",  "vext",  "vfma",
    "vfms",    "vget",   "vhadd",  "vhsub", "vld",   "vmax",  "vmin",
    "vmla",    "vmls",   "vmov",   "vmul",  "vmvn",  "vneg",  "vorn",
    "vorr",    "vpadal", "vpadd",  "vpmax", "vpmin", "vqadd", "vqdmul",
    "vqmov",   "vqrdmul", "vqshl", "vqshrn", "vqsub", "vrbit", "vrecp",
    "vreinterpret", "vrev", "vrhadd", "vrnd", "vrshr", "vrsqrt", "vrsubhn",
    "vset",    "vshl",   "vshll",  "vshr",  "vshrn", "vsli",  "vsqrt",
    "vsra",    "vsri",   "vst",    "vsub",  "vswp",  "vtbl",  "vtbx",
    "vtrn",    "vtst",   "vuzp",   "vzip",
};

bool lane_suffix_shape(std::string_view sfx) {
  if (sfx.size() < 2) return false;
  char c = sfx[0];
  if (c != 's' && c != 'u' && c != 'f' && c != 'p') return false;
  std::string_view d = sfx.substr(1);
  return d == "8" || d == "16" || d == "32" || d == "64";
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

// Matches the (u?int|float|poly)<w>x<n>[x<k>]_t vector-type shape.
bool looks_like_neon_type(std::string_view tok) {
  for (std::string_view p : {"uint", "int", "float", "poly"}) {
    if (tok.substr(0, p.size()) == p) {
      std::string_view rest = tok.substr(p.size());
      size_t x = rest.find('x');
      if (x == std::string_view::npos || !all_digits(rest.substr(0, x))) {
        continue;
      }
      std::string_view tail = rest.substr(x + 1);
      if (tail.size() < 3 || tail.substr(tail.size() - 2) != "_t") continue;
      std::string_view counts = tail.substr(0, tail.size() - 2);
      size_t x2 = counts.find('x');
      if (x2 == std::string_view::npos) return all_digits(counts);
      return all_digits(counts.substr(0, x2)) &&
             all_digits(counts.substr(x2 + 1));
    }
  }
  return false;
}

bool looks_like_neon_intrinsic(std::string_view tok) {
  if (tok.empty() || tok[0] != 'v') return false;
  size_t pos = tok.rfind('_');
  if (pos == std::string_view::npos) return false;
  if (!lane_suffix_shape(tok.substr(pos + 1))) return false;
  for (std::string_view p : kNeonPrefixes) {
    if (tok.substr(0, p.size()) == p) return true;
  }
  return false;
}

struct LineIndex {
  std::vector<size_t> starts;

  explicit LineIndex(std::string_view src) {
    starts.push_back(0);
    for (size_t i = 0; i < src.size(); ++i) {
      if (src[i] == '\n') starts.push_back(i + 1);
    }
  }

  std::pair<unsigned, unsigned> locate(size_t off) const {
    auto it = std::upper_bound(starts.begin(), starts.end(), off);
    size_t line = static_cast<size_t>(it - starts.begin());  // 1-based
    size_t col = off - starts[line - 1] + 1;
    return {static_cast<unsigned>(line), static_cast<unsigned>(col)};
  }
};

// If src[i] starts a comment or a string/char literal, returns the index one
// past it; otherwise returns i.
size_t skip_literal_or_comment(std::string_view src, size_t i, size_t limit) {
  char c = src[i];
  if (c == '/' && i + 1 < limit && src[i + 1] == '/') {
    size_t j = i + 2;
    while (j < limit && src[j] != '\n') ++j;
    return j;
  }
  if (c == '/' && i + 1 < limit && src[i + 1] == '*') {
    size_t j = i + 2;
    while (j + 1 < limit && !(src[j] == '*' && src[j + 1] == '/')) ++j;
    return j + 1 < limit ? j + 2 : limit;
  }
  if (c == '"' || c == '\'') {
    size_t j = i + 1;
    while (j < limit) {
      if (src[j] == '\\' && j + 1 < limit) {
        j += 2;
        continue;
      }
      if (src[j] == c) return j + 1;
      ++j;
    }
    return limit;
  }
  return i;
}

size_t skip_space_and_comments(std::string_view src, size_t i, size_t limit) {
  while (i < limit) {
    if (space_char(src[i])) {
      ++i;
      continue;
    }
    size_t j = skip_literal_or_comment(src, i, limit);
    if (j == i || src[i] == '"' || src[i] == '\'') return i;
    i = j;
  }
  return i;
}

std::string trim_copy(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && space_char(s[b])) ++b;
  while (e > b && space_char(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

struct Ctx {
  const VlenConfig& cfg;
  RewriteMode mode;
  std::string_view src;
  LineIndex lines;
  std::vector<Diagnostic> diags;
  RewriteStats stats;
  std::set<std::string> used_mapped;  // NEON type names with vector mappings
  std::set<std::string> used_struct;  // NEON type names kept as structs
  std::set<std::string> helper_names;
  std::vector<HelperDef> helpers;
  bool uses_rvv = false;
  bool include_seen = false;
  std::optional<size_t> prelude_pos;  // insertion point in the output body
  bool mutated = false;

  Ctx(const VlenConfig& c, RewriteMode m, std::string_view s)
      : cfg(c), mode(m), src(s), lines(s) {}

  void diag(Severity sev, size_t off, std::string msg) {
    auto [line, col] = lines.locate(off);
    diags.push_back(Diagnostic{sev, line, col, std::move(msg)});
  }

  void add_helper(const HelperDef& h) {
    if (helper_names.insert(h.name).second) helpers.push_back(h);
  }

  void note_type(const NeonVectorType& t) {
    if (map_type(t, cfg).mapped()) {
      used_mapped.insert(t.name());
      uses_rvv = true;
    } else if (mode == RewriteMode::Permissive) {
      used_struct.insert(t.name());
    }
  }
};

// Argument spans of a call, given the index of its '('. Returns the index of
// the matching ')', or nullopt when unterminated.
std::optional<size_t> parse_call_args(std::string_view src, size_t lparen,
                                      size_t limit,
                                      std::vector<std::pair<size_t, size_t>>& args) {
  int depth = 1;
  size_t i = lparen + 1;
  size_t arg_start = i;
  while (i < limit) {
    size_t j = skip_literal_or_comment(src, i, limit);
    if (j != i) {
      i = j;
      continue;
    }
    char c = src[i];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ']' || c == '}') {
      --depth;
    } else if (c == ')') {
      --depth;
      if (depth == 0) {
        std::string_view last = src.substr(arg_start, i - arg_start);
        if (!args.empty() || !trim_copy(last).empty()) {
          args.emplace_back(arg_start, i);
        }
        return i;
      }
    } else if (c == ',' && depth == 1) {
      args.emplace_back(arg_start, i);
      arg_start = i + 1;
    }
    ++i;
  }
  return std::nullopt;
}

bool at_line_start(std::string_view src, size_t i) {
  while (i > 0) {
    char c = src[i - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --i;
  }
  return true;
}

// End of a preprocessor directive line, honoring backslash continuations.
// Returns one past the terminating newline (or the limit).
size_t directive_end(std::string_view src, size_t i, size_t limit) {
  while (i < limit) {
    if (src[i] == '\n') {
      size_t back = i;
      while (back > 0 && src[back - 1] == '\r') --back;
      if (back > 0 && src[back - 1] == '\\') {
        ++i;
        continue;
      }
      return i + 1;
    }
    ++i;
  }
  return limit;
}

bool is_arm_neon_include(std::string_view line) {
  size_t i = 0;
  if (i >= line.size() || line[i] != '#') return false;
  ++i;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (line.substr(i, 7) != "include") return false;
  i += 7;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i >= line.size()) return false;
  char open = line[i];
  char close = open == '<' ? '>' : (open == '"' ? '"' : '\0');
  if (close == '\0') return false;
  size_t e = line.find(close, i + 1);
  if (e == std::string_view::npos) return false;
  return line.substr(i + 1, e - i - 1) == "arm_neon.h";
}

std::string failure_text(const NeonVectorType& t, const MappingResult& m,
                         const VlenConfig& cfg) {
  if (m.failure == MapFailure::MissingZvfh) {
    return "type " + t.name() + " requires the zvfh extension";
  }
  return "type " + t.name() + " needs " + std::to_string(t.total_bits()) +
         " bits but vlen is " + std::to_string(cfg.vlen_bits);
}

std::string rewrite_fragment(Ctx& c, size_t begin, size_t end, int depth);

// Rewrites one intrinsic call. Returns one past the closing paren, or
// nullopt when the site could not be handled (caller copies the token).
std::optional<size_t> rewrite_call(Ctx& c, NeonIntrinsicId id, size_t tok_begin,
                                   size_t tok_end, size_t end, int depth,
                                   std::string& out) {
  size_t k = skip_space_and_comments(c.src, tok_end, end);
  if (k >= end || c.src[k] != '(') {
    c.diag(Severity::Warning, tok_begin,
           "NEON intrinsic " + id.name() +
               " referenced without a call; left unchanged");
    return std::nullopt;
  }
  std::vector<std::pair<size_t, size_t>> spans;
  std::optional<size_t> rparen = parse_call_args(c.src, k, end, spans);
  if (!rparen) {
    c.diag(Severity::Error, tok_begin,
           "unterminated call to " + id.name());
    return std::nullopt;
  }

  Recipe recipe = lookup_recipe(id, c.cfg);
  if (recipe.tier == RecipeTier::ElementwiseFallback &&
      c.mode == RewriteMode::Strict) {
    NeonSignature sig = signature(id);
    std::string why;
    for (const NeonVectorType& t : sig.all_types()) {
      MappingResult m = map_type(t, c.cfg);
      if (!m.mapped()) {
        why = failure_text(t, m, c.cfg);
        break;
      }
    }
    c.diag(Severity::Error, tok_begin,
           "no vector conversion for " + id.name() + ": " + why);
    return std::nullopt;
  }

  std::vector<std::string> args;
  args.reserve(spans.size());
  for (auto [s, e] : spans) {
    while (s < e && space_char(c.src[s])) ++s;
    while (e > s && space_char(c.src[e - 1])) --e;
    args.push_back(rewrite_fragment(c, s, e, depth + 1));
  }

  RenderedCall rendered;
  try {
    rendered = render_call(recipe, c.cfg, args);
  } catch (const RecipeError& err) {
    c.diag(Severity::Error, tok_begin, err.what());
    return std::nullopt;
  }

  out += rendered.text;
  if (rendered.helper) c.add_helper(*rendered.helper);
  for (const NeonVectorType& t : signature(id).all_types()) c.note_type(t);
  c.mutated = true;
  c.stats.call_sites++;
  switch (recipe.tier) {
    case RecipeTier::Direct:
      c.stats.direct++;
      c.uses_rvv = true;
      break;
    case RecipeTier::Composite:
      c.stats.composite++;
      c.uses_rvv = true;
      break;
    case RecipeTier::ElementwiseFallback: {
      c.stats.fallback++;
      c.diag(Severity::Note, tok_begin,
             "converted " + id.name() + " with a scalar loop (no vector "
             "mapping at vlen=" + std::to_string(c.cfg.vlen_bits) + ")");
      break;
    }
    case RecipeTier::Unsupported:
      break;
  }
  return *rparen + 1;
}

std::string rewrite_fragment(Ctx& c, size_t begin, size_t end, int depth) {
  std::string out;
  std::string_view src = c.src;
  size_t i = begin;
  while (i < end) {
    char ch = src[i];
    size_t skipped = skip_literal_or_comment(src, i, end);
    if (skipped != i) {
      out.append(src.substr(i, skipped - i));
      i = skipped;
      continue;
    }
    if (depth == 0 && ch == '#' && at_line_start(src, i)) {
      size_t line_end = directive_end(src, i, end);
      std::string_view line = src.substr(i, line_end - i);
      if (is_arm_neon_include(line)) {
        if (!c.include_seen) {
          c.include_seen = true;
          c.prelude_pos = out.size();
        }
        c.mutated = true;
        i = line_end;  // drop the include line entirely
        continue;
      }
      // Directives are never rewritten; surface NEON names hiding in them.
      for (size_t p = 1; p < line.size();) {
        if (!ident_start(line[p]) || (p > 0 && ident_char(line[p - 1]))) {
          ++p;
          continue;
        }
        size_t q = p + 1;
        while (q < line.size() && ident_char(line[q])) ++q;
        std::string tok(line.substr(p, q - p));
        if (parse_intrinsic_name(tok) || parse_neon_type(tok)) {
          c.diag(Severity::Note, i,
                 "NEON name " + tok +
                     " inside a preprocessor directive; directives are left "
                     "unchanged");
          break;
        }
        p = q;
      }
      out.append(line);
      i = line_end;
      continue;
    }
    if (ident_start(ch)) {
      size_t j = i + 1;
      while (j < end && ident_char(src[j])) ++j;
      std::string tok(src.substr(i, j - i));

      if (std::optional<NeonVectorType> t = parse_neon_type(tok)) {
        MappingResult m = map_type(*t, c.cfg);
        if (m.mapped()) {
          out += m.rvv->fixed_name();
          c.used_mapped.insert(tok);
          c.uses_rvv = true;
          c.mutated = true;
          c.stats.types_rewritten++;
        } else {
          if (c.mode == RewriteMode::Strict) {
            c.diag(Severity::Error, i, failure_text(*t, m, c.cfg));
          } else {
            c.used_struct.insert(tok);
          }
          out += tok;
        }
        i = j;
        continue;
      }

      if (std::optional<NeonIntrinsicId> id = parse_intrinsic_name(tok)) {
        if (std::optional<size_t> next =
                rewrite_call(c, *id, i, j, end, depth, out)) {
          i = *next;
        } else {
          out += tok;
          i = j;
        }
        continue;
      }

      if (looks_like_neon_type(tok) || looks_like_neon_intrinsic(tok)) {
        c.stats.unknown++;
        c.diag(c.mode == RewriteMode::Strict ? Severity::Error
                                             : Severity::Warning,
               i, "unsupported NEON identifier " + tok + "; left unchanged");
        out += tok;
        i = j;
        continue;
      }

      out += tok;
      i = j;
      continue;
    }
    out += ch;
    ++i;
  }
  return out;
}

std::string build_prelude(const Ctx& c) {
  std::string p;
  p += "// Generated by neon2rvv. Target: vlen=" +
       std::to_string(c.cfg.vlen_bits) + " bits, zvfh=" +
       (c.cfg.zvfh ? "on" : "off") + ".\n";
  p += "#ifndef ";
  p += kPreludeMarker;
  p += "\n#define ";
  p += kPreludeMarker;
  p += "\n";
  p += "#include <stdint.h>\n";
  p += "#include <stddef.h>\n";
  bool needs_math = false;
  for (const HelperDef& h : c.helpers) {
    if (h.definition.find("NAN") != std::string::npos) needs_math = true;
  }
  if (needs_math) p += "#include <math.h>\n";

  if (c.uses_rvv) {
    p += "#include <riscv_vector.h>\n";
    unsigned min_vlen = 64;
    for (const NeonVectorType& t : all_neon_types()) {
      if (c.used_mapped.count(t.name())) {
        min_vlen = std::max(min_vlen, t.total_bits());
      }
    }
    p += "#if !defined(__riscv_v_fixed_vlen)\n";
    p += "#error \"compile with -mrvv-vector-bits=zvl so fixed-size vector "
         "typedefs are available\"\n";
    p += "#elif __riscv_v_fixed_vlen < " + std::to_string(min_vlen) + "\n";
    p += "#error \"this translation requires VLEN >= " +
         std::to_string(min_vlen) + "\"\n";
    p += "#endif\n";
    std::set<std::string> emitted;
    for (const NeonVectorType& t : all_neon_types()) {
      if (!c.used_mapped.count(t.name())) continue;
      MappingResult m = map_type(t, c.cfg);
      if (!m.mapped()) continue;
      if (!emitted.insert(m.rvv->fixed_name()).second) continue;
      p += "typedef " + m.rvv->name() + " " + m.rvv->fixed_name() +
           " __attribute__((riscv_rvv_vector_bits(__riscv_v_fixed_vlen)));\n";
    }
  }

  for (const NeonVectorType& t : all_neon_types()) {
    if (!c.used_struct.count(t.name())) continue;
    std::string scalar = t.elem == ElementType::F16
                             ? "uint16_t"
                             : std::string(scalar_c_name(t.elem));
    p += "typedef struct { " + scalar + " values[" +
         std::to_string(t.lanes) + "]; } " + t.name() + ";\n";
  }

  for (const HelperDef& h : c.helpers) {
    p += h.definition;
  }
  p += "#endif  // ";
  p += kPreludeMarker;
  p += "\n";
  return p;
}

}  // namespace

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error:
      return "error";
    case Severity::Warning:
      return "warning";
    case Severity::Note:
      return "note";
  }
  return "";
}

std::string Diagnostic::render() const {
  return std::to_string(line) + ":" + std::to_string(col) + ": " +
         std::string(severity_name(severity)) + ": " + message;
}

RewriteResult rewrite_source(std::string_view source, const VlenConfig& cfg,
                             RewriteMode mode) {
  RewriteResult res;
  if (source.find(kPreludeMarker) != std::string_view::npos) {
    res.text = std::string(source);
    res.changed = false;
    res.ok = true;
    res.diagnostics.push_back(
        Diagnostic{Severity::Note, 1, 1,
                   "input already carries a neon2rvv prelude; left unchanged"});
    return res;
  }

  Ctx c(cfg, mode, source);
  std::string body = rewrite_fragment(c, 0, source.size(), 0);

  bool need_prelude = c.include_seen || !c.used_mapped.empty() ||
                      !c.used_struct.empty() || !c.helpers.empty();
  if (!need_prelude && !c.mutated) {
    res.text = std::string(source);
    res.changed = false;
  } else {
    std::string prelude = need_prelude ? build_prelude(c) : "";
    size_t pos = c.prelude_pos.value_or(0);
    res.text = body.substr(0, pos) + prelude + body.substr(pos);
    res.changed = res.text != source;
  }
  c.stats.struct_types = c.used_struct.size();
  res.stats = c.stats;
  res.diagnostics = std::move(c.diags);
  res.ok = std::none_of(res.diagnostics.begin(), res.diagnostics.end(),
                        [](const Diagnostic& d) {
                          return d.severity == Severity::Error;
                        });
  return res;
}

}  // namespace neon2rvv

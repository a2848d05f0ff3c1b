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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace neon2rvv {

// Element categories shared by the NEON and RVV type systems. Poly and
// bfloat lanes are not modeled.
enum class ElemClass : uint8_t { SignedInt, UnsignedInt, Float };

enum class ElementType : uint8_t {
  I8,
  I16,
  I32,
  I64,
  U8,
  U16,
  U32,
  U64,
  F16,
  F32,
  F64,
};

inline constexpr unsigned kNumElementTypes = 11;

constexpr unsigned bit_width(ElementType e) {
  switch (e) {
    case ElementType::I8:
    case ElementType::U8:
      return 8;
    case ElementType::I16:
    case ElementType::U16:
    case ElementType::F16:
      return 16;
    case ElementType::I32:
    case ElementType::U32:
    case ElementType::F32:
      return 32;
    case ElementType::I64:
    case ElementType::U64:
    case ElementType::F64:
      return 64;
  }
  return 0;
}

constexpr ElemClass elem_class(ElementType e) {
  switch (e) {
    case ElementType::I8:
    case ElementType::I16:
    case ElementType::I32:
    case ElementType::I64:
      return ElemClass::SignedInt;
    case ElementType::U8:
    case ElementType::U16:
    case ElementType::U32:
    case ElementType::U64:
      return ElemClass::UnsignedInt;
    case ElementType::F16:
    case ElementType::F32:
    case ElementType::F64:
      return ElemClass::Float;
  }
  return ElemClass::SignedInt;
}

// NEON intrinsic-name suffix: "s32", "u8", "f64", ...
std::string_view neon_suffix(ElementType e);

// C scalar spelling: "int32_t", "float", "_Float16", ...
std::string_view scalar_c_name(ElementType e);

std::optional<ElementType> elem_from_suffix(std::string_view suffix);
std::optional<ElementType> elem_from_class(ElemClass cls, unsigned bits);

// Unsigned element of the same width (comparison results are masks).
ElementType unsigned_counterpart(ElementType e);

// A NEON vector type: element type plus lane count totalling 64 or 128 bits.
struct NeonVectorType {
  ElementType elem{ElementType::I8};
  unsigned lanes = 0;

  constexpr unsigned total_bits() const { return bit_width(elem) * lanes; }
  constexpr bool is_q() const { return total_bits() == 128; }
  // Canonical spelling, e.g. "int32x4_t".
  std::string name() const;

  friend constexpr bool operator==(NeonVectorType, NeonVectorType) = default;
};

// Checked constructor: total width must be 64 or 128 bits.
NeonVectorType neon_vector_type(ElementType elem, unsigned lanes);
// The 64-bit (q = false) or 128-bit (q = true) vector of a given element.
NeonVectorType neon_type_for_width(ElementType elem, bool q);
std::optional<NeonVectorType> parse_neon_type(std::string_view token);

// All 22 NEON vector types, 64-bit forms first, int/uint/float within each.
const std::array<NeonVectorType, 22>& all_neon_types();

// An RVV vector register type at LMUL = 1.
struct RvvVectorType {
  unsigned sew = 8;
  ElemClass cls = ElemClass::SignedInt;

  // Canonical spelling, e.g. "vint32m1_t".
  std::string name() const;
  // Fixed-size typedef name the rewriter emits, e.g. "fixed_vint32m1_t".
  std::string fixed_name() const;

  friend constexpr bool operator==(RvvVectorType, RvvVectorType) = default;
};

// Hardware configuration a translation or validation run targets.
struct VlenConfig {
  unsigned vlen_bits = 128;
  bool zvfh = false;

  bool valid() const;
  constexpr unsigned vlmax(unsigned sew) const { return vlen_bits / sew; }
};

enum class MapFailure : uint8_t {
  VlenTooSmall,
  MissingZvfh,
  UnsupportedElementClass,
};

std::string_view map_failure_name(MapFailure f);

struct MappingResult {
  std::optional<RvvVectorType> rvv;
  unsigned fixed_vlen_bits = 0;
  std::optional<MapFailure> failure;

  bool mapped() const { return rvv.has_value(); }
};

// NEON -> RVV type substitution under a given configuration. Total over all
// NEON types: failures are reported in the result, never thrown.
MappingResult map_type(NeonVectorType neon, const VlenConfig& cfg);

// Configuration-independent facts about one NEON type's mapping.
struct TypeMappingRow {
  NeonVectorType neon;
  unsigned vlen_min = 0;
  bool requires_zvfh = false;
  RvvVectorType rvv;
};

std::array<TypeMappingRow, 22> mapping_table();

}  // namespace neon2rvv

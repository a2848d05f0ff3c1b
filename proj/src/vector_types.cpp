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

#include "neon2rvv/vector_types.hpp"

#include <stdexcept>

namespace neon2rvv {

namespace {

constexpr std::array<ElementType, kNumElementTypes> kAllElems = {
    ElementType::I8,  ElementType::I16, ElementType::I32, ElementType::I64,
    ElementType::U8,  ElementType::U16, ElementType::U32, ElementType::U64,
    ElementType::F16, ElementType::F32, ElementType::F64,
};

}  // namespace

std::string_view neon_suffix(ElementType e) {
  switch (e) {
    case ElementType::I8:
      return "s8";
    case ElementType::I16:
      return "s16";
    case ElementType::I32:
      return "s32";
    case ElementType::I64:
      return "s64";
    case ElementType::U8:
      return "u8";
    case ElementType::U16:
      return "u16";
    case ElementType::U32:
      return "u32";
    case ElementType::U64:
      return "u64";
    case ElementType::F16:
      return "f16";
    case ElementType::F32:
      return "f32";
    case ElementType::F64:
      return "f64";
  }
  return "";
}

std::string_view scalar_c_name(ElementType e) {
  switch (e) {
    case ElementType::I8:
      return "int8_t";
    case ElementType::I16:
      return "int16_t";
    case ElementType::I32:
      return "int32_t";
    case ElementType::I64:
      return "int64_t";
    case ElementType::U8:
      return "uint8_t";
    case ElementType::U16:
      return "uint16_t";
    case ElementType::U32:
      return "uint32_t";
    case ElementType::U64:
      return "uint64_t";
    case ElementType::F16:
      return "_Float16";
    case ElementType::F32:
      return "float";
    case ElementType::F64:
      return "double";
  }
  return "";
}

std::optional<ElementType> elem_from_suffix(std::string_view suffix) {
  for (ElementType e : kAllElems) {
    if (neon_suffix(e) == suffix) return e;
  }
  return std::nullopt;
}

std::optional<ElementType> elem_from_class(ElemClass cls, unsigned bits) {
  for (ElementType e : kAllElems) {
    if (elem_class(e) == cls && bit_width(e) == bits) return e;
  }
  return std::nullopt;
}

ElementType unsigned_counterpart(ElementType e) {
  auto u = elem_from_class(ElemClass::UnsignedInt, bit_width(e));
  if (!u) throw std::logic_error("no unsigned counterpart");
  return *u;
}

namespace {

std::string_view neon_elem_stem(ElementType e) {
  switch (elem_class(e)) {
    case ElemClass::SignedInt:
      return "int";
    case ElemClass::UnsignedInt:
      return "uint";
    case ElemClass::Float:
      return "float";
  }
  return "";
}

}  // namespace

std::string NeonVectorType::name() const {
  return std::string(neon_elem_stem(elem)) + std::to_string(bit_width(elem)) +
         "x" + std::to_string(lanes) + "_t";
}

NeonVectorType neon_vector_type(ElementType elem, unsigned lanes) {
  NeonVectorType t{elem, lanes};
  if (t.total_bits() != 64 && t.total_bits() != 128) {
    throw std::invalid_argument("NEON vector must total 64 or 128 bits");
  }
  return t;
}

NeonVectorType neon_type_for_width(ElementType elem, bool q) {
  return neon_vector_type(elem, (q ? 128u : 64u) / bit_width(elem));
}

std::optional<NeonVectorType> parse_neon_type(std::string_view token) {
  for (const NeonVectorType& t : all_neon_types()) {
    if (t.name() == token) return t;
  }
  return std::nullopt;
}

const std::array<NeonVectorType, 22>& all_neon_types() {
  static const std::array<NeonVectorType, 22> kTypes = [] {
    std::array<NeonVectorType, 22> out{};
    size_t i = 0;
    for (bool q : {false, true}) {
      for (ElementType e : kAllElems) {
        out[i++] = neon_type_for_width(e, q);
      }
    }
    return out;
  }();
  return kTypes;
}

std::string RvvVectorType::name() const {
  std::string_view stem;
  switch (cls) {
    case ElemClass::SignedInt:
      stem = "vint";
      break;
    case ElemClass::UnsignedInt:
      stem = "vuint";
      break;
    case ElemClass::Float:
      stem = "vfloat";
      break;
  }
  return std::string(stem) + std::to_string(sew) + "m1_t";
}

std::string RvvVectorType::fixed_name() const { return "fixed_" + name(); }

bool VlenConfig::valid() const {
  if (vlen_bits < 32 || vlen_bits > 65536) return false;
  return (vlen_bits & (vlen_bits - 1)) == 0;
}

std::string_view map_failure_name(MapFailure f) {
  switch (f) {
    case MapFailure::VlenTooSmall:
      return "vlen-too-small";
    case MapFailure::MissingZvfh:
      return "missing-zvfh";
    case MapFailure::UnsupportedElementClass:
      return "unsupported-element-class";
  }
  return "";
}

MappingResult map_type(NeonVectorType neon, const VlenConfig& cfg) {
  MappingResult result;
  if (cfg.vlen_bits < neon.total_bits()) {
    result.failure = MapFailure::VlenTooSmall;
    return result;
  }
  if (neon.elem == ElementType::F16 && !cfg.zvfh) {
    result.failure = MapFailure::MissingZvfh;
    return result;
  }
  result.rvv = RvvVectorType{bit_width(neon.elem), elem_class(neon.elem)};
  result.fixed_vlen_bits = cfg.vlen_bits;
  return result;
}

std::array<TypeMappingRow, 22> mapping_table() {
  std::array<TypeMappingRow, 22> rows{};
  size_t i = 0;
  for (const NeonVectorType& t : all_neon_types()) {
    rows[i++] = TypeMappingRow{
        t,
        t.total_bits(),
        t.elem == ElementType::F16,
        RvvVectorType{bit_width(t.elem), elem_class(t.elem)},
    };
  }
  return rows;
}

}  // namespace neon2rvv

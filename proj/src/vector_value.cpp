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

#include "neon2rvv/vector_value.hpp"

#include <cstring>
#include <stdexcept>

namespace neon2rvv {

uint64_t f32_to_bits(float v) {
  uint32_t b;
  std::memcpy(&b, &v, sizeof(b));
  return b;
}

float bits_to_f32(uint64_t bits) {
  uint32_t b = static_cast<uint32_t>(bits);
  float v;
  std::memcpy(&v, &b, sizeof(v));
  return v;
}

uint64_t f64_to_bits(double v) {
  uint64_t b;
  std::memcpy(&b, &v, sizeof(b));
  return b;
}

double bits_to_f64(uint64_t bits) {
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

bool is_nan_pattern(uint64_t bits, unsigned width) {
  switch (width) {
    case 16:
      return (bits & 0x7C00) == 0x7C00 && (bits & 0x03FF) != 0;
    case 32:
      return (bits & 0x7F800000) == 0x7F800000 && (bits & 0x007FFFFF) != 0;
    case 64:
      return (bits & 0x7FF0000000000000ULL) == 0x7FF0000000000000ULL &&
             (bits & 0x000FFFFFFFFFFFFFULL) != 0;
    default:
      return false;
  }
}

VectorValue::VectorValue(ElementType elem, std::vector<uint64_t> lanes)
    : elem_(elem), bits_(std::move(lanes)) {
  uint64_t mask = lane_mask(bit_width(elem_));
  for (uint64_t& b : bits_) b &= mask;
}

VectorValue VectorValue::zeros(ElementType elem, unsigned lanes) {
  return VectorValue(elem, std::vector<uint64_t>(lanes, 0));
}

VectorValue VectorValue::splat(ElementType elem, unsigned lanes, uint64_t bits) {
  return VectorValue(elem, std::vector<uint64_t>(lanes, bits));
}

VectorValue VectorValue::from_i64(ElementType elem,
                                  std::initializer_list<int64_t> v) {
  std::vector<uint64_t> lanes;
  lanes.reserve(v.size());
  for (int64_t x : v) lanes.push_back(static_cast<uint64_t>(x));
  return VectorValue(elem, std::move(lanes));
}

VectorValue VectorValue::from_f32(unsigned, std::initializer_list<float> v) {
  std::vector<uint64_t> lanes;
  lanes.reserve(v.size());
  for (float x : v) lanes.push_back(f32_to_bits(x));
  return VectorValue(ElementType::F32, std::move(lanes));
}

VectorValue VectorValue::from_f64(std::initializer_list<double> v) {
  std::vector<uint64_t> lanes;
  lanes.reserve(v.size());
  for (double x : v) lanes.push_back(f64_to_bits(x));
  return VectorValue(ElementType::F64, std::move(lanes));
}

uint64_t VectorValue::lane(unsigned i) const {
  if (i >= bits_.size()) throw std::out_of_range("lane index");
  return bits_[i];
}

void VectorValue::set_lane(unsigned i, uint64_t bits) {
  if (i >= bits_.size()) throw std::out_of_range("lane index");
  bits_[i] = bits & lane_mask(width());
}

std::string VectorValue::to_string() const {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  switch (elem_class(elem_)) {
    case ElemClass::SignedInt:
      out += 'i';
      break;
    case ElemClass::UnsignedInt:
      out += 'u';
      break;
    case ElemClass::Float:
      out += 'f';
      break;
  }
  out += std::to_string(width());
  out += 'x';
  out += std::to_string(lanes());
  out += '[';
  unsigned digits = width() / 4;
  for (unsigned i = 0; i < lanes(); ++i) {
    if (i) out += ' ';
    uint64_t v = bits_[i];
    for (unsigned d = 0; d < digits; ++d) {
      out += kHex[(v >> ((digits - 1 - d) * 4)) & 0xF];
    }
  }
  out += ']';
  return out;
}

VectorValue canonicalize_nans(const VectorValue& v) {
  if (elem_class(v.elem()) != ElemClass::Float) return v;
  VectorValue out = v;
  for (unsigned i = 0; i < out.lanes(); ++i) {
    if (is_nan_pattern(out.lane(i), out.width())) {
      out.set_lane(i, canonical_nan(out.width()));
    }
  }
  return out;
}

}  // namespace neon2rvv

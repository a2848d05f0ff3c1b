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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "neon2rvv/vector_types.hpp"

namespace neon2rvv {

// All-ones mask for a lane width in {8, 16, 32, 64}.
constexpr uint64_t lane_mask(unsigned width) {
  return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

constexpr int64_t sign_extend(uint64_t bits, unsigned width) {
  if (width >= 64) return static_cast<int64_t>(bits);
  uint64_t sign = uint64_t{1} << (width - 1);
  return static_cast<int64_t>((bits ^ sign) - sign);
}

uint64_t f32_to_bits(float v);
float bits_to_f32(uint64_t bits);
uint64_t f64_to_bits(double v);
double bits_to_f64(uint64_t bits);

// Quiet-NaN pattern used when canonicalizing, per float width.
constexpr uint64_t canonical_nan(unsigned width) {
  switch (width) {
    case 16:
      return 0x7E00;
    case 32:
      return 0x7FC00000;
    default:
      return 0x7FF8000000000000ULL;
  }
}

// True when a bit pattern of the given float width encodes any NaN.
bool is_nan_pattern(uint64_t bits, unsigned width);

// A bit-exact vector of lanes. Lane 0 is the lowest-addressed element; all
// patterns are stored masked to the element width.
class VectorValue {
 public:
  VectorValue() = default;
  VectorValue(ElementType elem, std::vector<uint64_t> lanes);

  static VectorValue zeros(ElementType elem, unsigned lanes);
  static VectorValue splat(ElementType elem, unsigned lanes, uint64_t bits);
  // Lanes given as signed numbers (two's complement for the lane width).
  static VectorValue from_i64(ElementType elem, std::initializer_list<int64_t> v);
  static VectorValue from_f32(unsigned lanes_128, std::initializer_list<float> v);
  static VectorValue from_f64(std::initializer_list<double> v);

  ElementType elem() const { return elem_; }
  unsigned width() const { return bit_width(elem_); }
  unsigned lanes() const { return static_cast<unsigned>(bits_.size()); }

  uint64_t lane(unsigned i) const;
  void set_lane(unsigned i, uint64_t bits);
  int64_t lane_i64(unsigned i) const { return sign_extend(lane(i), width()); }
  float lane_f32(unsigned i) const { return bits_to_f32(lane(i)); }
  double lane_f64(unsigned i) const { return bits_to_f64(lane(i)); }

  const std::vector<uint64_t>& raw() const { return bits_; }

  // Hex dump, e.g. "u32x4[00000001 00000000 ffffffff 00000000]".
  std::string to_string() const;

  friend bool operator==(const VectorValue&, const VectorValue&) = default;

 private:
  ElementType elem_{ElementType::I8};
  std::vector<uint64_t> bits_;
};

// Replaces every NaN lane of a float-element vector with the canonical
// quiet-NaN pattern of its width. Integer vectors pass through unchanged.
VectorValue canonicalize_nans(const VectorValue& v);

// SplitMix64: tiny deterministic generator used everywhere randomness is
// needed so reports reproduce byte-for-byte across runs and hosts.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound), bound > 0.
  uint64_t below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

}  // namespace neon2rvv

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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "neon2rvv/vector_types.hpp"
#include "neon2rvv/vector_value.hpp"

namespace neon2rvv {

// Supported NEON intrinsic families. Each family covers the element types
// NEON defines for it; see family_info() for the per-family sets.
enum class NeonFamily : uint8_t {
  Ld1,
  St1,
  Add,
  Sub,
  Mul,
  Neg,
  Min,
  Max,
  And,
  Orr,
  Eor,
  Mvn,
  Bic,
  ShlN,
  ShrN,
  Ceq,
  Cgt,
  Cge,
  Clt,
  Cle,
  GetHigh,
  GetLow,
  Combine,
  DupN,
  GetLane,
  SetLane,
  Rbit,
};

inline constexpr unsigned kNumNeonFamilies = 27;

// Argument/result shape of a family.
enum class SigKind : uint8_t {
  Load,           // (ptr) -> vec
  Store,          // (ptr, vec) -> void
  Unary,          // (vec) -> vec
  Binary,         // (vec, vec) -> vec
  Compare,        // (vec, vec) -> unsigned vec of same width
  ShiftImm,       // (vec, imm) -> vec
  GetHalf,        // (vec128) -> vec64
  CombineHalves,  // (vec64, vec64) -> vec128
  DupN,           // (scalar) -> vec
  GetLane,        // (vec, imm) -> scalar
  SetLane,        // (scalar, vec, imm) -> vec
};

struct FamilyInfo {
  NeonFamily family;
  std::string_view token;  // name fragment between the leading "v" and suffix
  SigKind kind;
  uint16_t elem_mask;  // bit i set = ElementType(i) supported
  bool has_q_pair;     // false: single form spanning 128 -> 64 or 64 -> 128
};

const FamilyInfo& family_info(NeonFamily f);

// One concrete intrinsic: family, 128-bit form flag, element type.
struct NeonIntrinsicId {
  NeonFamily family{NeonFamily::Add};
  bool q = false;
  ElementType elem{ElementType::I8};

  // Canonical NEON spelling, e.g. "vaddq_s32", "vget_high_s32".
  std::string name() const;

  friend constexpr bool operator==(NeonIntrinsicId, NeonIntrinsicId) = default;
};

struct ImmRange {
  int64_t lo = 0;
  int64_t hi = 0;
  bool contains(int64_t v) const { return v >= lo && v <= hi; }
};

// Full signature of one intrinsic, derived from family/q/elem.
struct NeonSignature {
  SigKind kind{SigKind::Binary};
  std::vector<NeonVectorType> vec_args;
  bool scalar_arg = false;
  std::optional<ImmRange> imm;
  bool memory = false;
  std::optional<NeonVectorType> result_vec;
  bool result_scalar = false;

  // Every NEON vector type in the signature (arguments and result).
  std::vector<NeonVectorType> all_types() const;
};

NeonSignature signature(NeonIntrinsicId id);

// Lane count of the primary vector operand (the vl a conversion targets).
unsigned intrinsic_lanes(NeonIntrinsicId id);

// All supported intrinsics in deterministic order (family, elem, then q).
const std::vector<NeonIntrinsicId>& neon_catalog();
bool in_catalog(NeonIntrinsicId id);

// Parses a NEON intrinsic spelling. Unknown families, unknown suffixes and
// forms outside the catalog return nullopt.
std::optional<NeonIntrinsicId> parse_intrinsic_name(std::string_view name);

class EvalError : public std::runtime_error {
 public:
  enum class Kind {
    UnsupportedIntrinsic,
    ArityMismatch,
    ImmediateOutOfRange,
    OutOfBoundsMemory,
  };

  EvalError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct EvalArgs {
  std::vector<VectorValue> vectors;
  std::optional<uint64_t> scalar;  // dup_n / set_lane source, as a bit pattern
  std::optional<int64_t> imm;      // shift amount or lane index
  std::optional<uint64_t> addr;    // byte offset into the memory image
};

struct EvalOutput {
  std::optional<VectorValue> vec;
  std::optional<uint64_t> scalar;
};

// Bit-exact NEON lane semantics. st1 writes exactly lanes * elem_bytes bytes
// of `memory`; ld1 reads the same. Contract violations throw EvalError.
EvalOutput eval_neon(NeonIntrinsicId id, const EvalArgs& args,
                     std::span<std::byte> memory = {});

}  // namespace neon2rvv

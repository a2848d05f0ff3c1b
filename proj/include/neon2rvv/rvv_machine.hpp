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
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "neon2rvv/vector_types.hpp"
#include "neon2rvv/vector_value.hpp"

namespace neon2rvv {

// Abstract RVV ops at LMUL = 1. Every op carries its own vl; there is no
// vsetvli state. Shift-by-scalar ops use the amount modulo SEW, matching the
// architecture.
enum class RvvOpcode : uint8_t {
  Vle,
  Vse,
  VmvVX,
  VmvVV,
  VmvXS,
  VaddVV,
  VaddVX,
  VsubVV,
  VrsubVX,
  VmulVV,
  Vneg,
  VandVV,
  VandVX,
  VorVV,
  VorVX,
  VxorVV,
  VxorVX,
  Vnot,
  VsllVX,
  VsrlVX,
  VsraVX,
  VminVV,
  VmaxVV,
  VminuVV,
  VmaxuVV,
  VmseqVV,
  VmsgtVV,
  VmsgtuVV,
  VmsgeVV,
  VmsgeuVV,
  VmsltVV,
  VmsltuVV,
  VmsleVV,
  VmsleuVV,
  VmfeqVV,
  VmfneVV,
  VmfgtVV,
  VmfgeVV,
  VmfltVV,
  VmfleVV,
  VmergeVXM,
  VmergeVVM,
  VslidedownVX,
  VslideupVX,
  VfaddVV,
  VfsubVV,
  VfmulVV,
  Vfneg,
  VfminVV,
  VfmaxVV,
  ScalarEmul,
};

// Trace/export mnemonic, e.g. "vadd_vv".
std::string_view opcode_mnemonic(RvvOpcode op);
bool opcode_writes_mask(RvvOpcode op);

struct MaskValue {
  std::vector<bool> bits;

  friend bool operator==(const MaskValue&, const MaskValue&) = default;
};

// A machine register image: vlmax lanes of sew-bit patterns.
struct RegValue {
  unsigned sew = 8;
  ElemClass cls = ElemClass::SignedInt;
  std::vector<uint64_t> lanes;
};

using SlotValue = std::variant<std::monostate, RegValue, MaskValue, uint64_t>;

enum class SlotKind : uint8_t { Vector, Mask, Scalar };

struct SlotDecl {
  SlotKind kind{SlotKind::Vector};
  std::string name;
};

struct RvvOperand {
  enum class Kind : uint8_t { Slot, Imm };
  Kind kind{Kind::Slot};
  int slot = -1;
  uint64_t imm = 0;

  static RvvOperand S(int slot) { return RvvOperand{Kind::Slot, slot, 0}; }
  static RvvOperand I(uint64_t imm) { return RvvOperand{Kind::Imm, -1, imm}; }
};

struct RvvProgram;

// Scalar-loop escape used by fallback recipes: runs a host-side evaluation
// instead of vector ops and charges a precomputed op count.
struct ScalarEmul {
  std::function<void(const RvvProgram&, std::vector<SlotValue>&,
                     std::span<std::byte>)>
      run;
  uint64_t charge = 0;
  std::string label;
};

struct RvvOp {
  RvvOpcode opcode{RvvOpcode::VaddVV};
  unsigned sew = 32;
  ElemClass cls = ElemClass::SignedInt;
  unsigned vl = 0;
  std::vector<RvvOperand> srcs;
  int dest = -1;
  std::shared_ptr<ScalarEmul> emul;
};

// Straight-line SSA program. Inputs are bound before execution; each slot is
// written exactly once.
struct RvvProgram {
  struct Input {
    int slot = -1;
    std::string name;
    std::variant<VectorValue, uint64_t> value;
  };

  std::vector<SlotDecl> slots;
  std::vector<Input> inputs;
  std::vector<RvvOp> ops;
  int output_slot = -1;      // -1: memory effect only
  unsigned output_lanes = 0;  // live lanes extracted from the output slot
  ElementType output_elem{ElementType::I8};
};

struct ExecStats {
  uint64_t dynamic_op_count = 0;
};

struct ExecResult {
  std::optional<VectorValue> output_vec;
  std::optional<uint64_t> output_scalar;
  ExecStats stats;
  // Final slot values, for tail and framing inspection in tests.
  std::vector<SlotValue> slots;
};

class ExecError : public std::runtime_error {
 public:
  enum class Kind {
    VlExceedsCapacity,
    TypeMismatch,
    UndefinedValueRef,
    RedefinedValueRef,
    OutOfBoundsMemory,
  };

  ExecError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Byte pattern filling tail lanes and fresh registers, standing in for the
// unknown prior register contents that tail-undisturbed ops preserve.
inline constexpr uint8_t kTailCanaryByte = 0xA5;
uint64_t tail_canary(unsigned sew);

// Executes a program. vse writes exactly vl * sew / 8 bytes of `memory`.
// When `trace` is given, each executed op logs "opcode e<sew> vl=<n>".
ExecResult exec(const RvvProgram& program, const VlenConfig& cfg,
                std::span<std::byte> memory = {}, std::ostream* trace = nullptr);

}  // namespace neon2rvv

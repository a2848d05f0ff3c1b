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

#include "neon2rvv/rvv_machine.hpp"

#include <algorithm>
#include <cmath>

namespace neon2rvv {

namespace {

struct MnemonicRow {
  RvvOpcode op;
  std::string_view name;
};

constexpr std::string_view kMnemonics[] = {
    "vle",        "vse",        "vmv_v_x",    "vmv_v_v",    "vmv_x_s",
    "vadd_vv",    "vadd_vx",    "vsub_vv",    "vrsub_vx",   "vmul_vv",
    "vneg",       "vand_vv",    "vand_vx",    "vor_vv",     "vor_vx",
    "vxor_vv",    "vxor_vx",    "vnot",       "vsll_vx",    "vsrl_vx",
    "vsra_vx",    "vmin_vv",    "vmax_vv",    "vminu_vv",   "vmaxu_vv",
    "vmseq_vv",   "vmsgt_vv",   "vmsgtu_vv",  "vmsge_vv",   "vmsgeu_vv",
    "vmslt_vv",   "vmsltu_vv",  "vmsle_vv",   "vmsleu_vv",  "vmfeq_vv",
    "vmfne_vv",   "vmfgt_vv",   "vmfge_vv",   "vmflt_vv",   "vmfle_vv",
    "vmerge_vxm", "vmerge_vvm", "vslidedown_vx", "vslideup_vx", "vfadd_vv",
    "vfsub_vv",   "vfmul_vv",   "vfneg",      "vfmin_vv",   "vfmax_vv",
    "scalar_emul",
};

[[noreturn]] void fail(ExecError::Kind kind, const std::string& msg) {
  throw ExecError(kind, msg);
}

bool is_float_arith(RvvOpcode op) {
  switch (op) {
    case RvvOpcode::VfaddVV:
    case RvvOpcode::VfsubVV:
    case RvvOpcode::VfmulVV:
    case RvvOpcode::Vfneg:
    case RvvOpcode::VfminVV:
    case RvvOpcode::VfmaxVV:
    case RvvOpcode::VmfeqVV:
    case RvvOpcode::VmfneVV:
    case RvvOpcode::VmfgtVV:
    case RvvOpcode::VmfgeVV:
    case RvvOpcode::VmfltVV:
    case RvvOpcode::VmfleVV:
      return true;
    default:
      return false;
  }
}

// IEEE 754-2019 minimumNumber/maximumNumber: a single NaN operand yields the
// other operand; -0 orders below +0. This intentionally differs from the
// NEON FMIN/FMAX NaN rule.
template <typename T>
uint64_t rvv_fminmax(T a, T b, bool want_min, unsigned width) {
  bool an = std::isnan(a), bn = std::isnan(b);
  if (an && bn) return canonical_nan(width);
  T r;
  if (an) {
    r = b;
  } else if (bn) {
    r = a;
  } else if (a == T{0} && b == T{0}) {
    bool neg = want_min ? (std::signbit(a) || std::signbit(b))
                        : (std::signbit(a) && std::signbit(b));
    r = neg ? T{-0.0} : T{0.0};
  } else {
    r = want_min ? std::min(a, b) : std::max(a, b);
  }
  if constexpr (sizeof(T) == 4) {
    return f32_to_bits(r);
  } else {
    return f64_to_bits(r);
  }
}

class Executor {
 public:
  Executor(const RvvProgram& program, const VlenConfig& cfg,
           std::span<std::byte> memory, std::ostream* trace)
      : program_(program), cfg_(cfg), memory_(memory), trace_(trace) {
    slots_.resize(program.slots.size());
  }

  ExecResult run() {
    bind_inputs();
    for (const RvvOp& op : program_.ops) {
      step(op);
    }
    ExecResult result;
    result.stats = stats_;
    if (program_.output_slot >= 0) {
      const SlotValue& out = at(program_.output_slot, "program output");
      if (const RegValue* reg = std::get_if<RegValue>(&out)) {
        if (program_.output_lanes > reg->lanes.size()) {
          fail(ExecError::Kind::TypeMismatch, "output lanes exceed register");
        }
        std::vector<uint64_t> lanes(
            reg->lanes.begin(), reg->lanes.begin() + program_.output_lanes);
        result.output_vec = VectorValue(program_.output_elem, std::move(lanes));
      } else if (const uint64_t* s = std::get_if<uint64_t>(&out)) {
        result.output_scalar = *s & lane_mask(bit_width(program_.output_elem));
      } else {
        fail(ExecError::Kind::TypeMismatch, "output slot holds a mask");
      }
    }
    result.slots = std::move(slots_);
    return result;
  }

 private:
  void bind_inputs() {
    for (const RvvProgram::Input& in : program_.inputs) {
      check_slot_index(in.slot);
      if (!std::holds_alternative<std::monostate>(slots_[in.slot])) {
        fail(ExecError::Kind::RedefinedValueRef,
             "input rebinds slot " + std::to_string(in.slot));
      }
      if (const VectorValue* v = std::get_if<VectorValue>(&in.value)) {
        unsigned sew = v->width();
        unsigned vlmax = cfg_.vlmax(sew);
        if (v->lanes() > vlmax) {
          fail(ExecError::Kind::VlExceedsCapacity,
               "input " + in.name + " has " + std::to_string(v->lanes()) +
                   " lanes but vlmax is " + std::to_string(vlmax));
        }
        RegValue reg;
        reg.sew = sew;
        reg.cls = elem_class(v->elem());
        reg.lanes.assign(vlmax, tail_canary(sew));
        for (unsigned i = 0; i < v->lanes(); ++i) reg.lanes[i] = v->lane(i);
        slots_[in.slot] = std::move(reg);
      } else {
        slots_[in.slot] = std::get<uint64_t>(in.value);
      }
    }
  }

  void check_slot_index(int slot) const {
    if (slot < 0 || static_cast<size_t>(slot) >= slots_.size()) {
      fail(ExecError::Kind::UndefinedValueRef,
           "slot index " + std::to_string(slot) + " out of range");
    }
  }

  const SlotValue& at(int slot, const char* what) const {
    check_slot_index(slot);
    if (std::holds_alternative<std::monostate>(slots_[slot])) {
      fail(ExecError::Kind::UndefinedValueRef,
           std::string(what) + " reads undefined slot " + std::to_string(slot));
    }
    return slots_[slot];
  }

  const RegValue& reg_operand(const RvvOp& op, size_t idx) const {
    if (idx >= op.srcs.size() || op.srcs[idx].kind != RvvOperand::Kind::Slot) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": missing vector operand");
    }
    const SlotValue& v = at(op.srcs[idx].slot, opcode_mnemonic(op.opcode).data());
    const RegValue* reg = std::get_if<RegValue>(&v);
    if (!reg) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": operand is not a vector");
    }
    if (reg->sew != op.sew) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": operand sew " +
               std::to_string(reg->sew) + " != op sew " + std::to_string(op.sew));
    }
    // Integer sign is carried by the opcode; float bits are not coerced.
    if ((reg->cls == ElemClass::Float) != (op.cls == ElemClass::Float)) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": float/int class mismatch");
    }
    return *reg;
  }

  uint64_t scalar_operand(const RvvOp& op, size_t idx) const {
    if (idx >= op.srcs.size()) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": missing scalar operand");
    }
    const RvvOperand& o = op.srcs[idx];
    if (o.kind == RvvOperand::Kind::Imm) return o.imm;
    const SlotValue& v = at(o.slot, opcode_mnemonic(op.opcode).data());
    const uint64_t* s = std::get_if<uint64_t>(&v);
    if (!s) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": operand is not a scalar");
    }
    return *s;
  }

  const MaskValue& mask_operand(const RvvOp& op, size_t idx) const {
    if (idx >= op.srcs.size() || op.srcs[idx].kind != RvvOperand::Kind::Slot) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": missing mask operand");
    }
    const SlotValue& v = at(op.srcs[idx].slot, opcode_mnemonic(op.opcode).data());
    const MaskValue* m = std::get_if<MaskValue>(&v);
    if (!m) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": operand is not a mask");
    }
    if (m->bits.size() < op.vl) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": mask shorter than vl");
    }
    return *m;
  }

  void define(const RvvOp& op, SlotValue value, SlotKind kind) {
    check_slot_index(op.dest);
    if (!std::holds_alternative<std::monostate>(slots_[op.dest])) {
      fail(ExecError::Kind::RedefinedValueRef,
           std::string(opcode_mnemonic(op.opcode)) + " redefines slot " +
               std::to_string(op.dest));
    }
    if (program_.slots[op.dest].kind != kind) {
      fail(ExecError::Kind::TypeMismatch,
           std::string(opcode_mnemonic(op.opcode)) + ": slot kind mismatch");
    }
    slots_[op.dest] = std::move(value);
  }

  RegValue fresh_reg(const RvvOp& op) const {
    RegValue reg;
    reg.sew = op.sew;
    reg.cls = op.cls;
    reg.lanes.assign(cfg_.vlmax(op.sew), tail_canary(op.sew));
    return reg;
  }

  uint64_t float_lane_binop(const RvvOp& op, uint64_t a, uint64_t b) const {
    if (op.sew == 32) {
      float fa = bits_to_f32(a), fb = bits_to_f32(b);
      switch (op.opcode) {
        case RvvOpcode::VfaddVV:
          return f32_to_bits(fa + fb);
        case RvvOpcode::VfsubVV:
          return f32_to_bits(fa - fb);
        case RvvOpcode::VfmulVV:
          return f32_to_bits(fa * fb);
        case RvvOpcode::VfminVV:
          return rvv_fminmax(fa, fb, true, 32);
        case RvvOpcode::VfmaxVV:
          return rvv_fminmax(fa, fb, false, 32);
        default:
          break;
      }
    } else {
      double fa = bits_to_f64(a), fb = bits_to_f64(b);
      switch (op.opcode) {
        case RvvOpcode::VfaddVV:
          return f64_to_bits(fa + fb);
        case RvvOpcode::VfsubVV:
          return f64_to_bits(fa - fb);
        case RvvOpcode::VfmulVV:
          return f64_to_bits(fa * fb);
        case RvvOpcode::VfminVV:
          return rvv_fminmax(fa, fb, true, 64);
        case RvvOpcode::VfmaxVV:
          return rvv_fminmax(fa, fb, false, 64);
        default:
          break;
      }
    }
    fail(ExecError::Kind::TypeMismatch, "unhandled float op");
  }

  bool float_lane_cmp(const RvvOp& op, uint64_t a, uint64_t b) const {
    auto cmp = [&](auto fa, auto fb) {
      switch (op.opcode) {
        case RvvOpcode::VmfeqVV:
          return fa == fb;
        case RvvOpcode::VmfneVV:
          return fa != fb;
        case RvvOpcode::VmfgtVV:
          return fa > fb;
        case RvvOpcode::VmfgeVV:
          return fa >= fb;
        case RvvOpcode::VmfltVV:
          return fa < fb;
        case RvvOpcode::VmfleVV:
          return fa <= fb;
        default:
          return false;
      }
    };
    return op.sew == 32 ? cmp(bits_to_f32(a), bits_to_f32(b))
                        : cmp(bits_to_f64(a), bits_to_f64(b));
  }

  bool int_lane_cmp(const RvvOp& op, uint64_t a, uint64_t b) const {
    int64_t sa = sign_extend(a, op.sew), sb = sign_extend(b, op.sew);
    switch (op.opcode) {
      case RvvOpcode::VmseqVV:
        return a == b;
      case RvvOpcode::VmsgtVV:
        return sa > sb;
      case RvvOpcode::VmsgtuVV:
        return a > b;
      case RvvOpcode::VmsgeVV:
        return sa >= sb;
      case RvvOpcode::VmsgeuVV:
        return a >= b;
      case RvvOpcode::VmsltVV:
        return sa < sb;
      case RvvOpcode::VmsltuVV:
        return a < b;
      case RvvOpcode::VmsleVV:
        return sa <= sb;
      case RvvOpcode::VmsleuVV:
        return a <= b;
      default:
        return false;
    }
  }

  void step(const RvvOp& op) {
    if (op.opcode == RvvOpcode::ScalarEmul) {
      if (!op.emul || !op.emul->run) {
        fail(ExecError::Kind::TypeMismatch, "scalar_emul without a body");
      }
      if (trace_) {
        *trace_ << opcode_mnemonic(op.opcode) << " e" << op.sew
                << " vl=" << op.vl << "\n";
      }
      op.emul->run(program_, slots_, memory_);
      stats_.dynamic_op_count += op.emul->charge;
      return;
    }

    if (op.sew != 8 && op.sew != 16 && op.sew != 32 && op.sew != 64) {
      fail(ExecError::Kind::TypeMismatch, "unsupported sew");
    }
    if (static_cast<uint64_t>(op.vl) * op.sew > cfg_.vlen_bits) {
      fail(ExecError::Kind::VlExceedsCapacity,
           std::string(opcode_mnemonic(op.opcode)) + ": vl " +
               std::to_string(op.vl) + " * sew " + std::to_string(op.sew) +
               " exceeds vlen " + std::to_string(cfg_.vlen_bits));
    }
    if (is_float_arith(op.opcode) && op.sew < 32) {
      fail(ExecError::Kind::TypeMismatch, "fp arithmetic below sew 32");
    }

    if (trace_) {
      *trace_ << opcode_mnemonic(op.opcode) << " e" << op.sew << " vl=" << op.vl
              << "\n";
    }
    stats_.dynamic_op_count += 1;

    uint64_t mask = lane_mask(op.sew);
    unsigned bytes = op.sew / 8;

    switch (op.opcode) {
      case RvvOpcode::Vle: {
        uint64_t addr = scalar_operand(op, 0);
        if (addr + static_cast<uint64_t>(op.vl) * bytes > memory_.size()) {
          fail(ExecError::Kind::OutOfBoundsMemory, "vle out of bounds");
        }
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          uint64_t v = 0;
          for (unsigned b = 0; b < bytes; ++b) {
            v |= static_cast<uint64_t>(
                     std::to_integer<uint8_t>(memory_[addr + i * bytes + b]))
                 << (8 * b);
          }
          reg.lanes[i] = v;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::Vse: {
        uint64_t addr = scalar_operand(op, 0);
        const RegValue& src = reg_operand(op, 1);
        if (addr + static_cast<uint64_t>(op.vl) * bytes > memory_.size()) {
          fail(ExecError::Kind::OutOfBoundsMemory, "vse out of bounds");
        }
        for (unsigned i = 0; i < op.vl; ++i) {
          for (unsigned b = 0; b < bytes; ++b) {
            memory_[addr + i * bytes + b] =
                static_cast<std::byte>((src.lanes[i] >> (8 * b)) & 0xFF);
          }
        }
        break;
      }
      case RvvOpcode::VmvVX: {
        uint64_t x = scalar_operand(op, 0) & mask;
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) reg.lanes[i] = x;
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VmvVV: {
        const RegValue& src = reg_operand(op, 0);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) reg.lanes[i] = src.lanes[i];
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VmvXS: {
        const RegValue& src = reg_operand(op, 0);
        define(op, SlotValue{src.lanes[0] & mask}, SlotKind::Scalar);
        break;
      }
      case RvvOpcode::VaddVV:
      case RvvOpcode::VsubVV:
      case RvvOpcode::VmulVV:
      case RvvOpcode::VandVV:
      case RvvOpcode::VorVV:
      case RvvOpcode::VxorVV:
      case RvvOpcode::VminVV:
      case RvvOpcode::VmaxVV:
      case RvvOpcode::VminuVV:
      case RvvOpcode::VmaxuVV: {
        const RegValue& a = reg_operand(op, 0);
        const RegValue& b = reg_operand(op, 1);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          uint64_t x = a.lanes[i], y = b.lanes[i], v = 0;
          switch (op.opcode) {
            case RvvOpcode::VaddVV:
              v = x + y;
              break;
            case RvvOpcode::VsubVV:
              v = x - y;
              break;
            case RvvOpcode::VmulVV:
              v = x * y;
              break;
            case RvvOpcode::VandVV:
              v = x & y;
              break;
            case RvvOpcode::VorVV:
              v = x | y;
              break;
            case RvvOpcode::VxorVV:
              v = x ^ y;
              break;
            case RvvOpcode::VminVV:
              v = sign_extend(x, op.sew) < sign_extend(y, op.sew) ? x : y;
              break;
            case RvvOpcode::VmaxVV:
              v = sign_extend(x, op.sew) > sign_extend(y, op.sew) ? x : y;
              break;
            case RvvOpcode::VminuVV:
              v = x < y ? x : y;
              break;
            case RvvOpcode::VmaxuVV:
              v = x > y ? x : y;
              break;
            default:
              break;
          }
          reg.lanes[i] = v & mask;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VaddVX:
      case RvvOpcode::VrsubVX:
      case RvvOpcode::VandVX:
      case RvvOpcode::VorVX:
      case RvvOpcode::VxorVX:
      case RvvOpcode::VsllVX:
      case RvvOpcode::VsrlVX:
      case RvvOpcode::VsraVX: {
        const RegValue& a = reg_operand(op, 0);
        uint64_t x = scalar_operand(op, 1);
        unsigned shamt = static_cast<unsigned>(x & (op.sew - 1));
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          uint64_t v = 0, lane = a.lanes[i];
          switch (op.opcode) {
            case RvvOpcode::VaddVX:
              v = lane + x;
              break;
            case RvvOpcode::VrsubVX:
              v = x - lane;
              break;
            case RvvOpcode::VandVX:
              v = lane & x;
              break;
            case RvvOpcode::VorVX:
              v = lane | x;
              break;
            case RvvOpcode::VxorVX:
              v = lane ^ x;
              break;
            case RvvOpcode::VsllVX:
              v = lane << shamt;
              break;
            case RvvOpcode::VsrlVX:
              v = lane >> shamt;
              break;
            case RvvOpcode::VsraVX:
              v = static_cast<uint64_t>(sign_extend(lane, op.sew) >> shamt);
              break;
            default:
              break;
          }
          reg.lanes[i] = v & mask;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::Vneg:
      case RvvOpcode::Vnot:
      case RvvOpcode::Vfneg: {
        const RegValue& a = reg_operand(op, 0);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          uint64_t v = a.lanes[i];
          if (op.opcode == RvvOpcode::Vneg) {
            v = 0 - v;
          } else if (op.opcode == RvvOpcode::Vnot) {
            v = ~v;
          } else {
            v ^= uint64_t{1} << (op.sew - 1);
          }
          reg.lanes[i] = v & mask;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VfaddVV:
      case RvvOpcode::VfsubVV:
      case RvvOpcode::VfmulVV:
      case RvvOpcode::VfminVV:
      case RvvOpcode::VfmaxVV: {
        const RegValue& a = reg_operand(op, 0);
        const RegValue& b = reg_operand(op, 1);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          reg.lanes[i] = float_lane_binop(op, a.lanes[i], b.lanes[i]) & mask;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VmseqVV:
      case RvvOpcode::VmsgtVV:
      case RvvOpcode::VmsgtuVV:
      case RvvOpcode::VmsgeVV:
      case RvvOpcode::VmsgeuVV:
      case RvvOpcode::VmsltVV:
      case RvvOpcode::VmsltuVV:
      case RvvOpcode::VmsleVV:
      case RvvOpcode::VmsleuVV:
      case RvvOpcode::VmfeqVV:
      case RvvOpcode::VmfneVV:
      case RvvOpcode::VmfgtVV:
      case RvvOpcode::VmfgeVV:
      case RvvOpcode::VmfltVV:
      case RvvOpcode::VmfleVV: {
        const RegValue& a = reg_operand(op, 0);
        const RegValue& b = reg_operand(op, 1);
        bool is_f = is_float_arith(op.opcode);
        MaskValue m;
        m.bits.resize(op.vl);
        for (unsigned i = 0; i < op.vl; ++i) {
          m.bits[i] = is_f ? float_lane_cmp(op, a.lanes[i], b.lanes[i])
                           : int_lane_cmp(op, a.lanes[i], b.lanes[i]);
        }
        define(op, std::move(m), SlotKind::Mask);
        break;
      }
      case RvvOpcode::VmergeVXM: {
        const RegValue& vs = reg_operand(op, 0);
        uint64_t x = scalar_operand(op, 1) & mask;
        const MaskValue& m = mask_operand(op, 2);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          reg.lanes[i] = m.bits[i] ? x : vs.lanes[i];
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VmergeVVM: {
        const RegValue& vs = reg_operand(op, 0);
        const RegValue& vt = reg_operand(op, 1);
        const MaskValue& m = mask_operand(op, 2);
        RegValue reg = fresh_reg(op);
        for (unsigned i = 0; i < op.vl; ++i) {
          reg.lanes[i] = m.bits[i] ? vt.lanes[i] : vs.lanes[i];
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VslidedownVX: {
        const RegValue& src = reg_operand(op, 0);
        uint64_t offset = scalar_operand(op, 1);
        RegValue reg = fresh_reg(op);
        uint64_t vlmax = cfg_.vlmax(op.sew);
        for (unsigned i = 0; i < op.vl; ++i) {
          uint64_t from = offset + i;
          reg.lanes[i] = from < vlmax ? src.lanes[from] : 0;
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::VslideupVX: {
        // Models the tail-undisturbed form: the base operand plays the prior
        // destination, so lanes below the offset and past vl come from it.
        const RegValue& base = reg_operand(op, 0);
        const RegValue& src = reg_operand(op, 1);
        uint64_t offset = scalar_operand(op, 2);
        RegValue reg = base;
        reg.cls = op.cls;
        for (uint64_t i = offset; i < op.vl; ++i) {
          reg.lanes[i] = src.lanes[i - offset];
        }
        define(op, std::move(reg), SlotKind::Vector);
        break;
      }
      case RvvOpcode::ScalarEmul:
        break;  // handled above
    }
  }

  const RvvProgram& program_;
  const VlenConfig& cfg_;
  std::span<std::byte> memory_;
  std::ostream* trace_;
  std::vector<SlotValue> slots_;
  ExecStats stats_;
};

}  // namespace

std::string_view opcode_mnemonic(RvvOpcode op) {
  return kMnemonics[static_cast<size_t>(op)];
}

bool opcode_writes_mask(RvvOpcode op) {
  switch (op) {
    case RvvOpcode::VmseqVV:
    case RvvOpcode::VmsgtVV:
    case RvvOpcode::VmsgtuVV:
    case RvvOpcode::VmsgeVV:
    case RvvOpcode::VmsgeuVV:
    case RvvOpcode::VmsltVV:
    case RvvOpcode::VmsltuVV:
    case RvvOpcode::VmsleVV:
    case RvvOpcode::VmsleuVV:
    case RvvOpcode::VmfeqVV:
    case RvvOpcode::VmfneVV:
    case RvvOpcode::VmfgtVV:
    case RvvOpcode::VmfgeVV:
    case RvvOpcode::VmfltVV:
    case RvvOpcode::VmfleVV:
      return true;
    default:
      return false;
  }
}

uint64_t tail_canary(unsigned sew) {
  uint64_t v = 0;
  for (unsigned b = 0; b < sew / 8; ++b) {
    v |= static_cast<uint64_t>(kTailCanaryByte) << (8 * b);
  }
  return v;
}

ExecResult exec(const RvvProgram& program, const VlenConfig& cfg,
                std::span<std::byte> memory, std::ostream* trace) {
  if (!cfg.valid()) {
    throw ExecError(ExecError::Kind::TypeMismatch, "invalid vlen configuration");
  }
  Executor ex(program, cfg, memory, trace);
  return ex.run();
}

}  // namespace neon2rvv

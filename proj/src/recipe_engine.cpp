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

#include "neon2rvv/recipe_engine.hpp"

#include <algorithm>
#include <cstdlib>

namespace neon2rvv {

namespace {

[[noreturn]] void fail(RecipeError::Kind kind, const std::string& msg) {
  throw RecipeError(kind, msg);
}

// Bit-reverse cascade stages for 8-bit lanes: swap strides 1, 2, 4.
struct RbitStage {
  unsigned shift;
  uint64_t mask;
};
constexpr RbitStage kRbitStages[3] = {{1, 0x55}, {2, 0x33}, {4, 0x0F}};

RecipeTier customized_tier(NeonFamily family, ElemClass cls) {
  switch (family) {
    case NeonFamily::Ld1:
    case NeonFamily::St1:
    case NeonFamily::Add:
    case NeonFamily::Sub:
    case NeonFamily::Mul:
    case NeonFamily::Neg:
    case NeonFamily::And:
    case NeonFamily::Orr:
    case NeonFamily::Eor:
    case NeonFamily::Mvn:
    case NeonFamily::ShlN:
    case NeonFamily::ShrN:
    case NeonFamily::GetLow:
    case NeonFamily::DupN:
      return RecipeTier::Direct;
    case NeonFamily::Min:
    case NeonFamily::Max:
      return cls == ElemClass::Float ? RecipeTier::Composite : RecipeTier::Direct;
    default:
      return RecipeTier::Composite;
  }
}

ConversionMethod customized_method(NeonFamily family, ElemClass cls) {
  switch (family) {
    case NeonFamily::Ld1:
    case NeonFamily::St1:
    case NeonFamily::GetLow:
    case NeonFamily::DupN:
      return ConversionMethod::TargetIntrinsic;
    case NeonFamily::Add:
    case NeonFamily::Sub:
    case NeonFamily::Mul:
    case NeonFamily::Neg:
    case NeonFamily::And:
    case NeonFamily::Orr:
    case NeonFamily::Eor:
    case NeonFamily::Mvn:
    case NeonFamily::Bic:
    case NeonFamily::ShlN:
    case NeonFamily::ShrN:
      return ConversionMethod::VectorExtension;
    case NeonFamily::Min:
    case NeonFamily::Max:
      return cls == ElemClass::Float ? ConversionMethod::Combination
                                     : ConversionMethod::VectorExtension;
    default:
      return ConversionMethod::Combination;
  }
}

// Small straight-line SSA assembler.
class ProgramBuilder {
 public:
  int slot(SlotKind kind, std::string name) {
    prog_.slots.push_back(SlotDecl{kind, std::move(name)});
    return static_cast<int>(prog_.slots.size()) - 1;
  }

  int input_vec(std::string name, VectorValue v) {
    int s = slot(SlotKind::Vector, name);
    prog_.inputs.push_back({s, std::move(name), std::move(v)});
    return s;
  }

  int input_scalar(std::string name, uint64_t v) {
    int s = slot(SlotKind::Scalar, name);
    prog_.inputs.push_back({s, std::move(name), v});
    return s;
  }

  int emit(RvvOpcode opcode, unsigned sew, ElemClass cls, unsigned vl,
           std::vector<RvvOperand> srcs, SlotKind dest_kind,
           std::string dest_name) {
    int d = slot(dest_kind, std::move(dest_name));
    prog_.ops.push_back(RvvOp{opcode, sew, cls, vl, std::move(srcs), d, nullptr});
    return d;
  }

  void emit_void(RvvOpcode opcode, unsigned sew, ElemClass cls, unsigned vl,
                 std::vector<RvvOperand> srcs) {
    prog_.ops.push_back(RvvOp{opcode, sew, cls, vl, std::move(srcs), -1, nullptr});
  }

  RvvProgram take(int output_slot, unsigned output_lanes, ElementType elem) {
    prog_.output_slot = output_slot;
    prog_.output_lanes = output_lanes;
    prog_.output_elem = elem;
    return std::move(prog_);
  }

 private:
  RvvProgram prog_;
};

RvvOpcode binary_opcode(NeonFamily family, ElemClass cls) {
  bool f = cls == ElemClass::Float;
  switch (family) {
    case NeonFamily::Add:
      return f ? RvvOpcode::VfaddVV : RvvOpcode::VaddVV;
    case NeonFamily::Sub:
      return f ? RvvOpcode::VfsubVV : RvvOpcode::VsubVV;
    case NeonFamily::Mul:
      return f ? RvvOpcode::VfmulVV : RvvOpcode::VmulVV;
    case NeonFamily::Min:
      return cls == ElemClass::SignedInt ? RvvOpcode::VminVV : RvvOpcode::VminuVV;
    case NeonFamily::Max:
      return cls == ElemClass::SignedInt ? RvvOpcode::VmaxVV : RvvOpcode::VmaxuVV;
    case NeonFamily::And:
      return RvvOpcode::VandVV;
    case NeonFamily::Orr:
      return RvvOpcode::VorVV;
    case NeonFamily::Eor:
      return RvvOpcode::VxorVV;
    default:
      fail(RecipeError::Kind::Unsupported, "no binary opcode");
  }
}

RvvOpcode compare_opcode(NeonFamily family, ElemClass cls) {
  bool s = cls == ElemClass::SignedInt;
  bool f = cls == ElemClass::Float;
  switch (family) {
    case NeonFamily::Ceq:
      return f ? RvvOpcode::VmfeqVV : RvvOpcode::VmseqVV;
    case NeonFamily::Cgt:
      return f ? RvvOpcode::VmfgtVV
               : (s ? RvvOpcode::VmsgtVV : RvvOpcode::VmsgtuVV);
    case NeonFamily::Cge:
      return f ? RvvOpcode::VmfgeVV
               : (s ? RvvOpcode::VmsgeVV : RvvOpcode::VmsgeuVV);
    case NeonFamily::Clt:
      return f ? RvvOpcode::VmfltVV
               : (s ? RvvOpcode::VmsltVV : RvvOpcode::VmsltuVV);
    case NeonFamily::Cle:
      return f ? RvvOpcode::VmfleVV
               : (s ? RvvOpcode::VmsleVV : RvvOpcode::VmsleuVV);
    default:
      fail(RecipeError::Kind::Unsupported, "no compare opcode");
  }
}

void check_bindings(NeonIntrinsicId id, const NeonSignature& sig,
                    const Bindings& b) {
  if (b.vectors.size() != sig.vec_args.size()) {
    fail(RecipeError::Kind::BindingMismatch,
         id.name() + ": expected " + std::to_string(sig.vec_args.size()) +
             " vector bindings, got " + std::to_string(b.vectors.size()));
  }
  for (size_t i = 0; i < sig.vec_args.size(); ++i) {
    if (b.vectors[i].elem() != sig.vec_args[i].elem ||
        b.vectors[i].lanes() != sig.vec_args[i].lanes) {
      fail(RecipeError::Kind::BindingMismatch,
           id.name() + ": vector binding " + std::to_string(i) +
               " does not match " + sig.vec_args[i].name());
    }
  }
  if (sig.scalar_arg && !b.scalar) {
    fail(RecipeError::Kind::BindingMismatch, id.name() + ": missing scalar");
  }
  if (sig.imm) {
    if (!b.imm) {
      fail(RecipeError::Kind::BindingMismatch, id.name() + ": missing immediate");
    }
    if (!sig.imm->contains(*b.imm)) {
      fail(RecipeError::Kind::BindingMismatch,
           id.name() + ": immediate " + std::to_string(*b.imm) +
               " outside [" + std::to_string(sig.imm->lo) + ", " +
               std::to_string(sig.imm->hi) + "]");
    }
  }
  if (sig.memory && !b.addr) {
    fail(RecipeError::Kind::BindingMismatch, id.name() + ": missing address");
  }
}

RvvProgram build_customized(NeonIntrinsicId id, const Bindings& bind) {
  NeonSignature sig = signature(id);
  check_bindings(id, sig, bind);
  unsigned sew = bit_width(id.elem);
  ElemClass cls = elem_class(id.elem);
  unsigned lanes = intrinsic_lanes(id);
  ProgramBuilder b;

  switch (sig.kind) {
    case SigKind::Load: {
      int addr = b.input_scalar("addr", *bind.addr);
      int r = b.emit(RvvOpcode::Vle, sew, cls, lanes, {RvvOperand::S(addr)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, id.elem);
    }
    case SigKind::Store: {
      int addr = b.input_scalar("addr", *bind.addr);
      int v = b.input_vec("v", bind.vectors[0]);
      b.emit_void(RvvOpcode::Vse, sew, cls, lanes,
                  {RvvOperand::S(addr), RvvOperand::S(v)});
      return b.take(-1, 0, id.elem);
    }
    case SigKind::Binary: {
      int a = b.input_vec("a", bind.vectors[0]);
      int v = b.input_vec("b", bind.vectors[1]);
      if ((id.family == NeonFamily::Min || id.family == NeonFamily::Max) &&
          cls == ElemClass::Float) {
        // RVV vfmin/vfmax return the non-NaN operand for a single NaN input;
        // NEON propagates the NaN. Repair with two mask/merge steps.
        RvvOpcode mm = id.family == NeonFamily::Min ? RvvOpcode::VfminVV
                                                    : RvvOpcode::VfmaxVV;
        int r0 = b.emit(mm, sew, cls, lanes,
                        {RvvOperand::S(a), RvvOperand::S(v)}, SlotKind::Vector,
                        "r0");
        int ma = b.emit(RvvOpcode::VmfneVV, sew, cls, lanes,
                        {RvvOperand::S(a), RvvOperand::S(a)}, SlotKind::Mask,
                        "a_nan");
        int r1 = b.emit(RvvOpcode::VmergeVVM, sew, cls, lanes,
                        {RvvOperand::S(r0), RvvOperand::S(a), RvvOperand::S(ma)},
                        SlotKind::Vector, "r1");
        int mb = b.emit(RvvOpcode::VmfneVV, sew, cls, lanes,
                        {RvvOperand::S(v), RvvOperand::S(v)}, SlotKind::Mask,
                        "b_nan");
        int r2 = b.emit(RvvOpcode::VmergeVVM, sew, cls, lanes,
                        {RvvOperand::S(r1), RvvOperand::S(v), RvvOperand::S(mb)},
                        SlotKind::Vector, "r2");
        return b.take(r2, lanes, id.elem);
      }
      if (id.family == NeonFamily::Bic) {
        int t = b.emit(RvvOpcode::Vnot, sew, cls, lanes, {RvvOperand::S(v)},
                       SlotKind::Vector, "t");
        int r = b.emit(RvvOpcode::VandVV, sew, cls, lanes,
                       {RvvOperand::S(a), RvvOperand::S(t)}, SlotKind::Vector,
                       "r");
        return b.take(r, lanes, id.elem);
      }
      int r = b.emit(binary_opcode(id.family, cls), sew, cls, lanes,
                     {RvvOperand::S(a), RvvOperand::S(v)}, SlotKind::Vector,
                     "r");
      return b.take(r, lanes, id.elem);
    }
    case SigKind::Unary: {
      int a = b.input_vec("a", bind.vectors[0]);
      if (id.family == NeonFamily::Rbit) {
        // ((v >> k) & m) | ((v & m) << k) for k in {1, 2, 4}.
        int cur = a;
        for (const RbitStage& st : kRbitStages) {
          int t1 = b.emit(RvvOpcode::VsrlVX, sew, ElemClass::UnsignedInt, lanes,
                          {RvvOperand::S(cur), RvvOperand::I(st.shift)},
                          SlotKind::Vector, "t1");
          int t2 = b.emit(RvvOpcode::VandVX, sew, ElemClass::UnsignedInt, lanes,
                          {RvvOperand::S(t1), RvvOperand::I(st.mask)},
                          SlotKind::Vector, "t2");
          int t3 = b.emit(RvvOpcode::VandVX, sew, ElemClass::UnsignedInt, lanes,
                          {RvvOperand::S(cur), RvvOperand::I(st.mask)},
                          SlotKind::Vector, "t3");
          int t4 = b.emit(RvvOpcode::VsllVX, sew, ElemClass::UnsignedInt, lanes,
                          {RvvOperand::S(t3), RvvOperand::I(st.shift)},
                          SlotKind::Vector, "t4");
          cur = b.emit(RvvOpcode::VorVV, sew, ElemClass::UnsignedInt, lanes,
                       {RvvOperand::S(t2), RvvOperand::S(t4)}, SlotKind::Vector,
                       "s");
        }
        return b.take(cur, lanes, id.elem);
      }
      RvvOpcode opc = id.family == NeonFamily::Mvn
                          ? RvvOpcode::Vnot
                          : (cls == ElemClass::Float ? RvvOpcode::Vfneg
                                                     : RvvOpcode::Vneg);
      int r = b.emit(opc, sew, cls, lanes, {RvvOperand::S(a)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, id.elem);
    }
    case SigKind::Compare: {
      int a = b.input_vec("a", bind.vectors[0]);
      int v = b.input_vec("b", bind.vectors[1]);
      int z = b.emit(RvvOpcode::VmvVX, sew, ElemClass::UnsignedInt, lanes,
                     {RvvOperand::I(0)}, SlotKind::Vector, "vs_0");
      int m = b.emit(compare_opcode(id.family, cls), sew, cls, lanes,
                     {RvvOperand::S(a), RvvOperand::S(v)}, SlotKind::Mask,
                     "mask");
      int r = b.emit(RvvOpcode::VmergeVXM, sew, ElemClass::UnsignedInt, lanes,
                     {RvvOperand::S(z), RvvOperand::I(lane_mask(sew)),
                      RvvOperand::S(m)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, unsigned_counterpart(id.elem));
    }
    case SigKind::ShiftImm: {
      int a = b.input_vec("a", bind.vectors[0]);
      unsigned n = static_cast<unsigned>(*bind.imm);
      int r;
      if (id.family == NeonFamily::ShlN) {
        r = b.emit(RvvOpcode::VsllVX, sew, cls, lanes,
                   {RvvOperand::S(a), RvvOperand::I(n)}, SlotKind::Vector, "r");
      } else if (cls == ElemClass::SignedInt) {
        // NEON permits shifting by the full width; RVV shifts mod SEW. An
        // arithmetic shift by sew is the same as by sew - 1.
        r = b.emit(RvvOpcode::VsraVX, sew, cls, lanes,
                   {RvvOperand::S(a), RvvOperand::I(std::min(n, sew - 1))},
                   SlotKind::Vector, "r");
      } else if (n == sew) {
        r = b.emit(RvvOpcode::VmvVX, sew, cls, lanes, {RvvOperand::I(0)},
                   SlotKind::Vector, "r");
      } else {
        r = b.emit(RvvOpcode::VsrlVX, sew, cls, lanes,
                   {RvvOperand::S(a), RvvOperand::I(n)}, SlotKind::Vector, "r");
      }
      return b.take(r, lanes, id.elem);
    }
    case SigKind::GetHalf: {
      int a = b.input_vec("a", bind.vectors[0]);
      unsigned half = lanes / 2;
      if (id.family == NeonFamily::GetHigh) {
        int r = b.emit(RvvOpcode::VslidedownVX, sew, cls, lanes,
                       {RvvOperand::S(a), RvvOperand::I(half)},
                       SlotKind::Vector, "r");
        return b.take(r, half, id.elem);
      }
      int r = b.emit(RvvOpcode::VmvVV, sew, cls, half, {RvvOperand::S(a)},
                     SlotKind::Vector, "r");
      return b.take(r, half, id.elem);
    }
    case SigKind::CombineHalves: {
      int lo = b.input_vec("low", bind.vectors[0]);
      int hi = b.input_vec("high", bind.vectors[1]);
      int r = b.emit(RvvOpcode::VslideupVX, sew, cls, lanes,
                     {RvvOperand::S(lo), RvvOperand::S(hi),
                      RvvOperand::I(lanes / 2)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, id.elem);
    }
    case SigKind::DupN: {
      int x = b.input_scalar("x", *bind.scalar);
      int r = b.emit(RvvOpcode::VmvVX, sew, cls, lanes, {RvvOperand::S(x)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, id.elem);
    }
    case SigKind::GetLane: {
      int a = b.input_vec("v", bind.vectors[0]);
      uint64_t lane = static_cast<uint64_t>(*bind.imm);
      int src = a;
      if (lane != 0) {
        src = b.emit(RvvOpcode::VslidedownVX, sew, cls, lanes,
                     {RvvOperand::S(a), RvvOperand::I(lane)}, SlotKind::Vector,
                     "t");
      }
      int s = b.emit(RvvOpcode::VmvXS, sew, cls, 1, {RvvOperand::S(src)},
                     SlotKind::Scalar, "r");
      return b.take(s, 0, id.elem);
    }
    case SigKind::SetLane: {
      int v = b.input_vec("v", bind.vectors[0]);
      int x = b.input_scalar("x", *bind.scalar);
      unsigned lane = static_cast<unsigned>(*bind.imm);
      int t = b.emit(RvvOpcode::VmvVX, sew, cls, 1, {RvvOperand::S(x)},
                     SlotKind::Vector, "t");
      int r = b.emit(RvvOpcode::VslideupVX, sew, cls, lane + 1,
                     {RvvOperand::S(v), RvvOperand::S(t), RvvOperand::I(lane)},
                     SlotKind::Vector, "r");
      return b.take(r, lanes, id.elem);
    }
  }
  fail(RecipeError::Kind::Unsupported, id.name());
}

RvvProgram build_fallback(NeonIntrinsicId id, const VlenConfig& cfg,
                          const Bindings& bind) {
  NeonSignature sig = signature(id);
  check_bindings(id, sig, bind);
  ProgramBuilder b;

  int out = -1;
  unsigned out_lanes = 0;
  ElementType out_elem = id.elem;
  if (sig.result_vec) {
    out = b.slot(SlotKind::Vector, "r");
    out_lanes = sig.result_vec->lanes;
    out_elem = sig.result_vec->elem;
  } else if (sig.result_scalar) {
    out = b.slot(SlotKind::Scalar, "r");
  }

  auto emul = std::make_shared<ScalarEmul>();
  emul->charge = fallback_charge(id);
  emul->label = id.name();
  EvalArgs eargs{bind.vectors, bind.scalar, bind.imm, bind.addr};
  unsigned out_width = bit_width(out_elem);
  ElemClass out_cls = elem_class(out_elem);
  // The result container mimics a register image but is not bound by vlmax:
  // fallback results conceptually live in memory.
  unsigned capacity = std::max(out_lanes, cfg.vlmax(out_width));
  emul->run = [id, eargs, out, out_lanes, out_elem, out_width, out_cls,
               capacity](const RvvProgram&, std::vector<SlotValue>& slots,
                         std::span<std::byte> memory) {
    EvalOutput o = eval_neon(id, eargs, memory);
    if (out < 0) return;
    if (o.vec) {
      RegValue reg;
      reg.sew = out_width;
      reg.cls = out_cls;
      reg.lanes.assign(capacity, tail_canary(out_width));
      for (unsigned i = 0; i < o.vec->lanes(); ++i) {
        reg.lanes[i] = o.vec->lane(i);
      }
      slots[out] = std::move(reg);
    } else if (o.scalar) {
      slots[out] = *o.scalar;
    }
  };

  RvvOp op;
  op.opcode = RvvOpcode::ScalarEmul;
  op.sew = bit_width(id.elem);
  op.cls = elem_class(id.elem);
  op.vl = intrinsic_lanes(id);
  op.dest = out;
  op.emul = std::move(emul);
  RvvProgram prog = b.take(out, out_lanes, out_elem);
  prog.ops.push_back(std::move(op));
  return prog;
}

Bindings representative_bindings(NeonIntrinsicId id) {
  NeonSignature sig = signature(id);
  Bindings b;
  for (const NeonVectorType& t : sig.vec_args) {
    b.vectors.push_back(VectorValue::zeros(t.elem, t.lanes));
  }
  if (sig.scalar_arg) b.scalar = 0;
  if (sig.imm) {
    // Shifts use 1 (the general single-op shape); lane immediates use the
    // highest lane so the slide steps are visible.
    b.imm = sig.kind == SigKind::ShiftImm ? int64_t{1} : sig.imm->hi;
  }
  if (sig.memory) b.addr = 0;
  return b;
}

}  // namespace

std::string_view tier_name(RecipeTier t) {
  switch (t) {
    case RecipeTier::Direct:
      return "direct";
    case RecipeTier::Composite:
      return "composite";
    case RecipeTier::ElementwiseFallback:
      return "fallback";
    case RecipeTier::Unsupported:
      return "unsupported";
  }
  return "";
}

Recipe customized_recipe(NeonIntrinsicId id) {
  if (!in_catalog(id)) {
    fail(RecipeError::Kind::UnknownIntrinsic,
         "unknown intrinsic: " + id.name());
  }
  NeonSignature sig = signature(id);
  Recipe r;
  r.id = id;
  r.tier = customized_tier(id.family, elem_class(id.elem));
  r.method = customized_method(id.family, elem_class(id.elem));
  r.min_vlen_bits = 0;
  r.requires_zvfh = false;
  for (const NeonVectorType& t : sig.all_types()) {
    r.min_vlen_bits = std::max(r.min_vlen_bits, t.total_bits());
    if (t.elem == ElementType::F16) r.requires_zvfh = true;
  }
  return r;
}

Recipe fallback_recipe(NeonIntrinsicId id) {
  Recipe r = customized_recipe(id);
  r.tier = RecipeTier::ElementwiseFallback;
  r.method = ConversionMethod::ScalarLoop;
  return r;
}

Recipe lookup_recipe(NeonIntrinsicId id, const VlenConfig& cfg) {
  Recipe customized = customized_recipe(id);
  NeonSignature sig = signature(id);
  bool all_mapped = true;
  for (const NeonVectorType& t : sig.all_types()) {
    if (!map_type(t, cfg).mapped()) {
      all_mapped = false;
      break;
    }
  }
  return all_mapped ? customized : fallback_recipe(id);
}

RvvProgram instantiate(const Recipe& recipe, const VlenConfig& cfg,
                       const Bindings& bindings) {
  switch (recipe.tier) {
    case RecipeTier::Direct:
    case RecipeTier::Composite:
      return build_customized(recipe.id, bindings);
    case RecipeTier::ElementwiseFallback:
      return build_fallback(recipe.id, cfg, bindings);
    case RecipeTier::Unsupported:
      break;
  }
  fail(RecipeError::Kind::Unsupported,
       "no executable recipe for " + recipe.id.name());
}

uint64_t fallback_charge(NeonIntrinsicId id) {
  NeonSignature sig = signature(id);
  uint64_t input_lanes = 0;
  for (const NeonVectorType& t : sig.vec_args) input_lanes += t.lanes;
  uint64_t steps = 1;
  if (id.family == NeonFamily::Rbit) steps = 3;
  if ((id.family == NeonFamily::Min || id.family == NeonFamily::Max) &&
      elem_class(id.elem) == ElemClass::Float) {
    steps = 3;
  }
  uint64_t loop_lanes;
  switch (sig.kind) {
    case SigKind::Store:
      loop_lanes = sig.vec_args[0].lanes;
      break;
    case SigKind::GetLane:
      loop_lanes = 1;
      break;
    default:
      loop_lanes = sig.result_vec ? sig.result_vec->lanes : 1;
      break;
  }
  return input_lanes + steps * loop_lanes;
}

std::vector<std::string> recipe_opcodes(const Recipe& recipe,
                                        const VlenConfig& cfg) {
  RvvProgram prog = instantiate(recipe, cfg, representative_bindings(recipe.id));
  std::vector<std::string> out;
  out.reserve(prog.ops.size());
  for (const RvvOp& op : prog.ops) {
    out.emplace_back(opcode_mnemonic(op.opcode));
  }
  return out;
}

namespace {

std::string type_suffix(unsigned sew, ElemClass cls) {
  const char* t = cls == ElemClass::SignedInt
                      ? "i"
                      : (cls == ElemClass::UnsignedInt ? "u" : "f");
  return std::string(t) + std::to_string(sew) + "m1";
}

std::string scalar_suffix(unsigned sew, ElemClass cls) {
  const char* t = cls == ElemClass::SignedInt
                      ? "i"
                      : (cls == ElemClass::UnsignedInt ? "u" : "f");
  return std::string(t) + std::to_string(sew);
}

}  // namespace

std::string rvv_intrinsic_name(RvvOpcode op, unsigned sew, ElemClass cls) {
  std::string sfx = type_suffix(sew, cls);
  std::string name;
  switch (op) {
    case RvvOpcode::Vle:
      name = "vle" + std::to_string(sew) + "_v_" + sfx;
      break;
    case RvvOpcode::Vse:
      name = "vse" + std::to_string(sew) + "_v_" + sfx;
      break;
    case RvvOpcode::VmvVX:
      name = cls == ElemClass::Float ? "vfmv_v_f_" + sfx : "vmv_v_x_" + sfx;
      break;
    case RvvOpcode::VmvXS:
      name = cls == ElemClass::Float
                 ? "vfmv_f_s_" + sfx + "_" + scalar_suffix(sew, cls)
                 : "vmv_x_s_" + sfx + "_" + scalar_suffix(sew, cls);
      break;
    case RvvOpcode::Vneg:
    case RvvOpcode::Vnot:
    case RvvOpcode::Vfneg:
      name = std::string(opcode_mnemonic(op)) + "_v_" + sfx;
      break;
    default:
      name = std::string(opcode_mnemonic(op)) + "_" + sfx;
      if (opcode_writes_mask(op)) name += "_b" + std::to_string(sew);
      break;
  }
  return "__riscv_" + name;
}

namespace {

std::string mask_type_name(unsigned sew) {
  return "vbool" + std::to_string(sew) + "_t";
}

// Fixed-size typedef name for a mapped type, or the NEON spelling for the
// struct emitted by the permissive fallback path.
std::string repr_type(NeonVectorType t, const VlenConfig& cfg) {
  MappingResult m = map_type(t, cfg);
  return m.mapped() ? m.rvv->fixed_name() : t.name();
}

bool repr_is_struct(NeonVectorType t, const VlenConfig& cfg) {
  return !map_type(t, cfg).mapped();
}

std::string acc(bool is_struct, const std::string& var, const std::string& idx) {
  return is_struct ? var + ".values[" + idx + "]" : var + "[" + idx + "]";
}

// Scalar spelling used by fallback helpers: opaque bits for f16 so the
// struct representation needs no fp16 arithmetic support.
std::string fallback_scalar_type(ElementType e, bool f16_mapped) {
  if (e == ElementType::F16 && !f16_mapped) return "uint16_t";
  return std::string(scalar_c_name(e));
}

std::optional<int64_t> parse_int_literal(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  long long v = strtoll(s.c_str(), &end, 0);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return v;
}

std::string vl_text(unsigned vl) { return std::to_string(vl); }

std::string call(const std::string& fn, std::initializer_list<std::string> a) {
  std::string out = fn + "(";
  bool first = true;
  for (const std::string& s : a) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  out += ")";
  return out;
}

std::string all_ones_text(ElementType elem) {
  return "(" + std::string(scalar_c_name(unsigned_counterpart(elem))) + ")-1";
}

std::string render_direct(NeonIntrinsicId id, std::span<const std::string> args) {
  unsigned sew = bit_width(id.elem);
  ElemClass cls = elem_class(id.elem);
  unsigned lanes = intrinsic_lanes(id);
  std::string vl = vl_text(lanes);

  switch (id.family) {
    case NeonFamily::Ld1:
      return call(rvv_intrinsic_name(RvvOpcode::Vle, sew, cls), {args[0], vl});
    case NeonFamily::St1:
      return call(rvv_intrinsic_name(RvvOpcode::Vse, sew, cls),
                  {args[0], args[1], vl});
    case NeonFamily::Add:
    case NeonFamily::Sub:
    case NeonFamily::Mul:
    case NeonFamily::Min:
    case NeonFamily::Max:
    case NeonFamily::And:
    case NeonFamily::Orr:
    case NeonFamily::Eor:
      return call(rvv_intrinsic_name(binary_opcode(id.family, cls), sew, cls),
                  {args[0], args[1], vl});
    case NeonFamily::Neg:
      return call(rvv_intrinsic_name(cls == ElemClass::Float ? RvvOpcode::Vfneg
                                                             : RvvOpcode::Vneg,
                                     sew, cls),
                  {args[0], vl});
    case NeonFamily::Mvn:
      return call(rvv_intrinsic_name(RvvOpcode::Vnot, sew, cls), {args[0], vl});
    case NeonFamily::GetLow:
      return call(rvv_intrinsic_name(RvvOpcode::VmvVV, sew, cls),
                  {args[0], vl_text(lanes / 2)});
    case NeonFamily::DupN:
      return call(rvv_intrinsic_name(RvvOpcode::VmvVX, sew, cls),
                  {args[0], vl});
    case NeonFamily::ShlN:
      return call(rvv_intrinsic_name(RvvOpcode::VsllVX, sew, cls),
                  {args[0], args[1], vl});
    case NeonFamily::ShrN: {
      auto lit = parse_int_literal(args[1]);
      if (cls == ElemClass::SignedInt) {
        std::string name = rvv_intrinsic_name(RvvOpcode::VsraVX, sew, cls);
        if (lit) {
          unsigned n = std::min<unsigned>(static_cast<unsigned>(*lit), sew - 1);
          return call(name, {args[0], std::to_string(n), vl});
        }
        return call(name,
                    {args[0],
                     "((" + args[1] + ") < " + std::to_string(sew) +
                         " ? (size_t)(" + args[1] + ") : " +
                         std::to_string(sew - 1) + ")",
                     vl});
      }
      std::string srl =
          call(rvv_intrinsic_name(RvvOpcode::VsrlVX, sew, cls),
               {args[0], args[1], vl});
      std::string zero =
          call(rvv_intrinsic_name(RvvOpcode::VmvVX, sew, cls), {"0", vl});
      if (lit) {
        return static_cast<unsigned>(*lit) >= sew ? zero : srl;
      }
      return "((" + args[1] + ") >= " + std::to_string(sew) + " ? " + zero +
             " : " + srl + ")";
    }
    default:
      fail(RecipeError::Kind::Unsupported, "not a direct recipe: " + id.name());
  }
}

std::string helper_name(NeonIntrinsicId id) { return "n2r_" + id.name(); }

// Composite helpers mirror the recipe programs op for op.
HelperDef composite_helper(NeonIntrinsicId id, const VlenConfig& cfg) {
  unsigned sew = bit_width(id.elem);
  ElemClass cls = elem_class(id.elem);
  unsigned lanes = intrinsic_lanes(id);
  std::string vl = vl_text(lanes);
  NeonSignature sig = signature(id);
  std::string name = helper_name(id);
  std::string def;
  auto vec_param = [&](size_t i) { return repr_type(sig.vec_args[i], cfg); };

  switch (sig.kind) {
    case SigKind::Compare: {
      std::string ret = repr_type(*sig.result_vec, cfg);
      // Mirror the three-op program: zero splat, compare to a mask, merge.
      def = "static inline " + ret + " " + name + "(" + vec_param(0) + " a, " +
            vec_param(1) + " b) {\n";
      def += "  vuint" + std::to_string(sew) + "m1_t vs_0 = " +
             call(rvv_intrinsic_name(RvvOpcode::VmvVX, sew,
                                     ElemClass::UnsignedInt),
                  {"0", vl}) +
             ";\n";
      def += "  " + mask_type_name(sew) + " mask = " +
             call(rvv_intrinsic_name(compare_opcode(id.family, cls), sew, cls),
                  {"a", "b", vl}) +
             ";\n";
      def += "  return " +
             call(rvv_intrinsic_name(RvvOpcode::VmergeVXM, sew,
                                     ElemClass::UnsignedInt),
                  {"vs_0", all_ones_text(id.elem), "mask", vl}) +
             ";\n}\n";
      break;
    }
    case SigKind::GetHalf: {
      std::string ret = repr_type(*sig.result_vec, cfg);
      def = "static inline " + ret + " " + name + "(" + vec_param(0) +
            " a) {\n  return " +
            call(rvv_intrinsic_name(RvvOpcode::VslidedownVX, sew, cls),
                 {"a", std::to_string(lanes / 2), vl}) +
            ";\n}\n";
      break;
    }
    case SigKind::CombineHalves: {
      std::string ret = repr_type(*sig.result_vec, cfg);
      def = "static inline " + ret + " " + name + "(" + vec_param(0) +
            " low, " + vec_param(1) + " high) {\n  return " +
            call(rvv_intrinsic_name(RvvOpcode::VslideupVX, sew, cls),
                 {"low", "high", std::to_string(lanes / 2), vl}) +
            ";\n}\n";
      break;
    }
    case SigKind::GetLane: {
      std::string ret(scalar_c_name(id.elem));
      std::string extract = rvv_intrinsic_name(RvvOpcode::VmvXS, sew, cls);
      def = "static inline " + ret + " " + name + "(" + vec_param(0) +
            " v, int lane) {\n";
      def += "  if (lane == 0) return " + extract + "(v);\n";
      def += "  return " + extract + "(" +
             call(rvv_intrinsic_name(RvvOpcode::VslidedownVX, sew, cls),
                  {"v", "(size_t)lane", vl}) +
             ");\n}\n";
      break;
    }
    case SigKind::SetLane: {
      std::string ret = repr_type(*sig.result_vec, cfg);
      std::string sc(scalar_c_name(id.elem));
      RvvVectorType rvv{sew, cls};
      def = "static inline " + ret + " " + name + "(" + sc + " x, " +
            vec_param(0) + " v, int lane) {\n";
      def += "  " + rvv.name() + " t = " +
             call(rvv_intrinsic_name(RvvOpcode::VmvVX, sew, cls), {"x", "1"}) +
             ";\n";
      def += "  return " +
             call(rvv_intrinsic_name(RvvOpcode::VslideupVX, sew, cls),
                  {"v", "t", "(size_t)lane", "(size_t)lane + 1"}) +
             ";\n}\n";
      break;
    }
    case SigKind::Binary: {
      std::string ret = repr_type(*sig.result_vec, cfg);
      if (id.family == NeonFamily::Bic) {
        def = "static inline " + ret + " " + name + "(" + vec_param(0) +
              " a, " + vec_param(1) + " b) {\n  return " +
              call(rvv_intrinsic_name(RvvOpcode::VandVV, sew, cls),
                   {"a",
                    call(rvv_intrinsic_name(RvvOpcode::Vnot, sew, cls),
                         {"b", vl}),
                    vl}) +
              ";\n}\n";
        break;
      }
      // Float min/max with the NEON NaN-propagation rule.
      RvvOpcode mm = id.family == NeonFamily::Min ? RvvOpcode::VfminVV
                                                  : RvvOpcode::VfmaxVV;
      RvvVectorType rvv{sew, cls};
      std::string ne = rvv_intrinsic_name(RvvOpcode::VmfneVV, sew, cls);
      std::string merge = rvv_intrinsic_name(RvvOpcode::VmergeVVM, sew, cls);
      def = "static inline " + ret + " " + name + "(" + vec_param(0) + " a, " +
            vec_param(1) + " b) {\n";
      def += "  " + rvv.name() + " r = " +
             call(rvv_intrinsic_name(mm, sew, cls), {"a", "b", vl}) + ";\n";
      def += "  r = " + merge + "(r, a, " + call(ne, {"a", "a", vl}) + ", " +
             vl + ");\n";
      def += "  r = " + merge + "(r, b, " + call(ne, {"b", "b", vl}) + ", " +
             vl + ");\n";
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::Unary: {
      // Bit reversal: three shift-and-combine stages on 8-bit lanes.
      std::string ret = repr_type(*sig.result_vec, cfg);
      bool is_signed = cls == ElemClass::SignedInt;
      std::string uv = "vuint8m1_t";
      std::string v_init =
          is_signed ? "__riscv_vreinterpret_v_i8m1_u8m1(a)" : std::string("a");
      def = "static inline " + ret + " " + name + "(" + vec_param(0) +
            " a) {\n";
      def += "  " + uv + " v = " + v_init + ";\n";
      for (const RbitStage& st : kRbitStages) {
        char mask_text[8];
        snprintf(mask_text, sizeof mask_text, "0x%02X",
                 static_cast<unsigned>(st.mask));
        std::string sh = std::to_string(st.shift);
        std::string srl =
            call(rvv_intrinsic_name(RvvOpcode::VsrlVX, 8,
                                    ElemClass::UnsignedInt),
                 {"v", sh, vl});
        std::string lo_m = call(rvv_intrinsic_name(RvvOpcode::VandVX, 8,
                                                   ElemClass::UnsignedInt),
                                {srl, mask_text, vl});
        std::string hi_m = call(rvv_intrinsic_name(RvvOpcode::VandVX, 8,
                                                   ElemClass::UnsignedInt),
                                {"v", mask_text, vl});
        std::string sll =
            call(rvv_intrinsic_name(RvvOpcode::VsllVX, 8,
                                    ElemClass::UnsignedInt),
                 {hi_m, sh, vl});
        def += "  v = " +
               call(rvv_intrinsic_name(RvvOpcode::VorVV, 8,
                                       ElemClass::UnsignedInt),
                    {lo_m, sll, vl}) +
               ";\n";
      }
      def += is_signed ? "  return __riscv_vreinterpret_v_u8m1_i8m1(v);\n}\n"
                       : "  return v;\n}\n";
      break;
    }
    default:
      fail(RecipeError::Kind::Unsupported,
           "no composite renderer for " + id.name());
  }
  return HelperDef{name, def};
}

// Scalar-loop helpers for sites whose types do not map under the target
// configuration. Unmapped operands use the emitted struct representation.
HelperDef fallback_helper(NeonIntrinsicId id, const VlenConfig& cfg) {
  NeonSignature sig = signature(id);
  unsigned width = bit_width(id.elem);
  ElemClass cls = elem_class(id.elem);
  std::string name = helper_name(id);
  bool f16_mapped =
      id.elem != ElementType::F16 ||
      map_type(neon_type_for_width(id.elem, false), cfg).mapped();
  std::string sc = fallback_scalar_type(id.elem, f16_mapped);
  std::string usc(scalar_c_name(
      elem_from_class(ElemClass::UnsignedInt, width).value_or(ElementType::U64)));

  auto vparam = [&](size_t i) { return repr_type(sig.vec_args[i], cfg); };
  auto vstruct = [&](size_t i) { return repr_is_struct(sig.vec_args[i], cfg); };
  bool rstruct = sig.result_vec && repr_is_struct(*sig.result_vec, cfg);
  std::string rtype = sig.result_vec ? repr_type(*sig.result_vec, cfg)
                                     : (sig.result_scalar ? sc : "void");

  std::string def;
  auto loop = [&](unsigned n, const std::string& body) {
    def += "  for (size_t i = 0; i < " + std::to_string(n) + "; ++i) " + body +
           "\n";
  };

  switch (sig.kind) {
    case SigKind::Load: {
      unsigned n = sig.result_vec->lanes;
      def = "static inline " + rtype + " " + name + "(const " + sc +
            " *p) {\n  " + rtype + " r;\n";
      loop(n, acc(rstruct, "r", "i") + " = p[i];");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::Store: {
      unsigned n = sig.vec_args[0].lanes;
      def = "static inline void " + name + "(" + sc + " *p, " + vparam(0) +
            " v) {\n";
      loop(n, "p[i] = " + acc(vstruct(0), "v", "i") + ";");
      def += "}\n";
      break;
    }
    case SigKind::Binary:
    case SigKind::Compare: {
      unsigned n = sig.result_vec->lanes;
      std::string a = acc(vstruct(0), "a", "i");
      std::string b = acc(vstruct(1), "b", "i");
      std::string expr;
      bool is_f = cls == ElemClass::Float;
      switch (id.family) {
        case NeonFamily::Add:
          expr = is_f ? a + " + " + b
                      : "(" + sc + ")((" + usc + ")" + a + " + (" + usc + ")" +
                            b + ")";
          break;
        case NeonFamily::Sub:
          expr = is_f ? a + " - " + b
                      : "(" + sc + ")((" + usc + ")" + a + " - (" + usc + ")" +
                            b + ")";
          break;
        case NeonFamily::Mul:
          expr = is_f ? a + " * " + b
                      : "(" + sc + ")((" + usc + ")" + a + " * (" + usc + ")" +
                            b + ")";
          break;
        case NeonFamily::Min:
        case NeonFamily::Max: {
          std::string rel = id.family == NeonFamily::Min ? " < " : " > ";
          if (is_f) {
            std::string zero_pick =
                id.family == NeonFamily::Min
                    ? "(__builtin_signbit(" + a + ") || __builtin_signbit(" +
                          b + "))"
                    : "(__builtin_signbit(" + a + ") && __builtin_signbit(" +
                          b + "))";
            expr = "(" + a + " != " + a + " || " + b + " != " + b + ") ? (" +
                   sc + ")NAN : ((" + a + " == 0 && " + b + " == 0) ? (" +
                   zero_pick + " ? (" + sc + ")-0.0 : (" + sc + ")0.0) : (" +
                   a + rel + b + " ? " + a + " : " + b + "))";
          } else {
            expr = a + rel + b + " ? " + a + " : " + b;
          }
          break;
        }
        case NeonFamily::And:
          expr = "(" + sc + ")(" + a + " & " + b + ")";
          break;
        case NeonFamily::Orr:
          expr = "(" + sc + ")(" + a + " | " + b + ")";
          break;
        case NeonFamily::Eor:
          expr = "(" + sc + ")(" + a + " ^ " + b + ")";
          break;
        case NeonFamily::Bic:
          expr = "(" + sc + ")(" + a + " & ~" + b + ")";
          break;
        case NeonFamily::Ceq:
        case NeonFamily::Cgt:
        case NeonFamily::Cge:
        case NeonFamily::Clt:
        case NeonFamily::Cle: {
          std::string rel = id.family == NeonFamily::Ceq
                                ? " == "
                                : id.family == NeonFamily::Cgt
                                      ? " > "
                                      : id.family == NeonFamily::Cge
                                            ? " >= "
                                            : id.family == NeonFamily::Clt
                                                  ? " < "
                                                  : " <= ";
          std::string ut(scalar_c_name(unsigned_counterpart(id.elem)));
          expr = a + rel + b + " ? (" + ut + ")-1 : 0";
          break;
        }
        default:
          fail(RecipeError::Kind::Unsupported, id.name());
      }
      def = "static inline " + rtype + " " + name + "(" + vparam(0) + " a, " +
            vparam(1) + " b) {\n  " + rtype + " r;\n";
      loop(n, acc(rstruct, "r", "i") + " = " + expr + ";");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::Unary: {
      unsigned n = sig.result_vec->lanes;
      std::string a = acc(vstruct(0), "a", "i");
      std::string body;
      if (id.family == NeonFamily::Rbit) {
        body = "{ uint8_t t = (uint8_t)" + a + ";";
        for (const RbitStage& st : kRbitStages) {
          char m[8];
          snprintf(m, sizeof m, "0x%02X", static_cast<unsigned>(st.mask));
          std::string sh = std::to_string(st.shift);
          body += " t = (uint8_t)(((t >> " + sh + ") & " + m + ") | ((t & " +
                  m + ") << " + sh + "));";
        }
        body += " " + acc(rstruct, "r", "i") + " = (" + sc + ")t; }";
      } else if (id.family == NeonFamily::Mvn) {
        body = acc(rstruct, "r", "i") + " = (" + sc + ")~" + a + ";";
      } else if (cls == ElemClass::Float) {
        body = acc(rstruct, "r", "i") + " = -" + a + ";";
      } else {
        body = acc(rstruct, "r", "i") + " = (" + sc + ")(0u - (" + usc + ")" +
               a + ");";
      }
      def = "static inline " + rtype + " " + name + "(" + vparam(0) +
            " a) {\n  " + rtype + " r;\n";
      loop(n, body);
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::ShiftImm: {
      unsigned n = sig.result_vec->lanes;
      std::string a = acc(vstruct(0), "a", "i");
      std::string w = std::to_string(width);
      std::string expr;
      if (id.family == NeonFamily::ShlN) {
        expr = "(" + sc + ")((" + usc + ")" + a + " << n)";
      } else if (cls == ElemClass::UnsignedInt) {
        expr = "(n >= " + w + ") ? 0 : (" + sc + ")(" + a + " >> n)";
      } else {
        expr = "(n >= " + w + ") ? (" + sc + ")(" + a + " < 0 ? -1 : 0) : (" +
               sc + ")(" + a + " >> n)";
      }
      def = "static inline " + rtype + " " + name + "(" + vparam(0) +
            " a, int n) {\n  " + rtype + " r;\n";
      loop(n, acc(rstruct, "r", "i") + " = " + expr + ";");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::GetHalf: {
      unsigned n = sig.result_vec->lanes;
      std::string base = id.family == NeonFamily::GetHigh
                             ? "i + " + std::to_string(n)
                             : "i";
      def = "static inline " + rtype + " " + name + "(" + vparam(0) +
            " a) {\n  " + rtype + " r;\n";
      loop(n, acc(rstruct, "r", "i") + " = " + acc(vstruct(0), "a", base) + ";");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::CombineHalves: {
      unsigned half = sig.vec_args[0].lanes;
      std::string h = std::to_string(half);
      def = "static inline " + rtype + " " + name + "(" + vparam(0) +
            " low, " + vparam(1) + " high) {\n  " + rtype + " r;\n";
      loop(half, acc(rstruct, "r", "i") + " = " + acc(vstruct(0), "low", "i") +
                     ";");
      loop(half, acc(rstruct, "r", "i + " + h) + " = " +
                     acc(vstruct(1), "high", "i") + ";");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::DupN: {
      unsigned n = sig.result_vec->lanes;
      def = "static inline " + rtype + " " + name + "(" + sc + " x) {\n  " +
            rtype + " r;\n";
      loop(n, acc(rstruct, "r", "i") + " = x;");
      def += "  return r;\n}\n";
      break;
    }
    case SigKind::GetLane: {
      def = "static inline " + rtype + " " + name + "(" + vparam(0) +
            " v, int lane) {\n  return " + acc(vstruct(0), "v", "lane") +
            ";\n}\n";
      break;
    }
    case SigKind::SetLane: {
      def = "static inline " + rtype + " " + name + "(" + sc + " x, " +
            vparam(0) + " v, int lane) {\n  " + rtype + " r = v;\n  " +
            acc(rstruct, "r", "lane") + " = x;\n  return r;\n}\n";
      break;
    }
  }
  return HelperDef{name, def};
}

}  // namespace

RenderedCall render_call(const Recipe& recipe, const VlenConfig& cfg,
                         std::span<const std::string> arg_texts) {
  NeonSignature sig = signature(recipe.id);
  size_t want = sig.vec_args.size() + (sig.scalar_arg ? 1 : 0) +
                (sig.imm ? 1 : 0) + (sig.memory ? 1 : 0);
  if (arg_texts.size() != want) {
    fail(RecipeError::Kind::BindingMismatch,
         recipe.id.name() + ": expected " + std::to_string(want) +
             " arguments, got " + std::to_string(arg_texts.size()));
  }

  RenderedCall out;
  switch (recipe.tier) {
    case RecipeTier::Direct:
      out.text = render_direct(recipe.id, arg_texts);
      return out;
    case RecipeTier::Composite:
      out.helper = composite_helper(recipe.id, cfg);
      break;
    case RecipeTier::ElementwiseFallback:
      out.helper = fallback_helper(recipe.id, cfg);
      break;
    case RecipeTier::Unsupported:
      fail(RecipeError::Kind::Unsupported,
           "cannot render " + recipe.id.name());
  }
  out.text = out.helper->name + "(";
  for (size_t i = 0; i < arg_texts.size(); ++i) {
    if (i) out.text += ", ";
    out.text += arg_texts[i];
  }
  out.text += ")";
  return out;
}

}  // namespace neon2rvv

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

#include "neon2rvv/neon_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace neon2rvv {

namespace {

constexpr uint16_t bit_of(ElementType e) {
  return static_cast<uint16_t>(1u << static_cast<unsigned>(e));
}

constexpr uint16_t kIntAll = 0x00FF;   // s8..s64, u8..u64
constexpr uint16_t kInt32Down = 0x0077;  // s8,s16,s32,u8,u16,u32
constexpr uint16_t kFloatArith = bit_of(ElementType::F32) | bit_of(ElementType::F64);
constexpr uint16_t kAllElems = 0x07FF;
constexpr uint16_t kSignedAndFloat =
    bit_of(ElementType::I8) | bit_of(ElementType::I16) |
    bit_of(ElementType::I32) | bit_of(ElementType::I64) | kFloatArith;

constexpr std::array<FamilyInfo, kNumNeonFamilies> kFamilies = {{
    {NeonFamily::Ld1, "ld1", SigKind::Load, kAllElems, true},
    {NeonFamily::St1, "st1", SigKind::Store, kAllElems, true},
    {NeonFamily::Add, "add", SigKind::Binary, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Sub, "sub", SigKind::Binary, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Mul, "mul", SigKind::Binary, static_cast<uint16_t>(kInt32Down | kFloatArith), true},
    {NeonFamily::Neg, "neg", SigKind::Unary, kSignedAndFloat, true},
    {NeonFamily::Min, "min", SigKind::Binary, static_cast<uint16_t>(kInt32Down | kFloatArith), true},
    {NeonFamily::Max, "max", SigKind::Binary, static_cast<uint16_t>(kInt32Down | kFloatArith), true},
    {NeonFamily::And, "and", SigKind::Binary, kIntAll, true},
    {NeonFamily::Orr, "orr", SigKind::Binary, kIntAll, true},
    {NeonFamily::Eor, "eor", SigKind::Binary, kIntAll, true},
    {NeonFamily::Mvn, "mvn", SigKind::Unary, kInt32Down, true},
    {NeonFamily::Bic, "bic", SigKind::Binary, kIntAll, true},
    {NeonFamily::ShlN, "shl_n", SigKind::ShiftImm, kIntAll, true},
    {NeonFamily::ShrN, "shr_n", SigKind::ShiftImm, kIntAll, true},
    {NeonFamily::Ceq, "ceq", SigKind::Compare, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Cgt, "cgt", SigKind::Compare, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Cge, "cge", SigKind::Compare, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Clt, "clt", SigKind::Compare, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::Cle, "cle", SigKind::Compare, static_cast<uint16_t>(kIntAll | kFloatArith), true},
    {NeonFamily::GetHigh, "get_high", SigKind::GetHalf, kAllElems, false},
    {NeonFamily::GetLow, "get_low", SigKind::GetHalf, kAllElems, false},
    {NeonFamily::Combine, "combine", SigKind::CombineHalves, kAllElems, false},
    {NeonFamily::DupN, "dup_n", SigKind::DupN, kAllElems, true},
    {NeonFamily::GetLane, "get_lane", SigKind::GetLane, kAllElems, true},
    {NeonFamily::SetLane, "set_lane", SigKind::SetLane, kAllElems, true},
    {NeonFamily::Rbit, "rbit", SigKind::Unary,
     static_cast<uint16_t>(bit_of(ElementType::I8) | bit_of(ElementType::U8)), true},
}};

// "shl_n" with q -> "vshlq_n"; "get_lane" with q -> "vgetq_lane".
std::string render_stem(std::string_view token, bool q) {
  std::string out = "v";
  size_t split = token.find('_');
  if (split == std::string_view::npos) split = token.size();
  out.append(token.substr(0, split));
  if (q) out += 'q';
  out.append(token.substr(split));
  return out;
}

[[noreturn]] void fail(EvalError::Kind kind, const std::string& msg) {
  throw EvalError(kind, msg);
}

uint64_t reverse_bits8(uint64_t v) {
  uint64_t r = 0;
  for (unsigned b = 0; b < 8; ++b) {
    r = (r << 1) | ((v >> b) & 1);
  }
  return r;
}

// NEON FMIN/FMAX: any NaN operand produces NaN; -0 orders below +0.
template <typename T>
T neon_fminmax(T a, T b, bool want_min) {
  if (std::isnan(a) || std::isnan(b)) {
    return std::numeric_limits<T>::quiet_NaN();
  }
  if (a == T{0} && b == T{0}) {
    bool aneg = std::signbit(a);
    bool bneg = std::signbit(b);
    if (want_min) return (aneg || bneg) ? T{-0.0} : T{0.0};
    return (aneg && bneg) ? T{-0.0} : T{0.0};
  }
  return want_min ? std::min(a, b) : std::max(a, b);
}

uint64_t float_binop(NeonFamily family, unsigned width, uint64_t a, uint64_t b) {
  auto apply = [&](auto fa, auto fb) -> decltype(fa) {
    switch (family) {
      case NeonFamily::Add:
        return fa + fb;
      case NeonFamily::Sub:
        return fa - fb;
      case NeonFamily::Mul:
        return fa * fb;
      case NeonFamily::Min:
        return neon_fminmax(fa, fb, true);
      case NeonFamily::Max:
        return neon_fminmax(fa, fb, false);
      default:
        return fa;
    }
  };
  if (width == 32) return f32_to_bits(apply(bits_to_f32(a), bits_to_f32(b)));
  return f64_to_bits(apply(bits_to_f64(a), bits_to_f64(b)));
}

// Ordered comparisons: any NaN operand compares false.
bool float_compare(NeonFamily family, unsigned width, uint64_t a, uint64_t b) {
  auto apply = [&](auto fa, auto fb) {
    switch (family) {
      case NeonFamily::Ceq:
        return fa == fb;
      case NeonFamily::Cgt:
        return fa > fb;
      case NeonFamily::Cge:
        return fa >= fb;
      case NeonFamily::Clt:
        return fa < fb;
      case NeonFamily::Cle:
        return fa <= fb;
      default:
        return false;
    }
  };
  if (width == 32) return apply(bits_to_f32(a), bits_to_f32(b));
  return apply(bits_to_f64(a), bits_to_f64(b));
}

bool int_compare(NeonFamily family, ElemClass cls, unsigned width, uint64_t a,
                 uint64_t b) {
  if (family == NeonFamily::Ceq) return a == b;
  bool lt, eq = (a == b);
  if (cls == ElemClass::SignedInt) {
    lt = sign_extend(a, width) < sign_extend(b, width);
  } else {
    lt = a < b;
  }
  switch (family) {
    case NeonFamily::Cgt:
      return !lt && !eq;
    case NeonFamily::Cge:
      return !lt;
    case NeonFamily::Clt:
      return lt;
    case NeonFamily::Cle:
      return lt || eq;
    default:
      return false;
  }
}

const VectorValue& vec_arg(const EvalArgs& args, size_t i) {
  if (i >= args.vectors.size()) {
    fail(EvalError::Kind::ArityMismatch, "missing vector argument");
  }
  return args.vectors[i];
}

void check_vec(const VectorValue& v, NeonVectorType expected) {
  if (v.elem() != expected.elem || v.lanes() != expected.lanes) {
    fail(EvalError::Kind::ArityMismatch,
         "vector argument does not match " + expected.name());
  }
}

}  // namespace

const FamilyInfo& family_info(NeonFamily f) {
  return kFamilies[static_cast<size_t>(f)];
}

std::string NeonIntrinsicId::name() const {
  return render_stem(family_info(family).token, q) + "_" +
         std::string(neon_suffix(elem));
}

std::vector<NeonVectorType> NeonSignature::all_types() const {
  std::vector<NeonVectorType> out = vec_args;
  if (result_vec) out.push_back(*result_vec);
  return out;
}

NeonSignature signature(NeonIntrinsicId id) {
  if (!in_catalog(id)) {
    fail(EvalError::Kind::UnsupportedIntrinsic,
         "not a supported intrinsic: " + id.name());
  }
  const FamilyInfo& info = family_info(id.family);
  unsigned width = bit_width(id.elem);
  NeonVectorType vt = neon_type_for_width(id.elem, id.q);
  NeonSignature sig;
  sig.kind = info.kind;
  switch (info.kind) {
    case SigKind::Load:
      sig.memory = true;
      sig.result_vec = vt;
      break;
    case SigKind::Store:
      sig.memory = true;
      sig.vec_args = {vt};
      break;
    case SigKind::Unary:
      sig.vec_args = {vt};
      sig.result_vec = vt;
      break;
    case SigKind::Binary:
      sig.vec_args = {vt, vt};
      sig.result_vec = vt;
      break;
    case SigKind::Compare:
      sig.vec_args = {vt, vt};
      sig.result_vec = neon_vector_type(unsigned_counterpart(id.elem), vt.lanes);
      break;
    case SigKind::ShiftImm:
      sig.vec_args = {vt};
      sig.result_vec = vt;
      if (id.family == NeonFamily::ShlN) {
        sig.imm = ImmRange{0, static_cast<int64_t>(width) - 1};
      } else {
        sig.imm = ImmRange{1, static_cast<int64_t>(width)};
      }
      break;
    case SigKind::GetHalf:
      sig.vec_args = {neon_type_for_width(id.elem, true)};
      sig.result_vec = neon_type_for_width(id.elem, false);
      break;
    case SigKind::CombineHalves: {
      NeonVectorType half = neon_type_for_width(id.elem, false);
      sig.vec_args = {half, half};
      sig.result_vec = neon_type_for_width(id.elem, true);
      break;
    }
    case SigKind::DupN:
      sig.scalar_arg = true;
      sig.result_vec = vt;
      break;
    case SigKind::GetLane:
      sig.vec_args = {vt};
      sig.imm = ImmRange{0, static_cast<int64_t>(vt.lanes) - 1};
      sig.result_scalar = true;
      break;
    case SigKind::SetLane:
      sig.scalar_arg = true;
      sig.vec_args = {vt};
      sig.imm = ImmRange{0, static_cast<int64_t>(vt.lanes) - 1};
      sig.result_vec = vt;
      break;
  }
  return sig;
}

unsigned intrinsic_lanes(NeonIntrinsicId id) {
  const FamilyInfo& info = family_info(id.family);
  unsigned width = bit_width(id.elem);
  switch (info.kind) {
    case SigKind::GetHalf:
    case SigKind::CombineHalves:
      return 128 / width;
    default:
      return (id.q ? 128 : 64) / width;
  }
}

const std::vector<NeonIntrinsicId>& neon_catalog() {
  static const std::vector<NeonIntrinsicId> kCatalog = [] {
    std::vector<NeonIntrinsicId> out;
    for (const FamilyInfo& info : kFamilies) {
      for (unsigned e = 0; e < kNumElementTypes; ++e) {
        if (!(info.elem_mask & (1u << e))) continue;
        ElementType elem = static_cast<ElementType>(e);
        out.push_back(NeonIntrinsicId{info.family, false, elem});
        if (info.has_q_pair) {
          out.push_back(NeonIntrinsicId{info.family, true, elem});
        }
      }
    }
    return out;
  }();
  return kCatalog;
}

bool in_catalog(NeonIntrinsicId id) {
  const FamilyInfo& info = family_info(id.family);
  if (!(info.elem_mask & bit_of(id.elem))) return false;
  if (id.q && !info.has_q_pair) return false;
  return true;
}

std::optional<NeonIntrinsicId> parse_intrinsic_name(std::string_view name) {
  if (name.size() < 4 || name[0] != 'v') return std::nullopt;
  size_t split = name.rfind('_');
  if (split == std::string_view::npos || split + 1 >= name.size()) {
    return std::nullopt;
  }
  auto elem = elem_from_suffix(name.substr(split + 1));
  if (!elem) return std::nullopt;
  std::string_view stem = name.substr(0, split);
  for (const FamilyInfo& info : kFamilies) {
    if (stem == render_stem(info.token, false)) {
      NeonIntrinsicId id{info.family, false, *elem};
      if (in_catalog(id)) return id;
      return std::nullopt;
    }
    if (info.has_q_pair && stem == render_stem(info.token, true)) {
      NeonIntrinsicId id{info.family, true, *elem};
      if (in_catalog(id)) return id;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

EvalOutput eval_neon(NeonIntrinsicId id, const EvalArgs& args,
                     std::span<std::byte> memory) {
  NeonSignature sig = signature(id);  // throws on unknown intrinsics
  unsigned width = bit_width(id.elem);
  uint64_t mask = lane_mask(width);
  ElemClass cls = elem_class(id.elem);
  bool is_float = cls == ElemClass::Float;

  if (args.vectors.size() != sig.vec_args.size()) {
    fail(EvalError::Kind::ArityMismatch,
         id.name() + ": expected " + std::to_string(sig.vec_args.size()) +
             " vector arguments, got " + std::to_string(args.vectors.size()));
  }
  for (size_t i = 0; i < sig.vec_args.size(); ++i) {
    check_vec(args.vectors[i], sig.vec_args[i]);
  }
  if (sig.scalar_arg && !args.scalar) {
    fail(EvalError::Kind::ArityMismatch, id.name() + ": missing scalar argument");
  }
  int64_t imm = 0;
  if (sig.imm) {
    if (!args.imm) {
      fail(EvalError::Kind::ArityMismatch,
           id.name() + ": missing immediate argument");
    }
    imm = *args.imm;
    if (!sig.imm->contains(imm)) {
      fail(EvalError::Kind::ImmediateOutOfRange,
           id.name() + ": immediate " + std::to_string(imm) +
               " outside [" + std::to_string(sig.imm->lo) + ", " +
               std::to_string(sig.imm->hi) + "]");
    }
  }
  if (sig.memory && !args.addr) {
    fail(EvalError::Kind::ArityMismatch, id.name() + ": missing address");
  }

  EvalOutput out;
  switch (sig.kind) {
    case SigKind::Load: {
      unsigned lanes = sig.result_vec->lanes;
      unsigned bytes = width / 8;
      uint64_t addr = *args.addr;
      if (addr + static_cast<uint64_t>(lanes) * bytes > memory.size()) {
        fail(EvalError::Kind::OutOfBoundsMemory, id.name() + ": load out of bounds");
      }
      VectorValue r = VectorValue::zeros(id.elem, lanes);
      for (unsigned i = 0; i < lanes; ++i) {
        uint64_t v = 0;
        for (unsigned b = 0; b < bytes; ++b) {
          v |= static_cast<uint64_t>(
                   std::to_integer<uint8_t>(memory[addr + i * bytes + b]))
               << (8 * b);
        }
        r.set_lane(i, v);
      }
      out.vec = r;
      break;
    }
    case SigKind::Store: {
      const VectorValue& v = vec_arg(args, 0);
      unsigned bytes = width / 8;
      uint64_t addr = *args.addr;
      if (addr + static_cast<uint64_t>(v.lanes()) * bytes > memory.size()) {
        fail(EvalError::Kind::OutOfBoundsMemory, id.name() + ": store out of bounds");
      }
      for (unsigned i = 0; i < v.lanes(); ++i) {
        uint64_t lane = v.lane(i);
        for (unsigned b = 0; b < bytes; ++b) {
          memory[addr + i * bytes + b] =
              static_cast<std::byte>((lane >> (8 * b)) & 0xFF);
        }
      }
      break;
    }
    case SigKind::Unary: {
      const VectorValue& a = vec_arg(args, 0);
      VectorValue r = VectorValue::zeros(id.elem, a.lanes());
      for (unsigned i = 0; i < a.lanes(); ++i) {
        uint64_t x = a.lane(i);
        uint64_t v = 0;
        switch (id.family) {
          case NeonFamily::Neg:
            // Float negate flips the sign bit, NaN included.
            v = is_float ? (x ^ (uint64_t{1} << (width - 1))) : (0 - x);
            break;
          case NeonFamily::Mvn:
            v = ~x;
            break;
          case NeonFamily::Rbit:
            v = reverse_bits8(x);
            break;
          default:
            fail(EvalError::Kind::UnsupportedIntrinsic, id.name());
        }
        r.set_lane(i, v & mask);
      }
      out.vec = r;
      break;
    }
    case SigKind::Binary: {
      const VectorValue& a = vec_arg(args, 0);
      const VectorValue& b = vec_arg(args, 1);
      VectorValue r = VectorValue::zeros(id.elem, a.lanes());
      for (unsigned i = 0; i < a.lanes(); ++i) {
        uint64_t x = a.lane(i), y = b.lane(i), v = 0;
        if (is_float) {
          v = float_binop(id.family, width, x, y);
        } else {
          switch (id.family) {
            case NeonFamily::Add:
              v = x + y;
              break;
            case NeonFamily::Sub:
              v = x - y;
              break;
            case NeonFamily::Mul:
              v = x * y;
              break;
            case NeonFamily::Min:
            case NeonFamily::Max: {
              bool lt = cls == ElemClass::SignedInt
                            ? sign_extend(x, width) < sign_extend(y, width)
                            : x < y;
              v = (lt == (id.family == NeonFamily::Min)) ? x : y;
              break;
            }
            case NeonFamily::And:
              v = x & y;
              break;
            case NeonFamily::Orr:
              v = x | y;
              break;
            case NeonFamily::Eor:
              v = x ^ y;
              break;
            case NeonFamily::Bic:
              v = x & ~y;
              break;
            default:
              fail(EvalError::Kind::UnsupportedIntrinsic, id.name());
          }
        }
        r.set_lane(i, v & mask);
      }
      out.vec = r;
      break;
    }
    case SigKind::Compare: {
      const VectorValue& a = vec_arg(args, 0);
      const VectorValue& b = vec_arg(args, 1);
      VectorValue r = VectorValue::zeros(sig.result_vec->elem, a.lanes());
      for (unsigned i = 0; i < a.lanes(); ++i) {
        bool hit = is_float
                       ? float_compare(id.family, width, a.lane(i), b.lane(i))
                       : int_compare(id.family, cls, width, a.lane(i), b.lane(i));
        r.set_lane(i, hit ? mask : 0);
      }
      out.vec = r;
      break;
    }
    case SigKind::ShiftImm: {
      const VectorValue& a = vec_arg(args, 0);
      VectorValue r = VectorValue::zeros(id.elem, a.lanes());
      unsigned n = static_cast<unsigned>(imm);
      for (unsigned i = 0; i < a.lanes(); ++i) {
        uint64_t x = a.lane(i), v;
        if (id.family == NeonFamily::ShlN) {
          v = x << n;
        } else if (cls == ElemClass::UnsignedInt) {
          v = n >= 64 ? 0 : x >> n;
        } else {
          int64_t s = sign_extend(x, width);
          v = n >= 64 ? (s < 0 ? ~uint64_t{0} : 0)
                      : static_cast<uint64_t>(s >> n);
        }
        r.set_lane(i, v & mask);
      }
      out.vec = r;
      break;
    }
    case SigKind::GetHalf: {
      const VectorValue& a = vec_arg(args, 0);
      unsigned half = a.lanes() / 2;
      unsigned base = id.family == NeonFamily::GetHigh ? half : 0;
      VectorValue r = VectorValue::zeros(id.elem, half);
      for (unsigned i = 0; i < half; ++i) r.set_lane(i, a.lane(base + i));
      out.vec = r;
      break;
    }
    case SigKind::CombineHalves: {
      const VectorValue& lo = vec_arg(args, 0);
      const VectorValue& hi = vec_arg(args, 1);
      VectorValue r = VectorValue::zeros(id.elem, lo.lanes() * 2);
      for (unsigned i = 0; i < lo.lanes(); ++i) r.set_lane(i, lo.lane(i));
      for (unsigned i = 0; i < hi.lanes(); ++i) {
        r.set_lane(lo.lanes() + i, hi.lane(i));
      }
      out.vec = r;
      break;
    }
    case SigKind::DupN: {
      out.vec = VectorValue::splat(id.elem, sig.result_vec->lanes,
                                   *args.scalar & mask);
      break;
    }
    case SigKind::GetLane: {
      const VectorValue& a = vec_arg(args, 0);
      out.scalar = a.lane(static_cast<unsigned>(imm));
      break;
    }
    case SigKind::SetLane: {
      const VectorValue& a = vec_arg(args, 0);
      VectorValue r = a;
      r.set_lane(static_cast<unsigned>(imm), *args.scalar & mask);
      out.vec = r;
      break;
    }
  }
  return out;
}

}  // namespace neon2rvv

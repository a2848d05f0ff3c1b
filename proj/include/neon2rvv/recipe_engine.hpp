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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "neon2rvv/neon_oracle.hpp"
#include "neon2rvv/rvv_machine.hpp"
#include "neon2rvv/vector_types.hpp"

namespace neon2rvv {

enum class RecipeTier : uint8_t {
  Direct,               // one RVV op with identical lane semantics
  Composite,            // a short fixed sequence of RVV ops
  ElementwiseFallback,  // per-lane scalar semantics on the baseline path
  Unsupported,
};

std::string_view tier_name(RecipeTier t);

// Conversion-method bucket the recipe corresponds to on the portability
// shim's menu: 1 = target intrinsic, 3 = compiler vector extensions,
// 4 = auto-vectorized scalar loop, 5 = combination of target intrinsics.
// Recorded as metadata only; execution treats tiers uniformly.
enum class ConversionMethod : uint8_t {
  TargetIntrinsic = 1,
  VectorExtension = 3,
  ScalarLoop = 4,
  Combination = 5,
};

struct Recipe {
  NeonIntrinsicId id;
  RecipeTier tier{RecipeTier::Unsupported};
  unsigned min_vlen_bits = 0;
  bool requires_zvfh = false;
  ConversionMethod method{ConversionMethod::ScalarLoop};
};

class RecipeError : public std::runtime_error {
 public:
  enum class Kind { UnknownIntrinsic, BindingMismatch, Unsupported };

  RecipeError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Concrete arguments a recipe is instantiated over.
struct Bindings {
  std::vector<VectorValue> vectors;
  std::optional<uint64_t> scalar;
  std::optional<int64_t> imm;
  std::optional<uint64_t> addr;
};

// Customized (Direct or Composite) recipe when every signature type maps
// under cfg, otherwise the ElementwiseFallback recipe. Unknown intrinsics
// throw RecipeError.
Recipe lookup_recipe(NeonIntrinsicId id, const VlenConfig& cfg);
// The customized and fallback rows regardless of configuration.
Recipe customized_recipe(NeonIntrinsicId id);
Recipe fallback_recipe(NeonIntrinsicId id);

// Builds an executable program for the recipe. vl equals the intrinsic's
// NEON lane count regardless of vlen. Fallback programs hold one scalar-loop
// op charged per fallback_charge().
RvvProgram instantiate(const Recipe& recipe, const VlenConfig& cfg,
                       const Bindings& bindings);

// Op count the scalar baseline is charged for one invocation: one op per
// lane moved through the shim's in-memory representation plus one per lane
// per arithmetic step of the per-lane semantics.
uint64_t fallback_charge(NeonIntrinsicId id);

// Mnemonics of a representative instantiation (boundary immediates), for
// catalog export and plan/recipe coherence checks.
std::vector<std::string> recipe_opcodes(const Recipe& recipe,
                                        const VlenConfig& cfg);

// C spelling of one abstract op as an RVV intrinsic, e.g.
// "__riscv_vadd_vv_i32m1".
std::string rvv_intrinsic_name(RvvOpcode op, unsigned sew, ElemClass cls);

struct HelperDef {
  std::string name;
  std::string definition;
};

struct RenderedCall {
  std::string text;
  std::optional<HelperDef> helper;
};

// C source for one call site. Direct recipes render an inline __riscv_*
// call; Composite and fallback recipes render a call to a once-emitted
// static inline helper. arg_texts are the original argument spellings.
RenderedCall render_call(const Recipe& recipe, const VlenConfig& cfg,
                         std::span<const std::string> arg_texts);

}  // namespace neon2rvv

#include <arm_neon.h>
#include <stdint.h>

/* Mixes 64-bit and 128-bit vectors so narrow targets exercise the
 * per-type availability split. */

int32x2_t narrow_add(const int32_t *p) {
  int32x2_t a = vld1_s32(p);
  int32x2_t b = vld1_s32(p + 2);
  return vadd_s32(a, b);
}

int32x4_t wide_add(const int32_t *p) {
  int32x4_t a = vld1q_s32(p);
  int32x4_t b = vld1q_s32(p + 4);
  return vaddq_s32(a, b);
}

void store_both(int32_t *out, int32x2_t n, int32x4_t w) {
  vst1_s32(out, n);
  vst1q_s32(out + 2, w);
}

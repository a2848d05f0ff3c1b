#include <arm_neon.h>
#include <stdint.h>

int32x4_t swap_halves(int32x4_t v) {
  int32x2_t hi = vget_high_s32(v);
  int32x2_t lo = vget_low_s32(v);
  return vcombine_s32(hi, lo);
}

int16x8_t widen_and_merge(int16x4_t a, int16x4_t b) {
  return vcombine_s16(vadd_s16(a, b), vsub_s16(a, b));
}

uint8x8_t top_bytes(uint8x16_t v) {
  return vget_high_u8(v);
}

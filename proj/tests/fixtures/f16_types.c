#include <arm_neon.h>

/* Half-precision data movement: customized only when the target has zvfh. */

float16x8_t load_h(const float16_t *p) {
  return vld1q_f16(p);
}

void store_low_h(float16_t *p, float16x8_t v) {
  vst1_f16(p, vget_low_f16(v));
}

float16x8_t swap_halves_h(float16x8_t v) {
  return vcombine_f16(vget_high_f16(v), vget_low_f16(v));
}

float16x8_t splat_h(float16_t x) {
  return vdupq_n_f16(x);
}

float16_t first_h(float16x4_t v) {
  return vget_lane_f16(v, 0);
}

float16x4_t with_last_h(float16x4_t v, float16_t x) {
  return vset_lane_f16(x, v, 3);
}

#include <arm_neon.h>
#include <stdint.h>

uint32x4_t mask_equal(const int32_t *a, const int32_t *b) {
  int32x4_t va = vld1q_s32(a);
  int32x4_t vb = vld1q_s32(b);
  return vceqq_s32(va, vb);
}

uint16x8_t order_u16(uint16x8_t a, uint16x8_t b) {
  uint16x8_t ge = vcgeq_u16(a, b);
  uint16x8_t lt = vcltq_u16(a, b);
  return vorrq_u16(ge, lt);
}

uint32x4_t below_threshold(float32x4_t v, float limit) {
  return vcltq_f32(v, vdupq_n_f32(limit));
}

#include <arm_neon.h>

float32x4_t clamp(float32x4_t v, float32x4_t lo, float32x4_t hi) {
  return vminq_f32(vmaxq_f32(v, lo), hi);
}

float64x2_t wider_bound(float64x2_t a, float64x2_t b) {
  return vmaxq_f64(a, b);
}

float32x2_t narrow_min(float32x2_t a, float32x2_t b) {
  return vmin_f32(a, b);
}

float32x4_t negate_all(float32x4_t v) {
  return vnegq_f32(v);
}

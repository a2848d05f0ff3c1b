#include <arm_neon.h>
#include <stdint.h>

void add4(const int32_t *a, const int32_t *b, int32_t *out) {
  int32x4_t va = vld1q_s32(a);
  int32x4_t vb = vld1q_s32(b);
  int32x4_t vc = vaddq_s32(va, vb);
  vst1q_s32(out, vc);
}

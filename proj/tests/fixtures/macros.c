#include <arm_neon.h>
#include <stdint.h>

/* NEON calls inside macro bodies are a known limitation: the directive is
 * preserved verbatim and reported, while ordinary call sites convert. */
#define ADD4(a, b) vaddq_s32((a), (b))
#define WIDTH 4

int32x4_t via_macro(int32x4_t a, int32x4_t b) {
  return ADD4(a, b);
}

int32x4_t direct(int32x4_t a, int32x4_t b) {
  return vaddq_s32(a, b);
}

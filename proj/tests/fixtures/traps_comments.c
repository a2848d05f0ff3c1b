#include <arm_neon.h>
#include <stdint.h>

/* TRAP1: vaddq_s32(a, b) inside a block comment must stay NEON. */
// TRAP2: int32x4_t and vld1q_s32 in a line comment must stay NEON.

const char *trap3 = "vmulq_s8(int8x16_t) inside a string stays NEON";
const char *trap4 = "escaped quote \" then vsubq_u16 stays too";
const char trap5 = 'v';

int32x4_t real_work(int32x4_t a, int32x4_t b) {
  /* the call below is real and must convert */
  return vaddq_s32(a, b); // trailing TRAP6: vmulq_s32(a, b)
}

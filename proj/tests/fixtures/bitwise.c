#include <arm_neon.h>
#include <stdint.h>

uint8x16_t select_bits(uint8x16_t v, uint8x16_t keep, uint8x16_t drop) {
  uint8x16_t masked = vandq_u8(v, keep);
  uint8x16_t cleared = vbicq_u8(masked, drop);
  return vorrq_u8(cleared, veorq_u8(keep, drop));
}

int32x2_t toggle(int32x2_t v) {
  return vmvn_s32(v);
}

uint64x2_t mix(uint64x2_t a, uint64x2_t b) {
  return veorq_u64(vandq_u64(a, b), vorrq_u64(a, b));
}

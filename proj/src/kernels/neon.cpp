#include <arm_neon.h>

#include "resnum/kernels.hpp"

namespace resnum::kernels::neon {

std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t i = 0;
  std::size_t count = 0;
  for (; i + 8 <= n; i += 8) {
    const uint16x8_t eq = vceqq_u16(vld1q_u16(a + i), vld1q_u16(b + i));
    count += vaddvq_u16(vshrq_n_u16(eq, 15));
  }
  for (; i < n; ++i) count += a[i] == b[i] ? 1 : 0;
  return count;
}

std::uint16_t max_value(const std::uint16_t* a, std::size_t n) {
  std::size_t i = 0;
  std::uint16_t best = 0;
  if (n >= 8) {
    uint16x8_t acc = vdupq_n_u16(0);
    for (; i + 8 <= n; i += 8) acc = vmaxq_u16(acc, vld1q_u16(a + i));
    best = vmaxvq_u16(acc);
  }
  for (; i < n; ++i) best = a[i] > best ? a[i] : best;
  return best;
}

}  // namespace resnum::kernels::neon

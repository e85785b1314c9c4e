#include "resnum/kernels.hpp"

namespace resnum::kernels::scalar {

std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] == b[i] ? 1 : 0;
  return count;
}

std::uint16_t max_value(const std::uint16_t* a, std::size_t n) {
  std::uint16_t best = 0;
  for (std::size_t i = 0; i < n; ++i) best = a[i] > best ? a[i] : best;
  return best;
}

}  // namespace resnum::kernels::scalar

// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "resnum/kernels.hpp"

namespace resnum::kernels::avx2 {

std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t i = 0;
  std::size_t mask_bits = 0;
  // Two registers per iteration; movemask yields two bits per 16-bit lane.
  for (; i + 32 <= n; i += 32) {
    const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 16));
    const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i + 16));
    const auto m0 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a0, b0)));
    const auto m1 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a1, b1)));
    mask_bits += static_cast<std::size_t>(std::popcount(m0) + std::popcount(m1));
  }
  for (; i + 16 <= n; i += 16) {
    const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto m0 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a0, b0)));
    mask_bits += static_cast<std::size_t>(std::popcount(m0));
  }
  std::size_t count = mask_bits / 2;
  for (; i < n; ++i) count += a[i] == b[i] ? 1 : 0;
  return count;
}

std::uint16_t max_value(const std::uint16_t* a, std::size_t n) {
  std::size_t i = 0;
  std::uint16_t best = 0;
  if (n >= 16) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + 16 <= n; i += 16) {
      acc = _mm256_max_epu16(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    }
    __m128i half = _mm_max_epu16(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    half = _mm_max_epu16(half, _mm_srli_si128(half, 8));
    half = _mm_max_epu16(half, _mm_srli_si128(half, 4));
    half = _mm_max_epu16(half, _mm_srli_si128(half, 2));
    best = static_cast<std::uint16_t>(_mm_extract_epi16(half, 0));
  }
  for (; i < n; ++i) best = a[i] > best ? a[i] : best;
  return best;
}

}  // namespace resnum::kernels::avx2

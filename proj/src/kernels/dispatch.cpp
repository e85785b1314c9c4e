#include <atomic>
#include <string>

#include "resnum/error.hpp"
#include "resnum/kernels.hpp"

namespace resnum::kernels {

namespace {

Isa detect() noexcept {
#if defined(RESNUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
#if defined(RESNUM_HAVE_NEON)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(RESNUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(RESNUM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    raise(ErrorKind::NotApplicable, "kernel variant " + std::string(to_string(isa)) +
                                        " is not available on this machine");
  }
  active().store(isa, std::memory_order_relaxed);
}

std::size_t count_equal(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  switch (active_isa()) {
#if defined(RESNUM_HAVE_AVX2)
    case Isa::Avx2: return avx2::count_equal(a.data(), b.data(), n);
#endif
#if defined(RESNUM_HAVE_NEON)
    case Isa::Neon: return neon::count_equal(a.data(), b.data(), n);
#endif
    default: return scalar::count_equal(a.data(), b.data(), n);
  }
}

std::uint16_t max_value(std::span<const std::uint16_t> a) {
  switch (active_isa()) {
#if defined(RESNUM_HAVE_AVX2)
    case Isa::Avx2: return avx2::max_value(a.data(), a.size());
#endif
#if defined(RESNUM_HAVE_NEON)
    case Isa::Neon: return neon::max_value(a.data(), a.size());
#endif
    default: return scalar::max_value(a.data(), a.size());
  }
}

}  // namespace resnum::kernels

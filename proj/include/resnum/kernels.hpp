#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace resnum::kernels {

/// Instruction set a kernel family is compiled for.
enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// True when the variant was compiled in and the running CPU can execute it.
bool isa_supported(Isa isa) noexcept;

/// Best supported variant on this machine.
Isa detected_isa() noexcept;

/// Variant used by the dispatching entry points below. Defaults to
/// detected_isa(); tests pin it to compare variants.
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

/// Number of positions i with a[i] == b[i]. Spans must have equal length.
std::size_t count_equal(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b);

/// Largest entry, 0 for an empty span.
std::uint16_t max_value(std::span<const std::uint16_t> a);

namespace scalar {
std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::uint16_t max_value(const std::uint16_t* a, std::size_t n);
}  // namespace scalar

namespace avx2 {
std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::uint16_t max_value(const std::uint16_t* a, std::size_t n);
}  // namespace avx2

namespace neon {
std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::uint16_t max_value(const std::uint16_t* a, std::size_t n);
}  // namespace neon

}  // namespace resnum::kernels

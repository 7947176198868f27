#ifndef TANGENCY_POPCOUNT_HPP
#define TANGENCY_POPCOUNT_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace tangency {

/// popcount(x & y) over `words` 64-bit words. Dispatches to the AVX2 kernel
/// when the CPU supports it.
std::size_t and_popcount(const std::uint64_t* x, const std::uint64_t* y, std::size_t words);

/// Portable reference kernel.
std::size_t and_popcount_scalar(const std::uint64_t* x, const std::uint64_t* y, std::size_t words);

/// True when an AVX2 kernel was compiled in and the CPU supports it.
bool avx2_available();

/// AVX2 kernel; only call when avx2_available().
std::size_t and_popcount_avx2(const std::uint64_t* x, const std::uint64_t* y, std::size_t words);

/// "avx2" or "scalar".
std::string active_popcount_kernel();

}  // namespace tangency

#endif

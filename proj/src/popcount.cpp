#include "tangency/popcount.hpp"

#include <bit>

namespace tangency {

std::size_t and_popcount_scalar(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(x[i] & y[i]));
    return total;
}

#if defined(TANGENCY_HAVE_AVX2)
bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}
#else
bool avx2_available() { return false; }
std::size_t and_popcount_avx2(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    return and_popcount_scalar(x, y, words);
}
#endif

std::size_t and_popcount(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    static const auto kernel = avx2_available() ? &and_popcount_avx2 : &and_popcount_scalar;
    return kernel(x, y, words);
}

std::string active_popcount_kernel() { return avx2_available() ? "avx2" : "scalar"; }

}  // namespace tangency

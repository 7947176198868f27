#include <immintrin.h>

#include "tangency/popcount.hpp"

namespace tangency {

// nibble lookup popcount, accumulated per 64-bit lane with vpsadbw
std::size_t and_popcount_avx2(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        const __m256i v = _mm256_and_si256(a, b);
        const __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, low));
        const __m256i hi = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    return total + and_popcount_scalar(x + i, y + i, words - i);
}

}  // namespace tangency

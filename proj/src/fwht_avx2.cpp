#include "fsd/fwht.hpp"

#if defined(FSD_HAVE_AVX2_BUILD)

#include <immintrin.h>
#include <stdexcept>

namespace fsd {

// Same butterfly network as fwht_scalar. The first three stages work inside
// one 256-bit register via shuffles; wider stages stream two registers.
void fwht_avx2(int32_t *data, size_t len) {
  if (len < 16 || (len & (len - 1)) != 0)
    throw std::invalid_argument("length must be a power of two, >= 16");

  for (size_t i = 0; i < len; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i *>(data + i));
    // stage h=1: pairs within 64-bit lanes
    __m256i sw = _mm256_shuffle_epi32(v, _MM_SHUFFLE(2, 3, 0, 1));
    __m256i sum = _mm256_add_epi32(v, sw);
    __m256i dif = _mm256_sub_epi32(sw, v);
    v = _mm256_blend_epi32(sum, dif, 0b10101010);
    // stage h=2: swap 64-bit halves of each 128-bit lane
    sw = _mm256_shuffle_epi32(v, _MM_SHUFFLE(1, 0, 3, 2));
    sum = _mm256_add_epi32(v, sw);
    dif = _mm256_sub_epi32(sw, v);
    v = _mm256_blend_epi32(sum, dif, 0b11001100);
    // stage h=4: swap the two 128-bit lanes
    sw = _mm256_permute2x128_si256(v, v, 0x01);
    sum = _mm256_add_epi32(v, sw);
    dif = _mm256_sub_epi32(sw, v);
    v = _mm256_blend_epi32(sum, dif, 0b11110000);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(data + i), v);
  }

  for (size_t h = 8; h < len; h <<= 1)
    for (size_t i = 0; i < len; i += h << 1)
      for (size_t j = i; j < i + h; j += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i *>(data + j));
        __m256i y =
            _mm256_loadu_si256(reinterpret_cast<__m256i *>(data + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(data + j),
                            _mm256_add_epi32(x, y));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(data + j + h),
                            _mm256_sub_epi32(x, y));
      }
}

} // namespace fsd

#endif

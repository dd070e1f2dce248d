#include "fsd/fwht.hpp"

#include <stdexcept>

namespace fsd {

void fwht_scalar(int32_t *data, size_t len) {
  if (len == 0 || (len & (len - 1)) != 0)
    throw std::invalid_argument("length must be a power of two");
  for (size_t h = 1; h < len; h <<= 1)
    for (size_t i = 0; i < len; i += h << 1)
      for (size_t j = i; j < i + h; ++j) {
        int32_t x = data[j], y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
}

namespace {

bool cpu_has_avx2() {
#if defined(FSD_HAVE_AVX2_BUILD) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const bool g_use_avx2 = cpu_has_avx2();

} // namespace

bool fwht_uses_avx2() { return g_use_avx2; }

void fwht(int32_t *data, size_t len) {
#if defined(FSD_HAVE_AVX2_BUILD)
  if (g_use_avx2 && len >= 16) {
    fwht_avx2(data, len);
    return;
  }
#endif
  fwht_scalar(data, len);
}

} // namespace fsd

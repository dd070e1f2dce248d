#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fsd {

// In-place Walsh-Hadamard transform; len must be a power of two.
// fwht() dispatches to the AVX2 kernel when the CPU supports it, the scalar
// kernel otherwise; both produce identical results.
void fwht_scalar(int32_t *data, size_t len);
void fwht(int32_t *data, size_t len);
bool fwht_uses_avx2();

inline void fwht(std::vector<int32_t> &v) { fwht(v.data(), v.size()); }

#if defined(FSD_HAVE_AVX2_BUILD)
void fwht_avx2(int32_t *data, size_t len);
#endif

} // namespace fsd

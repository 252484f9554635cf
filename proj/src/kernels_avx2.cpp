#include "ybx/kernels.hpp"

#include <immintrin.h>

#include <stdexcept>

namespace ybx::kern {

namespace {

struct VecMod {
    __m256i magic;
    __m256i pvec;
    int shift;
};

inline __m256i reduce(__m256i v, const VecMod& m) {
    __m256i q = _mm256_srli_epi16(_mm256_mulhi_epu16(v, m.magic), m.shift);
    return _mm256_sub_epi16(v, _mm256_mullo_epi16(q, m.pvec));
}

}  // namespace

// 16 candidates per call, one per 16-bit lane. Products of reduced values
// stay below 3 * 12^2 so a single reduction after each accumulation never
// overflows the lane.
std::uint32_t check_batch_avx2(const BatchArgs& in) {
    const std::uint32_t n = in.n, p = in.p, n2 = n * n;
    if (n == 0 || n > kMaxN) throw std::invalid_argument("check_batch_avx2: n out of range");
    ModConst mc = mod_const(p);
    VecMod vm{_mm256_set1_epi16(static_cast<short>(mc.magic)),
              _mm256_set1_epi16(static_cast<short>(p)), mc.shift};

    __m256i x[kMaxN * kMaxN], ax[kMaxN * kMaxN], bx[kMaxN * kMaxN];
    __m256i t1[kMaxN * kMaxN], t2[kMaxN * kMaxN];
    for (std::uint32_t e = 0; e < n2; ++e)
        x[e] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.x + e * in.stride));

    // scalar-matrix times lane-matrix: out[i][j] = sum_k u[i*n+k] * v[k*n+j]
    auto mul_sl = [&](const std::uint16_t* u, const __m256i* v, __m256i* out) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                __m256i acc = _mm256_setzero_si256();
                for (std::uint32_t k = 0; k < n; ++k) {
                    __m256i prod = _mm256_mullo_epi16(
                        _mm256_set1_epi16(static_cast<short>(u[i * n + k])), v[k * n + j]);
                    acc = _mm256_add_epi16(acc, prod);
                }
                out[i * n + j] = reduce(acc, vm);
            }
    };
    auto mul_ls = [&](const __m256i* v, const std::uint16_t* u, __m256i* out) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                __m256i acc = _mm256_setzero_si256();
                for (std::uint32_t k = 0; k < n; ++k) {
                    __m256i prod = _mm256_mullo_epi16(
                        v[i * n + k], _mm256_set1_epi16(static_cast<short>(u[k * n + j])));
                    acc = _mm256_add_epi16(acc, prod);
                }
                out[i * n + j] = reduce(acc, vm);
            }
    };
    auto mul_ll = [&](const __m256i* u, const __m256i* v, __m256i* out) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                __m256i acc = _mm256_setzero_si256();
                for (std::uint32_t k = 0; k < n; ++k) {
                    __m256i prod = _mm256_mullo_epi16(u[i * n + k], v[k * n + j]);
                    acc = _mm256_add_epi16(acc, prod);
                }
                out[i * n + j] = reduce(acc, vm);
            }
    };

    mul_sl(in.a, x, ax);
    mul_sl(in.b, x, bx);

    __m256i eq = _mm256_set1_epi16(-1);
    mul_ls(ax, in.a, t1);  // AXA
    mul_ll(x, bx, t2);     // XBX
    for (std::uint32_t e = 0; e < n2; ++e)
        eq = _mm256_and_si256(eq, _mm256_cmpeq_epi16(t1[e], t2[e]));
    mul_ls(bx, in.b, t1);  // BXB
    mul_ll(x, ax, t2);     // XAX
    for (std::uint32_t e = 0; e < n2; ++e)
        eq = _mm256_and_si256(eq, _mm256_cmpeq_epi16(t1[e], t2[e]));

    std::uint32_t bytes = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
    std::uint32_t mask = 0;
    for (std::uint32_t t = 0; t < in.count; ++t)
        if (((bytes >> (2 * t)) & 3u) == 3u) mask |= 1u << t;
    return mask;
}

}  // namespace ybx::kern

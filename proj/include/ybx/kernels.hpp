#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ybx::kern {

inline constexpr std::uint32_t kBatch = 16;  // lanes per kernel call
inline constexpr std::uint32_t kMaxN = 3;

// One batch of candidate matrices X over F_p, stored entry-major:
// x[e * stride + t] is entry e (row-major) of candidate t. The kernel decides
// for each lane whether A X A == X B X and B X B == X A X and returns the
// satisfied lanes as a bitmask. Entries and coefficients are reduced mod p on
// input.
struct BatchArgs {
    const std::uint16_t* x;
    std::size_t stride;
    const std::uint16_t* a;  // n*n row-major
    const std::uint16_t* b;
    std::uint32_t n;
    std::uint32_t p;
    std::uint32_t count;  // lanes in use, <= kBatch
};

using BatchFn = std::uint32_t (*)(const BatchArgs&);

std::uint32_t check_batch_scalar(const BatchArgs& in);

bool avx2_available();

enum class KernelMode { Auto, Scalar, Avx2 };

struct Kernel {
    std::string name;
    BatchFn fn;
};

// Picks the implementation: Auto prefers AVX2 when the CPU supports it and
// the translation unit was built; explicit Avx2 throws when unavailable.
Kernel select_kernel(KernelMode mode);

// Reciprocal constants for vectorized reduction mod p: with
// magic = ceil(2^(16+shift)/p) the quotient (v*magic) >> (16+shift) equals
// v/p for every v below `exact_below`, which comfortably covers the residual
// accumulators (< 3 * 12^2).
struct ModConst {
    std::uint16_t magic;
    std::uint16_t shift;
    std::uint32_t exact_below;
};
ModConst mod_const(std::uint32_t p);

}  // namespace ybx::kern

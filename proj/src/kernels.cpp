#include "ybx/kernels.hpp"

#include <stdexcept>

namespace ybx::kern {

#if defined(YBX_HAVE_AVX2_TU)
std::uint32_t check_batch_avx2(const BatchArgs& in);
#endif

bool avx2_available() {
#if defined(YBX_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Kernel select_kernel(KernelMode mode) {
    switch (mode) {
        case KernelMode::Scalar:
            return {"scalar", &check_batch_scalar};
        case KernelMode::Avx2:
#if defined(YBX_HAVE_AVX2_TU)
            if (avx2_available()) return {"avx2", &check_batch_avx2};
#endif
            throw std::runtime_error("avx2 kernel requested but not available on this host");
        case KernelMode::Auto:
#if defined(YBX_HAVE_AVX2_TU)
            if (avx2_available()) return {"avx2", &check_batch_avx2};
#endif
            return {"scalar", &check_batch_scalar};
    }
    throw std::logic_error("select_kernel: bad mode");
}

}  // namespace ybx::kern

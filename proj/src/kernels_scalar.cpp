#include "ybx/kernels.hpp"

#include <stdexcept>

namespace ybx::kern {

// Reference kernel: plain integer arithmetic, one candidate per lane. The
// SIMD variants must agree with this bit for bit on every input.
std::uint32_t check_batch_scalar(const BatchArgs& in) {
    const std::uint32_t n = in.n, p = in.p, n2 = n * n;
    if (n == 0 || n > kMaxN) throw std::invalid_argument("check_batch_scalar: n out of range");
    std::uint32_t mask = 0;
    std::uint32_t x[kMaxN * kMaxN] = {}, ax[kMaxN * kMaxN] = {}, bx[kMaxN * kMaxN] = {};
    std::uint32_t lhs1[kMaxN * kMaxN] = {}, rhs1[kMaxN * kMaxN] = {},
        lhs2[kMaxN * kMaxN] = {}, rhs2[kMaxN * kMaxN] = {};

    auto mul = [&](const std::uint32_t* u, const std::uint32_t* v, std::uint32_t* out) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                std::uint32_t acc = 0;
                for (std::uint32_t k = 0; k < n; ++k) acc += u[i * n + k] * v[k * n + j];
                out[i * n + j] = acc % p;
            }
    };

    std::uint32_t a[kMaxN * kMaxN] = {}, b[kMaxN * kMaxN] = {};
    for (std::uint32_t e = 0; e < n2; ++e) {
        a[e] = in.a[e];
        b[e] = in.b[e];
    }

    for (std::uint32_t t = 0; t < in.count; ++t) {
        for (std::uint32_t e = 0; e < n2; ++e) x[e] = in.x[e * in.stride + t];
        mul(a, x, ax);
        mul(b, x, bx);
        mul(ax, a, lhs1);   // AXA
        mul(x, bx, rhs1);   // XBX
        mul(bx, b, lhs2);   // BXB
        mul(x, ax, rhs2);   // XAX
        bool ok = true;
        for (std::uint32_t e = 0; e < n2 && ok; ++e)
            ok = lhs1[e] == rhs1[e] && lhs2[e] == rhs2[e];
        if (ok) mask |= 1u << t;
    }
    return mask;
}

ModConst mod_const(std::uint32_t p) {
    switch (p) {
        case 3: return {43691, 1, 131072};   // e = 1
        case 5: return {52429, 2, 262144};   // e = 1
        case 7: return {37450, 2, 43690};    // e = 6
        case 11: return {47663, 3, 104857};  // e = 5
        case 13: return {40330, 3, 262144};  // e = 2
        default: throw std::invalid_argument("mod_const: unsupported modulus");
    }
}

}  // namespace ybx::kern

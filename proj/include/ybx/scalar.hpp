#pragma once

#include <concepts>

namespace ybx {

// Generic zero test for every exact type in the library (scalars,
// polynomials, matrices all expose a member is_zero()).
template <class T>
    requires requires(const T& t) {
        { t.is_zero() } -> std::convertible_to<bool>;
    }
inline bool is_zero(const T& t) {
    return t.is_zero();
}

}  // namespace ybx

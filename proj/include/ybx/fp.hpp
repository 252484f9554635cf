#pragma once

#include "ybx/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybx {

// Prime-field scalar with runtime modulus, restricted to the small odd primes
// the finite-field oracle enumerates over. A default-constructed value is the
// "untyped" zero (modulus 0): it acts as additive identity and absorbing
// multiplicative zero against any modulus, which lets zero-initialized
// matrices mix with typed entries without a modulus threaded through every
// constructor. Any nonzero value always carries its modulus; mixed-modulus
// arithmetic throws.
class Fp {
  public:
    static bool supported_modulus(std::uint32_t p) {
        return p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
    }

    Fp() : v_(0), p_(0) {}
    Fp(long long v, std::uint32_t p) : p_(p) {
        if (!supported_modulus(p))
            throw std::invalid_argument("Fp: unsupported modulus " + std::to_string(p));
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t p = joint(a, b);
        if (p == 0) return Fp();
        return Fp((static_cast<long long>(a.v_) + b.v_), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t p = joint(a, b);
        if (p == 0) return Fp();
        return Fp((static_cast<long long>(a.v_) + p - b.v_), p);
    }
    Fp operator-() const {
        if (p_ == 0) return Fp();
        return Fp(static_cast<long long>(p_) - v_, p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t p = joint(a, b);  // an untyped factor is zero; keep the known modulus
        if (p == 0) return Fp();
        return Fp(static_cast<long long>(a.v_) * b.v_, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // Fermat: v^(p-2) mod p
        std::uint64_t base = v_, acc = 1;
        std::uint32_t e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return Fp(static_cast<long long>(acc), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    static std::uint32_t joint(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
        return a.p_;
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline bool is_one(const Fp& x) { return x.is_one(); }

// a typed entry (even a typed zero) pins down the field
inline bool has_unit_info(const Fp& x) { return x.modulus() != 0; }
inline Fp one_like(const Fp& x) {
    if (x.modulus() == 0) throw std::domain_error("Fp: modulus unknown, cannot make 1");
    return Fp(1, x.modulus());
}

}  // namespace ybx

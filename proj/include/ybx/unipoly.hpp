#pragma once

#include "ybx/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

// Dense univariate polynomial over an exact field scalar, coefficients
// indexed by degree with trailing zeros trimmed. The zero polynomial has an
// empty coefficient vector and degree -1 by convention.
template <class S>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit UniPoly(const S& c0) : c_{c0} { trim(); }

    static UniPoly monomial(std::size_t deg, const S& coeff) {
        std::vector<S> c(deg + 1);
        c[deg] = coeff;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(); }
    const S& lead() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no lead");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(c));
    }
    UniPoly operator-() const {
        std::vector<S> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ybx::is_zero<S>(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const S& s, const UniPoly& a) {
        std::vector<S> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
        return UniPoly(std::move(c));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor (field coefficients).
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly r = a;
        if (a.degree() < b.degree()) return {UniPoly(), r};
        std::vector<S> q(a.degree() - b.degree() + 1);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = r.degree() - b.degree();
            S f = r.lead() / b.lead();
            q[shift] = f;
            std::vector<S> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] = rc[i + shift] - f * b.c_[i];
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), r};
    }

    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        S inv_lead = one_like(lead()) / lead();
        return inv_lead * *this;
    }

    S eval(const S& x) const {
        S acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(-x)
    UniPoly negate_arg() const {
        std::vector<S> c = c_;
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return UniPoly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && ybx::is_zero<S>(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

template <class S>
bool is_zero(const UniPoly<S>& p) {
    return p.is_zero();
}
template <class S>
bool has_unit_info(const UniPoly<S>& p) {
    for (const auto& c : p.coeffs())
        if (has_unit_info(c)) return true;
    return false;
}
template <class S>
UniPoly<S> one_like(const UniPoly<S>& p) {
    for (const auto& c : p.coeffs())
        if (has_unit_info(c)) return UniPoly<S>(one_like(c));
    return UniPoly<S>(one_like(S()));
}

// Monic gcd by the Euclidean algorithm; gcd(p, 0) = monic(p).
template <class S>
UniPoly<S> uni_gcd(UniPoly<S> a, UniPoly<S> b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("uni_gcd: both polynomials are zero");
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace ybx

#pragma once

#include <gmpxx.h>

#include "ybx/scalar.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ybx {

// Exact rational scalar backed by GMP. Always canonical: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Nothing in this library ever rounds.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with arbitrary-precision decimal integers.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

  private:
    mpq_class q_;
};

// scalar-domain customization points used by generic matrix code
inline bool is_one(const Rational& x) { return x.is_one(); }
inline bool has_unit_info(const Rational&) { return true; }
inline Rational one_like(const Rational&) { return Rational(1); }

namespace detail {
inline bool valid_int_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') return false;
    return true;
}
}  // namespace detail

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string ns = s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!detail::valid_int_token(ns) || !detail::valid_int_token(ds))
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    mpz_class n(ns), d(ds);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

}  // namespace ybx

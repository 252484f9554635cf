#pragma once

#include "ybx/rational.hpp"
#include "ybx/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

// Ordered variable list; position = lex precedence, leftmost greatest.
class VarTable {
  public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarTable: duplicate variable '" + names_[i] + "'");
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }
    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

// Exponent vector, one entry per variable of the owning table.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    unsigned long total_degree() const {
        unsigned long d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool divides(const Monomial& m) const {
        if (e.size() != m.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.e.size() != b.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    // exact quotient; caller guarantees divisibility
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (a.e.size() != b.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) {
            if (b.e[i] > r.e[i]) throw std::domain_error("Monomial: inexact division");
            r.e[i] -= b.e[i];
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.e.size() != b.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Lexicographic order with the table's first variable greatest: the first
// exponent (from the left) that differs decides.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("lex_compare: variable count mismatch");
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

struct Term {
    Rational c;
    Monomial m;
};

// Multivariate polynomial over the rationals: term list kept strictly
// descending in lex order, no zero coefficients, no duplicate monomials.
// The zero polynomial has no terms and is compatible with any variable count.
class MultiPoly {
  public:
    MultiPoly() = default;

    static MultiPoly constant(const Rational& c, std::size_t nvars) {
        MultiPoly p;
        if (!c.is_zero()) p.t_.push_back({c, Monomial::one(nvars)});
        return p;
    }
    static MultiPoly variable(std::size_t idx, std::size_t nvars) {
        if (idx >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
        Monomial m = Monomial::one(nvars);
        m.e[idx] = 1;
        MultiPoly p;
        p.t_.push_back({Rational(1), std::move(m)});
        return p;
    }
    static MultiPoly from_terms(const std::vector<Term>& terms) {
        std::map<Monomial, Rational, LexGreater> acc;
        for (const auto& t : terms) {
            if (t.c.is_zero()) continue;
            auto [it, fresh] = acc.emplace(t.m, t.c);
            if (!fresh) it->second += t.c;
        }
        MultiPoly p;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.t_.push_back({c, m});
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t nterms() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    // 0 means "unknown" (zero polynomial fits any table)
    std::size_t nvars() const { return t_.empty() ? 0 : t_.front().m.nvars(); }

    const Term& leading() const {
        if (t_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
        return t_.front();
    }
    const Monomial& leading_monomial() const { return leading().m; }

    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().c.inv());
    }
    MultiPoly scaled(const Rational& s) const {
        if (s.is_zero()) return MultiPoly();
        MultiPoly p = *this;
        for (auto& t : p.t_) t.c *= s;
        return p;
    }
    // this * (c . m)
    MultiPoly times_term(const Rational& c, const Monomial& m) const {
        if (c.is_zero()) return MultiPoly();
        MultiPoly p = *this;
        for (auto& t : p.t_) {
            t.c *= c;
            t.m = t.m * m;
        }
        return p;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
    MultiPoly operator-() const {
        MultiPoly p = *this;
        for (auto& t : p.t_) t.c = -t.c;
        return p;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return MultiPoly();
        check_compat(a, b);
        std::map<Monomial, Rational, LexGreater> acc;
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_) {
                Monomial m = ta.m * tb.m;
                Rational c = ta.c * tb.c;
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second += c;
            }
        MultiPoly p;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.t_.push_back({c, m});
        return p;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].c != b.t_[i].c || a.t_[i].m != b.t_[i].m) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& point) const {
        Rational acc;
        for (const auto& t : t_) {
            if (t.m.nvars() != point.size())
                throw std::invalid_argument("MultiPoly::eval: point size mismatch");
            Rational term = t.c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (std::uint32_t k = 0; k < t.m.e[i]; ++k) term *= point[i];
            acc += term;
        }
        return acc;
    }

    unsigned long total_degree() const {
        unsigned long d = 0;
        for (const auto& t : t_) d = std::max(d, t.m.total_degree());
        return d;
    }

  private:
    static void check_compat(const MultiPoly& a, const MultiPoly& b) {
        if (!a.is_zero() && !b.is_zero() && a.nvars() != b.nvars())
            throw std::invalid_argument("MultiPoly: variable count mismatch");
    }
    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        check_compat(a, b);
        MultiPoly p;
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int which;
            if (i == a.t_.size())
                which = 1;
            else if (j == b.t_.size())
                which = -1;
            else
                which = -lex_compare(a.t_[i].m, b.t_[j].m);  // -1: take a first
            if (which < 0) {
                p.t_.push_back(a.t_[i++]);
            } else if (which > 0) {
                Term t = b.t_[j++];
                if (subtract) t.c = -t.c;
                p.t_.push_back(std::move(t));
            } else {
                Rational c = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!c.is_zero()) p.t_.push_back({c, a.t_[i].m});
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> t_;
};

// --- text format -------------------------------------------------------------
// sum of terms "c*x^e*y^f"; coefficient and exponents optional where 1.

std::string poly_to_string(const MultiPoly& p, const VarTable& vt);
MultiPoly parse_poly(const std::string& text, const VarTable& vt);

inline std::string monomial_to_string(const Monomial& m, const VarTable& vt) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += vt.name(i);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

inline std::string poly_to_string(const MultiPoly& p, const VarTable& vt) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational mag = t.c.abs();
        if (first) {
            if (t.c.sign() < 0) out += "-";
            first = false;
        } else {
            out += t.c.sign() < 0 ? " - " : " + ";
        }
        std::string ms = monomial_to_string(t.m, vt);
        if (ms.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += ms;
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    const std::string& s;
    const VarTable& vt;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }
    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        auto alpha = [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
        };
        auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
        if (pos >= s.size() || !alpha(s[pos])) fail("expected variable name");
        ++pos;
        while (pos < s.size() && alnum(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }

    // factor := integer [ '/' integer ] | name [ '^' integer ]
    void read_factor(Rational& coeff, Monomial& mono) {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            std::string num = read_integer();
            std::string den = "1";
            if (eat('/')) den = read_integer();
            coeff *= Rational::parse(num + "/" + den);
            return;
        }
        std::string name = read_name();
        auto idx = vt.index(name);
        if (!idx) fail("unknown variable '" + name + "'");
        std::uint32_t exp = 1;
        if (eat('^')) exp = static_cast<std::uint32_t>(std::stoul(read_integer()));
        mono.e[*idx] += exp;
    }

    MultiPoly run() {
        std::vector<Term> terms;
        skip_ws();
        if (pos == s.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rational coeff(sign);
            Monomial mono = Monomial::one(vt.size());
            read_factor(coeff, mono);
            while (eat('*')) read_factor(coeff, mono);
            terms.push_back({coeff, mono});
            skip_ws();
        }
        return MultiPoly::from_terms(terms);
    }
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, const VarTable& vt) {
    detail::PolyParser p{text, vt};
    return p.run();
}

}  // namespace ybx

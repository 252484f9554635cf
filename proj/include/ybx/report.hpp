#pragma once

#include "ybx/matrix.hpp"
#include "ybx/unipoly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ybx {

template <class S>
std::string matrix_str(const Matrix<S>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += m(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

template <class S>
std::string unipoly_str(const UniPoly<S>& p, const std::string& var = "lambda") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const S& c = p.coeffs()[k];
        if (is_zero(c)) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// Named findings of a checker: each entry holds the exact witness (flag,
// count, or the canonical text of a scalar / polynomial / matrix).
struct ConditionReport {
    using Value = std::variant<bool, long long, std::string>;
    struct Entry {
        std::string key;
        Value value;
    };
    std::vector<Entry> entries;

    void set(std::string key, bool v) { entries.push_back({std::move(key), Value(v)}); }
    void set(std::string key, long long v) { entries.push_back({std::move(key), Value(v)}); }
    void set(std::string key, std::string v) { entries.push_back({std::move(key), Value(std::move(v))}); }

    bool has(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return true;
        return false;
    }
    const Value& get(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return e.value;
        throw std::out_of_range("ConditionReport: no entry '" + key + "'");
    }
    bool flag(const std::string& key) const { return std::get<bool>(get(key)); }
    std::string text(const std::string& key) const { return std::get<std::string>(get(key)); }
};

}  // namespace ybx

#include "ybx/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ybx::io {

namespace {

Rational rational_entry(const json& e) {
    if (e.is_string()) return Rational::parse(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
    throw std::invalid_argument("matrix entry must be an exact string or integer, got " +
                                e.dump());
}

const json& rows_of(const json& j) {
    if (j.is_array()) return j;
    if (j.is_object() && j.contains("rows")) return j.at("rows");
    throw std::invalid_argument("matrix JSON must be an array of rows or {\"rows\": ...}");
}

}  // namespace

json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const Matrix<Fp>& m) {
    std::uint32_t p = 0;
    for (const auto& e : m.entries())
        if (e.modulus()) p = e.modulus();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"modulus", p}, {"rows", std::move(rows)}};
}

Matrix<Rational> rational_matrix_from_json(const json& j) {
    const json& rows = rows_of(j);
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix JSON: expected a nonempty array of rows");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
    if (c == 0) throw std::invalid_argument("matrix JSON: rows must be nonempty arrays");
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_entry(rows[i][k]);
    }
    return m;
}

bool looks_like_fp_matrix(const json& j) { return j.is_object() && j.contains("modulus"); }

Matrix<Fp> fp_matrix_from_json(const json& j) {
    if (!looks_like_fp_matrix(j))
        throw std::invalid_argument("prime-field matrix JSON needs a top-level \"modulus\"");
    const std::uint32_t p = j.at("modulus").get<std::uint32_t>();
    const json& rows = rows_of(j);
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix JSON: expected a nonempty array of rows");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
    if (c == 0) throw std::invalid_argument("matrix JSON: rows must be nonempty arrays");
    Matrix<Fp> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t k = 0; k < c; ++k) {
            Rational q = rational_entry(rows[i][k]);
            if (q.den() != 1) {
                // exact reduction mod p: q = num/den with den invertible
                Fp num(static_cast<long long>(mpz_class(q.num() % p).get_si()), p);
                Fp den(static_cast<long long>(mpz_class(q.den() % p).get_si()), p);
                if (den.is_zero())
                    throw std::invalid_argument("matrix entry denominator divisible by modulus");
                m(i, k) = num / den;
            } else {
                m(i, k) = Fp(static_cast<long long>(mpz_class(q.num() % p).get_si()), p);
            }
        }
    }
    return m;
}

Matrix<MultiPoly> symbolic_matrix_from_json(const json& j, const VarTable& vt) {
    const json& rows = rows_of(j);
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix JSON: expected a nonempty array of rows");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
    Matrix<MultiPoly> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t k = 0; k < c; ++k) {
            const json& e = rows[i][k];
            if (e.is_number_integer())
                m(i, k) = MultiPoly::constant(Rational(e.get<long>()), vt.size());
            else if (e.is_string())
                m(i, k) = parse_poly(e.get<std::string>(), vt);
            else
                throw std::invalid_argument("symbolic matrix entries must be strings or integers");
        }
    }
    return m;
}

json polys_to_json(const std::vector<MultiPoly>& ps, const VarTable& vt) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(poly_to_string(p, vt));
    return out;
}

std::vector<MultiPoly> polys_from_json(const json& j, const VarTable& vt) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of polynomial strings");
    std::vector<MultiPoly> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("polynomials must be strings, got " + e.dump());
        out.push_back(parse_poly(e.get<std::string>(), vt));
    }
    return out;
}

json report_to_json(const ConditionReport& r) {
    json out = json::object();
    for (const auto& e : r.entries) {
        if (std::holds_alternative<bool>(e.value))
            out[e.key] = std::get<bool>(e.value);
        else if (std::holds_alternative<long long>(e.value))
            out[e.key] = std::get<long long>(e.value);
        else
            out[e.key] = std::get<std::string>(e.value);
    }
    return out;
}

json enumeration_to_json(const EnumerationReport& rep, std::size_t max_solutions) {
    json out;
    out["modulus"] = rep.p;
    out["n"] = rep.n;
    out["A"] = matrix_to_json(rep.A);
    out["B"] = matrix_to_json(rep.B);
    out["solution_count"] = rep.solution_count;
    out["kernel"] = rep.kernel_name;
    out["workers"] = rep.workers_used;
    json sols = json::array();
    const std::size_t limit = std::min(max_solutions, rep.solutions.size());
    for (std::size_t i = 0; i < limit; ++i) sols.push_back(matrix_to_json(rep.solutions[i]));
    out["solutions"] = std::move(sols);
    out["solutions_truncated"] = rep.solutions.size() > limit;
    if (!rep.classification.empty()) {
        json cls = json::array();
        for (std::size_t i = 0; i < std::min(max_solutions, rep.classification.size()); ++i)
            cls.push_back(rep.classification[i]);
        out["classification"] = std::move(cls);
        std::size_t unclassified = 0;
        for (const auto& c : rep.classification) unclassified += c == "unclassified";
        out["unclassified_count"] = unclassified;
    }
    out["property_failures"] = rep.property_failures;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + " at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace ybx::io

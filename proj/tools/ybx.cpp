// Command-line surface: verification, condition reports, polynomial-system
// generation, Groebner bases, family construction, classification, and the
// finite-field enumeration oracle. All output is exact JSON; exit code 0 on
// success, 2 when `verify` rejects a candidate, 1 on input errors.

#include "ybx/canonical.hpp"
#include "ybx/charpoly.hpp"
#include "ybx/checks.hpp"
#include "ybx/classify.hpp"
#include "ybx/equations.hpp"
#include "ybx/families.hpp"
#include "ybx/groebner.hpp"
#include "ybx/io.hpp"
#include "ybx/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ybx;
using io::json;

namespace {

int emit(const json& j, bool pretty, int status = 0) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
    return status;
}

std::vector<std::string> split_order(const std::string& order) {
    std::vector<std::string> names;
    std::stringstream ss(order);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) names.push_back(item);
    }
    return names;
}

struct MatrixInputs {
    bool prime_field = false;
    std::optional<Matrix<Rational>> qa, qb, qx;
    std::optional<Matrix<Fp>> fa, fb, fx;
};

MatrixInputs load_system(const std::string& a_path, const std::string& b_path,
                         const std::string& x_path) {
    MatrixInputs in;
    json ja = io::load_json_file(a_path), jb = io::load_json_file(b_path);
    in.prime_field = io::looks_like_fp_matrix(ja);
    if (in.prime_field != io::looks_like_fp_matrix(jb))
        throw std::invalid_argument("A and B must live in the same scalar domain");
    if (in.prime_field) {
        in.fa = io::fp_matrix_from_json(ja);
        in.fb = io::fp_matrix_from_json(jb);
    } else {
        in.qa = io::rational_matrix_from_json(ja);
        in.qb = io::rational_matrix_from_json(jb);
    }
    if (!x_path.empty()) {
        json jx = io::load_json_file(x_path);
        if (io::looks_like_fp_matrix(jx) != in.prime_field)
            throw std::invalid_argument("X must live in the same scalar domain as A, B");
        if (in.prime_field)
            in.fx = io::fp_matrix_from_json(jx);
        else
            in.qx = io::rational_matrix_from_json(jx);
    }
    return in;
}

template <class S>
json verify_json(const SystemInstance<S>& sys, const Matrix<S>& x) {
    auto [r1, r2] = residuals(sys, x);
    json out;
    out["is_solution"] = r1.is_zero() && r2.is_zero();
    out["residual_AXA_minus_XBX"] = io::matrix_to_json(r1);
    out["residual_BXB_minus_XAX"] = io::matrix_to_json(r2);
    return out;
}

template <class S>
json conditions_json(const SystemInstance<S>& sys, const std::optional<Matrix<S>>& x) {
    json out;
    out["pencils"] = io::report_to_json(pencil_conditions(sys));
    out["det_cube"] = io::report_to_json(det_cube_condition(sys));
    if (is_invertible(sys.A))
        out["eigen_pair_sum"] = io::report_to_json(eigen_pair_sum_zero(sys));
    else
        out["eigen_pair_sum"] = json{{"skipped", "A is singular"}};
    if (x) {
        bool sol = is_solution(sys, *x);
        out["is_solution"] = sol;
        out["iprime"] = io::report_to_json(iprime_check(sys, *x));
        out["sylvester_pair"] = io::report_to_json(sylvester_pair_check(sys, *x));
        out["commuting_solution"] = io::report_to_json(commuting_solution_check(sys, *x));
        if (sol) {
            out["kernel_lemmas"] = io::report_to_json(kernel_lemma_checks(sys, *x));
            json powers = json::object();
            for (unsigned long k = 1; k <= 4; ++k)
                powers["k" + std::to_string(k)] = power_identity_check(sys, *x, k);
            out["power_identity"] = powers;
            out["charpoly_annihilation"] = charpoly_annihilation(sys, *x);
            out["det_cube_with_X"] = io::report_to_json(det_cube_condition(sys, *x));
            if (is_invertible(sys.A) && is_invertible(sys.B) && is_invertible(*x))
                out["spectrum_square"] = spectrum_square_check(sys, *x);
        }
    }
    return out;
}

std::pair<VarTable, std::vector<MultiPoly>> equations_from_file(const std::string& path,
                                                                const std::string& order) {
    json sysj = io::load_json_file(path);
    if (!sysj.contains("A") || !sysj.contains("B"))
        throw std::invalid_argument("system file needs \"A\" and \"B\"");
    std::vector<std::string> names = split_order(order);
    if (names.empty() && sysj.contains("vars")) {
        for (const auto& v : sysj["vars"]) names.push_back(v.get<std::string>());
        if (sysj.contains("params"))
            for (const auto& v : sysj["params"]) names.push_back(v.get<std::string>());
    }
    if (names.empty()) throw std::invalid_argument("no variable order given (use --order)");
    VarTable vt(names);
    Matrix<MultiPoly> a = io::symbolic_matrix_from_json(sysj["A"], vt);
    Matrix<MultiPoly> b = io::symbolic_matrix_from_json(sysj["B"], vt);
    if (!a.square() || a.rows() != b.rows())
        throw std::invalid_argument("A, B must be square of equal size");
    const std::size_t n2 = a.rows() * a.rows();
    if (names.size() < n2)
        throw std::invalid_argument("variable order must list at least n^2 names");
    // coefficient entries may only involve the parameter (trailing) names
    for (const Matrix<MultiPoly>* m : {&a, &b})
        for (const auto& e : m->entries())
            for (const auto& t : e.terms())
                for (std::size_t v = 0; v < n2; ++v)
                    if (t.m.e[v])
                        throw std::invalid_argument(
                            "coefficient matrices may only use parameter variables (after the "
                            "first n^2 names)");
    return {vt, equations_from_symbolic(a, b, vt)};
}

template <class S>
FamilyParams<S> params_from_json(const json& j);

template <>
FamilyParams<Rational> params_from_json<Rational>(const json& j) {
    FamilyParams<Rational> p;
    if (j.contains("form")) p.form = j["form"].get<std::size_t>();
    auto mat = [&](const char* k) -> std::optional<Matrix<Rational>> {
        if (!j.contains(k)) return std::nullopt;
        return io::rational_matrix_from_json(j[k]);
    };
    p.C = mat("C");
    p.D = mat("D");
    p.Y2 = mat("Y2");
    p.U = mat("U");
    p.V = mat("V");
    p.U1 = mat("U1");
    p.U2 = mat("U2");
    p.Z = mat("Z");
    p.W = mat("W");
    auto scal = [&](const char* k) -> std::optional<Rational> {
        if (!j.contains(k)) return std::nullopt;
        if (j[k].is_number_integer()) return Rational(j[k].get<long>());
        return Rational::parse(j[k].get<std::string>());
    };
    p.a = scal("a");
    p.b = scal("b");
    p.c = scal("c");
    p.d = scal("d");
    p.alpha = scal("alpha");
    p.beta = scal("beta");
    p.sqrt_param = scal("sqrt_param");
    return p;
}

int run_family(const std::string& case_tag, const std::string& params_path, bool pretty) {
    auto fc = family_from_tag(case_tag);
    if (!fc) throw std::invalid_argument("unknown family case: " + case_tag);
    json pj = io::load_json_file(params_path);
    FamilyParams<Rational> params = params_from_json<Rational>(pj);

    SystemInstance<Rational> sys(Matrix<Rational>(1, 1), Matrix<Rational>(1, 1));
    Matrix<Rational> x(1, 1);
    switch (*fc) {
        case FamilyCase::T41_i:
        case FamilyCase::T41_ii:
        case FamilyCase::T41_iii:
        case FamilyCase::T41_iv:
        case FamilyCase::T42_i:
        case FamilyCase::T42_ii: {
            const std::size_t n = pj.at("n").get<std::size_t>();
            const std::size_t r = pj.at("r").get<std::size_t>();
            const std::size_t s =
                pj.contains("s") ? pj.at("s").get<std::size_t>() : n - r;
            if (!(r >= 1 && s >= 1 && r + s <= n))
                throw std::invalid_argument("need 1 <= r, 1 <= s, r + s <= n");
            Matrix<Rational> a(n, n), b(n, n);
            for (std::size_t i = 0; i < r; ++i) a(i, i) = Rational(1);
            for (std::size_t i = 0; i < s; ++i) b(r + i, r + i) = Rational(1);
            sys = SystemInstance<Rational>(std::move(a), std::move(b));
            x = (*fc == FamilyCase::T42_i || *fc == FamilyCase::T42_ii)
                    ? construct_thm42(sys, *fc, params)
                    : construct_thm41(sys, *fc, params);
            break;
        }
        default: {
            Constructed2x2<Rational> made = construct_2x2(*fc, params);
            sys = std::move(made.sys);
            x = std::move(made.X);
            break;
        }
    }
    auto [r1, r2] = residuals(sys, x);
    json out;
    out["case"] = case_tag;
    out["A"] = io::matrix_to_json(sys.A);
    out["B"] = io::matrix_to_json(sys.B);
    out["X"] = io::matrix_to_json(x);
    out["certificate"] = {{"residual_AXA_minus_XBX", io::matrix_to_json(r1)},
                          {"residual_BXB_minus_XAX", io::matrix_to_json(r2)},
                          {"is_solution", r1.is_zero() && r2.is_zero()}};
    return emit(out, pretty);
}

template <class S>
json classify_json(const SystemInstance<S>& sys, const Matrix<S>& x) {
    json out;
    if (!is_solution(sys, x)) {
        out["case"] = nullptr;
        out["note"] = "X is not a solution";
        return out;
    }
    auto cls = family_covers(sys, x);
    if (!cls) {
        out["case"] = nullptr;
        return out;
    }
    out["case"] = family_tag(cls->tag);
    out["details"] = io::report_to_json(cls->details);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the coupled matrix equations XAX = BXB, XBX = AXA"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string a_path, b_path, x_path, system_path, polys_path, order, case_tag, params_path;
    std::string kernel_mode = "auto";
    unsigned workers = 0;
    std::size_t eliminate_keep = static_cast<std::size_t>(-1);
    std::size_t max_solutions = 10000;
    bool do_classify = false;

    auto* verify = app.add_subcommand("verify", "check a candidate solution exactly");
    verify->add_option("--A", a_path)->required();
    verify->add_option("--B", b_path)->required();
    verify->add_option("--X", x_path)->required();

    auto* conditions = app.add_subcommand("conditions", "necessary-condition report");
    conditions->add_option("--A", a_path)->required();
    conditions->add_option("--B", b_path)->required();
    conditions->add_option("--X", x_path);

    auto* equations = app.add_subcommand("equations", "entry polynomials of the residuals");
    equations->add_option("--system", system_path)->required();
    equations->add_option("--order", order, "comma-separated variables, X entries first");

    auto* groebner_cmd = app.add_subcommand("groebner", "reduced lex Groebner basis");
    groebner_cmd->add_option("--system", system_path);
    groebner_cmd->add_option("--polys", polys_path);
    groebner_cmd->add_option("--order", order);
    groebner_cmd->add_option("--eliminate", eliminate_keep,
                             "also report generators in the last K variables");

    auto* family = app.add_subcommand("family", "construct a catalogued solution family member");
    family->add_option("--case", case_tag)->required();
    family->add_option("--params", params_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive F_p solution enumeration");
    enumerate->add_option("--A", a_path)->required();
    enumerate->add_option("--B", b_path)->required();
    enumerate->add_option("--workers", workers, "parallel workers (default YBX_WORKERS or 1)");
    enumerate->add_option("--kernel", kernel_mode)->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    enumerate->add_flag("--classify", do_classify, "classify solutions and run the identity suite");
    enumerate->add_option("--max-solutions", max_solutions, "cap solutions in the output");

    auto* classify = app.add_subcommand("classify", "identify the family case of a solution");
    classify->add_option("--A", a_path)->required();
    classify->add_option("--B", b_path)->required();
    classify->add_option("--X", x_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            MatrixInputs in = load_system(a_path, b_path, x_path);
            json out = in.prime_field
                           ? verify_json(SystemInstance<Fp>(*in.fa, *in.fb), *in.fx)
                           : verify_json(SystemInstance<Rational>(*in.qa, *in.qb), *in.qx);
            return emit(out, pretty, out["is_solution"].get<bool>() ? 0 : 2);
        }
        if (conditions->parsed()) {
            MatrixInputs in = load_system(a_path, b_path, x_path);
            json out = in.prime_field
                           ? conditions_json(SystemInstance<Fp>(*in.fa, *in.fb), in.fx)
                           : conditions_json(SystemInstance<Rational>(*in.qa, *in.qb), in.qx);
            return emit(out, pretty);
        }
        if (equations->parsed()) {
            auto [vt, eqs] = equations_from_file(system_path, order);
            json out;
            out["vars"] = vt.names();
            out["polynomials"] = io::polys_to_json(eqs, vt);
            return emit(out, pretty);
        }
        if (groebner_cmd->parsed()) {
            VarTable vt;
            std::vector<MultiPoly> gens;
            if (!system_path.empty()) {
                std::tie(vt, gens) = equations_from_file(system_path, order);
            } else if (!polys_path.empty()) {
                json pj = io::load_json_file(polys_path);
                std::vector<std::string> names = split_order(order);
                if (names.empty() && pj.contains("vars"))
                    for (const auto& v : pj["vars"]) names.push_back(v.get<std::string>());
                if (names.empty())
                    throw std::invalid_argument("no variable order given (use --order)");
                vt = VarTable(names);
                gens = io::polys_from_json(pj.contains("polys") ? pj["polys"] : pj, vt);
            } else {
                throw std::invalid_argument("groebner needs --system or --polys");
            }
            GroebnerBasis gb = buchberger(gens, vt);
            json out;
            out["vars"] = vt.names();
            out["generator_count"] = gens.size();
            out["basis"] = io::polys_to_json(gb.gens, vt);
            if (eliminate_keep != static_cast<std::size_t>(-1))
                out["eliminated"] = io::polys_to_json(eliminate(gb, eliminate_keep).gens, vt);
            return emit(out, pretty);
        }
        if (family->parsed()) return run_family(case_tag, params_path, pretty);
        if (enumerate->parsed()) {
            MatrixInputs in = load_system(a_path, b_path, "");
            if (!in.prime_field)
                throw std::invalid_argument("enumerate needs prime-field matrices (\"modulus\")");
            OracleOptions opts;
            opts.workers = workers;
            opts.kernel = kernel_mode == "scalar"  ? kern::KernelMode::Scalar
                          : kernel_mode == "avx2" ? kern::KernelMode::Avx2
                                                  : kern::KernelMode::Auto;
            EnumerationReport rep = enumerate_solutions(*in.fa, *in.fb, opts);
            if (do_classify) cross_validate(rep);
            return emit(io::enumeration_to_json(rep, max_solutions), pretty);
        }
        if (classify->parsed()) {
            MatrixInputs in = load_system(a_path, b_path, x_path);
            json out = in.prime_field
                           ? classify_json(SystemInstance<Fp>(*in.fa, *in.fb), *in.fx)
                           : classify_json(SystemInstance<Rational>(*in.qa, *in.qb), *in.qx);
            return emit(out, pretty);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

#include "ybx/oracle.hpp"

#include "ybx/charpoly.hpp"
#include "ybx/checks.hpp"
#include "ybx/classify.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ybx {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("YBX_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    return 1;
}

// Candidates of one work unit share the first row of X (the leading n digits
// of the candidate index); units are merged in index order, so the global
// solution order is independent of the worker count.
struct UnitResult {
    std::vector<std::vector<std::uint16_t>> entries;
};

void scan_unit(const kern::Kernel& kernel, const std::uint16_t* a, const std::uint16_t* b,
               std::uint32_t n, std::uint32_t p, std::uint64_t unit_index,
               std::uint64_t unit_size, UnitResult& out) {
    const std::uint32_t n2 = n * n;
    std::vector<std::uint16_t> digits(n2, 0);
    // seed the leading digits from the unit index
    std::uint64_t w = unit_index;
    for (std::uint32_t e = n; e-- > 0;) {
        digits[e] = static_cast<std::uint16_t>(w % p);
        w /= p;
    }

    std::vector<std::uint16_t> lanes(static_cast<std::size_t>(n2) * kern::kBatch);
    std::uint64_t done = 0;
    while (done < unit_size) {
        const std::uint32_t count =
            static_cast<std::uint32_t>(std::min<std::uint64_t>(kern::kBatch, unit_size - done));
        for (std::uint32_t t = 0; t < count; ++t) {
            for (std::uint32_t e = 0; e < n2; ++e) lanes[e * kern::kBatch + t] = digits[e];
            // odometer step over the trailing n2 - n digits
            for (std::uint32_t e = n2; e-- > n;) {
                if (++digits[e] < p) break;
                digits[e] = 0;
            }
        }
        for (std::uint32_t t = count; t < kern::kBatch; ++t)
            for (std::uint32_t e = 0; e < n2; ++e) lanes[e * kern::kBatch + t] = 0;

        kern::BatchArgs args{lanes.data(), kern::kBatch, a, b, n, p, count};
        std::uint32_t mask = kernel.fn(args);
        while (mask) {
            std::uint32_t t = static_cast<std::uint32_t>(__builtin_ctz(mask));
            mask &= mask - 1;
            std::vector<std::uint16_t> sol(n2);
            for (std::uint32_t e = 0; e < n2; ++e) sol[e] = lanes[e * kern::kBatch + t];
            out.entries.push_back(std::move(sol));
        }
        done += count;
    }
}

}  // namespace

EnumerationReport enumerate_solutions(const Matrix<Fp>& a, const Matrix<Fp>& b,
                                      const OracleOptions& opts) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw std::invalid_argument("enumerate_solutions: A, B must be square of equal size");
    const std::uint32_t n = static_cast<std::uint32_t>(a.rows());
    std::uint32_t p = 0;
    for (const auto& e : a.entries())
        if (e.modulus()) p = e.modulus();
    for (const auto& e : b.entries()) {
        if (e.modulus() && p && e.modulus() != p)
            throw std::invalid_argument("enumerate_solutions: mixed moduli");
        if (e.modulus()) p = e.modulus();
    }
    if (p == 0) throw std::invalid_argument("enumerate_solutions: modulus not determined");
    if (!(n <= 2 || (n == 3 && p <= 5)))
        throw std::invalid_argument(
            "enumerate_solutions: search-space bound exceeded (n <= 2 for p <= 13, n = 3 for p <= 5)");

    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    std::vector<std::uint16_t> av(n2), bv(n2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            av[i * n + j] = static_cast<std::uint16_t>(a(i, j).value());
            bv[i * n + j] = static_cast<std::uint16_t>(b(i, j).value());
        }

    kern::Kernel kernel = kern::select_kernel(opts.kernel);
    const unsigned workers = resolve_workers(opts.workers);
    const std::uint64_t units = ipow(p, n);
    const std::uint64_t unit_size = ipow(p, n * n - n);

    std::vector<UnitResult> results(units);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (;;) {
            std::uint64_t w = next.fetch_add(1);
            if (w >= units) return;
            scan_unit(kernel, av.data(), bv.data(), n, p, w, unit_size, results[w]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    EnumerationReport rep;
    rep.p = p;
    rep.n = n;
    rep.A = a;
    rep.B = b;
    rep.kernel_name = kernel.name;
    rep.workers_used = workers;
    for (auto& unit : results)
        for (auto& sol : unit.entries) {
            Matrix<Fp> x(n, n);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j) x(i, j) = Fp(sol[i * n + j], p);
            rep.solutions.push_back(std::move(x));
        }
    rep.solution_count = rep.solutions.size();
    return rep;
}

void cross_validate(EnumerationReport& rep) {
    SystemInstance<Fp> sys(rep.A, rep.B);
    rep.classification.clear();
    rep.property_failures.clear();
    const bool inv_a = is_invertible(rep.A), inv_b = is_invertible(rep.B);
    for (std::size_t idx = 0; idx < rep.solutions.size(); ++idx) {
        const Matrix<Fp>& x = rep.solutions[idx];
        auto cls = family_covers(sys, x);
        rep.classification.push_back(cls ? family_tag(cls->tag) : "unclassified");
        auto fail = [&](const std::string& what) {
            rep.property_failures.push_back("solution " + std::to_string(idx) + ": " + what);
        };
        for (unsigned long k = 1; k <= 4; ++k)
            if (!power_identity_check(sys, x, k))
                fail("power identity k=" + std::to_string(k));
        if (!charpoly_annihilation(sys, x)) fail("charpoly annihilation");
        ConditionReport kl = kernel_lemma_checks(sys, x);
        if (kl.flag("mixed_singularity_applies") && !kl.flag("solution_singular"))
            fail("mixed singularity: nonsingular solution exists");
        if (kl.has("kernel_alternative_A_holds") && !kl.flag("kernel_alternative_A_holds"))
            fail("kernel alternative (A singular)");
        if (kl.has("kernel_alternative_B_holds") && !kl.flag("kernel_alternative_B_holds"))
            fail("kernel alternative (B singular)");
        if (kl.has("kernel_killed_by_AB_images") && !kl.flag("kernel_killed_by_AB_images"))
            fail("kernel image annihilation");
        if (inv_a && inv_b && is_invertible(x)) {
            Fp da = det(rep.A), db = det(rep.B), dx = det(x);
            if (dx * db != da * da) fail("det(X)det(B) != det(A^2)");
            if (dx * da != db * db) fail("det(X)det(A) != det(B^2)");
            if (char_poly(x * x) != char_poly(rep.B * rep.A))
                fail("char_poly(X^2) != char_poly(BA)");
        }
    }
}

}  // namespace ybx

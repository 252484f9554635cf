#pragma once

#include "ybx/fp.hpp"
#include "ybx/kernels.hpp"
#include "ybx/matrix.hpp"
#include "ybx/system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ybx {

struct OracleOptions {
    unsigned workers = 0;  // 0: take YBX_WORKERS from the environment, else 1
    kern::KernelMode kernel = kern::KernelMode::Auto;
};

// Exhaustive enumeration result over F_p: every solution, in lexicographic
// order of the entry vector (row-major, most significant first).
struct EnumerationReport {
    std::uint32_t p = 0;
    std::size_t n = 0;
    Matrix<Fp> A, B;
    std::uint64_t solution_count = 0;
    std::vector<Matrix<Fp>> solutions;
    std::vector<std::string> classification;  // filled by cross_validate
    std::vector<std::string> property_failures;
    std::string kernel_name;
    unsigned workers_used = 1;
};

// Search-space bound: n <= 2 for any supported prime, n = 3 only for p <= 5
// (p^9 <= 1.95M candidates). Throws otherwise.
EnumerationReport enumerate_solutions(const Matrix<Fp>& a, const Matrix<Fp>& b,
                                      const OracleOptions& opts = {});

// Classify every solution through the family catalogue and run the identity
// suite (power identities k <= 4, characteristic-polynomial annihilation,
// kernel lemmas, determinant relations for nonsingular triples) on each.
// Fills `classification` and `property_failures`.
void cross_validate(EnumerationReport& report);

}  // namespace ybx

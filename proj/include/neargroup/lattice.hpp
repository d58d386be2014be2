#pragma once

#include "neargroup/cyclotomic.hpp"

#include <vector>

namespace neargroup {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
IntVector int_apply(const IntMatrix& a, const IntVector& x);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix U, D, V;
    std::size_t rank = 0;
    IntVector invariants;  // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

// Row-style Hermite normal form: nonzero rows, echelon, positive pivots,
// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t cols);

// Canonical representative of v modulo the row lattice of a full-rank HNF.
IntVector reduce_mod_hnf(IntVector v, const IntMatrix& hnf);

// Basis (as rows) of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

// Solutions of A x = b (mod m): x0 + span of generators (+ m Z^n).
struct ModularSolution {
    bool solvable = false;
    IntVector particular;
    IntMatrix generators;  // rows; together with m*e_i they generate the kernel mod m
    // Enumeration data: x = V y (mod m) with y_i = base_i + t * step_i, t in [0, count_i).
    IntMatrix V;
    IntVector base, step, count;
};
ModularSolution solve_mod(const IntMatrix& a, const IntVector& b, std::size_t cols, const Integer& m);

// All solutions mod m, reduced into [0, m). Throws if more than `limit`.
std::vector<IntVector> enumerate_mod(const ModularSolution& s, const Integer& m, std::size_t limit);

}  // namespace neargroup

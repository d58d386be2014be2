#include "neargroup/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace neargroup {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += f * a[j][c];
}

// col_i += f * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
    for (auto& row : a) row[i] += f * row[j];
}

}  // namespace

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, IntVector(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVector int_apply(const IntMatrix& a, const IntVector& x) {
    IntVector y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
    std::size_t rows = a.size();
    SmithForm s;
    s.D = a;
    for (auto& r : s.D)
        if (r.size() != cols) throw std::invalid_argument("ragged integer matrix");
    s.U = int_identity(rows);
    s.V = int_identity(cols);
    IntMatrix& D = s.D;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (!found || abs(D[i][j]) < abs(D[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D[i][t] == 0) continue;
                Integer q = floor_div(D[i][t], D[t][t]);
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D[t][j] == 0) continue;
                Integer q = floor_div(D[t][j], D[t][t]);
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(D, t, bi);
                swap_rows(s.U, t, bi);
                swap_cols(D, t, bj);
                swap_cols(s.V, t, bj);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and redo.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (mod_pos(D[i][j], abs(D[t][t])) != 0) {
                        add_row(D, t, i, 1);
                        add_row(s.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : s.U[t]) x = -x;
        }
        s.invariants.push_back(D[t][t]);
        ++t;
    }
    s.rank = t;
    return s;
}

IntMatrix hermite_normal_form(const IntMatrix& rows_in, std::size_t cols) {
    IntMatrix a = rows_in;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        for (;;) {
            std::size_t best = a.size();
            for (std::size_t i = r; i < a.size(); ++i)
                if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == a.size()) break;
            swap_rows(a, r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                add_row(a, i, r, -floor_div(a[i][c], a[r][c]));
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r >= a.size() || a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) add_row(a, i, r, -floor_div(a[i][c], a[r][c]));
        ++r;
    }
    a.resize(r);
    return a;
}

IntVector reduce_mod_hnf(IntVector v, const IntMatrix& hnf) {
    for (const auto& row : hnf) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        Integer q = floor_div(v[c], row[c]);
        if (q != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return v;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
    SmithForm s = smith_normal_form(a, cols);
    IntMatrix basis;
    for (std::size_t j = s.rank; j < cols; ++j) {
        IntVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = s.V[i][j];
        basis.push_back(v);
    }
    return basis;
}

ModularSolution solve_mod(const IntMatrix& a, const IntVector& b, std::size_t cols, const Integer& m) {
    ModularSolution out;
    SmithForm s = smith_normal_form(a, cols);
    IntVector c = int_apply(s.U, b);
    out.V = s.V;
    out.base.assign(cols, 0);
    out.step.assign(cols, 1);
    out.count.assign(cols, m);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            Integer d = s.D[i][i];
            Integer g = gcd(d, m);
            if (mod_pos(c[i], g) != 0) return out;
            Integer mg = m / g, inv = 0;
            if (mg > 1) mpz_invert(inv.get_mpz_t(), Integer(mod_pos(d / g, mg)).get_mpz_t(), mg.get_mpz_t());
            out.base[i] = mod_pos((c[i] / g) * inv, mg);
            out.step[i] = mg;
            out.count[i] = g;
        } else if (mod_pos(c[i], m) != 0) {
            return out;
        }
    }
    out.solvable = true;
    IntVector x0 = int_apply(s.V, out.base);
    for (auto& x : x0) x = mod_pos(x, m);
    out.particular = x0;
    for (std::size_t i = 0; i < cols; ++i) {
        if (out.count[i] <= 1) continue;
        IntVector g(cols);
        for (std::size_t r = 0; r < cols; ++r) g[r] = mod_pos(s.V[r][i] * out.step[i], m);
        out.generators.push_back(g);
    }
    return out;
}

std::vector<IntVector> enumerate_mod(const ModularSolution& s, const Integer& m, std::size_t limit) {
    std::vector<IntVector> result;
    if (!s.solvable) return result;
    std::size_t n = s.base.size();
    Integer total = 1;
    for (const auto& c : s.count) total *= c;
    if (total > Integer(static_cast<unsigned long>(limit)))
        throw std::length_error("too many modular solutions to enumerate");
    std::vector<Integer> t(n, 0);
    for (;;) {
        IntVector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = s.base[i] + t[i] * s.step[i];
        IntVector x = int_apply(s.V, y);
        for (auto& v : x) v = mod_pos(v, m);
        result.push_back(x);
        std::size_t i = 0;
        while (i < n) {
            if (++t[i] < s.count[i]) break;
            t[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return result;
}

}  // namespace neargroup

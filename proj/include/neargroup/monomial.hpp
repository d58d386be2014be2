#pragma once

#include "neargroup/associators.hpp"
#include "neargroup/lattice.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace neargroup {

// A scalar unknown of the primitive data or of a braiding.
struct Symbol {
    enum Kind { Delta, Xi, CEps, N, Sigma3, Psi };
    Kind kind;
    int a = 0, b = 0;
    bool operator<(const Symbol& o) const {
        return std::tie(kind, a, b) < std::tie(o.kind, o.a, o.b);
    }
    bool operator==(const Symbol& o) const { return kind == o.kind && a == o.a && b == o.b; }
    std::string name() const;
};

using Monomial = std::map<Symbol, int>;  // symbol -> exponent

// lhs = rhs, both monomials.
struct MonomialEquation {
    std::string family;
    std::string indices;
    Monomial lhs, rhs;
    // lhs / rhs as a single monomial.
    Monomial ratio() const;
    std::string to_string() const;
};

using Valuation = std::function<Cyclotomic(const Symbol&)>;
Cyclotomic evaluate(const Monomial& m, const Valuation& v);

// Builder that drops an instance when any index argument is epsilon or an
// N(r, s) has r*s = epsilon.
class EquationBuilder {
public:
    explicit EquationBuilder(const IndexAlgebra& idx) : idx_(&idx) {}
    EquationBuilder& xi(int i, int e = 1) { return add(Symbol::Xi, i, 0, e); }
    EquationBuilder& c(int i, int e = 1) { return add(Symbol::CEps, i, 0, e); }
    EquationBuilder& n(int r, int s, int e = 1);
    EquationBuilder& psi(int i, int e = 1) { return add(Symbol::Psi, i, 0, e); }
    EquationBuilder& sigma3(int e = 1) { return add(Symbol::Sigma3, 0, 0, e, true); }
    EquationBuilder& delta(int e = 1) { return add(Symbol::Delta, 0, 0, e, true); }
    // Subsequent factors go to the right-hand side.
    EquationBuilder& eq() {
        side_ = &rhs_;
        return *this;
    }
    // Appends the equation unless it was invalidated, then resets.
    void emit(std::vector<MonomialEquation>& out, const std::string& family, const std::string& indices);

private:
    EquationBuilder& add(Symbol::Kind kind, int a, int b, int e, bool scalar = false);
    const IndexAlgebra* idx_;
    Monomial lhs_, rhs_;
    Monomial* side_ = &lhs_;
    bool valid_ = true;
};

// The mmmm/m pentagon in primitive form: functional equations in
// (delta, xi, c_eps, N) for i, j = 1..k, plus the all-m block below.
std::vector<MonomialEquation> functional_equations(const IndexAlgebra& idx);
// Entries of the mmmm/m block whose left and right trees both have m at
// every inner edge, read off the tree composition (family "mmmm/m:NNN").
void append_mm_block(const IndexAlgebra& idx, std::vector<MonomialEquation>& out);

// Linear system over Z for equations whose only unknowns are `unknowns`;
// every other symbol is replaced through `constant`, which must return a
// root of unity. Row e reads sum_v A[e][v] y_v = rhs_e / modulus (mod 1),
// with each unknown written as exp(2 pi i y_v).
struct LinearizedSystem {
    std::vector<Symbol> unknowns;
    IntMatrix A;
    std::vector<std::pair<long, long>> rhs;  // (numerator, modulus), value zeta_modulus^numerator
    std::vector<std::string> labels;
};
LinearizedSystem linearize(const std::vector<MonomialEquation>& eqs, const std::vector<Symbol>& unknowns,
                           const std::function<std::optional<Cyclotomic>(const Symbol&)>& constant);

}  // namespace neargroup

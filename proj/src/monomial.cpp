#include "neargroup/monomial.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace neargroup {

std::string Symbol::name() const {
    switch (kind) {
        case Delta: return "delta";
        case Xi: return "xi(" + std::to_string(a) + ")";
        case CEps: return "c(" + std::to_string(a) + ")";
        case N: return "N(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Sigma3: return "sigma3";
        case Psi: return "psi(" + std::to_string(a) + ")";
    }
    return "?";
}

Monomial MonomialEquation::ratio() const {
    Monomial out = lhs;
    for (const auto& [s, e] : rhs) out[s] -= e;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

namespace {

std::string monomial_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : m) {
        if (!first) os << "*";
        first = false;
        os << s.name();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace

std::string MonomialEquation::to_string() const { return monomial_string(lhs) + " = " + monomial_string(rhs); }

Cyclotomic evaluate(const Monomial& m, const Valuation& v) {
    Cyclotomic out(1);
    for (const auto& [s, e] : m) out *= v(s).pow(e);
    return out;
}

EquationBuilder& EquationBuilder::add(Symbol::Kind kind, int a, int b, int e, bool scalar) {
    if (!scalar && a == 0) valid_ = false;
    if (e != 0) (*side_)[Symbol{kind, a, b}] += e;
    return *this;
}

EquationBuilder& EquationBuilder::n(int r, int s, int e) {
    if (r == 0 || s == 0 || idx_->star(r, s) == 0) {
        valid_ = false;
        return *this;
    }
    return add(Symbol::N, r, s, e);
}

void EquationBuilder::emit(std::vector<MonomialEquation>& out, const std::string& family, const std::string& indices) {
    if (valid_) {
        for (auto* m : {&lhs_, &rhs_})
            for (auto it = m->begin(); it != m->end();) it = it->second == 0 ? m->erase(it) : std::next(it);
        out.push_back(MonomialEquation{family, indices, lhs_, rhs_});
    }
    lhs_.clear();
    rhs_.clear();
    side_ = &lhs_;
    valid_ = true;
}

std::vector<MonomialEquation> functional_equations(const IndexAlgebra& I) {
    std::vector<MonomialEquation> out;
    int k = I.k();
    auto S = [&](int a, int b) { return I.star(a, b); };
    auto inv = [&](int a) { return I.star_inv(a); };
    auto P = [&](int a) { return I.pi(a); };
    auto Pi = [&](int a) { return I.pi_inv(a); };
    const std::string fam = "mmmm/m:";
    EquationBuilder b(I);
    for (int i = 1; i <= k; ++i) {
        std::string ix = "i=" + std::to_string(i);
        b.c(i).c(Pi(i), -1).eq().delta().xi(inv(i)).xi(P(inv(i))).xi(Pi(i));
        b.emit(out, fam + "c-ratio", ix);
        b.xi(i).c(i).eq().delta().xi(P(inv(i))).c(P(inv(i)));
        b.emit(out, fam + "xi-c-flip", ix);
        b.c(i).eq().delta().c(inv(P(i)));
        b.emit(out, fam + "c-sign", ix);
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            std::string ix = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
            b.c(i).eq().c(j).n(S(i, inv(j)), j).n(S(P(j), inv(P(i))), inv(P(j)));
            b.emit(out, fam + "c-NN", ix);
            int x = S(Pi(i), P(inv(j)));
            b.xi(x).c(x).eq().xi(Pi(i)).c(Pi(i)).n(i, S(inv(i), j)).n(inv(i), j);
            b.emit(out, fam + "xi-c-NN", ix);
            int ij = S(i, j);
            b.c(i).n(i, j).eq().xi(j).c(ij).n(inv(P(ij)), P(j));
            b.emit(out, fam + "c-N-shift", ix);
            b.xi(Pi(i)).n(i, j).c(Pi(i)).eq().xi(P(S(Pi(j), P(i)))).xi(Pi(ij)).n(j, inv(ij)).c(Pi(ij));
            b.emit(out, fam + "xi-N-c", ix);
            b.c(inv(ij)).c(j, -1).xi(j, -1).eq().n(S(Pi(i), P(j)), inv(P(j))).n(Pi(i), P(j));
            b.emit(out, fam + "cc-NN", ix);
        }
    append_mm_block(I, out);
    return out;
}

void append_mm_block(const IndexAlgebra& I, std::vector<MonomialEquation>& out) {
    int k = I.k();
    // (i, j) carries the entry of column (r, s) of the N block.
    auto nsupp = [&](int i, int j, int r, int s) {
        int rs = I.star(r, s);
        return rs != 0 && i == rs && I.circ(i, j) == r;
    };
    auto mono_n = [](std::initializer_list<std::pair<int, int>> ns) {
        Monomial m;
        for (auto [r, s] : ns) m[Symbol{Symbol::N, r, s}] += 1;
        return m;
    };
    for (int v1 = 1; v1 <= k; ++v1)
        for (int v2 = 1; v2 <= k; ++v2)
            for (int v3 = 1; v3 <= k; ++v3)
                for (int u1 = 1; u1 <= k; ++u1)
                    for (int u2 = 1; u2 <= k; ++u2)
                        for (int u3 = 1; u3 <= k; ++u3) {
                            std::vector<Monomial> lhs, rhs;
                            for (int t = 1; t <= k; ++t)
                                if (nsupp(t, u1, v3, v2) && nsupp(u3, u2, t, v1)) lhs.push_back(mono_n({{v3, v2}, {t, v1}}));
                            int s2 = I.star(v2, v1);
                            if (s2 != 0)
                                for (int s1 = 1; s1 <= k; ++s1) {
                                    if (!nsupp(s2, s1, v2, v1)) continue;
                                    for (int s3 = 1; s3 <= k; ++s3)
                                        if (nsupp(u3, s3, v3, s2) && nsupp(u2, u1, s3, s1))
                                            rhs.push_back(mono_n({{v2, v1}, {v3, s2}, {s3, s1}}));
                                }
                            int p = I.pi_inv(v2);
                            if (v1 == I.star_inv(v2) && u3 == v3 && u1 == I.circ_inv(u2) && I.star(I.star(p, I.pi(u3)), u2) == 0) {
                                Monomial m;
                                m[Symbol{Symbol::CEps, u2, 0}] += 1;
                                m[Symbol{Symbol::Xi, p, 0}] -= 1;
                                m[Symbol{Symbol::CEps, p, 0}] -= 1;
                                for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
                                rhs.push_back(m);
                            }
                            if (lhs.empty() && rhs.empty()) continue;
                            if (lhs.size() != 1 || rhs.size() != 1)
                                throw std::logic_error("mmmm/m block entry is not a single monomial on each side");
                            out.push_back(MonomialEquation{"mmmm/m:NNN",
                                                           "left=(" + std::to_string(v1) + "," + std::to_string(v2) + "," +
                                                               std::to_string(v3) + ") right=(" + std::to_string(u1) + "," +
                                                               std::to_string(u2) + "," + std::to_string(u3) + ")",
                                                           lhs[0], rhs[0]});
                        }
}

LinearizedSystem linearize(const std::vector<MonomialEquation>& eqs, const std::vector<Symbol>& unknowns,
                           const std::function<std::optional<Cyclotomic>(const Symbol&)>& constant) {
    LinearizedSystem sys;
    sys.unknowns = unknowns;
    std::map<Symbol, std::size_t> pos;
    for (std::size_t v = 0; v < unknowns.size(); ++v) pos[unknowns[v]] = v;
    for (const auto& e : eqs) {
        IntVector row(unknowns.size(), 0);
        Cyclotomic c(1);
        for (const auto& [s, x] : e.ratio()) {
            auto it = pos.find(s);
            if (it != pos.end()) {
                row[it->second] += x;
                continue;
            }
            auto val = constant(s);
            if (!val) throw std::invalid_argument("no value for symbol " + s.name());
            c *= val->pow(x);
        }
        // unknowns^row * c = 1
        auto root = c.inverse().as_root_of_unity();
        if (!root) throw std::invalid_argument("constant factor is not a root of unity in " + e.family + " " + e.indices);
        sys.A.push_back(row);
        sys.rhs.emplace_back(root->second, root->first);
        sys.labels.push_back(e.family + " " + e.indices);
    }
    return sys;
}

}  // namespace neargroup

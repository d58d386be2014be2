#include "neargroup/fsymbols.hpp"

namespace neargroup {

FSymbols::FSymbols(const NearGroupData& data)
    : data_(&data), n_(data.group.order()), zero_(Cyclotomic::zero(data.order)), one_(Cyclotomic(Rational(1), data.order)) {}

std::string FSymbols::object_name(int x) const { return is_group(x) ? data_->group.element_name(x) : "m"; }

int FSymbols::mult(int a, int b, int c) const {
    const AbelianGroup& G = data_->group;
    bool ga = is_group(a), gb = is_group(b);
    if (ga && gb) return c == G.mul(a, b) ? 1 : 0;
    if (ga || gb) return c == n_ ? 1 : 0;
    return is_group(c) ? 1 : data_->k;
}

std::vector<int> FSymbols::fusion(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c <= n_; ++c)
        if (mult(a, b, c) > 0) out.push_back(c);
    return out;
}

std::vector<Tree> FSymbols::left_basis(int a, int b, int c, int d) const {
    std::vector<Tree> out;
    for (int e = 0; e <= n_; ++e) {
        int p = mult(a, b, e), q = mult(e, c, d);
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < q; ++y) out.push_back(Tree{e, x, y});
    }
    return out;
}

std::vector<Tree> FSymbols::right_basis(int a, int b, int c, int d) const {
    std::vector<Tree> out;
    for (int f = 0; f <= n_; ++f) {
        int p = mult(b, c, f), q = mult(a, f, d);
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < q; ++y) out.push_back(Tree{f, x, y});
    }
    return out;
}

void FSymbols::for_each_F(int a, int b, int c, int d, const Tree& L,
                          const std::function<void(const Tree&, const Cyclotomic&)>& f) const {
    const NearGroupData& D = *data_;
    const AbelianGroup& G = D.group;
    int k = D.k;
    bool ga = is_group(a), gb = is_group(b), gc = is_group(c), gd = is_group(d);
    if (mult(a, b, L.mid) <= L.top || mult(L.mid, c, d) <= L.bottom) return;
    int nm = !ga + !gb + !gc;

    // At most one m: every hom space is one-dimensional and the entry is 1.
    if (nm <= 1) {
        int fmid = -1;
        for (int x = 0; x <= n_; ++x)
            if (mult(b, c, x) && mult(a, x, d)) fmid = x;
        if (fmid >= 0) f(Tree{fmid, 0, 0}, one_);
        return;
    }
    if (nm == 2) {
        if (ga) {  // g m m
            if (gd) {
                f(Tree{G.mul(G.inv(a), d), 0, 0}, one_);
            } else {
                const Matrix& g1 = D.gamma1[a];
                for (int i = 0; i < k; ++i)
                    if (!g1(i, L.bottom).is_zero()) f(Tree{n_, i, 0}, g1(i, L.bottom));
            }
        } else if (gb) {  // m g m
            if (gd) {
                f(Tree{n_, 0, 0}, one_);
            } else {
                const Matrix& g2 = D.gamma2[b];
                for (int i = 0; i < k; ++i)
                    if (!g2(i, L.bottom).is_zero()) f(Tree{n_, 0, i}, g2(i, L.bottom));
            }
        } else {  // m m g
            if (gd) {
                f(Tree{n_, 0, 0}, one_);
            } else {
                const Matrix& g3 = D.gamma3[c];
                for (int i = 0; i < k; ++i)
                    if (!g3(i, L.top).is_zero()) f(Tree{n_, 0, i}, g3(i, L.top));
            }
        }
        return;
    }
    // m m m
    if (gd) {
        const Matrix& lam = D.lambda[d];
        for (int i = 0; i < k; ++i)
            if (!lam(i, L.top).is_zero()) f(Tree{n_, i, 0}, lam(i, L.top));
        return;
    }
    int n = n_;
    // Column of mu: group label e, or the pair (beta, alpha).
    if (is_group(L.mid)) {
        int col = L.mid;
        for (int g = 0; g < n; ++g)
            if (!D.M(g, col).is_zero()) f(Tree{g, 0, 0}, D.M(g, col));
        for (int r = 0; r < k * k; ++r)
            if (!D.C(r, col).is_zero()) f(Tree{n, r % k, r / k}, D.C(r, col));
    } else {
        int col = L.bottom * k + L.top;
        for (int g = 0; g < n; ++g)
            if (!D.R(g, col).is_zero()) f(Tree{g, 0, 0}, D.R(g, col));
        for (int r = 0; r < k * k; ++r)
            if (!D.N(r, col).is_zero()) f(Tree{n, r % k, r / k}, D.N(r, col));
    }
}

Cyclotomic FSymbols::F(int a, int b, int c, int d, const Tree& left, const Tree& right) const {
    Cyclotomic out = zero_;
    for_each_F(a, b, c, d, left, [&](const Tree& t, const Cyclotomic& v) {
        if (t == right) out = v;
    });
    return out;
}

}  // namespace neargroup

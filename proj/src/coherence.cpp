#include "neargroup/coherence.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neargroup {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Entrywise comparison of a matrix equation.
void check_matrix(VerificationReport& rep, const std::string& fam, const std::string& ix, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.check(fam, false, ix, "shape mismatch", "");
        return;
    }
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
            bool ok = lhs(r, c) == rhs(r, c);
            rep.family(fam).checked++;
            if (!ok)
                rep.fail(fam, ix + " entry=(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")", lhs(r, c).to_string(),
                         rhs(r, c).to_string());
        }
}

Matrix row_of(const Matrix& m, std::size_t r) {
    Matrix out(1, m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out(0, c) = m(r, c);
    return out;
}

Matrix col_of(const Matrix& m, std::size_t c) {
    Matrix out(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, 0) = m(r, c);
    return out;
}

std::string pair_name(int k, std::size_t p) { return "(" + std::to_string(p / k + 1) + "," + std::to_string(p % k + 1) + ")"; }

}  // namespace

VerificationReport verify_gamma_lambda(const NearGroupData& d) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.title = "gamma/lambda laws";
    const AbelianGroup& G = d.group;
    int n = G.order();
    auto nm = [&](int g) { return G.element_name(g); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::string ix = "a=" + nm(a) + ",b=" + nm(b);
            int ab = G.mul(a, b);
            check_matrix(rep, "mmab/m", ix, d.gamma3[b] * d.gamma3[a], d.gamma3[ab]);
            check_matrix(rep, "abmm/m", ix, d.gamma1[b] * d.gamma1[a], d.gamma1[ab]);
            check_matrix(rep, "mabm/m", ix, d.gamma2[b] * d.gamma2[a], d.gamma2[ab]);
            check_matrix(rep, "ammb/m", ix, d.gamma3[b] * d.gamma1[a], d.gamma1[a] * d.gamma3[b]);
            check_matrix(rep, "mamb/m", ix, d.gamma3[b] * d.gamma2[a], d.gamma2[a] * d.gamma3[b]);
            check_matrix(rep, "ambm/m", ix, d.gamma2[b] * d.gamma1[a], d.gamma1[a] * d.gamma2[b]);
        }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            std::string ix = "g=" + nm(g) + ",h=" + nm(h);
            int hg = G.mul(h, g);
            check_matrix(rep, "mmmg/hg", ix, d.lambda[hg], d.gamma3[g] * d.lambda[h]);
            check_matrix(rep, "gmmm/hg", ix, d.lambda[hg], d.lambda[h] * d.gamma1[g]);
            check_matrix(rep, "mmgm/h", ix, d.gamma2[g] * d.lambda[h] * d.gamma3[g], d.lambda[h]);
            check_matrix(rep, "mgmm/h", ix, d.gamma1[g] * d.lambda[h] * d.gamma2[g], d.lambda[h]);
        }
    rep.seconds = elapsed(t0);
    return rep;
}

VerificationReport verify_mu_symmetries(const NearGroupData& d) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.title = "mu symmetries";
    const AbelianGroup& G = d.group;
    int n = G.order(), k = d.k;
    Matrix I = Matrix::identity(k, d.order);
    auto nm = [&](int g) { return G.element_name(g); };
    auto scalar = [&](const std::string& fam, const std::string& ix, const Cyclotomic& l, const Cyclotomic& r) {
        rep.check(fam, l == r, ix, l.to_string(), r.to_string());
    };
    for (int g = 0; g < n; ++g) {
        int gi = G.inv(g);
        const Matrix &g1 = d.gamma1[g], &g2 = d.gamma2[g], &g3 = d.gamma3[g];
        Matrix g1i = inverse(g1), g2i = inverse(g2), g3i = inverse(g3);
        std::string gx = "g=" + nm(g);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::string ix = gx + ",a=" + nm(a) + ",b=" + nm(b);
                scalar("mmmg/m:M", ix, d.M(a, b), d.M(G.mul(gi, a), b));
                scalar("mmgm/m:M", ix, d.M(a, b), d.M(a, G.mul(b, gi)));
                scalar("mgmm/m:M", ix, d.M(a, b), d.M(G.mul(gi, a), b));
                scalar("gmmm/m:M", ix, d.M(a, G.mul(gi, b)), d.M(a, b));
            }
        for (int a = 0; a < n; ++a) {
            std::string ix = gx + ",a=" + nm(a);
            int ga = G.mul(gi, a);
            Matrix ra = row_of(d.R, a), rga = row_of(d.R, ga);
            Matrix ca = col_of(d.C, a), cga = col_of(d.C, ga);
            check_matrix(rep, "mmmg/m:R", ix, ra, rga * kronecker(g3i, I));
            check_matrix(rep, "mmmg/m:C", ix, ca, kronecker(g3, g3) * ca);
            check_matrix(rep, "mmgm/m:R", ix, ra * kronecker(g2, g3i), ra);
            check_matrix(rep, "mmgm/m:C", ix, cga, kronecker(I, g2) * ca);
            check_matrix(rep, "mgmm/m:R", ix, rga, ra * kronecker(I, g2));
            check_matrix(rep, "mgmm/m:C", ix, kronecker(g2i, g1) * ca, ca);
            check_matrix(rep, "gmmm/m:R", ix, ra * kronecker(g1, g1), ra);
            check_matrix(rep, "gmmm/m:C", ix, cga, kronecker(g1, I) * ca);
        }
        check_matrix(rep, "mmmg/m:N", gx, kronecker(g3, g3) * d.N, d.N * kronecker(g3, I));
        check_matrix(rep, "mmgm/m:N", gx, kronecker(I, g2) * d.N, d.N * kronecker(g2, g3i));
        check_matrix(rep, "mgmm/m:N", gx, kronecker(g2, g1i) * d.N, d.N * kronecker(I, g2));
        check_matrix(rep, "gmmm/m:N", gx, d.N * kronecker(g1, g1), kronecker(g1, I) * d.N);
    }
    rep.seconds = elapsed(t0);
    return rep;
}

VerificationReport verify_mmmm_g(const NearGroupData& d) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.title = "mmmm/g pentagon";
    const AbelianGroup& G = d.group;
    int n = G.order(), k = d.k, kk = k * k;
    Matrix mu = assemble_mu(d);
    Matrix I = Matrix::identity(k, d.order);
    Cyclotomic zero = Cyclotomic::zero(d.order), one(Rational(1), d.order);
    for (int g = 0; g < n; ++g) {
        Matrix lk = kronecker(d.lambda[g], I);
        Matrix D(n + kk, n + kk, zero);
        for (int a = 0; a < n; ++a) D(a, a) = one;
        for (int r = 0; r < kk; ++r)
            for (int c = 0; c < kk; ++c) D(n + r, n + c) = lk(r, c);
        Matrix lhs = mu * D * mu;
        for (int r = 0; r < n + kk; ++r)
            for (int c = 0; c < n + kk; ++c) {
                Cyclotomic rhs = zero;
                std::string fam = "mmmm/g:";
                std::string ix = "g=" + G.element_name(g) + ",";
                if (r < n && c < n) {
                    fam += "M";
                    if (r == G.mul(G.inv(c), g)) rhs = one;
                    ix += "a=" + G.element_name(r) + ",b=" + G.element_name(c);
                } else if (r < n) {
                    fam += "R";
                    ix += "a=" + G.element_name(r) + ",rs=" + pair_name(k, c - n);
                } else if (c < n) {
                    fam += "C";
                    ix += "ij=" + pair_name(k, r - n) + ",b=" + G.element_name(c);
                } else {
                    fam += "N";
                    int i = (r - n) / k, j = (r - n) % k, rr = (c - n) / k, s = (c - n) % k;
                    rhs = d.lambda[g](i, s) * d.lambda[g](j, rr);
                    ix += "ij=" + pair_name(k, r - n) + ",rs=" + pair_name(k, c - n);
                }
                rep.check(fam, lhs(r, c) == rhs, ix, lhs(r, c).to_string(), rhs.to_string());
            }
    }
    rep.seconds = elapsed(t0);
    return rep;
}

namespace {

VerificationReport run_functional(const IndexAlgebra& idx, const Valuation& v) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.title = "mmmm/m pentagon (primitive form)";
    for (const auto& e : functional_equations(idx)) {
        Cyclotomic l = evaluate(e.lhs, v), r = evaluate(e.rhs, v);
        rep.check(e.family, l == r, e.indices, l.to_string(), r.to_string());
    }
    rep.seconds = elapsed(t0);
    return rep;
}

}  // namespace

VerificationReport verify_functional(const NearGroupPrimitive& prim, const IndexAlgebra& idx) {
    return run_functional(idx, [&](const Symbol& s) -> Cyclotomic {
        switch (s.kind) {
            case Symbol::Delta: return Cyclotomic(prim.delta);
            case Symbol::Xi: return prim.xi.at(s.a);
            case Symbol::CEps: return prim.c_eps.at(s.a);
            case Symbol::N: return prim.n_func.at({s.a, s.b});
            default: throw std::logic_error("unexpected symbol " + s.name());
        }
    });
}

VerificationReport verify_functional(const NearGroupData& d) {
    const IndexAlgebra& idx = d.idx;
    int n = d.group.order();
    Cyclotomic delta = d.M(0, 0) * Cyclotomic(Rational(n));
    return run_functional(idx, [&](const Symbol& s) -> Cyclotomic {
        switch (s.kind) {
            case Symbol::Delta: return delta;
            case Symbol::Xi: return d.lambda[0](idx.pi(s.a) - 1, s.a - 1);
            case Symbol::CEps: return d.C(d.pair_index(s.a, idx.circ_inv(s.a)), 0);
            case Symbol::N: {
                auto [i, j] = n_position(idx, s.a, s.b);
                return d.N(d.pair_index(i, j), d.pair_index(s.a, s.b));
            }
            default: throw std::logic_error("unexpected symbol " + s.name());
        }
    });
}

NearGroupPrimitive extract_primitive(const NearGroupData& d) {
    const IndexAlgebra& idx = d.idx;
    NearGroupPrimitive p = NearGroupPrimitive::ones(idx);
    Cyclotomic delta = d.M(0, 0) * Cyclotomic(Rational(d.group.order()));
    if (delta == Cyclotomic(1)) p.delta = 1;
    else if (delta == Cyclotomic(-1)) p.delta = -1;
    else throw std::invalid_argument("M block is not +-1/|G|");
    for (int i = 1; i <= idx.k(); ++i) {
        p.xi[i] = d.lambda[0](idx.pi(i) - 1, i - 1);
        p.c_eps[i] = d.C(d.pair_index(i, idx.circ_inv(i)), 0);
    }
    for (auto& [rs, v] : p.n_func) {
        auto [i, j] = n_position(idx, rs.first, rs.second);
        v = d.N(d.pair_index(i, j), d.pair_index(rs.first, rs.second));
    }
    return p;
}

VerificationReport verify_all(const NearGroupData& d) {
    VerificationReport rep;
    rep.title = "pentagon verification";
    rep.merge(verify_gamma_lambda(d));
    rep.merge(verify_mu_symmetries(d));
    rep.merge(verify_mmmm_g(d));
    rep.merge(verify_functional(d));
    return rep;
}

// ---------------------------------------------------------------------------
// Generic oracle

namespace {

using Key = std::array<int, 5>;
using Sparse = std::map<Key, Cyclotomic>;

std::string key_string(const Key& k) {
    std::ostringstream os;
    os << "(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << "," << k[4] << ")";
    return os.str();
}

std::string word_string(const FSymbols& fs, const std::array<int, 4>& w, int e) {
    std::string s;
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + fs.object_name(w[i]);
    return s + "/" + fs.object_name(e);
}

void accumulate(Sparse& m, const Key& k, const Cyclotomic& v) {
    auto it = m.find(k);
    if (it == m.end()) m.emplace(k, v);
    else it->second += v;
}

}  // namespace

PentagonResult generic_pentagon_oracle(const FSymbols& fs, const std::array<int, 4>& w, int e) {
    auto t0 = Clock::now();
    PentagonResult res;
    int a = w[0], b = w[1], c = w[2], d = w[3];
    for (int x : {a, b, c, d, e})
        if (x < 0 || x >= fs.num_objects()) throw std::invalid_argument("object label out of range");
    std::vector<Key> left, right;
    for (int x : fs.fusion(a, b))
        for (int y : fs.fusion(x, c))
            for (int v1 = 0; v1 < fs.mult(a, b, x); ++v1)
                for (int v2 = 0; v2 < fs.mult(x, c, y); ++v2)
                    for (int v3 = 0; v3 < fs.mult(y, d, e); ++v3) left.push_back({x, v1, y, v2, v3});
    for (int z : fs.fusion(c, d))
        for (int ww : fs.fusion(b, z))
            for (int u1 = 0; u1 < fs.mult(c, d, z); ++u1)
                for (int u2 = 0; u2 < fs.mult(b, z, ww); ++u2)
                    for (int u3 = 0; u3 < fs.mult(a, ww, e); ++u3) right.push_back({z, u1, ww, u2, u3});
    if (left.size() != right.size())
        throw std::logic_error("pentagon bases differ in dimension: " + std::to_string(left.size()) + " vs " +
                               std::to_string(right.size()));
    res.dimension = left.size();
    std::string fam = word_string(fs, w, e);
    FamilyResult& fr = res.report.family(fam);
    (void)fr;
    for (const Key& L : left) {
        int x = L[0], v1 = L[1], y = L[2], v2 = L[3], v3 = L[4];
        Sparse two, three;
        fs.for_each_F(x, c, d, e, Tree{y, v2, v3}, [&](const Tree& t1, const Cyclotomic& f1) {
            fs.for_each_F(a, b, t1.mid, e, Tree{x, v1, t1.bottom}, [&](const Tree& t2, const Cyclotomic& f2) {
                accumulate(two, {t1.mid, t1.top, t2.mid, t2.top, t2.bottom}, f1 * f2);
            });
        });
        fs.for_each_F(a, b, c, y, Tree{x, v1, v2}, [&](const Tree& t1, const Cyclotomic& g1) {
            fs.for_each_F(a, t1.mid, d, e, Tree{y, t1.bottom, v3}, [&](const Tree& t2, const Cyclotomic& g2) {
                Cyclotomic g12 = g1 * g2;
                fs.for_each_F(b, c, d, t2.mid, Tree{t1.mid, t1.top, t2.top}, [&](const Tree& t3, const Cyclotomic& g3) {
                    accumulate(three, {t3.mid, t3.top, t2.mid, t3.bottom, t2.bottom}, g12 * g3);
                });
            });
        });
        for (const Key& R : right) {
            auto i2 = two.find(R), i3 = three.find(R);
            Cyclotomic l = i2 == two.end() ? fs.zero() : i2->second;
            Cyclotomic r = i3 == three.end() ? fs.zero() : i3->second;
            res.report.check(fam, l == r, "word=" + fam + " left=" + key_string(L) + " right=" + key_string(R), l.to_string(),
                             r.to_string());
        }
    }
    res.report.title = "pentagon oracle " + fam;
    res.report.seconds = elapsed(t0);
    return res;
}

PentagonResult generic_pentagon_oracle(const NearGroupData& data, const std::array<int, 4>& word, int summand) {
    FSymbols fs(data);
    return generic_pentagon_oracle(fs, word, summand);
}

std::string pentagon_family_key(const FSymbols& fs, const std::array<int, 4>& w, int e) {
    int nm = 0;
    for (int x : w) nm += !fs.is_group(x);
    std::string pat;
    char next = nm == 2 ? 'a' : 'g';
    for (int x : w) pat += fs.is_group(x) ? next++ : 'm';
    bool em = !fs.is_group(e);
    if (nm == 2) return em ? pat + "/m" : "";
    if (nm == 3) {
        if (em) return pat + "/m";
        if (pat == "mmmg" || pat == "gmmm") return pat + "/hg";
        return pat + "/h";
    }
    if (nm == 4) return em ? "mmmm/m" : "mmmm/g";
    return "";
}

VerificationReport pentagon_oracle_all(const NearGroupData& data, int min_m) {
    auto t0 = Clock::now();
    FSymbols fs(data);
    VerificationReport rep;
    rep.title = "generic pentagon oracle";
    int no = fs.num_objects();
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int c = 0; c < no; ++c)
                for (int d = 0; d < no; ++d) {
                    std::array<int, 4> w{a, b, c, d};
                    int nm = 0;
                    for (int x : w) nm += !fs.is_group(x);
                    if (nm < min_m) continue;
                    for (int e = 0; e < no; ++e) {
                        PentagonResult r = generic_pentagon_oracle(fs, w, e);
                        if (r.dimension == 0) continue;
                        std::string key = pentagon_family_key(fs, w, e);
                        std::string fam = key.empty() ? "other" : key;
                        FamilyResult& dst = rep.family(fam);
                        for (const auto& f : r.report.families()) {
                            dst.checked += f.checked;
                            for (const auto& x : f.failures) rep.fail(fam, x.indices, x.lhs, x.rhs);
                            if (f.failure_count > f.failures.size()) dst.failure_count += f.failure_count - f.failures.size();
                        }
                    }
                }
    rep.seconds = elapsed(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Trivial group

Matrix flip_matrix(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    Matrix X(k * k, k * k, Cyclotomic(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) X(j * k + i, i * k + j) = Cyclotomic(1);
    return X;
}

int flip_determinant(int k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }

std::string ObstructionVerdict::summary() const {
    std::ostringstream os;
    os << "k=" << k << ": " << (obstructed ? "Obstructed" : "NotObstructed") << "\n";
    for (const auto& w : witness) os << "  " << w << "\n";
    return os.str();
}

namespace {

std::string power(const std::string& base, long e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string monomial_lm(long eL, long eM) {
    std::string s;
    if (eL) s += power("L", eL);
    if (eM) s += (s.empty() ? "" : "*") + power("M", eM);
    return s.empty() ? "1" : s;
}

}  // namespace

ObstructionVerdict trivial_group_verdict(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    ObstructionVerdict v;
    v.k = k;
    v.det_flip = flip_determinant(k);
    int sd = v.det_flip == -1 ? 1 : 0;
    // Each identity reads L^eL * M^eM = (-1)^sign, L = det lambda, M = det mu.
    struct Id {
        long eL, eM;
        int sign;
    };
    Id small{-k, 2, sd};                       // M^2 L^k = L^{2k} det X_k
    Id big{2, k, static_cast<int>((k + static_cast<long>(k) * sd) % 2)};  // (L M^k)^2 = M^k (-1)^k det(X_k)^k
    auto show = [](const Id& x) { return monomial_lm(x.eL, x.eM) + " = " + (x.sign ? "-1" : "1"); };
    v.witness.push_back("det X_" + std::to_string(k) + " = " + std::to_string(v.det_flip));
    v.witness.push_back("mmmm/e determinants: " + show(small));
    v.witness.push_back("mmmm/m determinants: " + show(big));
    long l = std::lcm(2L, static_cast<long>(k));
    long m1 = l / 2, m2 = l / k;
    Id red{m2 * big.eL - m1 * small.eL, 0, static_cast<int>((m2 * big.sign + m1 * small.sign) % 2)};
    v.reduced_exponent = static_cast<int>(red.eL);
    v.reduced_sign = red.sign ? -1 : 1;
    v.witness.push_back("eliminating M: " + show(red));
    v.witness.push_back("mmmm/m submatrices: L^3 = 1");
    long r3 = red.eL % 3;
    if (red.sign) {
        v.obstructed = true;
        v.witness.push_back("L^3 = 1 gives " + power("L", red.eL) + " = " + power("L", r3) +
                            ", a cube root of unity, which cannot be -1 in characteristic 0");
    } else {
        long g = std::gcd(red.eL, 3L);
        v.witness.push_back("consistent: " + power("L", red.eL) + " = 1 and L^3 = 1 give " + power("L", g) + " = 1");
    }
    return v;
}

Matrix TrivialGroupCandidate::mu_R() const {
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = mu(0, 1 + i * k + j);
    return out;
}

Matrix TrivialGroupCandidate::mu_C() const {
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = mu(1 + j * k + i, 0);
    return out;
}

VerificationReport check_trivial_group_candidate(const TrivialGroupCandidate& cand) {
    auto t0 = Clock::now();
    int k = cand.k;
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (static_cast<int>(cand.lambda.rows()) != k || static_cast<int>(cand.lambda.cols()) != k)
        throw std::invalid_argument("lambda must be k x k");
    if (static_cast<int>(cand.mu.rows()) != 1 + k * k || static_cast<int>(cand.mu.cols()) != 1 + k * k)
        throw std::invalid_argument("mu must be (1+k^2) x (1+k^2)");
    Cyclotomic mee = cand.mu(0, 0);
    if (mee.is_zero()) throw std::invalid_argument("mu[eps,eps] must be invertible");
    VerificationReport rep;
    rep.title = "trivial-group candidate";
    Cyclotomic L = det(cand.lambda), M = det(cand.mu);
    Cyclotomic dX(flip_determinant(k));
    Cyclotomic l1 = M * M * L.pow(k), r1 = L.pow(2 * k) * dX;
    rep.check("mmmm/e:det", l1 == r1, "k=" + std::to_string(k), l1.to_string(), r1.to_string());
    Cyclotomic lm = L * M.pow(k);
    Cyclotomic l2 = lm * lm, r2 = M.pow(k) * Cyclotomic(k % 2 ? -1 : 1) * dX.pow(k);
    rep.check("mmmm/m:det", l2 == r2, "k=" + std::to_string(k), l2.to_string(), r2.to_string());
    Matrix muR = cand.mu_R(), muC = cand.mu_C();
    check_matrix(rep, "mmmm/m:muC-muR", "", muC * muR, mee * (cand.lambda * cand.lambda));
    check_matrix(rep, "mmmm/m:muCt-muR", "", muC.transpose() * muR * cand.lambda, mee * Matrix::identity(k));
    rep.seconds = elapsed(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Monoidal classification

namespace {

std::vector<Symbol> primitive_unknowns(const IndexAlgebra& idx) {
    std::vector<Symbol> u;
    for (int i = 1; i <= idx.k(); ++i) u.push_back(Symbol{Symbol::Xi, i, 0});
    for (int i = 1; i <= idx.k(); ++i) u.push_back(Symbol{Symbol::CEps, i, 0});
    for (auto [r, s] : n_func_domain(idx)) u.push_back(Symbol{Symbol::N, r, s});
    return u;
}

// Exponent action of the gauge parameters t_1..t_k, C (columns) on the unknowns.
IntMatrix gauge_matrix(const IndexAlgebra& idx, const std::vector<Symbol>& u) {
    int k = idx.k();
    IntMatrix B(u.size(), IntVector(k + 1, 0));
    for (std::size_t v = 0; v < u.size(); ++v) {
        const Symbol& s = u[v];
        auto t = [&](int i) -> Integer& { return B[v][i - 1]; };
        if (s.kind == Symbol::Xi) {
            t(s.a) += 1;
            t(idx.pi(s.a)) -= 1;
        } else if (s.kind == Symbol::CEps) {
            B[v][k] += 1;
            t(s.a) -= 1;
            t(idx.circ_inv(s.a)) -= 1;
        } else {
            auto [i, j] = n_position(idx, s.a, s.b);
            t(s.a) += 1;
            t(s.b) += 1;
            t(i) -= 1;
            t(j) -= 1;
        }
    }
    return B;
}

}  // namespace

MonoidalClassification classify_monoidal(const AbelianGroup& G, const PiStructure& pi, int L) {
    if (L < 2 || L % 2) throw std::invalid_argument("modulus must be even");
    IndexAlgebra idx = build_index_algebra(G, pi);
    std::vector<Symbol> u = primitive_unknowns(idx);
    std::size_t n = u.size();
    IntMatrix B = gauge_matrix(idx, u);
    std::vector<MonomialEquation> eqs = functional_equations(idx);

    MonoidalClassification out;
    out.modulus = L;
    // Gamma = (saturated gauge image) + L Z^n, as a full-rank HNF. The
    // saturation accounts for gauge parameters of order not dividing L.
    IntMatrix Bt(idx.k() + 1, IntVector(n));
    for (std::size_t v = 0; v < n; ++v)
        for (int c = 0; c <= idx.k(); ++c) Bt[c][v] = B[v][c];
    IntMatrix invariant_chars = integer_kernel(Bt, n);
    IntMatrix gam = invariant_chars.empty() ? int_identity(n) : integer_kernel(invariant_chars, n);
    for (std::size_t v = 0; v < n; ++v) {
        IntVector e(n, 0);
        e[v] = L;
        gam.push_back(e);
    }
    IntMatrix hnf = hermite_normal_form(gam, n);

    std::size_t lattice_index = 0;
    for (int delta : {1, -1}) {
        LinearizedSystem sys = linearize(eqs, u, [&](const Symbol& s) -> std::optional<Cyclotomic> {
            if (s.kind == Symbol::Delta) return Cyclotomic(delta);
            return std::nullopt;
        });
        if (lattice_index == 0 && !sys.A.empty()) {
            SmithForm sf = smith_normal_form(sys.A, n);
            if (sf.rank == invariant_chars.size()) {
                Integer prod = 1;
                for (const auto& d : sf.invariants) prod *= d;
                lattice_index = prod.get_ui();
            }
        }
        IntVector b;
        bool ok = true;
        for (auto [num, mod] : sys.rhs) {
            if (L % mod) ok = false;
            b.push_back(Integer(num * (L / std::max(mod, 1L))));
        }
        if (!ok) continue;
        ModularSolution sol = solve_mod(sys.A, b, n, L);
        if (!sol.solvable) continue;
        std::set<IntVector> seen;
        std::vector<IntVector> queue{reduce_mod_hnf(sol.particular, hnf)};
        seen.insert(queue[0]);
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (const auto& g : sol.generators) {
                IntVector nx = queue[q];
                for (std::size_t v = 0; v < n; ++v) nx[v] += g[v];
                nx = reduce_mod_hnf(nx, hnf);
                if (seen.insert(nx).second) queue.push_back(nx);
            }
        for (const auto& y : seen) {
            NearGroupPrimitive p = NearGroupPrimitive::ones(idx, delta);
            for (std::size_t v = 0; v < n; ++v) {
                Cyclotomic val = root_of_unity(L, mod_floor(y[v].get_si(), L));
                const Symbol& s = u[v];
                if (s.kind == Symbol::Xi) p.xi[s.a] = val;
                else if (s.kind == Symbol::CEps) p.c_eps[s.a] = val;
                else p.n_func[{s.a, s.b}] = val;
            }
            out.representatives.push_back(p);
        }
        (delta == 1 ? out.count_delta_plus : out.count_delta_minus) = seen.size();
    }
    std::size_t solvable = (out.count_delta_plus > 0) + (out.count_delta_minus > 0);
    out.lattice_count = lattice_index * solvable;
    return out;
}

}  // namespace neargroup

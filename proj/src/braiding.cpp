#include "neargroup/braiding.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace neargroup {

namespace {

using Clock = std::chrono::steady_clock;

Cyclotomic chi_omega(const NearGroupData& d, int g) { return d.group.character_value(d.pi.omega(), g); }

}  // namespace

Cyclotomic BraidingData::sigma0(const NearGroupData&, int, int) const { return Cyclotomic(1); }
Cyclotomic BraidingData::sigma1(const NearGroupData& d, int g) const { return chi_omega(d, g); }
Cyclotomic BraidingData::sigma2(const NearGroupData& d, int g) const { return chi_omega(d, g); }
Cyclotomic BraidingData::sigma3(const NearGroupData& d, int g) const { return sigma3_eps * chi_omega(d, g); }

Matrix BraidingData::sigma4(const NearGroupData& d) const {
    int k = d.k;
    if (static_cast<int>(psi.size()) != k + 1) throw std::invalid_argument("psi needs k+1 slots");
    Matrix s(k, k, Cyclotomic(0));
    for (int j = 1; j <= k; ++j) s(d.idx.pi(d.idx.star_inv(j)) - 1, j - 1) = psi[j];
    return s;
}

BraidingData BraidingData::trivial(const NearGroupData& d) {
    return BraidingData{Cyclotomic(1), std::vector<Cyclotomic>(d.k + 1, Cyclotomic(1))};
}

Matrix braiding_matrix(const FSymbols& fs, const BraidingData& b, int x, int y, int z, bool inverse_braiding) {
    if (inverse_braiding) return inverse(braiding_matrix(fs, b, y, x, z, false));
    const NearGroupData& d = fs.data();
    int n = fs.mult(x, y, z);
    if (n == 0) return Matrix(0, 0);
    bool gx = fs.is_group(x), gy = fs.is_group(y);
    if (gx && gy) return Matrix(1, 1, b.sigma0(d, x, y));
    if (gx) return Matrix(1, 1, b.sigma1(d, x));
    if (gy) return Matrix(1, 1, b.sigma2(d, y));
    if (fs.is_group(z)) return Matrix(1, 1, b.sigma3(d, z));
    return b.sigma4(d);
}

// ---------------------------------------------------------------------------
// Reduced system

std::vector<MonomialEquation> hexagon_constraints(const NearGroupData& d) {
    const IndexAlgebra& I = d.idx;
    int k = I.k();
    auto S = [&](int a, int b) { return I.star(a, b); };
    auto inv = [&](int a) { return I.star_inv(a); };
    auto P = [&](int a) { return I.pi(a); };
    auto Pi = [&](int a) { return I.pi_inv(a); };
    std::vector<MonomialEquation> out;
    EquationBuilder b(I);
    auto rx = [](int r) { return "r=" + std::to_string(r); };
    for (int r = 1; r <= k; ++r) {
        b.psi(r).psi(inv(P(r))).xi(P(inv(r))).eq().sigma3().xi(r).xi(P(r));
        b.emit(out, "hex:psi-xi", rx(r));
    }
    for (int r = 1; r <= k; ++r) {
        if (r == inv(P(r))) continue;
        int rp = S(r, P(r));
        b.psi(inv(r)).psi(Pi(rp)).n(r, P(r)).eq().xi(Pi(r), -1).c(Pi(r), -1).c(rp);
        b.emit(out, "hex:psi-pair", rx(r));
    }
    for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= k; ++s) {
            if (s == P(r) || s == inv(r)) continue;
            int rs = S(r, s);
            b.psi(s).psi(Pi(S(inv(s), P(r)))).n(r, P(inv(s))).eq().n(r, s).psi(rs).n(P(inv(rs)), S(P(s), inv(P(rs))));
            b.emit(out, "hex:psi-N", rx(r) + ",s=" + std::to_string(s));
        }
    if (d.group.order() % 2 == 1) {
        b.sigma3(2).eq().delta();
        b.emit(out, "hex:sigma-square", "");
        for (int r = 1; r <= k; ++r) {
            b.sigma3().psi(inv(P(r))).eq().psi(r).n(P(inv(r)), Pi(inv(r)));
            b.emit(out, "hex:sigma-psi", rx(r));
        }
    } else {
        int w = d.pi.omega();
        b.sigma3(2).eq().psi(w).xi(w, -1);
        b.emit(out, "hex:sigma-square", "");
        b.sigma3().psi(Pi(w));
        b.emit(out, "hex:sigma-psi-omega", "");
        for (int r = 1; r <= k; ++r) {
            if (r == w) continue;
            b.sigma3().psi(inv(P(r))).eq().psi(S(w, r)).n(P(S(w, inv(r))), Pi(S(w, inv(r))));
            b.emit(out, "hex:sigma-psi", rx(r));
            b.sigma3().psi(Pi(r)).xi(S(w, r)).c(S(w, r)).eq().xi(r).c(r).psi(S(w, inv(r))).n(P(r), Pi(r));
            b.emit(out, "hex:sigma-psi-xi-c", rx(r));
        }
    }
    return out;
}

namespace {

std::vector<Symbol> braiding_unknowns(int k) {
    std::vector<Symbol> u{Symbol{Symbol::Sigma3, 0, 0}};
    for (int i = 1; i <= k; ++i) u.push_back(Symbol{Symbol::Psi, i, 0});
    return u;
}

std::function<std::optional<Cyclotomic>(const Symbol&)> primitive_constants(const NearGroupPrimitive& p) {
    return [p](const Symbol& s) -> std::optional<Cyclotomic> {
        switch (s.kind) {
            case Symbol::Delta: return Cyclotomic(p.delta);
            case Symbol::Xi: return p.xi.at(s.a);
            case Symbol::CEps: return p.c_eps.at(s.a);
            case Symbol::N: return p.n_func.at({s.a, s.b});
            default: return std::nullopt;
        }
    };
}

std::string root_string(long num, long mod) {
    Cyclotomic v = root_of_unity(static_cast<int>(mod), num);
    return v.to_string();
}

}  // namespace

std::vector<std::string> substituted_constraints(const NearGroupData& d) {
    NearGroupPrimitive p = extract_primitive(d);
    std::vector<MonomialEquation> eqs = hexagon_constraints(d);
    LinearizedSystem sys = linearize(eqs, braiding_unknowns(d.k), primitive_constants(p));
    std::vector<std::string> out;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        Monomial m;
        for (std::size_t v = 0; v < sys.unknowns.size(); ++v)
            if (sys.A[e][v] != 0) m[sys.unknowns[v]] = static_cast<int>(sys.A[e][v].get_si());
        MonomialEquation shown{eqs[e].family, eqs[e].indices, m, {}};
        std::string lhs = shown.to_string();
        lhs = lhs.substr(0, lhs.size() - 4);  // drop " = 1"
        out.push_back(eqs[e].family + " " + eqs[e].indices + ": " + lhs + " = " + root_string(sys.rhs[e].first, sys.rhs[e].second));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unreduced hexagons

namespace {

std::string hexagon_family(const FSymbols& fs, int x, int y, int z, int w, bool e_group, bool f_group) {
    int nm = !fs.is_group(x) + !fs.is_group(y) + !fs.is_group(z);
    std::string pat;
    char next = 'a';
    for (int o : {x, y, z}) pat += fs.is_group(o) ? next++ : 'm';
    if (nm == 0) return "abc/abc";
    if (nm == 1) return pat + "/m";
    if (nm == 2) return pat + (fs.is_group(w) ? "/b" : "/m");
    if (fs.is_group(w)) return "mmm/g";
    const char* block = e_group ? (f_group ? "I" : "II") : (f_group ? "III" : "IV");
    return std::string("mmm/m:") + block;
}

void hexagon_word(const FSymbols& fs, const BraidingData& b, int x, int y, int z, int w, bool inv,
                  std::map<std::tuple<int, int, int>, Matrix>& cache, VerificationReport& rep) {
    std::vector<Tree> left = fs.left_basis(x, y, z, w);
    if (left.empty()) return;
    std::vector<Tree> target = fs.right_basis(y, z, x, w);
    auto R = [&](int u, int v, int s) -> const Matrix& {
        auto key = std::make_tuple(u, v, s);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, braiding_matrix(fs, b, u, v, s, inv)).first;
        return it->second;
    };
    auto acc = [](std::map<Tree, Cyclotomic>& m, const Tree& t, const Cyclotomic& v) {
        auto it = m.find(t);
        if (it == m.end()) m.emplace(t, v);
        else it->second += v;
    };
    std::string prefix = inv ? "inv:" : "";
    std::string word = fs.object_name(x) + "," + fs.object_name(y) + "," + fs.object_name(z) + "/" + fs.object_name(w);
    for (const Tree& L : left) {
        std::map<Tree, Cyclotomic> pa, pb;
        // alpha, then braid x past (y z), then alpha.
        fs.for_each_F(x, y, z, w, L, [&](const Tree& t, const Cyclotomic& a1) {
            const Matrix& r = R(x, t.mid, w);
            for (std::size_t nd = 0; nd < r.rows(); ++nd) {
                const Cyclotomic& rv = r(nd, t.bottom);
                if (rv.is_zero()) continue;
                Cyclotomic a12 = a1 * rv;
                fs.for_each_F(y, z, x, w, Tree{t.mid, t.top, static_cast<int>(nd)},
                              [&](const Tree& t3, const Cyclotomic& a3) { acc(pa, t3, a12 * a3); });
            }
        });
        // braid x past y, alpha, braid x past z.
        const Matrix& r1 = R(x, y, L.mid);
        for (std::size_t na = 0; na < r1.rows(); ++na) {
            const Cyclotomic& rv = r1(na, L.top);
            if (rv.is_zero()) continue;
            fs.for_each_F(y, x, z, w, Tree{L.mid, static_cast<int>(na), L.bottom}, [&](const Tree& t2, const Cyclotomic& b2) {
                const Matrix& r3 = R(x, z, t2.mid);
                for (std::size_t ng = 0; ng < r3.rows(); ++ng) {
                    const Cyclotomic& r3v = r3(ng, t2.top);
                    if (r3v.is_zero()) continue;
                    acc(pb, Tree{t2.mid, static_cast<int>(ng), t2.bottom}, rv * b2 * r3v);
                }
            });
        }
        for (const Tree& T : target) {
            auto ia = pa.find(T), ib = pb.find(T);
            Cyclotomic l = ia == pa.end() ? Cyclotomic(0) : ia->second;
            Cyclotomic r = ib == pb.end() ? Cyclotomic(0) : ib->second;
            std::string fam = prefix + hexagon_family(fs, x, y, z, w, fs.is_group(L.mid), fs.is_group(T.mid));
            std::ostringstream ix;
            ix << "word=" << word << " left=(" << L.mid << "," << L.top << "," << L.bottom << ") right=(" << T.mid << ","
               << T.top << "," << T.bottom << ")";
            rep.check(fam, l == r, ix.str(), l.to_string(), r.to_string());
        }
    }
}

}  // namespace

VerificationReport verify_hexagons(const NearGroupData& d, const BraidingData& b) {
    auto t0 = Clock::now();
    FSymbols fs(d);
    VerificationReport rep;
    rep.title = "hexagons";
    if (!is_invertible(b.sigma4(d)) || b.sigma3_eps.is_zero()) throw std::invalid_argument("braiding data must be invertible");
    int no = fs.num_objects();
    for (bool inv : {false, true}) {
        std::map<std::tuple<int, int, int>, Matrix> cache;
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y)
                for (int z = 0; z < no; ++z)
                    for (int w = 0; w < no; ++w) hexagon_word(fs, b, x, y, z, w, inv, cache, rep);
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Enumeration and classification

BraidingEnumeration enumerate_braidings(const NearGroupData& d, int root_order_bound) {
    if (root_order_bound < 1) throw std::invalid_argument("root order bound must be positive");
    int k = d.k;
    NearGroupPrimitive p = extract_primitive(d);
    std::vector<Symbol> u = braiding_unknowns(k);
    LinearizedSystem sys = linearize(hexagon_constraints(d), u, primitive_constants(p));
    long mconst = 1;
    for (auto [num, mod] : sys.rhs) mconst = lcm_long(mconst, mod);
    SmithForm sf = smith_normal_form(sys.A, u.size());
    long dl = 1;
    for (const auto& x : sf.invariants) dl = lcm_long(dl, x.get_si());
    // Finite systems need no bound: every solution has order dividing mconst * dl.
    long L = mconst * dl;
    if (sf.rank < u.size()) L = lcm_long(L, root_order_bound);
    BraidingEnumeration out;
    out.modulus = static_cast<int>(L);
    IntVector rhs;
    for (auto [num, mod] : sys.rhs) rhs.push_back(Integer(num * (L / mod)));
    ModularSolution sol = solve_mod(sys.A, rhs, u.size(), Integer(L));
    if (!sol.solvable) return out;
    std::vector<IntVector> ys = enumerate_mod(sol, Integer(L), 1000000);
    std::sort(ys.begin(), ys.end());
    for (const auto& y : ys) {
        BraidingData b;
        b.sigma3_eps = root_of_unity(static_cast<int>(L), y[0].get_si());
        b.psi.assign(k + 1, Cyclotomic(1));
        for (int i = 1; i <= k; ++i) b.psi[i] = root_of_unity(static_cast<int>(L), y[i].get_si());
        out.reduced_solutions.push_back(b);
    }
    for (const auto& b : out.reduced_solutions) {
        VerificationReport rep = verify_hexagons(d, b);
        bool forward = true, inverse_ok = true;
        for (const auto& f : rep.families()) {
            if (f.passed()) continue;
            (f.family.rfind("inv:", 0) == 0 ? inverse_ok : forward) = false;
        }
        if (forward) out.forward_count++;
        if (forward && inverse_ok) out.braidings.push_back(b);
    }
    return out;
}

bool is_symmetric(const NearGroupData& d, const BraidingData& b) {
    const AbelianGroup& G = d.group;
    int n = G.order();
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (!(b.sigma0(d, g, h) * b.sigma0(d, h, g)).is_one()) return false;
        if (!(b.sigma1(d, g) * b.sigma2(d, g)).is_one()) return false;
        Cyclotomic s3 = b.sigma3(d, g);
        if (!(s3 * s3).is_one()) return false;
    }
    Matrix s4 = b.sigma4(d);
    return (s4 * s4).is_identity();
}

std::vector<TwistData> twist_solutions(const NearGroupData& d, const BraidingData& b) {
    const IndexAlgebra& I = d.idx;
    Cyclotomic theta = b.psi[1] * b.psi[I.pi(I.star_inv(1))];
    for (int j = 1; j <= d.k; ++j)
        if (b.psi[j] * b.psi[I.pi(I.star_inv(j))] != theta) return {};
    Cyclotomic s = b.sigma3_eps * theta;
    if (!(s * s).is_one()) return {};
    return {TwistData{theta}};
}

std::string describe(const BraidingData& b) {
    std::ostringstream os;
    os << "sigma3(e)=" << b.sigma3_eps.to_string();
    for (std::size_t i = 1; i < b.psi.size(); ++i) os << " psi(" << i << ")=" << b.psi[i].to_string();
    return os.str();
}

json to_json(const NearGroupData& d, const BraidingData& b, bool symmetric, const std::vector<TwistData>& twists) {
    json psi = json::array(), th = json::array();
    for (std::size_t i = 1; i < b.psi.size(); ++i) psi.push_back(to_json(b.psi[i]));
    for (const auto& t : twists) th.push_back(to_json(t.theta_m));
    (void)d;
    return json{{"sigma3_eps", to_json(b.sigma3_eps)}, {"psi", psi}, {"symmetric", symmetric}, {"twists", th}};
}

namespace {

std::string primitive_label(const NearGroupPrimitive& p) {
    std::ostringstream os;
    os << "delta=" << p.delta;
    for (std::size_t i = 1; i < p.xi.size(); ++i)
        if (!p.xi[i].is_one()) os << " xi(" << i << ")=" << p.xi[i].to_string();
    for (std::size_t i = 1; i < p.c_eps.size(); ++i)
        if (!p.c_eps[i].is_one()) os << " c(" << i << ")=" << p.c_eps[i].to_string();
    for (const auto& [rs, v] : p.n_func)
        if (!v.is_one()) os << " N(" << rs.first << "," << rs.second << ")=" << v.to_string();
    return os.str();
}

std::string field_name(int q) {
    auto [p, a] = prime_power(q);
    if (a == 1) return "F_" + std::to_string(q);
    return "F_{" + std::to_string(p) + "^" + std::to_string(a) + "}";
}

}  // namespace

ClassificationRow classify(const NearGroupData& d, int root_order_bound) {
    ClassificationRow row;
    row.fusion = "(Z/" + std::to_string(d.group.order()) + "," + std::to_string(d.k) + ")";
    if (!d.group.is_cyclic()) row.fusion = "(" + d.group.descriptor() + "," + std::to_string(d.k) + ")";
    row.field = field_name(d.group.order() + 1);
    MonoidalClassification mc = classify_monoidal(d.group, d.pi);
    for (const auto& p : mc.representatives) {
        NearGroupData data = construct_from_primitive(d.group, d.pi, p);
        StructureSummary s;
        s.primitive = p;
        s.label = primitive_label(p);
        BraidingEnumeration be = enumerate_braidings(data, root_order_bound);
        s.reduced_count = be.reduced_solutions.size();
        for (const auto& b : be.braidings) s.braidings.push_back(BraidingSummary{b, is_symmetric(data, b), twist_solutions(data, b)});
        row.structures.push_back(s);
    }
    return row;
}

ClassificationRow classify_family(const std::string& family, int root_order_bound) {
    std::string f = family;
    auto kpos = f.find('k');
    if (kpos != std::string::npos) f = f.substr(0, kpos);
    AbelianGroup G = AbelianGroup::parse(f);
    if (!G.is_cyclic()) throw std::invalid_argument("family must be cyclic");
    int q = G.order() + 1;
    prime_power(q);  // throws unless |G|+1 is a prime power
    auto [FG, pi] = pi_from_field(q);
    if (kpos != std::string::npos && std::stoi(family.substr(kpos + 1)) != G.order() - 1)
        throw std::invalid_argument("k must equal |G|-1");
    return classify(construct_standard(FG, pi), root_order_bound);
}

std::string ClassificationRow::to_text() const {
    std::ostringstream os;
    os << "Fusion:              " << fusion << "\n";
    os << "Field:               " << field << "\n";
    os << "Monoidal structures: " << structures.size() << "\n";
    for (const auto& s : structures) {
        os << "  [" << s.label << "] ";
        if (s.braidings.empty()) {
            os << "not braided";
            if (s.reduced_count) os << " (" << s.reduced_count << " reduced solutions rejected by full hexagons)";
            os << "\n";
            continue;
        }
        os << s.braidings.size() << " braiding" << (s.braidings.size() == 1 ? "" : "s");
        if (s.reduced_count != s.braidings.size()) os << " (" << s.reduced_count << " reduced solutions)";
        os << "\n";
        for (const auto& b : s.braidings) {
            os << "    " << describe(b.braiding) << "  " << (b.symmetric ? "symmetric" : "not symmetric") << ", ";
            if (b.balanced()) os << "balanced (theta_m=" << b.twists[0].theta_m.to_string() << ")";
            else os << "not balanced";
            os << "\n";
        }
    }
    return os.str();
}

json ClassificationRow::to_json() const {
    json ss = json::array();
    for (const auto& s : structures) {
        json bs = json::array();
        for (const auto& b : s.braidings) {
            json psi = json::array(), th = json::array();
            for (std::size_t i = 1; i < b.braiding.psi.size(); ++i) psi.push_back(neargroup::to_json(b.braiding.psi[i]));
            for (const auto& t : b.twists) th.push_back(neargroup::to_json(t.theta_m));
            bs.push_back({{"sigma3_eps", neargroup::to_json(b.braiding.sigma3_eps)},
                          {"psi", psi},
                          {"symmetric", b.symmetric},
                          {"twists", th}});
        }
        ss.push_back({{"label", s.label},
                      {"primitive", neargroup::to_json(s.primitive)},
                      {"reduced_solutions", s.reduced_count},
                      {"braidings", bs}});
    }
    return json{{"schema", "neargroup-classification"}, {"version", 1}, {"fusion", fusion}, {"field", field},
                {"monoidal_structures", structures.size()}, {"structures", ss}};
}

}  // namespace neargroup

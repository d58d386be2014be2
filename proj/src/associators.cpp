#include "neargroup/associators.hpp"

#include <sstream>
#include <stdexcept>

namespace neargroup {

IndexAlgebra::IndexAlgebra(const PiStructure& pi) {
    const AbelianGroup& G = pi.group();
    k_ = G.order() - 1;
    int n = k_ + 1;
    pi_.resize(n);
    piinv_.resize(n);
    sinv_.resize(n);
    cinv_.resize(n);
    star_.resize(static_cast<std::size_t>(n) * n);
    circ_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        pi_[i] = i == 0 ? 0 : pi.apply(i);
        piinv_[i] = i == 0 ? 0 : pi.apply_inv(i);
        sinv_[i] = G.inv(i);
    }
    for (int i = 0; i < n; ++i) {
        cinv_[i] = sinv_[pi_[i]];
        for (int j = 0; j < n; ++j) star_[i * n + j] = G.mul(i, j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) circ_[i * n + j] = pi_[star(piinv_[i], piinv_[j])];
}

IndexAlgebra build_index_algebra(const AbelianGroup& group, const PiStructure& pi) {
    if (!(pi.group() == group)) throw std::invalid_argument("pi belongs to a different group");
    return IndexAlgebra(pi);
}

NearGroupPrimitive NearGroupPrimitive::ones(const IndexAlgebra& idx, int delta) {
    NearGroupPrimitive p;
    p.delta = delta;
    p.xi.assign(idx.k() + 1, Cyclotomic(1));
    p.c_eps.assign(idx.k() + 1, Cyclotomic(1));
    for (auto rs : n_func_domain(idx)) p.n_func[rs] = Cyclotomic(1);
    return p;
}

int NearGroupPrimitive::order() const {
    long n = 1;
    for (std::size_t i = 1; i < xi.size(); ++i) n = lcm_long(n, xi[i].order());
    for (std::size_t i = 1; i < c_eps.size(); ++i) n = lcm_long(n, c_eps[i].order());
    for (const auto& [rs, v] : n_func) n = lcm_long(n, v.order());
    return static_cast<int>(n);
}

bool NearGroupPrimitive::operator==(const NearGroupPrimitive& o) const {
    if (delta != o.delta || xi.size() != o.xi.size() || c_eps.size() != o.c_eps.size() || n_func.size() != o.n_func.size())
        return false;
    for (std::size_t i = 1; i < xi.size(); ++i)
        if (xi[i] != o.xi[i] || c_eps[i] != o.c_eps[i]) return false;
    for (const auto& [rs, v] : n_func) {
        auto it = o.n_func.find(rs);
        if (it == o.n_func.end() || it->second != v) return false;
    }
    return true;
}

std::vector<IndexPair> n_func_domain(const IndexAlgebra& idx) {
    std::vector<IndexPair> out;
    for (int r = 1; r <= idx.k(); ++r)
        for (int s = 1; s <= idx.k(); ++s)
            if (idx.star(r, s) != 0) out.emplace_back(r, s);
    return out;
}

IndexPair n_position(const IndexAlgebra& idx, int r, int s) {
    int i = idx.star(r, s);
    for (int j = 1; j <= idx.k(); ++j)
        if (idx.circ(i, j) == r) return {i, j};
    throw std::logic_error("no N position for the given column");
}

NearGroupPrimitive gauge_transform(const NearGroupPrimitive& prim, const IndexAlgebra& idx,
                                   const std::vector<Cyclotomic>& t, const Cyclotomic& c_scale) {
    int k = idx.k();
    if (static_cast<int>(t.size()) != k + 1) throw std::invalid_argument("gauge vector must have k+1 slots");
    NearGroupPrimitive out = prim;
    for (int j = 1; j <= k; ++j) {
        out.xi[j] = prim.xi[j] * t[j] / t[idx.pi(j)];
        out.c_eps[j] = prim.c_eps[j] * c_scale / (t[j] * t[idx.circ_inv(j)]);
    }
    for (auto& [rs, v] : out.n_func) {
        auto [i, j] = n_position(idx, rs.first, rs.second);
        v = v * t[rs.first] * t[rs.second] / (t[i] * t[j]);
    }
    return out;
}

NearGroupData construct_from_primitive(const AbelianGroup& G, const PiStructure& pi, const NearGroupPrimitive& prim_in) {
    NearGroupData d;
    d.group = G;
    d.pi = pi;
    d.idx = build_index_algebra(G, pi);
    if (!pi.is_valid()) throw std::invalid_argument("pi does not satisfy the structure conditions");
    const IndexAlgebra& idx = d.idx;
    int k = idx.k();
    d.k = k;
    if (prim_in.delta != 1 && prim_in.delta != -1) throw std::invalid_argument("delta must be +1 or -1");
    if (static_cast<int>(prim_in.xi.size()) != k + 1 || static_cast<int>(prim_in.c_eps.size()) != k + 1)
        throw std::invalid_argument("primitive needs k+1 slots for xi and c_eps");
    for (auto rs : n_func_domain(idx))
        if (!prim_in.n_func.count(rs)) throw std::invalid_argument("primitive is missing an N value");
    int W = static_cast<int>(lcm_long(G.exponent(), prim_in.order()));
    d.order = W;
    NearGroupPrimitive& prim = d.prim;
    prim = prim_in;
    prim.xi[0] = prim.c_eps[0] = Cyclotomic(1);
    for (int i = 0; i <= k; ++i) {
        prim.xi[i] = prim.xi[i].lift(W);
        prim.c_eps[i] = prim.c_eps[i].lift(W);
        if (i > 0 && (prim.xi[i].is_zero() || prim.c_eps[i].is_zero())) throw std::invalid_argument("primitive values must be invertible");
    }
    for (auto& [rs, v] : prim.n_func) {
        v = v.lift(W);
        if (v.is_zero()) throw std::invalid_argument("primitive values must be invertible");
    }

    int n = G.order();
    int E = G.exponent();
    auto chi = [&](int c, int g) { return root_of_unity(W, G.char_exponent(c, g) * (W / E)); };
    Cyclotomic zero = Cyclotomic::zero(W);

    d.gamma1.assign(n, Matrix(k, k, zero));
    d.gamma2 = d.gamma3 = d.lambda = d.gamma1;
    for (int g = 0; g < n; ++g)
        for (int i = 1; i <= k; ++i) {
            d.gamma1[g](i - 1, i - 1) = chi(i, g);
            d.gamma2[g](i - 1, i - 1) = chi(idx.star_inv(idx.pi(i)), g);
            d.gamma3[g](i - 1, i - 1) = chi(idx.pi_inv(i), g);
            d.lambda[g](idx.pi(i) - 1, i - 1) = chi(i, g) * prim.xi[i];
        }

    Cyclotomic order_g = Cyclotomic(Rational(n), W);
    d.M = Matrix(n, n, Cyclotomic(make_rational(prim.delta, n), W));
    d.R = Matrix(n, k * k, zero);
    d.C = Matrix(k * k, n, zero);
    d.N = Matrix(k * k, k * k, zero);
    for (int r = 1; r <= k; ++r) {
        int p = idx.pi_inv(r);
        Cyclotomic r_eps = (order_g * prim.xi[p] * prim.c_eps[p]).inverse();
        for (int g = 0; g < n; ++g) d.R(g, d.pair_index(r, idx.star_inv(r))) = chi(p, g).inverse() * r_eps;
    }
    for (int i = 1; i <= k; ++i)
        for (int g = 0; g < n; ++g) d.C(d.pair_index(i, idx.circ_inv(i)), g) = chi(i, G.inv(g)) * prim.c_eps[i];
    for (const auto& [rs, v] : prim.n_func) {
        auto [i, j] = n_position(idx, rs.first, rs.second);
        d.N(d.pair_index(i, j), d.pair_index(rs.first, rs.second)) = v;
    }
    return d;
}

NearGroupData construct_standard(const AbelianGroup& G, const PiStructure& pi) {
    return construct_from_primitive(G, pi, NearGroupPrimitive::ones(IndexAlgebra(pi)));
}

Matrix assemble_mu(const NearGroupData& d) {
    std::size_t n = d.M.rows(), kk = d.N.rows();
    Matrix mu(n + kk, n + kk);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mu(i, j) = d.M(i, j);
        for (std::size_t j = 0; j < kk; ++j) mu(i, n + j) = d.R(i, j);
    }
    for (std::size_t i = 0; i < kk; ++i) {
        for (std::size_t j = 0; j < n; ++j) mu(n + i, j) = d.C(i, j);
        for (std::size_t j = 0; j < kk; ++j) mu(n + i, n + j) = d.N(i, j);
    }
    return mu;
}

namespace {

void lift_all(NearGroupData& d) {
    long W = d.order;
    auto scan = [&](const Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) W = lcm_long(W, m(i, j).order());
    };
    for (const auto* v : {&d.gamma1, &d.gamma2, &d.gamma3, &d.lambda})
        for (const auto& m : *v) scan(m);
    for (const auto* m : {&d.M, &d.R, &d.C, &d.N}) scan(*m);
    W = lcm_long(W, d.prim.order());
    d.order = static_cast<int>(W);
    for (auto* v : {&d.gamma1, &d.gamma2, &d.gamma3, &d.lambda})
        for (auto& m : *v) m = m.lift(d.order);
    for (auto* m : {&d.M, &d.R, &d.C, &d.N}) *m = m->lift(d.order);
    for (auto& x : d.prim.xi) x = x.lift(d.order);
    for (auto& x : d.prim.c_eps) x = x.lift(d.order);
    for (auto& [rs, v] : d.prim.n_func) v = v.lift(d.order);
}

NearGroupData fixture_shell(int q) {
    auto [G, pi] = pi_from_field(q);
    NearGroupData d;
    d.group = G;
    d.pi = pi;
    d.idx = IndexAlgebra(pi);
    d.k = d.idx.k();
    d.order = G.exponent();
    return d;
}

}  // namespace

NearGroupData example_data(const std::string& name, int selector) {
    if (name == "Z2k1") {
        NearGroupData d = fixture_shell(3);
        const AbelianGroup& G = d.group;
        Cyclotomic xi = root_of_unity(3, mod_floor(selector, 3));
        auto chi = [&](int g) { return G.character_value(1, g); };
        for (int a = 0; a < 2; ++a) {
            Matrix m = Matrix::from_rows({{chi(a)}});
            d.gamma1.push_back(m);
            d.gamma2.push_back(m);
            d.gamma3.push_back(m);
            d.lambda.push_back(Matrix::from_rows({{xi * chi(a)}}));
        }
        Cyclotomic half(make_rational(1, 2));
        Cyclotomic r = (Cyclotomic(2) * xi).inverse();
        d.M = Matrix::from_rows({{half, half}, {half, half}});
        d.R = Matrix::from_rows({{r}, {-r}});
        d.C = Matrix::from_rows({{Cyclotomic(1), Cyclotomic(-1)}});
        d.N = Matrix::from_rows({{Cyclotomic(0)}});
        d.prim = NearGroupPrimitive::ones(d.idx, 1);
        d.prim.xi[1] = xi;
        lift_all(d);
        return d;
    }
    if (name == "Z3k2") {
        if (selector != 0 && selector != 1) throw std::invalid_argument("Z3k2 selector is 0 (xi = 1) or 1 (xi = -1)");
        NearGroupData d = fixture_shell(4);
        const AbelianGroup& G = d.group;
        Cyclotomic xi(selector == 0 ? 1 : -1);
        auto chi = [&](int c, const std::string& g) { return G.character_value(c, G.parse_element(g)); };
        for (int a = 0; a < 3; ++a) {
            Matrix g1 = Matrix::diagonal({G.character_value(1, a), G.character_value(2, a)});
            Matrix g1inv = Matrix::diagonal({G.character_value(1, G.inv(a)), G.character_value(2, G.inv(a))});
            d.gamma1.push_back(g1);
            d.gamma2.push_back(g1inv);  // gamma2(a^-1) = gamma1(a)
            d.gamma3.push_back(g1);
            d.lambda.push_back(xi * g1);
        }
        Cyclotomic z(0), third(make_rational(1, 3)), xt = xi * third;
        d.M = Matrix(3, 3, xt);
        d.R = Matrix::from_rows({
            {z, xt, third, z},
            {z, xt * chi(1, "g^2"), third * chi(2, "g^2"), z},
            {z, xt * chi(1, "g"), third * chi(2, "g"), z},
        });
        d.C = Matrix::from_rows({
            {z, z, z},
            {Cyclotomic(1), chi(1, "g^2"), chi(1, "g")},
            {xi, xi * chi(2, "g^2"), xi * chi(2, "g")},
            {z, z, z},
        });
        d.N = Matrix::from_rows({
            {z, z, z, xi},
            {z, z, z, z},
            {z, z, z, z},
            {Cyclotomic(1), z, z, z},
        });
        d.prim = NearGroupPrimitive::ones(d.idx, selector == 0 ? 1 : -1);
        d.prim.xi[1] = d.prim.xi[2] = xi;
        d.prim.c_eps[2] = xi;
        d.prim.n_func[{2, 2}] = xi;
        lift_all(d);
        return d;
    }
    if (name == "Z4k3") {
        NearGroupData d = fixture_shell(5);
        const AbelianGroup& G = d.group;
        auto chi = [&](int c, const std::string& g) { return G.character_value(c, G.parse_element(g)); };
        Cyclotomic z(0), o(1), q(make_rational(1, 4));
        Matrix lam_e = Matrix::from_rows({{z, z, o}, {o, z, z}, {z, o, z}});
        Matrix lam_e_inv = inverse(lam_e);
        auto g1 = [&](int a) {
            return Matrix::diagonal({G.character_value(1, a), G.character_value(2, a), G.character_value(3, a)});
        };
        for (int a = 0; a < 4; ++a) d.gamma1.push_back(g1(a));
        for (int a = 0; a < 4; ++a) d.gamma2.push_back(lam_e_inv * d.gamma1[G.inv(a)] * lam_e);
        for (int a = 0; a < 4; ++a) d.gamma3.push_back(lam_e_inv * d.gamma2[G.inv(a)] * lam_e);
        for (int a = 0; a < 4; ++a) d.lambda.push_back(lam_e * d.gamma1[a]);
        d.M = Matrix(4, 4, q);
        d.R = Matrix::from_rows({
            {z, z, q, z, q, z, q, z, z},
            {z, z, q * chi(3, "g^3"), z, q * chi(1, "g^3"), z, q * chi(2, "g^3"), z, z},
            {z, z, q * chi(3, "g^2"), z, q * chi(1, "g^2"), z, q * chi(2, "g^2"), z, z},
            {z, z, q * chi(3, "g"), z, q * chi(1, "g"), z, q * chi(2, "g"), z, z},
        });
        d.C = Matrix::from_rows({
            {z, z, z, z},
            {o, chi(1, "g^3"), chi(1, "g^2"), chi(1, "g")},
            {z, z, z, z},
            {o, chi(2, "g^3"), chi(2, "g^2"), chi(2, "g")},
            {z, z, z, z},
            {z, z, z, z},
            {z, z, z, z},
            {z, z, z, z},
            {o, chi(3, "g^3"), chi(3, "g^2"), chi(3, "g")},
        });
        const int ones[9][9] = {
            {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
        };
        d.N = Matrix(9, 9, z);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                if (ones[i][j]) d.N(i, j) = o;
        d.prim = NearGroupPrimitive::ones(d.idx, 1);
        lift_all(d);
        return d;
    }
    throw std::invalid_argument("unknown example: " + name);
}

std::vector<std::pair<std::string, int>> example_names() {
    return {{"Z2k1", 0}, {"Z2k1", 1}, {"Z2k1", 2}, {"Z3k2", 0}, {"Z3k2", 1}, {"Z4k3", 0}};
}

json to_json(const NearGroupPrimitive& prim) {
    json xi = json::array(), c = json::array(), nf = json::object();
    for (std::size_t i = 1; i < prim.xi.size(); ++i) xi.push_back(to_json(prim.xi[i]));
    for (std::size_t i = 1; i < prim.c_eps.size(); ++i) c.push_back(to_json(prim.c_eps[i]));
    for (const auto& [rs, v] : prim.n_func) nf[std::to_string(rs.first) + "," + std::to_string(rs.second)] = to_json(v);
    return json{{"delta", prim.delta}, {"xi", xi}, {"c_eps", c}, {"n_func", nf}};
}

NearGroupPrimitive primitive_from_json(const json& j, const IndexAlgebra& idx) {
    int k = idx.k();
    NearGroupPrimitive p;
    p.delta = j.at("delta").get<int>();
    if (p.delta != 1 && p.delta != -1) throw std::invalid_argument("delta must be +1 or -1");
    const auto& xi = j.at("xi");
    const auto& c = j.at("c_eps");
    if (static_cast<int>(xi.size()) != k || static_cast<int>(c.size()) != k) throw std::invalid_argument("xi and c_eps need k entries");
    p.xi.assign(k + 1, Cyclotomic(1));
    p.c_eps.assign(k + 1, Cyclotomic(1));
    for (int i = 1; i <= k; ++i) {
        p.xi[i] = cyclotomic_from_json(xi[i - 1]);
        p.c_eps[i] = cyclotomic_from_json(c[i - 1]);
    }
    const auto& nf = j.at("n_func");
    for (auto rs : n_func_domain(idx)) {
        std::string key = std::to_string(rs.first) + "," + std::to_string(rs.second);
        if (!nf.contains(key)) throw std::invalid_argument("n_func is missing key " + key);
        p.n_func[rs] = cyclotomic_from_json(nf.at(key));
    }
    if (nf.size() != p.n_func.size()) throw std::invalid_argument("n_func has keys outside r*s != e");
    return p;
}

json to_json(const NearGroupData& d, bool include_matrices) {
    json j = {
        {"schema", "neargroup-data"},
        {"version", kDataSchemaVersion},
        {"group", d.group.descriptor()},
        {"k", d.k},
        {"pi", d.pi.to_cycle_notation()},
        {"flags", {{"trivial_alpha_beta", d.trivial_alpha_beta}}},
    };
    json prim = to_json(d.prim);
    for (auto& [key, v] : prim.items()) j[key] = v;
    if (include_matrices) {
        json m;
        for (const auto& [key, v] : {std::pair{"gamma1", &d.gamma1}, std::pair{"gamma2", &d.gamma2},
                                     std::pair{"gamma3", &d.gamma3}, std::pair{"lambda", &d.lambda}}) {
            json arr = json::array();
            for (const auto& x : *v) arr.push_back(to_json(x));
            m[key] = arr;
        }
        m["M"] = to_json(d.M);
        m["R"] = to_json(d.R);
        m["C"] = to_json(d.C);
        m["N"] = to_json(d.N);
        j["matrices"] = m;
    }
    return j;
}

NearGroupData data_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("data file must be a JSON object");
    if (j.value("schema", "") != "neargroup-data") throw std::invalid_argument("schema must be neargroup-data");
    if (j.value("version", 0) != kDataSchemaVersion) throw std::invalid_argument("unsupported data schema version");
    AbelianGroup G = AbelianGroup::parse(j.at("group").get<std::string>());
    PiStructure pi = PiStructure::parse(G, j.at("pi").get<std::string>());
    IndexAlgebra idx(pi);
    if (j.at("k").get<int>() != idx.k()) throw std::invalid_argument("k does not match |G| - 1");
    if (j.contains("flags") && !j["flags"].value("trivial_alpha_beta", true))
        throw std::invalid_argument("only data with trivial alpha and beta is supported");
    NearGroupPrimitive prim = primitive_from_json(j, idx);
    if (!j.contains("matrices")) return construct_from_primitive(G, pi, prim);

    NearGroupData d;
    d.group = G;
    d.pi = pi;
    d.idx = idx;
    d.prim = prim;
    d.k = idx.k();
    d.order = G.exponent();
    const auto& m = j.at("matrices");
    int n = G.order(), k = d.k;
    auto read_family = [&](const char* key) {
        std::vector<Matrix> out;
        for (const auto& x : m.at(key)) {
            Matrix mm = matrix_from_json(x);
            if (static_cast<int>(mm.rows()) != k || static_cast<int>(mm.cols()) != k)
                throw std::invalid_argument(std::string(key) + " matrices must be k x k");
            out.push_back(mm);
        }
        if (static_cast<int>(out.size()) != n) throw std::invalid_argument(std::string(key) + " needs one matrix per group element");
        return out;
    };
    d.gamma1 = read_family("gamma1");
    d.gamma2 = read_family("gamma2");
    d.gamma3 = read_family("gamma3");
    d.lambda = read_family("lambda");
    auto read_block = [&](const char* key, int rows, int cols) {
        Matrix mm = matrix_from_json(m.at(key));
        if (static_cast<int>(mm.rows()) != rows || static_cast<int>(mm.cols()) != cols)
            throw std::invalid_argument(std::string("block ") + key + " has the wrong shape");
        return mm;
    };
    d.M = read_block("M", n, n);
    d.R = read_block("R", n, k * k);
    d.C = read_block("C", k * k, n);
    d.N = read_block("N", k * k, k * k);
    lift_all(d);
    return d;
}

}  // namespace neargroup

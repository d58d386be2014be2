#include "neargroup/pi_structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neargroup {

PiStructure::PiStructure(AbelianGroup group, std::vector<int> mapping) : group_(std::move(group)), map_(std::move(mapping)) {
    int n = group_.order();
    if (static_cast<int>(map_.size()) != n) throw std::invalid_argument("pi mapping must have one slot per element");
    map_[0] = 0;
    inv_.assign(n, -1);
    inv_[0] = 0;
    for (int x = 1; x < n; ++x) {
        int y = map_[x];
        if (y < 1 || y >= n || inv_[y] != -1) throw std::invalid_argument("pi is not a permutation of the nonidentity elements");
        inv_[y] = x;
    }
}

PiStructure PiStructure::parse(const AbelianGroup& group, const std::string& cycles) {
    std::vector<int> map(group.order());
    for (int x = 0; x < group.order(); ++x) map[x] = x;
    std::set<int> seen;
    static const std::regex cycle_re("\\(([^()]*)\\)");
    auto begin = std::sregex_iterator(cycles.begin(), cycles.end(), cycle_re);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        std::string body = (*it)[1].str();
        std::replace(body.begin(), body.end(), ',', ' ');
        std::stringstream ss(body);
        std::vector<int> cyc;
        std::string name;
        while (ss >> name) {
            int x = group.parse_element(name);
            if (x == 0) throw std::invalid_argument("pi cycles may not contain the identity");
            if (!seen.insert(x).second) throw std::invalid_argument("element repeated in pi cycles: " + name);
            cyc.push_back(x);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) map[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    std::string stripped;
    for (char c : cycles)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    std::size_t body_chars = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it)
        for (char c : it->str())
            if (!std::isspace(static_cast<unsigned char>(c))) ++body_chars;
    if (body_chars != stripped.size()) throw std::invalid_argument("malformed cycle notation: " + cycles);
    return PiStructure(group, map);
}

std::vector<std::string> PiStructure::violations() const {
    std::vector<std::string> out;
    int n = group_.order();
    const auto name = [&](int x) { return group_.element_name(x); };
    for (int x = 1; x < n; ++x)
        if (map_[map_[map_[x]]] != x) out.push_back("pi^3 != id at " + name(x));
    for (int x = 1; x < n; ++x)
        if (group_.inv(map_[x]) != inv_[group_.inv(x)]) out.push_back("pi(x)^-1 != pi^-1(x^-1) at x=" + name(x));
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t) {
            if (s == group_.inv(t)) continue;
            int inner = group_.mul(group_.inv(map_[s]), map_[group_.inv(t)]);
            if (inner == 0) {
                out.push_back("product rule argument is the identity at s=" + name(s) + ", t=" + name(t));
                continue;
            }
            if (map_[group_.mul(s, t)] != group_.mul(map_[t], map_[inner]))
                out.push_back("pi(st) product rule fails at s=" + name(s) + ", t=" + name(t));
        }
    if (n > 1) {
        int w = group_.mul(group_.mul(1, map_[1]), inv_[1]);
        for (int s = 2; s < n; ++s)
            if (group_.mul(group_.mul(s, map_[s]), inv_[s]) != w) {
                out.push_back("s pi(s) pi^-1(s) is not constant");
                break;
            }
        if (group_.mul(w, w) != 0) out.push_back("omega^2 != e");
    }
    return out;
}

int PiStructure::omega() const {
    int n = group_.order();
    if (n == 1) return 0;
    int w = group_.mul(group_.mul(1, map_[1]), inv_[1]);
    for (int s = 2; s < n; ++s)
        if (group_.mul(group_.mul(s, map_[s]), inv_[s]) != w) throw std::domain_error("s pi(s) pi^-1(s) depends on s");
    return w;
}

std::string PiStructure::to_cycle_notation() const {
    std::string out;
    std::vector<bool> done(map_.size(), false);
    for (std::size_t x = 1; x < map_.size(); ++x) {
        if (done[x] || map_[x] == static_cast<int>(x)) continue;
        out += "(";
        int y = static_cast<int>(x);
        bool first = true;
        while (!done[y]) {
            if (!first) out += " ";
            out += group_.element_name(y);
            done[y] = true;
            first = false;
            y = map_[y];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::vector<PiStructure> find_all_pi(const AbelianGroup& G) {
    int n = G.order();
    std::vector<PiStructure> found;
    std::vector<int> pi(n, -1), pinv(n, -1);
    pi[0] = pinv[0] = 0;

    // Checks every instance of the conditions whose values are all assigned.
    auto consistent = [&]() {
        for (int x = 1; x < n; ++x) {
            if (pi[x] < 0) continue;
            int y = G.inv(pi[x]);
            if (pi[y] >= 0 && pi[y] != G.inv(x)) return false;
        }
        for (int s = 1; s < n; ++s) {
            if (pi[s] < 0) continue;
            for (int t = 1; t < n; ++t) {
                if (s == G.inv(t) || pi[t] < 0) continue;
                int st = G.mul(s, t), ti = G.inv(t);
                if (pi[st] < 0 || pi[ti] < 0) continue;
                int inner = G.mul(G.inv(pi[s]), pi[ti]);
                if (inner == 0) return false;
                if (pi[inner] < 0) continue;
                if (pi[st] != G.mul(pi[t], pi[inner])) return false;
            }
        }
        return true;
    };

    std::function<void()> dfs = [&]() {
        int x = 1;
        while (x < n && pi[x] >= 0) ++x;
        if (x == n) {
            PiStructure p(G, pi);
            if (p.is_valid()) found.push_back(p);
            return;
        }
        pi[x] = pinv[x] = x;
        if (consistent()) dfs();
        pi[x] = pinv[x] = -1;
        for (int y = x + 1; y < n; ++y) {
            if (pi[y] >= 0) continue;
            for (int z = x + 1; z < n; ++z) {
                if (z == y || pi[z] >= 0) continue;
                pi[x] = y, pi[y] = z, pi[z] = x;
                pinv[y] = x, pinv[z] = y, pinv[x] = z;
                if (consistent()) dfs();
                pi[x] = pi[y] = pi[z] = -1;
                pinv[x] = pinv[y] = pinv[z] = -1;
            }
        }
    };
    dfs();
    return found;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(int q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    int p = 2;
    while (q % p != 0) ++p;
    int a = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++a;
    }
    if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {p, a};
}

namespace {

// Conway polynomials, low degree first.
const std::map<int, std::vector<int>>& conway_table() {
    static const std::map<int, std::vector<int>> t = {
        {4, {1, 1, 1}},       {8, {1, 1, 0, 1}}, {9, {2, 2, 1}},
        {16, {1, 1, 0, 0, 1}}, {25, {2, 4, 1}},   {27, {1, 2, 0, 1}},
    };
    return t;
}

std::vector<int> decode(int code, int p, int len) {
    std::vector<int> d(len);
    for (int i = 0; i < len; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int code = 0;
    for (int i = static_cast<int>(d.size()); i-- > 0;) code = code * p + d[i];
    return code;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    auto [p, a] = prime_power(q);
    p_ = p;
    alpha_ = a;
    auto build = [&](const std::vector<int>& mod) {
        modulus_ = mod;
        add_.assign(static_cast<std::size_t>(q) * q, 0);
        mul_.assign(static_cast<std::size_t>(q) * q, 0);
        for (int x = 0; x < q; ++x) {
            auto dx = decode(x, p, a);
            for (int y = 0; y < q; ++y) {
                auto dy = decode(y, p, a);
                std::vector<int> s(a);
                for (int i = 0; i < a; ++i) s[i] = (dx[i] + dy[i]) % p;
                add_[x * q + y] = encode(s, p);
                std::vector<int> prod(2 * a - 1, 0);
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
                for (int d = 2 * a - 2; d >= a; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    for (int i = 0; i <= a; ++i) prod[d - a + i] = ((prod[d - a + i] - c * mod[i]) % p + p) % p;
                }
                prod.resize(a);
                mul_[x * q + y] = encode(prod, p);
            }
        }
    };
    auto mult_order = [&](int x) {
        int y = x, n = 1;
        while (y != 1 && n < q) {
            y = mul(y, x);
            ++n;
        }
        return y == 1 ? n : 0;
    };
    if (a == 1) {
        build({0, 1});
    } else if (conway_table().count(q)) {
        build(conway_table().at(q));
    } else {
        // Least monic polynomial (by code) for which x generates the units.
        bool ok = false;
        for (int c = 0; c < q && !ok; ++c) {
            auto low = decode(c, p, a);
            if (low[0] == 0) continue;
            low.push_back(1);
            build(low);
            ok = mult_order(a == 1 ? 1 : p) == q - 1;
        }
        if (!ok) throw std::logic_error("no primitive polynomial found");
    }
    gen_ = 0;
    for (int x = 1; x < q && !gen_; ++x)
        if (mult_order(x) == q - 1) gen_ = x;
    if (q == 2) gen_ = 1;
    if (!gen_) throw std::logic_error("field has no multiplicative generator");
}

int FiniteField::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("no additive inverse");
}

int FiniteField::inv(int a) const {
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
}

std::pair<AbelianGroup, PiStructure> pi_from_field(int q) {
    FiniteField f(q);
    AbelianGroup G = AbelianGroup::cyclic(q - 1);
    std::vector<int> log(q, -1), power(q - 1);
    int y = 1;
    for (int i = 0; i < q - 1; ++i) {
        power[i] = y;
        log[y] = i;
        y = f.mul(y, f.generator());
    }
    // Cyclic group element index i is the residue i, matching g^i.
    std::vector<int> map(G.order(), 0);
    for (int i = 1; i < q - 1; ++i) {
        int x = power[i];
        int one_minus_x = f.add(1, f.neg(x));
        map[i] = log[f.inv(one_minus_x)];
    }
    return {G, PiStructure(G, map)};
}

std::vector<std::string> FieldTable::axiom_violations() const {
    std::vector<std::string> out;
    int q = size;
    auto fail = [&](const std::string& s) {
        if (out.size() < 20) out.push_back(s);
    };
    for (int a = 0; a < q; ++a) {
        if (plus(0, a) != a) fail("0 is not an additive identity");
        if (times(1, a) != a) fail("1 is not a multiplicative identity");
        if (times(0, a) != 0) fail("0 does not absorb");
        bool has_neg = false, has_inv = a == 0;
        for (int b = 0; b < q; ++b) {
            if (plus(a, b) != plus(b, a)) fail("addition not commutative");
            if (times(a, b) != times(b, a)) fail("multiplication not commutative");
            if (plus(a, b) == 0) has_neg = true;
            if (a != 0 && times(a, b) == 1) has_inv = true;
            for (int c = 0; c < q; ++c) {
                if (plus(plus(a, b), c) != plus(a, plus(b, c))) fail("addition not associative");
                if (times(times(a, b), c) != times(a, times(b, c))) fail("multiplication not associative");
                if (times(a, plus(b, c)) != plus(times(a, b), times(a, c))) fail("distributivity fails");
            }
        }
        if (!has_neg) fail("missing additive inverse");
        if (!has_inv) fail("missing multiplicative inverse");
    }
    return out;
}

FieldTable field_from_pi(const PiStructure& pi) {
    const AbelianGroup& G = pi.group();
    int n = G.order(), q = n + 1;
    int w = pi.omega();
    FieldTable t;
    t.size = q;
    t.add.assign(static_cast<std::size_t>(q) * q, 0);
    t.mul.assign(static_cast<std::size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            t.mul[a * q + b] = (a == 0 || b == 0) ? 0 : 1 + G.mul(a - 1, b - 1);
            int sum;
            if (a == 0) sum = b;
            else if (b == 0) sum = a;
            else {
                int ga = a - 1, gb = b - 1;
                if (gb == G.mul(w, ga)) sum = 0;
                else sum = 1 + G.mul(G.inv(pi.apply(G.mul(w, G.mul(gb, G.inv(ga))))), ga);
            }
            t.add[a * q + b] = sum;
        }
    auto bad = t.axiom_violations();
    if (!bad.empty()) throw std::domain_error("reconstructed table is not a field: " + bad.front());
    return t;
}

FieldTable field_table(const FiniteField& f) {
    int q = f.size();
    std::vector<int> to_table(q, 0), from_table(q, 0);
    int y = 1;
    for (int i = 0; i < q - 1; ++i) {
        to_table[y] = 1 + i;
        from_table[1 + i] = y;
        y = f.mul(y, f.generator());
    }
    FieldTable t;
    t.size = q;
    t.add.resize(static_cast<std::size_t>(q) * q);
    t.mul.resize(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            t.add[a * q + b] = to_table[f.add(from_table[a], from_table[b])];
            t.mul[a * q + b] = to_table[f.mul(from_table[a], from_table[b])];
        }
    return t;
}

bool fields_isomorphic(const FieldTable& a, const FieldTable& b) {
    if (a.size != b.size) return false;
    int q = a.size;
    if (q == 2) return a.add == b.add && a.mul == b.mul;
    auto order_of = [q](const FieldTable& t, int x) {
        int y = x, n = 1;
        while (y != 1 && n < q) {
            y = t.times(y, x);
            ++n;
        }
        return n;
    };
    int ga = 0;
    for (int x = 2; x < q && !ga; ++x)
        if (order_of(a, x) == q - 1) ga = x;
    if (!ga) return false;
    std::vector<int> pa(q - 1);
    pa[0] = 1;
    for (int i = 1; i < q - 1; ++i) pa[i] = a.times(pa[i - 1], ga);
    for (int gb = 2; gb < q; ++gb) {
        if (order_of(b, gb) != q - 1) continue;
        std::vector<int> phi(q, 0);
        int y = 1;
        for (int i = 0; i < q - 1; ++i) {
            phi[pa[i]] = y;
            y = b.times(y, gb);
        }
        bool ok = true;
        for (int x = 0; x < q && ok; ++x)
            for (int z = 0; z < q && ok; ++z) ok = phi[a.plus(x, z)] == b.plus(phi[x], phi[z]);
        if (ok) return true;
    }
    return false;
}

AffineFusion affine_group_fusion(int q) {
    if (q < 3) throw std::invalid_argument("affine group fusion needs q >= 3");
    FiniteField f(q);
    // (b, a) acts as x -> a x + b; index = b * (q - 1) + (a - 1).
    int n = q * (q - 1);
    auto idx = [q](int b, int a) { return b * (q - 1) + (a - 1); };
    std::vector<int> mult(static_cast<std::size_t>(n) * n), inv(n);
    for (int b1 = 0; b1 < q; ++b1)
        for (int a1 = 1; a1 < q; ++a1) {
            int ai = f.inv(a1);
            inv[idx(b1, a1)] = idx(f.neg(f.mul(ai, b1)), ai);
            for (int b2 = 0; b2 < q; ++b2)
                for (int a2 = 1; a2 < q; ++a2)
                    mult[idx(b1, a1) * n + idx(b2, a2)] = idx(f.add(f.mul(a1, b2), b1), f.mul(a1, a2));
        }
    auto m = [&](int x, int y) { return mult[x * n + y]; };

    AffineFusion out;
    out.group_order = n;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        ++out.conjugacy_classes;
        for (int g = 0; g < n; ++g) seen[m(m(g, x), inv[g])] = true;
    }
    std::vector<bool> in_sub(n, false);
    std::vector<int> sub{idx(0, 1)};
    in_sub[idx(0, 1)] = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int c = m(m(x, y), m(inv[x], inv[y]));
            if (!in_sub[c]) {
                in_sub[c] = true;
                sub.push_back(c);
            }
        }
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (int c : {m(sub[i], sub[j]), m(sub[j], sub[i])})
                if (!in_sub[c]) {
                    in_sub[c] = true;
                    sub.push_back(c);
                }
    out.linear_irreps = n / static_cast<int>(sub.size());
    int nonlinear = out.conjugacy_classes - out.linear_irreps;
    int rest = n - out.linear_irreps;
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rest))));
    if (nonlinear != 1 || d * d != rest) throw std::logic_error("affine group does not have a single nonlinear irrep");
    out.big_irrep_dim = d;
    // V (x) V = (sum of linear characters) + k V, so d^2 = linear + k d.
    out.k = (d * d - out.linear_irreps) / d;
    return out;
}

}  // namespace neargroup

#include "neargroup/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace neargroup {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long mod_floor(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

namespace {

using Poly = std::vector<long>;

// Exact division of integer polynomials by a monic divisor.
Poly poly_div_monic(Poly num, const Poly& den) {
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    Poly quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        long c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (int i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

// x^e mod Phi_N for every e in [0, N).
struct ReductionTable {
    int n = 1;
    int phi = 1;
    std::vector<std::vector<long>> rows;
};

std::mutex g_cache_mutex;
std::map<int, Poly> g_phi_cache;
std::map<int, std::shared_ptr<const ReductionTable>> g_table_cache;

const Poly& phi_poly_locked(int n) {
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_monic(p, phi_poly_locked(d));
    return g_phi_cache.emplace(n, std::move(p)).first->second;
}

std::shared_ptr<const ReductionTable> table_for(int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_table_cache.find(n);
    if (it != g_table_cache.end()) return it->second;
    const Poly& phi = phi_poly_locked(n);
    auto t = std::make_shared<ReductionTable>();
    t->n = n;
    t->phi = static_cast<int>(phi.size()) - 1;
    t->rows.assign(n, std::vector<long>(t->phi, 0));
    std::vector<long> cur(t->phi + 1, 0);
    cur[0] = 1;
    for (int e = 0; e < n; ++e) {
        if (e > 0) {
            for (int j = t->phi; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            long top = cur[t->phi];
            if (top != 0)
                for (int j = 0; j <= t->phi; ++j) cur[j] -= top * phi[j];
        }
        for (int j = 0; j < t->phi; ++j) t->rows[e][j] = cur[j];
    }
    g_table_cache.emplace(n, t);
    return t;
}

// Folds a length-N accumulator over powers of zeta_N into canonical form.
std::vector<Rational> reduce_slots(const ReductionTable& t, const std::vector<Rational>& slots) {
    std::vector<Rational> out(t.phi);
    for (int e = 0; e < t.n; ++e) {
        const Rational& c = slots[e];
        if (sgn(c) == 0) continue;
        if (e < t.phi) {
            out[e] += c;
            continue;
        }
        const auto& row = t.rows[e];
        for (int j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += c * row[j];
    }
    return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return phi_poly_locked(n);
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value, int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(euler_phi(order), Rational(0));
    coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    auto t = table_for(order);
    if (static_cast<int>(coeffs.size()) == t->phi) {
        coeffs_ = std::move(coeffs);
        for (auto& c : coeffs_) c.canonicalize();
        return;
    }
    // Longer inputs are read as polynomials in zeta_N and reduced.
    std::vector<Rational> slots(order);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        coeffs[j].canonicalize();
        slots[j % order] += coeffs[j];
    }
    coeffs_ = reduce_slots(*t, slots);
}

Cyclotomic Cyclotomic::zero(int order) { return Cyclotomic(Rational(0), order); }
Cyclotomic Cyclotomic::one(int order) { return Cyclotomic(Rational(1), order); }

Cyclotomic Cyclotomic::lift(int n) const {
    if (n == order_) return *this;
    if (n % order_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
    auto t = table_for(n);
    int step = n / order_;
    std::vector<Rational> slots(n);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) slots[j * step] = coeffs_[j];
    Cyclotomic r;
    r.order_ = n;
    r.coeffs_ = reduce_slots(*t, slots);
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational element");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ != o.order_) {
        auto [a, b] = lift_to_common_order(*this, o);
        *this = std::move(a);
        return *this += b;
    }
    for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    *this = *this * o.inverse();
    return *this;
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        auto [x, y] = lift_to_common_order(a, b);
        return x * y;
    }
    int n = a.order();
    if (n <= 2) return Cyclotomic(n, {Rational(a.coeffs()[0] * b.coeffs()[0])});
    auto t = table_for(n);
    std::vector<Rational> slots(n);
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); ++i) {
        if (sgn(ca[i]) == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (sgn(cb[j]) == 0) continue;
            slots[(i + j) % n] += ca[i] * cb[j];
        }
    }
    return Cyclotomic(n, reduce_slots(*t, slots));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::galois(long t) const {
    if (order_ <= 2) return *this;
    if (gcd_long(mod_floor(t, order_), order_) != 1)
        throw std::invalid_argument("Galois exponent must be a unit");
    auto tab = table_for(order_);
    std::vector<Rational> slots(order_);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) slots[mod_floor(static_cast<long>(j) * t, order_)] += coeffs_[j];
    return Cyclotomic(order_, reduce_slots(*tab, slots));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], order_);
    int nonzero = 0, pos = 0;
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) {
            ++nonzero;
            pos = static_cast<int>(j);
        }
    if (nonzero == 1) {
        auto tab = table_for(order_);
        std::vector<Rational> slots(order_);
        slots[mod_floor(-pos, order_)] = Rational(1) / coeffs_[pos];
        return Cyclotomic(order_, reduce_slots(*tab, slots));
    }
    // a^{-1} = (product of the other conjugates) / norm(a)
    Cyclotomic prod = one(order_);
    for (long t = 2; t < order_; ++t)
        if (gcd_long(t, order_) == 1) prod *= galois(t);
    Cyclotomic norm = *this * prod;
    if (!norm.is_rational()) throw std::logic_error("norm is not rational");
    return prod * Cyclotomic(Rational(1) / norm.coeffs_[0], order_);
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic result = one(order_);
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

std::optional<std::pair<int, int>> Cyclotomic::as_root_of_unity() const {
    int m = static_cast<int>(lcm_long(2, order_));
    Cyclotomic x = lift(m);
    auto tab = table_for(m);
    for (int e = 0; e < m; ++e) {
        const auto& row = tab->rows[e];
        bool same = true;
        for (int j = 0; j < tab->phi && same; ++j) same = (x.coeffs_[j] == row[j]);
        if (same) return std::make_pair(m, e);
    }
    return std::nullopt;
}

std::optional<int> Cyclotomic::root_order() const {
    auto r = as_root_of_unity();
    if (!r) return std::nullopt;
    return static_cast<int>(r->first / gcd_long(r->first, r->second));
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    if (auto r = as_root_of_unity()) {
        long g = gcd_long(r->first, r->second);
        long m = r->first / g, e = r->second / g;
        std::ostringstream os;
        os << "E(" << m << ")";
        if (e != 1) os << "^" << e;
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (j == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "E(" << order_ << ")";
        if (j != 1) os << "^" << j;
    }
    return os.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = lift_to_common_order(a, b);
    return x.coeffs_ == y.coeffs_;
}

Cyclotomic root_of_unity(int n, long j) {
    if (n < 1) throw std::invalid_argument("root of unity order must be positive");
    auto t = table_for(n);
    const auto& row = t->rows[mod_floor(j, n)];
    std::vector<Rational> c(t->phi);
    for (int i = 0; i < t->phi; ++i) c[i] = row[i];
    return Cyclotomic(n, std::move(c));
}

std::pair<Cyclotomic, Cyclotomic> lift_to_common_order(const Cyclotomic& a, const Cyclotomic& b) {
    int n = static_cast<int>(lcm_long(a.order(), b.order()));
    return {a.lift(n), b.lift(n)};
}

}  // namespace neargroup

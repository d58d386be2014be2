#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neargroup {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical rational num/den (den > 0, lowest terms).
Rational make_rational(long num, long den = 1);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);
long mod_floor(long a, long n);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N), stored in the power basis of zeta_N reduced modulo
// Phi_N. Elements of different orders compare equal when they agree as
// field elements.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value);  // NOLINT: implicit from integer literals
    explicit Cyclotomic(const Rational& value, int order = 1);
    Cyclotomic(int order, std::vector<Rational> coeffs);

    static Cyclotomic zero(int order = 1);
    static Cyclotomic one(int order = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Same element written at order `n`, which must be a multiple of order().
    Cyclotomic lift(int n) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    Cyclotomic inverse() const;  // throws on zero
    Cyclotomic pow(long e) const;
    // Image under the Galois automorphism zeta_N -> zeta_N^t, gcd(t, N) = 1.
    Cyclotomic galois(long t) const;
    Cyclotomic conj() const { return galois(-1); }

    // If this is a root of unity, returns (M, e) with value zeta_M^e,
    // M = lcm(2, order) and 0 <= e < M.
    std::optional<std::pair<int, int>> as_root_of_unity() const;
    // Multiplicative order if a root of unity.
    std::optional<int> root_order() const;

    std::string to_string() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> coeffs_;
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);

// zeta_N^j.
Cyclotomic root_of_unity(int n, long j);

std::pair<Cyclotomic, Cyclotomic> lift_to_common_order(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace neargroup

#include "neargroup/lattice.hpp"
#include "neargroup/matrix.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace neargroup;
using testutil::close;
using testutil::numeric;

TEST_CASE("roots of unity") {
    CHECK(root_of_unity(3, 3).is_one());
    CHECK((Cyclotomic(1) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == Cyclotomic(-1));
    CHECK(root_of_unity(8, 2) == root_of_unity(4, 1));
    CHECK(root_of_unity(6, 1) == -root_of_unity(3, 2));
    CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
    auto r = root_of_unity(12, 5).as_root_of_unity();
    REQUIRE(r);
    CHECK(root_of_unity(r->first, r->second) == root_of_unity(12, 5));
    CHECK(root_of_unity(12, 5).root_order() == 12);
    CHECK(!(Cyclotomic(2).as_root_of_unity()));
    CHECK(!(Cyclotomic(1) + root_of_unity(4, 1)).as_root_of_unity());
}

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
    for (int n = 1; n <= 30; ++n) {
        std::vector<long> prod{1};
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            const auto& f = cyclotomic_polynomial(d);
            std::vector<long> next(prod.size() + f.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
            prod = next;
        }
        std::vector<long> want(n + 1, 0);
        want[0] = -1;
        want[n] = 1;
        CHECK_MESSAGE(prod == want, "n=" << n);
    }
}

TEST_CASE("field operations agree with floating point") {
    std::mt19937 rng(7);
    for (int order : {1, 3, 4, 5, 8, 9, 12, 15, 20}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclotomic a = testutil::random_cyclotomic(rng, order);
            Cyclotomic b = testutil::random_cyclotomic(rng, order == 1 ? 1 : (trial % 2 ? order : 2 * order));
            CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
            CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
            CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
            if (!b.is_zero()) {
                CHECK(close(numeric(a / b), numeric(a) / numeric(b), 1e-6));
                CHECK((b * b.inverse()).is_one());
            }
            CHECK(close(numeric(a.conj()), std::conj(numeric(a))));
            CHECK(close(numeric(a.pow(3)), std::pow(numeric(a), 3), 1e-6));
        }
    }
}

TEST_CASE("equality across orders") {
    Cyclotomic half(Rational(1, 2));
    CHECK(half == half.lift(12));
    CHECK(root_of_unity(3, 1).lift(6) == root_of_unity(6, 2));
    CHECK(root_of_unity(3, 1) != root_of_unity(3, 2));
    CHECK_THROWS(Cyclotomic(0).inverse());
}

TEST_CASE("galois action is a ring map") {
    std::mt19937 rng(11);
    for (int t : {1, 5, 7, 11}) {
        Cyclotomic a = testutil::random_cyclotomic(rng, 12), b = testutil::random_cyclotomic(rng, 12);
        CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
        CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
    }
    CHECK(root_of_unity(12, 1).galois(5) == root_of_unity(12, 5));
}

TEST_CASE("determinant agrees with the Leibniz formula") {
    std::mt19937 rng(3);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            Matrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = trial % 2 ? testutil::random_cyclotomic(rng, 4, 2) : Cyclotomic(rng() % 5 - 2L);
            CHECK(det(m) == testutil::leibniz_det(m));
            if (!det(m).is_zero()) {
                CHECK((m * inverse(m)).is_identity());
                CHECK(rank(m) == static_cast<std::size_t>(n));
            } else {
                CHECK_THROWS_AS(inverse(m), std::domain_error);
            }
        }
}

TEST_CASE("kronecker product layout") {
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    Matrix k = kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == Cyclotomic(1));
    CHECK(k(2, 1) == Cyclotomic(3));
    CHECK(k(3, 2) == Cyclotomic(4));
    CHECK(k(2, 2).is_zero());
    CHECK(det(k) == det(a).pow(2) * det(b).pow(2));
}

TEST_CASE("smith normal form") {
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(a, 3);
    CHECK(int_multiply(int_multiply(s.U, a), s.V) == s.D);
    REQUIRE(s.invariants.size() == 3);
    CHECK(s.invariants[0] == 2);
    CHECK(s.invariants[1] == 6);
    CHECK(s.invariants[2] == 12);
}

TEST_CASE("modular solutions agree with brute force") {
    IntMatrix a{{2, 3, 0}, {0, 4, 6}};
    IntVector b{1, 2};
    for (int m : {6, 12}) {
        ModularSolution s = solve_mod(a, b, 3, Integer(m));
        std::vector<IntVector> got = s.solvable ? enumerate_mod(s, Integer(m), 100000) : std::vector<IntVector>{};
        std::sort(got.begin(), got.end());
        std::vector<IntVector> want;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    if ((2 * x + 3 * y - 1) % m == 0 && (4 * y + 6 * z - 2) % m == 0) want.push_back({x, y, z});
        CHECK_MESSAGE(got == want, "m=" << m);
    }
}

TEST_CASE("integer kernel") {
    IntMatrix a{{1, 2, 3}, {2, 4, 6}};
    IntMatrix k = integer_kernel(a, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(int_apply(a, v) == IntVector{0, 0});
}

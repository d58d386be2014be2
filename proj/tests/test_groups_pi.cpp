#include "neargroup/pi_structure.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace neargroup;

namespace {

int partitions(int n) {
    std::vector<int> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int i = part; i <= n; ++i) p[i] += p[i - part];
    return p[n];
}

// Number of abelian groups of order n: product of partition counts of the prime exponents.
int abelian_count(int n) {
    int out = 1;
    for (int p = 2; n > 1; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out *= partitions(e);
    }
    return out;
}

bool is_prime_power_plus_one(int n) {
    int q = n + 1;
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    return false;
}

}  // namespace

TEST_CASE("abelian group enumeration") {
    for (int n = 1; n <= 64; ++n) CHECK_MESSAGE(abelian_groups_of_order(n).size() == static_cast<std::size_t>(abelian_count(n)), n);
}

TEST_CASE("group structure and characters") {
    for (const char* d : {"Z1", "Z6", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2"}) {
        AbelianGroup G = AbelianGroup::parse(d);
        int n = G.order();
        CHECK(AbelianGroup::parse(G.descriptor()) == G);
        for (int a = 0; a < n; ++a) {
            CHECK(G.mul(a, G.inv(a)) == 0);
            CHECK(G.parse_element(G.element_name(a)) == a);
            CHECK(G.pow(a, G.element_order(a)) == 0);
        }
        for (int c = 0; c < n; ++c) {
            Cyclotomic sum(0);
            for (int g = 0; g < n; ++g) {
                sum += G.character_value(c, g);
                for (int h = 0; h < n; ++h)
                    CHECK(G.character_value(c, G.mul(g, h)) == G.character_value(c, g) * G.character_value(c, h));
            }
            CHECK(sum == Cyclotomic(c == 0 ? n : 0));
        }
        // Distinct characters.
        std::set<std::vector<std::string>> rows;
        for (int c = 0; c < n; ++c) {
            std::vector<std::string> r;
            for (int g = 0; g < n; ++g) r.push_back(G.character_value(c, g).to_string());
            rows.insert(r);
        }
        CHECK(rows.size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS(AbelianGroup::parse("Zx"));
    CHECK_THROWS(AbelianGroup::parse("Z0"));
}

TEST_CASE("pi exists exactly for multiplicative groups of fields") {
    for (int n = 1; n <= 15; ++n)
        for (const auto& G : abelian_groups_of_order(n)) {
            bool expect = G.is_cyclic() && is_prime_power_plus_one(n);
            auto all = find_all_pi(G);
            CHECK_MESSAGE(all.empty() != expect, G.descriptor());
            for (const auto& p : all) CHECK(p.is_valid());
        }
}

TEST_CASE("pi from a field") {
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto [G, pi] = pi_from_field(q);
        CHECK(G.order() == q - 1);
        CHECK(pi.is_valid());
        auto all = find_all_pi(G);
        if (q <= 9) CHECK(std::find(all.begin(), all.end(), pi) != all.end());
        CHECK(PiStructure::parse(G, pi.to_cycle_notation()) == pi);
        // omega is -1 in the field: the unique element of order 2, or e in characteristic 2.
        int w = pi.omega();
        CHECK(G.mul(w, w) == 0);
        CHECK((w == 0) == (q % 2 == 0));
    }
    CHECK_THROWS(pi_from_field(6));
}

TEST_CASE("reference Z/4 pi cycle") {
    auto [G, pi] = pi_from_field(5);
    CHECK(pi.to_cycle_notation() == "(g g^2 g^3)");
    auto all = find_all_pi(G);
    CHECK(std::find(all.begin(), all.end(), pi) != all.end());
    CHECK_THROWS(PiStructure::parse(G, "(g g^5)"));
}

TEST_CASE("field reconstruction") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        auto [G, pi] = pi_from_field(q);
        for (const auto& p : find_all_pi(G)) {
            FieldTable t = field_from_pi(p);
            CHECK(t.axiom_violations().empty());
            CHECK(fields_isomorphic(t, field_table(FiniteField(q))));
        }
    }
}

TEST_CASE("prime fields match integer arithmetic mod p") {
    for (int p : {3, 5, 7, 11}) {
        FiniteField f(p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
            }
    }
}

TEST_CASE("non-isomorphic tables are told apart") {
    FieldTable a = field_table(FiniteField(5));
    FieldTable b = a;
    std::swap(b.add[1 * 5 + 1], b.add[1 * 5 + 2]);
    CHECK(!b.axiom_violations().empty());
    CHECK(!fields_isomorphic(a, b));
}

TEST_CASE("affine group fusion by class counting") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        AffineFusion f = affine_group_fusion(q);
        CHECK(f.group_order == q * (q - 1));
        CHECK(f.linear_irreps == q - 1);
        CHECK(f.big_irrep_dim == q - 1);
        CHECK(f.k == q - 2);
        CHECK(f.conjugacy_classes == q);
    }
}

TEST_CASE("affine group classes for prime q, brute force") {
    for (int q : {3, 5, 7}) {
        // Elements x -> a x + b, a != 0.
        auto compose = [&](std::pair<int, int> u, std::pair<int, int> v) {
            return std::pair<int, int>{u.first * v.first % q, (u.first * v.second + u.second) % q};
        };
        std::set<std::set<std::pair<int, int>>> classes;
        for (int a = 1; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                std::set<std::pair<int, int>> cls;
                for (int c = 1; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        int cinv = 1;
                        while (cinv * c % q != 1) ++cinv;
                        std::pair<int, int> g{c, d}, gi{cinv, (q - cinv * d % q) % q};
                        cls.insert(compose(compose(g, {a, b}), gi));
                    }
                classes.insert(cls);
            }
        CHECK(static_cast<int>(classes.size()) == affine_group_fusion(q).conjugacy_classes);
    }
}

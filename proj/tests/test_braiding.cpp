#include "neargroup/braiding.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace neargroup;

namespace {

NearGroupData standard(int q) {
    auto [G, pi] = pi_from_field(q);
    return construct_standard(G, pi);
}

bool hexagons_pass(const NearGroupData& d, const BraidingData& b, bool include_inverse) {
    for (const auto& f : verify_hexagons(d, b).families())
        if (!f.passed() && (include_inverse || f.family.rfind("inv:", 0) != 0)) return false;
    return true;
}

// Exponent of x as a power of zeta_360; every order used here divides 360.
int exponent360(const Cyclotomic& x) {
    for (int j = 0; j < 360; ++j)
        if (root_of_unity(360, j) == x) return j;
    return -1;
}

std::string key(const BraidingData& b) {
    std::string s = std::to_string(exponent360(b.sigma3_eps));
    for (std::size_t i = 1; i < b.psi.size(); ++i) s += "|" + std::to_string(exponent360(b.psi[i]));
    return s;
}

// Every (sigma3, psi) with entries in mu_n, checked against the unreduced hexagons only.
std::set<std::string> brute_force(const NearGroupData& d, int n, bool include_inverse) {
    std::set<std::string> out;
    int k = d.k;
    std::vector<int> e(k + 1, 0);
    while (true) {
        BraidingData b;
        b.sigma3_eps = root_of_unity(n, e[0]);
        b.psi.assign(k + 1, Cyclotomic(1));
        for (int i = 1; i <= k; ++i) b.psi[i] = root_of_unity(n, e[i]);
        if (hexagons_pass(d, b, include_inverse)) out.insert(key(b));
        int i = 0;
        while (i <= k && ++e[i] == n) e[i++] = 0;
        if (i > k) break;
    }
    return out;
}

std::set<std::string> keys(const std::vector<BraidingData>& bs) {
    std::set<std::string> out;
    for (const auto& b : bs) out.insert(key(b));
    return out;
}

}  // namespace

TEST_CASE("derived braiding data") {
    for (int q : {3, 4, 5, 7}) {
        NearGroupData d = standard(q);
        BraidingData b = BraidingData::trivial(d);
        const AbelianGroup& G = d.group;
        int w = d.pi.omega();
        for (int g = 0; g < G.order(); ++g) {
            CHECK(b.sigma1(d, g) == G.character_value(w, g));
            CHECK(b.sigma1(d, g) == b.sigma2(d, g));
            CHECK((b.sigma1(d, g) * b.sigma1(d, g)).is_one());
        }
        Matrix s4 = b.sigma4(d);
        CHECK((s4 * s4).is_identity());
    }
}

TEST_CASE("trivial braiding of the standard solution") {
    for (int q : {3, 4, 5}) {
        NearGroupData d = standard(q);
        BraidingData b = BraidingData::trivial(d);
        VerificationReport r = verify_hexagons(d, b);
        CHECK_MESSAGE(r.passed(), "q=" << q << "\n" << r.to_text());
        CHECK(is_symmetric(d, b));
        auto tw = twist_solutions(d, b);
        REQUIRE(tw.size() == 1);
        CHECK(tw[0].theta_m.is_one());
    }
}

TEST_CASE("hexagon family names cover the mmm/m blocks") {
    VerificationReport r = verify_hexagons(standard(4), BraidingData::trivial(standard(4)));
    for (const char* f : {"abc/abc", "abm/m", "amb/m", "mab/m", "mma/b", "mam/b", "amm/b", "mma/m", "mam/m", "amm/m",
                          "mmm/g", "mmm/m:I", "mmm/m:II", "mmm/m:III", "mmm/m:IV", "inv:mmm/m:IV"})
        CHECK_MESSAGE(r.find(f) != nullptr, f);
}

TEST_CASE("perturbed psi fails the mmm/m blocks") {
    NearGroupData d = standard(5);
    BraidingData b = BraidingData::trivial(d);
    b.psi[2] = Cyclotomic(-1);
    VerificationReport r = verify_hexagons(d, b);
    CHECK(!r.passed());
    bool block_fails = false;
    for (const char* f : {"mmm/m:I", "mmm/m:II"}) block_fails = block_fails || !r.find(f)->passed();
    CHECK(block_fails);
}

TEST_CASE("(Z/2,1) reduced constraints") {
    NearGroupData d = example_data("Z2k1", 0);
    auto eqs = hexagon_constraints(d);
    std::set<std::string> got;
    for (const auto& e : eqs) {
        Monomial r = e.ratio();
        r.erase(Symbol{Symbol::Xi, 1, 0});
        MonomialEquation shown{e.family, e.indices, r, {}};
        got.insert(shown.to_string());
    }
    // psi^2 = sigma3, sigma3^2 = psi, sigma3 psi = 1.
    std::set<std::string> want{"sigma3^-1*psi(1)^2 = 1", "sigma3^2*psi(1)^-1 = 1", "sigma3*psi(1) = 1"};
    CHECK(got == want);
}

TEST_CASE("(Z/3,2) reduced constraints") {
    for (int sel : {0, 1}) {
        NearGroupData d = example_data("Z3k2", sel);
        Cyclotomic xi = extract_primitive(d).xi[1];
        std::vector<std::string> lines = substituted_constraints(d);
        std::set<std::string> got(lines.begin(), lines.end());
        std::string xs = xi.to_string();
        CHECK(got.count("hex:psi-pair r=1: psi(2)^2 = 1"));
        // psi(1)^2 xi = 1
        CHECK(got.count("hex:psi-pair r=2: psi(1)^2 = " + xi.inverse().to_string()));
        CHECK(got.count("hex:sigma-square : sigma3^2 = " + xs));
    }
}

TEST_CASE("(Z/2,1) braidings") {
    NearGroupData d = example_data("Z2k1", 0);
    BraidingEnumeration be = enumerate_braidings(d);
    REQUIRE(be.braidings.size() == 3);
    for (const auto& b : be.braidings) {
        CHECK(b.psi[1].pow(3).is_one());
        CHECK(b.sigma3_eps == b.psi[1].inverse());
        bool trivial = b.psi[1].is_one();
        CHECK(is_symmetric(d, b) == trivial);
        CHECK(twist_solutions(d, b).empty() != trivial);
        CHECK(hexagons_pass(d, b, true));
    }
    CHECK(keys(be.braidings) == brute_force(d, 18, true));
    for (int sel : {1, 2}) {
        NearGroupData dx = example_data("Z2k1", sel);
        BraidingEnumeration bx = enumerate_braidings(dx);
        CHECK(bx.reduced_solutions.size() == 3);
        CHECK(bx.forward_count == 3);
        CHECK(bx.braidings.empty());
        // Forward hexagons need psi^3 = xi.
        for (const auto& b : bx.reduced_solutions) CHECK(b.psi[1].pow(3) == extract_primitive(dx).xi[1]);
        CHECK(keys(bx.reduced_solutions) == brute_force(dx, 18, false));
    }
}

TEST_CASE("(Z/3,2) braidings") {
    NearGroupData d = example_data("Z3k2", 0);
    BraidingEnumeration be = enumerate_braidings(d);
    REQUIRE(be.braidings.size() == 4);
    for (const auto& b : be.braidings) {
        CHECK(b.psi[1].pow(2).is_one());
        CHECK(b.psi[2].pow(2).is_one());
        CHECK(b.sigma3_eps == b.psi[1] * b.psi[2]);
        bool equal = b.psi[1] == b.psi[2];
        CHECK(is_symmetric(d, b) == equal);
        auto tw = twist_solutions(d, b);
        REQUIRE(tw.size() == 1);
        CHECK(tw[0].theta_m == Cyclotomic(equal ? 1 : -1));
        // Reference sigma4 = [[0, psi(2)], [psi(1), 0]].
        CHECK(b.sigma4(d) == Matrix::from_rows({{0, b.psi[2]}, {b.psi[1], 0}}));
        for (int g = 0; g < 3; ++g) CHECK(b.sigma3(d, g) == b.psi[1] * b.psi[2]);
    }
    CHECK(keys(be.braidings) == brute_force(d, 4, true));
    NearGroupData dm = example_data("Z3k2", 1);
    BraidingEnumeration bm = enumerate_braidings(dm);
    CHECK(bm.reduced_solutions.size() == 4);
    CHECK(bm.braidings.empty());
    CHECK(brute_force(dm, 4, true).empty());
    CHECK(keys(bm.reduced_solutions) == brute_force(dm, 4, false));
}

TEST_CASE("(Z/4,3) braidings") {
    NearGroupData d = example_data("Z4k3");
    BraidingEnumeration be = enumerate_braidings(d);
    CHECK(be.reduced_solutions.size() == 5);
    for (const auto& b : be.reduced_solutions) {
        Cyclotomic p2 = b.psi[2];
        CHECK(p2.pow(5).is_one());
        CHECK(b.psi[1] == p2 * p2);
        CHECK(b.psi[3] == p2.inverse());
        CHECK(b.sigma3_eps == p2.pow(-2));
        CHECK(hexagons_pass(d, b, false));
    }
    REQUIRE(be.braidings.size() == 1);
    const BraidingData& b = be.braidings[0];
    for (int i = 1; i <= 3; ++i) CHECK(b.psi[i].is_one());
    CHECK(is_symmetric(d, b));
    CHECK(twist_solutions(d, b).size() == 1);
    CHECK(b.sigma4(d) == Matrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    for (int g = 0; g < 4; ++g) CHECK(b.sigma3(d, g) == d.group.character_value(d.pi.omega(), g));
    CHECK(keys(be.reduced_solutions) == brute_force(d, 5, false));
    CHECK(keys(be.braidings) == brute_force(d, 2, true));
}

TEST_CASE("every symmetric braiding has the trivial twist") {
    for (const auto& [name, sel] : example_names()) {
        NearGroupData d = example_data(name, sel);
        for (const auto& b : enumerate_braidings(d).braidings)
            if (is_symmetric(d, b)) {
                bool has_one = false;
                for (const auto& t : twist_solutions(d, b)) has_one = has_one || t.theta_m.is_one();
                CHECK(has_one);
            }
    }
}

TEST_CASE("classification rows") {
    ClassificationRow r2 = classify_family("Z2k1"), r3 = classify_family("Z3k2"), r4 = classify_family("Z4k3");
    CHECK(r2.field == "F_3");
    CHECK(r3.field == "F_{2^2}");
    CHECK(r4.field == "F_5");
    CHECK(r2.structures.size() == 3);
    CHECK(r3.structures.size() == 2);
    CHECK(r4.structures.size() == 1);
    auto braided = [](const ClassificationRow& r) {
        std::vector<std::size_t> n;
        for (const auto& s : r.structures) n.push_back(s.braidings.size());
        std::sort(n.begin(), n.end());
        return n;
    };
    CHECK(braided(r2) == std::vector<std::size_t>{0, 0, 3});
    CHECK(braided(r3) == std::vector<std::size_t>{0, 4});
    CHECK(braided(r4) == std::vector<std::size_t>{1});
    CHECK(r4.structures[0].reduced_count == 5);
    json j = r3.to_json();
    CHECK(j["schema"] == "neargroup-classification");
    CHECK(j["monoidal_structures"] == 2);
    CHECK_THROWS(classify_family("Z5"));
    CHECK_THROWS(classify_family("Z4k2"));
}

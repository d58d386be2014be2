#include "coherence_helpers.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace neargroup;

namespace {

NearGroupData standard(int q) {
    auto [G, pi] = pi_from_field(q);
    return construct_standard(G, pi);
}

bool same_matrices(const NearGroupData& a, const NearGroupData& b) {
    return a.gamma1 == b.gamma1 && a.gamma2 == b.gamma2 && a.gamma3 == b.gamma3 && a.lambda == b.lambda && a.M == b.M &&
           a.R == b.R && a.C == b.C && a.N == b.N;
}

Valuation valuation_of(const NearGroupPrimitive& p) {
    return [p](const Symbol& s) -> Cyclotomic {
        switch (s.kind) {
            case Symbol::Delta: return Cyclotomic(p.delta);
            case Symbol::Xi: return p.xi.at(s.a);
            case Symbol::CEps: return p.c_eps.at(s.a);
            case Symbol::N: return p.n_func.at({s.a, s.b});
            default: throw std::logic_error("not a primitive symbol");
        }
    };
}

}  // namespace

TEST_CASE("standard construction passes every pentagon family") {
    for (int q : {3, 4, 5, 7, 8}) {
        NearGroupData d = standard(q);
        CHECK(d.k == q - 2);
        VerificationReport r = verify_all(d);
        CHECK_MESSAGE(r.passed(), "q=" << q << "\n" << r.to_text());
    }
}

TEST_CASE("example fixtures equal the construction") {
    for (const auto& [name, sel] : example_names()) {
        NearGroupData d = example_data(name, sel);
        NearGroupData rebuilt = construct_from_primitive(d.group, d.pi, extract_primitive(d));
        CHECK_MESSAGE(same_matrices(d, rebuilt), name << " " << sel);
        CHECK(verify_all(d).passed());
    }
}

TEST_CASE("reference Z/4 N block support") {
    NearGroupData d = example_data("Z4k3");
    std::set<std::pair<int, int>> support, reference{{1, 8}, {3, 6}, {5, 9}, {6, 1}, {7, 4}, {8, 2}};
    for (std::size_t i = 0; i < d.N.rows(); ++i)
        for (std::size_t j = 0; j < d.N.cols(); ++j)
            if (!d.N(i, j).is_zero()) support.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    CHECK(support == reference);
    CHECK(same_matrices(d, standard(5)));
}

TEST_CASE("the xi = +-1 and xi = zeta_3 fixtures") {
    CHECK(extract_primitive(example_data("Z2k1", 1)).xi[1] == root_of_unity(3, 1));
    CHECK(extract_primitive(example_data("Z3k2", 1)).delta == -1);
    CHECK(extract_primitive(example_data("Z3k2", 0)).delta == 1);
}

TEST_CASE("JSON round trip") {
    for (int q : {3, 4, 5}) {
        NearGroupData d = standard(q);
        NearGroupData back = data_from_json(json::parse(to_json(d).dump()));
        CHECK(same_matrices(d, back));
        NearGroupData rebuilt = data_from_json(to_json(d, false));
        CHECK(same_matrices(d, rebuilt));
    }
    json bad = to_json(standard(3));
    bad["version"] = 99;
    CHECK_THROWS_AS(data_from_json(bad), std::invalid_argument);
    bad = to_json(standard(3));
    bad["schema"] = "other";
    CHECK_THROWS_AS(data_from_json(bad), std::invalid_argument);
}

TEST_CASE("functional equations are gauge invariant") {
    std::mt19937 rng(5);
    for (int q : {3, 4, 5, 7}) {
        auto [G, pi] = pi_from_field(q);
        IndexAlgebra idx = build_index_algebra(G, pi);
        auto eqs = functional_equations(idx);
        MonoidalClassification mc = classify_monoidal(G, pi);
        for (const auto& p : mc.representatives) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Cyclotomic> t(idx.k() + 1, Cyclotomic(1));
                for (int j = 1; j <= idx.k(); ++j) t[j] = root_of_unity(12, rng() % 12);
                Cyclotomic c = root_of_unity(12, rng() % 12);
                NearGroupPrimitive g = gauge_transform(p, idx, t, c);
                for (const auto& e : eqs) {
                    Cyclotomic before = evaluate(e.ratio(), valuation_of(p));
                    Cyclotomic after = evaluate(e.ratio(), valuation_of(g));
                    CHECK_MESSAGE(before == after, e.family << " " << e.indices);
                }
                NearGroupData gd = construct_from_primitive(G, pi, g);
                if (q <= 5) CHECK(pentagon_oracle_all(gd, 3).passed());
                CHECK(verify_all(gd).passed());
            }
        }
    }
}

TEST_CASE("single-monomial mmmm/m blocks are derived consistently") {
    for (int q : {5, 7}) {
        auto [G, pi] = pi_from_field(q);
        std::vector<MonomialEquation> out;
        CHECK_NOTHROW(append_mm_block(build_index_algebra(G, pi), out));
        CHECK(!out.empty());
    }
}

TEST_CASE("generic oracle agrees with the equation families") {
    for (int q : {3, 4, 5}) CHECK(testutil::oracle_disagreements(standard(q)).empty());
    for (const auto& [name, sel] : example_names()) CHECK(testutil::oracle_disagreements(example_data(name, sel)).empty());
}

TEST_CASE("oracle rejects a corrupted tensor") {
    NearGroupData d = standard(4);
    d.N(0, 1) += Cyclotomic(1);
    CHECK(!pentagon_oracle_all(d, 4).passed());
    CHECK(!verify_all(d).passed());
}

TEST_CASE("gamma2 replaced by gamma1") {
    NearGroupData d = standard(5);
    d.gamma2 = d.gamma1;
    VerificationReport r = verify_all(d);
    CHECK(!r.find("mmgm/h")->passed());
    CHECK(!r.find("mgmm/h")->passed());
    CHECK(r.find("mabm/m")->passed());
    CHECK(!pentagon_oracle_all(d, 2).passed());
}

TEST_CASE("xi of order 5 violates the functional equations for (Z/2,1)") {
    auto [G, pi] = pi_from_field(3);
    IndexAlgebra idx = build_index_algebra(G, pi);
    NearGroupPrimitive p = NearGroupPrimitive::ones(idx);
    CHECK(verify_functional(p, idx).passed());
    p.xi[1] = root_of_unity(5, 1);
    CHECK(!verify_functional(p, idx).passed());
    for (int j = 0; j < 3; ++j) {
        p.xi[1] = root_of_unity(3, j);
        CHECK(verify_functional(p, idx).passed());
    }
}

TEST_CASE("single-entry perturbations of mu are detected") {
    for (int q : {3, 4}) CHECK(testutil::undetected_mu_perturbations(standard(q)) == 0);
}

TEST_CASE("flip matrix determinant") {
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> perm(k * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) perm[j * k + i] = i * k + j;
        int sign = testutil::permutation_sign(perm);
        CHECK(flip_determinant(k) == sign);
        if (k <= 5) CHECK(det(flip_matrix(k)) == Cyclotomic(sign));
        // +1 iff k = 0, 1 mod 4.
        CHECK(sign == (k % 4 <= 1 ? 1 : -1));
        Matrix x = flip_matrix(k);
        CHECK((x * x).is_identity());
    }
}

TEST_CASE("trivial-group obstruction") {
    for (int k = 1; k <= 20; ++k) {
        ObstructionVerdict v = trivial_group_verdict(k);
        CHECK_MESSAGE(v.obstructed == (k % 4 == 2 || k % 4 == 3), "k=" << k);
        CHECK(!v.witness.empty());
    }
    ObstructionVerdict v2 = trivial_group_verdict(2);
    CHECK(v2.reduced_exponent == 4);
    CHECK(v2.reduced_sign == -1);
    ObstructionVerdict v3 = trivial_group_verdict(3);
    CHECK(v3.reduced_exponent == 13);
    CHECK(v3.reduced_sign == -1);
}

TEST_CASE("synthetic trivial-group candidate") {
    TrivialGroupCandidate c;
    c.k = 2;
    c.lambda = Matrix::identity(2);
    c.mu = Matrix::identity(5);
    VerificationReport r = check_trivial_group_candidate(c);
    CHECK(!r.find("mmmm/e:det")->passed());
    c.mu(0, 0) = Cyclotomic(0);
    CHECK_THROWS_AS(check_trivial_group_candidate(c), std::invalid_argument);
}

TEST_CASE("monoidal structures up to gauge") {
    const std::map<int, std::size_t> expect{{3, 3}, {4, 2}, {5, 1}};
    for (auto [q, n] : expect) {
        auto [G, pi] = pi_from_field(q);
        MonoidalClassification mc = classify_monoidal(G, pi);
        CHECK(mc.representatives.size() == n);
        CHECK(mc.lattice_count == n);
        for (const auto& p : mc.representatives) {
            NearGroupData d = construct_from_primitive(G, pi, p);
            CHECK(verify_all(d).passed());
            CHECK(pentagon_oracle_all(d, 3).passed());
        }
    }
    auto [G4, pi4] = pi_from_field(4);
    MonoidalClassification mc = classify_monoidal(G4, pi4);
    CHECK(mc.count_delta_plus == 1);
    CHECK(mc.count_delta_minus == 1);
    // Independent of the modulus once it contains the relevant orders.
    CHECK(classify_monoidal(G4, pi4, 120).representatives.size() == 2);
}

TEST_CASE("report rendering") {
    VerificationReport r;
    r.check("fam", true, "i=1", "1", "1");
    r.check("fam", false, "i=2", "1", "2");
    CHECK(!r.passed());
    CHECK(r.failure_count() == 1);
    json j = r.to_json();
    CHECK(j["schema"] == "neargroup-report");
    CHECK(j["version"] == kReportSchemaVersion);
    CHECK(j["families"][0]["failures"][0]["indices"] == "i=2");
    CHECK(r.to_text().find("fam") != std::string::npos);
}

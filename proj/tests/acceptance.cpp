// One PASS/FAIL line per acceptance criterion; exit code 1 if any fails.
#include "coherence_helpers.hpp"
#include "neargroup/braiding.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace neargroup;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

bool prime_power_minus_one(int n) {
    int q = n + 1;
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    return false;
}

NearGroupData standard(int q) {
    auto [G, pi] = pi_from_field(q);
    return construct_standard(G, pi);
}

void c1(Outcome& o) {
    for (int n = 1; n <= 15; ++n)
        for (const auto& G : abelian_groups_of_order(n)) {
            bool found = !find_all_pi(G).empty();
            o.require(found == (G.is_cyclic() && prime_power_minus_one(n)), G.descriptor());
        }
}

void c2(Outcome& o) {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        auto [G, pi] = pi_from_field(q);
        FieldTable t = field_from_pi(pi);
        o.require(t.axiom_violations().empty(), "axioms q=" + std::to_string(q));
        o.require(fields_isomorphic(t, field_table(FiniteField(q))), "round trip q=" + std::to_string(q));
    }
}

void c3(Outcome& o) {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        NearGroupData d = standard(q);
        for (const auto& r : {verify_gamma_lambda(d), verify_mu_symmetries(d), verify_mmmm_g(d), verify_functional(d)})
            o.require(r.passed(), "q=" + std::to_string(q) + " " + r.title);
    }
}

void c4(Outcome& o) {
    for (int q : {3, 4, 5}) {
        NearGroupData d = standard(q);
        o.require(pentagon_oracle_all(d).passed(), "oracle q=" + std::to_string(q));
        for (const auto& k : testutil::oracle_disagreements(d)) o.require(false, "q=" + std::to_string(q) + " " + k);
    }
}

void c5(Outcome& o) {
    for (const auto& [name, sel] : example_names()) {
        NearGroupData d = example_data(name, sel);
        NearGroupData r = construct_from_primitive(d.group, d.pi, extract_primitive(d));
        bool same = d.gamma1 == r.gamma1 && d.gamma2 == r.gamma2 && d.gamma3 == r.gamma3 && d.lambda == r.lambda &&
                    d.M == r.M && d.R == r.R && d.C == r.C && d.N == r.N;
        o.require(same, name + "/" + std::to_string(sel));
    }
}

void c6(Outcome& o) {
    for (auto [q, n] : std::vector<std::pair<int, std::size_t>>{{3, 3}, {4, 2}, {5, 1}}) {
        auto [G, pi] = pi_from_field(q);
        MonoidalClassification mc = classify_monoidal(G, pi);
        o.require(mc.representatives.size() == n && mc.lattice_count == n, "q=" + std::to_string(q));
    }
}

void c7(Outcome& o) {
    ClassificationRow r2 = classify_family("Z2k1"), r3 = classify_family("Z3k2"), r4 = classify_family("Z4k3");
    auto braided = [](const ClassificationRow& r) -> const StructureSummary* {
        const StructureSummary* out = nullptr;
        for (const auto& s : r.structures)
            if (!s.braidings.empty()) {
                if (out) return nullptr;
                out = &s;
            }
        return out;
    };
    const StructureSummary *s2 = braided(r2), *s3 = braided(r3), *s4 = braided(r4);
    o.require(s2 && s2->braidings.size() == 3, "Z2 three braidings on one structure");
    o.require(s3 && s3->braidings.size() == 4, "Z3 four braidings on one structure");
    o.require(s4 && s4->braidings.size() == 1 && s4->reduced_count == 5, "Z4 one braiding, five reduced");
    if (!o.ok) return;
    o.require(s2->primitive.xi[1].is_one(), "Z2 braided structure has xi = 1");
    for (const auto& b : s2->braidings) {
        bool one = b.braiding.psi[1].is_one();
        o.require(b.braiding.psi[1].pow(3).is_one() && b.braiding.sigma3_eps == b.braiding.psi[1].inverse(), "Z2 psi^3 = 1");
        o.require(b.balanced() == one && b.symmetric == one, "Z2 balance/symmetry");
    }
    o.require(s3->primitive.delta == 1, "Z3 braided structure has xi = 1");
    for (const auto& b : s3->braidings) {
        const auto& p = b.braiding.psi;
        o.require(p[1].pow(2).is_one() && p[2].pow(2).is_one(), "Z3 psi^2 = 1");
        o.require(b.balanced(), "Z3 balanced");
        o.require(b.symmetric == (p[1] == p[2]), "Z3 symmetry");
    }
    const auto& b4 = s4->braidings[0];
    o.require(b4.symmetric && b4.balanced(), "Z4 symmetric and balanced");
    for (int i = 1; i <= 3; ++i) o.require(b4.braiding.psi[i].is_one(), "Z4 psi = 1");
}

void c8(Outcome& o) {
    for (int k = 1; k <= 20; ++k)
        o.require(trivial_group_verdict(k).obstructed == (k % 4 == 2 || k % 4 == 3), "k=" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> perm(k * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) perm[j * k + i] = i * k + j;
        std::vector<bool> seen(perm.size(), false);
        int sign = 1;
        for (std::size_t s = 0; s < perm.size(); ++s) {
            std::size_t len = 0;
            for (std::size_t t = s; !seen[t]; t = perm[t], ++len) seen[t] = true;
            if (len && len % 2 == 0) sign = -sign;
        }
        o.require(flip_determinant(k) == sign && sign == (k % 4 <= 1 ? 1 : -1), "det X_" + std::to_string(k));
    }
}

void c9(Outcome& o) {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        AffineFusion f = affine_group_fusion(q);
        o.require(f.group_order == q * (q - 1) && f.linear_irreps == q - 1 && f.big_irrep_dim == q - 1 && f.k == q - 2,
                  "q=" + std::to_string(q));
    }
}

void c10(Outcome& o) {
    for (int q : {3, 4, 5}) {
        std::size_t missed = testutil::undetected_mu_perturbations(standard(q));
        o.require(missed == 0, "q=" + std::to_string(q) + " missed " + std::to_string(missed));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"pi exists exactly for cyclic groups of order p^a - 1 (|G| <= 15)", c1},
        {"field reconstruction and round trip, q in {3,4,5,7,8,9}", c2},
        {"standard construction passes all pentagon families, q in {3,4,5,7,8,9}", c3},
        {"generic pentagon oracle agrees with the families, k <= 3", c4},
        {"example tensors equal the construction", c5},
        {"monoidal structures up to gauge: 3 / 2 / 1", c6},
        {"braidings 3 / 4 / 1 with balance and symmetry table", c7},
        {"trivial-group obstruction for k = 2,3 mod 4 and det X_k", c8},
        {"affine group fusion (q(q-1), q-1, q-1, q-2)", c9},
        {"every single-entry perturbation of mu is detected, k <= 3", c10},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << std::fixed << std::setprecision(2) << s << " s)" << o.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}

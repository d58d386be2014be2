#pragma once

#include "neargroup/coherence.hpp"

#include <string>
#include <vector>

namespace neargroup {

// sigma3(eps) and psi(1..k); every other braiding datum is derived:
// sigma0 = 1, sigma1 = sigma2 = chi_omega, sigma3(g) = sigma3(eps) chi_omega(g),
// sigma4[i,j] = psi(j) [i = pi(j^-1)].
struct BraidingData {
    Cyclotomic sigma3_eps;
    std::vector<Cyclotomic> psi;  // slots 1..k; slot 0 unused

    Cyclotomic sigma0(const NearGroupData& d, int g, int h) const;
    Cyclotomic sigma1(const NearGroupData& d, int g) const;
    Cyclotomic sigma2(const NearGroupData& d, int g) const;
    Cyclotomic sigma3(const NearGroupData& d, int g) const;
    Matrix sigma4(const NearGroupData& d) const;

    static BraidingData trivial(const NearGroupData& d);
};

struct TwistData {
    Cyclotomic theta_m;  // theta_g = 1 for all g
};

// Braiding on hom(z, x y) -> hom(z, y x) as a [new label, old label] matrix.
// With `inverse_braiding`, returns (R^{yx}_z)^-1 instead.
Matrix braiding_matrix(const FSymbols& fs, const BraidingData& b, int x, int y, int z, bool inverse_braiding = false);

// The reduced hexagon system in sigma3 and psi. Symbols other than Sigma3
// and Psi are the primitive data of `data`.
std::vector<MonomialEquation> hexagon_constraints(const NearGroupData& data);
// Each constraint with the primitive data substituted: "unknowns = value".
std::vector<std::string> substituted_constraints(const NearGroupData& data);

// Every unreduced hexagon, families "abc/abc" ... "mmm/m:I".."mmm/m:IV", and
// the inverse hexagons under the same names prefixed by "inv:".
VerificationReport verify_hexagons(const NearGroupData& data, const BraidingData& b);

struct BraidingEnumeration {
    int modulus = 0;  // all candidates are roots of unity of order dividing this
    std::vector<BraidingData> reduced_solutions;  // solutions of hexagon_constraints
    std::size_t forward_count = 0;                // of those, passing the forward hexagons
    std::vector<BraidingData> braidings;          // passing forward and inverse hexagons
};
BraidingEnumeration enumerate_braidings(const NearGroupData& data, int root_order_bound = 60);

bool is_symmetric(const NearGroupData& data, const BraidingData& b);
std::vector<TwistData> twist_solutions(const NearGroupData& data, const BraidingData& b);

struct BraidingSummary {
    BraidingData braiding;
    bool symmetric = false;
    std::vector<TwistData> twists;
    bool balanced() const { return !twists.empty(); }
};

struct StructureSummary {
    NearGroupPrimitive primitive;
    std::string label;
    std::size_t reduced_count = 0;
    std::vector<BraidingSummary> braidings;
};

struct ClassificationRow {
    std::string fusion;  // "(Z/4,3)"
    std::string field;   // "F_5", "F_{2^2}"
    std::vector<StructureSummary> structures;
    std::string to_text() const;
    json to_json() const;
};

// Classifies the family of `data` (its group and pi) by enumerating gauge
// classes of primitives and the braidings of each.
ClassificationRow classify(const NearGroupData& data, int root_order_bound = 60);
// Family names "Z2k1", "Z3k2", "Z4k3" or any "Z<n>" with n+1 a prime power.
ClassificationRow classify_family(const std::string& family, int root_order_bound = 60);

json to_json(const NearGroupData& data, const BraidingData& b, bool symmetric, const std::vector<TwistData>& twists);
std::string describe(const BraidingData& b);

}  // namespace neargroup

#pragma once

#include "neargroup/associators.hpp"
#include "neargroup/fsymbols.hpp"
#include "neargroup/monomial.hpp"
#include "neargroup/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace neargroup {

// Families are named after the pentagon they come from, e.g. "mmab/m" or
// "mmmg/m:N"; see README for the full list.

// Representation and intertwining laws of gamma1..3 and lambda.
VerificationReport verify_gamma_lambda(const NearGroupData& data);
// Translation symmetries of the blocks M, R, C, N (pentagons with three m's
// and summand m).
VerificationReport verify_mu_symmetries(const NearGroupData& data);
// The pentagon mmmm/g as four block equations per g.
VerificationReport verify_mmmm_g(const NearGroupData& data);
// The mmmm/m pentagon in primitive form.
VerificationReport verify_functional(const NearGroupPrimitive& prim, const IndexAlgebra& idx);
// Reads (delta, xi, c_eps, N) from the matrices of `data` and runs verify_functional.
VerificationReport verify_functional(const NearGroupData& data);
NearGroupPrimitive extract_primitive(const NearGroupData& data);

// All four verifiers above.
VerificationReport verify_all(const NearGroupData& data);

// Generic pentagon check on hom(summand, ((w0 w1) w2) w3) built from labeled
// trees. Objects use the FSymbols numbering. Throws std::logic_error when the
// two composite bases have different dimensions.
struct PentagonResult {
    std::size_t dimension = 0;
    VerificationReport report;
};
PentagonResult generic_pentagon_oracle(const NearGroupData& data, const std::array<int, 4>& word, int summand);
PentagonResult generic_pentagon_oracle(const FSymbols& fs, const std::array<int, 4>& word, int summand);

// Family key ("mmab/m", "mmmm/g", ...) that a word/summand pair is reduced
// to, or "" when no reduced family covers it.
std::string pentagon_family_key(const FSymbols& fs, const std::array<int, 4>& word, int summand);

// Runs the oracle over every word and summand (optionally only words with at
// least `min_m` copies of m). Families are the keys above, "other" otherwise.
VerificationReport pentagon_oracle_all(const NearGroupData& data, int min_m = 0);

// Trivial-group obstruction.
Matrix flip_matrix(int k);
int flip_determinant(int k);  // closed form via (-1)^{k(k-1)/2}

struct ObstructionVerdict {
    int k = 0;
    bool obstructed = false;
    int det_flip = 1;
    std::vector<std::string> witness;  // derived exponent identities
    int reduced_exponent = 0;          // L^reduced_exponent = reduced_sign
    int reduced_sign = 1;
    std::string summary() const;
};
ObstructionVerdict trivial_group_verdict(int k);

struct TrivialGroupCandidate {
    int k = 0;
    Matrix lambda;  // k x k
    Matrix mu;      // (1+k^2) x (1+k^2); slot 0 is epsilon, slot 1+(i-1)k+(j-1) is (i,j)
    Matrix mu_R() const;  // mu_R[i,j] = mu[eps;(i,j)]
    Matrix mu_C() const;  // mu_C[i,j] = mu[(j,i);eps]
};
// Throws std::invalid_argument when mu[eps,eps] = 0.
VerificationReport check_trivial_group_candidate(const TrivialGroupCandidate& cand);

// Orbits of primitive solutions under the gauge action.
struct MonoidalClassification {
    int modulus = 0;                // L used for enumeration
    std::size_t lattice_count = 0;  // exact count from the lattice index (0 if infinite)
    std::vector<NearGroupPrimitive> representatives;  // roots of unity of order dividing L
    std::size_t count_delta_plus = 0, count_delta_minus = 0;
};
MonoidalClassification classify_monoidal(const AbelianGroup& group, const PiStructure& pi, int modulus = 60);

}  // namespace neargroup

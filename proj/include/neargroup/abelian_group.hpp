#pragma once

#include "neargroup/cyclotomic.hpp"

#include <string>
#include <vector>

namespace neargroup {

struct GroupElement {
    std::vector<int> residues;
    bool operator==(const GroupElement& o) const { return residues == o.residues; }
    bool operator<(const GroupElement& o) const { return residues < o.residues; }
};

struct Character {
    std::vector<int> dual;
    bool operator==(const Character& o) const { return dual == o.dual; }
};

// Z/n_1 x ... x Z/n_r given by its factors. Elements and characters are
// both listed lexicographically by residues with the identity first, so
// element i and character i correspond under dual_iso.
class AbelianGroup {
public:
    AbelianGroup() : AbelianGroup(std::vector<int>{}) {}
    explicit AbelianGroup(std::vector<int> factors);

    static AbelianGroup cyclic(int n);
    // "Z4", "Z2xZ4", "1" or "trivial".
    static AbelianGroup parse(const std::string& descriptor);
    std::string descriptor() const;

    const std::vector<int>& factors() const { return factors_; }
    int order() const { return order_; }
    int exponent() const { return exponent_; }
    bool is_cyclic() const;

    const std::vector<GroupElement>& elements() const { return elements_; }
    int index_of(const GroupElement& g) const;
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long e) const;
    int element_order(int a) const;

    // "e", "g", "g^2" for cyclic groups; "g1^a*g2^b" otherwise.
    std::string element_name(int a) const;
    // Accepts the names above, plus "g^1" and "1" for the identity.
    int parse_element(const std::string& name) const;

    std::vector<Character> characters() const;
    // chi_c(g) = zeta_E^e for the returned e in [0, E), E = exponent().
    long char_exponent(int c, int g) const { return chi_exp_[c * order_ + g]; }
    Cyclotomic character_value(int c, int g) const;
    Cyclotomic evaluate(const Character& chi, const GroupElement& g) const;
    int character_index(const Character& chi) const;
    Cyclotomic orthogonality_sum(const Character& chi) const;

    // Element index -> character index (identity on indices by construction).
    int dual_iso(int a) const { return a; }
    Character dual_character(int a) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    int order_ = 1;
    int exponent_ = 1;
    std::vector<GroupElement> elements_;
    std::vector<int> mul_, inv_;
    std::vector<long> chi_exp_;
};

// Nonisomorphic abelian groups of the given order in invariant-factor form.
std::vector<AbelianGroup> abelian_groups_of_order(int n);

}  // namespace neargroup

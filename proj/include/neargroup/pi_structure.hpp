#pragma once

#include "neargroup/abelian_group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace neargroup {

// Permutation of the nonidentity elements of G (element indices 1..|G|-1).
class PiStructure {
public:
    PiStructure() = default;
    // mapping[x] = pi(x) for x >= 1; mapping[0] is ignored and set to 0.
    PiStructure(AbelianGroup group, std::vector<int> mapping);
    // Disjoint cycles over element names, e.g. "(g g^2 g^3)"; "()" is the identity.
    static PiStructure parse(const AbelianGroup& group, const std::string& cycles);

    const AbelianGroup& group() const { return group_; }
    const std::vector<int>& mapping() const { return map_; }
    int apply(int x) const { return map_[x]; }
    int apply_inv(int x) const { return inv_[x]; }

    // Violated conditions: pi^3 = id, pi(x)^-1 = pi^-1(x^-1), the product rule,
    // and constancy of s pi(s) pi^-1(s). Empty when valid.
    std::vector<std::string> violations() const;
    bool is_valid() const { return violations().empty(); }

    // Common value of s pi(s) pi^-1(s); identity for the trivial group.
    // Throws std::domain_error when the products disagree.
    int omega() const;

    std::string to_cycle_notation() const;
    bool operator==(const PiStructure& o) const { return group_ == o.group_ && map_ == o.map_; }

private:
    AbelianGroup group_;
    std::vector<int> map_, inv_;
};

// All permutations satisfying the three conditions, in deterministic order.
std::vector<PiStructure> find_all_pi(const AbelianGroup& group);

bool is_prime(long n);
// (p, alpha) with q = p^alpha, or throws std::invalid_argument.
std::pair<int, int> prime_power(int q);

// GF(q) as polynomials over Z/p modulo a fixed primitive polynomial; element
// codes are base-p digit strings a_0 + a_1 p + ...
class FiniteField {
public:
    explicit FiniteField(int q);
    int size() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return alpha_; }
    const std::vector<int>& modulus() const { return modulus_; }  // monic, low degree first
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const;
    int inv(int a) const;
    // Smallest element code generating the multiplicative group.
    int generator() const { return gen_; }

private:
    int q_, p_, alpha_, gen_ = 1;
    std::vector<int> modulus_, add_, mul_;
};

// Field on {0} u G: code 0 is zero, code 1 + g is the group element g.
struct FieldTable {
    int size = 0;
    std::vector<int> add, mul;
    int plus(int a, int b) const { return add[a * size + b]; }
    int times(int a, int b) const { return mul[a * size + b]; }
    // Violated field axioms, empty when the table is a field.
    std::vector<std::string> axiom_violations() const;
};

std::pair<AbelianGroup, PiStructure> pi_from_field(int q);
// Throws std::domain_error if an axiom fails.
FieldTable field_from_pi(const PiStructure& pi);
// GF(q) written on {0} u Z/(q-1) via the fixed generator.
FieldTable field_table(const FiniteField& f);
bool fields_isomorphic(const FieldTable& a, const FieldTable& b);

struct AffineFusion {
    int group_order = 0;
    int linear_irreps = 0;
    int big_irrep_dim = 0;
    int k = 0;
    int conjugacy_classes = 0;
};
// Class counting in F_q+ x| F_q*, then dimension bookkeeping.
AffineFusion affine_group_fusion(int q);

}  // namespace neargroup

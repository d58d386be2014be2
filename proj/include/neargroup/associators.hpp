#pragma once

#include "neargroup/json_io.hpp"
#include "neargroup/matrix.hpp"
#include "neargroup/pi_structure.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace neargroup {

// Indices 0..k, where 0 is epsilon and index i labels element i of G (and,
// through dual_iso, the character chi_i). pi is extended by pi(0) = 0, which
// makes both operations total.
class IndexAlgebra {
public:
    IndexAlgebra() = default;
    explicit IndexAlgebra(const PiStructure& pi);

    int k() const { return k_; }
    int star(int i, int j) const { return star_[i * (k_ + 1) + j]; }
    int circ(int i, int j) const { return circ_[i * (k_ + 1) + j]; }
    int star_inv(int i) const { return sinv_[i]; }
    int circ_inv(int i) const { return cinv_[i]; }
    int pi(int i) const { return pi_[i]; }
    int pi_inv(int i) const { return piinv_[i]; }

private:
    int k_ = 0;
    std::vector<int> star_, circ_, sinv_, cinv_, pi_, piinv_;
};

IndexAlgebra build_index_algebra(const AbelianGroup& group, const PiStructure& pi);

using IndexPair = std::pair<int, int>;

struct NearGroupPrimitive {
    int delta = 1;
    std::vector<Cyclotomic> xi;     // slots 1..k; slot 0 unused
    std::vector<Cyclotomic> c_eps;  // slots 1..k; slot 0 unused
    std::map<IndexPair, Cyclotomic> n_func;  // (r, s) with r*s != e

    static NearGroupPrimitive ones(const IndexAlgebra& idx, int delta = 1);
    // Lcm of the orders of all values.
    int order() const;
    bool operator==(const NearGroupPrimitive& o) const;
};

// Every (r, s) with r, s >= 1 and r*s != e, in lexicographic order.
std::vector<IndexPair> n_func_domain(const IndexAlgebra& idx);
// Row (i, j) carrying the nonzero entry of column (r, s): i = r*s, i o j = r.
IndexPair n_position(const IndexAlgebra& idx, int r, int s);

// Basis change t_1..t_k on hom(m, m m) together with the common scale C of
// the group-summand vertices.
NearGroupPrimitive gauge_transform(const NearGroupPrimitive& prim, const IndexAlgebra& idx,
                                   const std::vector<Cyclotomic>& t, const Cyclotomic& c_scale);

struct NearGroupData {
    AbelianGroup group;
    PiStructure pi;
    IndexAlgebra idx;
    NearGroupPrimitive prim;
    int k = 0;
    int order = 1;  // common cyclotomic order of all entries
    // Indexed by group element; k x k each.
    std::vector<Matrix> gamma1, gamma2, gamma3, lambda;
    // mu = [[M, R], [C, N]]; rows are right-tree labels, columns left-tree labels.
    Matrix M, R, C, N;
    // alpha, alpha_1..3, beta_1..3 are identically 1.
    bool trivial_alpha_beta = true;

    int pair_index(int i, int j) const { return (i - 1) * k + (j - 1); }
};

NearGroupData construct_standard(const AbelianGroup& group, const PiStructure& pi);
NearGroupData construct_from_primitive(const AbelianGroup& group, const PiStructure& pi, const NearGroupPrimitive& prim);

Matrix assemble_mu(const NearGroupData& data);

// Reference tensors for the small cases. `name` is "Z2k1" (selector j gives
// xi = E(3)^j), "Z3k2" (selector 0: xi = 1, 1: xi = -1) or "Z4k3".
NearGroupData example_data(const std::string& name, int selector = 0);
std::vector<std::pair<std::string, int>> example_names();

constexpr int kDataSchemaVersion = 1;
json to_json(const NearGroupData& data, bool include_matrices = true);
// Uses "matrices" verbatim when present, otherwise rebuilds from the primitive.
NearGroupData data_from_json(const json& j);

json to_json(const NearGroupPrimitive& prim);
NearGroupPrimitive primitive_from_json(const json& j, const IndexAlgebra& idx);

}  // namespace neargroup

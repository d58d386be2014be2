#pragma once

#include "neargroup/associators.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace neargroup {

// Simple objects are 0..|G|-1 (group elements) and |G| (the object m).
// A left tree of F^{abc}_d is (e, alpha: e -> a b, beta: d -> e c); a right
// tree is (f, gamma: f -> b c, delta: d -> a f). Vertex labels are 0-based.
struct Tree {
    int mid = 0;
    int top = 0;
    int bottom = 0;
    bool operator==(const Tree& o) const { return mid == o.mid && top == o.top && bottom == o.bottom; }
    bool operator<(const Tree& o) const {
        return std::array<int, 3>{mid, top, bottom} < std::array<int, 3>{o.mid, o.top, o.bottom};
    }
};

class FSymbols {
public:
    explicit FSymbols(const NearGroupData& data);

    const NearGroupData& data() const { return *data_; }
    int num_objects() const { return n_ + 1; }
    int m() const { return n_; }
    bool is_group(int x) const { return x < n_; }
    std::string object_name(int x) const;

    // Fusion multiplicity N_{ab}^c.
    int mult(int a, int b, int c) const;
    std::vector<int> fusion(int a, int b) const;

    std::vector<Tree> left_basis(int a, int b, int c, int d) const;
    std::vector<Tree> right_basis(int a, int b, int c, int d) const;

    // F^{abc}_d[right; left]. Zero outside the stored support.
    Cyclotomic F(int a, int b, int c, int d, const Tree& left, const Tree& right) const;
    // Calls f(right, value) for every right tree with nonzero F entry.
    void for_each_F(int a, int b, int c, int d, const Tree& left,
                    const std::function<void(const Tree&, const Cyclotomic&)>& f) const;

    Cyclotomic zero() const { return zero_; }
    Cyclotomic one() const { return one_; }

private:
    const NearGroupData* data_;
    int n_;
    Cyclotomic zero_, one_;
};

}  // namespace neargroup

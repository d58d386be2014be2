#include "neargroup/abelian_group.hpp"

#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace neargroup {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int n : factors_)
        if (n < 2) throw std::invalid_argument("group factors must be at least 2");
    order_ = 1;
    exponent_ = 1;
    for (int n : factors_) {
        order_ *= n;
        exponent_ = static_cast<int>(lcm_long(exponent_, n));
    }
    std::size_t r = factors_.size();
    elements_.resize(order_);
    for (int idx = 0; idx < order_; ++idx) {
        std::vector<int> res(r);
        int rem = idx;
        for (std::size_t t = r; t-- > 0;) {
            res[t] = rem % factors_[t];
            rem /= factors_[t];
        }
        elements_[idx] = GroupElement{res};
    }
    mul_.resize(static_cast<std::size_t>(order_) * order_);
    inv_.resize(order_);
    chi_exp_.resize(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
        std::vector<int> ir(r);
        for (std::size_t t = 0; t < r; ++t) ir[t] = (factors_[t] - elements_[a].residues[t]) % factors_[t];
        inv_[a] = index_of(GroupElement{ir});
        for (int b = 0; b < order_; ++b) {
            std::vector<int> s(r);
            long e = 0;
            for (std::size_t t = 0; t < r; ++t) {
                s[t] = (elements_[a].residues[t] + elements_[b].residues[t]) % factors_[t];
                e += static_cast<long>(elements_[a].residues[t]) * elements_[b].residues[t] * (exponent_ / factors_[t]);
            }
            mul_[a * order_ + b] = index_of(GroupElement{s});
            chi_exp_[a * order_ + b] = e % exponent_;
        }
    }
}

AbelianGroup AbelianGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    return n == 1 ? AbelianGroup() : AbelianGroup({n});
}

AbelianGroup AbelianGroup::parse(const std::string& descriptor) {
    std::string s;
    for (char c : descriptor)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "1" || s == "trivial" || s == "Z1") return AbelianGroup();
    std::vector<int> factors;
    std::stringstream ss(s);
    std::string part;
    static const std::regex factor_re("[Zz](/)?([0-9]+)");
    while (std::getline(ss, part, 'x')) {
        std::smatch m;
        if (!std::regex_match(part, m, factor_re)) throw std::invalid_argument("malformed group descriptor: " + descriptor);
        int n = std::stoi(m[2].str());
        if (n < 1) throw std::invalid_argument("malformed group descriptor: " + descriptor);
        if (n > 1) factors.push_back(n);
    }
    if (factors.empty() && s.empty()) throw std::invalid_argument("empty group descriptor");
    return AbelianGroup(factors);
}

std::string AbelianGroup::descriptor() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < factors_.size(); ++t) s += (t ? "xZ" : "Z") + std::to_string(factors_[t]);
    return s;
}

bool AbelianGroup::is_cyclic() const {
    long prod = 1, l = 1;
    for (int n : factors_) {
        prod *= n;
        l = lcm_long(l, n);
    }
    return prod == l;
}

int AbelianGroup::index_of(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) throw std::invalid_argument("element rank mismatch");
    int idx = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t)
        idx = idx * factors_[t] + static_cast<int>(mod_floor(g.residues[t], factors_[t]));
    return idx;
}

int AbelianGroup::pow(int a, long e) const {
    int r = 0;
    int base = e < 0 ? inv(a) : a;
    for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) r = mul(r, base);
    return r;
}

int AbelianGroup::element_order(int a) const {
    int r = a, n = 1;
    while (r != 0) {
        r = mul(r, a);
        ++n;
    }
    return n;
}

std::string AbelianGroup::element_name(int a) const {
    if (a == 0) return "e";
    const auto& res = elements_[a].residues;
    if (factors_.size() == 1) return res[0] == 1 ? "g" : "g^" + std::to_string(res[0]);
    std::string s;
    for (std::size_t t = 0; t < res.size(); ++t) {
        if (res[t] == 0) continue;
        if (!s.empty()) s += "*";
        s += "g" + std::to_string(t + 1);
        if (res[t] != 1) s += "^" + std::to_string(res[t]);
    }
    return s;
}

int AbelianGroup::parse_element(const std::string& name) const {
    if (name == "e" || name == "1" || name == "ε") return 0;
    std::vector<int> res(factors_.size(), 0);
    std::stringstream ss(name);
    std::string part;
    static const std::regex gen_re("g([0-9]*)(\\^(-?[0-9]+))?");
    while (std::getline(ss, part, '*')) {
        std::smatch m;
        if (!std::regex_match(part, m, gen_re)) throw std::invalid_argument("malformed element name: " + name);
        std::size_t t = 0;
        if (m[1].length() > 0) t = std::stoul(m[1].str()) - 1;
        else if (factors_.size() != 1) throw std::invalid_argument("ambiguous generator in: " + name);
        if (t >= factors_.size()) throw std::invalid_argument("generator out of range in: " + name);
        int e = m[3].matched ? std::stoi(m[3].str()) : 1;
        res[t] = static_cast<int>(mod_floor(res[t] + e, factors_[t]));
    }
    return index_of(GroupElement{res});
}

std::vector<Character> AbelianGroup::characters() const {
    std::vector<Character> out;
    for (const auto& g : elements_) out.push_back(Character{g.residues});
    return out;
}

Cyclotomic AbelianGroup::character_value(int c, int g) const { return root_of_unity(exponent_, char_exponent(c, g)); }

int AbelianGroup::character_index(const Character& chi) const { return index_of(GroupElement{chi.dual}); }

Cyclotomic AbelianGroup::evaluate(const Character& chi, const GroupElement& g) const {
    return character_value(character_index(chi), index_of(g));
}

Cyclotomic AbelianGroup::orthogonality_sum(const Character& chi) const {
    int c = character_index(chi);
    Cyclotomic s = Cyclotomic::zero(exponent_);
    for (int g = 0; g < order_; ++g) s += character_value(c, g);
    return s;
}

Character AbelianGroup::dual_character(int a) const { return Character{elements_[a].residues}; }

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
    // Invariant factors d_1 | d_2 | ... | d_r with product n.
    std::vector<AbelianGroup> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int last) {
        if (remaining == 1) {
            out.emplace_back(cur);
            return;
        }
        for (int d = 2; d <= remaining; ++d) {
            if (remaining % d != 0) continue;
            if (last > 1 && d % last != 0) continue;
            // Remaining factors are multiples of d, so d must divide what is left.
            int rest = remaining / d;
            if (rest != 1 && rest % d != 0) continue;
            cur.push_back(d);
            rec(rest, d);
            cur.pop_back();
        }
    };
    if (n == 1) return {AbelianGroup()};
    rec(n, 1);
    return out;
}

}  // namespace neargroup

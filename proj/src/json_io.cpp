#include "neargroup/json_io.hpp"

#include <stdexcept>

namespace neargroup {

json to_json(const Cyclotomic& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return json{{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("scalar must be an object with order and coeffs");
    int order = j.at("order").get<int>();
    if (order < 1) throw std::invalid_argument("scalar order must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
        Integer num(c[0].get<std::string>()), den(c[1].get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        coeffs.push_back(q);
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        throw std::invalid_argument("coefficient count must equal phi(order)");
    return Cyclotomic(order, std::move(coeffs));
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Cyclotomic> row;
        for (const auto& x : r) row.push_back(cyclotomic_from_json(x));
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
}

}  // namespace neargroup

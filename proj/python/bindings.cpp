#include "cli.hpp"
#include "neargroup/braiding.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace neargroup;

// Structured values cross the boundary as JSON text; the Python package decodes them.
namespace {

NearGroupData load(const std::string& text) { return data_from_json(json::parse(text)); }

std::pair<AbelianGroup, PiStructure> group_pi(const std::string& group, const std::string& pi) {
    AbelianGroup G = AbelianGroup::parse(group);
    return {G, PiStructure::parse(G, pi)};
}

}  // namespace

PYBIND11_MODULE(_neargroup, m) {
    m.doc() = "Exact near-group associators, coherence checks and braidings";

    py::register_exception<json::exception>(m, "JsonError", PyExc_ValueError);

    m.def("find_all_pi", [](const std::string& group) {
        std::vector<std::string> out;
        for (const auto& p : find_all_pi(AbelianGroup::parse(group))) out.push_back(p.to_cycle_notation());
        return out;
    }, py::arg("group"));

    m.def("pi_from_field", [](int q) {
        auto [G, pi] = pi_from_field(q);
        return std::make_pair(G.descriptor(), pi.to_cycle_notation());
    }, py::arg("q"));

    m.def("pi_violations", [](const std::string& group, const std::string& pi) { return group_pi(group, pi).second.violations(); },
          py::arg("group"), py::arg("pi"));

    m.def("field_from_pi", [](const std::string& group, const std::string& pi) {
        FieldTable t = field_from_pi(group_pi(group, pi).second);
        bool iso = fields_isomorphic(t, field_table(FiniteField(t.size)));
        return json{{"q", t.size}, {"add", t.add}, {"mul", t.mul}, {"axioms_hold", t.axiom_violations().empty()},
                    {"isomorphic_to_GF_q", iso}}
            .dump();
    }, py::arg("group"), py::arg("pi"));

    m.def("affine_group_fusion", [](int q) {
        AffineFusion f = affine_group_fusion(q);
        return py::make_tuple(f.group_order, f.linear_irreps, f.big_irrep_dim, f.k);
    }, py::arg("q"));

    m.def("construct_standard", [](const std::string& group, const std::string& pi) {
        auto [G, p] = group_pi(group, pi);
        return to_json(construct_standard(G, p)).dump();
    }, py::arg("group"), py::arg("pi"));

    m.def("example_data", [](const std::string& name, int selector) { return to_json(example_data(name, selector)).dump(); },
          py::arg("name"), py::arg("selector") = 0);

    m.def("example_names", &example_names);

    m.def("verify", [](const std::string& data, bool oracle) {
        NearGroupData d = load(data);
        py::gil_scoped_release release;
        VerificationReport rep = verify_all(d);
        if (oracle) {
            VerificationReport o = pentagon_oracle_all(d);
            for (const auto& f : o.families()) {
                FamilyResult& dst = rep.family("oracle:" + f.family);
                dst.checked += f.checked;
                dst.failure_count += f.failure_count;
                dst.failures = f.failures;
            }
        }
        return rep.to_json().dump();
    }, py::arg("data"), py::arg("oracle") = false);

    m.def("enumerate_braidings", [](const std::string& data, int root_bound) {
        NearGroupData d = load(data);
        py::gil_scoped_release release;
        BraidingEnumeration be = enumerate_braidings(d, root_bound);
        json bs = json::array();
        for (const auto& b : be.braidings) bs.push_back(to_json(d, b, is_symmetric(d, b), twist_solutions(d, b)));
        return json{{"modulus", be.modulus},
                    {"reduced_solutions", be.reduced_solutions.size()},
                    {"forward_hexagon_solutions", be.forward_count},
                    {"braidings", bs}}
            .dump();
    }, py::arg("data"), py::arg("root_bound") = 60);

    m.def("hexagon_constraints", [](const std::string& data) { return substituted_constraints(load(data)); }, py::arg("data"));

    m.def("classify_family", [](const std::string& family, int root_bound) {
        py::gil_scoped_release release;
        return classify_family(family, root_bound).to_json().dump();
    }, py::arg("family"), py::arg("root_bound") = 60);

    m.def("classify_monoidal", [](const std::string& group, const std::string& pi) {
        auto [G, p] = group_pi(group, pi);
        MonoidalClassification mc = classify_monoidal(G, p);
        json reps = json::array();
        for (const auto& r : mc.representatives) reps.push_back(to_json(r));
        return json{{"modulus", mc.modulus}, {"lattice_count", mc.lattice_count}, {"representatives", reps}}.dump();
    }, py::arg("group"), py::arg("pi"));

    m.def("obstruction", [](int k) {
        ObstructionVerdict v = trivial_group_verdict(k);
        return json{{"k", v.k}, {"obstructed", v.obstructed}, {"det_flip", v.det_flip}, {"witness", v.witness},
                    {"reduced_exponent", v.reduced_exponent}, {"reduced_sign", v.reduced_sign}}
            .dump();
    }, py::arg("k"));

    m.def("flip_determinant", &flip_determinant, py::arg("k"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}

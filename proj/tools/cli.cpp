#include "cli.hpp"

#include "neargroup/braiding.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace neargroup::cli {

namespace {

struct CommandConfig {
    std::string group;
    int field = 0;
    std::string pi;
    std::string input;
    std::string out;
    std::string family;
    int root_bound = 60;
    int k = -1;
    bool oracle = false;
    bool as_json = false;
    bool verbose = false;
};

// Input problems that map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

NearGroupData read_data(const std::string& path) {
    json j = read_json(path);
    try {
        return data_from_json(j);
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void check_out_path(const std::string& path) {
    if (path.empty()) return;
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) throw InputError("output directory does not exist: " + parent.string());
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

AbelianGroup parse_group(const std::string& s) {
    try {
        return AbelianGroup::parse(s);
    } catch (const std::exception& e) {
        throw InputError("malformed group descriptor '" + s + "': " + e.what());
    }
}

// Group and pi from --field, or from --group and --pi.
std::pair<AbelianGroup, PiStructure> group_and_pi(const CommandConfig& c) {
    if (c.field > 0) {
        if (!c.group.empty() || !c.pi.empty()) throw InputError("--field excludes --group and --pi");
        try {
            return pi_from_field(c.field);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    if (c.group.empty() || c.pi.empty()) throw InputError("give --field, or both --group and --pi");
    AbelianGroup G = parse_group(c.group);
    try {
        return {G, PiStructure::parse(G, c.pi)};
    } catch (const std::exception& e) {
        throw InputError("malformed permutation '" + c.pi + "': " + e.what());
    }
}

std::string field_element_name(const AbelianGroup& G, int code) { return code == 0 ? "0" : G.element_name(code - 1); }

int cmd_search_pi(const CommandConfig& c, std::ostream& out) {
    AbelianGroup G = parse_group(c.group);
    std::vector<PiStructure> all = find_all_pi(G);
    if (c.as_json) {
        json pis = json::array();
        for (const auto& p : all) pis.push_back(p.to_cycle_notation());
        out << json{{"schema", "neargroup-pi-search"}, {"version", 1}, {"group", G.descriptor()}, {"count", all.size()}, {"pi", pis}}.dump(2)
            << "\n";
    } else {
        out << "Group " << G.descriptor() << ": " << all.size() << " permutation" << (all.size() == 1 ? "" : "s") << "\n";
        for (const auto& p : all) out << "  " << p.to_cycle_notation() << "  omega=" << G.element_name(p.omega()) << "\n";
    }
    return all.empty() ? kFailure : kOk;
}

int cmd_build_field(const CommandConfig& c, std::ostream& out) {
    auto [G, pi] = group_and_pi(c);
    if (!pi.is_valid()) {
        out << "pi is not a valid structure:\n";
        for (const auto& v : pi.violations()) out << "  " << v << "\n";
        return kFailure;
    }
    FieldTable t;
    try {
        t = field_from_pi(pi);
    } catch (const std::domain_error& e) {
        out << "field axioms fail: " << e.what() << "\n";
        return kFailure;
    }
    std::vector<std::string> bad = t.axiom_violations();
    bool iso = fields_isomorphic(t, field_table(FiniteField(t.size)));
    std::vector<std::string> names;
    for (int a = 0; a < t.size; ++a) names.push_back(field_element_name(G, a));
    if (c.as_json) {
        json add = json::array(), mul = json::array();
        for (int a = 0; a < t.size; ++a) {
            json ra = json::array(), rm = json::array();
            for (int b = 0; b < t.size; ++b) {
                ra.push_back(names[t.plus(a, b)]);
                rm.push_back(names[t.times(a, b)]);
            }
            add.push_back(ra);
            mul.push_back(rm);
        }
        out << json{{"schema", "neargroup-field"}, {"version", 1},     {"q", t.size},
                    {"elements", names},          {"add", add},         {"mul", mul},
                    {"axioms_hold", bad.empty()}, {"isomorphic_to_GF_q", iso}}
                   .dump(2)
            << "\n";
    } else {
        std::size_t w = 1;
        for (const auto& n : names) w = std::max(w, n.size());
        auto table = [&](const char* title, auto op) {
            out << title << "\n";
            for (int a = 0; a < t.size; ++a) {
                out << "  ";
                for (int b = 0; b < t.size; ++b) {
                    std::string s = names[op(a, b)];
                    out << s << std::string(w + 1 - s.size(), ' ');
                }
                out << "\n";
            }
        };
        out << "Field of order " << t.size << " on {0} u " << G.descriptor() << ", pi = " << pi.to_cycle_notation() << "\n";
        out << "Elements: ";
        for (const auto& n : names) out << n << " ";
        out << "\n";
        table("Addition:", [&](int a, int b) { return t.plus(a, b); });
        table("Multiplication:", [&](int a, int b) { return t.times(a, b); });
        out << "Field axioms: " << (bad.empty() ? "hold" : "FAIL") << "\n";
        for (const auto& v : bad) out << "  " << v << "\n";
        out << "Isomorphic to GF(" << t.size << "): " << (iso ? "yes" : "no") << "\n";
    }
    return bad.empty() && iso ? kOk : kFailure;
}

int cmd_construct(const CommandConfig& c, std::ostream& out) {
    check_out_path(c.out);
    auto [G, pi] = group_and_pi(c);
    if (!pi.is_valid()) throw InputError("pi is not a valid structure: " + pi.violations().front());
    NearGroupData d = construct_standard(G, pi);
    std::string text = to_json(d).dump(2) + "\n";
    if (c.out.empty()) {
        out << text;
    } else {
        write_text(c.out, text);
        out << "Wrote (" << G.descriptor() << "," << d.k << ") data to " << c.out << "\n";
    }
    return kOk;
}

int cmd_verify(const CommandConfig& c, std::ostream& out) {
    NearGroupData d = read_data(c.input);
    VerificationReport rep = verify_all(d);
    if (c.oracle) {
        VerificationReport o = pentagon_oracle_all(d);
        for (const auto& f : o.families()) {
            FamilyResult& dst = rep.family("oracle:" + f.family);
            dst.checked += f.checked;
            dst.failure_count += f.failure_count;
            for (const auto& x : f.failures)
                if (dst.failures.size() < kMaxStoredFailures) dst.failures.push_back(x);
        }
        rep.seconds += o.seconds;
    }
    rep.title = "pentagon verification of " + c.input;
    if (c.as_json) out << rep.to_json().dump(2) << "\n";
    else out << rep.to_text();
    return rep.passed() ? kOk : kFailure;
}

int cmd_braidings(const CommandConfig& c, std::ostream& out) {
    NearGroupData d = read_data(c.input);
    BraidingEnumeration be = enumerate_braidings(d, c.root_bound);
    if (c.as_json) {
        json bs = json::array();
        for (const auto& b : be.braidings) bs.push_back(to_json(d, b, is_symmetric(d, b), twist_solutions(d, b)));
        out << json{{"schema", "neargroup-braidings"},
                    {"version", 1},
                    {"modulus", be.modulus},
                    {"reduced_solutions", be.reduced_solutions.size()},
                    {"forward_hexagon_solutions", be.forward_count},
                    {"braidings", bs}}
                   .dump(2)
            << "\n";
    } else {
        out << "Reduced hexagon solutions (roots of unity of order dividing " << be.modulus
            << "): " << be.reduced_solutions.size() << "\n";
        out << "Passing forward hexagons: " << be.forward_count << "\n";
        out << "Braidings: " << be.braidings.size() << "\n";
        for (const auto& b : be.braidings) {
            auto tw = twist_solutions(d, b);
            out << "  " << describe(b) << "  " << (is_symmetric(d, b) ? "symmetric" : "not symmetric") << ", ";
            if (tw.empty()) out << "not balanced\n";
            else out << "balanced (theta_m=" << tw[0].theta_m.to_string() << ")\n";
        }
    }
    return kOk;
}

int cmd_classify(const CommandConfig& c, std::ostream& out) {
    ClassificationRow row;
    try {
        row = classify_family(c.family, c.root_bound);
    } catch (const std::invalid_argument& e) {
        throw InputError("bad family '" + c.family + "': " + e.what());
    }
    if (c.as_json) out << row.to_json().dump(2) << "\n";
    else out << row.to_text();
    return kOk;
}

int cmd_obstruction(const CommandConfig& c, std::ostream& out) {
    if (c.k < 1) throw InputError("--k must be positive");
    ObstructionVerdict v = trivial_group_verdict(c.k);
    if (c.as_json) {
        out << json{{"schema", "neargroup-obstruction"},
                    {"version", 1},
                    {"k", v.k},
                    {"obstructed", v.obstructed},
                    {"det_flip", v.det_flip},
                    {"witness", v.witness},
                    {"reduced_exponent", v.reduced_exponent},
                    {"reduced_sign", v.reduced_sign}}
                   .dump(2)
            << "\n";
    } else {
        out << v.summary() << "\n";
    }
    return kOk;
}

bool same_matrices(const NearGroupData& a, const NearGroupData& b) {
    return a.gamma1 == b.gamma1 && a.gamma2 == b.gamma2 && a.gamma3 == b.gamma3 && a.lambda == b.lambda && a.M == b.M &&
           a.R == b.R && a.C == b.C && a.N == b.N;
}

int cmd_fixtures(const CommandConfig& c, std::ostream& out) {
    if (!c.out.empty() && !std::filesystem::is_directory(c.out)) throw InputError("--out must be an existing directory");
    bool ok = true;
    json rows = json::array();
    for (const auto& [name, sel] : example_names()) {
        NearGroupData d = example_data(name, sel);
        NearGroupData rebuilt = construct_from_primitive(d.group, d.pi, extract_primitive(d));
        bool same = same_matrices(d, rebuilt);
        bool pent = verify_all(d).passed();
        ok = ok && same && pent;
        std::string id = name + "-" + std::to_string(sel);
        if (!c.out.empty()) write_text((std::filesystem::path(c.out) / (id + ".json")).string(), to_json(d).dump(2) + "\n");
        rows.push_back({{"fixture", id}, {"matches_construction", same}, {"pentagons", pent}});
        if (!c.as_json)
            out << id << ": construction " << (same ? "matches" : "DIFFERS") << ", pentagons " << (pent ? "pass" : "FAIL") << "\n";
    }
    if (c.as_json) out << json{{"schema", "neargroup-fixtures"}, {"version", 1}, {"fixtures", rows}}.dump(2) << "\n";
    return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig c;
    CLI::App app{"Near-group fusion categories: construction, coherence checks and classification", "neargroup"};
    app.require_subcommand(1, 1);
    app.add_flag("-v,--verbose", c.verbose, "Report timing on stderr");

    auto* search = app.add_subcommand("search-pi", "All permutations pi of G\\{e} with the near-group properties");
    search->add_option("--group", c.group, "Group descriptor such as Z6 or Z2xZ4")->required();
    search->add_flag("--json", c.as_json);

    auto* field = app.add_subcommand("build-field", "Field tables on {0} u G from a permutation pi");
    field->add_option("--group", c.group, "Group descriptor");
    field->add_option("--pi", c.pi, "pi in disjoint-cycle notation over element names, e.g. \"(g g^2 g^3)\"");
    field->add_option("--field", c.field, "Prime power q; uses the pi induced by GF(q)");
    field->add_flag("--json", c.as_json);

    auto* construct = app.add_subcommand("construct", "Standard associator data as JSON");
    construct->add_option("--field", c.field, "Prime power q");
    construct->add_option("--group", c.group, "Group descriptor");
    construct->add_option("--pi", c.pi, "pi in disjoint-cycle notation");
    construct->add_option("--out", c.out, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check every pentagon family of a data file");
    verify->add_option("--input", c.input, "Data file")->required();
    verify->add_flag("--oracle", c.oracle, "Also run the generic pentagon oracle");
    verify->add_flag("--json", c.as_json);

    auto* braid = app.add_subcommand("braidings", "Enumerate braidings of a data file");
    braid->add_option("--input", c.input, "Data file")->required();
    braid->add_option("--root-bound", c.root_bound, "Order bound for roots of unity in underdetermined systems")
        ->check(CLI::PositiveNumber);
    braid->add_flag("--json", c.as_json);

    auto* classify = app.add_subcommand("classify", "Monoidal structures and braidings of a family");
    classify->add_option("--family", c.family, "Z2k1, Z3k2, Z4k3 or Z<n>")->required();
    classify->add_option("--root-bound", c.root_bound)->check(CLI::PositiveNumber);
    classify->add_flag("--json", c.as_json);

    auto* obstruction = app.add_subcommand("obstruction", "Obstruction verdict for the trivial group with multiplicity k");
    obstruction->add_option("--k", c.k, "Multiplicity k")->required();
    obstruction->add_flag("--json", c.as_json);

    auto* fixtures = app.add_subcommand("fixtures", "Check the bundled example tensors; optionally write them");
    fixtures->add_option("--out", c.out, "Directory for fixture JSON files");
    fixtures->add_flag("--json", c.as_json);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = kUsage;
    try {
        if (*search) code = cmd_search_pi(c, out);
        else if (*field) code = cmd_build_field(c, out);
        else if (*construct) code = cmd_construct(c, out);
        else if (*verify) code = cmd_verify(c, out);
        else if (*braid) code = cmd_braidings(c, out);
        else if (*classify) code = cmd_classify(c, out);
        else if (*obstruction) code = cmd_obstruction(c, out);
        else if (*fixtures) code = cmd_fixtures(c, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    if (c.verbose)
        err << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace neargroup::cli

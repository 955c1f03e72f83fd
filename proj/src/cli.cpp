#include "s3q/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "s3q/algebra.hpp"
#include "s3q/report.hpp"

namespace s3q {

namespace {

using nlohmann::json;

struct Options {
    std::string group;
    int n = 0;
    bool has_n = false;
    int max_degree = 60;
    bool json = false;
    std::string out_path;
    std::string seed = "P";
    std::string left = "P";
    std::string right = "P";
};

struct Result {
    json doc;
    std::string text;
    int code = kExitOk;
};

FiniteSubgroup group_of(const Options& o) {
    return build(parse_group(o.group, o.has_n ? std::optional<int>(o.n) : std::nullopt));
}

const NamedForm& find_form(const std::vector<NamedForm>& forms, const std::string& name, const std::string& group) {
    for (const auto& f : forms) {
        if (f.name == name) {
            return f;
        }
    }
    std::string known;
    for (const auto& f : forms) {
        known += (known.empty() ? "" : ", ") + f.name;
    }
    throw std::invalid_argument("no form named '" + name + "' for " + group + " (known: " + known + ")");
}

std::string describe(const NamedForm& f) {
    std::ostringstream os;
    os << f.name << "  degree " << f.degree() << ", character order " << f.character.order() << "\n    "
       << f.form.to_string() << "\n";
    return os.str();
}

std::string describe(const SpinComponent& c) {
    std::ostringstream os;
    os << c.source << "  k=" << c.k << "  2J=" << c.two_j() << "  " << classification_name(c.classification);
    if (!c.descendant_of.empty()) {
        os << "  of " << c.descendant_of;
    }
    if (c.constant) {
        os << "  c = " << report::text(*c.constant);
    }
    os << "  (molien " << c.molien << (c.sphere_checked ? ", sphere ok" : "") << ")\n";
    return os.str();
}

Result cmd_group(const Options& o) {
    const auto group = group_of(o);
    Result r;
    r.doc = report::group_summary(group);
    std::ostringstream os;
    os << group.name() << "\n  order " << group.order() << "\n  center size " << group.center_size()
       << "\n  contains -1: " << (group.contains_minus_identity() ? "yes" : "no") << "\n  generators:\n";
    for (const auto& g : group.generators()) {
        os << "    [" << g.a.to_string() << ", " << g.b.to_string() << "; " << g.c.to_string() << ", "
           << g.d.to_string() << "]\n";
    }
    r.text = os.str();
    return r;
}

Result cmd_invariants(const Options& o) {
    const auto group = group_of(o);
    const auto sys = fundamental(group);
    Result r;
    r.doc = report::invariant_summary(sys, o.max_degree);
    std::ostringstream os;
    os << group.name() << (sys.exceptional() ? " (cyclic/dihedral case)" : "") << "\n";
    for (const auto& f : sys.all_forms()) {
        os << "  " << describe(f);
    }
    if (sys.hessian_constant) {
        os << "  hessian constant: " << report::text(*sys.hessian_constant) << "\n";
    }
    os << "  generators: " << sys.generators[0].name << ", " << sys.generators[1].name << ", "
       << sys.generators[2].name << "\n";
    if (sys.syzygy) {
        os << "  syzygy (degree " << sys.syzygy->degree << "):\n";
        for (std::size_t j = 0; j < sys.syzygy->exponents.size(); ++j) {
            if (sys.syzygy->coeffs[j].is_zero()) continue;
            const auto& e = sys.syzygy->exponents[j];
            os << "    " << report::text(sys.syzygy->coeffs[j]) << "  *  " << sys.syzygy->names[0] << "^" << e[0]
               << " " << sys.syzygy->names[1] << "^" << e[1] << " " << sys.syzygy->names[2] << "^" << e[2] << "\n";
        }
    }
    long mismatches = 0;
    for (const auto& row : generation_check(sys, o.max_degree)) {
        mismatches += row.matches() ? 0 : 1;
    }
    os << "  generation up to degree " << o.max_degree << ": " << mismatches << " mismatching degrees\n";
    r.text = os.str();
    return r;
}

Result cmd_multiplet(const Options& o) {
    const auto group = group_of(o);
    const auto sys = fundamental(group);
    const auto forms = sys.all_forms();
    const auto& seed = find_form(forms, o.seed, group.name());
    const Multiplet m = multiplet_from_hw(seed.form);
    Result r;
    r.doc = {{"group", group.name()}, {"seed", report::to_json(seed)}, {"multiplet", report::to_json(m)}};
    std::ostringstream os;
    os << group.name() << "  multiplet of " << describe(seed);
    for (int l = 0; l < m.dimension(); ++l) {
        os << "  [" << l << "] " << m.components[l].to_string() << "\n";
    }
    r.text = os.str();
    return r;
}

Result cmd_decompose(const Options& o) {
    const auto group = group_of(o);
    const auto sys = fundamental(group);
    const auto forms = sys.all_forms();
    const auto& a = find_form(forms, o.left, group.name());
    const auto& b = find_form(forms, o.right, group.name());
    const Catalog catalog(forms);
    const auto comps = decompose_product(multiplet_from_hw(a.form), multiplet_from_hw(b.form), group, catalog, true,
                                         a.name + " x " + b.name);
    Result r;
    json list = json::array();
    std::ostringstream os;
    os << group.name() << "\n";
    for (const auto& c : comps) {
        list.push_back(report::to_json(c));
        os << "  " << describe(c);
    }
    r.doc = {{"group", group.name()}, {"left", a.name}, {"right", b.name}, {"components", list}};
    r.text = os.str();
    return r;
}

Result cmd_relations(const Options& o) {
    const auto group = group_of(o);
    const auto sys = fundamental(group);
    const Catalog catalog(sys);
    const auto scan = relation_scan(group, sys.all_forms(), o.max_degree, catalog);
    Result r;
    json list = json::array();
    std::ostringstream os;
    os << group.name() << "  scan to total seed degree " << o.max_degree << ": " << scan.components.size()
       << " components, " << scan.relations() << " relations, " << scan.descendants() << " descendants\n";
    for (const auto& c : scan.components) {
        list.push_back(report::to_json(c, false));
        if (c.classification != Classification::Descendant) {
            os << "  " << describe(c);
        }
    }
    r.doc = {{"group", group.name()},
             {"max_degree", o.max_degree},
             {"relations", scan.relations()},
             {"descendants", scan.descendants()},
             {"components", list}};
    r.text = os.str();
    return r;
}

Result cmd_molien(const Options& o) {
    const auto group = group_of(o);
    Result r;
    r.doc = {{"group", group.name()}, {"table", report::molien_table(group, o.max_degree)}};
    std::ostringstream os;
    os << group.name() << "\n  degree  dim\n";
    for (int d = 0; d <= o.max_degree; ++d) {
        os << "  " << d << "  " << molien_dim(group, d) << "\n";
    }
    r.text = os.str();
    return r;
}

std::vector<GroupSpec> verify_targets(const Options& o) {
    if (o.group != "all") {
        return {parse_group(o.group, o.has_n ? std::optional<int>(o.n) : std::nullopt)};
    }
    std::vector<GroupSpec> specs;
    for (const char* family : {"cyclic", "binary-dihedral"}) {
        for (int n = 2; n <= 6; ++n) {
            specs.push_back(parse_group(family, n));
        }
    }
    for (const char* family : {"binary-tetrahedral", "binary-octahedral", "binary-icosahedral"}) {
        specs.push_back(parse_group(family, std::nullopt));
    }
    return specs;
}

Result cmd_verify(const Options& o) {
    const VerifyOptions options{o.max_degree};
    Result r;
    bool passed = true;
    json groups = json::array();
    std::ostringstream os;
    for (const auto& spec : verify_targets(o)) {
        const auto group = build(spec);
        json claims = json::array();
        bool group_passed = true;
        for (const auto& c : verify_claims(group, options)) {
            claims.push_back(report::to_json(c));
            group_passed = group_passed && c.passed;
            os << (c.passed ? "PASS  " : "FAIL  ") << c.group << "  " << c.id << "  " << c.statement << "\n";
            if (!c.passed && c.witness.contains("error")) {
                os << "      error: " << c.witness["error"].get<std::string>() << "\n";
            }
        }
        groups.push_back({{"group", group.name()}, {"claims", claims}, {"passed", group_passed}});
        passed = passed && group_passed;
    }
    os << (passed ? "all claims pass" : "some claims FAILED") << "\n";
    r.doc = o.group == "all" ? json{{"groups", groups}, {"passed", passed}} : groups[0];
    r.text = os.str();
    r.code = passed ? kExitOk : kExitFailed;
    return r;
}

void add_common(CLI::App* sub, Options& o, bool degree) {
    sub->add_option("group", o.group,
                    "cyclic, binary-dihedral, binary-tetrahedral, binary-octahedral or binary-icosahedral")
        ->required();
    sub->add_option("--n", o.n, "parameter of the cyclic and binary dihedral families")
        ->check(CLI::PositiveNumber)
        ->each([&o](const std::string&) { o.has_n = true; });
    if (degree) {
        sub->add_option("--max-degree", o.max_degree, "degree bound (default 60)")->check(CLI::Range(0, 60));
    }
    sub->add_flag("--json", o.json, "emit the JSON report");
    sub->add_option("--out", o.out_path, "write the report to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariant theory of finite subgroups of SU(2) acting on the 3-sphere", "s3q"};
    app.require_subcommand(1);
    Options o;
    std::function<Result(const Options&)> command;

    auto* group = app.add_subcommand("group", "certified group elements and generators");
    add_common(group, o, false);
    group->callback([&] { command = cmd_group; });

    auto* invariants = app.add_subcommand("invariants", "fundamental forms, syzygy and generation check");
    add_common(invariants, o, true);
    invariants->callback([&] { command = cmd_invariants; });

    auto* multiplet = app.add_subcommand("multiplet", "sphere-side multiplet of a named form");
    add_common(multiplet, o, false);
    multiplet->add_option("--seed", o.seed, "name of the form (default P)");
    multiplet->callback([&] { command = cmd_multiplet; });

    auto* decompose = app.add_subcommand("decompose", "spin components of the product of two multiplets");
    add_common(decompose, o, false);
    decompose->add_option("--left", o.left, "left form (default P)");
    decompose->add_option("--right", o.right, "right form (default P)");
    decompose->callback([&] { command = cmd_decompose; });

    auto* relations = app.add_subcommand("relations", "binary and ternary relation scan");
    add_common(relations, o, true);
    relations->callback([&] { command = cmd_relations; });

    auto* molien = app.add_subcommand("molien", "dimensions of invariant forms by degree");
    add_common(molien, o, true);
    molien->callback([&] { command = cmd_molien; });

    auto* verify = app.add_subcommand("verify", "run the claim battery for a group, or for all groups");
    add_common(verify, o, true);
    verify->callback([&] { command = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const Result r = command(o);
        const std::string body = o.json ? r.doc.dump(2) + "\n" : r.text;
        if (o.out_path.empty()) {
            out << body;
        } else {
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file || !(file << body)) {
                err << "error: cannot write " << o.out_path << "\n";
                return kExitUsage;
            }
        }
        return r.code;
    } catch (const CertificationError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace s3q

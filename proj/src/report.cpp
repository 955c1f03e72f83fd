#include "s3q/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace s3q::report {

namespace {

double clean(double v) { return std::abs(v) < 1e-13 ? 0.0 : v; }

}  // namespace

json to_json(const CycloNum& x) {
    json terms = json::array();
    const auto coords = x.coords();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] != 0) {
            terms.push_back({k, coords[k].get_str()});
        }
    }
    const auto z = x.approx();
    return {{"zeta_powers", terms}, {"approx", {clean(z.real()), clean(z.imag())}}};
}

json to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return {{"degree", f.degree()}, {"coeffs", coeffs}, {"text", f.to_string()}};
}

json to_json(const SphereFunction& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back({{"exp", {e[0], e[1], e[2], e[3]}}, {"coeff", to_json(c)}});
    }
    return terms;
}

json to_json(const Multiplet& m) {
    json comps = json::array();
    for (const auto& c : m.components) {
        comps.push_back(to_json(c));
    }
    return {{"twoJ", m.two_j}, {"components", comps}};
}

json to_json(const Mat2& m) { return {{to_json(m.a), to_json(m.b)}, {to_json(m.c), to_json(m.d)}}; }

json to_json(const Character& chi) {
    json exps = json::array();
    for (const auto& v : chi.values) {
        const auto k = root_of_unity_exponent(v);
        if (!k) {
            throw std::logic_error("character value is not a root of unity");
        }
        exps.push_back(*k);
    }
    return {{"order", chi.order()}, {"zeta120_exponents", exps}};
}

json to_json(const NamedForm& f) {
    return {{"name", f.name},
            {"degree", f.degree()},
            {"form", to_json(f.form)},
            {"character_order", f.character.order()},
            {"invariant", f.is_invariant()}};
}

json to_json(const Syzygy& rel) {
    json terms = json::array();
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        const auto& e = rel.exponents[j];
        terms.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coeff", to_json(rel.coeffs[j])}});
    }
    return {{"generators", {rel.names[0], rel.names[1], rel.names[2]}}, {"degree", rel.degree}, {"terms", terms}};
}

json to_json(const SpinComponent& c, bool with_form) {
    json out = {{"source", c.source},
                {"twoJ1", c.two_j1},
                {"twoJ2", c.two_j2},
                {"k", c.k},
                {"twoJ", c.two_j()},
                {"classification", classification_name(c.classification)},
                {"character_order", c.character.order()},
                {"molien", c.molien},
                {"sphere_checked", c.sphere_checked},
                {"symmetry_forced", c.symmetry_forced}};
    if (with_form && !c.highest_weight.is_zero()) {
        out["highest_weight"] = to_json(c.highest_weight);
    }
    if (!c.descendant_of.empty()) {
        out["descendant_of"] = c.descendant_of;
    }
    if (c.constant) {
        out["constant"] = to_json(*c.constant);
    }
    return out;
}

json to_json(const ClaimReport& r) {
    return {{"group", r.group},
            {"id", r.id},
            {"statement", r.statement},
            {"status", r.passed ? "pass" : "fail"},
            {"witness", r.witness}};
}

json group_summary(const FiniteSubgroup& group) {
    json gens = json::array();
    for (const auto& g : group.generators()) {
        gens.push_back(to_json(g));
    }
    return {{"name", group.name()},
            {"order", group.order()},
            {"generators", gens},
            {"element_count", group.elements().size()},
            {"center_size", group.center_size()},
            {"contains_minus_identity", group.contains_minus_identity()}};
}

json molien_table(const FiniteSubgroup& group, int max_degree) {
    json rows = json::array();
    for (int d = 0; d <= max_degree; ++d) {
        rows.push_back({{"degree", d}, {"dim", molien_dim(group, d)}});
    }
    return rows;
}

json invariant_summary(const InvariantSystem& sys, int max_degree) {
    json out = {{"group", sys.group.name()}, {"exceptional", sys.exceptional()}, {"P", to_json(sys.p)},
                {"Q", to_json(sys.q)}};
    if (sys.r) out["R"] = to_json(*sys.r);
    if (sys.extra) out["extra"] = to_json(*sys.extra);
    json semi = json::array();
    for (const auto& f : sys.semi_invariants) {
        semi.push_back(to_json(f));
    }
    out["semi_invariants"] = semi;
    json gens = json::array();
    for (const auto& f : sys.generators) {
        gens.push_back(to_json(f));
    }
    out["generators"] = gens;
    if (sys.hessian_constant) out["hessian_constant"] = to_json(*sys.hessian_constant);
    if (sys.syzygy) out["syzygy"] = to_json(*sys.syzygy);
    json generation = json::array();
    for (const auto& row : generation_check(sys, max_degree)) {
        generation.push_back({{"degree", row.degree}, {"products_rank", row.products_rank}, {"molien", row.molien}});
    }
    out["generation"] = generation;
    return out;
}

std::string text(const CycloNum& x) {
    const auto z = x.approx();
    std::ostringstream os;
    os << x.to_string() << "  ~ " << std::setprecision(12) << clean(z.real());
    if (clean(z.imag()) != 0.0) {
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

}  // namespace s3q::report

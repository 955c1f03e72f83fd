#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "s3q/algebra.hpp"
#include "s3q/report.hpp"

namespace s3q {

namespace {

using nlohmann::json;
using report::to_json;

const BinaryForm S = BinaryForm::s();
const BinaryForm T = BinaryForm::t();

class Battery {
  public:
    explicit Battery(std::string group) : group_(std::move(group)) {}

    /// Runs one claim; an exception inside the body is recorded as a failure.
    void run(const std::string& id, const std::string& statement, const std::function<bool(json&)>& body) {
        ClaimReport r{group_, id, statement, false, json::object()};
        try {
            r.passed = body(r.witness);
        } catch (const std::exception& e) {
            r.passed = false;
            r.witness["error"] = e.what();
        }
        reports_.push_back(std::move(r));
    }

    std::vector<ClaimReport> take() { return std::move(reports_); }

  private:
    std::string group_;
    std::vector<ClaimReport> reports_;
};

const NamedForm& named(const InvariantSystem& sys, const std::string& name) {
    for (const auto& f : sys.semi_invariants) {
        if (f.name == name) return f;
    }
    for (const auto& f : sys.generators) {
        if (f.name == name) return f;
    }
    if (sys.p.name == name) return sys.p;
    if (sys.q.name == name) return sys.q;
    if (sys.r && sys.r->name == name) return *sys.r;
    if (sys.extra && sys.extra->name == name) return *sys.extra;
    throw std::logic_error("no form named " + name);
}

json brief(const SpinComponent& c) {
    json out = {{"k", c.k}, {"twoJ", c.two_j()}, {"classification", classification_name(c.classification)}};
    if (!c.descendant_of.empty()) out["descendant_of"] = c.descendant_of;
    if (c.constant) out["constant"] = to_json(*c.constant);
    out["sphere_checked"] = c.sphere_checked;
    return out;
}

std::vector<SpinComponent> self_product(const NamedForm& f, const FiniteSubgroup& group, const Catalog& catalog,
                                        json& witness) {
    const Multiplet m = multiplet_from_hw(f.form);
    auto comps = decompose_product(m, m, group, catalog, true, f.name + " x " + f.name);
    json list = json::array();
    for (const auto& c : comps) {
        list.push_back(brief(c));
    }
    witness["components"] = list;
    return comps;
}

bool is_zero_at(const std::vector<SpinComponent>& comps, int k) {
    return comps.at(k).classification == Classification::Zero;
}

bool constant_at(const std::vector<SpinComponent>& comps, int k) {
    const auto& c = comps.at(k);
    return c.classification == Classification::NormalizationConstant && c.constant && !c.constant->is_zero();
}

/// Nonzero c with the component's highest weight equal to c * target.
std::optional<CycloNum> proportional_at(const std::vector<SpinComponent>& comps, int k, const BinaryForm& target) {
    const auto& hw = comps.at(k).highest_weight;
    if (hw.is_zero() || hw.degree() != target.degree()) {
        return std::nullopt;
    }
    auto c = proportionality(hw, target);
    if (c && c->is_zero()) {
        return std::nullopt;
    }
    return c;
}

bool odd_components_zero(const std::vector<SpinComponent>& comps) {
    for (const auto& c : comps) {
        if (c.k % 2 == 1 && c.classification != Classification::Zero) {
            return false;
        }
    }
    return true;
}

std::vector<int> slot_key(const SpinComponent& c) {
    std::vector<int> key{c.two_j()};
    for (const auto& v : c.character.values) {
        key.push_back(root_of_unity_exponent(v).value_or(-1));
    }
    return key;
}

std::vector<BinaryForm> multiplet_span_forms(const SpinSpans& spans, int degree) {
    const auto it = spans.find(degree);
    return it == spans.end() ? std::vector<BinaryForm>{} : it->second;
}

bool form_in_span(const std::vector<BinaryForm>& basis, const BinaryForm& target) {
    SpanBasis span(target.degree() + 1);
    for (const auto& f : basis) {
        if (f.degree() == target.degree()) span.insert(f.coeffs());
    }
    return span.contains(target.coeffs());
}

std::vector<SphereFunction> components_of(const BinaryForm& hw) { return multiplet_from_hw(hw).components; }

void shared_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys, const Catalog& catalog,
                   const VerifyOptions& options) {
    battery.run("molien-two-oracles",
                "Character averaging and the kernel of the generator conditions give the same dimension of "
                "semi-invariant forms, for the trivial character and every character of a named form.",
                [&](json& w) {
                    std::vector<Character> chars{Character::trivial(group.order())};
                    for (const auto& f : sys.all_forms()) {
                        if (std::find(chars.begin(), chars.end(), f.character) == chars.end()) {
                            chars.push_back(f.character);
                        }
                    }
                    const int top = std::min(30, options.max_degree);
                    json mismatches = json::array();
                    for (const auto& chi : chars) {
                        for (int d = 0; d <= top; ++d) {
                            const long a = molien_dim(group, d, &chi);
                            const long b = fixed_space_dim(group, d, &chi);
                            if (a != b) {
                                mismatches.push_back({{"degree", d}, {"character_order", chi.order()}, {"molien", a},
                                                      {"kernel", b}});
                            }
                        }
                    }
                    w["characters"] = chars.size();
                    w["max_degree"] = top;
                    w["mismatches"] = mismatches;
                    return mismatches.empty();
                });

    battery.run("klein-generation",
                "Products of the three generating invariants span every space of invariant forms up to the degree "
                "bound.",
                [&](json& w) {
                    json bad = json::array();
                    json rows = json::array();
                    for (const auto& row : generation_check(sys, options.max_degree)) {
                        if (row.molien > 0) rows.push_back({row.degree, row.products_rank, row.molien});
                        if (!row.matches()) bad.push_back(row.degree);
                    }
                    w["generators"] = {sys.generators[0].name, sys.generators[1].name, sys.generators[2].name};
                    w["rows_degree_rank_molien"] = rows;
                    w["mismatched_degrees"] = bad;
                    return bad.empty();
                });

    if (!sys.exceptional()) {
        battery.run("syzygy",
                    "The generating invariants satisfy exactly one linear relation among monomials of twice the top "
                    "degree, and it vanishes identically.",
                    [&](json& w) {
                        const Syzygy rel = syzygy(sys);
                        w["syzygy"] = to_json(rel);
                        return evaluate(rel, sys.generators).is_zero();
                    });
    }

    RelationScan scan;
    bool scanned = false;
    battery.run("relation-scan",
                "Every spin component of binary and ternary products of the named forms is zero, a normalization "
                "constant, or a descendant of the named forms; no component is nonzero where no semi-invariant "
                "exists.",
                [&](json& w) {
                    scan = relation_scan(group, sys.all_forms(), options.max_degree, catalog);
                    scanned = true;
                    std::map<std::string, long> counts;
                    json relations = json::array();
                    json unclassified = json::array();
                    for (const auto& c : scan.components) {
                        ++counts[classification_name(c.classification)];
                        const std::string label = c.source + " k=" + std::to_string(c.k);
                        if (c.classification == Classification::Zero) relations.push_back(label);
                        if (c.classification == Classification::Unclassified) unclassified.push_back(label);
                    }
                    w["max_degree"] = options.max_degree;
                    w["components"] = scan.components.size();
                    w["counts"] = counts;
                    w["relations"] = relations;
                    w["unclassified"] = unclassified;
                    return unclassified.empty();
                });

    battery.run("two-path",
                "Each scanned component computed as a transvectant equals the sphere-side highest-weight "
                "combination of the two multiplets.",
                [&](json& w) {
                    if (!scanned) throw std::runtime_error("relation scan did not complete");
                    const auto checked = std::count_if(scan.components.begin(), scan.components.end(),
                                                       [](const SpinComponent& c) { return c.sphere_checked; });
                    w["components"] = scan.components.size();
                    w["sphere_checked"] = checked;
                    return static_cast<std::size_t>(checked) == scan.components.size();
                });

    battery.run("molien-converse",
                "Every scanned slot with a nonzero Molien dimension is reached by a nonzero component, unless all "
                "its components come from a power of one multiplet whose symmetric power lacks that spin.",
                [&](json& w) {
                    if (!scanned) throw std::runtime_error("relation scan did not complete");
                    struct Slot {
                        bool hit = false;
                        bool symmetry_only = true;
                        long molien = 0;
                        int two_j = 0;
                        int character_order = 1;
                    };
                    std::map<std::vector<int>, Slot> slots;
                    for (const auto& c : scan.components) {
                        auto& slot = slots[slot_key(c)];
                        slot.molien = c.molien;
                        slot.two_j = c.two_j();
                        slot.character_order = c.character.order();
                        if (c.classification != Classification::Zero) {
                            slot.hit = true;
                        } else if (!c.symmetry_forced) {
                            slot.symmetry_only = false;
                        }
                    }
                    long open = 0, hit = 0, forced = 0;
                    json unexplained = json::array();
                    for (const auto& [key, slot] : slots) {
                        if (slot.molien == 0) continue;
                        ++open;
                        if (slot.hit) {
                            ++hit;
                        } else if (slot.symmetry_only) {
                            ++forced;
                        } else {
                            unexplained.push_back({{"twoJ", slot.two_j}, {"character_order", slot.character_order},
                                                   {"molien", slot.molien}});
                        }
                    }
                    w["open_slots"] = open;
                    w["hit"] = hit;
                    w["symmetry_forced"] = forced;
                    w["unexplained"] = unexplained;
                    return unexplained.empty();
                });

    battery.run("descendant-constants",
                "Every single-form descendant and every normalization constant found by the scan is a nonzero exact "
                "number, and recomputing it gives the same value.",
                [&](json& w) {
                    if (!scanned) throw std::runtime_error("relation scan did not complete");
                    long count = 0;
                    bool ok = true;
                    for (const auto& c : scan.components) {
                        if (!c.constant) continue;
                        ++count;
                        ok = ok && !c.constant->is_zero();
                        if (c.classification == Classification::Descendant) {
                            const auto again = catalog.match(c.highest_weight, c.character);
                            ok = ok && again && again->constant == c.constant;
                        }
                    }
                    w["constants"] = count;
                    return ok && count > 0;
                });
}

void cyclic_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys, const Catalog& catalog) {
    const int n = group.spec().n;
    const BinaryForm plus = S.pow(n) + T.pow(n);
    const BinaryForm minus = S.pow(n) - T.pow(n);
    const CycloNum half(mpq_class(1, 2));

    battery.run("hessian-constant", "The Hessian of st is the constant -1/2, so Q carries no new invariant.",
                [&](json& w) {
                    w["hessian"] = to_json(sys.q.form);
                    return sys.q.form == BinaryForm::constant(-half);
                });

    battery.run("hopf-quadric",
                "In the square of the spin-1 multiplet of st, the spin-0 part is the constant -1/2, the spin-1 part "
                "vanishes and the spin-2 part is (st)^2.",
                [&](json& w) {
                    const auto comps = self_product(sys.p, group, catalog, w);
                    return comps.at(2).constant == -half && is_zero_at(comps, 1) &&
                           proportional_at(comps, 0, sys.p.form.pow(2)).has_value();
                });

    const NamedForm extra = *sys.extra;
    battery.run("spin-drop-zero",
                "Pairing the spin-1 multiplet of st with the multiplet of s^n+t^n gives zero at spin n/2-1.",
                [&](json& w) {
                    const auto comps = decompose_product(multiplet_from_hw(sys.p.form), multiplet_from_hw(extra.form),
                                                         group, catalog, true, "P x " + extra.name);
                    w["k2"] = brief(comps.at(2));
                    return is_zero_at(comps, 2) && comps.at(2).sphere_checked;
                });

    battery.run("spin-n-half-multiplet",
                "The spin-n/2 part of the same product is -1/2 (s^n - t^n), generating the multiplet of s^n-t^n.",
                [&](json& w) {
                    const auto comps = decompose_product(multiplet_from_hw(sys.p.form), multiplet_from_hw(extra.form),
                                                         group, catalog, true, "P x " + extra.name);
                    const auto c = proportional_at(comps, 1, minus);
                    w["k1"] = brief(comps.at(1));
                    if (c) w["constant"] = to_json(*c);
                    return c && *c == -half && comps.at(1).sphere_checked;
                });

    const SphereFunction target = SphereFunction::from_form(plus).conj();
    if (n % 2 == 1) {
        battery.run("pseudoreal",
                    "For odd n the conjugate of s^n+t^n lies outside its own multiplet but inside the sum of the "
                    "multiplets of s^n+t^n and s^n-t^n.",
                    [&](json& w) {
                        const auto own = components_of(plus);
                        auto both = own;
                        const auto other = components_of(minus);
                        both.insert(both.end(), other.begin(), other.end());
                        const bool outside = !in_span(own, target);
                        const bool inside = in_span(both, target);
                        w["outside_own_multiplet"] = outside;
                        w["inside_combined_span"] = inside;
                        return outside && inside;
                    });
    } else {
        battery.run("real", "For even n the conjugate of s^n+t^n lies in its own multiplet.", [&](json& w) {
            const bool inside = in_span(components_of(plus), target);
            w["inside_own_multiplet"] = inside;
            return inside;
        });
    }
}

void dihedral_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys,
                     const Catalog& catalog) {
    const int n = group.spec().n;
    const CycloNum unit = n % 2 == 0 ? CycloNum(1) : imag_unit();
    const BinaryForm plus = S.pow(n) + unit * T.pow(n);
    const BinaryForm minus = S.pow(n) - unit * T.pow(n);

    battery.run("hessian-proportional", "The Hessian of s^2 t^2 is -1/6 s^2 t^2, so Q is proportional to P.",
                [&](json& w) {
                    w["constant"] = to_json(*sys.hessian_constant);
                    return *sys.hessian_constant == CycloNum(mpq_class(-1, 6));
                });

    battery.run("semi-invariants",
                "st and the degree-n sum are semi-invariants with nontrivial characters, and s^2n+t^2n is invariant.",
                [&](json& w) {
                    const auto st = character_of(S * T, group);
                    const auto chi = character_of(plus, group);
                    w["st_character_order"] = st ? st->order() : 0;
                    w["degree_n_character_order"] = chi ? chi->order() : 0;
                    w["extra_invariant"] = is_invariant(sys.extra->form, group);
                    return st && chi && !st->is_trivial() && !chi->is_trivial() &&
                           is_invariant(sys.extra->form, group);
                });

    const auto& st = named(sys, "st");
    const auto& semi_plus = sys.semi_invariants.at(1);
    battery.run("spin-drop-zero", "Pairing the multiplets of st and of the degree-n sum gives zero at spin n/2-1.",
                [&](json& w) {
                    const auto comps = decompose_product(multiplet_from_hw(st.form), multiplet_from_hw(semi_plus.form),
                                                         group, catalog, true, "st x " + semi_plus.name);
                    w["k2"] = brief(comps.at(2));
                    return is_zero_at(comps, 2) && comps.at(2).sphere_checked;
                });

    battery.run("spin-n-half-multiplet",
                "The spin-n/2 part of the same product is proportional to the degree-n difference.", [&](json& w) {
                    const auto comps = decompose_product(multiplet_from_hw(st.form), multiplet_from_hw(semi_plus.form),
                                                         group, catalog, true, "st x " + semi_plus.name);
                    const auto c = proportional_at(comps, 1, minus);
                    w["k1"] = brief(comps.at(1));
                    return c.has_value() && comps.at(1).sphere_checked;
                });
}

void tetrahedral_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys,
                        const Catalog& catalog, const VerifyOptions& options) {
    const auto& v = named(sys, "V");
    const auto& vc = named(sys, "V'");

    battery.run("v-character-order-3", "V = s^4+t^4+2i sqrt3 s^2t^2 is a semi-invariant with a character of order 3.",
                [&](json& w) {
                    w["character"] = to_json(v.character);
                    return v.character.order() == 3;
                });

    battery.run("quadratic-v",
                "In the square of the multiplet of V the spin-0 part vanishes and the spin-2 part is proportional to "
                "V', obtained from V by replacing i with -i.",
                [&](json& w) {
                    const auto comps = self_product(v, group, catalog, w);
                    const BinaryForm expected = S.pow(4) + T.pow(4) - (CycloNum(2) * imag_unit() * sqrt3()) * (S * S * T * T);
                    const auto c = proportional_at(comps, 2, expected);
                    if (c) w["k2_constant"] = to_json(*c);
                    return vc.form == expected && is_zero_at(comps, 4) && c && odd_components_zero(comps);
                });

    battery.run("cubic-v",
                "Among cubic products of the V multiplet, spins 1 and 2 vanish, spin 0 is a nonzero constant, and "
                "spins 3 and 4 are the invariants P and Q.",
                [&](json& w) {
                    const auto levels = iterate_pairing(v.form, 3, options.max_degree);
                    const SpinSpans& cubic = levels.at(2);
                    json ranks = json::object();
                    for (const auto& [d, basis] : cubic) {
                        ranks[std::to_string(d)] = basis.size();
                    }
                    w["ranks_by_degree"] = ranks;
                    const auto deg6 = multiplet_span_forms(cubic, 6);
                    const auto deg8 = multiplet_span_forms(cubic, 8);
                    const bool ok = !cubic.contains(4) && !cubic.contains(2) && cubic.contains(0) &&
                                    deg6.size() == 1 && form_in_span(deg6, sys.p.form) && deg8.size() == 1 &&
                                    form_in_span(deg8, sys.q.form) && cubic.contains(12);
                    return ok;
                });

    battery.run("cross-hessian-v", "The first transvectant of the Hessian of V with V is -4 st(s^4-t^4).",
                [&](json& w) {
                    const BinaryForm x = cross(hessian(v.form), v.form);
                    w["value"] = to_json(x);
                    return x == CycloNum(-4) * octahedral_vertex_form();
                });

    battery.run("invariant-degrees",
                "Invariant forms first occur in degree 6, then 8 and 12, matching the degrees of P, Q and R.",
                [&](json& w) {
                    json dims = json::array();
                    bool ok = true;
                    for (int d = 1; d <= 12; ++d) {
                        const long m = molien_dim(group, d);
                        dims.push_back({d, m});
                        if (d < 6) ok = ok && m == 0;
                    }
                    w["dims"] = dims;
                    return ok && molien_dim(group, 6) == 1 && molien_dim(group, 8) == 1 &&
                           molien_dim(group, 12) == 2 && sys.p.degree() == 6 && sys.q.degree() == 8 &&
                           sys.r->degree() == 12;
                });

    battery.run("projective-coordinates",
                "The multiplet of V gives five coordinates transforming by a character of order 3.", [&](json& w) {
                    const auto pc = projective_coords(sys);
                    w["components"] = pc.multiplet.dimension();
                    w["character_order"] = pc.seed.character.order();
                    return pc.multiplet.dimension() == 5 && pc.seed.character.order() == 3;
                });

    battery.run("cubic-blocks",
                "Every invariant form up to degree 36 is a highest weight reached by products of 3m copies of the V "
                "multiplet.",
                [&](json& w) {
                    const int top = std::min(36, options.max_degree);
                    // P^(d/6) needs d/2 copies; round up to a multiple of 3
                    const int copies = 3 * ((top / 2 + 2) / 3);
                    const auto levels = iterate_pairing(v.form, copies, top);
                    json rows = json::array();
                    bool ok = true;
                    for (int d = 1; d <= top; ++d) {
                        const long m = molien_dim(group, d);
                        if (m == 0) continue;
                        SpanBasis span(d + 1);
                        int reached_at = 0;
                        for (int p = 3; p <= copies; p += 3) {
                            for (const auto& f : multiplet_span_forms(levels.at(p - 1), d)) {
                                span.insert(f.coeffs());
                            }
                            if (reached_at == 0 && static_cast<long>(span.rank()) == m) reached_at = p;
                        }
                        rows.push_back({{"degree", d}, {"molien", m}, {"rank", span.rank()}, {"copies", reached_at}});
                        ok = ok && static_cast<long>(span.rank()) == m;
                    }
                    w["rows"] = rows;
                    return ok;
                });
}

void octahedral_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys,
                       const Catalog& catalog, const VerifyOptions& options) {
    const NamedForm& p = sys.p;

    battery.run("p-character-order-2", "P = st(s^4-t^4) is a semi-invariant with a character of order 2.",
                [&](json& w) {
                    w["character"] = to_json(p.character);
                    return p.character.order() == 2;
                });

    battery.run("quadratic-p",
                "The square of the multiplet of P splits into spins 6, 4, 2 and 0: P^2, the invariant Q, zero, and a "
                "nonzero constant.",
                [&](json& w) {
                    const auto comps = self_product(p, group, catalog, w);
                    return comps.at(0).classification == Classification::Descendant &&
                           proportional_at(comps, 0, p.form.pow(2)) &&
                           comps.at(2).classification == Classification::Descendant &&
                           proportional_at(comps, 2, sys.q.form) && is_zero_at(comps, 4) && constant_at(comps, 6) &&
                           odd_components_zero(comps);
                });

    battery.run("cubic-p", "Cubic products of the P multiplet reach the semi-invariant R of degree 12.", [&](json& w) {
        const auto levels = iterate_pairing(p.form, 3, options.max_degree);
        const auto deg12 = multiplet_span_forms(levels.at(2), 12);
        w["rank_degree_12"] = deg12.size();
        return form_in_span(deg12, sys.r->form);
    });

    battery.run("spin-9",
                "A spin-9 multiplet first appears with three copies of P, as a semi-invariant, and the invariant "
                "(Q,P^2)^1 first appears with four copies.",
                [&](json& w) {
                    const int copies = 4;
                    const auto levels = iterate_pairing(p.form, copies, std::max(18, options.max_degree));
                    int first_any = 0, first_invariant = 0;
                    const BinaryForm& g3 = named(sys, "(Q,P^2)^1").form;
                    for (int c = 1; c <= copies; ++c) {
                        const auto deg18 = multiplet_span_forms(levels.at(c - 1), 18);
                        if (!deg18.empty() && first_any == 0) first_any = c;
                        if (first_invariant == 0 && form_in_span(deg18, g3)) first_invariant = c;
                    }
                    w["degree"] = 18;
                    w["first_copies"] = first_any;
                    w["first_invariant_copies"] = first_invariant;
                    return first_any == 3 && first_invariant == 4 && molien_dim(group, 18) == 1;
                });

    battery.run("invariant-degrees", "The generating invariants have degrees 8, 12 and 18 and nothing lies below 8.",
                [&](json& w) {
                    json dims = json::array();
                    bool ok = true;
                    for (int d = 1; d <= 18; ++d) {
                        const long m = molien_dim(group, d);
                        dims.push_back({d, m});
                        if (d < 8) ok = ok && m == 0;
                    }
                    w["dims"] = dims;
                    return ok && sys.generators[0].degree() == 8 && sys.generators[1].degree() == 12 &&
                           sys.generators[2].degree() == 18;
                });

    battery.run("p-real", "The conjugate of P lies in the multiplet of P.", [&](json& w) {
        const bool inside = in_span(components_of(p.form), SphereFunction::from_form(p.form).conj());
        w["inside_own_multiplet"] = inside;
        return inside;
    });

    battery.run("projective-coordinates",
                "The multiplet of P gives seven coordinates transforming by a character of order 2.", [&](json& w) {
                    const auto pc = projective_coords(sys);
                    w["components"] = pc.multiplet.dimension();
                    w["character_order"] = pc.seed.character.order();
                    return pc.multiplet.dimension() == 7 && pc.seed.character.order() == 2;
                });
}

void icosahedral_claims(Battery& battery, const FiniteSubgroup& group, const InvariantSystem& sys,
                        const Catalog& catalog, const VerifyOptions& options) {
    const NamedForm& f = sys.p;

    battery.run("perfect-group",
                "Commutators generate the whole group, so every semi-invariant is an invariant.", [&](json& w) {
                    const auto& el = group.elements();
                    std::vector<GroupElement> commutators;
                    const std::size_t m = std::min<std::size_t>(el.size(), 8);
                    for (std::size_t i = 0; i < m; ++i) {
                        for (std::size_t j = 0; j < m; ++j) {
                            commutators.push_back(el[i] * el[j] * el[i].inverse() * el[j].inverse());
                        }
                    }
                    const auto sub = closure(commutators, group.order());
                    w["commutator_subgroup_order"] = sub.size();
                    return sub.size() == group.order();
                });

    battery.run("quadratic-f",
                "In the square of the multiplet of f, spin 10 is the Hessian H, spins 8, 4 and 2 vanish, spin 6 is a "
                "nonzero multiple of f and spin 0 is a nonzero constant.",
                [&](json& w) {
                    const auto comps = self_product(f, group, catalog, w);
                    const auto c6 = proportional_at(comps, 6, f.form);
                    if (c6) w["spin6_constant"] = to_json(*c6);
                    return proportional_at(comps, 2, sys.q.form) && is_zero_at(comps, 4) && is_zero_at(comps, 8) &&
                           is_zero_at(comps, 10) && c6 && constant_at(comps, 12) &&
                           proportional_at(comps, 0, f.form.pow(2)) && odd_components_zero(comps);
                });

    battery.run("cubic-spin-15",
                "Cubic products of the f multiplet contain a spin-15 part generated by the degree-30 invariant T.",
                [&](json& w) {
                    const auto levels = iterate_pairing(f.form, 3, std::max(30, options.max_degree));
                    const auto deg30 = multiplet_span_forms(levels.at(2), 30);
                    const Multiplet mf = multiplet_from_hw(f.form);
                    const BinaryForm h2 = transvectant(f.form, f.form, 2);
                    const auto comps =
                        decompose_product(multiplet_from_hw(h2), mf, group, catalog, true, "(f,f)^2 x f");
                    const auto& c = comps.at(1);
                    w["rank_degree_30"] = deg30.size();
                    w["component"] = brief(c);
                    return form_in_span(deg30, sys.r->form) && c.two_j() == 30 &&
                           c.classification == Classification::Descendant && proportional_at(comps, 1, sys.r->form);
                });

    battery.run("invariant-degrees",
                "Invariant forms of degrees 12, 20 and 30 are unique up to scale and none exist in positive degree "
                "below 12.",
                [&](json& w) {
                    bool ok = true;
                    for (int d = 1; d < 12; ++d) ok = ok && molien_dim(group, d) == 0;
                    const std::array<long, 3> dims{molien_dim(group, 12), molien_dim(group, 20),
                                                   molien_dim(group, 30)};
                    w["dims_12_20_30"] = dims;
                    w["none_below_12"] = ok;
                    return ok && dims == std::array<long, 3>{1, 1, 1};
                });

    battery.run("projective-coordinates",
                "The multiplet of f gives thirteen invariant coordinates.", [&](json& w) {
                    const auto pc = projective_coords(sys);
                    w["components"] = pc.multiplet.dimension();
                    w["character_order"] = pc.seed.character.order();
                    return pc.multiplet.dimension() == 13 && pc.seed.is_invariant();
                });
}

}  // namespace

std::vector<ClaimReport> verify_claims(const FiniteSubgroup& group, const VerifyOptions& options) {
    Battery battery(group.name());
    battery.run("group-certified", "The group has the expected order and every element is in SU(2).", [&](json& w) {
        w["order"] = group.order();
        w["expected_order"] = group.spec().expected_order();
        const bool unitary = std::all_of(group.elements().begin(), group.elements().end(), is_special_unitary);
        w["all_special_unitary"] = unitary;
        return unitary && group.order() == group.spec().expected_order();
    });

    std::optional<InvariantSystem> sys;
    battery.run("fundamental-forms",
                "The fundamental forms are certified semi-invariants with semi-invariant slots available.",
                [&](json& w) {
                    sys = fundamental(group);
                    json forms = json::array();
                    for (const auto& f : sys->all_forms()) {
                        forms.push_back({{"name", f.name},
                                         {"degree", f.degree()},
                                         {"character_order", f.character.order()},
                                         {"text", f.form.to_string()}});
                    }
                    w["forms"] = forms;
                    return true;
                });
    if (!sys) {
        return battery.take();
    }
    const Catalog catalog(*sys);

    switch (group.spec().family) {
        case GroupFamily::Cyclic:
            cyclic_claims(battery, group, *sys, catalog);
            break;
        case GroupFamily::BinaryDihedral:
            dihedral_claims(battery, group, *sys, catalog);
            break;
        case GroupFamily::BinaryTetrahedral:
            tetrahedral_claims(battery, group, *sys, catalog, options);
            break;
        case GroupFamily::BinaryOctahedral:
            octahedral_claims(battery, group, *sys, catalog, options);
            break;
        case GroupFamily::BinaryIcosahedral:
            icosahedral_claims(battery, group, *sys, catalog, options);
            break;
    }
    shared_claims(battery, group, *sys, catalog, options);
    return battery.take();
}

}  // namespace s3q

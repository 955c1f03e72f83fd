#include "s3q/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace s3q {

namespace {

constexpr int kConductor = CycloNum::kConductor;

std::vector<int> exponents_of(const Character& chi) {
    std::vector<int> out;
    out.reserve(chi.values.size());
    for (const auto& v : chi.values) {
        const auto k = root_of_unity_exponent(v);
        if (!k) {
            throw CertificationError("character value " + v.to_string() + " is not a root of unity");
        }
        out.push_back(*k);
    }
    return out;
}

// act(g, f) == chi(g) f for the generators; enough since chi is multiplicative.
bool transforms_by(const BinaryForm& f, const Character& chi, const FiniteSubgroup& group) {
    for (const auto& g : group.generators()) {
        const auto idx = group.index_of(g);
        if (!idx || act(g, f) != chi.values[*idx] * f) {
            return false;
        }
    }
    return true;
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw CertificationError(what);
    }
}

BinaryForm highest_weight(const Multiplet& m) {
    if (m.components.empty()) {
        throw std::invalid_argument("decompose_product: empty multiplet");
    }
    if (m.components[0].is_zero()) {
        return BinaryForm(m.two_j);
    }
    auto hw = m.components[0].as_form();
    if (!hw || hw->degree() != m.two_j) {
        throw std::invalid_argument("decompose_product: highest weight is not a form of degree 2j");
    }
    return *hw;
}

struct Factor {
    const BinaryForm* form;
    const Character* character;
    const Multiplet* multiplet;  // null skips the sphere check
};

// Number of multisets of p weights from {-two_j, -two_j + 2, ..., two_j}
// (doubled) with the given doubled sum.
long weight_count(int two_j, int p, int sum, int min_weight) {
    if (p == 0) {
        return sum == 0 ? 1 : 0;
    }
    long count = 0;
    for (int w = min_weight; w <= two_j; w += 2) {
        count += weight_count(two_j, p - 1, sum - w, w);
    }
    return count;
}

// self_copies > 1 when the product is that many copies of one multiplet of
// degree base_degree.
std::vector<SpinComponent> decompose(const Factor& a, const Factor& b, const FiniteSubgroup& group,
                                     const Catalog& catalog, const std::string& source, int self_copies,
                                     int base_degree) {
    const int d1 = a.form->degree();
    const int d2 = b.form->degree();
    const Character chi = *a.character * *b.character;
    std::vector<SpinComponent> out;
    for (int k = 0; k <= std::min(d1, d2); ++k) {
        SpinComponent c;
        c.source = source;
        c.two_j1 = d1;
        c.two_j2 = d2;
        c.k = k;
        c.highest_weight = transvectant(*a.form, *b.form, k);
        c.character = chi;
        c.symmetry_forced =
            self_copies > 1 && symmetric_power_multiplicity(base_degree, self_copies, c.two_j()) == 0;
        c.molien = molien_dim(group, c.two_j(), &chi);
        const BinaryForm& hw = c.highest_weight;
        if (hw.is_zero()) {
            c.classification = Classification::Zero;
        } else {
            require(!c.symmetry_forced, group.name() + ": " + source + " at k=" + std::to_string(k) +
                                            " is nonzero but absent from the symmetric power");
            require(c.molien > 0, group.name() + ": " + source + " at k=" + std::to_string(k) +
                                      " is nonzero in a slot with no semi-invariant");
            require(transforms_by(hw, chi, group),
                    group.name() + ": " + source + " at k=" + std::to_string(k) + " has the wrong character");
            if (hw.degree() == 0) {
                c.classification = Classification::NormalizationConstant;
                c.constant = hw.coeff(0);
            } else if (auto m = catalog.match(hw, chi)) {
                c.classification = Classification::Descendant;
                c.descendant_of = m->expression;
                c.constant = m->constant;
            }
        }
        if (a.multiplet != nullptr && b.multiplet != nullptr) {
            require(cg_highest(*a.multiplet, *b.multiplet, k) == SphereFunction::from_form(hw),
                    group.name() + ": sphere side disagrees with the transvectant for " + source + " at k=" +
                        std::to_string(k));
            c.sphere_checked = true;
        }
        out.push_back(std::move(c));
    }
    return out;
}

void insert_form(SpinSpans& spans, std::map<int, SpanBasis>& bases, const BinaryForm& f) {
    if (f.is_zero()) {
        return;
    }
    auto it = bases.try_emplace(f.degree(), f.degree() + 1).first;
    if (it->second.insert(f.coeffs())) {
        spans[f.degree()].push_back(f);
    }
}

std::string join_power(const std::string& name, int e) {
    if (e == 1) {
        return name;
    }
    const bool compound = name.find_first_of("^,()") != std::string::npos;
    return (compound ? "(" + name + ")" : name) + "^" + std::to_string(e);
}

}  // namespace

long symmetric_power_multiplicity(int two_j, int p, int two_J) {
    if (two_j < 0 || p < 0 || two_J < 0) {
        throw std::invalid_argument("symmetric_power_multiplicity: negative argument");
    }
    return weight_count(two_j, p, two_J, -two_j) - weight_count(two_j, p, two_J + 2, -two_j);
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Zero:
            return "zero";
        case Classification::Descendant:
            return "descendant";
        case Classification::NormalizationConstant:
            return "normalization-constant";
        case Classification::Unclassified:
            return "unclassified";
    }
    return "unknown";
}

Catalog::Catalog(std::vector<NamedForm> forms) : forms_(std::move(forms)) {
    for (const auto& f : forms_) {
        if (f.degree() <= 0) {
            throw std::invalid_argument("Catalog: form " + f.name + " has degree 0");
        }
        exponents_.push_back(exponents_of(f.character));
    }
}

const std::vector<Catalog::Monomial>& Catalog::monomials(int degree, const std::vector<int>& chi_exponents) const {
    const auto key = std::make_pair(degree, chi_exponents);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    std::vector<std::vector<int>> tuples;
    std::vector<int> e(forms_.size(), 0);
    auto walk = [&](auto&& self, std::size_t i, int rest) -> void {
        if (i == forms_.size()) {
            if (rest == 0) {
                tuples.push_back(e);
            }
            return;
        }
        for (int p = 0; p * forms_[i].degree() <= rest; ++p) {
            e[i] = p;
            self(self, i + 1, rest - p * forms_[i].degree());
        }
        e[i] = 0;
    };
    walk(walk, 0, degree);

    std::vector<Monomial> out;
    for (const auto& t : tuples) {
        bool match = true;
        for (std::size_t g = 0; g < chi_exponents.size() && match; ++g) {
            long sum = 0;
            for (std::size_t i = 0; i < forms_.size(); ++i) {
                sum += static_cast<long>(t[i]) * exponents_[i][g];
            }
            match = sum % kConductor == chi_exponents[g];
        }
        if (!match) {
            continue;
        }
        Monomial m{"", BinaryForm::constant(1)};
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            if (t[i] == 0) {
                continue;
            }
            m.form = m.form * forms_[i].form.pow(t[i]);
            m.name += (m.name.empty() ? "" : " ") + join_power(forms_[i].name, t[i]);
        }
        if (m.name.empty()) {
            m.name = "1";
        }
        out.push_back(std::move(m));
    }
    // fewest factors first, so single-form matches are preferred
    std::stable_sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        return std::count(x.name.begin(), x.name.end(), ' ') < std::count(y.name.begin(), y.name.end(), ' ');
    });
    return cache_.emplace(key, std::move(out)).first->second;
}

std::optional<Catalog::Match> Catalog::match(const BinaryForm& f, const Character& chi) const {
    if (f.is_zero()) {
        return std::nullopt;
    }
    const auto& mons = monomials(f.degree(), exponents_of(chi));
    for (const auto& m : mons) {
        if (auto c = proportionality(f, m.form); c && !c->is_zero()) {
            return Match{m.name, *c};
        }
    }
    SpanBasis span(f.degree() + 1);
    std::vector<const Monomial*> used;
    for (const auto& m : mons) {
        if (span.insert(m.form.coeffs())) {
            used.push_back(&m);
        }
    }
    const auto coords = span.coordinates(f.coeffs());
    if (!coords) {
        return std::nullopt;
    }
    std::string expr;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if ((*coords)[i].is_zero()) {
            continue;
        }
        expr += (expr.empty() ? "" : " + ") + std::string("(") + (*coords)[i].to_string() + ") " + used[i]->name;
    }
    return Match{expr, std::nullopt};
}

std::vector<SpinComponent> decompose_product(const Multiplet& m1, const Multiplet& m2, const FiniteSubgroup& group,
                                             const Catalog& catalog, bool sphere_check, const std::string& source) {
    const BinaryForm hw1 = highest_weight(m1);
    const BinaryForm hw2 = highest_weight(m2);
    if (hw1.is_zero() || hw2.is_zero()) {
        throw std::invalid_argument("decompose_product: zero highest weight");
    }
    const auto chi1 = character_of(hw1, group);
    const auto chi2 = character_of(hw2, group);
    if (!chi1 || !chi2) {
        throw std::invalid_argument("decompose_product: highest weight is not a semi-invariant of " + group.name());
    }
    const Factor a{&hw1, &*chi1, sphere_check ? &m1 : nullptr};
    const Factor b{&hw2, &*chi2, sphere_check ? &m2 : nullptr};
    const bool square = hw1.degree() == hw2.degree() && proportionality(hw2, hw1).has_value();
    return decompose(a, b, group, catalog, source, square ? 2 : 0, hw1.degree());
}

SpinSpans spans_of(const std::vector<BinaryForm>& forms) {
    SpinSpans spans;
    std::map<int, SpanBasis> bases;
    for (const auto& f : forms) {
        insert_form(spans, bases, f);
    }
    return spans;
}

SpinSpans pair_spans(const SpinSpans& left, const SpinSpans& right, int max_degree) {
    SpinSpans spans;
    std::map<int, SpanBasis> bases;
    for (const auto& [dl, fl] : left) {
        for (const auto& [dr, fr] : right) {
            for (int k = 0; k <= std::min(dl, dr); ++k) {
                if (dl + dr - 2 * k > max_degree) {
                    continue;
                }
                for (const auto& f : fl) {
                    for (const auto& g : fr) {
                        insert_form(spans, bases, transvectant(f, g, k));
                    }
                }
            }
        }
    }
    return spans;
}

std::vector<SpinSpans> iterate_pairing(const BinaryForm& seed, int copies, int max_degree) {
    if (copies < 1 || seed.is_zero()) {
        throw std::invalid_argument("iterate_pairing: need a nonzero seed and at least one copy");
    }
    const SpinSpans unit = spans_of({seed});
    std::vector<SpinSpans> levels{unit};
    for (int p = 2; p <= copies; ++p) {
        // later pairings lower the degree by at most deg(seed) each
        const int bound = max_degree + seed.degree() * (copies - p);
        levels.push_back(pair_spans(levels.back(), unit, bound));
    }
    for (auto& level : levels) {
        std::erase_if(level, [&](const auto& entry) { return entry.first > max_degree; });
    }
    return levels;
}

std::size_t RelationScan::relations() const {
    return std::count_if(components.begin(), components.end(),
                         [](const SpinComponent& c) { return c.classification == Classification::Zero; });
}

std::size_t RelationScan::descendants() const {
    return std::count_if(components.begin(), components.end(),
                         [](const SpinComponent& c) { return c.classification == Classification::Descendant; });
}

RelationScan relation_scan(const FiniteSubgroup& group, const std::vector<NamedForm>& seeds, int max_degree,
                           const Catalog& catalog) {
    if (max_degree > 60) {
        throw std::invalid_argument("relation_scan: max_degree is limited to 60");
    }
    std::vector<Multiplet> multiplets;
    for (const auto& s : seeds) {
        require(transforms_by(s.form, s.character, group), group.name() + ": seed " + s.name + " is not certified");
        multiplets.push_back(multiplet_from_hw(s.form));
    }
    RelationScan scan;
    const std::size_t n = seeds.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const int pair_degree = seeds[i].degree() + seeds[j].degree();
            if (pair_degree > max_degree) {
                continue;
            }
            const std::string pair = seeds[i].name + " x " + seeds[j].name;
            const Factor a{&seeds[i].form, &seeds[i].character, &multiplets[i]};
            const Factor b{&seeds[j].form, &seeds[j].character, &multiplets[j]};
            const auto binary = decompose(a, b, group, catalog, pair, i == j ? 2 : 0, seeds[i].degree());
            scan.components.insert(scan.components.end(), binary.begin(), binary.end());

            for (const auto& c : binary) {
                if (c.highest_weight.is_zero() || c.two_j() == 0) {
                    continue;
                }
                const Multiplet inner = multiplet_from_hw(c.highest_weight);
                const Factor left{&c.highest_weight, &c.character, &inner};
                const std::string inner_name =
                    "(" + seeds[i].name + "," + seeds[j].name + ")^" + std::to_string(c.k);
                for (std::size_t l = 0; l < n; ++l) {
                    if (pair_degree + seeds[l].degree() > max_degree) {
                        continue;
                    }
                    const Factor right{&seeds[l].form, &seeds[l].character, &multiplets[l]};
                    const auto ternary = decompose(left, right, group, catalog, inner_name + " x " + seeds[l].name,
                                                   i == j && j == l ? 3 : 0, seeds[i].degree());
                    scan.components.insert(scan.components.end(), ternary.begin(), ternary.end());
                }
            }
        }
    }
    return scan;
}

ProjectiveCoordinates projective_coords(const InvariantSystem& sys) {
    const auto family = sys.group.spec().family;
    const NamedForm* seed = nullptr;
    if (family == GroupFamily::BinaryTetrahedral) {
        for (const auto& f : sys.semi_invariants) {
            if (f.name == "V") {
                seed = &f;
            }
        }
    } else if (family == GroupFamily::BinaryOctahedral || family == GroupFamily::BinaryIcosahedral) {
        seed = &sys.p;
    }
    if (seed == nullptr) {
        throw std::invalid_argument("projective_coords: no projective coordinates for " + sys.group.name());
    }
    return {*seed, multiplet_from_hw(seed->form)};
}

bool in_span(const std::vector<SphereFunction>& basis, const SphereFunction& target) {
    std::set<SphereExp> support;
    for (const auto& f : basis) {
        for (const auto& [e, c] : f.terms()) {
            support.insert(e);
        }
    }
    for (const auto& [e, c] : target.terms()) {
        if (!support.contains(e)) {
            return false;
        }
    }
    const std::vector<SphereExp> index(support.begin(), support.end());
    auto vec = [&](const SphereFunction& f) {
        CycloVector v;
        v.reserve(index.size());
        for (const auto& e : index) {
            v.push_back(f.coeff(e));
        }
        return v;
    };
    SpanBasis span(index.size());
    for (const auto& f : basis) {
        span.insert(vec(f));
    }
    return span.contains(vec(target));
}

}  // namespace s3q

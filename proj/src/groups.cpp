#include "s3q/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace s3q {

std::string GroupSpec::name() const {
    switch (family) {
        case GroupFamily::Cyclic: return "cyclic-" + std::to_string(n);
        case GroupFamily::BinaryDihedral: return "binary-dihedral-" + std::to_string(n);
        case GroupFamily::BinaryTetrahedral: return "binary-tetrahedral";
        case GroupFamily::BinaryOctahedral: return "binary-octahedral";
        case GroupFamily::BinaryIcosahedral: return "binary-icosahedral";
    }
    return "?";
}

std::size_t GroupSpec::expected_order() const {
    switch (family) {
        case GroupFamily::Cyclic: return static_cast<std::size_t>(n);
        case GroupFamily::BinaryDihedral: return static_cast<std::size_t>(4 * n);
        case GroupFamily::BinaryTetrahedral: return 24;
        case GroupFamily::BinaryOctahedral: return 48;
        case GroupFamily::BinaryIcosahedral: return 120;
    }
    return 0;
}

bool GroupSpec::is_polyhedral() const {
    return family == GroupFamily::BinaryTetrahedral || family == GroupFamily::BinaryOctahedral ||
           family == GroupFamily::BinaryIcosahedral;
}

GroupSpec parse_group(const std::string& family, std::optional<int> n) {
    auto need_n = [&](GroupFamily f) {
        if (!n) {
            throw std::invalid_argument("group '" + family + "' needs --n");
        }
        return GroupSpec{f, *n};
    };
    if (family == "cyclic") return need_n(GroupFamily::Cyclic);
    if (family == "binary-dihedral") return need_n(GroupFamily::BinaryDihedral);
    if (family == "binary-tetrahedral") return {GroupFamily::BinaryTetrahedral, 0};
    if (family == "binary-octahedral") return {GroupFamily::BinaryOctahedral, 0};
    if (family == "binary-icosahedral") return {GroupFamily::BinaryIcosahedral, 0};
    throw std::invalid_argument("unknown group '" + family + "'");
}

FiniteSubgroup::FiniteSubgroup(GroupSpec spec, std::vector<GroupElement> generators,
                               std::vector<GroupElement> elements)
    : spec_(spec), generators_(std::move(generators)), elements_(std::move(elements)) {}

std::optional<std::size_t> FiniteSubgroup::index_of(const GroupElement& g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == g) {
            return i;
        }
    }
    return std::nullopt;
}

bool FiniteSubgroup::contains_minus_identity() const { return contains(Mat2::diagonal(-1, -1)); }

std::size_t FiniteSubgroup::center_size() const {
    return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(), [&](const GroupElement& z) {
        return std::all_of(generators_.begin(), generators_.end(),
                           [&](const GroupElement& g) { return z * g == g * z; });
    }));
}

bool is_special_unitary(const GroupElement& g) { return g.det().is_one() && (g.adjoint() * g).is_identity(); }

std::vector<GroupElement> closure(const std::vector<GroupElement>& generators, std::size_t bound) {
    if (bound < 1) {
        throw std::invalid_argument("closure: bound must be positive");
    }
    std::vector<GroupElement> elements{Mat2::identity()};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const GroupElement x = elements[queue.front()];
        queue.pop_front();
        for (const auto& g : generators) {
            GroupElement y = x * g;
            if (std::find(elements.begin(), elements.end(), y) != elements.end()) {
                continue;
            }
            if (elements.size() == bound) {
                throw CertificationError("closure: more than " + std::to_string(bound) + " elements");
            }
            elements.push_back(std::move(y));
            queue.push_back(elements.size() - 1);
        }
    }
    return elements;
}

namespace {

std::vector<GroupElement> tetrahedral_generators() {
    const CycloNum i = imag_unit();
    const CycloNum half(mpq_class(1, 2));
    return {
        Mat2::diagonal(i, -i),
        Mat2{0, 1, -1, 0},
        half * Mat2{1 + i, -1 + i, 1 + i, 1 - i},
    };
}

std::vector<GroupElement> generators_for(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::Cyclic:
            if (spec.n < 1 || CycloNum::kConductor % spec.n != 0) {
                throw std::invalid_argument("cyclic group order " + std::to_string(spec.n) +
                                            " must divide 120");
            }
            return {Mat2::diagonal(root_of_unity(spec.n, 1), root_of_unity(spec.n, -1))};
        case GroupFamily::BinaryDihedral:
            if (spec.n < 1 || CycloNum::kConductor % (2 * spec.n) != 0) {
                throw std::invalid_argument("binary dihedral parameter " + std::to_string(spec.n) +
                                            ": 2n must divide 120");
            }
            return {Mat2::diagonal(root_of_unity(2 * spec.n, 1), root_of_unity(2 * spec.n, -1)), Mat2{0, 1, -1, 0}};
        case GroupFamily::BinaryTetrahedral:
            return tetrahedral_generators();
        case GroupFamily::BinaryOctahedral: {
            auto gens = tetrahedral_generators();
            gens.push_back(Mat2::diagonal(root_of_unity(8, 1), root_of_unity(8, -1)));
            return gens;
        }
        case GroupFamily::BinaryIcosahedral: {
            const CycloNum e = root_of_unity(5, 1);
            const CycloNum e2 = e * e;
            const CycloNum e3 = e2 * e;
            const CycloNum e4 = e3 * e;
            const CycloNum k = sqrt5().inv();
            return {
                Mat2::diagonal(e3, e2),
                k * Mat2{-(e - e4), e2 - e3, e2 - e3, e - e4},
            };
        }
    }
    return {};
}

}  // namespace

FiniteSubgroup build(const GroupSpec& spec) {
    auto gens = generators_for(spec);
    for (const auto& g : gens) {
        if (!is_special_unitary(g)) {
            throw CertificationError(spec.name() + ": generator " + g.to_string() + " is not in SU(2)");
        }
    }
    auto elements = closure(gens, spec.expected_order());
    if (elements.size() != spec.expected_order()) {
        throw CertificationError(spec.name() + ": closure has " + std::to_string(elements.size()) +
                                 " elements, expected " + std::to_string(spec.expected_order()));
    }
    for (const auto& g : elements) {
        if (!is_special_unitary(g)) {
            throw CertificationError(spec.name() + ": element " + g.to_string() + " is not in SU(2)");
        }
    }
    return FiniteSubgroup(spec, std::move(gens), std::move(elements));
}

// ---------------------------------------------------------------------------

Character Character::trivial(std::size_t order) { return Character{std::vector<CycloNum>(order, CycloNum(1))}; }

bool Character::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const CycloNum& v) { return v.is_one(); });
}

int Character::order() const {
    int ord = 1;
    for (const auto& v : values) {
        const auto o = root_of_unity_order(v);
        if (!o) {
            throw CertificationError("character value " + v.to_string() + " is not a root of unity");
        }
        ord = std::lcm(ord, *o);
    }
    return ord;
}

Character Character::conj() const {
    Character out = *this;
    for (auto& v : out.values) {
        v = v.conj();
    }
    return out;
}

Character Character::pow(int e) const {
    Character out = *this;
    for (auto& v : out.values) {
        v = v.pow(e);
    }
    return out;
}

Character operator*(const Character& a, const Character& b) {
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("Character: size mismatch");
    }
    Character out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] *= b.values[i];
    }
    return out;
}

std::optional<Character> character_of(const BinaryForm& f, const FiniteSubgroup& group) {
    if (f.is_zero()) {
        throw std::invalid_argument("character_of: zero form");
    }
    int a = 0;
    while (f.coeff(a).is_zero()) {
        ++a;
    }
    const CycloNum lead_inv = f.coeff(a).inv();
    Character chi;
    chi.values.reserve(group.order());
    for (const auto& g : group.elements()) {
        const BinaryForm image = act(g, f);
        CycloNum ratio = image.coeff(a) * lead_inv;
        if (ratio * f != image) {
            return std::nullopt;
        }
        if (!root_of_unity_order(ratio)) {
            throw CertificationError("character_of: value " + ratio.to_string() + " is not a root of unity");
        }
        chi.values.push_back(std::move(ratio));
    }
    return chi;
}

bool is_invariant(const BinaryForm& f, const FiniteSubgroup& group) {
    const auto chi = character_of(f, group);
    return chi && chi->is_trivial();
}

long molien_dim(const FiniteSubgroup& group, int degree, const Character* chi) {
    if (degree < 0) {
        return 0;
    }
    if (chi != nullptr && chi->values.size() != group.order()) {
        throw std::invalid_argument("molien_dim: character does not match the group");
    }
    // lambda + lambda^-1 for each 120th root of unity lambda = z^k, k <= 60
    static const std::vector<CycloNum> traces = [] {
        std::vector<CycloNum> t;
        for (int k = 0; k <= CycloNum::kConductor / 2; ++k) {
            t.push_back(CycloNum::zeta(k) + CycloNum::zeta(-k));
        }
        return t;
    }();
    CycloNum total;
    for (std::size_t gi = 0; gi < group.order(); ++gi) {
        const CycloNum tr = group.elements()[gi].trace();
        const auto it = std::find(traces.begin(), traces.end(), tr);
        if (it == traces.end()) {
            throw CertificationError("molien_dim: eigenvalue of element is not a 120th root of unity");
        }
        const long k = it - traces.begin();
        // chi_d(lambda) = sum_{a=0}^{d} lambda^(d-2a)
        std::vector<mpq_class> counts(CycloNum::kConductor, mpq_class(0));
        for (long a = 0; a <= degree; ++a) {
            long e = (k * (degree - 2 * a)) % CycloNum::kConductor;
            if (e < 0) {
                e += CycloNum::kConductor;
            }
            counts[e] += 1;
        }
        CycloNum trace_d = CycloNum::from_coords(counts);
        if (chi != nullptr) {
            trace_d *= chi->values[gi].conj();
        }
        total += trace_d;
    }
    total *= CycloNum(mpq_class(1, static_cast<long>(group.order())));
    const auto q = total.rational();
    if (!q || q->get_den() != 1 || *q < 0) {
        throw CertificationError("molien_dim: average " + total.to_string() + " is not a non-negative integer");
    }
    return q->get_num().get_si();
}

long fixed_space_dim(const FiniteSubgroup& group, int degree, const Character* chi) {
    if (degree < 0) {
        return 0;
    }
    // Character values on the generators.
    std::vector<CycloNum> target;
    for (const auto& g : group.generators()) {
        if (chi == nullptr) {
            target.emplace_back(1);
            continue;
        }
        const auto idx = group.index_of(g);
        if (!idx) {
            throw CertificationError("fixed_space_dim: generator missing from element list");
        }
        target.push_back(chi->values[*idx]);
    }
    // Diagonal generators scale monomials and prune the candidate basis.
    std::vector<int> allowed;
    for (int a = 0; a <= degree; ++a) {
        bool ok = true;
        for (std::size_t i = 0; i < group.generators().size() && ok; ++i) {
            const GroupElement& g = group.generators()[i];
            if (!g.b.is_zero() || !g.c.is_zero()) {
                continue;
            }
            const BinaryForm m = BinaryForm::monomial(a, degree - a);
            ok = act(g, m) == target[i] * m;
        }
        if (ok) {
            allowed.push_back(a);
        }
    }
    if (allowed.empty()) {
        return 0;
    }
    std::vector<std::size_t> general;
    for (std::size_t i = 0; i < group.generators().size(); ++i) {
        const GroupElement& g = group.generators()[i];
        if (!g.b.is_zero() || !g.c.is_zero()) {
            general.push_back(i);
        }
    }
    if (general.empty()) {
        return static_cast<long>(allowed.size());
    }
    CycloMatrix m(general.size() * static_cast<std::size_t>(degree + 1), allowed.size());
    for (std::size_t col = 0; col < allowed.size(); ++col) {
        const BinaryForm mono = BinaryForm::monomial(allowed[col], degree - allowed[col]);
        for (std::size_t gi = 0; gi < general.size(); ++gi) {
            const std::size_t i = general[gi];
            const BinaryForm diff = act(group.generators()[i], mono) - target[i] * mono;
            for (int a = 0; a <= degree; ++a) {
                m(gi * static_cast<std::size_t>(degree + 1) + static_cast<std::size_t>(a), col) = diff.coeff(a);
            }
        }
    }
    return static_cast<long>(m.nullspace().size());
}

}  // namespace s3q

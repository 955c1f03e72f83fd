#include "s3q/invariants.hpp"

namespace s3q {

namespace {

const BinaryForm S = BinaryForm::s();
const BinaryForm T = BinaryForm::t();

CycloVector coefficient_vector(const BinaryForm& f) { return f.coeffs(); }

// Powers g^0 .. g^e, built on demand.
class PowerCache {
  public:
    explicit PowerCache(const BinaryForm& base) : powers_{BinaryForm::constant(1), base} {}

    const BinaryForm& get(int e) {
        while (static_cast<int>(powers_.size()) <= e) {
            powers_.push_back(powers_.back() * powers_[1]);
        }
        return powers_[e];
    }

  private:
    std::vector<BinaryForm> powers_;
};

BinaryForm monomial(std::array<PowerCache, 3>& cache, const std::array<int, 3>& e) {
    return cache[0].get(e[0]) * cache[1].get(e[1]) * cache[2].get(e[2]);
}

std::array<PowerCache, 3> caches(const std::array<NamedForm, 3>& g) {
    return {PowerCache(g[0].form), PowerCache(g[1].form), PowerCache(g[2].form)};
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw CertificationError(what);
    }
}

void require_available(const NamedForm& f, const FiniteSubgroup& group) {
    const long dim = molien_dim(group, f.degree(), &f.character);
    require(dim >= 1, group.name() + ": no semi-invariant slot for " + f.name + " at degree " +
                          std::to_string(f.degree()));
}

std::string power_name(const std::string& base, int n) { return base + "^" + std::to_string(n); }

}  // namespace

BinaryForm klein_icosahedral_form() {
    return S * T * (S.pow(10) + CycloNum(11) * (S.pow(5) * T.pow(5)) - T.pow(10));
}

BinaryForm tetrahedral_vertex_form() {
    return S.pow(4) + T.pow(4) + (CycloNum(2) * imag_unit() * sqrt3()) * (S * S * T * T);
}

BinaryForm octahedral_vertex_form() { return S * T * (S.pow(4) - T.pow(4)); }

NamedForm certify(const std::string& name, const BinaryForm& form, const FiniteSubgroup& group) {
    require(!form.is_zero(), group.name() + ": " + name + " is the zero form");
    auto chi = character_of(form, group);
    require(chi.has_value(), group.name() + ": " + name + " is not a semi-invariant");
    return NamedForm{name, form, std::move(*chi)};
}

std::vector<NamedForm> InvariantSystem::all_forms() const {
    std::vector<NamedForm> out;
    auto add = [&](const NamedForm& f) {
        if (f.degree() == 0) {
            return;
        }
        for (const auto& g : out) {
            if (g.name == f.name) {
                return;
            }
        }
        out.push_back(f);
    };
    add(p);
    if (!hessian_constant) {
        add(q);
    }
    if (r) add(*r);
    if (extra) add(*extra);
    for (const auto& f : semi_invariants) add(f);
    for (const auto& f : generators) add(f);
    return out;
}

std::vector<std::array<int, 3>> monomial_exponents(const std::array<int, 3>& degrees, int degree) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a * degrees[0] <= degree; ++a) {
        for (int b = 0; a * degrees[0] + b * degrees[1] <= degree; ++b) {
            const int rest = degree - a * degrees[0] - b * degrees[1];
            if (rest % degrees[2] == 0) {
                out.push_back({a, b, rest / degrees[2]});
            }
        }
    }
    return out;
}

Syzygy syzygy(const InvariantSystem& sys) {
    if (sys.exceptional()) {
        throw std::invalid_argument("syzygy: " + sys.group.name() + " has no three-generator relation");
    }
    const auto& g = sys.generators;
    Syzygy rel;
    rel.names = {g[0].name, g[1].name, g[2].name};
    rel.degree = 2 * g[2].degree();
    rel.exponents = monomial_exponents({g[0].degree(), g[1].degree(), g[2].degree()}, rel.degree);

    auto cache = caches(g);
    CycloMatrix m(rel.degree + 1, rel.exponents.size());
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        const BinaryForm f = monomial(cache, rel.exponents[j]);
        for (int a = 0; a <= rel.degree; ++a) {
            m(a, j) = f.coeff(a);
        }
    }
    const auto kernel = m.nullspace();
    require(kernel.size() == 1, sys.group.name() + ": syzygy kernel has dimension " + std::to_string(kernel.size()));

    std::size_t lead = rel.exponents.size();
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        if (rel.exponents[j] == std::array<int, 3>{0, 0, 2}) {
            lead = j;
        }
    }
    require(lead < rel.exponents.size() && !kernel[0][lead].is_zero(),
            sys.group.name() + ": syzygy does not involve " + g[2].name + "^2");
    const CycloNum scale = kernel[0][lead].inv();
    for (const auto& c : kernel[0]) {
        rel.coeffs.push_back(c * scale);
    }
    return rel;
}

BinaryForm evaluate(const Syzygy& rel, const std::array<NamedForm, 3>& generators) {
    auto cache = caches(generators);
    BinaryForm sum(rel.degree);
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        sum += rel.coeffs[j] * monomial(cache, rel.exponents[j]);
    }
    return sum;
}

std::vector<GenerationRow> generation_check(const InvariantSystem& sys, int max_degree) {
    const auto& g = sys.generators;
    const std::array<int, 3> degrees{g[0].degree(), g[1].degree(), g[2].degree()};
    auto cache = caches(g);
    std::vector<GenerationRow> rows;
    for (int d = 0; d <= max_degree; ++d) {
        SpanBasis span(d + 1);
        long rank = 0;
        for (const auto& e : monomial_exponents(degrees, d)) {
            if (span.insert(coefficient_vector(monomial(cache, e)))) {
                ++rank;
            }
        }
        rows.push_back({d, rank, molien_dim(sys.group, d)});
    }
    return rows;
}

InvariantSystem fundamental(const FiniteSubgroup& group) {
    const GroupSpec& spec = group.spec();
    const int n = spec.n;
    auto make = [&](NamedForm p, NamedForm q) {
        return InvariantSystem{group, std::move(p), std::move(q), std::nullopt, std::nullopt, {}, {}, std::nullopt,
                               std::nullopt};
    };

    auto finish = [&](InvariantSystem sys) {
        for (const auto& f : sys.all_forms()) {
            require_available(f, group);
        }
        for (const auto& g : sys.generators) {
            require(g.is_invariant(), group.name() + ": generator " + g.name + " is not invariant");
        }
        if (!sys.exceptional()) {
            require(sys.q.degree() == 2 * sys.p.degree() - 4, group.name() + ": unexpected degree of Q");
            require(sys.r && sys.r->degree() == sys.p.degree() + sys.q.degree() - 2,
                    group.name() + ": unexpected degree of R");
            sys.syzygy = syzygy(sys);
            require(evaluate(*sys.syzygy, sys.generators).is_zero(), group.name() + ": syzygy does not vanish");
        }
        return sys;
    };

    switch (spec.family) {
        case GroupFamily::Cyclic: {
            const NamedForm p = certify("P", S * T, group);
            const BinaryForm h = hessian(p.form);
            InvariantSystem sys = make(p, certify("Q", h, group));
            sys.hessian_constant = h.coeff(0);
            sys.extra = certify(power_name("s", n) + "+" + power_name("t", n), S.pow(n) + T.pow(n), group);
            const NamedForm third = certify("(P,extra)^1", cross(p.form, sys.extra->form), group);
            sys.generators = {p, *sys.extra, third};
            return finish(std::move(sys));
        }
        case GroupFamily::BinaryDihedral: {
            const NamedForm p = certify("P", S * S * T * T, group);
            const BinaryForm h = hessian(p.form);
            const auto c = proportionality(h, p.form);
            require(c.has_value(), group.name() + ": hessian of P is not proportional to P");
            InvariantSystem sys = make(p, certify("Q", h, group));
            sys.hessian_constant = *c;
            sys.extra = certify(power_name("s", 2 * n) + "+" + power_name("t", 2 * n), S.pow(2 * n) + T.pow(2 * n),
                                group);
            const NamedForm third = certify("(P,extra)^1", cross(p.form, sys.extra->form), group);
            sys.generators = {p, *sys.extra, third};
            sys.semi_invariants.push_back(certify("st", S * T, group));
            // s^n and t^n are swapped up to a fourth root of unity, so the
            // sum and difference are the semi-invariants of degree n.
            const bool even = n % 2 == 0;
            const CycloNum unit = even ? CycloNum(1) : imag_unit();
            const std::string t_name = (even ? "" : "i*") + power_name("t", n);
            sys.semi_invariants.push_back(certify(power_name("s", n) + "+" + t_name, S.pow(n) + unit * T.pow(n), group));
            sys.semi_invariants.push_back(certify(power_name("s", n) + "-" + t_name, S.pow(n) - unit * T.pow(n), group));
            return finish(std::move(sys));
        }
        case GroupFamily::BinaryTetrahedral: {
            const NamedForm p = certify("P", octahedral_vertex_form(), group);
            InvariantSystem sys = make(p, certify("Q", hessian(p.form), group));
            sys.r = certify("R", cross(p.form, sys.q.form), group);
            const NamedForm v = certify("V", tetrahedral_vertex_form(), group);
            sys.semi_invariants = {v, certify("V'", v.form.conj_coeffs(), group)};
            sys.generators = {p, sys.q, *sys.r};
            return finish(std::move(sys));
        }
        case GroupFamily::BinaryOctahedral: {
            const NamedForm p = certify("P", octahedral_vertex_form(), group);
            InvariantSystem sys = make(p, certify("Q", hessian(p.form), group));
            sys.r = certify("R", cross(p.form, sys.q.form), group);
            sys.semi_invariants = {p, *sys.r};
            const NamedForm p2 = certify("P^2", transvectant(p.form, p.form, 0), group);
            sys.generators = {sys.q, p2, certify("(Q,P^2)^1", cross(sys.q.form, p2.form), group)};
            return finish(std::move(sys));
        }
        case GroupFamily::BinaryIcosahedral: {
            const NamedForm p = certify("f", klein_icosahedral_form(), group);
            InvariantSystem sys = make(p, certify("H", hessian(p.form), group));
            sys.r = certify("T", cross(p.form, sys.q.form), group);
            sys.generators = {p, sys.q, *sys.r};
            return finish(std::move(sys));
        }
    }
    throw std::logic_error("fundamental: unknown group family");
}

}  // namespace s3q

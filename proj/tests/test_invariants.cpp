#include "doctest.h"

#include <deque>
#include <set>

#include "s3q/invariants.hpp"
#include "test_util.hpp"

using namespace s3q;

namespace {

const BinaryForm S = BinaryForm::s();
const BinaryForm T = BinaryForm::t();

const InvariantSystem& system_of(GroupFamily f, int n = 0) {
    static std::deque<std::pair<GroupSpec, InvariantSystem>> cache;
    const GroupSpec spec{f, n};
    for (const auto& [k, sys] : cache) {
        if (k == spec) {
            return sys;
        }
    }
    cache.emplace_back(spec, fundamental(build(spec)));
    return cache.back().second;
}

CycloNum q(long num, long den = 1) { return CycloNum(mpq_class(num, den)); }

// Coefficient of the monomial with the given exponents in a syzygy.
CycloNum coeff_of(const Syzygy& rel, std::array<int, 3> e) {
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        if (rel.exponents[j] == e) {
            return rel.coeffs[j];
        }
    }
    FAIL("monomial not present");
    return {};
}

std::vector<std::pair<GroupFamily, int>> all_groups() {
    std::vector<std::pair<GroupFamily, int>> out;
    for (int n = 1; n <= 6; ++n) {
        out.emplace_back(GroupFamily::Cyclic, n);
        out.emplace_back(GroupFamily::BinaryDihedral, n);
    }
    out.emplace_back(GroupFamily::BinaryTetrahedral, 0);
    out.emplace_back(GroupFamily::BinaryOctahedral, 0);
    out.emplace_back(GroupFamily::BinaryIcosahedral, 0);
    return out;
}

}  // namespace

TEST_CASE("named forms") {
    CHECK(klein_icosahedral_form() == S.pow(11) * T + CycloNum(11) * S.pow(6) * T.pow(6) - S * T.pow(11));
    CHECK(octahedral_vertex_form() == S.pow(5) * T - S * T.pow(5));
    CHECK(tetrahedral_vertex_form().coeff(2) == CycloNum(2) * imag_unit() * sqrt3());
}

TEST_CASE("monomial_exponents") {
    const auto e = monomial_exponents({6, 8, 12}, 24);
    const std::vector<std::array<int, 3>> expected = {{0, 0, 2}, {0, 3, 0}, {2, 0, 1}, {4, 0, 0}};
    CHECK(e == expected);
    CHECK(monomial_exponents({12, 20, 30}, 10).empty());
}

TEST_CASE("certify") {
    const FiniteSubgroup g = build({GroupFamily::BinaryTetrahedral, 0});
    CHECK_THROWS_AS(certify("s", S, g), CertificationError);
    CHECK_THROWS_AS(certify("zero", BinaryForm(4), g), CertificationError);
    const NamedForm v = certify("V", tetrahedral_vertex_form(), g);
    CHECK(v.character.order() == 3);
    CHECK_FALSE(v.is_invariant());
}

TEST_CASE("cyclic systems") {
    for (int n = 1; n <= 8; ++n) {
        if (120 % n != 0) continue;
        const InvariantSystem sys = fundamental(build({GroupFamily::Cyclic, n}));
        CHECK(sys.exceptional());
        CHECK(sys.p.form == S * T);
        CHECK(sys.extra->form == S.pow(n) + T.pow(n));
        CHECK(*sys.hessian_constant == q(-1, 2));
        CHECK(sys.q.form == BinaryForm::constant(q(-1, 2)));
        CHECK(sys.generators[2].form == q(-1, 2) * (S.pow(n) - T.pow(n)));
        CHECK_THROWS_AS(syzygy(sys), std::invalid_argument);
    }
}

TEST_CASE("dihedral systems") {
    for (int n = 1; n <= 6; ++n) {
        const InvariantSystem& sys = system_of(GroupFamily::BinaryDihedral, n);
        CHECK(sys.p.form == S * S * T * T);
        CHECK(*sys.hessian_constant == q(-1, 6));
        CHECK(sys.extra->form == S.pow(2 * n) + T.pow(2 * n));
        CHECK(sys.extra->is_invariant());
        REQUIRE(sys.semi_invariants.size() == 3);
        for (const auto& f : sys.semi_invariants) {
            CHECK_FALSE(f.is_invariant());
        }
        const CycloNum unit = n % 2 == 0 ? CycloNum(1) : imag_unit();
        CHECK(sys.semi_invariants[1].form == S.pow(n) + unit * T.pow(n));
        CHECK(sys.semi_invariants[2].form == S.pow(n) - unit * T.pow(n));
    }
}

TEST_CASE("polyhedral systems") {
    const auto& tet = system_of(GroupFamily::BinaryTetrahedral);
    CHECK(tet.p.form == octahedral_vertex_form());
    CHECK(tet.generators[0].degree() == 6);
    CHECK(tet.generators[1].degree() == 8);
    CHECK(tet.generators[2].degree() == 12);
    CHECK(tet.semi_invariants[1].form == tet.semi_invariants[0].form.conj_coeffs());

    const auto& oct = system_of(GroupFamily::BinaryOctahedral);
    CHECK(oct.p.character.order() == 2);
    CHECK(oct.r->character.order() == 2);
    CHECK(oct.generators[0].degree() == 8);
    CHECK(oct.generators[1].degree() == 12);
    CHECK(oct.generators[2].degree() == 18);

    const auto& ico = system_of(GroupFamily::BinaryIcosahedral);
    CHECK(ico.p.form == klein_icosahedral_form());
    CHECK(ico.q.degree() == 20);
    CHECK(ico.r->degree() == 30);
    CHECK(ico.semi_invariants.empty());
}

TEST_CASE("frozen syzygies") {
    // coefficients normalized so that the top generator squared has coefficient 1
    const auto& tet = *system_of(GroupFamily::BinaryTetrahedral).syzygy;
    CHECK(tet.degree == 24);
    CHECK(coeff_of(tet, {0, 0, 2}) == q(1));
    CHECK(coeff_of(tet, {0, 3, 0}) == q(1, 2));
    CHECK(coeff_of(tet, {2, 0, 1}).is_zero());
    CHECK(coeff_of(tet, {4, 0, 0}) == q(1, 108));

    const auto& oct = *system_of(GroupFamily::BinaryOctahedral).syzygy;
    CHECK(oct.degree == 36);
    CHECK(coeff_of(oct, {0, 0, 2}) == q(1));
    CHECK(coeff_of(oct, {0, 3, 0}) == q(1, 108));
    CHECK(coeff_of(oct, {3, 1, 0}) == q(1, 2));

    const auto& ico = *system_of(GroupFamily::BinaryIcosahedral).syzygy;
    CHECK(ico.degree == 60);
    CHECK(coeff_of(ico, {0, 0, 2}) == q(1));
    CHECK(coeff_of(ico, {0, 3, 0}) == q(1, 2));
    CHECK(coeff_of(ico, {5, 0, 0}) == q(-1, 432));
    std::size_t nonzero = 0;
    for (const auto& c : ico.coeffs) {
        nonzero += c.is_zero() ? 0 : 1;
    }
    CHECK(nonzero == 3);
}

TEST_CASE("syzygy evaluates to zero and perturbations do not") {
    for (auto family : {GroupFamily::BinaryTetrahedral, GroupFamily::BinaryOctahedral}) {
        const auto& sys = system_of(family);
        Syzygy rel = *sys.syzygy;
        CHECK(evaluate(rel, sys.generators).is_zero());
        for (std::size_t j = 0; j < rel.coeffs.size(); ++j) {
            Syzygy bumped = rel;
            bumped.coeffs[j] += CycloNum(1);
            CHECK_FALSE(evaluate(bumped, sys.generators).is_zero());
        }
    }
}

TEST_CASE("every named form carries its own character") {
    for (const auto& [family, n] : all_groups()) {
        const auto& sys = system_of(family, n);
        std::set<std::string> names;
        for (const auto& f : sys.all_forms()) {
            CHECK(f.degree() > 0);
            CHECK(names.insert(f.name).second);
            const auto chi = character_of(f.form, sys.group);
            REQUIRE(chi.has_value());
            CHECK(*chi == f.character);
        }
        for (const auto& g : sys.generators) {
            CHECK(g.is_invariant());
        }
    }
}

TEST_CASE("generation matches Molien") {
    for (const auto& [family, n] : all_groups()) {
        const auto& sys = system_of(family, n);
        const int top = family == GroupFamily::BinaryIcosahedral ? 60 : 40;
        for (const auto& row : generation_check(sys, top)) {
            CHECK_MESSAGE(row.matches(), sys.group.name() << " degree " << row.degree);
        }
    }
}

TEST_CASE("generation check notices a missing generator") {
    InvariantSystem sys = system_of(GroupFamily::BinaryTetrahedral);
    sys.generators[2] = NamedForm{"P^2", sys.p.form.pow(2), sys.p.character};
    bool any_mismatch = false;
    for (const auto& row : generation_check(sys, 12)) {
        any_mismatch = any_mismatch || !row.matches();
    }
    CHECK(any_mismatch);
}

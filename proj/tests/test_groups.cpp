#include "doctest.h"

#include <deque>
#include <vector>

#include "s3q/groups.hpp"
#include "test_util.hpp"

using namespace s3q;
using s3q::testing::uniform;

namespace {

const BinaryForm S = BinaryForm::s();
const BinaryForm T = BinaryForm::t();

const FiniteSubgroup& group(GroupFamily f, int n = 0) {
    static std::deque<std::pair<GroupSpec, FiniteSubgroup>> cache;
    const GroupSpec spec{f, n};
    for (const auto& [k, g] : cache) {
        if (k == spec) {
            return g;
        }
    }
    cache.emplace_back(spec, build(spec));
    return cache.back().second;
}

// Molien coefficients for degrees 0..60, frozen from an independent
// floating-point enumeration of each group.
const std::vector<long> kTetrahedral = {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 1, 0, 1, 0, 2, 0, 2,
                                        0, 1, 0, 3, 0, 2, 0, 2, 0, 3, 0, 3, 0, 2, 0, 4, 0, 3, 0, 3,
                                        0, 4, 0, 4, 0, 3, 0, 5, 0, 4, 0, 4, 0, 5, 0, 5, 0, 4, 0, 6};
const std::vector<long> kOctahedral = {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1,
                                       0, 0, 0, 2, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2,
                                       0, 2, 0, 2, 0, 1, 0, 3, 0, 2, 0, 2, 0, 2, 0, 3, 0, 2, 0, 3};
const std::vector<long> kIcosahedral = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1,
                                        0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1,
                                        0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 2};
const std::vector<long> kCyclic5 = {1, 0, 1, 0, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5,
                                    4, 5, 4, 5, 6, 5, 6, 5, 6, 7, 6, 7, 6, 7, 8, 7, 8, 7, 8, 9,
                                    8, 9, 8, 9, 10, 9, 10, 9, 10, 11, 10, 11, 10, 11, 12, 11, 12, 11, 12, 13};
const std::vector<long> kDihedral3 = {1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 3, 0, 2, 0, 3, 0, 3, 0, 4,
                                      0, 3, 0, 5, 0, 4, 0, 5, 0, 5, 0, 6, 0, 5, 0, 7, 0, 6, 0, 7,
                                      0, 7, 0, 8, 0, 7, 0, 9, 0, 8, 0, 9, 0, 9, 0, 10, 0, 9, 0, 11};

BinaryForm tetra_v() {
    return S.pow(4) + T.pow(4) + (CycloNum(2) * imag_unit() * sqrt3()) * (S * S * T * T);
}

BinaryForm tetra_p() { return S * T * (S.pow(4) - T.pow(4)); }

}  // namespace

TEST_CASE("closure") {
    const auto trivial = closure({Mat2::identity()}, 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].is_identity());
    CHECK(group(GroupFamily::BinaryTetrahedral).order() == 24);
    CHECK(group(GroupFamily::BinaryIcosahedral).order() == 120);
    CHECK_THROWS_AS(closure(group(GroupFamily::BinaryIcosahedral).generators(), 60), CertificationError);
}

TEST_CASE("build") {
    CHECK(group(GroupFamily::Cyclic, 5).order() == 5);
    CHECK(group(GroupFamily::BinaryDihedral, 3).order() == 12);
    const auto& oct = group(GroupFamily::BinaryOctahedral);
    CHECK(oct.order() == 48);
    for (const auto& g : group(GroupFamily::BinaryTetrahedral).elements()) {
        CHECK(oct.contains(g));
    }
    CHECK_THROWS_AS(build({GroupFamily::Cyclic, 7}), std::invalid_argument);
    CHECK_THROWS_AS(build({GroupFamily::BinaryDihedral, 120}), std::invalid_argument);
    CHECK_THROWS_AS(build({GroupFamily::Cyclic, 0}), std::invalid_argument);
}

TEST_CASE("parse_group and names") {
    CHECK(parse_group("cyclic", 5) == GroupSpec{GroupFamily::Cyclic, 5});
    CHECK(parse_group("binary-icosahedral", std::nullopt).name() == "binary-icosahedral");
    CHECK(parse_group("binary-dihedral", 3).name() == "binary-dihedral-3");
    CHECK_THROWS_AS(parse_group("cyclic", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("dodecahedral", std::nullopt), std::invalid_argument);
}

TEST_CASE("every element is special unitary and orders match the classification") {
    for (int n = 1; n <= 8; ++n) {
        if (120 % n == 0) {
            CHECK(group(GroupFamily::Cyclic, n).order() == static_cast<std::size_t>(n));
        }
        if (120 % (2 * n) == 0) {
            CHECK(group(GroupFamily::BinaryDihedral, n).order() == static_cast<std::size_t>(4 * n));
        }
    }
    for (auto f : {GroupFamily::BinaryTetrahedral, GroupFamily::BinaryOctahedral, GroupFamily::BinaryIcosahedral}) {
        const auto& g = group(f);
        CHECK(g.order() == g.spec().expected_order());
        for (const auto& e : g.elements()) {
            CHECK(is_special_unitary(e));
        }
        CHECK(g.contains_minus_identity());
        CHECK(g.center_size() == 2);
    }
}

TEST_CASE("closed under products and inverses") {
    const auto& g = group(GroupFamily::BinaryOctahedral);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = g.elements()[uniform(0, 47)];
        const auto& b = g.elements()[uniform(0, 47)];
        CHECK(g.contains(a * b));
        CHECK(g.contains(a.inverse()));
    }
}

TEST_CASE("character_of") {
    for (int n : {2, 3, 5, 8}) {
        const auto chi = character_of(S * T, group(GroupFamily::Cyclic, n));
        REQUIRE(chi.has_value());
        CHECK(chi->is_trivial());
    }
    const auto& tet = group(GroupFamily::BinaryTetrahedral);
    const auto chi_v = character_of(tetra_v(), tet);
    REQUIRE(chi_v.has_value());
    CHECK_FALSE(chi_v->is_trivial());
    CHECK(chi_v->order() == 3);
    for (const auto& x : chi_v->values) {
        CHECK(x.pow(3) == CycloNum(1));
    }
    const auto chi_p = character_of(tetra_p(), group(GroupFamily::BinaryOctahedral));
    REQUIRE(chi_p.has_value());
    CHECK(chi_p->order() == 2);
    for (const auto& x : chi_p->values) {
        CHECK((x == CycloNum(1) || x == CycloNum(-1)));
    }
    CHECK_FALSE(character_of(S.pow(4) + T.pow(3) * S, tet).has_value());
    CHECK_THROWS_AS(character_of(BinaryForm(3), tet), std::invalid_argument);
}

TEST_CASE("is_invariant") {
    const auto& tet = group(GroupFamily::BinaryTetrahedral);
    CHECK(is_invariant(tetra_p(), tet));
    CHECK_FALSE(is_invariant(tetra_v(), tet));
    for (int n : {2, 3, 4, 5, 6}) {
        CHECK(is_invariant(S * S * T * T, group(GroupFamily::BinaryDihedral, n)));
    }
}

TEST_CASE("characters are homomorphisms") {
    const auto& tet = group(GroupFamily::BinaryTetrahedral);
    const auto chi = character_of(tetra_v(), tet);
    REQUIRE(chi.has_value());
    for (std::size_t i = 0; i < tet.order(); ++i) {
        for (std::size_t j = 0; j < tet.order(); ++j) {
            const auto k = tet.index_of(tet.elements()[i] * tet.elements()[j]);
            REQUIRE(k.has_value());
            CHECK(chi->values[*k] == chi->values[i] * chi->values[j]);
        }
    }
    CHECK(chi->pow(3).is_trivial());
    CHECK(*chi * chi->conj() == Character::trivial(24));
}

TEST_CASE("molien_dim examples") {
    for (auto f : {GroupFamily::BinaryTetrahedral, GroupFamily::BinaryOctahedral, GroupFamily::BinaryIcosahedral}) {
        CHECK(molien_dim(group(f), 0) == 1);
    }
    const auto& ico = group(GroupFamily::BinaryIcosahedral);
    CHECK(molien_dim(ico, 12) == 1);
    CHECK(molien_dim(ico, 2) == 0);
    CHECK(molien_dim(ico, 4) == 0);
    const auto& tet = group(GroupFamily::BinaryTetrahedral);
    CHECK(molien_dim(tet, 6) == 1);
    CHECK(molien_dim(tet, 8) == 1);
    CHECK(molien_dim(tet, 12) == 2);
}

TEST_CASE("molien tables match the frozen enumeration") {
    const std::pair<GroupSpec, const std::vector<long>*> cases[] = {
        {{GroupFamily::BinaryTetrahedral, 0}, &kTetrahedral},
        {{GroupFamily::BinaryOctahedral, 0}, &kOctahedral},
        {{GroupFamily::BinaryIcosahedral, 0}, &kIcosahedral},
        {{GroupFamily::Cyclic, 5}, &kCyclic5},
        {{GroupFamily::BinaryDihedral, 3}, &kDihedral3},
    };
    for (const auto& [spec, table] : cases) {
        const auto& g = group(spec.family, spec.n);
        for (int d = 0; d <= 60; ++d) {
            INFO(spec.name() << " degree " << d);
            CHECK(molien_dim(g, d) == (*table)[d]);
        }
    }
}

TEST_CASE("molien and fixed-space oracles agree") {
    std::vector<GroupSpec> specs = {{GroupFamily::BinaryTetrahedral, 0},
                                    {GroupFamily::BinaryOctahedral, 0},
                                    {GroupFamily::BinaryIcosahedral, 0}};
    for (int n = 2; n <= 6; ++n) {
        specs.push_back({GroupFamily::Cyclic, n});
        specs.push_back({GroupFamily::BinaryDihedral, n});
    }
    for (const auto& spec : specs) {
        const auto& g = group(spec.family, spec.n);
        for (int d = 0; d <= 30; ++d) {
            INFO(spec.name() << " degree " << d);
            CHECK(molien_dim(g, d) == fixed_space_dim(g, d));
        }
    }
    // semi-invariant characters
    const auto& tet = group(GroupFamily::BinaryTetrahedral);
    const auto chi = *character_of(tetra_v(), tet);
    for (const Character& c : {chi, chi.conj()}) {
        for (int d = 0; d <= 24; ++d) {
            CHECK(molien_dim(tet, d, &c) == fixed_space_dim(tet, d, &c));
        }
    }
    const auto& oct = group(GroupFamily::BinaryOctahedral);
    const auto sign = *character_of(tetra_p(), oct);
    for (int d = 0; d <= 24; ++d) {
        CHECK(molien_dim(oct, d, &sign) == fixed_space_dim(oct, d, &sign));
    }
    CHECK(molien_dim(oct, 6, &sign) == 1);
}

TEST_CASE("odd degrees carry no invariants when -1 is in the group") {
    std::vector<GroupSpec> specs = {{GroupFamily::BinaryTetrahedral, 0},
                                    {GroupFamily::BinaryOctahedral, 0},
                                    {GroupFamily::BinaryIcosahedral, 0},
                                    {GroupFamily::Cyclic, 4},
                                    {GroupFamily::Cyclic, 6}};
    for (int n = 2; n <= 6; ++n) {
        specs.push_back({GroupFamily::BinaryDihedral, n});
    }
    for (const auto& spec : specs) {
        const auto& g = group(spec.family, spec.n);
        REQUIRE(g.contains_minus_identity());
        for (int d = 1; d <= 59; d += 2) {
            CHECK(molien_dim(g, d) == 0);
        }
    }
    CHECK_FALSE(group(GroupFamily::Cyclic, 5).contains_minus_identity());
}

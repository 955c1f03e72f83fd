#include "doctest.h"

#include <map>

#include "s3q/sphere.hpp"
#include "test_util.hpp"

using namespace s3q;
using s3q::testing::random_cyclo;
using s3q::testing::random_form;
using s3q::testing::random_sphere_function;
using s3q::testing::uniform;
using s3q::testing::var;

namespace {

const SphereFunction s = var(0);
const SphereFunction t = var(1);
const SphereFunction sb = var(2);
const SphereFunction tb = var(3);
const SphereFunction one = SphereFunction::constant(1);

SphereFunction J(Generator g, const SphereFunction& f) { return apply_generator(g, f); }

SphereFunction commutator(Generator a, Generator b, const SphereFunction& f) {
    return J(a, J(b, f)) - J(b, J(a, f));
}

SphereFunction power(const SphereFunction& f, int e) {
    SphereFunction r = one;
    for (int i = 0; i < e; ++i) {
        r = r * f;
    }
    return r;
}

// Membership of `target` in the linear span of `basis`, over the union of
// canonical monomials.
bool in_span(const std::vector<SphereFunction>& basis, const SphereFunction& target) {
    std::map<SphereExp, std::size_t> index;
    auto collect = [&](const SphereFunction& f) {
        for (const auto& [e, c] : f.terms()) {
            index.try_emplace(e, index.size());
        }
    };
    for (const auto& b : basis) {
        collect(b);
    }
    collect(target);
    auto vec = [&](const SphereFunction& f) {
        CycloVector v(index.size());
        for (const auto& [e, c] : f.terms()) {
            v[index.at(e)] = c;
        }
        return v;
    };
    SpanBasis span(index.size());
    for (const auto& b : basis) {
        span.insert(vec(b));
    }
    return span.contains(vec(target));
}

}  // namespace

TEST_CASE("reduce") {
    CHECK(s * sb + t * tb == one);
    CHECK(t * tb * t == t - s * sb * t);
    const SphereFunction f = random_sphere_function();
    const SphereFunction rel = s * sb + t * tb;
    for (int k = 0; k <= 3; ++k) {
        CHECK(power(rel, k) * f == f);
    }
    // raw terms with duplicates and t tbar pairs
    const std::vector<SphereFunction::Term> raw = {
        {{0, 1, 0, 1}, CycloNum(1)}, {{1, 0, 1, 0}, CycloNum(1)}, {{0, 0, 0, 0}, CycloNum(2)}};
    CHECK(SphereFunction::reduce(raw) == SphereFunction::constant(3));
}

TEST_CASE("canonical form never stores t and tbar together") {
    for (int trial = 0; trial < 50; ++trial) {
        const SphereFunction f = random_sphere_function(5, 6) * random_sphere_function(3, 4);
        for (const auto& [e, c] : f.terms()) {
            CHECK((e[1] == 0 || e[3] == 0));
            CHECK_FALSE(c.is_zero());
        }
    }
}

TEST_CASE("ring operations") {
    CHECK(s * sb == SphereFunction::monomial({1, 0, 1, 0}));
    CHECK(t * tb == one - s * sb);
    CHECK((s - s).is_zero());
    CHECK(CycloNum(0) * s == SphereFunction());
}

TEST_CASE("full contraction of a multiplet with itself is constant") {
    const Multiplet m = multiplet_from_hw(BinaryForm::s() * BinaryForm::t());
    const SphereFunction c = cg_highest(m, m, 2);
    CHECK(c.is_constant());
    CHECK(c == SphereFunction::constant(CycloNum(mpq_class(-1, 2))));
}

TEST_CASE("conj") {
    CHECK(s.conj() == sb);
    CHECK((imag_unit() * (s * t)).conj() == (-imag_unit()) * (sb * tb));
    for (int trial = 0; trial < 20; ++trial) {
        const SphereFunction f = random_sphere_function();
        CHECK(f.conj().conj() == f);
        const SphereFunction g = random_sphere_function();
        CHECK((f * g).conj() == f.conj() * g.conj());
    }
}

TEST_CASE("conjugate of s^n + t^n lies in the combined multiplet span") {
    const BinaryForm S = BinaryForm::s();
    const BinaryForm T = BinaryForm::t();
    for (int n : {1, 3, 5, 7}) {
        const BinaryForm plus = S.pow(n) + T.pow(n);
        const BinaryForm minus = S.pow(n) - T.pow(n);
        std::vector<SphereFunction> basis;
        for (const auto& f : {plus, minus}) {
            const Multiplet m = multiplet_from_hw(f);
            basis.insert(basis.end(), m.components.begin(), m.components.end());
        }
        const SphereFunction target = SphereFunction::from_form(plus).conj();
        CHECK(target == power(sb, n) + power(tb, n));
        CHECK(in_span(basis, target));
        // the holomorphic multiplet alone does not contain it for n > 1
        if (n > 1) {
            CHECK_FALSE(in_span({SphereFunction::from_form(plus)}, target));
        }
    }
}

TEST_CASE("generator examples") {
    CHECK(J(Generator::JminusR, s) == -tb);
    CHECK(J(Generator::JminusR, t) == sb);
    for (int trial = 0; trial < 10; ++trial) {
        const BinaryForm f = random_form(uniform(0, 6));
        CHECK(J(Generator::JplusR, SphereFunction::from_form(f)).is_zero());
    }
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const SphereFunction m = SphereFunction::monomial({a, b, 0, 0});
            CHECK(J(Generator::JzR, m) == CycloNum(mpq_class(a + b, 2)) * m);
        }
    }
    CHECK(generator_name(Generator::JminusR) == "J-R");
}

TEST_CASE("commutation relations") {
    const Generator left[3] = {Generator::JzL, Generator::JplusL, Generator::JminusL};
    const Generator right[3] = {Generator::JzR, Generator::JplusR, Generator::JminusR};
    for (int trial = 0; trial < 25; ++trial) {
        const SphereFunction f = random_sphere_function(4, 5);
        for (const Generator* g : {left, right}) {
            const Generator z = g[0], up = g[1], down = g[2];
            CHECK(commutator(z, up, f) == J(up, f));
            CHECK(commutator(z, down, f) == -J(down, f));
            CHECK(commutator(up, down, f) == CycloNum(2) * J(z, f));
        }
        for (Generator a : left) {
            for (Generator b : right) {
                CHECK(commutator(a, b, f).is_zero());
            }
        }
    }
}

TEST_CASE("conj intertwines raising and lowering") {
    for (int trial = 0; trial < 20; ++trial) {
        const SphereFunction f = random_sphere_function();
        CHECK(J(Generator::JplusR, f).conj() == -J(Generator::JminusR, f.conj()));
        CHECK(J(Generator::JzR, f).conj() == -J(Generator::JzR, f.conj()));
    }
}

TEST_CASE("reduce is idempotent and multiplicative") {
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SphereFunction::Term> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back({{uniform(0, 3), uniform(0, 3), uniform(0, 3), uniform(0, 3)}, random_cyclo(2)});
            b.push_back({{uniform(0, 3), uniform(0, 3), uniform(0, 3), uniform(0, 3)}, random_cyclo(2)});
        }
        // raw product, reduced once
        std::vector<SphereFunction::Term> ab;
        for (const auto& [ea, ca] : a) {
            for (const auto& [eb, cb] : b) {
                ab.push_back({{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb});
            }
        }
        const SphereFunction ra = SphereFunction::reduce(a);
        const SphereFunction rb = SphereFunction::reduce(b);
        CHECK(SphereFunction::reduce(ab) == ra * rb);
        const auto terms = ra.terms();
        CHECK(SphereFunction::reduce(terms) == ra);
    }
}

TEST_CASE("multiplet_from_hw") {
    const Multiplet doublet = multiplet_from_hw(BinaryForm::s());
    REQUIRE(doublet.dimension() == 2);
    CHECK(doublet.components[0] == s);
    CHECK(doublet.components[1] == -tb);

    const Multiplet singlet = multiplet_from_hw(BinaryForm::constant(1));
    REQUIRE(singlet.components.size() == 1);
    CHECK(singlet.components[0] == one);

    const Multiplet zero = multiplet_from_hw(BinaryForm(4));
    CHECK(zero.dimension() == 5);
    for (const auto& c : zero.components) {
        CHECK(c.is_zero());
    }

    // st: the three coordinates satisfy c0 c2 - c1^2 = -1/4 on the sphere
    const Multiplet m = multiplet_from_hw(BinaryForm::s() * BinaryForm::t());
    REQUIRE(m.dimension() == 3);
    CHECK(m.components[1] == s * sb - CycloNum(mpq_class(1, 2)) * one);
    CHECK(m.components[2] == -(sb * tb));
    CHECK(m.components[0] * m.components[2] - m.components[1] * m.components[1] ==
          CycloNum(mpq_class(-1, 4)) * one);
}

TEST_CASE("lowering factorial identity") {
    for (int trial = 0; trial < 15; ++trial) {
        const int d = uniform(0, 8);
        const BinaryForm hw = random_form(d);
        const Multiplet m = multiplet_from_hw(hw);
        SphereFunction cur = SphereFunction::from_form(hw);
        mpz_class falling = 1;
        for (int l = 0; l <= d; ++l) {
            CHECK(cur == CycloNum(mpq_class(falling)) * m.components[l]);
            cur = J(Generator::JminusR, cur);
            falling *= d - l;
        }
        CHECK(cur.is_zero());
        CHECK(J(Generator::JplusR, m.components[0]).is_zero());
    }
}

TEST_CASE("cg_highest examples") {
    const Multiplet ms = multiplet_from_hw(BinaryForm::s());
    const Multiplet mt = multiplet_from_hw(BinaryForm::t());
    CHECK(cg_highest(ms, mt, 1) == one);
    const Multiplet m = multiplet_from_hw(random_form(5));
    CHECK(cg_highest(m, m, 1).is_zero());
    CHECK(cg_highest(m, m, 3).is_zero());
    CHECK_THROWS_AS(cg_highest(ms, mt, 2), std::invalid_argument);
}

TEST_CASE("sphere side matches transvectant") {
    for (int trial = 0; trial < 25; ++trial) {
        const int d1 = uniform(0, 6);
        const int d2 = uniform(0, 6);
        const BinaryForm f = random_form(d1);
        const BinaryForm g = random_form(d2);
        const Multiplet m1 = multiplet_from_hw(f);
        const Multiplet m2 = multiplet_from_hw(g);
        for (int k = 0; k <= std::min(d1, d2); ++k) {
            const SphereFunction lhs = cg_highest(m1, m2, k);
            const CycloNum factor(ladder_factor(d1, d2, k));
            CHECK(factor * lhs == SphereFunction::from_form(transvectant_sum(f, g, k)));
            CHECK(lhs == SphereFunction::from_form(transvectant(f, g, k)));
            CHECK(J(Generator::JplusR, lhs).is_zero());
        }
    }
}

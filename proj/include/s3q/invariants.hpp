#ifndef S3Q_INVARIANTS_HPP
#define S3Q_INVARIANTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "s3q/binform.hpp"
#include "s3q/groups.hpp"

namespace s3q {

/// A certified semi-invariant together with the name used in reports.
struct NamedForm {
    std::string name;
    BinaryForm form = BinaryForm(0);
    Character character;

    bool is_invariant() const { return character.is_trivial(); }
    int degree() const { return form.degree(); }
};

/// Certifies `form` against the group and packages it. Throws
/// CertificationError when it is not a semi-invariant.
NamedForm certify(const std::string& name, const BinaryForm& form, const FiniteSubgroup& group);

/// sum_i coeffs[i] * g1^e0 g2^e1 g3^e2 == 0 over a generator triple.
struct Syzygy {
    std::array<std::string, 3> names;
    int degree = 0;
    std::vector<std::array<int, 3>> exponents;
    std::vector<CycloNum> coeffs;
};

struct InvariantSystem {
    FiniteSubgroup group;
    NamedForm p;
    /// hessian(P); a constant for cyclic groups, proportional to P for the
    /// dihedral ones.
    NamedForm q;
    /// cross(P, Q), absent when it is identically zero or undefined.
    std::optional<NamedForm> r;
    /// The independent invariant of the cyclic and dihedral families.
    std::optional<NamedForm> extra;
    /// Semi-invariants with nontrivial characters (V, the octahedral P, ...).
    std::vector<NamedForm> semi_invariants;
    /// Three invariants generating the invariant ring.
    std::array<NamedForm, 3> generators;
    /// c with Q == c when Q is constant, or Q == c * P when proportional.
    std::optional<CycloNum> hessian_constant;
    std::optional<Syzygy> syzygy;

    bool exceptional() const { return !group.spec().is_polyhedral(); }
    /// Every named form in the system, without duplicates, in a fixed order.
    std::vector<NamedForm> all_forms() const;
};

/// Builds and certifies the fundamental forms of the group, including the
/// syzygy for the polyhedral groups.
InvariantSystem fundamental(const FiniteSubgroup& group);

/// The unique linear relation among monomials of the generator triple at
/// degree 2 * deg(g3), normalized so g3^2 has coefficient 1. Throws
/// std::invalid_argument for the cyclic and dihedral systems and
/// CertificationError when the kernel is not one-dimensional.
Syzygy syzygy(const InvariantSystem& sys);

BinaryForm evaluate(const Syzygy& rel, const std::array<NamedForm, 3>& generators);

/// Exponents (a, b, c) with a*d0 + b*d1 + c*d2 == degree, in lexicographic order.
std::vector<std::array<int, 3>> monomial_exponents(const std::array<int, 3>& degrees, int degree);

struct GenerationRow {
    int degree = 0;
    long products_rank = 0;
    long molien = 0;
    bool matches() const { return products_rank == molien; }
};

/// For every degree up to max_degree, the rank of the span of generator
/// monomials against molien_dim.
std::vector<GenerationRow> generation_check(const InvariantSystem& sys, int max_degree);

/// Klein's degree-12 icosahedral form st(s^10 + 11 s^5 t^5 - t^10).
BinaryForm klein_icosahedral_form();
/// s^4 + t^4 + 2 i sqrt3 s^2 t^2
BinaryForm tetrahedral_vertex_form();
/// st(s^4 - t^4)
BinaryForm octahedral_vertex_form();

}  // namespace s3q

#endif

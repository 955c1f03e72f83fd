#ifndef S3Q_ALGEBRA_HPP
#define S3Q_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s3q/binform.hpp"
#include "s3q/groups.hpp"
#include "s3q/invariants.hpp"
#include "s3q/sphere.hpp"
#include "json.hpp"

namespace s3q {

enum class Classification { Zero, Descendant, NormalizationConstant, Unclassified };

std::string classification_name(Classification c);

/// Highest weight of the spin j1 + j2 - k part of a product of two multiplets.
struct SpinComponent {
    std::string source;  // e.g. "V x V" or "(V,V)^2 x V"
    int two_j1 = 0;
    int two_j2 = 0;
    int k = 0;
    BinaryForm highest_weight = BinaryForm(0);
    Character character;
    Classification classification = Classification::Unclassified;
    /// Expression in named forms when classified as a descendant.
    std::string descendant_of;
    /// highest_weight == constant * (named form) for a single-form match, or
    /// the value itself for a normalization constant.
    std::optional<CycloNum> constant;
    /// molien_dim at this degree and character.
    long molien = 0;
    /// The sphere-side combination agreed with the transvectant.
    bool sphere_checked = false;
    /// The product is a power of one multiplet whose symmetric power has no
    /// part of this spin (odd k for a square), so the component must vanish.
    bool symmetry_forced = false;

    int two_j() const { return two_j1 + two_j2 - 2 * k; }
};

/// Named semi-invariants and their products, used to recognise highest
/// weights.
class Catalog {
  public:
    explicit Catalog(std::vector<NamedForm> forms);
    explicit Catalog(const InvariantSystem& sys) : Catalog(sys.all_forms()) {}

    struct Match {
        std::string expression;
        std::optional<CycloNum> constant;
    };

    /// A single monomial proportional to f, else a linear combination of
    /// monomials with f's character; nullopt when f is outside their span.
    std::optional<Match> match(const BinaryForm& f, const Character& chi) const;

    const std::vector<NamedForm>& forms() const { return forms_; }

  private:
    struct Monomial {
        std::string name;
        BinaryForm form;
    };
    // Monomials of the given degree whose character is z120^chi_exponents.
    const std::vector<Monomial>& monomials(int degree, const std::vector<int>& chi_exponents) const;

    std::vector<NamedForm> forms_;
    std::vector<std::vector<int>> exponents_;
    mutable std::map<std::pair<int, std::vector<int>>, std::vector<Monomial>> cache_;
};

/// Multiplicity of spin J in the p-th symmetric power of spin j, by counting
/// weights; arguments are 2j and 2J.
long symmetric_power_multiplicity(int two_j, int p, int two_J);

/// All spin components of M1 x M2. Each transvectant is cross-checked against
/// the sphere-side combination when `sphere_check` is set.
std::vector<SpinComponent> decompose_product(const Multiplet& m1, const Multiplet& m2, const FiniteSubgroup& group,
                                             const Catalog& catalog, bool sphere_check = true,
                                             const std::string& source = "");

/// Highest weights reached at each degree; a basis per degree.
using SpinSpans = std::map<int, std::vector<BinaryForm>>;

SpinSpans spans_of(const std::vector<BinaryForm>& forms);
/// All transvectants between members of the two spans, reduced to a basis
/// per degree; results above max_degree are dropped.
SpinSpans pair_spans(const SpinSpans& left, const SpinSpans& right, int max_degree);
/// Spans reached by products of `copies` copies of seed; entry p-1 holds p copies.
std::vector<SpinSpans> iterate_pairing(const BinaryForm& seed, int copies, int max_degree);

struct RelationScan {
    std::vector<SpinComponent> components;
    std::size_t relations() const;
    std::size_t descendants() const;
};

/// Binary products of all seed pairs and ternary products (binary result
/// paired with each seed), bounded by the total seed degree max_degree.
/// A nonzero component in a slot with no semi-invariant throws
/// CertificationError.
RelationScan relation_scan(const FiniteSubgroup& group, const std::vector<NamedForm>& seeds, int max_degree,
                           const Catalog& catalog);

struct ProjectiveCoordinates {
    NamedForm seed;
    Multiplet multiplet;
};

/// V for the tetrahedral group, the octahedral P, and Klein's degree-12 form
/// for the icosahedral group. Throws std::invalid_argument otherwise.
ProjectiveCoordinates projective_coords(const InvariantSystem& sys);

struct ClaimReport {
    std::string group;
    std::string id;
    std::string statement;
    bool passed = false;
    nlohmann::json witness;
};

struct VerifyOptions {
    int max_degree = 60;
};

/// Runs the fixed battery of checks for the group.
std::vector<ClaimReport> verify_claims(const FiniteSubgroup& group, const VerifyOptions& options = {});

/// Membership of target in the linear span of basis, over the union of
/// their canonical monomials.
bool in_span(const std::vector<SphereFunction>& basis, const SphereFunction& target);

}  // namespace s3q

#endif

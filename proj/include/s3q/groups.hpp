#ifndef S3Q_GROUPS_HPP
#define S3Q_GROUPS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3q/binform.hpp"
#include "s3q/mat2.hpp"

namespace s3q {

/// Raised when a construction fails its own exact self-checks.
class CertificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class GroupFamily { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct GroupSpec {
    GroupFamily family = GroupFamily::Cyclic;
    int n = 0;  // only for the cyclic and binary dihedral families

    /// "cyclic-5", "binary-dihedral-3", "binary-tetrahedral", ...
    std::string name() const;
    std::size_t expected_order() const;
    /// Whether the transvectant generic P, Q, R construction applies.
    bool is_polyhedral() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses "cyclic", "binary-dihedral" (needing n) or the polyhedral names.
GroupSpec parse_group(const std::string& family, std::optional<int> n);

using GroupElement = Mat2;

/// Finite subgroup of SU(2) as the full list of its exact matrices.
class FiniteSubgroup {
  public:
    FiniteSubgroup(GroupSpec spec, std::vector<GroupElement> generators, std::vector<GroupElement> elements);

    const GroupSpec& spec() const { return spec_; }
    std::string name() const { return spec_.name(); }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    std::optional<std::size_t> index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
    bool contains_minus_identity() const;
    std::size_t center_size() const;

  private:
    GroupSpec spec_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> elements_;
};

/// Breadth-first product closure with exact deduplication; the identity is
/// always element 0. Throws CertificationError past `bound` elements.
std::vector<GroupElement> closure(const std::vector<GroupElement>& generators, std::size_t bound);

/// Builds and certifies (det 1, unitarity, closure order) a group. Throws
/// std::invalid_argument when the group does not fit in Q(z120).
FiniteSubgroup build(const GroupSpec& spec);

bool is_special_unitary(const GroupElement& g);

/// One-dimensional character, listed in the group's element order.
struct Character {
    std::vector<CycloNum> values;

    static Character trivial(std::size_t order);
    bool is_trivial() const;
    /// Order of the character in the character group.
    int order() const;
    Character conj() const;
    Character pow(int e) const;
    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character&, const Character&) = default;
};

/// chi with act(g, f) == chi(g) f for every element, when f is a
/// semi-invariant; nullopt otherwise. Throws on the zero form.
std::optional<Character> character_of(const BinaryForm& f, const FiniteSubgroup& group);
bool is_invariant(const BinaryForm& f, const FiniteSubgroup& group);

/// Dimension of degree-d forms transforming by chi (trivial when null), by
/// character averaging over the group.
long molien_dim(const FiniteSubgroup& group, int degree, const Character* chi = nullptr);

/// Same dimension computed independently: the kernel of the stacked linear
/// conditions act(g) f = chi(g) f over the generators.
long fixed_space_dim(const FiniteSubgroup& group, int degree, const Character* chi = nullptr);

}  // namespace s3q

#endif

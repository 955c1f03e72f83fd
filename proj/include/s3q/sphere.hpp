#ifndef S3Q_SPHERE_HPP
#define S3Q_SPHERE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "s3q/binform.hpp"
#include "s3q/cyclo.hpp"

namespace s3q {

/// Exponents of s^a t^b sbar^c tbar^d, in that order.
using SphereExp = std::array<int, 4>;

enum class Generator { JzL, JplusL, JminusL, JzR, JplusR, JminusR };

std::string generator_name(Generator g);

/// Polynomial function on the 3-sphere s sbar + t tbar = 1.
///
/// Canonical form: no stored monomial contains both t and tbar; every
/// occurrence of t*tbar is rewritten to 1 - s*sbar. Terms are kept sorted
/// lexicographically by exponent with no zero coefficients, so equality of
/// representations is equality of functions on the sphere.
class SphereFunction {
  public:
    using Term = std::pair<SphereExp, CycloNum>;

    SphereFunction() = default;

    static SphereFunction constant(const CycloNum& c);
    static SphereFunction monomial(const SphereExp& e, const CycloNum& c = 1);
    /// The holomorphic function f(s, t).
    static SphereFunction from_form(const BinaryForm& f);
    /// Canonical form of an arbitrary polynomial (duplicates allowed).
    static SphereFunction reduce(std::span<const Term> raw);

    bool is_zero() const { return terms_.empty(); }
    std::vector<Term> terms() const;
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of a canonical monomial.
    CycloNum coeff(const SphereExp& e) const;

    /// The form it equals when it only involves s and t homogeneously.
    std::optional<BinaryForm> as_form() const;
    bool is_constant() const;

    SphereFunction conj() const;

    SphereFunction& operator+=(const SphereFunction& other);
    SphereFunction& operator-=(const SphereFunction& other);
    SphereFunction operator-() const;
    friend SphereFunction operator+(SphereFunction a, const SphereFunction& b) { return a += b; }
    friend SphereFunction operator-(SphereFunction a, const SphereFunction& b) { return a -= b; }
    friend SphereFunction operator*(const SphereFunction& a, const SphereFunction& b);
    friend SphereFunction operator*(const CycloNum& c, const SphereFunction& f);
    friend bool operator==(const SphereFunction& a, const SphereFunction& b);

    /// sum_i c_i * f_i * g_i with a single reduction at the end.
    struct Product {
        CycloNum coeff;
        const SphereFunction* left;
        const SphereFunction* right;
    };
    static SphereFunction sum_of_products(std::span<const Product> products);

    std::string to_string() const;

  private:
    // Packed exponent key, lexicographic on (a, b, c, d); each exponent < 256.
    std::vector<std::pair<std::uint32_t, CycloNum>> terms_;

    friend class RawAccumulator;
};

SphereFunction apply_generator(Generator which, const SphereFunction& f);

/// 2j+1 functions; component l is <j, j-l> in the unnormalized ladder basis,
/// so that (J-R)^l of the highest weight is (2j)!/(2j-l)! times component l.
struct Multiplet {
    int two_j = 0;
    std::vector<SphereFunction> components;

    int dimension() const { return two_j + 1; }
};

Multiplet multiplet_from_hw(const BinaryForm& hw);

/// sum_l (-1)^l C(k,l) M1[l] M2[k-l], reduced on the sphere; the highest
/// weight of the spin j1+j2-k part of M1 (x) M2. Scaled by
/// ladder_factor(2j1, 2j2, k) it equals transvectant_sum of the two highest
/// weights, so it coincides with the normalized transvectant itself.
SphereFunction cg_highest(const Multiplet& m1, const Multiplet& m2, int k);

}  // namespace s3q

#endif

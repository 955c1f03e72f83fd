#ifndef S3Q_BINFORM_HPP
#define S3Q_BINFORM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3q/cyclo.hpp"
#include "s3q/mat2.hpp"

namespace s3q {

class DegreeMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous polynomial of fixed degree d in (s, t).
///
/// coeff(a) is the coefficient of s^a t^(d-a). A form of degree 2j is the
/// highest weight vector of a spin-j multiplet. The zero form keeps its
/// degree.
class BinaryForm {
  public:
    explicit BinaryForm(int degree = 0);
    BinaryForm(int degree, std::vector<CycloNum> coeffs);

    static BinaryForm constant(const CycloNum& c);
    /// c * s^s_exp * t^t_exp
    static BinaryForm monomial(int s_exp, int t_exp, const CycloNum& c = 1);
    static BinaryForm s() { return monomial(1, 0); }
    static BinaryForm t() { return monomial(0, 1); }

    int degree() const { return degree_; }
    const CycloNum& coeff(int s_exp) const { return coeffs_[s_exp]; }
    const std::vector<CycloNum>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    BinaryForm& operator+=(const BinaryForm& other);
    BinaryForm& operator-=(const BinaryForm& other);
    BinaryForm operator-() const;
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const CycloNum& c, const BinaryForm& f);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    BinaryForm pow(int e) const;
    /// Coefficient-wise complex conjugation (s and t are left alone).
    BinaryForm conj_coeffs() const;

    std::string to_string() const;

  private:
    int degree_;
    std::vector<CycloNum> coeffs_;
};

BinaryForm scale(const CycloNum& c, const BinaryForm& f);

BinaryForm diff_s(const BinaryForm& f);
BinaryForm diff_t(const BinaryForm& f);
/// d^p/ds^p d^q/dt^q f
BinaryForm diff(const BinaryForm& f, int p, int q);

/// Normalized k-th transvectant
///   (f,g)^k = (d1-k)!(d2-k)!/(d1! d2!) sum_l (-1)^l C(k,l) f_{s^(k-l) t^l} g_{s^l t^(k-l)}
/// for f, g of degrees d1, d2. Requires k <= min(d1, d2).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k);

/// The same alternating sum without the factorial prefactor, so that
/// transvectant_sum == ladder_factor(d1, d2, k) * transvectant.
BinaryForm transvectant_sum(const BinaryForm& f, const BinaryForm& g, int k);
/// (f,f)^2; degree >= 2.
BinaryForm hessian(const BinaryForm& f);
/// (f,g)^1; both degrees >= 1.
BinaryForm cross(const BinaryForm& f, const BinaryForm& g);

/// Action of a group element: f(s,t) -> f(m^-1 (s,t)^T), i.e. substitute
/// (s,t) -> (a s + b t, c s + d t) where (a b; c d) is the inverse of m.
/// act(g, act(h, f)) == act(g*h, f).
BinaryForm act(const Mat2& m, const BinaryForm& f);

/// c with f == c * g, when it exists. g must be nonzero.
std::optional<CycloNum> proportionality(const BinaryForm& f, const BinaryForm& g);

/// Exact rational (2j1)!(2j2)!/((2j1-k)!(2j2-k)!).
mpq_class ladder_factor(int d1, int d2, int k);

}  // namespace s3q

#endif

#ifndef S3Q_CYCLO_HPP
#define S3Q_CYCLO_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace s3q {

class DivisionByZero : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Exact element of the cyclotomic field Q(z), z = exp(2*pi*i/120).
///
/// Stored as an integer polynomial in z of degree < 32 (reduced modulo the
/// 120th cyclotomic polynomial) over a single positive common denominator.
/// The representation is canonical: numerator and denominator share no
/// common factor, so structural equality is field equality. Every scalar
/// needed for the binary polyhedral groups (i, sqrt 2, sqrt 3, sqrt 5 and the
/// roots of unity of order dividing 120) lives here.
class CycloNum {
  public:
    static constexpr int kConductor = 120;
    static constexpr int kDegree = 32;

    CycloNum() = default;
    CycloNum(long value);  // NOLINT: integer literals convert implicitly
    explicit CycloNum(const mpq_class& value);

    /// z^k for any integer k.
    static CycloNum zeta(long k);
    /// Reduces sum_i coords[i] z^i for coefficient sequences of any length.
    static CycloNum from_coords(std::span<const mpq_class> coords);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_rational() const { return num_.empty() || (num_.size() == 1 && num_.front().first == 0); }
    std::optional<mpq_class> rational() const;

    /// Coordinate of z^i in the power basis, 0 <= i < 32, in lowest terms.
    mpq_class coord(int i) const;
    std::vector<mpq_class> coords() const;

    /// Complex conjugation, the automorphism z -> z^-1.
    CycloNum conj() const;
    /// Multiplicative inverse by the extended Euclidean algorithm against the
    /// cyclotomic polynomial. Throws DivisionByZero on zero.
    CycloNum inv() const;
    CycloNum pow(long e) const;

    /// Floating embedding z -> exp(2*pi*i/120). Reporting only.
    std::complex<double> approx() const;

    std::string to_string() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& other);
    CycloNum& operator-=(const CycloNum& other);
    CycloNum& operator*=(const CycloNum& other);
    CycloNum& operator/=(const CycloNum& other) { return *this *= other.inv(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    /// Arbitrary but fixed total order, used for deterministic containers.
    friend bool canonical_less(const CycloNum& a, const CycloNum& b);

    std::size_t term_count() const { return num_.size(); }

  private:
    // (exponent, integer numerator), exponents strictly increasing, numerators nonzero.
    std::vector<std::pair<int, mpz_class>> num_;
    mpz_class den_{1};

    void normalize();
    static CycloNum from_dense(std::vector<mpz_class>& acc, const mpz_class& den);
};

/// z120^(120k/n); requires n | 120.
CycloNum root_of_unity(int n, long k);

CycloNum imag_unit();
CycloNum sqrt2();
CycloNum sqrt3();
CycloNum sqrt5();

/// Smallest e >= 1 with x^e = 1 when x is a root of unity in the field,
/// nullopt otherwise.
std::optional<int> root_of_unity_order(const CycloNum& x);
/// k in [0, 120) with x == z^k, when x is a root of unity.
std::optional<int> root_of_unity_exponent(const CycloNum& x);

using CycloVector = std::vector<CycloNum>;

/// Dense row-major matrix over the field.
class CycloMatrix {
  public:
    CycloMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycloNum& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const CycloNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    CycloVector apply(const CycloVector& v) const;

    /// Basis of the right nullspace by exact Gauss-Jordan elimination; each
    /// vector has a 1 in its free column. Empty when the kernel is trivial.
    std::vector<CycloVector> nullspace() const;
    std::size_t rank() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloNum> entries_;
};

/// Incrementally maintained row-echelon basis of a subspace of K^n.
class SpanBasis {
  public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    /// Adds v; returns true when v was independent of the current span.
    bool insert(CycloVector v);
    bool contains(CycloVector v) const;
    /// Coefficients expressing v in terms of the inserted independent
    /// vectors (in insertion order), when v lies in the span.
    std::optional<CycloVector> coordinates(const CycloVector& v) const;

  private:
    std::size_t dim_;
    // Echelon rows with unit pivot, plus the combination of original inserted
    // vectors that produced them.
    std::vector<CycloVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<CycloVector> combos_;

    void reduce(CycloVector& v, CycloVector* combo) const;
};

}  // namespace s3q

#endif

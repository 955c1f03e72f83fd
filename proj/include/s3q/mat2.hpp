#ifndef S3Q_MAT2_HPP
#define S3Q_MAT2_HPP

#include <string>

#include "s3q/cyclo.hpp"

namespace s3q {

/// 2x2 matrix over the cyclotomic field, rows (a, b), (c, d).
struct Mat2 {
    CycloNum a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    static Mat2 diagonal(const CycloNum& x, const CycloNum& y) { return {x, 0, 0, y}; }

    CycloNum det() const { return a * d - b * c; }
    CycloNum trace() const { return a + d; }
    /// Conjugate transpose.
    Mat2 adjoint() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }
    Mat2 inverse() const;
    bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(const CycloNum& k, const Mat2& m) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    std::string to_string() const;
};

}  // namespace s3q

#endif

#include "s3q/binform.hpp"

#include <algorithm>
#include <sstream>

namespace s3q {

namespace {

mpz_class falling(int n, int k) {
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
    }
    return r;
}

mpz_class factorial(int n) { return falling(n, n); }

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

BinaryForm::BinaryForm(int degree) : degree_(degree), coeffs_(degree + 1) {
    if (degree < 0) {
        throw std::invalid_argument("BinaryForm: negative degree");
    }
}

BinaryForm::BinaryForm(int degree, std::vector<CycloNum> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1)) {
        throw std::invalid_argument("BinaryForm: need degree+1 coefficients");
    }
}

BinaryForm BinaryForm::constant(const CycloNum& c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::monomial(int s_exp, int t_exp, const CycloNum& c) {
    BinaryForm f(s_exp + t_exp);
    f.coeffs_[s_exp] = c;
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
    if (degree_ != other.degree_) {
        throw DegreeMismatch("BinaryForm: adding degree " + std::to_string(degree_) + " and " +
                             std::to_string(other.degree_));
    }
    for (int a = 0; a <= degree_; ++a) {
        coeffs_[a] += other.coeffs_[a];
    }
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) { return *this += -other; }

BinaryForm BinaryForm::operator-() const {
    BinaryForm out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.degree_ + b.degree_);
    for (int i = 0; i <= a.degree_; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (int j = 0; j <= b.degree_; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

BinaryForm operator*(const CycloNum& c, const BinaryForm& f) {
    BinaryForm out = f;
    for (auto& x : out.coeffs_) {
        if (!x.is_zero()) {
            x *= c;
        }
    }
    return out;
}

BinaryForm scale(const CycloNum& c, const BinaryForm& f) { return c * f; }

BinaryForm BinaryForm::pow(int e) const {
    BinaryForm r = constant(1);
    for (int i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

BinaryForm BinaryForm::conj_coeffs() const {
    BinaryForm out = *this;
    for (auto& c : out.coeffs_) {
        c = c.conj();
    }
    return out;
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int a = degree_; a >= 0; --a) {
        const CycloNum& c = coeffs_[a];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ") * s^" << a << " t^" << (degree_ - a);
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

BinaryForm diff(const BinaryForm& f, int p, int q) {
    const int d = f.degree();
    if (p + q > d) {
        return BinaryForm(0);
    }
    std::vector<CycloNum> c(d - p - q + 1);
    for (int a = p; a <= d - q; ++a) {
        if (f.coeff(a).is_zero()) {
            continue;
        }
        const mpz_class k = falling(a, p) * falling(d - a, q);
        c[a - p] = CycloNum(mpq_class(k)) * f.coeff(a);
    }
    return BinaryForm(d - p - q, std::move(c));
}

BinaryForm diff_s(const BinaryForm& f) { return diff(f, 1, 0); }
BinaryForm diff_t(const BinaryForm& f) { return diff(f, 0, 1); }

mpq_class ladder_factor(int d1, int d2, int k) {
    mpq_class r(factorial(d1) * factorial(d2), factorial(d1 - k) * factorial(d2 - k));
    r.canonicalize();
    return r;
}

BinaryForm transvectant_sum(const BinaryForm& f, const BinaryForm& g, int k) {
    const int d1 = f.degree();
    const int d2 = g.degree();
    if (k < 0 || k > d1 || k > d2) {
        throw std::invalid_argument("transvectant: order " + std::to_string(k) + " exceeds degrees " +
                                    std::to_string(d1) + ", " + std::to_string(d2));
    }
    BinaryForm sum(d1 + d2 - 2 * k);
    for (int l = 0; l <= k; ++l) {
        const BinaryForm df = diff(f, k - l, l);
        if (df.is_zero()) {
            continue;
        }
        const BinaryForm dg = diff(g, l, k - l);
        if (dg.is_zero()) {
            continue;
        }
        mpz_class c = binomial(k, l);
        if (l % 2 == 1) {
            c = -c;
        }
        sum += CycloNum(mpq_class(c)) * (df * dg);
    }
    return sum;
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
    const BinaryForm sum = transvectant_sum(f, g, k);
    return CycloNum(1 / ladder_factor(f.degree(), g.degree(), k)) * sum;
}

BinaryForm hessian(const BinaryForm& f) {
    if (f.degree() < 2) {
        throw std::invalid_argument("hessian: degree must be at least 2");
    }
    return transvectant(f, f, 2);
}

BinaryForm cross(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() < 1 || g.degree() < 1) {
        throw std::invalid_argument("cross: degrees must be at least 1");
    }
    return transvectant(f, g, 1);
}

BinaryForm act(const Mat2& m, const BinaryForm& f) {
    const Mat2 inv = m.inverse();
    const int d = f.degree();
    if (inv.b.is_zero() && inv.c.is_zero()) {
        // s -> a s, t -> d t
        std::vector<CycloNum> c(d + 1);
        for (int e = 0; e <= d; ++e) {
            if (!f.coeff(e).is_zero()) {
                c[e] = inv.a.pow(e) * inv.d.pow(d - e) * f.coeff(e);
            }
        }
        return BinaryForm(d, std::move(c));
    }
    if (inv.a.is_zero() && inv.d.is_zero()) {
        // s -> b t, t -> c s
        std::vector<CycloNum> c(d + 1);
        for (int e = 0; e <= d; ++e) {
            if (!f.coeff(e).is_zero()) {
                c[d - e] = inv.b.pow(e) * inv.c.pow(d - e) * f.coeff(e);
            }
        }
        return BinaryForm(d, std::move(c));
    }
    // Images of s and t.
    const BinaryForm ls(1, {inv.b, inv.a});
    const BinaryForm lt(1, {inv.d, inv.c});
    // Homogeneous Horner in ls with increasing powers of lt:
    // f = sum_a c_a ls^a lt^(d-a)
    BinaryForm acc = BinaryForm::constant(f.coeff(d));
    BinaryForm lt_pow = BinaryForm::constant(1);
    for (int i = 1; i <= d; ++i) {
        lt_pow = lt_pow * lt;
        acc = acc * ls;
        const CycloNum& c = f.coeff(d - i);
        if (!c.is_zero()) {
            acc += c * lt_pow;
        }
    }
    return acc;
}

std::optional<CycloNum> proportionality(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) {
        throw std::invalid_argument("proportionality: reference form is zero");
    }
    if (f.degree() != g.degree()) {
        return std::nullopt;
    }
    int a = 0;
    while (g.coeff(a).is_zero()) {
        ++a;
    }
    const CycloNum c = f.coeff(a) / g.coeff(a);
    if (c * g == f) {
        return c;
    }
    return std::nullopt;
}

}  // namespace s3q

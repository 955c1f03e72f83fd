#include "s3q/cyclo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace s3q {

namespace {

constexpr int kMaxProductDegree = 2 * (CycloNum::kDegree - 1);

// x^32 = -x^28 + x^20 + x^16 + x^12 - x^4 - 1  (mod Phi_120)
// Folds every coefficient of degree >= 32 down, highest first.
void reduce_dense(std::vector<mpz_class>& acc) {
    for (int e = static_cast<int>(acc.size()) - 1; e >= CycloNum::kDegree; --e) {
        if (acc[e] == 0) {
            continue;
        }
        const mpz_class c = acc[e];
        acc[e] = 0;
        acc[e - 4] -= c;
        acc[e - 12] += c;
        acc[e - 16] += c;
        acc[e - 20] += c;
        acc[e - 28] -= c;
        acc[e - 32] -= c;
    }
}

// Integer power-basis coordinates of z^k for 0 <= k < 120.
const std::vector<std::array<long, CycloNum::kDegree>>& zeta_table() {
    static const auto table = [] {
        std::vector<std::array<long, CycloNum::kDegree>> t(CycloNum::kConductor);
        std::vector<mpz_class> cur(CycloNum::kDegree + 1);
        cur[0] = 1;
        for (int k = 0; k < CycloNum::kConductor; ++k) {
            for (int i = 0; i < CycloNum::kDegree; ++i) {
                t[k][i] = cur[i].get_si();
            }
            // multiply by z
            for (int i = CycloNum::kDegree; i > 0; --i) {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            reduce_dense(cur);
        }
        return t;
    }();
    return table;
}

// Dense polynomials over Q, index = degree, for the extended gcd.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly r = a;
    if (!q.empty() && !b.empty()) {
        r.resize(std::max(r.size(), q.size() + b.size() - 1));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.size(); ++j) {
                r[i + j] -= q[i] * b[j];
            }
        }
    }
    trim(r);
    return r;
}

// Euclidean division a = q*b + r.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    if (a.size() < b.size()) {
        return {q, a};
    }
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class lead_inv = 1 / b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() * lead_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] -= c * b[j];
        }
        a.back() = 0;
        trim(a);
    }
    trim(q);
    return {q, a};
}

QPoly cyclotomic_poly() {
    QPoly phi(CycloNum::kDegree + 1, mpq_class(0));
    phi[32] = 1;
    phi[28] = 1;
    phi[20] = -1;
    phi[16] = -1;
    phi[12] = -1;
    phi[4] = 1;
    phi[0] = 1;
    return phi;
}

}  // namespace

CycloNum::CycloNum(long value) {
    if (value != 0) {
        num_.emplace_back(0, mpz_class(value));
    }
}

CycloNum::CycloNum(const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    if (q != 0) {
        num_.emplace_back(0, q.get_num());
        den_ = q.get_den();
    }
}

CycloNum CycloNum::zeta(long k) {
    long r = k % kConductor;
    if (r < 0) {
        r += kConductor;
    }
    const auto& row = zeta_table()[r];
    CycloNum out;
    for (int i = 0; i < kDegree; ++i) {
        if (row[i] != 0) {
            out.num_.emplace_back(i, mpz_class(row[i]));
        }
    }
    return out;
}

CycloNum CycloNum::from_coords(std::span<const mpq_class> coords) {
    mpz_class den = 1;
    for (const auto& q : coords) {
        if (q != 0) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        }
    }
    std::vector<mpz_class> acc(std::max<std::size_t>(coords.size(), kDegree));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) {
            acc[i] = coords[i].get_num() * (den / coords[i].get_den());
        }
    }
    // Exponents beyond the conductor wrap first, then fold.
    if (acc.size() > static_cast<std::size_t>(kConductor)) {
        for (std::size_t i = kConductor; i < acc.size(); ++i) {
            acc[i % kConductor] += acc[i];
        }
        acc.resize(kConductor);
    }
    return from_dense(acc, den);
}

CycloNum CycloNum::from_dense(std::vector<mpz_class>& acc, const mpz_class& den) {
    reduce_dense(acc);
    CycloNum out;
    for (int i = 0; i < kDegree && i < static_cast<int>(acc.size()); ++i) {
        if (acc[i] != 0) {
            out.num_.emplace_back(i, std::move(acc[i]));
        }
    }
    if (!out.num_.empty()) {
        out.den_ = den;
        out.normalize();
    }
    return out;
}

void CycloNum::normalize() {
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& [e, c] : num_) {
            c = -c;
        }
    }
    if (den_ == 1) {
        return;
    }
    mpz_class g = den_;
    for (const auto& [e, c] : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            return;
        }
    }
    den_ /= g;
    for (auto& [e, c] : num_) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

bool CycloNum::is_one() const {
    return den_ == 1 && num_.size() == 1 && num_.front().first == 0 && num_.front().second == 1;
}

std::optional<mpq_class> CycloNum::rational() const {
    if (num_.empty()) {
        return mpq_class(0);
    }
    if (!is_rational()) {
        return std::nullopt;
    }
    mpq_class q(num_.front().second, den_);
    q.canonicalize();
    return q;
}

mpq_class CycloNum::coord(int i) const {
    for (const auto& [e, c] : num_) {
        if (e == i) {
            mpq_class q(c, den_);
            q.canonicalize();
            return q;
        }
    }
    return 0;
}

std::vector<mpq_class> CycloNum::coords() const {
    std::vector<mpq_class> out(kDegree, mpq_class(0));
    for (const auto& [e, c] : num_) {
        out[e] = mpq_class(c, den_);
        out[e].canonicalize();
    }
    return out;
}

CycloNum CycloNum::conj() const {
    if (is_rational()) {
        return *this;
    }
    const auto& table = zeta_table();
    std::vector<mpz_class> acc(kDegree);
    for (const auto& [e, c] : num_) {
        const auto& row = table[(kConductor - e) % kConductor];
        for (int i = 0; i < kDegree; ++i) {
            if (row[i] != 0) {
                acc[i] += c * row[i];
            }
        }
    }
    return from_dense(acc, den_);
}

CycloNum CycloNum::inv() const {
    if (is_zero()) {
        throw DivisionByZero("CycloNum: inverse of zero");
    }
    if (is_rational()) {
        CycloNum out;
        out.num_.emplace_back(0, den_);
        out.den_ = num_.front().second;
        out.normalize();
        return out;
    }
    // Extended Euclid: track u with u*a = r (mod phi).
    QPoly r0 = cyclotomic_poly();
    QPoly r1 = coords();
    trim(r1);
    QPoly u0;
    QPoly u1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly u = sub_mul(u0, q, u1);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    // r0 is a nonzero constant since phi is irreducible.
    const mpq_class c = r0.front();
    for (auto& x : u0) {
        x /= c;
    }
    return from_coords(u0);
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) {
        return inv().pow(-e);
    }
    CycloNum result(1);
    CycloNum base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::complex<double> CycloNum::approx() const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [e, c] : num_) {
        mpq_class q(c, den_);
        q.canonicalize();
        const double angle = 2.0 * std::numbers::pi * e / kConductor;
        sum += q.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string CycloNum::to_string() const {
    if (num_.empty()) {
        return "0";
    }
    if (is_rational()) {
        return rational()->get_str();
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : num_) {
        mpq_class q(c, den_);
        q.canonicalize();
        if (first) {
            if (q < 0) {
                os << "-";
            }
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        first = false;
        const mpq_class a = abs(q);
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) {
            os << a.get_str() << "*";
        }
        os << "z";
        if (e != 1) {
            os << "^" << e;
        }
    }
    return os.str();
}

CycloNum CycloNum::operator-() const {
    CycloNum out = *this;
    for (auto& [e, c] : out.num_) {
        c = -c;
    }
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& other) {
    if (other.num_.empty()) {
        return *this;
    }
    if (num_.empty()) {
        return *this = other;
    }
    mpz_class fa = 1;
    mpz_class fb = 1;
    if (den_ != other.den_) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
        fa = l / den_;
        fb = l / other.den_;
        den_ = l;
    }
    std::vector<std::pair<int, mpz_class>> merged;
    merged.reserve(num_.size() + other.num_.size());
    auto a = num_.begin();
    auto b = other.num_.begin();
    while (a != num_.end() || b != other.num_.end()) {
        if (b == other.num_.end() || (a != num_.end() && a->first < b->first)) {
            merged.emplace_back(a->first, a->second * fa);
            ++a;
        } else if (a == num_.end() || b->first < a->first) {
            merged.emplace_back(b->first, b->second * fb);
            ++b;
        } else {
            mpz_class c = a->second * fa + b->second * fb;
            if (c != 0) {
                merged.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    num_ = std::move(merged);
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& other) { return *this += -other; }

CycloNum& CycloNum::operator*=(const CycloNum& other) { return *this = *this * other; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.num_.empty() || b.num_.empty()) {
        return CycloNum();
    }
    if (a.is_rational() || b.is_rational()) {
        const CycloNum& r = a.is_rational() ? a : b;
        const CycloNum& x = a.is_rational() ? b : a;
        CycloNum out = x;
        const mpz_class& n = r.num_.front().second;
        for (auto& [e, c] : out.num_) {
            c *= n;
        }
        out.den_ *= r.den_;
        out.normalize();
        return out;
    }
    std::vector<mpz_class> acc(kMaxProductDegree + 1);
    for (const auto& [ea, ca] : a.num_) {
        for (const auto& [eb, cb] : b.num_) {
            mpz_addmul(acc[ea + eb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    return CycloNum::from_dense(acc, a.den_ * b.den_);
}

bool operator==(const CycloNum& a, const CycloNum& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

bool canonical_less(const CycloNum& a, const CycloNum& b) {
    if (a.num_.size() != b.num_.size()) {
        return a.num_.size() < b.num_.size();
    }
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i].first != b.num_[i].first) {
            return a.num_[i].first < b.num_[i].first;
        }
        // compare as rationals coordinate-wise
        const mpq_class qa(a.num_[i].second, a.den_);
        const mpq_class qb(b.num_[i].second, b.den_);
        if (cmp(qa, qb) != 0) {
            return cmp(qa, qb) < 0;
        }
    }
    return false;
}

CycloNum root_of_unity(int n, long k) {
    if (n <= 0 || CycloNum::kConductor % n != 0) {
        throw std::invalid_argument("root_of_unity: order " + std::to_string(n) + " does not divide 120");
    }
    return CycloNum::zeta(k * (CycloNum::kConductor / n));
}

CycloNum imag_unit() { return CycloNum::zeta(30); }
CycloNum sqrt2() { return CycloNum::zeta(15) + CycloNum::zeta(-15); }
CycloNum sqrt3() { return CycloNum::zeta(10) + CycloNum::zeta(-10); }
// 1 + 2(z5 + z5^-1) = 1 + 4 cos(2 pi / 5)
CycloNum sqrt5() { return CycloNum(1) + 2 * (CycloNum::zeta(24) + CycloNum::zeta(-24)); }

std::optional<int> root_of_unity_exponent(const CycloNum& x) {
    static const std::vector<CycloNum> powers = [] {
        std::vector<CycloNum> p;
        for (int k = 0; k < CycloNum::kConductor; ++k) {
            p.push_back(CycloNum::zeta(k));
        }
        return p;
    }();
    const auto it = std::find(powers.begin(), powers.end(), x);
    if (it == powers.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - powers.begin());
}

std::optional<int> root_of_unity_order(const CycloNum& x) {
    const auto k = root_of_unity_exponent(x);
    if (!k) {
        return std::nullopt;
    }
    return CycloNum::kConductor / std::gcd(*k, CycloNum::kConductor);
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CycloVector CycloMatrix::apply(const CycloVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("CycloMatrix::apply: dimension mismatch");
    }
    CycloVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const CycloNum& m = (*this)(r, c);
            if (!m.is_zero() && !v[c].is_zero()) {
                out[r] += m * v[c];
            }
        }
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<CycloVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        const CycloNum scale = m[row][col].inv();
        for (std::size_t c = col; c < cols; ++c) {
            if (!m[row][c].is_zero()) {
                m[row][c] *= scale;
            }
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) {
                continue;
            }
            const CycloNum f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (!m[row][c].is_zero()) {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<CycloVector> CycloMatrix::nullspace() const {
    std::vector<CycloVector> m(rows_, CycloVector(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m[r][c] = (*this)(r, c);
        }
    }
    const auto pivots = rref(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<CycloVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        CycloVector v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m[i][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t CycloMatrix::rank() const { return cols_ - nullspace().size(); }

// ---------------------------------------------------------------------------

void SpanBasis::reduce(CycloVector& v, CycloVector* combo) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p].is_zero()) {
            continue;
        }
        const CycloNum c = v[p];
        for (std::size_t j = p; j < dim_; ++j) {
            if (!rows_[i][j].is_zero()) {
                v[j] -= c * rows_[i][j];
            }
        }
        if (combo != nullptr) {
            for (std::size_t j = 0; j < combos_[i].size(); ++j) {
                if (!combos_[i][j].is_zero()) {
                    (*combo)[j] += c * combos_[i][j];
                }
            }
        }
    }
}

bool SpanBasis::insert(CycloVector v) {
    if (v.size() != dim_) {
        throw std::invalid_argument("SpanBasis::insert: dimension mismatch");
    }
    const std::size_t index = rows_.size();
    CycloVector acc(index + 1);
    reduce(v, &acc);
    auto it = std::find_if(v.begin(), v.end(), [](const CycloNum& x) { return !x.is_zero(); });
    if (it == v.end()) {
        return false;
    }
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const CycloNum scale = v[p].inv();
    for (std::size_t j = p; j < dim_; ++j) {
        if (!v[j].is_zero()) {
            v[j] *= scale;
        }
    }
    // new row = (orig - sum acc_j orig_j) / pivot
    CycloVector combo(index + 1);
    for (std::size_t j = 0; j < index; ++j) {
        if (!acc[j].is_zero()) {
            combo[j] = -acc[j] * scale;
        }
    }
    combo[index] = scale;
    for (auto& c : combos_) {
        c.resize(index + 1);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
}

bool SpanBasis::contains(CycloVector v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("SpanBasis::contains: dimension mismatch");
    }
    reduce(v, nullptr);
    return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
}

std::optional<CycloVector> SpanBasis::coordinates(const CycloVector& v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("SpanBasis::coordinates: dimension mismatch");
    }
    CycloVector w = v;
    CycloVector acc(rows_.size());
    reduce(w, &acc);
    if (!std::all_of(w.begin(), w.end(), [](const CycloNum& x) { return x.is_zero(); })) {
        return std::nullopt;
    }
    return acc;
}

}  // namespace s3q

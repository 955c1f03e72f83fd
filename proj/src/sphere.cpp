#include "s3q/sphere.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace s3q {

namespace {

constexpr int kMaxExp = 255;

std::uint32_t pack(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || a > kMaxExp || b > kMaxExp || c > kMaxExp || d > kMaxExp) {
        throw std::out_of_range("SphereFunction: exponent out of range");
    }
    return (static_cast<std::uint32_t>(a) << 24) | (static_cast<std::uint32_t>(b) << 16) |
           (static_cast<std::uint32_t>(c) << 8) | static_cast<std::uint32_t>(d);
}

std::uint32_t pack(const SphereExp& e) { return pack(e[0], e[1], e[2], e[3]); }

SphereExp unpack(std::uint32_t k) {
    return {static_cast<int>(k >> 24), static_cast<int>((k >> 16) & 0xff), static_cast<int>((k >> 8) & 0xff),
            static_cast<int>(k & 0xff)};
}

// Signed binomial rows (-1)^i C(m, i) for every m that packed exponents allow.
const std::vector<CycloNum>& signed_binomials(int m) {
    static const std::vector<std::vector<CycloNum>> rows = [] {
        std::vector<std::vector<CycloNum>> out;
        for (int n = 0; n <= kMaxExp / 2 + 1; ++n) {
            std::vector<CycloNum> row(n + 1);
            for (int i = 0; i <= n; ++i) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), n, i);
                row[i] = CycloNum(mpq_class(i % 2 == 0 ? c : mpz_class(-c)));
            }
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows.at(m);
}

}  // namespace

// Accumulates unreduced terms and emits the canonical form.
class RawAccumulator {
  public:
    void add(int a, int b, int c, int d, const CycloNum& coeff) {
        if (coeff.is_zero()) {
            return;
        }
        const int m = std::min(b, d);
        if (m == 0) {
            add_canonical(pack(a, b, c, d), coeff);
            return;
        }
        // t^m tbar^m = (1 - s sbar)^m
        const auto& row = signed_binomials(m);
        for (int i = 0; i <= m; ++i) {
            add_canonical(pack(a + i, b - m, c + i, d - m), row[i] * coeff);
        }
    }

    void add(std::uint32_t key, const CycloNum& coeff) {
        const SphereExp e = unpack(key);
        add(e[0], e[1], e[2], e[3], coeff);
    }

    SphereFunction finish() {
        SphereFunction out;
        out.terms_.reserve(acc_.size());
        for (auto& [k, c] : acc_) {
            if (!c.is_zero()) {
                out.terms_.emplace_back(k, std::move(c));
            }
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        acc_.clear();
        return out;
    }

  private:
    void add_canonical(std::uint32_t key, const CycloNum& coeff) {
        auto [it, inserted] = acc_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
        }
    }

    std::unordered_map<std::uint32_t, CycloNum> acc_;
};

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::JzL: return "JzL";
        case Generator::JplusL: return "J+L";
        case Generator::JminusL: return "J-L";
        case Generator::JzR: return "JzR";
        case Generator::JplusR: return "J+R";
        case Generator::JminusR: return "J-R";
    }
    return "?";
}

SphereFunction SphereFunction::constant(const CycloNum& c) { return monomial({0, 0, 0, 0}, c); }

SphereFunction SphereFunction::monomial(const SphereExp& e, const CycloNum& c) {
    RawAccumulator acc;
    acc.add(e[0], e[1], e[2], e[3], c);
    return acc.finish();
}

SphereFunction SphereFunction::from_form(const BinaryForm& f) {
    SphereFunction out;
    const int d = f.degree();
    for (int a = 0; a <= d; ++a) {
        if (!f.coeff(a).is_zero()) {
            out.terms_.emplace_back(pack(a, d - a, 0, 0), f.coeff(a));
        }
    }
    std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

SphereFunction SphereFunction::reduce(std::span<const Term> raw) {
    RawAccumulator acc;
    for (const auto& [e, c] : raw) {
        acc.add(e[0], e[1], e[2], e[3], c);
    }
    return acc.finish();
}

std::vector<SphereFunction::Term> SphereFunction::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        out.emplace_back(unpack(k), c);
    }
    return out;
}

CycloNum SphereFunction::coeff(const SphereExp& e) const {
    const std::uint32_t k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const auto& x, std::uint32_t v) { return x.first < v; });
    if (it != terms_.end() && it->first == k) {
        return it->second;
    }
    return CycloNum();
}

std::optional<BinaryForm> SphereFunction::as_form() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    const SphereExp first = unpack(terms_.front().first);
    const int d = first[0] + first[1];
    BinaryForm f(d);
    std::vector<CycloNum> c(d + 1);
    for (const auto& [k, v] : terms_) {
        const SphereExp e = unpack(k);
        if (e[2] != 0 || e[3] != 0 || e[0] + e[1] != d) {
            return std::nullopt;
        }
        c[e[0]] = v;
    }
    return BinaryForm(d, std::move(c));
}

bool SphereFunction::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0); }

SphereFunction SphereFunction::conj() const {
    RawAccumulator acc;
    for (const auto& [k, c] : terms_) {
        const SphereExp e = unpack(k);
        acc.add(e[2], e[3], e[0], e[1], c.conj());
    }
    return acc.finish();
}

SphereFunction& SphereFunction::operator+=(const SphereFunction& other) {
    std::vector<std::pair<std::uint32_t, CycloNum>> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            CycloNum c = a->second + b->second;
            if (!c.is_zero()) {
                merged.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

SphereFunction& SphereFunction::operator-=(const SphereFunction& other) { return *this += -other; }

SphereFunction SphereFunction::operator-() const {
    SphereFunction out = *this;
    for (auto& [k, c] : out.terms_) {
        c = -c;
    }
    return out;
}

SphereFunction operator*(const CycloNum& c, const SphereFunction& f) {
    if (c.is_zero()) {
        return SphereFunction();
    }
    SphereFunction out = f;
    for (auto& [k, v] : out.terms_) {
        v *= c;
    }
    return out;
}

SphereFunction operator*(const SphereFunction& a, const SphereFunction& b) {
    const SphereFunction::Product p{CycloNum(1), &a, &b};
    return SphereFunction::sum_of_products(std::span(&p, 1));
}

SphereFunction SphereFunction::sum_of_products(std::span<const Product> products) {
    RawAccumulator acc;
    for (const auto& p : products) {
        if (p.coeff.is_zero()) {
            continue;
        }
        for (const auto& [ka, ca] : p.left->terms_) {
            const CycloNum cl = p.coeff.is_one() ? ca : p.coeff * ca;
            const SphereExp ea = unpack(ka);
            for (const auto& [kb, cb] : p.right->terms_) {
                const SphereExp eb = unpack(kb);
                acc.add(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3], cl * cb);
            }
        }
    }
    return acc.finish();
}

bool operator==(const SphereFunction& a, const SphereFunction& b) { return a.terms_ == b.terms_; }

std::string SphereFunction::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    static const char* names[4] = {"s", "t", "sbar", "tbar"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ")";
        const SphereExp e = unpack(k);
        for (int v = 0; v < 4; ++v) {
            if (e[v] == 1) {
                os << "*" << names[v];
            } else if (e[v] > 1) {
                os << "*" << names[v] << "^" << e[v];
            }
        }
    }
    return os.str();
}

SphereFunction apply_generator(Generator which, const SphereFunction& f) {
    RawAccumulator acc;
    const CycloNum half(mpq_class(1, 2));
    for (const auto& [e, c] : f.terms()) {
        const int a = e[0], b = e[1], cb = e[2], d = e[3];
        switch (which) {
            case Generator::JzL:
                acc.add(a, b, cb, d, CycloNum(mpq_class(a + d - b - cb, 2)) * c);
                break;
            case Generator::JzR:
                acc.add(a, b, cb, d, CycloNum(mpq_class(a - d + b - cb, 2)) * c);
                break;
            case Generator::JplusL:  // s d/dt - tbar d/dsbar
                if (b > 0) acc.add(a + 1, b - 1, cb, d, CycloNum(b) * c);
                if (cb > 0) acc.add(a, b, cb - 1, d + 1, CycloNum(-cb) * c);
                break;
            case Generator::JminusL:  // t d/ds - sbar d/dtbar
                if (a > 0) acc.add(a - 1, b + 1, cb, d, CycloNum(a) * c);
                if (d > 0) acc.add(a, b, cb + 1, d - 1, CycloNum(-d) * c);
                break;
            case Generator::JplusR:  // -s d/dtbar + t d/dsbar
                if (d > 0) acc.add(a + 1, b, cb, d - 1, CycloNum(-d) * c);
                if (cb > 0) acc.add(a, b + 1, cb - 1, d, CycloNum(cb) * c);
                break;
            case Generator::JminusR:  // -tbar d/ds + sbar d/dt
                if (a > 0) acc.add(a - 1, b, cb, d + 1, CycloNum(-a) * c);
                if (b > 0) acc.add(a, b - 1, cb + 1, d, CycloNum(b) * c);
                break;
        }
    }
    return acc.finish();
}

Multiplet multiplet_from_hw(const BinaryForm& hw) {
    Multiplet m;
    m.two_j = hw.degree();
    m.components.reserve(m.two_j + 1);
    m.components.push_back(SphereFunction::from_form(hw));
    for (int l = 0; l < m.two_j; ++l) {
        const SphereFunction lowered = apply_generator(Generator::JminusR, m.components.back());
        m.components.push_back(CycloNum(mpq_class(1, m.two_j - l)) * lowered);
    }
    return m;
}

SphereFunction cg_highest(const Multiplet& m1, const Multiplet& m2, int k) {
    if (k < 0 || k > m1.two_j || k > m2.two_j) {
        throw std::invalid_argument("cg_highest: order " + std::to_string(k) + " out of range");
    }
    std::vector<SphereFunction::Product> products;
    products.reserve(k + 1);
    for (int l = 0; l <= k; ++l) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), k, l);
        if (l % 2 == 1) {
            c = -c;
        }
        products.push_back({CycloNum(mpq_class(c)), &m1.components[l], &m2.components[k - l]});
    }
    return SphereFunction::sum_of_products(products);
}

}  // namespace s3q

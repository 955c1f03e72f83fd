#ifndef S3Q_TEST_UTIL_HPP
#define S3Q_TEST_UTIL_HPP

#include <random>

#include "s3q/binform.hpp"
#include "s3q/cyclo.hpp"
#include "s3q/sphere.hpp"

namespace s3q::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Sparse element with small rational coordinates in the power basis.
inline CycloNum random_cyclo(int max_terms = 3) {
    CycloNum x;
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
        const mpq_class q(uniform(-5, 5), uniform(1, 4));
        x += CycloNum(q) * CycloNum::zeta(uniform(0, 119));
    }
    return x;
}

inline CycloNum random_nonzero_cyclo(int max_terms = 3) {
    CycloNum x;
    while (x.is_zero()) {
        x = random_cyclo(max_terms);
    }
    return x;
}

inline BinaryForm random_form(int degree, int max_terms = 2) {
    std::vector<CycloNum> c(degree + 1);
    for (auto& x : c) {
        x = uniform(0, 2) == 0 ? CycloNum() : random_cyclo(max_terms);
    }
    return BinaryForm(degree, std::move(c));
}

inline SphereFunction random_sphere_function(int max_degree = 4, int terms = 5) {
    std::vector<SphereFunction::Term> raw;
    for (int i = 0; i < terms; ++i) {
        SphereExp e{uniform(0, max_degree), uniform(0, max_degree), uniform(0, max_degree), uniform(0, max_degree)};
        raw.emplace_back(e, random_cyclo(2));
    }
    return SphereFunction::reduce(raw);
}

/// s^a t^b as a sphere function
inline SphereFunction var(int which) {
    SphereExp e{0, 0, 0, 0};
    e[which] = 1;
    return SphereFunction::monomial(e);
}

inline BinaryForm form_from_ints(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<CycloNum> c;
    for (long v : coeffs_low_to_high) {
        c.emplace_back(v);
    }
    const int d = static_cast<int>(c.size()) - 1;
    return BinaryForm(d, std::move(c));
}

}  // namespace s3q::testing

#endif

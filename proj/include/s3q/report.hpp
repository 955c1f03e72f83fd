#ifndef S3Q_REPORT_HPP
#define S3Q_REPORT_HPP

#include <string>

#include "json.hpp"
#include "s3q/algebra.hpp"
#include "s3q/binform.hpp"
#include "s3q/cyclo.hpp"
#include "s3q/groups.hpp"
#include "s3q/invariants.hpp"
#include "s3q/sphere.hpp"

// JSON encodings. Objects are std::map backed, so keys come out sorted and
// the output is byte-stable for identical inputs.
namespace s3q::report {

using nlohmann::json;

/// {"zeta_powers": [[k, "p/q"], ...], "approx": [re, im]}: the nonzero
/// coordinates on the power basis 1, z, ..., z^31 of Q(z120), rationals as
/// canonical "p/q" strings.
json to_json(const CycloNum& x);
/// {"degree": d, "coeffs": [...], "text": "..."}
json to_json(const BinaryForm& f);
/// [{"exp": [a, b, c, d], "coeff": ...}, ...] sorted by exponent.
json to_json(const SphereFunction& f);
json to_json(const Multiplet& m);
json to_json(const Mat2& m);
/// {"order": n, "zeta120_exponents": [...]} in the group's element order.
json to_json(const Character& chi);
json to_json(const NamedForm& f);
json to_json(const Syzygy& rel);
/// The highest weight itself is included when with_form is set.
json to_json(const SpinComponent& c, bool with_form = true);
json to_json(const ClaimReport& r);

json group_summary(const FiniteSubgroup& group);
json molien_table(const FiniteSubgroup& group, int max_degree);
json invariant_summary(const InvariantSystem& sys, int max_degree);

/// Exact value followed by its floating approximation.
std::string text(const CycloNum& x);

}  // namespace s3q::report

#endif

#pragma once

#include <string>

#include "json.hpp"

#include "knotcert/constructions.hpp"
#include "knotcert/torus.hpp"

namespace knotcert {

using json = nlohmann::json;

inline constexpr int kCertificateSchemaVersion = 1;

/// {"min_exp": e, "coeffs": ["c_e", "c_(e+1)", ...]} with decimal strings.
json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const json& j);

json presentation_to_json(const Presentation& p);
json ideal_to_json(const IdealGenerators& ideal);
json matrix_to_json(const LaurentMatrix& m);

json certificate_to_json(const DistinctnessCertificate& c);
DistinctnessCertificate certificate_from_json(const json& j);

/// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string emit_certificate_json(const DistinctnessCertificate& c);
DistinctnessCertificate parse_certificate_json(const std::string& text);

json gamma_artifacts_to_json(const GammaArtifacts& g);
json homomorphism_to_json(const HomomorphismReport& r);
json consistency_to_json(const ConsistencyReport& r);
json normal_form_to_json(const TorusNF& nf);

/// Space-separated ascending coefficients (for canonical polynomials, t^0 upward).
std::string coefficient_line(const LaurentPoly& f);

}  // namespace knotcert

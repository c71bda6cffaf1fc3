#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcert/fox.hpp"
#include "knotcert/group.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

/// T(p, q) with p >= 1, q >= 2, gcd(p, q) = 1.
struct TorusKnotParams {
  std::int64_t p = 2;
  std::int64_t q = 3;

  /// Throws BadParams.
  static TorusKnotParams make(std::int64_t p, std::int64_t q);
  friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;
};

/// Wirtinger presentation of T(p, p+1) on z, a1..ap, flagged as Wirtinger.
Presentation torus_wirtinger(int p);

/// [a1, a1 a2 ... ap], reduced.
Word tau_word(int p);

/// <x, y | x^p y^q>.
Presentation standard_presentation(const TorusKnotParams& tk);

struct DoubledKnot {
  Presentation presentation;
  /// [a1, a1..ap] [b1, b1..bp]^-1
  Word connected_sum_word;
};

/// Two Wirtinger copies on z, a1..ap and w, b1..bp with meridians a1 = b1.
DoubledKnot double_presentation(int p);

/// <u, v, x, y | u^p v^(p+1), x^p y^(p+1), u v y^-1 x^-1, v u x^-1 y^-1>.
Presentation gamma_presentation(int p);

struct TraceStep {
  std::string description;
  Word result;
};

struct ConsistencyReport {
  bool verified = false;
  std::vector<TraceStep> steps;
  std::string failure;  // empty when verified
};

/// Rewrites the connected-sum word in u, v, x, y and checks that, modulo
/// uv = xy, it is one of the relators of `gamma`.
ConsistencyReport check_gamma_reconciliation(const Presentation& gamma, int p);
ConsistencyReport derive_gamma_consistency(int p);

/// t, a, b form of gamma_presentation(p) obtained by Tietze moves with
/// t = xy, a = t^p v, b = t^p y.
Presentation gamma_tab_by_substitution(int p);
/// Same presentation assembled directly from the product-of-conjugates
/// exponent formulas.
Presentation gamma_tab_literal(int p);
/// Substitution route, checked against the literal route. Throws MismatchError.
Presentation gamma_tab_presentation(int p);

enum class PolyForm { Sum, Closed };

/// Alexander polynomial of T(p, p+1), canonicalized.
LaurentPoly p_poly(int p, PolyForm form = PolyForm::Closed);

struct OrderIdeal {
  ModulePresentation module;
  IdealGenerators ideal;
};

/// Module <a, b | P a, P b, (1-t) a - (1-t) b> and its order ideal.
OrderIdeal order_ideal(int p);

struct GammaArtifacts {
  int p = 1;
  Presentation presentation;
  Presentation tab_presentation;
  LaurentPoly p_poly;
  IdealGenerators order_ideal;
  ModulePresentation module_presentation;

  AbelianizationResult abelianization;
  LaurentPoly alexander_polynomial;
  /// Module matrix equals the Fox matrix of the t, a, b form with the t column dropped.
  bool module_matches_fox = false;
  /// E_1 of the Fox matrix of the four-generator presentation.
  IdealGenerators fox_e1;
  bool fox_e1_gcd_matches = false;
  /// Phi_{p(p+1)} divides every generator of both ideals (p >= 2).
  bool root_of_unity_in_both = false;
  /// Fintushel-Stern framing defect of gamma_p; a quoted constant.
  std::int64_t framing_defect = 0;
};

GammaArtifacts gamma_artifacts(int p);

enum class CertificateMode { Cyclotomic, UnitIdeal };

std::string to_string(CertificateMode m);
CertificateMode certificate_mode_from_string(const std::string& s);

struct DistinctnessCertificate {
  int p = 1;
  int k = 2;
  std::int64_t phi_index = 0;
  bool divides_in_k = false;
  bool divides_in_p = false;
  CertificateMode mode = CertificateMode::Cyclotomic;
  LaurentPoly p_poly_p;
  LaurentPoly p_poly_k;
  LaurentPoly phi;

  bool valid() const;
  friend bool operator==(const DistinctnessCertificate&, const DistinctnessCertificate&) = default;
};

/// Throws BadPair unless 1 <= p < k.
DistinctnessCertificate distinctness_certificate(int p, int k);

/// Recomputes every field from (p, k) and compares; empty string on success.
std::string audit_certificate(const DistinctnessCertificate& c);

}  // namespace knotcert

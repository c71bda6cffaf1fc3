#include "knotcert/report.hpp"

#include "knotcert/errors.hpp"
#include "knotcert/textio.hpp"

namespace knotcert {

json poly_to_json(const LaurentPoly& f) {
  json coeffs = json::array();
  for (const BigInt& c : f.dense()) coeffs.push_back(c.get_str());
  return json{{"min_exp", f.is_zero() ? 0 : f.min_exp()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly poly_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0)
      throw InputError("bad coefficient '" + c.get<std::string>() + "'");
    coeffs.push_back(std::move(v));
  }
  return LaurentPoly::from_coeffs(j.at("min_exp").get<std::int64_t>(), coeffs);
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(print_word(r));
  return json{{"generators", p.generators()}, {"relators", std::move(rels)}};
}

json ideal_to_json(const IdealGenerators& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(poly_to_json(g));
  return gens;
}

json matrix_to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificate_to_json(const DistinctnessCertificate& c) {
  return json{{"schema_version", kCertificateSchemaVersion},
              {"p", c.p},
              {"k", c.k},
              {"mode", to_string(c.mode)},
              {"phi_index", c.phi_index},
              {"divides_in_k", c.divides_in_k},
              {"divides_in_p", c.divides_in_p},
              {"valid", c.valid()},
              {"polynomials",
               {{"p_poly_p", poly_to_json(c.p_poly_p)},
                {"p_poly_k", poly_to_json(c.p_poly_k)},
                {"phi", poly_to_json(c.phi)}}}};
}

DistinctnessCertificate certificate_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kCertificateSchemaVersion)
      throw InputError("unsupported certificate schema_version");
    DistinctnessCertificate c;
    c.p = j.at("p").get<int>();
    c.k = j.at("k").get<int>();
    c.mode = certificate_mode_from_string(j.at("mode").get<std::string>());
    c.phi_index = j.at("phi_index").get<std::int64_t>();
    c.divides_in_k = j.at("divides_in_k").get<bool>();
    c.divides_in_p = j.at("divides_in_p").get<bool>();
    const json& polys = j.at("polynomials");
    c.p_poly_p = poly_from_json(polys.at("p_poly_p"));
    c.p_poly_k = poly_from_json(polys.at("p_poly_k"));
    c.phi = poly_from_json(polys.at("phi"));
    if (j.at("valid").get<bool>() != c.valid())
      throw InputError("certificate 'valid' field disagrees with its contents");
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
}

std::string emit_certificate_json(const DistinctnessCertificate& c) {
  return certificate_to_json(c).dump(2) + "\n";
}

DistinctnessCertificate parse_certificate_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

json gamma_artifacts_to_json(const GammaArtifacts& g) {
  const auto& ab = g.abelianization;
  json snf = json::array();
  for (const auto& d : ab.snf_diagonal) snf.push_back(d.get_str());
  json degree = json::object();
  if (ab.degree_map)
    for (const auto& [gen, d] : *ab.degree_map) degree[gen] = d;
  return json{
      {"p", g.p},
      {"presentation", presentation_to_json(g.presentation)},
      {"tab_presentation", presentation_to_json(g.tab_presentation)},
      {"p_poly", poly_to_json(g.p_poly)},
      {"module_presentation",
       {{"generators", g.module_presentation.module_generators},
        {"relations", matrix_to_json(g.module_presentation.relations)}}},
      {"order_ideal", ideal_to_json(g.order_ideal)},
      {"abelianization",
       {{"free_rank", ab.free_rank}, {"snf_diagonal", std::move(snf)}, {"degree_map", degree}}},
      {"alexander_polynomial", poly_to_json(g.alexander_polynomial)},
      {"checks",
       {{"module_matches_fox", g.module_matches_fox},
        {"fox_e1_gcd_matches", g.fox_e1_gcd_matches},
        {"root_of_unity_in_both", g.root_of_unity_in_both}}},
      {"fox_e1", ideal_to_json(g.fox_e1)},
      {"framing_defect", g.framing_defect},
  };
}

json normal_form_to_json(const TorusNF& nf) {
  json syl = json::array();
  for (const auto& s : nf.syllables) syl.push_back(json{{"gen", s.gen}, {"exp", s.exp}});
  return json{{"p", nf.params.p},
              {"q", nf.params.q},
              {"convention", to_string(nf.convention)},
              {"central_exponent", nf.central_exponent},
              {"syllables", std::move(syl)},
              {"trivial", nf.is_trivial()}};
}

json homomorphism_to_json(const HomomorphismReport& r) {
  json rels = json::array();
  for (const auto& v : r.relators)
    rels.push_back(json{{"relator", print_word(v.relator)},
                        {"image", print_word(v.image)},
                        {"normal_form", v.normal_form.to_string()},
                        {"trivial", v.trivial}});
  return json{{"target_p", r.target.p},
              {"target_q", r.target.q},
              {"convention", to_string(r.convention)},
              {"relators", std::move(rels)},
              {"homomorphism", r.homomorphism},
              {"x_generated", r.x_generated},
              {"y_generated", r.y_generated},
              {"surjective", r.surjective()}};
}

json consistency_to_json(const ConsistencyReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back(json{{"step", s.description}, {"result", print_word(s.result)}});
  return json{{"verified", r.verified}, {"steps", std::move(steps)}, {"failure", r.failure}};
}

std::string coefficient_line(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const BigInt& c : f.dense()) {
    if (!out.empty()) out += ' ';
    out += c.get_str();
  }
  return out;
}

}  // namespace knotcert

#include "knotcert/fox.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"

namespace knotcert {

GroupRingElement::GroupRingElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

GroupRingElement GroupRingElement::of(const Word& w, const BigInt& c) {
  GroupRingElement e;
  e.add(w, c);
  return e;
}

void GroupRingElement::add(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
  return out;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [we, c] : e.terms_) out.add(w * we, c);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    BigInt mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += w.is_identity() ? "1" : "(" + w.to_string() + ")";
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::string_view gen) {
  GroupRingElement out;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      // d(g^k) = 1 + g + ... + g^(k-1) for k > 0, -(g^-1 + ... + g^k) for k < 0
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < s.exp; ++i)
          out += GroupRingElement::of(prefix * Word::letter(s.gen, i));
      } else {
        for (std::int64_t i = 1; i <= -s.exp; ++i)
          out -= GroupRingElement::of(prefix * Word::letter(s.gen, -i));
      }
    }
    prefix = prefix * Word::letter(s.gen, s.exp);
  }
  return out;
}

LaurentPoly abelianize_element(const GroupRingElement& e, const DegreeMap& d) {
  LaurentPoly out;
  for (const auto& [w, c] : e.terms()) out += LaurentPoly::monomial(c, degree_of(w, d));
  return out;
}

LaurentMatrix alexander_matrix(const Presentation& p, const DegreeMap& d) {
  const auto& rels = p.relators();
  const auto& gens = p.generators();
  LaurentMatrix m(rels.size(), gens.size());
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      m(i, j) = abelianize_element(fox_derivative(rels[i], gens[j]), d);
  return m;
}

IdealGenerators IdealGenerators::from(std::vector<LaurentPoly> polys) {
  IdealGenerators out;
  for (auto& f : polys) {
    if (f.is_zero()) continue;
    LaurentPoly c = canonicalize(f);
    if (is_unit(c)) return IdealGenerators{{LaurentPoly::constant(1)}};
    if (std::find(out.gens.begin(), out.gens.end(), c) == out.gens.end())
      out.gens.push_back(std::move(c));
  }
  return out;
}

bool IdealGenerators::is_unit_ideal() const {
  return gens.size() == 1 && gens.front() == LaurentPoly::constant(1);
}

LaurentPoly IdealGenerators::gcd() const {
  if (gens.empty()) return {};
  return laurent_gcd(gens);
}

IdealGenerators elementary_ideal(const LaurentMatrix& m, std::size_t k) {
  const std::size_t n = m.cols();
  if (k >= n) return IdealGenerators{{LaurentPoly::constant(1)}};
  if (n - k > m.rows()) return {};
  return IdealGenerators::from(minors(m, n - k));
}

LaurentPoly alexander_polynomial(const Presentation& p, std::optional<std::string> deleted_column) {
  const AbelianizationResult ab = abelianization(p);
  if (!ab.degree_map)
    throw NotInfiniteCyclicAbelianization("abelianization has free rank " +
                                          std::to_string(ab.free_rank) + " and " +
                                          std::to_string(ab.torsion.size()) + " torsion factors");
  const DegreeMap& deg = *ab.degree_map;
  const auto& gens = p.generators();

  LaurentMatrix m = alexander_matrix(p, deg);
  if (p.is_wirtinger() && m.rows() == gens.size() && m.rows() > 0) m = m.without_row(m.rows() - 1);

  std::size_t col = gens.size();
  if (deleted_column) {
    auto idx = p.index_of(*deleted_column);
    if (!idx) throw ForeignGenerator("'" + *deleted_column + "' is not a generator");
    if (deg.at(*deleted_column) == 0)
      throw InputError("deleted column '" + *deleted_column + "' has degree 0");
    col = *idx;
  } else {
    for (std::size_t j = 0; j < gens.size() && col == gens.size(); ++j)
      if (deg.at(gens[j]) != 0) col = j;
  }
  const std::int64_t d = deg.at(gens[col]);
  m = m.without_column(col);

  const std::size_t k = m.cols();
  if (k > m.rows()) return {};
  const std::vector<LaurentPoly> mins = minors(m, k);
  if (mins.empty()) return {};
  const LaurentPoly g = laurent_gcd(mins);

  // Deleting a column of degree d scales every maximal minor by
  // (t^d - 1)/(t - 1); undo it so the result does not depend on the column.
  const LaurentPoly one = LaurentPoly::constant(1);
  const LaurentPoly scale = LaurentPoly::t_power(d < 0 ? -d : d) - one;
  return canonicalize(divide_exact(g * (LaurentPoly::t_power(1) - one), scale));
}

}  // namespace knotcert

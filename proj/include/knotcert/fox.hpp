#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/group.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/matrix.hpp"

namespace knotcert {

/// Element of the integral group ring of a free group.
class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  GroupRingElement() = default;
  explicit GroupRingElement(Terms terms);
  static GroupRingElement of(const Word& w, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  /// w * e
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& e);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string() const;

 private:
  void add(const Word& w, const BigInt& c);
  Terms terms_;
};

/// Fox derivative d(w)/d(g).
GroupRingElement fox_derivative(const Word& w, std::string_view gen);

/// Sends each word to t^(weighted exponent sum). Throws UnmappedGenerator.
LaurentPoly abelianize_element(const GroupRingElement& e, const DegreeMap& d);

/// Abelianized Fox Jacobian: entry (i, j) is d(relator_i)/d(generator_j).
LaurentMatrix alexander_matrix(const Presentation& p, const DegreeMap& d);

struct ModulePresentation {
  std::vector<std::string> module_generators;
  LaurentMatrix relations;  // one row per relation, one column per generator
};

/// Canonical, deduplicated, zero-free generator list of an ideal of
/// Z[t, t^-1]. A list containing a unit collapses to {1}.
struct IdealGenerators {
  std::vector<LaurentPoly> gens;

  static IdealGenerators from(std::vector<LaurentPoly> polys);
  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return gens.empty(); }
  /// gcd of the generators, 0 for the zero ideal.
  LaurentPoly gcd() const;

  friend bool operator==(const IdealGenerators&, const IdealGenerators&) = default;
};

/// E_k: ideal of (n-k)-minors, n = column count. {1} when k >= n, zero ideal
/// when n-k exceeds the row count.
IdealGenerators elementary_ideal(const LaurentMatrix& m, std::size_t k);

/// Alexander polynomial of a group with infinite cyclic abelianization.
/// Throws NotInfiniteCyclicAbelianization. `deleted_column` defaults to the
/// first generator of nonzero degree.
LaurentPoly alexander_polynomial(const Presentation& p,
                                 std::optional<std::string> deleted_column = std::nullopt);

}  // namespace knotcert

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/laurent.hpp"

namespace knotcert {

/// One syllable g^k of a word; k != 0 in reduced words.
struct Syllable {
  std::string gen;
  std::int64_t exp = 1;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a free group: adjacent syllables never share a
/// generator. The identity is the empty word.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary syllable sequence (zero exponents allowed).
  static Word reduce(const std::vector<Syllable>& raw);
  static Word letter(std::string gen, std::int64_t exp = 1);
  /// Product of single letters, e.g. product({"a1","a2"}) = a1 a2.
  static Word product(const std::vector<std::string>& gens);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  /// Sum of |exponent| over syllables.
  std::int64_t letter_length() const;
  std::int64_t exponent_sum(std::string_view gen) const;
  bool contains(std::string_view gen) const;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  friend Word operator*(const Word& a, const Word& b);

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  /// Space-separated tokens `g` or `g^k`; the identity prints as "1".
  std::string to_string() const;

 private:
  std::vector<Syllable> syllables_;
};

Word commutator(const Word& a, const Word& b);

/// Replace every occurrence of g^k by replacement^k, then reduce.
Word substitute(const Word& w, std::string_view gen, const Word& replacement);
/// Simultaneous substitution; generators without an image are kept.
Word substitute(const Word& w, const std::map<std::string, Word>& images);

/// Conjugate of w whose first and last syllables have distinct generators
/// (or that has at most one syllable). Deterministic.
Word cyclic_reduce(const Word& w);
/// Equal up to conjugation (for cyclically reduced words: rotation).
bool cyclically_equivalent(const Word& a, const Word& b);
/// Equal up to cyclic permutation and inversion.
bool relator_equivalent(const Word& a, const Word& b);

/// Image in the integers under g -> degree(g).
using DegreeMap = std::map<std::string, std::int64_t>;

/// Finitely presented group. Relators are stored freely and cyclically
/// reduced. The Wirtinger flag marks a presentation with one redundant
/// relator among n generators and n relators.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               bool wirtinger = false);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool is_wirtinger() const { return wirtinger_; }
  bool has_generator(std::string_view g) const;
  std::optional<std::size_t> index_of(std::string_view g) const;

  /// Throws ForeignGenerator if w uses a symbol outside the generator list.
  void check_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  bool wirtinger_ = false;
};

bool is_valid_generator_name(std::string_view name);

/// Quotient by the normal closure of w.
Presentation add_relator(const Presentation& p, const Word& w);
/// Tietze I: new generator g with defining relator g * defining^-1.
Presentation add_generator(const Presentation& p, const std::string& g, const Word& defining);
/// Tietze II: drop g using a relator equivalent to g * defining^-1.
Presentation eliminate_generator(const Presentation& p, std::string_view g,
                                 const Word& defining);

struct AbelianizationResult {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  /// Present iff the abelianization is infinite cyclic.
  std::optional<DegreeMap> degree_map;
  /// Diagonal of the Smith form of the exponent-sum matrix.
  std::vector<BigInt> snf_diagonal;

  bool is_infinite_cyclic() const { return degree_map.has_value(); }
};

AbelianizationResult abelianization(const Presentation& p);

/// Weighted exponent sum of w under d; throws UnmappedGenerator.
std::int64_t degree_of(const Word& w, const DegreeMap& d);

}  // namespace knotcert

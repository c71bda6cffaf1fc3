#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotcert/constructions.hpp"
#include "knotcert/group.hpp"

namespace knotcert {

/// Which relator the two-generator torus knot group carries.
enum class TorusConvention {
  PowerEquality,   // x^p = y^q
  ProductTrivial,  // x^p y^q = 1
};

std::string to_string(TorusConvention c);

/// c^m * s with c = x^p central and s alternating x^i (1 <= i < p) and
/// y^j (1 <= j < q). Under ProductTrivial the syllables are written in
/// y^-1, so y^j in `syllables` stands for (y^-1)^j.
struct TorusNF {
  TorusKnotParams params;
  TorusConvention convention = TorusConvention::PowerEquality;
  std::int64_t central_exponent = 0;
  std::vector<Syllable> syllables;

  bool is_trivial() const { return central_exponent == 0 && syllables.empty(); }
  /// A word in x, y representing the same element.
  Word to_word() const;
  std::string to_string() const;

  friend bool operator==(const TorusNF&, const TorusNF&) = default;
};

/// Throws BadParams (needs p, q >= 2, coprime) or ForeignGenerator.
TorusNF normal_form(const TorusKnotParams& tk, const Word& w,
                    TorusConvention conv = TorusConvention::PowerEquality);

/// Abelianization of the torus knot group: {x: q, y: p} for PowerEquality,
/// {x: q, y: -p} for ProductTrivial.
DegreeMap torus_degree_map(const TorusKnotParams& tk, TorusConvention conv);

bool is_in_commutator_subgroup(const TorusKnotParams& tk, const Word& w,
                               TorusConvention conv = TorusConvention::PowerEquality);

/// Words over the source generators whose images should be x and y.
struct SurjectivityWitness {
  std::optional<Word> x;
  std::optional<Word> y;
};

struct RelatorVerdict {
  Word relator;
  Word image;
  TorusNF normal_form;
  bool trivial = false;
};

struct HomomorphismReport {
  TorusKnotParams target;
  TorusConvention convention = TorusConvention::PowerEquality;
  std::vector<RelatorVerdict> relators;
  bool homomorphism = false;
  bool x_generated = false;
  bool y_generated = false;

  bool surjective() const { return homomorphism && x_generated && y_generated; }
};

/// Checks that generator images kill every source relator and whether x and
/// y lie in the image.
HomomorphismReport verify_homomorphism(const Presentation& source, const TorusKnotParams& tk,
                                       const std::map<std::string, Word>& images,
                                       TorusConvention conv,
                                       const SurjectivityWitness& witness = {});

struct TorusMap {
  Presentation source;
  TorusKnotParams target;
  TorusConvention convention = TorusConvention::ProductTrivial;
  std::map<std::string, Word> images;
  SurjectivityWitness witness;
};

/// Gamma_p -> <x, y | x^p y^(p+1)>: u -> x, v -> y, x -> x, y -> y.
TorusMap fold_map(int p);

/// torus_wirtinger(p) -> <x, y | x^p y^(p+1)>: z -> x, a1 -> x y,
/// a(k+1) -> x^-1 a(k) x.
TorusMap wirtinger_to_standard(int p);

HomomorphismReport verify(const TorusMap& m);

/// Convention satisfied by x = z^-1, y = a1..ap in the Wirtinger group,
/// decided through the verified Wirtinger dictionary. nullopt if neither.
std::optional<TorusConvention> wirtinger_standard_generator_convention(int p);

}  // namespace knotcert

#pragma once

#include <random>
#include <string>
#include <vector>

#include "knotcert/group.hpp"
#include "knotcert/laurent.hpp"

namespace testutil {

using knotcert::BigInt;
using knotcert::LaurentPoly;
using knotcert::Syllable;
using knotcert::Word;

inline LaurentPoly P(std::int64_t min_exp, std::vector<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return LaurentPoly::from_coeffs(min_exp, c);
}

inline LaurentPoly T(std::int64_t e = 1) { return LaurentPoly::t_power(e); }
inline LaurentPoly C(long c) { return LaurentPoly::constant(c); }

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, long bound = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::int64_t> ex(-4, 6);
  std::uniform_int_distribution<long> co(-bound, bound);
  LaurentPoly f;
  for (int i = nterms(rng); i > 0; --i) f += LaurentPoly::monomial(co(rng), ex(rng));
  return f;
}

/// Unreduced random letter sequence, then reduced.
inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens,
                        int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Syllable> raw;
  for (int i = len(rng); i > 0; --i) raw.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return Word::reduce(raw);
}

}  // namespace testutil

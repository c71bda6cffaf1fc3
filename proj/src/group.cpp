#include "knotcert/group.hpp"

#include <algorithm>
#include <set>

#include "knotcert/errors.hpp"
#include "knotcert/matrix.hpp"

namespace knotcert {

Word Word::reduce(const std::vector<Syllable>& raw) {
  Word out;
  auto& stack = out.syllables_;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return out;
}

Word Word::letter(std::string gen, std::int64_t exp) {
  return reduce({Syllable{std::move(gen), exp}});
}

Word Word::product(const std::vector<std::string>& gens) {
  std::vector<Syllable> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) raw.push_back({g, 1});
  return reduce(raw);
}

std::int64_t Word::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::int64_t Word::exponent_sum(std::string_view gen) const {
  std::int64_t n = 0;
  for (const auto& s : syllables_)
    if (s.gen == gen) n += s.exp;
  return n;
}

bool Word::contains(std::string_view gen) const {
  return std::any_of(syllables_.begin(), syllables_.end(),
                     [&](const Syllable& s) { return s.gen == gen; });
}

Word Word::inverse() const {
  Word out;
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.syllables_.push_back({it->gen, -it->exp});
  return out;
}

Word Word::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  std::vector<Syllable> raw;
  for (std::int64_t i = 0; i < n; ++i)
    raw.insert(raw.end(), syllables_.begin(), syllables_.end());
  return reduce(raw);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw = a.syllables_;
  raw.insert(raw.end(), b.syllables_.begin(), b.syllables_.end());
  return Word::reduce(raw);
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word substitute(const Word& w, std::string_view gen, const Word& replacement) {
  return substitute(w, std::map<std::string, Word>{{std::string(gen), replacement}});
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.gen);
    if (it == images.end()) {
      raw.push_back(s);
      continue;
    }
    const Word piece = s.exp > 0 ? it->second : it->second.inverse();
    const std::int64_t reps = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t i = 0; i < reps; ++i)
      raw.insert(raw.end(), piece.syllables().begin(), piece.syllables().end());
  }
  return Word::reduce(raw);
}

Word cyclic_reduce(const Word& w) {
  Word cur = w;
  while (cur.syllable_count() >= 2 &&
         cur.syllables().front().gen == cur.syllables().back().gen) {
    // Conjugate by the last syllable: it merges into the first one.
    const auto& syl = cur.syllables();
    std::vector<Syllable> raw;
    raw.reserve(syl.size());
    raw.push_back(syl.back());
    raw.insert(raw.end(), syl.begin(), syl.end() - 1);
    cur = Word::reduce(raw);
  }
  return cur;
}

bool cyclically_equivalent(const Word& a, const Word& b) {
  const Word ca = cyclic_reduce(a);
  const Word cb = cyclic_reduce(b);
  const auto& sa = ca.syllables();
  const auto& sb = cb.syllables();
  if (sa.size() != sb.size()) return false;
  if (sa.size() <= 1) return sa == sb;
  for (std::size_t shift = 0; shift < sa.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < sa.size() && match; ++i)
      match = sa[(i + shift) % sa.size()] == sb[i];
    if (match) return true;
  }
  return false;
}

bool relator_equivalent(const Word& a, const Word& b) {
  return cyclically_equivalent(a, b) || cyclically_equivalent(a, b.inverse());
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           bool wirtinger)
    : generators_(std::move(generators)), wirtinger_(wirtinger) {
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    if (!is_valid_generator_name(g)) throw InvalidGenerator("bad generator name '" + g + "'");
    if (!seen.insert(g).second) throw InvalidGenerator("duplicate generator '" + g + "'");
  }
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    check_word(r);
    relators_.push_back(cyclic_reduce(r));
  }
}

bool Presentation::has_generator(std::string_view g) const { return index_of(g).has_value(); }

std::optional<std::size_t> Presentation::index_of(std::string_view g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return i;
  return std::nullopt;
}

void Presentation::check_word(const Word& w) const {
  for (const auto& s : w.syllables())
    if (!has_generator(s.gen))
      throw ForeignGenerator("'" + s.gen + "' is not a generator of the presentation");
}

Presentation add_relator(const Presentation& p, const Word& w) {
  p.check_word(w);
  std::vector<Word> rels = p.relators();
  rels.push_back(w);
  return Presentation(p.generators(), std::move(rels));
}

Presentation add_generator(const Presentation& p, const std::string& g, const Word& defining) {
  if (p.has_generator(g)) throw InvalidGenerator("generator '" + g + "' already present");
  p.check_word(defining);
  std::vector<std::string> gens = p.generators();
  gens.push_back(g);
  std::vector<Word> rels = p.relators();
  rels.push_back(Word::letter(g) * defining.inverse());
  return Presentation(std::move(gens), std::move(rels));
}

Presentation eliminate_generator(const Presentation& p, std::string_view g,
                                 const Word& defining) {
  if (!p.has_generator(g))
    throw ForeignGenerator("'" + std::string(g) + "' is not a generator of the presentation");
  p.check_word(defining);
  if (defining.contains(g))
    throw NoDefiningRelator("defining word for '" + std::string(g) + "' contains it");

  const Word target = Word::letter(std::string(g)) * defining.inverse();
  const auto& rels = p.relators();
  auto used = std::find_if(rels.begin(), rels.end(),
                           [&](const Word& r) { return relator_equivalent(r, target); });
  if (used == rels.end())
    throw NoDefiningRelator("no relator of the form " + target.to_string());

  std::vector<Word> out_rels;
  for (auto it = rels.begin(); it != rels.end(); ++it)
    if (it != used) out_rels.push_back(substitute(*it, g, defining));
  std::vector<std::string> gens;
  for (const auto& h : p.generators())
    if (h != g) gens.push_back(h);
  return Presentation(std::move(gens), std::move(out_rels));
}

AbelianizationResult abelianization(const Presentation& p) {
  const auto& gens = p.generators();
  const auto& rels = p.relators();
  IntMatrix a(rels.size(), gens.size(), BigInt(0));
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (const auto& s : rels[i].syllables()) a(i, *p.index_of(s.gen)) += s.exp;

  const SnfResult snf = smith_normal_form(a);
  AbelianizationResult res;
  res.snf_diagonal = snf.diagonal();
  const std::size_t rank = snf.rank();
  res.free_rank = gens.size() - rank;
  for (const BigInt& d : res.snf_diagonal)
    if (d > 1) res.torsion.push_back(d);

  if (res.free_rank == 1 && res.torsion.empty()) {
    // Column `rank` of V spans the kernel of the exponent-sum map.
    std::vector<BigInt> image(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) image[j] = snf.V(j, rank);
    auto first = std::find_if(image.begin(), image.end(), [](const BigInt& v) { return v != 0; });
    const int sign = (first != image.end() && *first < 0) ? -1 : 1;
    DegreeMap d;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!image[j].fits_slong_p()) throw InvariantViolation("degree does not fit in 64 bits");
      d[gens[j]] = sign * image[j].get_si();
    }
    res.degree_map = std::move(d);
  }
  return res;
}

std::int64_t degree_of(const Word& w, const DegreeMap& d) {
  std::int64_t deg = 0;
  for (const auto& s : w.syllables()) {
    auto it = d.find(s.gen);
    if (it == d.end()) throw UnmappedGenerator("'" + s.gen + "' has no degree");
    deg += it->second * s.exp;
  }
  return deg;
}

}  // namespace knotcert

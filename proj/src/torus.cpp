#include "knotcert/torus.hpp"

#include <numeric>

#include "knotcert/errors.hpp"

namespace knotcert {

std::string to_string(TorusConvention c) {
  return c == TorusConvention::PowerEquality ? "x^p = y^q" : "x^p y^q = 1";
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Word flip_y(const Word& w) { return substitute(w, "y", Word::letter("y", -1)); }

}  // namespace

Word TorusNF::to_word() const {
  std::vector<Syllable> raw{{"x", central_exponent * params.p}};
  raw.insert(raw.end(), syllables.begin(), syllables.end());
  Word w = Word::reduce(raw);
  return convention == TorusConvention::ProductTrivial ? flip_y(w) : w;
}

std::string TorusNF::to_string() const {
  if (is_trivial()) return "1";
  std::string out = "c^" + std::to_string(central_exponent);
  for (const auto& s : syllables) {
    std::string gen = s.gen;
    if (convention == TorusConvention::ProductTrivial && gen == "y") gen = "(y^-1)";
    out += " " + gen + "^" + std::to_string(s.exp);
  }
  return out;
}

TorusNF normal_form(const TorusKnotParams& tk, const Word& w, TorusConvention conv) {
  if (tk.p < 2 || tk.q < 2 || std::gcd(tk.p, tk.q) != 1)
    throw BadParams("word problem needs p, q >= 2 and coprime; got (" + std::to_string(tk.p) +
                    ", " + std::to_string(tk.q) + ")");
  for (const auto& s : w.syllables())
    if (s.gen != "x" && s.gen != "y")
      throw ForeignGenerator("'" + s.gen + "' is not x or y");

  // ProductTrivial: x^p y^q = 1 is x^p = (y^-1)^q, so work in y' = y^-1.
  const Word src = conv == TorusConvention::ProductTrivial ? flip_y(w) : w;

  TorusNF nf;
  nf.params = tk;
  nf.convention = conv;
  auto& stack = nf.syllables;
  for (const auto& s : src.syllables()) {
    const std::int64_t order = s.gen == "x" ? tk.p : tk.q;
    const std::int64_t carry = floor_div(s.exp, order);
    const std::int64_t rest = s.exp - carry * order;
    nf.central_exponent += carry;
    if (rest == 0) continue;
    if (!stack.empty() && stack.back().gen == s.gen) {
      std::int64_t merged = stack.back().exp + rest;
      if (merged >= order) {
        merged -= order;
        nf.central_exponent += 1;
      }
      if (merged == 0)
        stack.pop_back();
      else
        stack.back().exp = merged;
    } else {
      stack.push_back({s.gen, rest});
    }
  }
  return nf;
}

DegreeMap torus_degree_map(const TorusKnotParams& tk, TorusConvention conv) {
  return {{"x", tk.q}, {"y", conv == TorusConvention::PowerEquality ? tk.p : -tk.p}};
}

bool is_in_commutator_subgroup(const TorusKnotParams& tk, const Word& w, TorusConvention conv) {
  normal_form(tk, w, conv);  // validates parameters and alphabet
  return degree_of(w, torus_degree_map(tk, conv)) == 0;
}

HomomorphismReport verify_homomorphism(const Presentation& source, const TorusKnotParams& tk,
                                       const std::map<std::string, Word>& images,
                                       TorusConvention conv, const SurjectivityWitness& witness) {
  for (const auto& g : source.generators())
    if (!images.count(g)) throw UnmappedGenerator("no image for generator '" + g + "'");

  HomomorphismReport rep;
  rep.target = tk;
  rep.convention = conv;
  rep.homomorphism = true;
  for (const Word& r : source.relators()) {
    RelatorVerdict v;
    v.relator = r;
    v.image = substitute(r, images);
    v.normal_form = normal_form(tk, v.image, conv);
    v.trivial = v.normal_form.is_trivial();
    rep.homomorphism = rep.homomorphism && v.trivial;
    rep.relators.push_back(std::move(v));
  }

  auto reaches = [&](const std::string& target, const std::optional<Word>& wit) {
    const TorusNF goal = normal_form(tk, Word::letter(target), conv);
    for (const auto& [g, img] : images)
      if (source.has_generator(g) && normal_form(tk, img, conv) == goal) return true;
    if (!wit) return false;
    source.check_word(*wit);
    return normal_form(tk, substitute(*wit, images), conv) == goal;
  };
  rep.x_generated = reaches("x", witness.x);
  rep.y_generated = reaches("y", witness.y);
  return rep;
}

TorusMap fold_map(int p) {
  TorusMap m;
  m.source = gamma_presentation(p);
  m.target = TorusKnotParams::make(p, p + 1);
  m.convention = TorusConvention::ProductTrivial;
  m.images = {{"u", Word::letter("x")},
              {"v", Word::letter("y")},
              {"x", Word::letter("x")},
              {"y", Word::letter("y")}};
  return m;
}

TorusMap wirtinger_to_standard(int p) {
  TorusMap m;
  m.source = torus_wirtinger(p);
  m.target = TorusKnotParams::make(p, p + 1);
  m.convention = TorusConvention::ProductTrivial;
  const Word x = Word::letter("x");
  m.images["z"] = x;
  Word a = x * Word::letter("y");
  for (int k = 1; k <= p; ++k) {
    m.images["a" + std::to_string(k)] = a;
    a = x.inverse() * a * x;
  }
  m.witness.x = Word::letter("z");
  m.witness.y = Word::letter("z", -1) * Word::letter("a1");
  return m;
}

HomomorphismReport verify(const TorusMap& m) {
  return verify_homomorphism(m.source, m.target, m.images, m.convention, m.witness);
}

std::optional<TorusConvention> wirtinger_standard_generator_convention(int p) {
  const TorusMap m = wirtinger_to_standard(p);
  if (!verify(m).surjective()) return std::nullopt;
  const Word xw = Word::letter("z", -1);
  std::vector<std::string> strand;
  for (int k = 1; k <= p; ++k) strand.push_back("a" + std::to_string(k));
  const Word yw = Word::product(strand);
  const auto trivial = [&](const Word& w) {
    return normal_form(m.target, substitute(w, m.images), m.convention).is_trivial();
  };
  if (trivial(xw.pow(p) * yw.pow(p + 1))) return TorusConvention::ProductTrivial;
  if (trivial(xw.pow(p) * yw.pow(-(p + 1)))) return TorusConvention::PowerEquality;
  return std::nullopt;
}

}  // namespace knotcert

#include "knotcert/constructions.hpp"

#include <numeric>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

void require_p(int p, int min) {
  if (p < min)
    throw InvalidP("p must be >= " + std::to_string(min) + ", got " + std::to_string(p));
}

std::string indexed(const std::string& base, int k) { return base + std::to_string(k); }

Word letter(const std::string& g, std::int64_t e = 1) { return Word::letter(g, e); }

// Strand generators base1..basep.
std::vector<std::string> strands(const std::string& base, int p) {
  std::vector<std::string> out;
  for (int k = 1; k <= p; ++k) out.push_back(indexed(base, k));
  return out;
}

// z = a1..ap a1, z a1 z^-1 = ap, z a(k+1) z^-1 = ak.
std::vector<Word> wirtinger_relators(const std::string& twist, const std::string& base, int p) {
  const Word z = letter(twist);
  const Word zinv = z.inverse();
  std::vector<Word> rels;
  rels.push_back(z * (Word::product(strands(base, p)) * letter(indexed(base, 1))).inverse());
  rels.push_back(z * letter(indexed(base, 1)) * zinv * letter(indexed(base, p), -1));
  for (int k = 1; k < p; ++k)
    rels.push_back(z * letter(indexed(base, k + 1)) * zinv * letter(indexed(base, k), -1));
  return rels;
}

Word conjugate_by_t(std::int64_t e, const Word& w) {
  return letter("t", e) * w * letter("t", -e);
}

// prod_{k<p} t^(k(p+1)+1) g^-1 t^-(...) * prod_{k<=p} t^(p^2-kp) g t^-(p^2-kp)
Word tab_product_relator(const std::string& g, int p) {
  const std::int64_t pp = p;
  Word out;
  for (std::int64_t k = 0; k < pp; ++k) out = out * conjugate_by_t(k * (pp + 1) + 1, letter(g, -1));
  for (std::int64_t k = 0; k <= pp; ++k) out = out * conjugate_by_t(pp * pp - k * pp, letter(g));
  return out;
}

}  // namespace

TorusKnotParams TorusKnotParams::make(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 2 || std::gcd(p, q) != 1)
    throw BadParams("torus knot parameters need p >= 1, q >= 2, gcd(p, q) = 1; got (" +
                    std::to_string(p) + ", " + std::to_string(q) + ")");
  return TorusKnotParams{p, q};
}

Presentation torus_wirtinger(int p) {
  require_p(p, 2);
  std::vector<std::string> gens{"z"};
  for (auto& g : strands("a", p)) gens.push_back(g);
  return Presentation(std::move(gens), wirtinger_relators("z", "a", p), true);
}

Word tau_word(int p) {
  require_p(p, 2);
  return commutator(letter("a1"), Word::product(strands("a", p)));
}

Presentation standard_presentation(const TorusKnotParams& tk) {
  const auto checked = TorusKnotParams::make(tk.p, tk.q);
  return Presentation({"x", "y"}, {letter("x", checked.p) * letter("y", checked.q)});
}

DoubledKnot double_presentation(int p) {
  require_p(p, 2);
  std::vector<std::string> gens{"z"};
  for (auto& g : strands("a", p)) gens.push_back(g);
  gens.push_back("w");
  for (auto& g : strands("b", p)) gens.push_back(g);

  std::vector<Word> rels = wirtinger_relators("z", "a", p);
  for (auto& r : wirtinger_relators("w", "b", p)) rels.push_back(std::move(r));
  rels.push_back(letter("a1") * letter("b1", -1));

  Word word = commutator(letter("a1"), Word::product(strands("a", p))) *
              commutator(letter("b1"), Word::product(strands("b", p))).inverse();
  return DoubledKnot{Presentation(std::move(gens), std::move(rels)), std::move(word)};
}

Presentation gamma_presentation(int p) {
  require_p(p, 1);
  const Word u = letter("u"), v = letter("v"), x = letter("x"), y = letter("y");
  return Presentation({"u", "v", "x", "y"},
                      {u.pow(p) * v.pow(p + 1), x.pow(p) * y.pow(p + 1),
                       u * v * (x * y).inverse(), v * u * (y * x).inverse()});
}

ConsistencyReport check_gamma_reconciliation(const Presentation& gamma, int p) {
  ConsistencyReport rep;
  const Word u = letter("u"), v = letter("v"), x = letter("x"), y = letter("y");
  auto fail = [&](std::string why) {
    rep.verified = false;
    rep.failure = std::move(why);
    return rep;
  };
  auto has = [&](const Word& r) {
    for (const Word& s : gamma.relators())
      if (relator_equivalent(s, r)) return true;
    return false;
  };

  if (!has(u.pow(p) * v.pow(p + 1)) || !has(x.pow(p) * y.pow(p + 1)))
    return fail("torus factor relators u^p v^(p+1), x^p y^(p+1) not both present");

  // Meridians in standard generators: a1 = (xy)^-1, b1 = (uv)^-1.
  const Word a1 = (x * y).inverse();
  const Word b1 = (u * v).inverse();
  const Word sum_word = commutator(a1, y) * commutator(b1, v).inverse();
  rep.steps.push_back({"connected-sum word with a1 = (xy)^-1, b1 = (uv)^-1", sum_word});

  const Word meridian = u * v * (x * y).inverse();
  if (!has(meridian)) return fail("relator uv = xy not present");
  const Word u_image = x * y * v.inverse();
  const Word meridian_image = substitute(a1 * b1.inverse(), "u", u_image);
  if (!meridian_image.is_identity())
    return fail("meridian identification does not vanish under uv = xy");
  const Word rewritten = substitute(sum_word, "u", u_image);
  rep.steps.push_back({"apply uv = xy (u -> x y v^-1); a1 b1^-1 becomes 1", rewritten});

  for (const Word& r : gamma.relators()) {
    if (relator_equivalent(r, meridian)) continue;
    if (relator_equivalent(substitute(r, "u", u_image), rewritten)) {
      rep.steps.push_back({"matches relator " + r.to_string() + " up to cyclic permutation and inversion",
                           cyclic_reduce(rewritten)});
      rep.verified = true;
      return rep;
    }
  }
  return fail("rewritten connected-sum word matches no relator");
}

ConsistencyReport derive_gamma_consistency(int p) {
  require_p(p, 2);
  return check_gamma_reconciliation(gamma_presentation(p), p);
}

Presentation gamma_tab_by_substitution(int p) {
  require_p(p, 1);
  const Word t = letter("t"), a = letter("a"), b = letter("b");
  const Word tp = letter("t", p), tmp = letter("t", -p);

  Presentation g = gamma_presentation(p);
  g = add_generator(g, "t", letter("x") * letter("y"));
  g = add_generator(g, "a", tp * letter("v"));
  g = add_generator(g, "b", tp * letter("y"));
  g = eliminate_generator(g, "v", tmp * a);
  g = eliminate_generator(g, "y", tmp * b);
  g = eliminate_generator(g, "x", t * b.inverse() * tp);
  g = eliminate_generator(g, "u", t * a.inverse() * tp);
  return g;
}

Presentation gamma_tab_literal(int p) {
  require_p(p, 1);
  const Word t = letter("t"), a = letter("a"), b = letter("b");
  return Presentation({"t", "a", "b"},
                      {tab_product_relator("a", p), tab_product_relator("b", p),
                       a * t * a.inverse() * t.inverse() * t * b * t.inverse() * b.inverse()});
}

Presentation gamma_tab_presentation(int p) {
  Presentation sub = gamma_tab_by_substitution(p);
  const Presentation lit = gamma_tab_literal(p);
  if (sub.generators() != lit.generators() || sub.relators() != lit.relators()) {
    std::string detail;
    for (std::size_t i = 0; i < std::max(sub.relators().size(), lit.relators().size()); ++i) {
      const auto get = [i](const Presentation& q) {
        return i < q.relators().size() ? q.relators()[i].to_string() : std::string("<none>");
      };
      detail += "\n  relator " + std::to_string(i) + ": " + get(sub) + " vs " + get(lit);
    }
    throw MismatchError("t,a,b presentation: substitution and literal routes differ" + detail);
  }
  return sub;
}

LaurentPoly p_poly(int p, PolyForm form) {
  require_p(p, 1);
  const std::int64_t pp = p;
  const LaurentPoly one = LaurentPoly::constant(1);
  const auto t = [](std::int64_t e) { return LaurentPoly::t_power(e); };
  if (form == PolyForm::Sum) {
    LaurentPoly f;
    for (std::int64_t k = 0; k <= pp; ++k) f += t(pp * pp - k * pp);
    for (std::int64_t k = 0; k < pp; ++k) f -= t(k * (pp + 1) + 1);
    return canonicalize(f);
  }
  const LaurentPoly num = (t(pp * (pp + 1)) - one) * (t(1) - one);
  const LaurentPoly den = (t(pp + 1) - one) * (t(pp) - one);
  auto q = try_divide(num, den);
  if (!q) throw InvariantViolation("closed form of p_poly is not exact for p = " + std::to_string(p));
  return canonicalize(*q);
}

OrderIdeal order_ideal(int p) {
  const LaurentPoly P = p_poly(p);
  const LaurentPoly one_minus_t = LaurentPoly::constant(1) - LaurentPoly::t_power(1);
  LaurentMatrix m(3, 2);
  m(0, 0) = P;
  m(1, 1) = P;
  m(2, 0) = one_minus_t;
  m(2, 1) = -one_minus_t;
  OrderIdeal out{ModulePresentation{{"a", "b"}, m}, {}};
  out.ideal = elementary_ideal(out.module.relations, 0);
  return out;
}

GammaArtifacts gamma_artifacts(int p) {
  GammaArtifacts g;
  g.p = p;
  g.presentation = gamma_presentation(p);
  g.tab_presentation = gamma_tab_presentation(p);
  g.p_poly = p_poly(p);
  if (g.p_poly != p_poly(p, PolyForm::Sum))
    throw InvariantViolation("sum and closed forms of p_poly differ for p = " + std::to_string(p));
  OrderIdeal oi = order_ideal(p);
  g.module_presentation = std::move(oi.module);
  g.order_ideal = std::move(oi.ideal);
  g.framing_defect = p + 1;

  g.abelianization = abelianization(g.presentation);
  g.alexander_polynomial = alexander_polynomial(g.presentation);

  const AbelianizationResult tab_ab = abelianization(g.tab_presentation);
  if (tab_ab.degree_map) {
    const LaurentMatrix fox = alexander_matrix(g.tab_presentation, *tab_ab.degree_map)
                                  .without_column(*g.tab_presentation.index_of("t"));
    const LaurentMatrix& mod = g.module_presentation.relations;
    bool same = fox.rows() == mod.rows() && fox.cols() == mod.cols();
    for (std::size_t i = 0; same && i < fox.rows(); ++i)
      for (std::size_t j = 0; same && j < fox.cols(); ++j)
        same = canonicalize(fox(i, j)) == canonicalize(mod(i, j));
    g.module_matches_fox = same;
  }

  if (g.abelianization.degree_map) {
    g.fox_e1 = elementary_ideal(alexander_matrix(g.presentation, *g.abelianization.degree_map), 1);
    g.fox_e1_gcd_matches = g.fox_e1.gcd() == g.order_ideal.gcd();
  }

  if (p >= 2) {
    const LaurentPoly phi = cyclotomic(static_cast<std::int64_t>(p) * (p + 1));
    bool all = true;
    for (const auto& f : g.order_ideal.gens) all = all && divides(phi, f);
    for (const auto& f : g.fox_e1.gens) all = all && divides(phi, f);
    g.root_of_unity_in_both = all;
  }
  return g;
}

std::string to_string(CertificateMode m) {
  return m == CertificateMode::Cyclotomic ? "cyclotomic" : "unit_ideal";
}

CertificateMode certificate_mode_from_string(const std::string& s) {
  if (s == "cyclotomic") return CertificateMode::Cyclotomic;
  if (s == "unit_ideal") return CertificateMode::UnitIdeal;
  throw InputError("unknown certificate mode '" + s + "'");
}

bool DistinctnessCertificate::valid() const {
  if (mode == CertificateMode::Cyclotomic) return divides_in_k && !divides_in_p;
  // The order ideal is P * (P, t - 1): the unit ideal iff P is a unit.
  return is_unit(p_poly_p) != is_unit(p_poly_k);
}

DistinctnessCertificate distinctness_certificate(int p, int k) {
  if (p < 1 || p >= k)
    throw BadPair("need 1 <= p < k, got p = " + std::to_string(p) + ", k = " + std::to_string(k));
  DistinctnessCertificate c;
  c.p = p;
  c.k = k;
  c.mode = p == 1 ? CertificateMode::UnitIdeal : CertificateMode::Cyclotomic;
  c.phi_index = static_cast<std::int64_t>(k) * (k + 1);
  c.phi = cyclotomic(c.phi_index);
  c.p_poly_p = p_poly(p);
  c.p_poly_k = p_poly(k);
  const LaurentPoly second = canonicalize((LaurentPoly::t_power(1) - LaurentPoly::constant(1)) * c.p_poly_k);
  c.divides_in_k = divides(c.phi, c.p_poly_k) && divides(c.phi, second);
  // Phi is irreducible, so Phi not dividing P_p means it does not divide P_p^2.
  c.divides_in_p = divides(c.phi, c.p_poly_p);
  return c;
}

std::string audit_certificate(const DistinctnessCertificate& c) {
  DistinctnessCertificate fresh;
  try {
    fresh = distinctness_certificate(c.p, c.k);
  } catch (const Error& e) {
    return e.what();
  }
  if (fresh.mode != c.mode) return "mode mismatch";
  if (fresh.phi_index != c.phi_index) return "phi_index mismatch";
  if (fresh.phi != c.phi) return "cyclotomic polynomial mismatch";
  if (fresh.p_poly_p != c.p_poly_p || fresh.p_poly_k != c.p_poly_k) return "p_poly mismatch";
  if (fresh.divides_in_k != c.divides_in_k || fresh.divides_in_p != c.divides_in_p)
    return "divisibility flags mismatch";
  return {};
}

}  // namespace knotcert

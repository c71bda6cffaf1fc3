#include "knotcert/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "knotcert/errors.hpp"

namespace knotcert {

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, std::int64_t exponent) {
  LaurentPoly f;
  f.add_term(exponent, c);
  return f;
}

LaurentPoly LaurentPoly::t_power(std::int64_t exponent) {
  return monomial(BigInt(1), exponent);
}

LaurentPoly LaurentPoly::from_coeffs(std::int64_t min_exp,
                                     const std::vector<BigInt>& coeffs) {
  LaurentPoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    f.add_term(min_exp + static_cast<std::int64_t>(i), coeffs[i]);
  return f;
}

std::int64_t LaurentPoly::min_exp() const { return terms_.begin()->first; }
std::int64_t LaurentPoly::max_exp() const { return terms_.rbegin()->first; }
const BigInt& LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

BigInt LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<BigInt> LaurentPoly::dense() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(max_exp() - min_exp() + 1), BigInt(0));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - min_exp())] = c;
  return out;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  if (k == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

void LaurentPoly::add_term(std::int64_t exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly out;
  BigInt prod;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      prod = cf * cg;
      out.add_term(ef + eg, prod);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly laurent_arith(ArithOp op, const LaurentPoly& f, const LaurentPoly& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  return {};
}

LaurentPoly canonicalize(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly out = f.shifted(-f.min_exp());
  if (out.leading_coeff() < 0) out = -out;
  return out;
}

bool is_unit(const LaurentPoly& f) {
  return f.term_count() == 1 && abs(f.leading_coeff()) == 1;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero("divisor is the zero polynomial");
  if (f.is_zero()) return LaurentPoly{};

  // Both shifted to have a nonzero constant term; t is a unit so divisibility
  // in the Laurent ring reduces to divisibility in Z[t].
  const LaurentPoly g0 = g.shifted(-g.min_exp());
  LaurentPoly rem = f.shifted(-f.min_exp());
  const BigInt& lead = g0.leading_coeff();
  const std::int64_t gdeg = g0.max_exp();

  LaurentPoly::Terms quotient;
  BigInt qc;
  while (!rem.is_zero() && rem.max_exp() >= gdeg) {
    const BigInt& rc = rem.leading_coeff();
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead.get_mpz_t());
    const std::int64_t shift = rem.max_exp() - gdeg;
    quotient.emplace(shift, qc);
    rem -= LaurentPoly::monomial(qc, shift) * g0;
  }
  if (!rem.is_zero()) return std::nullopt;
  return LaurentPoly(std::move(quotient)).shifted(f.min_exp() - g.min_exp());
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw NotDivisible("(" + g.to_string() + ") does not divide (" + f.to_string() + ")");
  return *std::move(q);
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) { return try_divide(f, g).has_value(); }

LaurentPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw InvalidIndex("cyclotomic index must be >= 1, got " + std::to_string(n));
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());

  std::map<std::int64_t, LaurentPoly> phi;
  const LaurentPoly one = LaurentPoly::constant(1);
  for (std::int64_t d : divisors) {
    LaurentPoly f = LaurentPoly::t_power(d) - one;
    for (const auto& [e, phi_e] : phi) {
      if (d % e == 0) f = divide_exact(f, phi_e);
    }
    phi.emplace(d, std::move(f));
  }
  return phi.at(n);
}

namespace {

// Primitive part with nonzero constant term and positive leading coefficient.
LaurentPoly primitive_part(const LaurentPoly& f) {
  LaurentPoly g = canonicalize(f);
  BigInt c = g.content();
  if (c == 1) return g;
  LaurentPoly::Terms terms;
  for (const auto& [e, coeff] : g.terms()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    terms.emplace(e, std::move(q));
  }
  return LaurentPoly(std::move(terms));
}

// Pseudo-remainder of a by b in Z[t]; a constant multiple of the textbook prem.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const LaurentPoly lead = LaurentPoly::constant(b.leading_coeff());
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    LaurentPoly step = LaurentPoly::monomial(a.leading_coeff(), a.max_exp() - b.max_exp()) * b;
    a = lead * a - step;
  }
  return a;
}

// gcd of two primitive polynomials with nonzero constant terms.
LaurentPoly primitive_gcd(LaurentPoly a, LaurentPoly b) {
  if (a.max_exp() < b.max_exp()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.max_exp() == 0) return LaurentPoly::constant(1);
    LaurentPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a);
}

}  // namespace

LaurentPoly laurent_gcd(std::span<const LaurentPoly> fs) {
  BigInt content = 0;
  std::optional<LaurentPoly> prim;
  for (const LaurentPoly& f : fs) {
    if (f.is_zero()) continue;
    BigInt c = f.content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    LaurentPoly pf = primitive_part(f);
    if (!prim) {
      prim = std::move(pf);
    } else if (prim->max_exp() > 0) {
      prim = primitive_gcd(*prim, pf);
    }
  }
  if (!prim) throw AllZero("gcd of an all-zero list is undefined");
  return canonicalize(LaurentPoly::constant(content) * *prim);
}

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  const LaurentPoly pair[] = {f, g};
  return laurent_gcd(pair);
}

}  // namespace knotcert

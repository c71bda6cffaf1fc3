#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace knotcert {

using BigInt = mpz_class;

/// Element of Z[t, t^-1]. Stored sparsely; no stored coefficient is zero and
/// the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, std::int64_t exponent);
  /// t^e.
  static LaurentPoly t_power(std::int64_t exponent);
  /// Dense ascending coefficients starting at `min_exp`.
  static LaurentPoly from_coeffs(std::int64_t min_exp,
                                 const std::vector<BigInt>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // The following three require a nonzero polynomial.
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  const BigInt& leading_coeff() const;

  BigInt coeff(std::int64_t exponent) const;
  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  /// Ascending coefficients from min_exp() to max_exp(), zeros included.
  std::vector<BigInt> dense() const;
  /// Value at t = 1.
  BigInt at_one() const;

  LaurentPoly shifted(std::int64_t k) const;

  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }

  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    return f.terms_ == g.terms_;
  }

  /// Human-readable form in descending order, e.g. "t^2 - t + 1".
  std::string to_string() const;

 private:
  void add_term(std::int64_t exponent, const BigInt& c);

  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul };
LaurentPoly laurent_arith(ArithOp op, const LaurentPoly& f, const LaurentPoly& g);

/// The associate u*f (u = +-t^k) with minimum exponent 0 and positive
/// leading coefficient.
LaurentPoly canonicalize(const LaurentPoly& f);

/// True for +-t^k.
bool is_unit(const LaurentPoly& f);

/// Quotient q with f = q*g, or nullopt when g does not divide f.
/// Throws DivisionByZero when g = 0.
std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Throws NotDivisible or DivisionByZero.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Does g divide f in Z[t, t^-1]?
bool divides(const LaurentPoly& g, const LaurentPoly& f);

/// Phi_n. Throws InvalidIndex for n < 1.
LaurentPoly cyclotomic(std::int64_t n);

/// Canonical gcd of a nonempty list. Throws AllZero if every input is zero.
LaurentPoly laurent_gcd(std::span<const LaurentPoly> fs);
LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace knotcert

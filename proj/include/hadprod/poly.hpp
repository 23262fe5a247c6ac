#ifndef HADPROD_POLY_HPP
#define HADPROD_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hadprod {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when a caller violates an operation's documented precondition.
/// The message names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over the rationals, ascending coefficients.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree (`degree()` returns `std::nullopt`).
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  /// x + c
  static Poly linear(const Rational& c);
  /// (x + c)^k
  static Poly linear_power(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero past the end.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& p, std::size_t k);

/// order-th derivative; zero once order exceeds the degree.
Poly derivative(const Poly& p, std::size_t order = 1);

/// Horner evaluation.
Rational evaluate(const Poly& p, const Rational& x);

/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// p(x + c), computed by repeated synthetic division (Taylor shift).
Poly taylor_shift(const Poly& p, const Rational& c);

/// x^d h(1/x). Requires deg h <= d.
Poly reverse(const Poly& h, std::size_t d);

/// (-1)^d f(-x-1). Requires deg f <= d.
Poly reflect(const Poly& f, std::size_t d);

/// Euclidean division; throws PreconditionError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b when b divides a; returns nullopt when the remainder is nonzero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic gcd. Throws PreconditionError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Monic square-free part p / gcd(p, p').
Poly square_free_part(const Poly& p);

/// Scales by the leading coefficient's inverse.
Poly monic(const Poly& p);

/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0;
/// zero for k < 0.
Integer binomial(long n, long k);

/// The polynomial C(x + shift, k) = (x+shift)(x+shift-1)...(x+shift-k+1)/k!.
Poly binomial_poly(long shift, std::size_t k);

bool all_nonnegative(const Poly& p);
bool all_nonnegative(const std::vector<Rational>& v);

/// "1,3,10,8": ascending, comma-separated; "0" for the zero polynomial.
std::string to_csv(const Poly& p);
/// "8x^3 + 10x^2 + 3x + 1".
std::string to_pretty(const Poly& p);

} // namespace hadprod

#endif

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace kpg {

/// mpq_class(num, den) does not reduce the fraction; this does.
mpq_class make_rational(long num, long den);

// Dense univariate polynomial with exact rational coefficients.
// coeff(i) is the coefficient of q^i.  No trailing zero coefficients are
// stored, so for nonzero polynomials degree() == coeffs().size() - 1 and
// equality is plain structural equality.  All arithmetic is exact.
class RationalPoly {
 public:
  RationalPoly() = default;  // the zero polynomial
  explicit RationalPoly(std::vector<mpq_class> coeffs);

  static RationalPoly constant(const mpq_class& c);
  static RationalPoly variable();  // q
  static RationalPoly monomial(const mpq_class& c, int deg);
  static RationalPoly from_int_coeffs(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool has_integer_coeffs() const;

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval_int(long x) const;  // throws std::domain_error if not an integer

  // p(q^j): every exponent is scaled by j
  RationalPoly substitute_power(int j) const;

  // exact quotient; throws std::domain_error if the division leaves a remainder
  RationalPoly divide_exact(const RationalPoly& divisor) const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

  // human-readable form, highest power first, e.g. "2q^2 - 2q"
  std::string str(const std::string& var = "q") const;

 private:
  std::vector<mpq_class> coeffs_;
  void normalize();
};

/// Classical Moebius function; m >= 1.
int mobius(long m);

// Number of Frobenius orbits of elements of exact degree m over F_q, as a
// polynomial in q: (1/m) sum_{j|m} mu(j) q^(m/j) for m >= 2.  For m = 1 the
// orbit set is F_q^x, so the result is q - 1.
RationalPoly phi_poly(int m);

/// binom(z, c) = z(z-1)...(z-c+1)/c! with a polynomial argument; c >= 1.
RationalPoly binomial_poly(const RationalPoly& z, long c);

// Delta(b, z) = binom(z, b1) binom(z - b1, b2) ... ; the coefficients are
// rational but in general not integral.
RationalPoly delta_poly(const std::vector<int>& b, const RationalPoly& z);

// Unique polynomial of degree < points.size() through the given points.
// Throws std::invalid_argument on duplicate x-values.
RationalPoly lagrange_interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points);

}  // namespace kpg

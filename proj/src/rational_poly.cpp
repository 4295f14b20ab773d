#include "kpg/rational_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kpg {

mpq_class make_rational(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const mpq_class& c) {
  return RationalPoly(std::vector<mpq_class>{c});
}

RationalPoly RationalPoly::variable() { return monomial(1, 1); }

RationalPoly RationalPoly::monomial(const mpq_class& c, int deg) {
  std::vector<mpq_class> v(deg + 1, mpq_class(0));
  v[deg] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<mpq_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return RationalPoly(std::move(v));
}

mpq_class RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

bool RationalPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

mpq_class RationalPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class RationalPoly::eval_int(long x) const {
  mpq_class v = eval(mpq_class(x));
  if (v.get_den() != 1) throw std::domain_error("eval_int: value is not an integer");
  return v.get_num();
}

RationalPoly RationalPoly::substitute_power(int j) const {
  if (j < 1) throw std::invalid_argument("substitute_power: j must be >= 1");
  if (is_zero() || j == 1) return *this;
  std::vector<mpq_class> v(static_cast<size_t>(degree()) * j + 1, mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i * j] = coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<mpq_class> v(coeffs_);
  for (auto& c : v) c = -c;
  return RationalPoly(std::move(v));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) { return *this = *this * o; }

RationalPoly RationalPoly::divide_exact(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (is_zero()) return RationalPoly();
  if (degree() < divisor.degree()) throw std::domain_error("divide_exact: not divisible");
  std::vector<mpq_class> rem(coeffs_);
  std::vector<mpq_class> quot(degree() - divisor.degree() + 1, mpq_class(0));
  const mpq_class& lead = divisor.coeffs_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    mpq_class f = rem[i + divisor.degree()] / lead;
    quot[i] = f;
    if (f != 0)
      for (size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[i + j] -= f * divisor.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("divide_exact: not divisible");
  return RationalPoly(std::move(quot));
}

namespace {

std::string rational_str(const mpq_class& c) { return c.get_str(); }

// one term without sign, e.g. "2q^2", "q", "(1/2)q^3", "5"
std::string term_str(const mpq_class& mag, int deg, const std::string& var) {
  std::ostringstream os;
  bool frac = mag.get_den() != 1;
  if (deg == 0) {
    os << rational_str(mag);
    return os.str();
  }
  if (mag != 1) {
    if (frac)
      os << "(" << rational_str(mag) << ")";
    else
      os << rational_str(mag);
  }
  os << var;
  if (deg > 1) os << "^" << deg;
  return os.str();
}

}  // namespace

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_str(mag, i, var);
  }
  return os.str();
}

int mobius(long m) {
  if (m < 1) throw std::invalid_argument("mobius: m must be >= 1");
  int result = 1;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

RationalPoly phi_poly(int m) {
  if (m < 1) throw std::invalid_argument("phi_poly: m must be >= 1");
  if (m == 1) return RationalPoly::from_int_coeffs({-1, 1});  // q - 1
  std::vector<mpq_class> v(m + 1, mpq_class(0));
  for (int j = 1; j <= m; ++j) {
    if (m % j != 0) continue;
    v[m / j] += make_rational(mobius(j), m);
  }
  return RationalPoly(std::move(v));
}

RationalPoly binomial_poly(const RationalPoly& z, long c) {
  if (c < 1) throw std::invalid_argument("binomial_poly: c must be >= 1");
  RationalPoly acc = RationalPoly::constant(1);
  mpz_class fact = 1;
  for (long i = 0; i < c; ++i) {
    acc *= z - RationalPoly::constant(mpq_class(i));
    fact *= (i + 1);
  }
  return acc * RationalPoly::constant(mpq_class(mpz_class(1), fact));
}

RationalPoly delta_poly(const std::vector<int>& b, const RationalPoly& z) {
  if (b.empty()) throw std::invalid_argument("delta_poly: b must be nonempty");
  RationalPoly acc = RationalPoly::constant(1);
  long shift = 0;
  for (int bi : b) {
    if (bi < 1) throw std::invalid_argument("delta_poly: entries of b must be >= 1");
    acc *= binomial_poly(z - RationalPoly::constant(mpq_class(shift)), bi);
    shift += bi;
  }
  return acc;
}

RationalPoly lagrange_interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
  if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
  {
    std::set<mpq_class> xs;
    for (const auto& [x, y] : points) xs.insert(x);
    if (xs.size() != points.size())
      throw std::invalid_argument("lagrange_interpolate: duplicate x-values");
  }
  // Newton form: divided differences, then expand.
  const size_t n = points.size();
  std::vector<mpq_class> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  RationalPoly result = RationalPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    RationalPoly lin(
        std::vector<mpq_class>{mpq_class(-points[i].first), mpq_class(1)});  // q - x_i
    result = result * lin + RationalPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace kpg

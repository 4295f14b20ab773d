#include "kpg/kcount.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kpg/errors.hpp"

namespace kpg {

namespace {

nlohmann::ordered_json coeffs_to_json_int(const RationalPoly& p, const char* what) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw InternalError(std::string(what) + ": non-integer coefficient");
    if (!c.get_num().fits_slong_p())
      throw std::overflow_error(std::string(what) + ": coefficient exceeds 64 bits");
    arr.push_back(c.get_num().get_si());
  }
  return arr;
}

nlohmann::ordered_json coeffs_to_json_rat(const RationalPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

}  // namespace

nlohmann::ordered_json KReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["d"] = d.dims();
  j["k_coeffs"] = coeffs_to_json_int(k, "k_poly");
  // the paper-facing presentation divides out q - 1
  RationalPoly q_minus_1 = RationalPoly::from_int_coeffs({-1, 1});
  try {
    RationalPoly cofactor = k.divide_exact(q_minus_1);
    j["factored_hint"] = "(q - 1) * (" + cofactor.str() + ")";
  } catch (const std::domain_error&) {
    // no hint if q - 1 does not divide (does not happen for valid inputs)
  }
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const PsiTerm& t : per_psi) {
    nlohmann::ordered_json item;
    item["psi"] = t.psi.to_json().at("psi");
    item["class_size"] = coeffs_to_json_rat(t.class_size);
    item["f_value"] = coeffs_to_json_int(t.f_value, "f_value");
    terms.push_back(std::move(item));
  }
  j["per_psi"] = std::move(terms);
  return j;
}

KReport k_poly(int n, const DimensionVector& d) {
  if (n < 1) throw std::invalid_argument("k_poly: n must be >= 1");
  if (d.n() != n) throw std::invalid_argument("k_poly: d must end at n");
  KReport report{n, d, RationalPoly(), {}};
  for (const PsiMap& psi : enumerate_psi(n)) {
    PsiTerm term{psi, psi_class_size(psi), f_value_poly(psi, d)};
    report.k += term.class_size * term.f_value;
    report.per_psi.push_back(std::move(term));
  }
  if (!report.k.has_integer_coeffs())
    throw InternalError("k_poly: assembled polynomial has non-integer coefficients");
  return report;
}

unsigned long long k_eval(int n, const DimensionVector& d, long q0) {
  if (!is_prime_power(q0)) throw std::invalid_argument("k_eval: q0 must be a prime power");
  mpz_class v = k_poly(n, d).k.eval_int(q0);
  if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("k_eval: value out of range");
  return v.get_ui();
}

std::vector<DimensionVector> associated_vectors(int n, const DimensionVector& d) {
  std::vector<int> blocks = d.block_sizes();
  std::sort(blocks.begin(), blocks.end());
  std::set<DimensionVector> out;
  do {
    std::vector<int> dims;
    int acc = 0;
    for (int b : blocks) {
      acc += b;
      dims.push_back(acc);
    }
    out.insert(DimensionVector(std::move(dims)));
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  (void)n;
  return {out.begin(), out.end()};
}

AssociationReport check_association_invariance(int n, const DimensionVector& d) {
  AssociationReport report{true, {}};
  for (const DimensionVector& dv : associated_vectors(n, d))
    report.witnesses.emplace_back(dv, k_poly(n, dv).k);
  for (const auto& [dv, poly] : report.witnesses)
    if (!(poly == report.witnesses.front().second)) report.all_equal = false;
  return report;
}

std::vector<DimensionVector> all_dimension_vectors(int n) {
  if (n < 1) throw std::invalid_argument("all_dimension_vectors: n must be >= 1");
  std::vector<DimensionVector> out;
  // subsets of {1, ..., n-1}, plus the forced endpoint n
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> dims;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) dims.push_back(i);
    dims.push_back(n);
    out.emplace_back(std::move(dims));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kpg

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kpg/flags.hpp"
#include "kpg/psi.hpp"
#include "kpg/rational_poly.hpp"

namespace kpg {

struct PsiTerm {
  PsiMap psi;
  RationalPoly class_size;  // |psi~|, rational coefficients in general
  RationalPoly f_value;     // f_P^G at this label, integer coefficients
};

// The counting polynomial together with its per-label breakdown.  The
// summands do not have integer coefficients individually; the total does,
// which k_poly asserts.
struct KReport {
  int n;
  DimensionVector d;
  RationalPoly k;  // sum of class_size * f_value over all labels
  std::vector<PsiTerm> per_psi;

  nlohmann::ordered_json to_json() const;
};

// Number of orbits of the flag-type-d parabolic acting on GL_n(q) by
// conjugation, as an exact polynomial in q.  Throws InternalError if the
// assembled polynomial fails the integrality the theory guarantees.
KReport k_poly(int n, const DimensionVector& d);

/// k_poly evaluated at a prime power
unsigned long long k_eval(int n, const DimensionVector& d, long q0);

/// all dimension vectors with the same block-size multiset as d, sorted
std::vector<DimensionVector> associated_vectors(int n, const DimensionVector& d);

struct AssociationReport {
  bool all_equal;
  std::vector<std::pair<DimensionVector, RationalPoly>> witnesses;
};

/// recompute k for every associated dimension vector and compare
AssociationReport check_association_invariance(int n, const DimensionVector& d);

/// every dimension vector for n (2^(n-1) of them), sorted
std::vector<DimensionVector> all_dimension_vectors(int n);

}  // namespace kpg

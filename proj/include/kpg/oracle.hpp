#pragma once

#include <vector>

#include "kpg/flags.hpp"
#include "kpg/gfq.hpp"
#include "kpg/partitions.hpp"
#include "kpg/psi.hpp"

namespace kpg {

// One conjugacy class representative of GL_n(q): a generalized Jordan form
// built from distinct monic irreducibles (never X) with attached partitions.
struct GammaRep {
  std::vector<std::pair<FqPoly, Partition>> blocks;  // distinct f, sum deg(f)*|lambda| = n
  FqMatrix matrix;                                   // the representative itself

  /// degree/partition profile: the label this class contributes to
  PsiMap psi() const;
};

// One representative per conjugacy class of GL_n(q), deterministically
// ordered (labels in enumeration order, then irreducibles assigned in
// lexicographic order).
std::vector<GammaRep> enumerate_gamma(const Fq& F, int n);

// A flag of type d as nested reduced-echelon row bases.
struct FlagRep {
  std::vector<FqMatrix> subspaces;  // dims d_1, ..., d_t
};

/// every flag of type d exactly once
std::vector<FlagRep> enumerate_flags(const Fq& F, const DimensionVector& d);

/// number of x-stable flags of type d (= conjugates of the parabolic containing x)
unsigned long long fixed_flag_count(const FqMatrix& x, const DimensionVector& d);

// Brute-force count of parabolic-conjugation orbits on GL_n(q): sum of
// fixed_flag_count over class representatives.  Refuses instances whose
// estimated work (classes x flags) exceeds the budget.  The sum over
// representatives runs in parallel unless parallel is false (the serial
// path is kept for benchmarking and cross-checks).
unsigned long long k_oracle(const Fq& F, int n, const DimensionVector& d, double budget = 1e8,
                            bool parallel = true);

// Second independent oracle: orbit counting from inside the parabolic,
// (1/|P|) sum_{p in P} |C_G(p)|, with centralizers obtained by solving the
// commutation system exactly.  Only for tiny groups; refuses instances with
// more than element_budget matrix candidates to enumerate.
unsigned long long k_burnside(const Fq& F, int n, const DimensionVector& d,
                              long long element_budget = 1'000'000);

}  // namespace kpg

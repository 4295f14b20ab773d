#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kpg/gfq.hpp"
#include "kpg/partitions.hpp"
#include "kpg/psi.hpp"
#include "kpg/rational_poly.hpp"

namespace kpg {

// Strictly increasing positive subspace dimensions ending at n.
class DimensionVector {
 public:
  explicit DimensionVector(std::vector<int> dims);  // validates
  static DimensionVector parse(std::string_view csv);  // "1,2,3"

  int n() const { return dims_.back(); }
  int length() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::vector<int> block_sizes() const;  // successive differences
  std::string str() const;               // "(4,7,9)"

  bool operator==(const DimensionVector&) const = default;
  auto operator<=>(const DimensionVector&) const = default;

 private:
  std::vector<int> dims_;
};

// How the flag dimensions d are distributed across the centralizer factors:
// row f gives the subspace dimensions inside factor f (weakly increasing,
// ending at the factor rank), and the weighted column sums reproduce d.
class EMatrix {
 public:
  EMatrix(std::vector<FactorIndex> factors, std::vector<std::vector<int>> rows);
  const std::vector<FactorIndex>& factors() const { return factors_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  nlohmann::ordered_json to_json() const;  // row-major grid, factors in A-set order
  bool operator==(const EMatrix&) const = default;

 private:
  std::vector<FactorIndex> factors_;
  std::vector<std::vector<int>> rows_;
};

// All admissible distributions, enumerated deterministically (column by
// column, factors in A-set order, entries ascending).  May be empty; the
// set does not depend on q.
std::vector<EMatrix> enumerate_e_matrices(const PsiMap& psi, const DimensionVector& d);

/// Gaussian binomial [n choose k]_q as an integer polynomial.
RationalPoly gaussian_binomial_poly(int n, int k);

// Number of flags with the given block sizes (Gaussian multinomial); degree
// is sum_{i<j} a_i a_j, the dimension of the partial flag variety.
RationalPoly total_flag_count_poly(const std::vector<int>& block_sizes);

/// the `count` smallest prime powers, starting at 2
std::vector<long> interpolation_nodes(int count);

// Number of J(1,lambda)-stable flags with subspace dimensions flag_dims, as
// a polynomial in the field size.  flag_dims must be weakly increasing and
// end at |lambda| (zeros and repeats are allowed and normalized away).
// Computed by exact evaluation at the D+1 smallest prime powers and Lagrange
// interpolation, D = dim of the partial flag variety; results are memoized.
RationalPoly stable_flag_count_poly(const Partition& lambda, const std::vector<int>& flag_dims);

// f_P^G(x(psi)): sum over admissible distributions of the product over
// centralizer factors of the per-factor stable flag count, specialized at
// q^j.  Integer coefficients.
RationalPoly f_value_poly(const PsiMap& psi, const DimensionVector& d);

// Exact stable-flag counts over a concrete field: the production kernel
// (memoized counting by quotient type, OpenMP-parallel candidate scans) and
// the serial reference (depth-first enumeration of the flags themselves,
// extending only stable subspaces).  Both count the same thing; the
// reference is kept for cross-checking and benchmarking.
unsigned long long count_stable_flags(const Fq& F, const Partition& lambda,
                                      const std::vector<int>& flag_dims);
unsigned long long count_stable_flags_ref(const Fq& F, const Partition& lambda,
                                          const std::vector<int>& flag_dims);

}  // namespace kpg

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kpg/partitions.hpp"
#include "kpg/rational_poly.hpp"

namespace kpg {

// Index of one centralizer factor: degree j, partition index r within
// psi(j), repetition index s (all 1-based).
struct FactorIndex {
  int j, r, s;
  auto operator<=>(const FactorIndex&) const = default;
};

// A map j -> multipartition with finite support and sum_j j*|psi(j)| = n.
// This is the q-independent label of an equivalence class of GL_n(q)
// conjugacy classes: it records, per extension degree j, the multiset of
// Jordan types attached to degree-j eigenvalue orbits.  Whether the class is
// realized for a concrete q (enough degree-j orbits to go around) is a
// q-dependent question answered by psi_nonempty_at, deliberately not an
// invariant of the type.
class PsiMap {
 public:
  PsiMap() = default;
  // entries must have j >= 1 strictly increasing and nonempty multipartitions
  static PsiMap from_entries(std::vector<std::pair<int, MultiPartition>> entries);
  // text form "1:((2)); 2:((1^2)); 3:((1))"
  static PsiMap parse(std::string_view text);

  long n() const;
  const std::vector<std::pair<int, MultiPartition>>& entries() const { return entries_; }
  const MultiPartition* find(int j) const;  // nullptr if psi(j) is empty
  std::string str() const;

  nlohmann::ordered_json to_json() const;  // {"psi": [[j, [[partition, b], ...]], ...]}
  static PsiMap from_json(const nlohmann::ordered_json& j);

  bool operator==(const PsiMap&) const = default;

 private:
  std::vector<std::pair<int, MultiPartition>> entries_;
};

// Enumeration order of Psi(n): compare supports written as descending
// j-tuples lexicographically (so classes supported at j = 1 only come
// first); for equal supports compare psi(j) by the multipartition order,
// largest j first.
bool psi_order_less(const PsiMap& a, const PsiMap& b);

/// All psi with sum_j j*|psi(j)| = n, in the documented order.
std::vector<PsiMap> enumerate_psi(int n);

/// Lexicographically sorted factor indices (j, r, s).
std::vector<FactorIndex> a_set(const PsiMap& psi);

// |psi~| = prod_j Delta(b(j), phi(j)) as a polynomial in q: the number of
// conjugacy classes of GL_n(q) with this label.  Coefficients are rational,
// not integral in general.
RationalPoly psi_class_size(const PsiMap& psi);

/// true iff the class is realized over F_{q0}: sum_r b(j)_r <= phi(j)(q0) for all j
bool psi_nonempty_at(const PsiMap& psi, long q0);

struct CentralizerFactor {
  FactorIndex index;
  int field_degree;          // the factor lives over F_{q^j}
  int rank;                  // GL_rank
  Partition unipotent_type;  // Jordan type of the unipotent part in this factor
};
using CentralizerShape = std::vector<CentralizerFactor>;

/// one GL_{|psi(j)_r|}(q^j) factor per element of the A-set
CentralizerShape centralizer_shape(const PsiMap& psi);

}  // namespace kpg

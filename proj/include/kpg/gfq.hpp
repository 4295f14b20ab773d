#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kpg/partitions.hpp"

namespace kpg {

using FqElem = std::uint8_t;

bool is_prime(long p);
/// q = p^k with p prime, k >= 1; outputs are optional.
bool is_prime_power(long q, long* p_out = nullptr, int* k_out = nullptr);

// The field F_{p^k} with exact table arithmetic.  Elements are indices
// 0..q-1 whose base-p digits are the coefficients of the residue polynomial
// modulo the field modulus; 0 and 1 are the additive and multiplicative
// identities.  The modulus is the lexicographically least monic irreducible
// of degree k over F_p, comparing coefficient tuples constant term first.
// Immutable after construction, safe for concurrent use.
class Fq {
 public:
  Fq(long p, int k);
  static Fq from_q(long q);  // factors q; throws if not a prime power

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }

  FqElem add(FqElem a, FqElem b) const { return add_[idx(a, b)]; }
  FqElem sub(FqElem a, FqElem b) const { return add_[idx(a, neg_[b])]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[idx(a, b)]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem inv(FqElem a) const;  // throws std::domain_error on 0

  std::vector<int> modulus() const { return modulus_; }         // degree k, monic, over F_p
  std::vector<int> coeff_vector(FqElem a) const;                // base-p digits, length k

 private:
  long p_;
  int k_;
  long q_;
  std::vector<int> modulus_;
  std::vector<FqElem> add_, mul_, neg_, inv_;
  size_t idx(FqElem a, FqElem b) const { return static_cast<size_t>(a) * q_ + b; }
};

// Monic polynomial over an Fq; coeffs lowest degree first, coeffs.back() == 1.
struct FqPoly {
  std::vector<FqElem> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const FqPoly&) const = default;
  bool operator<(const FqPoly& o) const;  // by degree, then coeff tuple constant-first
  std::string str() const;                // elements printed as integer indices
};

FqPoly fqpoly_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
/// remainder of a mod b (b monic); a need not be monic
std::vector<FqElem> fqpoly_rem(const Fq& F, std::vector<FqElem> a, const FqPoly& b);

// All monic irreducible polynomials of degree j over F, sorted; for j == 1
// the polynomial X is excluded.
std::vector<FqPoly> irreducible_polys(const Fq& F, int j);

// Dense matrix over Fq.  The field object must outlive the matrix.
class FqMatrix {
 public:
  FqMatrix(const Fq& F, int rows, int cols);
  static FqMatrix identity(const Fq& F, int n);

  const Fq& field() const { return *F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FqElem get(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, FqElem v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }

  FqMatrix mul(const FqMatrix& o) const;  // throws on dimension/field mismatch
  int rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  FqMatrix inverse() const;  // throws std::domain_error if singular

  // reduced row echelon form of the row space; returns only the nonzero rows
  FqMatrix row_basis() const;

  bool operator==(const FqMatrix& o) const;

 private:
  const Fq* F_;
  int rows_, cols_;
  std::vector<FqElem> a_;
};

// Block-diagonal matrix similar (over the closure) to the direct sum of
// Jordan blocks at the roots of f, repeated per the partition: one string of
// |part| companion blocks C_f per part, with identity blocks linking them.
FqMatrix jordan_block_matrix(const Fq& F, const FqPoly& f, const Partition& lambda);

/// x * rowspace(basis) is contained in rowspace(basis), by rank test
bool subspace_stable(const FqMatrix& x, const FqMatrix& basis);

// Stream every k-dimensional subspace of F^m exactly once as a reduced
// echelon row basis.  Order: pivot-column sets lexicographic, then free
// entries in row-major counter order.
void for_each_subspace(const Fq& F, int m, int k, const std::function<void(const FqMatrix&)>& fn);

// Subspaces of F^m of dimension k whose row space contains rowspace(base);
// base must be in reduced echelon form.
void for_each_subspace_containing(const FqMatrix& base, int k,
                                  const std::function<void(const FqMatrix&)>& fn);

/// materialized variant of for_each_subspace (mainly for tests)
std::vector<FqMatrix> enumerate_subspaces(const Fq& F, int m, int k);

}  // namespace kpg

#include <map>
#include <random>

#include "doctest.h"
#include "kpg/errors.hpp"
#include "kpg/oracle.hpp"

using namespace kpg;

namespace {

// all invertible n x n matrices, by scanning every coefficient vector;
// tiny groups only
std::vector<FqMatrix> whole_group(const Fq& F, int n) {
  std::vector<FqMatrix> out;
  unsigned long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<unsigned long long>(F.q());
  FqMatrix m(F, n, n);
  for (unsigned long long code = 0; code < total; ++code) {
    unsigned long long c = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.set(i, j, static_cast<FqElem>(c % F.q()));
        c /= F.q();
      }
    if (m.is_invertible()) out.push_back(m);
  }
  return out;
}

bool commutes(const FqMatrix& a, const FqMatrix& b) { return a.mul(b) == b.mul(a); }

FqMatrix random_invertible(const Fq& F, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(F.q()) - 1);
  FqMatrix m(F, n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, static_cast<FqElem>(dist(rng)));
  } while (!m.is_invertible());
  return m;
}

}  // namespace

TEST_CASE("class representative counts") {
  CHECK(enumerate_gamma(Fq(2, 1), 1).size() == 1);
  CHECK(enumerate_gamma(Fq(2, 1), 2).size() == 3);
  CHECK(enumerate_gamma(Fq(3, 1), 2).size() == 8);
  CHECK(enumerate_gamma(Fq(2, 1), 3).size() == 6);
  CHECK(enumerate_gamma(Fq(3, 1), 3).size() == 24);
}

TEST_CASE("representative counts match the class-size polynomials") {
  for (int n = 1; n <= 4; ++n)
    for (long q0 : {2L, 3L}) {
      Fq F = Fq::from_q(q0);
      mpz_class expected = 0;
      for (const PsiMap& psi : enumerate_psi(n)) expected += psi_class_size(psi).eval_int(q0);
      CHECK(mpz_class(static_cast<long>(enumerate_gamma(F, n).size())) == expected);
    }
}

TEST_CASE("representatives are invertible with distinct irreducible data") {
  Fq F(2, 1);
  for (const GammaRep& rep : enumerate_gamma(F, 3)) {
    CHECK(rep.matrix.is_invertible());
    long total = 0;
    std::map<std::vector<FqElem>, int> seen;
    for (const auto& [f, lam] : rep.blocks) {
      total += f.degree() * lam.size();
      CHECK(++seen[f.coeffs] == 1);
    }
    CHECK(total == 3);
    CHECK(rep.psi().n() == 3);
  }
}

TEST_CASE("class equation: orbit sizes sum to the group order") {
  for (auto [q0, n, order] : {std::tuple{2L, 2, 6L}, {3L, 2, 48L}, {2L, 3, 168L}}) {
    Fq F = Fq::from_q(q0);
    auto group = whole_group(F, n);
    REQUIRE(static_cast<long>(group.size()) == order);
    long sum = 0;
    for (const GammaRep& rep : enumerate_gamma(F, n)) {
      long cent = 0;
      for (const FqMatrix& g : group)
        if (commutes(g, rep.matrix)) ++cent;
      CHECK(order % cent == 0);
      sum += order / cent;
    }
    CHECK(sum == order);
  }
}

TEST_CASE("flag enumeration") {
  Fq F2(2, 1), F3(3, 1);
  CHECK(enumerate_flags(F2, DimensionVector({1, 2})).size() == 3);
  CHECK(enumerate_flags(F3, DimensionVector({1, 2, 3})).size() == 52);
  CHECK(enumerate_flags(F2, DimensionVector({2})).size() == 1);
  // nested subspaces of the right dimensions
  for (const FlagRep& flag : enumerate_flags(F2, DimensionVector({1, 3, 4}))) {
    REQUIRE(flag.subspaces.size() == 3);
    CHECK(flag.subspaces[0].rows() == 1);
    CHECK(flag.subspaces[1].rows() == 3);
    CHECK(flag.subspaces[2].rows() == 4);
    FqMatrix stacked(flag.subspaces[0].field(), 4, 4);
    for (int i = 0; i < 1; ++i)
      for (int j = 0; j < 4; ++j) stacked.set(i, j, flag.subspaces[0].get(i, j));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) stacked.set(1 + i, j, flag.subspaces[1].get(i, j));
    CHECK(stacked.rank() == 3);  // V1 inside V2
  }
}

TEST_CASE("fixed flag counts from the GL2 table") {
  Fq F2(2, 1);
  DimensionVector b({1, 2});
  CHECK(fixed_flag_count(FqMatrix::identity(F2, 2), b) == 3);  // q + 1 at 2
  FqPoly xm1;
  xm1.coeffs = {1, 1};
  CHECK(fixed_flag_count(jordan_block_matrix(F2, xm1, Partition::from_parts({2})), b) == 1);
  FqPoly quad;
  quad.coeffs = {1, 1, 1};
  CHECK(fixed_flag_count(jordan_block_matrix(F2, quad, Partition::from_parts({1})), b) == 0);
}

TEST_CASE("fixed flag count is a conjugation invariant") {
  std::mt19937 rng(987654);
  for (auto [q0, n] : {std::pair{2L, 3}, {3L, 2}, {4L, 2}}) {
    Fq F = Fq::from_q(q0);
    DimensionVector d = n == 2 ? DimensionVector({1, 2}) : DimensionVector({1, 2, 3});
    for (const GammaRep& rep : enumerate_gamma(F, n)) {
      unsigned long long base = fixed_flag_count(rep.matrix, d);
      for (int trial = 0; trial < 3; ++trial) {
        FqMatrix g = random_invertible(F, n, rng);
        FqMatrix conj = g.mul(rep.matrix).mul(g.inverse());
        CHECK(fixed_flag_count(conj, d) == base);
      }
    }
  }
}

TEST_CASE("fixed flag counts agree with the symbolic per-label polynomials") {
  // the count only depends on the label, never on the eigenvalue choice
  for (auto [q0, n] : {std::pair{2L, 2}, {3L, 2}, {2L, 3}, {3L, 3}}) {
    Fq F = Fq::from_q(q0);
    for (const DimensionVector& d :
         {DimensionVector({1, n}), n == 2 ? DimensionVector({2}) : DimensionVector({1, 2, 3})}) {
      if (d.n() != n) continue;
      for (const GammaRep& rep : enumerate_gamma(F, n)) {
        mpz_class expected = f_value_poly(rep.psi(), d).eval_int(q0);
        CHECK(mpz_class(static_cast<unsigned long>(fixed_flag_count(rep.matrix, d))) == expected);
      }
    }
  }
}

TEST_CASE("k_oracle matches the paper values") {
  CHECK(k_oracle(Fq(2, 1), 2, DimensionVector({1, 2})) == 4);
  CHECK(k_oracle(Fq(3, 1), 2, DimensionVector({1, 2})) == 12);
  CHECK(k_oracle(Fq(2, 1), 3, DimensionVector({1, 2, 3})) == 27);
  CHECK(k_oracle(Fq(2, 1), 2, DimensionVector({2})) == 3);
}

TEST_CASE("k_oracle parallel and serial paths agree") {
  for (auto [q0, n] : {std::pair{3L, 3}, {4L, 2}}) {
    Fq F = Fq::from_q(q0);
    DimensionVector d = n == 2 ? DimensionVector({1, 2}) : DimensionVector({1, 2, 3});
    CHECK(k_oracle(F, n, d, 1e8, true) == k_oracle(F, n, d, 1e8, false));
  }
}

TEST_CASE("k_oracle refuses over-budget instances") {
  CHECK_THROWS_AS(k_oracle(Fq(3, 1), 3, DimensionVector({1, 2, 3}), 10.0), BudgetExceeded);
}

TEST_CASE("k_burnside on tiny groups") {
  CHECK(k_burnside(Fq(2, 1), 2, DimensionVector({1, 2})) == 4);
  CHECK(k_burnside(Fq(3, 1), 2, DimensionVector({1, 2})) == 12);
  CHECK(k_burnside(Fq(2, 1), 2, DimensionVector({2})) == 3);  // classes of S_3
  CHECK(k_burnside(Fq(2, 1), 3, DimensionVector({1, 2, 3})) == 27);
}

TEST_CASE("k_burnside refuses over-budget instances") {
  CHECK_THROWS_AS(k_burnside(Fq(5, 1), 3, DimensionVector({3}), 1000), BudgetExceeded);
}

TEST_CASE("both oracles agree wherever both run") {
  for (auto [q0, n] : {std::pair{2L, 2}, {3L, 2}, {2L, 3}}) {
    Fq F = Fq::from_q(q0);
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> dims;
      for (int i = 1; i < n; ++i)
        if (mask & (1 << (i - 1))) dims.push_back(i);
      dims.push_back(n);
      DimensionVector d(dims);
      CHECK(k_oracle(F, n, d) == k_burnside(F, n, d));
    }
  }
}

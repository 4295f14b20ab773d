#include <algorithm>

#include "doctest.h"
#include "kpg/psi.hpp"

using namespace kpg;

namespace {

PsiMap gl9_psi() { return PsiMap::parse("1:((2)); 2:((1^2)); 3:((1))"); }

RationalPoly ipoly(std::vector<long> v) { return RationalPoly::from_int_coeffs(v); }

}  // namespace

TEST_CASE("psi construction and text form") {
  PsiMap psi = gl9_psi();
  CHECK(psi.n() == 9);
  CHECK(psi.str() == "1:((2)); 2:((1^2)); 3:((1))");
  CHECK(PsiMap::parse(psi.str()) == psi);
  CHECK(psi.find(2) != nullptr);
  CHECK(psi.find(4) == nullptr);
  CHECK_THROWS_AS(PsiMap::parse("1:()"), std::invalid_argument);
  CHECK_THROWS_AS(PsiMap::parse("0:((1))"), std::invalid_argument);
}

TEST_CASE("psi json round trip") {
  PsiMap psi = gl9_psi();
  auto j = psi.to_json();
  CHECK(PsiMap::from_json(j) == psi);
  CHECK(j.dump() == R"x({"psi":[[1,[["(2)",1]]],[2,[["(1^2)",1]]],[3,[["(1)",1]]]]})x");
}

TEST_CASE("enumerate_psi counts") {
  CHECK(enumerate_psi(1).size() == 1);
  CHECK(enumerate_psi(2).size() == 4);
  CHECK(enumerate_psi(3).size() == 8);
  for (int n = 1; n <= 5; ++n)
    for (const PsiMap& psi : enumerate_psi(n)) CHECK(psi.n() == n);
}

TEST_CASE("enumerate_psi n=3 structure") {
  auto psis = enumerate_psi(3);
  REQUIRE(psis.size() == 8);
  // classes supported at j=1 only come first, then mixed support, then j=3
  for (int i = 0; i < 6; ++i) {
    CHECK(psis[i].entries().size() == 1);
    CHECK(psis[i].entries()[0].first == 1);
  }
  CHECK(psis[6] == PsiMap::parse("1:((1)); 2:((1))"));
  CHECK(psis[7] == PsiMap::parse("3:((1))"));
}

TEST_CASE("enumerate_psi n=2 matches the four labels") {
  auto psis = enumerate_psi(2);
  REQUIRE(psis.size() == 4);
  CHECK(psis[3] == PsiMap::parse("2:((1))"));
  std::vector<std::string> first3;
  for (int i = 0; i < 3; ++i) first3.push_back(psis[i].str());
  std::sort(first3.begin(), first3.end());
  CHECK(first3 == std::vector<std::string>{"1:((1)^2)", "1:((1^2))", "1:((2))"});
}

TEST_CASE("a_set") {
  auto a9 = a_set(gl9_psi());
  REQUIRE(a9.size() == 3);
  CHECK(a9[0] == FactorIndex{1, 1, 1});
  CHECK(a9[1] == FactorIndex{2, 1, 1});
  CHECK(a9[2] == FactorIndex{3, 1, 1});

  auto a2 = a_set(PsiMap::parse("1:((1)^2)"));
  REQUIRE(a2.size() == 2);
  CHECK(a2[0] == FactorIndex{1, 1, 1});
  CHECK(a2[1] == FactorIndex{1, 1, 2});

  CHECK(a_set(PsiMap::parse("1:((2))")).size() == 1);
}

TEST_CASE("class size polynomials from the GL2 table") {
  CHECK(psi_class_size(PsiMap::parse("1:((1^2))")) == ipoly({-1, 1}));
  CHECK(psi_class_size(PsiMap::parse("1:((2))")) == ipoly({-1, 1}));
  CHECK(psi_class_size(PsiMap::parse("1:((1)^2)")) ==
        RationalPoly({mpq_class(1), make_rational(-3, 2), make_rational(1, 2)}));
  CHECK(psi_class_size(PsiMap::parse("2:((1))")) ==
        RationalPoly({mpq_class(0), make_rational(-1, 2), make_rational(1, 2)}));
}

TEST_CASE("class size of the GL9 example") {
  RationalPoly expected = phi_poly(1) * phi_poly(2) * phi_poly(3);
  CHECK(psi_class_size(gl9_psi()) == expected);
}

TEST_CASE("class sizes sum to the class-number polynomial for n=2") {
  RationalPoly total;
  for (const PsiMap& psi : enumerate_psi(2)) total += psi_class_size(psi);
  CHECK(total == ipoly({-1, 0, 1}));  // q^2 - 1
}

TEST_CASE("class sizes vanish at q=1") {
  for (int n = 1; n <= 5; ++n)
    for (const PsiMap& psi : enumerate_psi(n)) CHECK(psi_class_size(psi).eval(1) == 0);
}

TEST_CASE("class sizes evaluate to nonnegative integers at prime powers") {
  for (int n = 1; n <= 4; ++n)
    for (const PsiMap& psi : enumerate_psi(n))
      for (long q0 : {2L, 3L, 4L, 5L}) {
        mpz_class v = psi_class_size(psi).eval_int(q0);
        CHECK(v >= 0);
        CHECK((v == 0) == !psi_nonempty_at(psi, q0));
      }
}

TEST_CASE("psi_nonempty_at") {
  CHECK(!psi_nonempty_at(PsiMap::parse("1:((1)^2)"), 2));  // needs 2 distinct eigenvalues
  CHECK(psi_nonempty_at(PsiMap::parse("1:((1)^2)"), 3));
  CHECK(psi_nonempty_at(gl9_psi(), 2));
}

TEST_CASE("centralizer shape") {
  auto shape = centralizer_shape(gl9_psi());
  REQUIRE(shape.size() == 3);
  CHECK(shape[0].field_degree == 1);
  CHECK(shape[0].rank == 2);
  CHECK(shape[0].unipotent_type == Partition::from_parts({2}));
  CHECK(shape[1].field_degree == 2);
  CHECK(shape[1].rank == 2);
  CHECK(shape[1].unipotent_type == Partition::from_parts({1, 1}));
  CHECK(shape[2].field_degree == 3);
  CHECK(shape[2].rank == 1);
  CHECK(shape[2].unipotent_type == Partition::from_parts({1}));

  auto s1 = centralizer_shape(PsiMap::parse("1:((1^2))"));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].rank == 2);
  CHECK(s1[0].field_degree == 1);
  CHECK(s1[0].unipotent_type == Partition::from_parts({1, 1}));

  auto s2 = centralizer_shape(PsiMap::parse("1:((1)^2)"));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].rank == 1);
  CHECK(s2[1].rank == 1);

  // weighted ranks add up to n
  for (int n = 1; n <= 5; ++n)
    for (const PsiMap& psi : enumerate_psi(n)) {
      long total = 0;
      for (const auto& f : centralizer_shape(psi)) total += static_cast<long>(f.field_degree) * f.rank;
      CHECK(total == n);
    }
}

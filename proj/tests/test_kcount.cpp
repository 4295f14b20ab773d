#include <algorithm>

#include "doctest.h"
#include "kpg/kcount.hpp"

using namespace kpg;

namespace {
RationalPoly ipoly(std::vector<long> v) { return RationalPoly::from_int_coeffs(v); }
RationalPoly q_minus_1() { return ipoly({-1, 1}); }
}  // namespace

TEST_CASE("k_poly for GL2") {
  CHECK(k_poly(2, DimensionVector({1, 2})).k == ipoly({0, -2, 2}));  // 2q(q-1)
  CHECK(k_poly(2, DimensionVector({2})).k == ipoly({-1, 0, 1}));     // (q-1)(q+1)
}

TEST_CASE("k_poly for the Borel of GL3 and GL4") {
  CHECK(k_poly(3, DimensionVector({1, 2, 3})).k == q_minus_1() * ipoly({-3, -1, 6, 1}));
  CHECK(k_poly(4, DimensionVector({1, 2, 3, 4})).k ==
        q_minus_1() * ipoly({5, -18, -9, 19, 9, 3, 1}));
}

TEST_CASE("report structure") {
  KReport r = k_poly(2, DimensionVector({1, 2}));
  CHECK(r.per_psi.size() == 4);
  RationalPoly total;
  for (const PsiTerm& t : r.per_psi) {
    total += t.class_size * t.f_value;
    CHECK(t.f_value.has_integer_coeffs());
  }
  CHECK(total == r.k);
  // for the full group the summands are the class sizes themselves, and
  // those are not integral even though the total is
  bool saw_fractional_summand = false;
  for (const PsiTerm& t : k_poly(2, DimensionVector({2})).per_psi)
    if (!(t.class_size * t.f_value).has_integer_coeffs()) saw_fractional_summand = true;
  CHECK(saw_fractional_summand);
  // labels come out in enumeration order
  auto order = enumerate_psi(2);
  REQUIRE(order.size() == r.per_psi.size());
  for (size_t i = 0; i < order.size(); ++i) CHECK(r.per_psi[i].psi == order[i]);
}

TEST_CASE("k_eval") {
  CHECK(k_eval(2, DimensionVector({1, 2}), 2) == 4);
  CHECK(k_eval(3, DimensionVector({1, 2, 3}), 2) == 27);
  CHECK(k_eval(2, DimensionVector({2}), 5) == 24);
  CHECK_THROWS_AS(k_eval(2, DimensionVector({1, 2}), 6), std::invalid_argument);
}

TEST_CASE("the full-group count is the class-number polynomial") {
  for (int n = 1; n <= 5; ++n) {
    RationalPoly expected;
    for (const PsiMap& psi : enumerate_psi(n)) expected += psi_class_size(psi);
    KReport r = k_poly(n, DimensionVector({n}));
    CHECK(r.k == expected);
    for (const PsiTerm& t : r.per_psi) CHECK(t.f_value == RationalPoly::constant(1));
  }
}

TEST_CASE("class-number polynomial values over F_2") {
  // GL_2(2) = S_3, GL_3(2) = PSL(3,2), GL_4(2) = A_8
  const long expected[] = {0, 1, 3, 6, 14, 27, 60};
  for (int n = 1; n <= 6; ++n)
    CHECK(k_poly(n, DimensionVector({n})).k.eval_int(2) == expected[n]);
}

TEST_CASE("integrality and divisibility by q-1 up to n=4") {
  for (int n = 1; n <= 4; ++n)
    for (const DimensionVector& d : all_dimension_vectors(n)) {
      KReport r = k_poly(n, d);
      CHECK(r.k.has_integer_coeffs());
      CHECK(r.k.eval(1) == 0);
    }
}

TEST_CASE("all_dimension_vectors") {
  CHECK(all_dimension_vectors(1).size() == 1);
  CHECK(all_dimension_vectors(4).size() == 8);
  CHECK(all_dimension_vectors(5).size() == 16);
  for (const DimensionVector& d : all_dimension_vectors(5)) CHECK(d.n() == 5);
}

TEST_CASE("associated vectors") {
  auto assoc = associated_vectors(3, DimensionVector({1, 3}));
  REQUIRE(assoc.size() == 2);
  CHECK(assoc[0] == DimensionVector({1, 3}));
  CHECK(assoc[1] == DimensionVector({2, 3}));
  // blocks {1,1} have a single arrangement
  CHECK(associated_vectors(2, DimensionVector({1, 2})).size() == 1);
  CHECK(associated_vectors(9, DimensionVector({4, 7, 9})).size() == 6);
}

TEST_CASE("association invariance") {
  auto r3 = check_association_invariance(3, DimensionVector({1, 3}));
  CHECK(r3.all_equal);
  CHECK(r3.witnesses.size() == 2);
  auto r2 = check_association_invariance(2, DimensionVector({1, 2}));
  CHECK(r2.all_equal);
  CHECK(r2.witnesses.size() == 1);
  auto r4 = check_association_invariance(4, DimensionVector({1, 3, 4}));
  CHECK(r4.all_equal);
  CHECK(r4.witnesses.size() == 3);
}

TEST_CASE("report json") {
  KReport r = k_poly(2, DimensionVector({1, 2}));
  auto j = r.to_json();
  CHECK(j.at("n") == 2);
  CHECK(j.at("d") == std::vector<int>{1, 2});
  CHECK(j.at("k_coeffs") == std::vector<long>{0, -2, 2});
  CHECK(j.at("factored_hint") == "(q - 1) * (2q)");
  CHECK(j.at("per_psi").size() == 4);
  // canonical form: parsing the dump and re-dumping is byte-identical
  std::string s = j.dump();
  CHECK(nlohmann::ordered_json::parse(s).dump() == s);
}

TEST_CASE("factored form divides exactly") {
  RationalPoly k3 = k_poly(3, DimensionVector({1, 2, 3})).k;
  CHECK(k3.divide_exact(q_minus_1()) == ipoly({-3, -1, 6, 1}));
}

#include <algorithm>

#include "doctest.h"
#include "kpg/partitions.hpp"

using namespace kpg;

TEST_CASE("partition construction and size") {
  Partition p = Partition::from_pairs({{3, 2}, {1, 1}});
  CHECK(p.size() == 7);
  CHECK(p.num_parts() == 3);
  CHECK(p.expanded() == std::vector<int>{3, 3, 1});
  CHECK(Partition().size() == 0);
  CHECK(Partition::from_parts({1, 3, 3}) == p);
  CHECK_THROWS_AS(Partition::from_pairs({{1, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_pairs({{2, 0}}), std::invalid_argument);
}

TEST_CASE("partition order") {
  Partition a = Partition::from_parts({1, 1});
  Partition b = Partition::from_parts({3});
  CHECK(a < b);  // sizes 2 < 3
  CHECK(Partition::from_parts({1, 1, 1}) < Partition::from_parts({2, 1}));
  Partition c = Partition::from_parts({2, 2});
  CHECK((c <=> c) == std::strong_ordering::equal);
  CHECK(Partition::from_parts({2, 2}) < Partition::from_parts({3, 1}));
}

TEST_CASE("order is total on small partitions") {
  for (int n = 0; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = 0; j < all.size(); ++j) {
        if (i == j) CHECK(all[i] == all[j]);
        if (i < j) {
          CHECK(all[i] < all[j]);  // enumeration is sorted
          CHECK(!(all[j] < all[i]));
        }
      }
  }
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(enumerate_partitions(n).size() == expected[n]);
  CHECK(enumerate_partitions(0).front() == Partition());
  auto p2 = enumerate_partitions(2);
  CHECK(p2[0] == Partition::from_parts({1, 1}));
  CHECK(p2[1] == Partition::from_parts({2}));
}

TEST_CASE("partition text form") {
  CHECK(Partition::from_pairs({{3, 2}, {1, 1}}).str() == "(3^2,1)");
  CHECK(Partition().str() == "()");
  CHECK(Partition::parse("(3^2,1)") == Partition::from_pairs({{3, 2}, {1, 1}}));
  CHECK(Partition::parse("()") == Partition());
  CHECK(Partition::parse("(1^2)") == Partition::from_parts({1, 1}));
  for (int n = 0; n <= 7; ++n)
    for (const Partition& p : enumerate_partitions(n)) CHECK(Partition::parse(p.str()) == p);
}

TEST_CASE("multipartition basics") {
  MultiPartition m = MultiPartition::from_partitions(
      {Partition::from_parts({2}), Partition::from_parts({3, 1}), Partition::from_parts({3, 1})});
  CHECK(m.size() == 10);
  CHECK(m.str() == "((3,1)^2,(2))");
  CHECK(MultiPartition::parse("((3,1)^2,(2))") == m);
  CHECK(MultiPartition().str() == "()");
  CHECK(MultiPartition::parse("()") == MultiPartition());
  CHECK_THROWS_AS(MultiPartition::from_partitions({Partition()}), std::invalid_argument);
}

namespace {

// Euler-transform count of multisets of nonempty partitions with total size
// n: prod_k (1 - x^k)^(-p(k)) expanded by repeated geometric convolution.
std::vector<long> multiset_counts(int nmax) {
  std::vector<long> a(nmax + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= nmax; ++k) {
    long pk = static_cast<long>(kpg::enumerate_partitions(k).size());
    for (long copy = 0; copy < pk; ++copy)
      for (int i = k; i <= nmax; ++i) a[i] += a[i - k];
  }
  return a;
}

}  // namespace

TEST_CASE("multipartition counts match the multiset oracle") {
  auto expected = multiset_counts(7);
  for (int n = 0; n <= 7; ++n)
    CHECK(enumerate_multipartitions(n).size() == static_cast<size_t>(expected[n]));
  // frozen small values
  CHECK(enumerate_multipartitions(2).size() == 3);
  CHECK(enumerate_multipartitions(3).size() == 6);
  CHECK(enumerate_multipartitions(4).size() == 14);
}

TEST_CASE("multipartitions of 3 are the expected multisets") {
  auto mps = enumerate_multipartitions(3);
  std::vector<std::string> got;
  for (const auto& m : mps) got.push_back(m.str());
  std::vector<std::string> want = {"((3))",      "((2,1))",     "((1^3))",
                                   "((2),(1))",  "((1^2),(1))", "((1)^3)"};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("multipartition invariants and round trip") {
  for (int n = 0; n <= 6; ++n)
    for (const MultiPartition& m : enumerate_multipartitions(n)) {
      CHECK(m.size() == n);
      for (size_t i = 0; i + 1 < m.pairs().size(); ++i)
        CHECK(m.pairs()[i].first > m.pairs()[i + 1].first);
      for (const auto& [p, b] : m.pairs()) {
        CHECK(!p.empty());
        CHECK(b >= 1);
      }
      CHECK(MultiPartition::parse(m.str()) == m);
    }
}

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpg {

// Integer partition in exponent form: pairs (part, multiplicity) with
// strictly decreasing parts and positive multiplicities.  The empty
// partition () is allowed.
//
// Partitions carry a total order: first by size, then lexicographically on
// the expanded weakly decreasing part lists (larger first part compares
// greater).  Canonical text form and enumeration order depend on it.
class Partition {
 public:
  Partition() = default;
  static Partition from_pairs(std::vector<std::pair<int, int>> pairs);
  static Partition from_parts(std::vector<int> parts);  // any order
  static Partition parse(std::string_view text);        // e.g. "(3^2,1)"

  long size() const;
  bool empty() const { return pairs_.empty(); }
  int num_parts() const;  // counted with multiplicity
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::vector<int> expanded() const;  // weakly decreasing part list
  std::string str() const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Multiset of nonempty partitions in exponent form: pairs (partition,
// multiplicity) with the partitions strictly decreasing in the order above.
class MultiPartition {
 public:
  MultiPartition() = default;
  static MultiPartition from_pairs(std::vector<std::pair<Partition, int>> pairs);
  static MultiPartition from_partitions(std::vector<Partition> parts);  // multiset
  static MultiPartition parse(std::string_view text);  // e.g. "((3,1)^2,(2))"

  long size() const;
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Partition, int>>& pairs() const { return pairs_; }
  std::vector<Partition> expanded() const;  // decreasing list with repeats
  std::string str() const;

  bool operator==(const MultiPartition&) const = default;
  std::strong_ordering operator<=>(const MultiPartition& o) const;

 private:
  std::vector<std::pair<Partition, int>> pairs_;
};

/// All partitions of n, sorted ascending in the partition order.
std::vector<Partition> enumerate_partitions(int n);

/// All multipartitions of total size n, sorted ascending.
std::vector<MultiPartition> enumerate_multipartitions(int n);

}  // namespace kpg

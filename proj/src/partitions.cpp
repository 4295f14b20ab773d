#include "kpg/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kpg {

Partition Partition::from_pairs(std::vector<std::pair<int, int>> pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first < 1 || pairs[i].second < 1)
      throw std::invalid_argument("Partition: parts and multiplicities must be >= 1");
    if (i > 0 && pairs[i - 1].first <= pairs[i].first)
      throw std::invalid_argument("Partition: parts must be strictly decreasing");
  }
  Partition p;
  p.pairs_ = std::move(pairs);
  return p;
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  std::vector<std::pair<int, int>> pairs;
  for (int x : parts) {
    if (x < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    if (!pairs.empty() && pairs.back().first == x)
      ++pairs.back().second;
    else
      pairs.emplace_back(x, 1);
  }
  Partition p;
  p.pairs_ = std::move(pairs);
  return p;
}

long Partition::size() const {
  long s = 0;
  for (auto [part, mult] : pairs_) s += static_cast<long>(part) * mult;
  return s;
}

int Partition::num_parts() const {
  int c = 0;
  for (auto [part, mult] : pairs_) c += mult;
  return c;
}

std::vector<int> Partition::expanded() const {
  std::vector<int> v;
  for (auto [part, mult] : pairs_) v.insert(v.end(), mult, part);
  return v;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return expanded() <=> o.expanded();
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto [part, mult] : pairs_) {
    if (!first) os << ",";
    first = false;
    os << part;
    if (mult > 1) os << "^" << mult;
  }
  os << ")";
  return os.str();
}

namespace {

// split "a,b,c" at top level (depth 0 w.r.t. parentheses)
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

std::string_view strip_spaces(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::string_view strip_outer_parens(std::string_view s, const char* what) {
  s = strip_spaces(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument(std::string(what) + ": expected parenthesized form, got '" +
                                std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

int parse_int(std::string_view s, const char* what) {
  s = strip_spaces(s);
  if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty integer");
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string_view inner = strip_outer_parens(text, "Partition");
  if (strip_spaces(inner).empty()) return Partition();
  std::vector<std::pair<int, int>> pairs;
  for (const std::string& item : split_top_level(inner)) {
    auto caret = item.find('^');
    int part, mult = 1;
    if (caret == std::string::npos) {
      part = parse_int(item, "Partition");
    } else {
      part = parse_int(std::string_view(item).substr(0, caret), "Partition");
      mult = parse_int(std::string_view(item).substr(caret + 1), "Partition");
    }
    pairs.emplace_back(part, mult);
  }
  return from_pairs(std::move(pairs));
}

MultiPartition MultiPartition::from_pairs(std::vector<std::pair<Partition, int>> pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.empty())
      throw std::invalid_argument("MultiPartition: member partitions must be nonempty");
    if (pairs[i].second < 1)
      throw std::invalid_argument("MultiPartition: multiplicities must be >= 1");
    if (i > 0 && pairs[i - 1].first <= pairs[i].first)
      throw std::invalid_argument("MultiPartition: partitions must be strictly decreasing");
  }
  MultiPartition m;
  m.pairs_ = std::move(pairs);
  return m;
}

MultiPartition MultiPartition::from_partitions(std::vector<Partition> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<Partition>());
  std::vector<std::pair<Partition, int>> pairs;
  for (auto& p : parts) {
    if (!pairs.empty() && pairs.back().first == p)
      ++pairs.back().second;
    else
      pairs.emplace_back(std::move(p), 1);
  }
  return from_pairs(std::move(pairs));
}

long MultiPartition::size() const {
  long s = 0;
  for (const auto& [p, mult] : pairs_) s += p.size() * mult;
  return s;
}

std::vector<Partition> MultiPartition::expanded() const {
  std::vector<Partition> v;
  for (const auto& [p, mult] : pairs_) v.insert(v.end(), mult, p);
  return v;
}

std::strong_ordering MultiPartition::operator<=>(const MultiPartition& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return expanded() <=> o.expanded();
}

std::string MultiPartition::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [p, mult] : pairs_) {
    if (!first) os << ",";
    first = false;
    os << p.str();
    if (mult > 1) os << "^" << mult;
  }
  os << ")";
  return os.str();
}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::string_view inner = strip_outer_parens(text, "MultiPartition");
  if (strip_spaces(inner).empty()) return MultiPartition();
  std::vector<std::pair<Partition, int>> pairs;
  for (const std::string& item : split_top_level(inner)) {
    std::string_view sv = strip_spaces(item);
    auto close = sv.rfind(')');
    if (close == std::string_view::npos)
      throw std::invalid_argument("MultiPartition: malformed item '" + item + "'");
    Partition p = Partition::parse(sv.substr(0, close + 1));
    int mult = 1;
    std::string_view rest = strip_spaces(sv.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '^')
        throw std::invalid_argument("MultiPartition: malformed item '" + item + "'");
      mult = parse_int(rest.substr(1), "MultiPartition");
    }
    pairs.emplace_back(std::move(p), mult);
  }
  return from_pairs(std::move(pairs));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(stack));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    gen_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// pool = nonempty partitions of size <= n, descending; pick a weakly
// decreasing sequence from the pool with sizes summing to n
void gen_multipartitions(int remaining, size_t pool_from, const std::vector<Partition>& pool,
                         std::vector<Partition>& stack, std::vector<MultiPartition>& out) {
  if (remaining == 0) {
    out.push_back(MultiPartition::from_partitions(stack));
    return;
  }
  for (size_t i = pool_from; i < pool.size(); ++i) {
    if (pool[i].size() > remaining) continue;
    stack.push_back(pool[i]);
    gen_multipartitions(remaining - static_cast<int>(pool[i].size()), i, pool, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_multipartitions: n must be >= 0");
  std::vector<Partition> pool;
  for (int k = n; k >= 1; --k)
    for (const Partition& p : enumerate_partitions(k)) pool.push_back(p);
  std::sort(pool.begin(), pool.end(), std::greater<Partition>());
  std::vector<MultiPartition> out;
  std::vector<Partition> stack;
  gen_multipartitions(n, 0, pool, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kpg

#include "kpg/psi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpg {

PsiMap PsiMap::from_entries(std::vector<std::pair<int, MultiPartition>> entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first < 1) throw std::invalid_argument("PsiMap: j must be >= 1");
    if (entries[i].second.empty())
      throw std::invalid_argument("PsiMap: stored multipartitions must be nonempty");
    if (i > 0 && entries[i - 1].first >= entries[i].first)
      throw std::invalid_argument("PsiMap: j values must be strictly increasing");
  }
  PsiMap psi;
  psi.entries_ = std::move(entries);
  return psi;
}

long PsiMap::n() const {
  long total = 0;
  for (const auto& [j, mp] : entries_) total += static_cast<long>(j) * mp.size();
  return total;
}

const MultiPartition* PsiMap::find(int j) const {
  for (const auto& [jj, mp] : entries_)
    if (jj == j) return &mp;
  return nullptr;
}

std::string PsiMap::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, mp] : entries_) {
    if (!first) os << "; ";
    first = false;
    os << j << ":" << mp.str();
  }
  return os.str();
}

PsiMap PsiMap::parse(std::string_view text) {
  std::vector<std::pair<int, MultiPartition>> entries;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t semi = text.find(';', pos);
    std::string_view item =
        semi == std::string_view::npos ? text.substr(pos) : text.substr(pos, semi - pos);
    pos = semi == std::string_view::npos ? text.size() : semi + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("PsiMap: expected 'j:(...)' in '" + std::string(item) + "'");
    int j = 0;
    for (char ch : item.substr(0, colon)) {
      if (ch == ' ') continue;
      if (ch < '0' || ch > '9') throw std::invalid_argument("PsiMap: bad degree in item");
      j = j * 10 + (ch - '0');
    }
    entries.emplace_back(j, MultiPartition::parse(item.substr(colon + 1)));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return from_entries(std::move(entries));
}

nlohmann::ordered_json PsiMap::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [j, mp] : entries_) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& [p, b] : mp.pairs())
      parts.push_back(nlohmann::ordered_json::array({p.str(), b}));
    arr.push_back(nlohmann::ordered_json::array({j, parts}));
  }
  return nlohmann::ordered_json{{"psi", arr}};
}

PsiMap PsiMap::from_json(const nlohmann::ordered_json& j) {
  std::vector<std::pair<int, MultiPartition>> entries;
  for (const auto& item : j.at("psi")) {
    int deg = item.at(0).get<int>();
    std::vector<std::pair<Partition, int>> pairs;
    for (const auto& pb : item.at(1))
      pairs.emplace_back(Partition::parse(pb.at(0).get<std::string>()), pb.at(1).get<int>());
    entries.emplace_back(deg, MultiPartition::from_pairs(std::move(pairs)));
  }
  return from_entries(std::move(entries));
}

bool psi_order_less(const PsiMap& a, const PsiMap& b) {
  std::vector<int> sa, sb;  // supports, descending
  for (const auto& [j, mp] : a.entries()) sa.push_back(j);
  for (const auto& [j, mp] : b.entries()) sb.push_back(j);
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  if (sa != sb) return sa < sb;
  // equal support: compare psi(j) for j descending
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (size_t i = ea.size(); i-- > 0;) {
    if (ea[i].second != eb[i].second) return ea[i].second < eb[i].second;
  }
  return false;
}

namespace {

// assign to degrees j = max_j, max_j-1, ..., 1 a multipartition whose
// weighted size j*|psi(j)| uses up `remaining`
void gen_psi(int remaining, int j, std::vector<std::pair<int, MultiPartition>>& stack,
             std::vector<PsiMap>& out) {
  if (j == 0) {
    if (remaining == 0) {
      auto entries = stack;
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(PsiMap::from_entries(std::move(entries)));
    }
    return;
  }
  for (int w = 0; w * j <= remaining; ++w) {
    if (w == 0) {
      gen_psi(remaining, j - 1, stack, out);
      continue;
    }
    for (const MultiPartition& mp : enumerate_multipartitions(w)) {
      stack.emplace_back(j, mp);
      gen_psi(remaining - w * j, j - 1, stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<PsiMap> enumerate_psi(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_psi: n must be >= 1");
  std::vector<PsiMap> out;
  std::vector<std::pair<int, MultiPartition>> stack;
  gen_psi(n, n, stack, out);
  std::sort(out.begin(), out.end(), psi_order_less);
  return out;
}

std::vector<FactorIndex> a_set(const PsiMap& psi) {
  std::vector<FactorIndex> out;
  for (const auto& [j, mp] : psi.entries()) {
    int r = 1;
    for (const auto& [p, b] : mp.pairs()) {
      for (int s = 1; s <= b; ++s) out.push_back(FactorIndex{j, r, s});
      ++r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalPoly psi_class_size(const PsiMap& psi) {
  RationalPoly acc = RationalPoly::constant(1);
  for (const auto& [j, mp] : psi.entries()) {
    std::vector<int> b;
    for (const auto& [p, mult] : mp.pairs()) b.push_back(mult);
    acc *= delta_poly(b, phi_poly(j));
  }
  return acc;
}

bool psi_nonempty_at(const PsiMap& psi, long q0) {
  for (const auto& [j, mp] : psi.entries()) {
    long need = 0;
    for (const auto& [p, b] : mp.pairs()) need += b;
    mpz_class have = phi_poly(j).eval_int(q0);
    if (have < need) return false;
  }
  return true;
}

CentralizerShape centralizer_shape(const PsiMap& psi) {
  CentralizerShape shape;
  for (const FactorIndex& idx : a_set(psi)) {
    const MultiPartition& mp = *psi.find(idx.j);
    const Partition& type = mp.pairs()[idx.r - 1].first;
    shape.push_back(CentralizerFactor{idx, idx.j, static_cast<int>(type.size()), type});
  }
  return shape;
}

}  // namespace kpg

#include "kpg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kpg/errors.hpp"

namespace kpg {

PsiMap GammaRep::psi() const {
  std::map<int, std::vector<Partition>> by_degree;
  for (const auto& [f, lam] : blocks) by_degree[f.degree()].push_back(lam);
  std::vector<std::pair<int, MultiPartition>> entries;
  for (auto& [j, parts] : by_degree)
    entries.emplace_back(j, MultiPartition::from_partitions(std::move(parts)));
  return PsiMap::from_entries(std::move(entries));
}

namespace {

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("oracle count exceeds 64 bits");
  return r;
}

FqMatrix block_diagonal(const Fq& F, int n,
                        const std::vector<std::pair<FqPoly, Partition>>& blocks) {
  FqMatrix m(F, n, n);
  int offset = 0;
  for (const auto& [f, lam] : blocks) {
    FqMatrix b = jordan_block_matrix(F, f, lam);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.set(offset + i, offset + j, b.get(i, j));
    offset += b.rows();
  }
  return m;
}

}  // namespace

std::vector<GammaRep> enumerate_gamma(const Fq& F, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_gamma: n must be >= 1");
  std::map<int, std::vector<FqPoly>> irr_cache;
  auto irreducibles = [&](int j) -> const std::vector<FqPoly>& {
    auto it = irr_cache.find(j);
    if (it == irr_cache.end()) it = irr_cache.emplace(j, irreducible_polys(F, j)).first;
    return it->second;
  };

  std::vector<GammaRep> out;
  for (const PsiMap& psi : enumerate_psi(n)) {
    if (!psi_nonempty_at(psi, F.q())) continue;
    std::vector<std::pair<FqPoly, Partition>> acc;

    // assign, degree by degree, disjoint sets of irreducibles to the
    // partition groups; within a group the set is chosen ascending
    std::function<void(size_t)> assign_degree = [&](size_t di) {
      if (di == psi.entries().size()) {
        out.push_back(GammaRep{acc, block_diagonal(F, n, acc)});
        return;
      }
      const auto& [j, mp] = psi.entries()[di];
      const std::vector<FqPoly>& irr = irreducibles(j);
      std::vector<char> used(irr.size(), 0);
      std::function<void(size_t)> assign_group = [&](size_t g) {
        if (g == mp.pairs().size()) {
          assign_degree(di + 1);
          return;
        }
        const auto& [lam, b] = mp.pairs()[g];
        std::vector<int> chosen;
        std::function<void(int)> pick = [&](int from) {
          if (static_cast<int>(chosen.size()) == b) {
            for (int idx : chosen) acc.emplace_back(irr[idx], lam);
            assign_group(g + 1);
            acc.resize(acc.size() - b);
            return;
          }
          for (int i = from; i < static_cast<int>(irr.size()); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            chosen.push_back(i);
            pick(i + 1);
            chosen.pop_back();
            used[i] = 0;
          }
        };
        pick(0);
      };
      assign_group(0);
    };
    assign_degree(0);
  }
  return out;
}

std::vector<FlagRep> enumerate_flags(const Fq& F, const DimensionVector& d) {
  std::vector<FlagRep> out;
  std::vector<FqMatrix> cur;
  std::function<void(const FqMatrix&, size_t)> rec = [&](const FqMatrix& base, size_t level) {
    if (level == d.dims().size()) {
      out.push_back(FlagRep{cur});
      return;
    }
    for_each_subspace_containing(base, d.dims()[level], [&](const FqMatrix& w) {
      FqMatrix r = w.row_basis();
      cur.push_back(r);
      rec(r, level + 1);
      cur.pop_back();
    });
  };
  rec(FqMatrix(F, 0, d.n()), 0);
  return out;
}

unsigned long long fixed_flag_count(const FqMatrix& x, const DimensionVector& d) {
  if (x.rows() != x.cols() || x.rows() != d.n())
    throw std::invalid_argument("fixed_flag_count: dimension mismatch");
  if (!x.is_invertible()) throw std::invalid_argument("fixed_flag_count: x must be invertible");
  const Fq& F = x.field();
  const size_t t = d.dims().size();
  // stability is tested from the smallest subspace up, short-circuiting
  std::function<unsigned long long(const FqMatrix&, size_t)> dfs =
      [&](const FqMatrix& base, size_t level) -> unsigned long long {
    if (level + 1 == t) return 1;  // the whole space is always stable
    unsigned long long total = 0;
    for_each_subspace_containing(base, d.dims()[level], [&](const FqMatrix& w) {
      if (subspace_stable(x, w)) total = checked_add(total, dfs(w.row_basis(), level + 1));
    });
    return total;
  };
  return dfs(FqMatrix(F, 0, d.n()), 0);
}

unsigned long long k_oracle(const Fq& F, int n, const DimensionVector& d, double budget,
                            bool parallel) {
  if (d.n() != n) throw std::invalid_argument("k_oracle: d must end at n");
  std::vector<GammaRep> reps = enumerate_gamma(F, n);
  mpz_class flags = total_flag_count_poly(d.block_sizes()).eval_int(F.q());
  mpz_class work = mpz_class(static_cast<unsigned long>(reps.size())) * flags;
  if (work > budget) {
    std::ostringstream os;
    os << "k_oracle: instance needs ~" << work.get_str() << " stability tests, over the budget of "
       << static_cast<long long>(budget);
    throw BudgetExceeded(os.str());
  }

  unsigned long long total = 0;
  const long long count = static_cast<long long>(reps.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (parallel)
  for (long long i = 0; i < count; ++i) total += fixed_flag_count(reps[i].matrix, d);
  return total;
}

namespace {

// basis of the null space of a rows x cols system, from its RREF
std::vector<std::vector<FqElem>> null_space_basis(const Fq& F, std::vector<FqElem> a, int rows,
                                                  int cols) {
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j)
      std::swap(a[static_cast<size_t>(pivot) * cols + j], a[static_cast<size_t>(rank) * cols + j]);
    FqElem pinv = F.inv(a[static_cast<size_t>(rank) * cols + c]);
    for (int j = 0; j < cols; ++j)
      a[static_cast<size_t>(rank) * cols + j] = F.mul(pinv, a[static_cast<size_t>(rank) * cols + j]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      FqElem f = a[static_cast<size_t>(r) * cols + c];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<size_t>(r) * cols + j] = F.sub(
            a[static_cast<size_t>(r) * cols + j], F.mul(f, a[static_cast<size_t>(rank) * cols + j]));
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  std::vector<std::vector<FqElem>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<FqElem> v(cols, 0);
    v[c] = 1;
    for (int cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0)
        v[cc] = F.neg(a[static_cast<size_t>(pivot_of_col[cc]) * cols + c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

unsigned long long k_burnside(const Fq& F, int n, const DimensionVector& d,
                              long long element_budget) {
  if (d.n() != n) throw std::invalid_argument("k_burnside: d must end at n");
  const long q = F.q();

  // block-upper-triangular entry pattern of the flag stabilizer
  auto block_of = [&](int r) {
    int b = 0;
    while (d.dims()[b] <= r) ++b;
    return b;
  };
  std::vector<std::pair<int, int>> allowed;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (block_of(r) <= block_of(c)) allowed.emplace_back(r, c);

  double candidates = 1;
  for (size_t i = 0; i < allowed.size(); ++i) candidates *= static_cast<double>(q);
  double worst_centralizer = 1;  // the centre costs q^(n^2) combinations
  for (int i = 0; i < n * n; ++i) worst_centralizer *= static_cast<double>(q);
  if (candidates > static_cast<double>(element_budget) ||
      worst_centralizer > static_cast<double>(element_budget)) {
    std::ostringstream os;
    os << "k_burnside: up to " << std::max(candidates, worst_centralizer)
       << " matrices to enumerate, over the budget of " << element_budget;
    throw BudgetExceeded(os.str());
  }

  unsigned long long candidate_count = 1;
  for (size_t i = 0; i < allowed.size(); ++i) candidate_count *= static_cast<unsigned long long>(q);

  mpz_class fix_sum = 0;
  unsigned long long group_order = 0;
  FqMatrix p_mat(F, n, n);
  for (unsigned long long code = 0; code < candidate_count; ++code) {
    unsigned long long c = code;
    for (const auto& [r, col] : allowed) {
      p_mat.set(r, col, static_cast<FqElem>(c % q));
      c /= q;
    }
    if (!p_mat.is_invertible()) continue;
    ++group_order;

    // centralizer algebra: null space of g -> gp - pg on n x n matrices
    const int dim = n * n;
    std::vector<FqElem> sys(static_cast<size_t>(dim) * dim, 0);
    auto var = [&](int r, int s) { return r * n + s; };
    for (int a = 0; a < n; ++a)
      for (int c2 = 0; c2 < n; ++c2) {
        int eq = a * n + c2;
        for (int b = 0; b < n; ++b) {
          // + g[a][b] p[b][c2]
          sys[static_cast<size_t>(eq) * dim + var(a, b)] =
              F.add(sys[static_cast<size_t>(eq) * dim + var(a, b)], p_mat.get(b, c2));
          // - p[a][b] g[b][c2]
          sys[static_cast<size_t>(eq) * dim + var(b, c2)] =
              F.sub(sys[static_cast<size_t>(eq) * dim + var(b, c2)], p_mat.get(a, b));
        }
      }
    auto basis = null_space_basis(F, sys, dim, dim);

    // invertible elements of the centralizer algebra
    unsigned long long combos = 1;
    for (size_t i = 0; i < basis.size(); ++i) combos *= static_cast<unsigned long long>(q);
    unsigned long long cent = 0;
    FqMatrix g(F, n, n);
    for (unsigned long long gc = 0; gc < combos; ++gc) {
      std::vector<FqElem> vec(dim, 0);
      unsigned long long t = gc;
      for (const auto& bvec : basis) {
        FqElem coef = static_cast<FqElem>(t % q);
        t /= q;
        if (coef != 0)
          for (int i = 0; i < dim; ++i) vec[i] = F.add(vec[i], F.mul(coef, bvec[i]));
      }
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) g.set(r, s, vec[var(r, s)]);
      if (g.is_invertible()) ++cent;
    }
    fix_sum += static_cast<unsigned long>(cent);
  }

  if (group_order == 0 || fix_sum % static_cast<unsigned long>(group_order) != 0)
    throw InternalError("k_burnside: fixed-point sum not divisible by |P|");
  mpz_class result = fix_sum / static_cast<unsigned long>(group_order);
  if (!result.fits_ulong_p()) throw std::overflow_error("k_burnside: result exceeds 64 bits");
  return result.get_ui();
}

}  // namespace kpg

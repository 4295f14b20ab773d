#include "kpg/flags.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kpg/errors.hpp"

namespace kpg {

DimensionVector::DimensionVector(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("DimensionVector: empty");
  int prev = 0;
  for (int d : dims_) {
    if (d <= prev) throw std::invalid_argument("DimensionVector: must be strictly increasing");
    prev = d;
  }
}

DimensionVector DimensionVector::parse(std::string_view csv) {
  std::vector<int> dims;
  int cur = 0;
  bool have = false;
  for (char ch : csv) {
    if (ch == ' ') continue;
    if (ch == ',') {
      if (!have) throw std::invalid_argument("DimensionVector: malformed list");
      dims.push_back(cur);
      cur = 0;
      have = false;
    } else if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
    } else {
      throw std::invalid_argument("DimensionVector: unexpected character");
    }
  }
  if (!have) throw std::invalid_argument("DimensionVector: malformed list");
  dims.push_back(cur);
  return DimensionVector(std::move(dims));
}

std::vector<int> DimensionVector::block_sizes() const {
  std::vector<int> blocks;
  int prev = 0;
  for (int d : dims_) {
    blocks.push_back(d - prev);
    prev = d;
  }
  return blocks;
}

std::string DimensionVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ",";
    os << dims_[i];
  }
  os << ")";
  return os.str();
}

EMatrix::EMatrix(std::vector<FactorIndex> factors, std::vector<std::vector<int>> rows)
    : factors_(std::move(factors)), rows_(std::move(rows)) {
  if (factors_.size() != rows_.size())
    throw std::invalid_argument("EMatrix: factor/row count mismatch");
}

nlohmann::ordered_json EMatrix::to_json() const {
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const auto& row : rows_) grid.push_back(row);
  return grid;
}

std::vector<EMatrix> enumerate_e_matrices(const PsiMap& psi, const DimensionVector& d) {
  if (psi.n() != d.n())
    throw std::invalid_argument("enumerate_e_matrices: |psi| and d are inconsistent");
  const std::vector<FactorIndex> factors = a_set(psi);
  const int nf = static_cast<int>(factors.size());
  const int t = d.length();
  std::vector<int> weight(nf), cap(nf);
  for (int f = 0; f < nf; ++f) {
    weight[f] = factors[f].j;
    cap[f] = static_cast<int>(psi.find(factors[f].j)->pairs()[factors[f].r - 1].first.size());
  }

  std::vector<EMatrix> out;
  std::vector<std::vector<int>> cols(t, std::vector<int>(nf, 0));

  // fill column i with weighted sum d_i, entrywise between the previous
  // column and the caps; recurse over columns
  std::function<void(int)> fill_column = [&](int i) {
    if (i == t) {
      if (cols[t - 1] != cap) return;
      std::vector<std::vector<int>> rows(nf, std::vector<int>(t));
      for (int f = 0; f < nf; ++f)
        for (int c = 0; c < t; ++c) rows[f][c] = cols[c][f];
      out.emplace_back(factors, std::move(rows));
      return;
    }
    std::function<void(int, int)> pick = [&](int f, int remaining) {
      if (f == nf) {
        if (remaining == 0) fill_column(i + 1);
        return;
      }
      int low = i == 0 ? 0 : cols[i - 1][f];
      for (int v = low; v <= cap[f] && v * weight[f] <= remaining; ++v) {
        cols[i][f] = v;
        pick(f + 1, remaining - v * weight[f]);
      }
      cols[i][f] = 0;
    };
    pick(0, d.dims()[i]);
  };
  fill_column(0);
  return out;
}

RationalPoly gaussian_binomial_poly(int n, int k) {
  if (k < 0 || k > n) return RationalPoly();
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<RationalPoly>> tab(n + 1, std::vector<RationalPoly>(k + 1));
  for (int i = 0; i <= n; ++i) tab[i][0] = RationalPoly::constant(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) {
      tab[i][j] = tab[i - 1][j - 1];
      if (j < i) tab[i][j] += RationalPoly::monomial(1, j) * tab[i - 1][j];
    }
  return tab[n][k];
}

RationalPoly total_flag_count_poly(const std::vector<int>& block_sizes) {
  RationalPoly acc = RationalPoly::constant(1);
  int remaining = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  for (int a : block_sizes) {
    if (a < 1) throw std::invalid_argument("total_flag_count_poly: blocks must be positive");
    acc *= gaussian_binomial_poly(remaining, a);
    remaining -= a;
  }
  return acc;
}

std::vector<long> interpolation_nodes(int count) {
  std::vector<long> nodes;
  for (long q = 2; static_cast<int>(nodes.size()) < count; ++q)
    if (is_prime_power(q)) nodes.push_back(q);
  return nodes;
}

namespace {

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("stable flag count exceeds 64 bits");
  return r;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("stable flag count exceeds 64 bits");
  return r;
}

unsigned long long to_ull(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p()) throw std::overflow_error("count exceeds 64 bits");
  return z.get_ui();
}

// flag_dims with zeros dropped and repeats collapsed; must end at m
std::vector<int> normalize_flag_dims(const std::vector<int>& fd, long m, const char* who) {
  std::vector<int> out;
  int prev = 0;
  for (int x : fd) {
    if (x < prev)
      throw std::invalid_argument(std::string(who) + ": flag dims must be weakly increasing");
    if (x != prev) out.push_back(x);
    prev = x;
  }
  if (m == 0 && out.empty()) return out;
  if (out.empty() || out.back() != m)
    throw std::invalid_argument(std::string(who) + ": flag dims must end at |lambda|");
  return out;
}

void for_each_combination(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int c = from; c <= m - (k - static_cast<int>(cur.size())); ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

int flat_rank(const Fq& F, std::vector<FqElem> a, int rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<size_t>(pivot) * cols + j],
                  a[static_cast<size_t>(rank) * cols + j]);
    FqElem pinv = F.inv(a[static_cast<size_t>(rank) * cols + c]);
    for (int r = rank + 1; r < rows; ++r) {
      FqElem f = F.mul(a[static_cast<size_t>(r) * cols + c], pinv);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<size_t>(r) * cols + j] =
            F.sub(a[static_cast<size_t>(r) * cols + j],
                  F.mul(f, a[static_cast<size_t>(rank) * cols + j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<FqElem> flat_mul(const Fq& F, const std::vector<FqElem>& a,
                             const std::vector<FqElem>& b, int d) {
  std::vector<FqElem> r(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      FqElem v = a[static_cast<size_t>(i) * d + l];
      if (v == 0) continue;
      for (int j = 0; j < d; ++j)
        r[static_cast<size_t>(i) * d + j] =
            F.add(r[static_cast<size_t>(i) * d + j], F.mul(v, b[static_cast<size_t>(l) * d + j]));
    }
  return r;
}

// Jordan type of a nilpotent matrix from the rank sequence of its powers:
// the number of blocks of size >= t is rank(A^(t-1)) - rank(A^t).
std::vector<int> nilpotent_type_flat(const Fq& F, const std::vector<FqElem>& A, int d) {
  if (d == 0) return {};
  std::vector<int> ranks{d};
  std::vector<FqElem> P = A;
  while (true) {
    int r = flat_rank(F, P, d, d);
    ranks.push_back(r);
    if (r == 0) break;
    P = flat_mul(F, P, A, d);
  }
  std::vector<int> blocks_ge;  // index t-1: #blocks of size >= t
  for (size_t t = 1; t < ranks.size(); ++t) blocks_ge.push_back(ranks[t - 1] - ranks[t]);
  std::vector<int> type;  // conjugate of blocks_ge
  for (int i = 1; i <= blocks_ge[0]; ++i) {
    int cnt = 0;
    for (int bg : blocks_ge)
      if (bg >= i) ++cnt;
    type.push_back(cnt);
  }
  return type;
}

// gaussian multinomial evaluated at the field size, as an exact integer
unsigned long long gauss_multinomial_val(long q, int m, const std::vector<int>& steps) {
  mpz_class acc = 1;
  int prev = 0, remaining = m;
  for (int f : steps) {
    int a = f - prev;
    acc *= gaussian_binomial_poly(remaining, a).eval_int(q);
    remaining -= a;
    prev = f;
  }
  return to_ull(acc);
}

// Counts stable flags over one concrete field by recursing on subspace or
// quotient TYPES rather than on the subspaces themselves: a stable flag
// through a first subspace W is a stable flag of the quotient module, whose
// count depends only on the quotient's Jordan type.  The candidate scans
// (the only superpolynomial part) run under OpenMP.
class StableFlagCounter {
 public:
  explicit StableFlagCounter(const Fq& F) : F_(F) {}

  unsigned long long count(const std::vector<int>& lambda, const std::vector<int>& steps) {
    const int t = static_cast<int>(steps.size());
    if (t <= 1) return 1;
    if (lambda.size() == 1) return 1;  // single Jordan block: one stable chain
    const int m = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (lambda[0] == 1) return gauss_multinomial_val(F_.q(), m, steps);  // identity
    auto key = std::make_pair(lambda, steps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // branch on whichever end of the flag has fewer subspace candidates
    const int kb = steps[0];
    const int kt = steps[t - 2];
    mpz_class cost_b = gaussian_binomial_poly(m, kb).eval_int(F_.q());
    mpz_class cost_t = gaussian_binomial_poly(m, m - kt).eval_int(F_.q());
    const bool bottom = cost_b <= cost_t;

    auto hist = scan(lambda, bottom ? kb : kt, bottom);
    std::vector<int> reduced;
    if (bottom)
      for (int i = 1; i < t; ++i) reduced.push_back(steps[i] - kb);
    else
      reduced.assign(steps.begin(), steps.end() - 1);

    unsigned long long total = 0;
    for (const auto& [type, cnt] : hist)
      total = checked_add(total, checked_mul(cnt, count(type, reduced)));
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const Fq& F_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, unsigned long long> memo_;

  // Histogram of stable k-dimensional subspaces of the type-lambda module,
  // keyed by the Jordan type of the quotient (quotient_side) or of the
  // subspace itself.
  std::map<std::vector<int>, unsigned long long> scan(const std::vector<int>& lambda, int k,
                                                      bool quotient_side) {
    const long q = F_.q();
    const int m = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<int> prev(m, -1);  // image of basis vector c under the nilpotent
    {
      int base = 0;
      for (int part : lambda) {
        for (int i = 1; i < part; ++i) prev[base + i] = base + i - 1;
        base += part;
      }
    }

    std::map<std::vector<int>, unsigned long long> hist;
    for_each_combination(m, k, [&](const std::vector<int>& pivots) {
      std::vector<char> is_pivot(m, 0);
      for (int c : pivots) is_pivot[c] = 1;
      std::vector<int> comp;
      for (int c = 0; c < m; ++c)
        if (!is_pivot[c]) comp.push_back(c);
      const int mq = m - k;
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < k; ++i)
        for (int c = pivots[i] + 1; c < m; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(i, c);
      unsigned long long ncand = 1;
      for (size_t i = 0; i < free_pos.size(); ++i)
        ncand = checked_mul(ncand, static_cast<unsigned long long>(q));

#pragma omp parallel
      {
        std::map<std::vector<int>, unsigned long long> local;
        std::vector<FqElem> W(static_cast<size_t>(k) * m, 0);
        for (int i = 0; i < k; ++i) W[static_cast<size_t>(i) * m + pivots[i]] = 1;
        std::vector<FqElem> img(m), red(m);
        std::vector<FqElem> S(static_cast<size_t>(k) * k);
        std::vector<FqElem> Q(static_cast<size_t>(mq) * mq);

#pragma omp for schedule(static)
        for (long long code = 0; code < static_cast<long long>(ncand); ++code) {
          unsigned long long c = static_cast<unsigned long long>(code);
          for (const auto& [r, col] : free_pos) {
            W[static_cast<size_t>(r) * m + col] = static_cast<FqElem>(c % q);
            c /= q;
          }
          // stability: the image of every basis row must reduce to zero;
          // the reduction coefficients are the subspace-type matrix
          bool stable = true;
          for (int i = 0; i < k && stable; ++i) {
            std::fill(img.begin(), img.end(), 0);
            for (int col = 0; col < m; ++col) {
              FqElem v = W[static_cast<size_t>(i) * m + col];
              if (v != 0 && prev[col] >= 0) img[prev[col]] = v;
            }
            for (int l = 0; l < k; ++l) {
              FqElem coef = img[pivots[l]];
              if (!quotient_side) S[static_cast<size_t>(l) * k + i] = coef;
              if (coef != 0)
                for (int col = 0; col < m; ++col)
                  img[col] = F_.sub(img[col], F_.mul(coef, W[static_cast<size_t>(l) * m + col]));
            }
            for (int col = 0; col < m; ++col)
              if (img[col] != 0) {
                stable = false;
                break;
              }
          }
          if (!stable) continue;

          std::vector<int> type;
          if (quotient_side) {
            for (int ci = 0; ci < mq; ++ci) {
              std::fill(red.begin(), red.end(), 0);
              if (prev[comp[ci]] >= 0) red[prev[comp[ci]]] = 1;
              for (int l = 0; l < k; ++l) {
                FqElem coef = red[pivots[l]];
                if (coef != 0)
                  for (int col = 0; col < m; ++col)
                    red[col] = F_.sub(red[col], F_.mul(coef, W[static_cast<size_t>(l) * m + col]));
              }
              for (int ri = 0; ri < mq; ++ri) Q[static_cast<size_t>(ri) * mq + ci] = red[comp[ri]];
            }
            type = nilpotent_type_flat(F_, Q, mq);
          } else {
            type = nilpotent_type_flat(F_, S, k);
          }
          ++local[type];
        }

#pragma omp critical
        for (const auto& [type, cnt] : local) hist[type] += cnt;
      }
    });
    return hist;
  }
};

}  // namespace

unsigned long long count_stable_flags(const Fq& F, const Partition& lambda,
                                      const std::vector<int>& flag_dims) {
  auto steps = normalize_flag_dims(flag_dims, lambda.size(), "count_stable_flags");
  StableFlagCounter counter(F);
  return counter.count(lambda.expanded(), steps);
}

unsigned long long count_stable_flags_ref(const Fq& F, const Partition& lambda,
                                          const std::vector<int>& flag_dims) {
  auto steps = normalize_flag_dims(flag_dims, lambda.size(), "count_stable_flags_ref");
  const int m = static_cast<int>(lambda.size());
  if (steps.size() <= 1) return 1;
  FqPoly x_minus_1;
  x_minus_1.coeffs = {F.neg(1), 1};
  const FqMatrix u = jordan_block_matrix(F, x_minus_1, lambda);

  // depth-first over the flag itself, extending only stable subspaces
  std::function<unsigned long long(const FqMatrix&, size_t)> dfs =
      [&](const FqMatrix& base, size_t level) -> unsigned long long {
    if (level + 1 == steps.size()) return 1;  // the last member is the whole space
    unsigned long long total = 0;
    for_each_subspace_containing(base, steps[level], [&](const FqMatrix& w) {
      if (subspace_stable(u, w)) total = checked_add(total, dfs(w.row_basis(), level + 1));
    });
    return total;
  };
  return dfs(FqMatrix(F, 0, m), 0);
}

RationalPoly stable_flag_count_poly(const Partition& lambda, const std::vector<int>& flag_dims) {
  const long m = lambda.size();
  auto steps = normalize_flag_dims(flag_dims, m, "stable_flag_count_poly");

  using Key = std::pair<std::vector<std::pair<int, int>>, std::vector<int>>;
  static std::map<Key, RationalPoly> memo;
  static std::mutex memo_mu;
  Key key{lambda.pairs(), steps};
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  RationalPoly result;
  if (steps.size() <= 1 || lambda.num_parts() == 1) {
    result = RationalPoly::constant(1);
  } else if (lambda.pairs().size() == 1 && lambda.pairs()[0].first == 1) {
    // the identity stabilizes every flag
    std::vector<int> blocks;
    int prevf = 0;
    for (int f : steps) {
      blocks.push_back(f - prevf);
      prevf = f;
    }
    result = total_flag_count_poly(blocks);
  } else {
    int deg_bound = 0;
    {
      std::vector<int> blocks;
      int prevf = 0;
      for (int f : steps) {
        blocks.push_back(f - prevf);
        prevf = f;
      }
      for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) deg_bound += blocks[i] * blocks[j];
    }
    std::vector<std::pair<mpq_class, mpq_class>> points;
    for (long q0 : interpolation_nodes(deg_bound + 1)) {
      Fq field = Fq::from_q(q0);
      unsigned long long v = count_stable_flags(field, lambda, steps);
      points.emplace_back(mpq_class(q0), mpq_class(static_cast<unsigned long>(v)));
    }
    result = lagrange_interpolate(points);
    if (!result.has_integer_coeffs() || result.degree() > deg_bound)
      throw InternalError("stable_flag_count_poly: interpolation produced an invalid polynomial");
  }

  std::lock_guard<std::mutex> lock(memo_mu);
  memo.emplace(std::move(key), result);
  return result;
}

RationalPoly f_value_poly(const PsiMap& psi, const DimensionVector& d) {
  if (psi.n() != d.n()) throw std::invalid_argument("f_value_poly: |psi| and d are inconsistent");
  RationalPoly total;
  for (const EMatrix& e : enumerate_e_matrices(psi, d)) {
    RationalPoly prod = RationalPoly::constant(1);
    for (size_t f = 0; f < e.factors().size(); ++f) {
      const FactorIndex& fi = e.factors()[f];
      const Partition& lam = psi.find(fi.j)->pairs()[fi.r - 1].first;
      prod *= stable_flag_count_poly(lam, e.rows()[f]).substitute_power(fi.j);
    }
    total += prod;
  }
  if (!total.has_integer_coeffs())
    throw InternalError("f_value_poly: non-integer coefficients");
  return total;
}

}  // namespace kpg

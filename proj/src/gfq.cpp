#include "kpg/gfq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpg {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_prime_power(long q, long* p_out, int* k_out) {
  if (q < 2) return false;
  long p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;  // q itself prime
      break;
    }
  }
  long rest = q;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

namespace {

constexpr long kMaxQ = 128;  // table size q^2 stays tiny

// F_p polynomial helpers used only to bootstrap the field tables
std::vector<int> mod_p_poly_mul(const std::vector<int>& a, const std::vector<int>& b, long p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + 1L * a[i] * b[j]) % p);
  return r;
}

std::vector<int> mod_p_poly_rem(std::vector<int> a, const std::vector<int>& m, long p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      long v = a[i - dm + j] - 1L * c * m[j];
      a[i - dm + j] = static_cast<int>(((v % p) + p) % p);
    }
  }
  a.resize(dm);
  return a;
}

// irreducibility over F_p by trial division against all monic polynomials of
// degree 1..deg/2 (p and deg are tiny here)
bool mod_p_irreducible(const std::vector<int>& f, long p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> g(d + 1);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      auto rem = mod_p_poly_rem(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(long p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("Fq: p must be prime");
  if (k < 1) throw std::invalid_argument("Fq: k must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kMaxQ) throw std::invalid_argument("Fq: q too large for table arithmetic");
  }

  // lexicographically least monic irreducible of degree k, constant term first
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  if (k == 1) {
    modulus_[0] = 0;  // X itself; arithmetic below is plain mod p
  } else {
    bool found = false;
    for (long code = 0; code < q_ && !found; ++code) {
      std::vector<int> f(k + 1);
      long c = code;
      for (int i = 0; i < k; ++i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (mod_p_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("Fq: no irreducible modulus found");
  }

  // element index <-> coefficient vector is the base-p expansion
  auto decode = [&](long e) {
    std::vector<int> v(k_);
    for (int i = 0; i < k_; ++i) {
      v[i] = static_cast<int>(e % p_);
      e /= p_;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long e = 0;
    for (int i = k_ - 1; i >= 0; --i) e = e * p_ + v[i];
    return e;
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    auto va = decode(a);
    std::vector<int> vn(k_);
    for (int i = 0; i < k_; ++i) vn[i] = static_cast<int>((p_ - va[i]) % p_);
    neg_[a] = static_cast<FqElem>(encode(vn));
    for (long b = 0; b < q_; ++b) {
      auto vb = decode(b);
      std::vector<int> vs(k_);
      for (int i = 0; i < k_; ++i) vs[i] = static_cast<int>((va[i] + vb[i]) % p_);
      add_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] = static_cast<FqElem>(encode(vs));
      auto prod = mod_p_poly_rem(mod_p_poly_mul(va, vb, p_), modulus_, p_);
      prod.resize(k_, 0);
      mul_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] = static_cast<FqElem>(encode(prod));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[idx(static_cast<FqElem>(a), static_cast<FqElem>(b))] == 1) {
        inv_[a] = static_cast<FqElem>(b);
        break;
      }
}

Fq Fq::from_q(long q) {
  long p;
  int k;
  if (!is_prime_power(q, &p, &k)) throw std::invalid_argument("Fq: q is not a prime power");
  return Fq(p, k);
}

FqElem Fq::inv(FqElem a) const {
  if (a == 0) throw std::domain_error("Fq: inverse of zero");
  return inv_[a];
}

std::vector<int> Fq::coeff_vector(FqElem a) const {
  std::vector<int> v(k_);
  long e = a;
  for (int i = 0; i < k_; ++i) {
    v[i] = static_cast<int>(e % p_);
    e /= p_;
  }
  return v;
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return coeffs < o.coeffs;
}

std::string FqPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0 && !(first && i == 0)) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      if (c != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FqPoly fqpoly_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  return r;
}

std::vector<FqElem> fqpoly_rem(const Fq& F, std::vector<FqElem> a, const FqPoly& b) {
  const int db = b.degree();
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    FqElem c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b.coeffs[j]));
  }
  a.resize(db);
  return a;
}

std::vector<FqPoly> irreducible_polys(const Fq& F, int j) {
  if (j < 1) throw std::invalid_argument("irreducible_polys: j must be >= 1");
  // trial divisors: X plus every irreducible of degree <= j/2
  std::vector<FqPoly> divisors;
  if (j >= 2) {
    FqPoly x;
    x.coeffs = {0, 1};
    divisors.push_back(x);
    for (int d = 1; 2 * d <= j; ++d)
      for (const FqPoly& g : irreducible_polys(F, d)) divisors.push_back(g);
  }

  std::vector<FqPoly> out;
  long count = 1;
  for (int i = 0; i < j; ++i) count *= F.q();
  for (long code = 0; code < count; ++code) {
    FqPoly f;
    f.coeffs.resize(j + 1);
    long c = code;
    for (int i = 0; i < j; ++i) {
      f.coeffs[i] = static_cast<FqElem>(c % F.q());
      c /= F.q();
    }
    f.coeffs[j] = 1;
    if (j == 1) {
      if (f.coeffs[0] != 0) out.push_back(f);  // exclude X
      continue;
    }
    bool irred = true;
    for (const FqPoly& g : divisors) {
      auto rem = fqpoly_rem(F, f.coeffs, g);
      if (std::all_of(rem.begin(), rem.end(), [](FqElem x) { return x == 0; })) {
        irred = false;
        break;
      }
    }
    if (irred) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FqMatrix::FqMatrix(const Fq& F, int rows, int cols)
    : F_(&F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

FqMatrix FqMatrix::identity(const Fq& F, int n) {
  FqMatrix m(F, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
  if (F_ != o.F_ || cols_ != o.rows_)
    throw std::invalid_argument("FqMatrix::mul: dimension or field mismatch");
  FqMatrix r(*F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      FqElem v = get(i, l);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.set(i, j, F_->add(r.get(i, j), F_->mul(v, o.get(l, j))));
    }
  return r;
}

namespace {

// in-place row reduction; returns rank.  If reduced, produces RREF.
int eliminate(const Fq& F, std::vector<FqElem>& a, int rows, int cols, bool reduced) {
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
    FqElem piv = a[static_cast<size_t>(rank) * cols + c];
    FqElem pinv = F.inv(piv);
    for (int j = 0; j < cols; ++j)
      a[static_cast<size_t>(rank) * cols + j] = F.mul(pinv, a[static_cast<size_t>(rank) * cols + j]);
    int from = reduced ? 0 : rank + 1;
    for (int r = from; r < rows; ++r) {
      if (r == rank) continue;
      FqElem f = a[static_cast<size_t>(r) * cols + c];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<size_t>(r) * cols + j] =
            F.sub(a[static_cast<size_t>(r) * cols + j],
                  F.mul(f, a[static_cast<size_t>(rank) * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int FqMatrix::rank() const {
  std::vector<FqElem> a(a_);
  return eliminate(*F_, a, rows_, cols_, false);
}

FqMatrix FqMatrix::row_basis() const {
  std::vector<FqElem> a(a_);
  int rank = eliminate(*F_, a, rows_, cols_, true);
  FqMatrix r(*F_, rank, cols_);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, a[static_cast<size_t>(i) * cols_ + j]);
  return r;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("FqMatrix::inverse: not square");
  const int n = rows_;
  const int w = 2 * n;
  std::vector<FqElem> a(static_cast<size_t>(n) * w, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * w + j] = get(i, j);
    a[static_cast<size_t>(i) * w + n + i] = 1;
  }
  // Gauss-Jordan restricted to the left block: every column must pivot
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[static_cast<size_t>(r) * w + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("FqMatrix::inverse: singular matrix");
    for (int j = 0; j < w; ++j)
      std::swap(a[static_cast<size_t>(pivot) * w + j], a[static_cast<size_t>(c) * w + j]);
    FqElem pinv = F_->inv(a[static_cast<size_t>(c) * w + c]);
    for (int j = 0; j < w; ++j)
      a[static_cast<size_t>(c) * w + j] = F_->mul(pinv, a[static_cast<size_t>(c) * w + j]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      FqElem f = a[static_cast<size_t>(r) * w + c];
      if (f == 0) continue;
      for (int j = 0; j < w; ++j)
        a[static_cast<size_t>(r) * w + j] =
            F_->sub(a[static_cast<size_t>(r) * w + j], F_->mul(f, a[static_cast<size_t>(c) * w + j]));
    }
  }
  FqMatrix r(*F_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, a[static_cast<size_t>(i) * w + n + j]);
  return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

FqMatrix jordan_block_matrix(const Fq& F, const FqPoly& f, const Partition& lambda) {
  const int d = f.degree();
  const int n = d * static_cast<int>(lambda.size());
  FqMatrix m(F, n, n);
  int offset = 0;
  for (auto [part, mult] : lambda.pairs()) {
    for (int rep = 0; rep < mult; ++rep) {
      // one string of `part` companion blocks C_f linked by identity blocks
      // on the block superdiagonal; matrices act on column vectors
      for (int blk = 0; blk < part; ++blk) {
        int base = offset + blk * d;
        for (int i = 1; i < d; ++i) m.set(base + i, base + i - 1, 1);
        for (int i = 0; i < d; ++i) m.set(base + i, base + d - 1, F.neg(f.coeffs[i]));
        if (blk + 1 < part)
          for (int i = 0; i < d; ++i) m.set(base + i, base + d + i, 1);
      }
      offset += part * d;
    }
  }
  return m;
}

bool subspace_stable(const FqMatrix& x, const FqMatrix& basis) {
  const Fq& F = basis.field();
  const int k = basis.rows(), m = basis.cols();
  FqMatrix stacked(F, 2 * k, m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) stacked.set(i, j, basis.get(i, j));
  // rows of basis are coordinate vectors; apply x to each (x acting on columns)
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < m; ++r) {
      FqElem acc = 0;
      for (int c = 0; c < m; ++c) acc = F.add(acc, F.mul(x.get(r, c), basis.get(i, c)));
      stacked.set(k + i, r, acc);
    }
  return stacked.rank() == basis.rank();
}

namespace {

void gen_pivot_sets(int m, int k, int from, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int c = from; c <= m - (k - static_cast<int>(cur.size())); ++c) {
    cur.push_back(c);
    gen_pivot_sets(m, k, c + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_subspace(const Fq& F, int m, int k,
                       const std::function<void(const FqMatrix&)>& fn) {
  if (k < 0 || k > m) throw std::invalid_argument("for_each_subspace: need 0 <= k <= m");
  if (k == 0) {
    fn(FqMatrix(F, 0, m));
    return;
  }
  std::vector<int> cur;
  gen_pivot_sets(m, k, 0, cur, [&](const std::vector<int>& pivots) {
    std::vector<char> is_pivot(m, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    for (int i = 0; i < k; ++i)
      for (int c = pivots[i] + 1; c < m; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
    unsigned long long total = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) total *= static_cast<unsigned long long>(F.q());
    FqMatrix basis(F, k, m);
    for (int i = 0; i < k; ++i) basis.set(i, pivots[i], 1);
    for (unsigned long long code = 0; code < total; ++code) {
      unsigned long long c = code;
      for (const auto& [r, col] : free_pos) {
        basis.set(r, col, static_cast<FqElem>(c % F.q()));
        c /= F.q();
      }
      fn(basis);
    }
  });
}

void for_each_subspace_containing(const FqMatrix& base, int k,
                                  const std::function<void(const FqMatrix&)>& fn) {
  const Fq& F = base.field();
  const int m = base.cols(), k0 = base.rows();
  if (k < k0 || k > m)
    throw std::invalid_argument("for_each_subspace_containing: need dim(base) <= k <= m");
  if (k == k0) {
    fn(base);
    return;
  }
  // complement columns give coordinates on the quotient
  std::vector<char> is_pivot(m, 0);
  std::vector<int> pivot_col(k0, -1);
  for (int i = 0; i < k0; ++i) {
    for (int c = 0; c < m; ++c)
      if (base.get(i, c) != 0) {
        pivot_col[i] = c;
        break;
      }
    is_pivot[pivot_col[i]] = 1;
  }
  std::vector<int> comp;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const int mq = static_cast<int>(comp.size());

  for_each_subspace(F, mq, k - k0, [&](const FqMatrix& qbasis) {
    FqMatrix lifted(F, k, m);
    for (int i = 0; i < k0; ++i)
      for (int c = 0; c < m; ++c) lifted.set(i, c, base.get(i, c));
    for (int i = 0; i < k - k0; ++i)
      for (int jc = 0; jc < mq; ++jc) lifted.set(k0 + i, comp[jc], qbasis.get(i, jc));
    fn(lifted);
  });
}

std::vector<FqMatrix> enumerate_subspaces(const Fq& F, int m, int k) {
  std::vector<FqMatrix> out;
  for_each_subspace(F, m, k, [&](const FqMatrix& b) { out.push_back(b); });
  return out;
}

}  // namespace kpg

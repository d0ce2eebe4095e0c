#include "heckelab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckelab {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_scalar_multiple_of_identity(Scalar* out) const {
  if (rows != cols) return false;
  Scalar c = rows > 0 ? at(0, 0) : Scalar(0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? c : Scalar(0))) return false;
  if (out) *out = c;
  return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::pow(int e) const {
  ExactMatrix r = identity(rows), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Scalar ExactMatrix::trace() const {
  Scalar t(0);
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

SVec ExactMatrix::apply(const SVec& v) const {
  SVec r(rows, Scalar(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

ExactMatrix ExactMatrix::col(int j) const {
  ExactMatrix c(rows, 1);
  for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
  return c;
}

void ExactMatrix::set_col(int j, const SVec& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

int ExactMatrix::rref(std::vector<int>* pivots) {
  int rank = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
    Scalar inv = at(rank, c).inv();
    for (int j = c; j < cols; ++j) at(rank, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || at(i, c).is_zero()) continue;
      Scalar f = at(i, c);
      for (int j = c; j < cols; ++j) at(i, j) -= f * at(rank, j);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

int ExactMatrix::rank() const {
  ExactMatrix m = *this;
  return m.rref();
}

Scalar ExactMatrix::det() const {
  if (rows != cols) throw std::invalid_argument("det: not square");
  ExactMatrix m = *this;
  Scalar d(1);
  int n = rows;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows != cols) return std::nullopt;
  ExactMatrix aug = hstack(*this, identity(rows));
  std::vector<int> piv;
  int r = aug.rref(&piv);
  if (r < rows) return std::nullopt;
  ExactMatrix inv(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) inv.at(i, j) = aug.at(i, cols + j);
  return inv;
}

ExactMatrix from_qmat(const std::vector<QVec>& rows) {
  int r = (int)rows.size(), c = r ? (int)rows[0].size() : 0;
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(rows[i][j]);
  return m;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

std::vector<SVec> matrix_kernel(const ExactMatrix& m) {
  ExactMatrix r = m;
  std::vector<int> piv;
  r.rref(&piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;

  std::vector<SVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    SVec v(m.cols, Scalar(0));
    v[c] = Scalar(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at((int)k, c);
    // canonical scale: first nonzero entry 1
    for (auto& x : v)
      if (!x.is_zero()) {
        Scalar inv = x.inv();
        for (auto& y : v) y *= inv;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& A, const ExactMatrix& B) {
  ExactMatrix aug = hstack(A, B);
  std::vector<int> piv;
  aug.rref(&piv);
  // consistency: no pivot may land in the B block
  for (int c : piv)
    if (c >= A.cols) return std::nullopt;
  ExactMatrix X(A.cols, B.cols);
  for (size_t k = 0; k < piv.size(); ++k)
    for (int j = 0; j < B.cols; ++j) X.at(piv[k], j) = aug.at((int)k, A.cols + j);
  return X;
}

ExactMatrix column_space(const ExactMatrix& m) {
  ExactMatrix t = m.transpose();
  std::vector<int> piv;
  int r = t.rref(&piv);
  ExactMatrix out(m.rows, r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < m.rows; ++i) out.at(i, k) = t.at(k, i);
  return out;
}

int span_rank(const std::vector<SVec>& vecs) {
  if (vecs.empty()) return 0;
  ExactMatrix m((int)vecs.size(), (int)vecs[0].size());
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < vecs[i].size(); ++j) m.at((int)i, (int)j) = vecs[i][j];
  return m.rref();
}

bool same_span(const std::vector<SVec>& a, const std::vector<SVec>& b) {
  int ra = span_rank(a), rb = span_rank(b);
  if (ra != rb) return false;
  std::vector<SVec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_rank(all) == ra;
}

// ---------------- univariate helpers ----------------

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Scalar uni_eval(const UniPoly& p, const Scalar& x) {
  Scalar acc(0);
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

UniPoly uni_mul(const UniPoly& p, const UniPoly& q) {
  if (p.empty() || q.empty()) return {};
  UniPoly r(p.size() + q.size() - 1, Scalar(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return uni_trim(r);
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Scalar((long)k));
  return uni_trim(d);
}

static UniPoly uni_monic(UniPoly p) {
  p = uni_trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inv();
  for (auto& c : p) c *= inv;
  return p;
}

static UniPoly uni_mod(UniPoly r, const UniPoly& d) {
  r = uni_trim(r);
  while (r.size() >= d.size() && !r.empty()) {
    Scalar f = r.back() / d.back();
    size_t off = r.size() - d.size();
    for (size_t k = 0; k < d.size(); ++k) r[off + k] -= f * d[k];
    r = uni_trim(r);
  }
  return r;
}

UniPoly uni_gcd(UniPoly p, UniPoly q) {
  p = uni_trim(p);
  q = uni_trim(q);
  while (!q.empty()) {
    UniPoly r = uni_mod(p, q);
    p = q;
    q = r;
  }
  return uni_monic(p);
}

UniPoly uni_deflate(const UniPoly& p, const Scalar& root) {
  // synthetic division by (t - root)
  UniPoly q(p.size() - 1, Scalar(0));
  Scalar carry(0);
  for (size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  Scalar rem = p[0] + carry * root;
  if (!rem.is_zero()) throw std::logic_error("uni_deflate: inexact division");
  return q;
}

UniPoly char_poly(const ExactMatrix& m) {
  // Faddeev-LeVerrier
  int n = m.rows;
  UniPoly c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  ExactMatrix M = ExactMatrix::zero(n, n);
  for (int k = 1; k <= n; ++k) {
    M = m * M;
    for (int i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
    Scalar ck = (m * M).trace();
    c[n - k] = -(ck / Scalar(k));
  }
  return c;
}

UniPoly min_poly(const ExactMatrix& m) {
  int n = m.rows;
  int d2 = n * n;
  // rows of successive powers, reduced incrementally
  std::vector<SVec> echelon;       // reduced rows
  std::vector<SVec> combos;        // combos[i]: coefficients expressing echelon row i in powers
  std::vector<int> lead;           // leading index of each echelon row
  ExactMatrix pw = ExactMatrix::identity(n);
  for (int k = 0;; ++k) {
    SVec row(d2);
    for (int i = 0; i < d2; ++i) row[i] = pw.a[i];
    SVec combo(k + 1, Scalar(0));
    combo[k] = Scalar(1);
    // reduce against echelon
    for (size_t e = 0; e < echelon.size(); ++e) {
      const Scalar& x = row[lead[e]];
      if (x.is_zero()) continue;
      Scalar f = x;
      for (int i = 0; i < d2; ++i) row[i] -= f * echelon[e][i];
      for (size_t j = 0; j < combos[e].size(); ++j) combo[j] -= f * combos[e][j];
    }
    int l = -1;
    for (int i = 0; i < d2; ++i)
      if (!row[i].is_zero()) {
        l = i;
        break;
      }
    if (l < 0) {
      // dependence found: combo gives the minimal polynomial
      return uni_monic(UniPoly(combo.begin(), combo.end()));
    }
    Scalar inv = row[l].inv();
    for (int i = 0; i < d2; ++i) row[i] *= inv;
    for (auto& c : combo) c *= inv;
    echelon.push_back(std::move(row));
    combos.push_back(SVec(combo.begin(), combo.end()));
    lead.push_back(l);
    pw = pw * m;
  }
}

// ---- Gaussian-rational root extraction ----

namespace {

// all Gaussian integers with norm equal to nn
std::vector<std::pair<mpz_class, mpz_class>> gaussian_with_norm(const mpz_class& nn) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  mpz_class a = 0;
  while (a * a <= nn) {
    mpz_class b2 = nn - a * a;
    mpz_class b = sqrt(b2);
    if (b * b == b2) out.emplace_back(a, b);
    ++a;
  }
  return out;
}

}  // namespace

EigenRoots gaussian_roots(const UniPoly& p_in) {
  UniPoly p = uni_monic(p_in);
  if (p.empty()) throw std::invalid_argument("gaussian_roots: zero polynomial");
  EigenRoots out;
  if (p.size() == 1) return out;

  // zero roots first
  int zero_mult = 0;
  while (p.size() > 1 && p[0].is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Scalar(0), zero_mult);

  if (p.size() > 1) {
    UniPoly sf = p;
    UniPoly g = uni_gcd(p, uni_derivative(p));
    if (g.size() > 1) {
      // squarefree part p / g via repeated deflation is not available; use
      // exact long division
      UniPoly q;
      {
        UniPoly r = p;
        q.assign(p.size() - g.size() + 1, Scalar(0));
        while (r.size() >= g.size() && !uni_trim(r).empty()) {
          r = uni_trim(r);
          if (r.size() < g.size()) break;
          Scalar f = r.back() / g.back();
          size_t off = r.size() - g.size();
          q[off] = f;
          for (size_t k = 0; k < g.size(); ++k) r[off + k] -= f * g[k];
        }
      }
      sf = uni_monic(q);
    }

    // integerize: candidates z/D with z a Gaussian-integer divisor of the
    // constant term of the integerized monic polynomial
    mpz_class D = 1;
    for (auto& c : sf) {
      D = lcm(D, c.re.get_den());
      D = lcm(D, c.im.get_den());
    }
    int deg = (int)sf.size() - 1;
    Scalar b0 = sf[0];
    for (int k = 0; k < deg; ++k) b0 = b0 * Scalar(Rat(D));
    mpz_class normb0 = b0.norm().get_num();  // integral by construction

    std::vector<Scalar> candidates;
    if (normb0 == 0) throw std::logic_error("gaussian_roots: squarefree part lost zero root");
    const mpz_class cap("1000000000000");
    if (normb0 > cap)
      throw std::runtime_error(
          "gaussian_roots: eigenvalue candidate search too large; "
          "spectrum is outside the supported Gaussian-rational range");
    // divisors of norm(b0)
    std::vector<mpz_class> divs;
    mpz_class d = 1;
    while (d * d <= normb0) {
      if (normb0 % d == 0) {
        divs.push_back(d);
        if (d * d != normb0) divs.push_back(normb0 / d);
      }
      ++d;
    }
    for (auto& dv : divs)
      for (auto& [x, y] : gaussian_with_norm(dv)) {
        Rat rx(x), ry(y);
        rx /= D;
        ry /= D;
        candidates.push_back(Scalar(rx, ry));
        if (y != 0) candidates.push_back(Scalar(rx, -ry));
        if (x != 0) {
          candidates.push_back(Scalar(-rx, ry));
          if (y != 0) candidates.push_back(Scalar(-rx, -ry));
        }
      }

    for (auto& z : candidates) {
      if (!uni_eval(sf, z).is_zero()) continue;
      // multiplicity in the full polynomial
      int mult = 0;
      while (p.size() > 1 && uni_eval(p, z).is_zero()) {
        p = uni_deflate(p, z);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(z, mult);
    }
    out.unresolved_degree = (int)p.size() - 1;
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](auto& a, auto& b) { return scalar_less(a.first, b.first); });
  return out;
}

std::vector<SVec> generalized_eigenspace(const ExactMatrix& m, const Scalar& lambda,
                                         int minpoly_mult) {
  ExactMatrix shifted = m;
  for (int i = 0; i < m.rows; ++i) shifted.at(i, i) -= lambda;
  return matrix_kernel(shifted.pow(minpoly_mult));
}

}  // namespace heckelab

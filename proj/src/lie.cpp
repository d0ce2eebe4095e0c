#include "heckelab/lie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace heckelab {

ExactMatrix SemisimpleElement::as_matrix() const {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = eigen[i];
  return m;
}

void NilpotentElement::validate() const {
  if (mat.rows != n || mat.cols != n) throw std::invalid_argument("nilpotent: wrong shape");
  if (!mat.pow(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
}

void SL2Triple::validate() const {
  if (h * e - e * h != e.scaled(Scalar(2))) throw std::logic_error("sl2: [h,e] != 2e");
  if (h * f - f * h != f.scaled(Scalar(-2))) throw std::logic_error("sl2: [h,f] != -2f");
  if (e * f - f * e != h) throw std::logic_error("sl2: [e,f] != h");
}

GradedSpace graded_space(const SemisimpleElement& sigma, const Scalar& r) {
  GradedSpace g;
  g.n = sigma.n;
  g.r = r;
  if (!r.is_zero()) {
    Scalar gap = Scalar(2) * r;
    for (int i = 0; i < sigma.n; ++i)
      for (int j = 0; j < sigma.n; ++j)
        if (i != j && sigma.eigen[i] - sigma.eigen[j] == gap) g.units.emplace_back(i, j);
  } else {
    // block structure of Z_g(sigma): one group of indices per distinct eigenvalue
    std::vector<bool> used(sigma.n, false);
    for (int i = 0; i < sigma.n; ++i) {
      if (used[i]) continue;
      std::vector<int> blk;
      for (int j = i; j < sigma.n; ++j)
        if (sigma.eigen[j] == sigma.eigen[i]) {
          blk.push_back(j);
          used[j] = true;
        }
      g.blocks.push_back(std::move(blk));
    }
  }
  return g;
}

bool commutation_holds(const NilpotentElement& y, const SemisimpleElement& sigma,
                       const Scalar& r) {
  if (y.n != sigma.n) return false;
  Scalar gap = Scalar(2) * r;
  for (int i = 0; i < y.n; ++i)
    for (int j = 0; j < y.n; ++j) {
      if (y.mat.at(i, j).is_zero()) continue;
      if (sigma.eigen[i] - sigma.eigen[j] != gap) return false;
    }
  return true;
}

namespace {

// Jordan chains of a nilpotent map, respecting an index grading when one is
// supplied (components never mix, see the kernel argument in matrix.cpp).
// Returns chains as lists of vectors [v, yv, y^2 v, ...].
std::vector<std::vector<SVec>> jordan_chains(const ExactMatrix& y, int n) {
  std::vector<ExactMatrix> pows = {ExactMatrix::identity(n)};
  while (!pows.back().is_zero()) pows.push_back(pows.back() * y);
  int p = (int)pows.size() - 1;  // nilpotency index

  auto kernel_of = [&](int j) { return matrix_kernel(pows[j]); };

  std::vector<std::vector<SVec>> kernels(p + 1);
  for (int j = 1; j <= p; ++j) kernels[j] = kernel_of(j);

  // accumulating span, vectors in echelon form with recorded leading indices
  std::vector<SVec> echelon;
  std::vector<int> lead;
  auto reduce = [&](SVec v) {
    for (size_t e = 0; e < echelon.size(); ++e) {
      if (v[lead[e]].is_zero()) continue;
      Scalar f = v[lead[e]];
      for (int i = 0; i < n; ++i) v[i] -= f * echelon[e][i];
    }
    return v;
  };
  auto insert = [&](SVec v) {
    v = reduce(std::move(v));
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero()) {
        Scalar inv = v[i].inv();
        for (int k = 0; k < n; ++k) v[k] *= inv;
        echelon.push_back(v);
        lead.push_back(i);
        return true;
      }
    return false;
  };

  std::vector<std::pair<int, SVec>> tops;  // (chain length, top vector)
  for (int j = p; j >= 1; --j) {
    // span so far: K_{j-1} + y K_{j+1} + already chosen shorter images;
    // maintained incrementally: before picking length-j tops, fold in
    // K_{j-1} and the y-images of everything currently spanned
    std::vector<SVec> base;
    if (j - 1 >= 1)
      for (auto& v : kernels[j - 1]) base.push_back(v);
    if (j + 1 <= p)
      for (auto& v : kernels[j + 1]) base.push_back(y.apply(v));
    echelon.clear();
    lead.clear();
    for (auto& v : base) insert(v);
    // previously chosen longer-chain contributions inside K_j: the chains
    // y^t v for t with remaining length >= j
    for (auto& [len, top] : tops) {
      SVec cur = top;
      for (int t = 0; t < len; ++t) {
        if (len - t <= p && len - t >= 1) {
          // y^t top lies in K_{len-t}; include if within K_j
          if (len - t <= j) insert(cur);
        }
        cur = y.apply(cur);
      }
    }
    for (auto& v : kernels[j])
      if (insert(v)) tops.emplace_back(j, v);
  }

  std::vector<std::vector<SVec>> chains;
  for (auto& [len, top] : tops) {
    std::vector<SVec> chain = {top};
    for (int t = 1; t < len; ++t) chain.push_back(y.apply(chain.back()));
    chains.push_back(std::move(chain));
  }
  // consistency: the chain vectors must form a basis
  std::vector<SVec> all;
  for (auto& c : chains)
    for (auto& v : c) all.push_back(v);
  if ((int)all.size() != n || span_rank(all) != n)
    throw std::logic_error("jordan_chains: chain vectors do not form a basis");
  return chains;
}

SL2Triple triple_from_chains(const std::vector<std::vector<SVec>>& chains, const ExactMatrix& y,
                             int n) {
  // basis matrix S: columns are chain vectors in order
  ExactMatrix S(n, n);
  int col = 0;
  for (auto& c : chains)
    for (auto& v : c) S.set_col(col++, v);
  ExactMatrix H(n, n), F(n, n);
  col = 0;
  for (auto& c : chains) {
    int m = (int)c.size();
    for (int j = 0; j < m; ++j) {
      H.at(col + j, col + j) = Scalar(2 * j - m + 1);
      // f(u_j) = j (m - j) u_{j-1}
      if (j >= 1) F.at(col + j - 1, col + j) = Scalar((long)j * (m - j));
    }
    col += m;
  }
  auto Sinv = S.inverse();
  if (!Sinv) throw std::logic_error("jordan basis not invertible");
  SL2Triple t{y, S * H * *Sinv, S * F * *Sinv};
  t.validate();
  return t;
}

}  // namespace

SL2Triple jm_triple(const NilpotentElement& y) {
  y.validate();
  auto chains = jordan_chains(y.mat, y.n);
  return triple_from_chains(chains, y.mat, y.n);
}

AdaptedTriple sl2_adapted(const NilpotentElement& y, const SemisimpleElement& sigma,
                          const Scalar& r) {
  if (!commutation_holds(y, sigma, r))
    throw std::invalid_argument("sl2_adapted: [sigma,y] = 2ry fails");
  y.validate();
  // kernels of y^j decompose along the sigma-eigenspaces, so jordan_chains
  // already returns graded chain vectors; the resulting h commutes with sigma
  auto chains = jordan_chains(y.mat, y.n);
  SL2Triple t = triple_from_chains(chains, y.mat, y.n);
  ExactMatrix s = sigma.as_matrix();
  ExactMatrix sigma0 = s - t.h.scaled(r);
  for (const ExactMatrix* m : {&t.e, &t.h, &t.f})
    if (!(sigma0 * *m - *m * sigma0).is_zero())
      throw std::logic_error("sl2_adapted: sigma0 does not centralize the triple");
  return {t, sigma0};
}

std::vector<int> jordan_type(const NilpotentElement& y) {
  y.validate();
  std::vector<int> kdim = {0};
  ExactMatrix p = ExactMatrix::identity(y.n);
  while (true) {
    p = p * y.mat;
    kdim.push_back(y.n - p.rank());
    if (kdim.back() == y.n) break;
  }
  std::vector<int> part;
  for (int j = 1; j < (int)kdim.size(); ++j) {
    int blocks_ge_j = kdim[j] - kdim[j - 1];
    part.resize(std::max((int)part.size(), blocks_ge_j));
    for (int b = 0; b < blocks_ge_j; ++b) part[b] += 1;
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

int centralizer_dim_of_sigma(const SemisimpleElement& sigma) {
  int d = 0;
  for (int i = 0; i < sigma.n; ++i) {
    int m = 0;
    for (int j = 0; j < sigma.n; ++j)
      if (sigma.eigen[j] == sigma.eigen[i]) ++m;
    d += m;  // row i contributes m entries (i,j) with equal eigenvalues
  }
  return d;
}

int centralizer_intersection_dim(const NilpotentElement& y, const SemisimpleElement& sigma) {
  // unknowns: entries X_ij with a_i = a_j; constraints [X, y] = 0
  std::vector<std::pair<int, int>> unknowns;
  std::vector<std::vector<int>> slot(y.n, std::vector<int>(y.n, -1));
  for (int i = 0; i < y.n; ++i)
    for (int j = 0; j < y.n; ++j)
      if (sigma.eigen[i] == sigma.eigen[j]) {
        slot[i][j] = (int)unknowns.size();
        unknowns.emplace_back(i, j);
      }
  ExactMatrix sys(y.n * y.n, (int)unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    auto [i, j] = unknowns[u];
    // (X y - y X)_{ab}: X_ij contributes y_{jb} at row (i,b) and -y_{ai} at (a,j)
    for (int b = 0; b < y.n; ++b)
      if (!y.mat.at(j, b).is_zero()) sys.at(i * y.n + b, (int)u) += y.mat.at(j, b);
    for (int a = 0; a < y.n; ++a)
      if (!y.mat.at(a, i).is_zero()) sys.at(a * y.n + j, (int)u) -= y.mat.at(a, i);
  }
  return (int)unknowns.size() - sys.rank();
}

int orbit_dimension(const NilpotentElement& y, const SemisimpleElement& sigma) {
  return centralizer_dim_of_sigma(sigma) - centralizer_intersection_dim(y, sigma);
}

bool is_open(const NilpotentElement& y, const SemisimpleElement& sigma, const Scalar& r) {
  if (!commutation_holds(y, sigma, r)) throw std::invalid_argument("is_open: [sigma,y] != 2ry");
  if (!r.is_zero()) {
    GradedSpace g = graded_space(sigma, r);
    return orbit_dimension(y, sigma) == g.dim();
  }
  // r = 0: regular nilpotent inside each eigenvalue block of sigma
  GradedSpace g = graded_space(sigma, Scalar(0));
  for (auto& blk : g.blocks) {
    int m = (int)blk.size();
    ExactMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub.at(i, j) = y.mat.at(blk[i], blk[j]);
    if (m >= 2 && sub.pow(m - 1).is_zero()) return false;
  }
  return true;
}

bool lemma112_criterion(const NilpotentElement& y, const SemisimpleElement& sigma,
                        const Scalar& r) {
  if (r.is_zero()) throw std::invalid_argument("lemma112_criterion requires r != 0");
  if (!commutation_holds(y, sigma, r))
    throw std::invalid_argument("lemma112_criterion: [sigma,y] != 2ry");
  int n = y.n;
  ExactMatrix sigma0 =
      y.mat.is_zero() ? sigma.as_matrix() : sl2_adapted(y, sigma, r).sigma0;

  // left side: basis of g_N^{sigma,r}
  GradedSpace g = graded_space(sigma, r);
  std::vector<SVec> lhs;
  for (auto& [i, j] : g.units) {
    SVec v(n * n, Scalar(0));
    v[i * n + j] = Scalar(1);
    lhs.push_back(std::move(v));
  }

  // right side: { X in Z_g(sigma0) : [sigma - sigma0, X] = 2 r X }
  ExactMatrix diff = sigma.as_matrix() - sigma0;
  ExactMatrix sys(2 * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int col = i * n + j;
      // [sigma0, X]_{ab} gets sigma0_{ai} X_{ij} - X_{ij} sigma0_{jb}
      for (int a = 0; a < n; ++a)
        if (!sigma0.at(a, i).is_zero()) sys.at(a * n + j, col) += sigma0.at(a, i);
      for (int b = 0; b < n; ++b)
        if (!sigma0.at(j, b).is_zero()) sys.at(i * n + b, col) -= sigma0.at(j, b);
      // [diff, X] - 2 r X
      for (int a = 0; a < n; ++a)
        if (!diff.at(a, i).is_zero()) sys.at(n * n + a * n + j, col) += diff.at(a, i);
      for (int b = 0; b < n; ++b)
        if (!diff.at(j, b).is_zero()) sys.at(n * n + i * n + b, col) -= diff.at(j, b);
      sys.at(n * n + col, col) -= Scalar(2) * r;
    }
  std::vector<SVec> rhs = matrix_kernel(sys);
  return same_span(lhs, rhs);
}

std::string to_string(Boundedness b) {
  switch (b) {
    case Boundedness::bounded: return "bounded";
    case Boundedness::essentially_bounded: return "essentially_bounded";
    default: return "neither";
  }
}

Boundedness boundedness_class(const SemisimpleElement& sigma0) {
  bool all_imag = true;
  for (auto& v : sigma0.eigen)
    if (v.re != 0) all_imag = false;
  if (all_imag) return Boundedness::bounded;
  for (int i = 1; i < sigma0.n; ++i)
    if (sigma0.eigen[i].re != sigma0.eigen[0].re) return Boundedness::neither;
  return Boundedness::essentially_bounded;
}

SVec semisimple_spectrum(const ExactMatrix& m) {
  UniPoly cp = char_poly(m);
  EigenRoots er = gaussian_roots(cp);
  if (er.unresolved_degree > 0)
    throw std::runtime_error("spectrum is not Gaussian-rational");
  SVec out;
  for (auto& [v, mult] : er.roots)
    for (int k = 0; k < mult; ++k) out.push_back(v);
  return out;
}

Boundedness boundedness_class(const ExactMatrix& sigma0) {
  SemisimpleElement s;
  s.n = sigma0.rows;
  s.eigen = semisimple_spectrum(sigma0);
  return boundedness_class(s);
}

bool is_distinguished(const NilpotentElement& y) {
  auto part = jordan_type(y);
  return (int)part.size() <= 1;  // single Jordan block (n = 0,1 included)
}

bool RankInvariant::same_shape(const RankInvariant& o) const {
  if (chains.size() != o.chains.size()) return false;
  for (size_t c = 0; c < chains.size(); ++c)
    if (chains[c].start != o.chains[c].start || chains[c].dims != o.chains[c].dims) return false;
  return true;
}

bool RankInvariant::operator==(const RankInvariant& o) const {
  if (!same_shape(o)) return false;
  for (size_t c = 0; c < chains.size(); ++c)
    if (chains[c].rank != o.chains[c].rank) return false;
  return true;
}

SigmaChains sigma_chains(const SemisimpleElement& sigma, const Scalar& r) {
  if (r.is_zero()) throw std::invalid_argument("sigma_chains requires r != 0");
  // distinct eigenvalues, canonically sorted
  SVec distinct;
  for (auto& v : sigma.eigen) {
    bool found = false;
    for (auto& d : distinct)
      if (d == v) found = true;
    if (!found) distinct.push_back(v);
  }
  std::sort(distinct.begin(), distinct.end(), scalar_less);

  Scalar gap = Scalar(2) * r;
  std::vector<bool> used(distinct.size(), false);
  SigmaChains out;
  for (size_t s = 0; s < distinct.size(); ++s) {
    if (used[s]) continue;
    // only start a chain at a value with no predecessor
    bool has_pred = false;
    for (auto& d : distinct)
      if (d == distinct[s] - gap) has_pred = true;
    if (has_pred) continue;
    SigmaChains::Chain chain;
    Scalar cur = distinct[s];
    while (true) {
      int idx = -1;
      for (size_t k = 0; k < distinct.size(); ++k)
        if (distinct[k] == cur) idx = (int)k;
      if (idx < 0) break;
      used[idx] = true;
      chain.values.push_back(cur);
      std::vector<int> pos;
      for (int i = 0; i < sigma.n; ++i)
        if (sigma.eigen[i] == cur) pos.push_back(i);
      chain.indices.push_back(std::move(pos));
      cur = cur + gap;
    }
    out.chains.push_back(std::move(chain));
  }
  // canonical order by start value
  std::sort(out.chains.begin(), out.chains.end(),
            [](auto& a, auto& b) { return scalar_less(a.values[0], b.values[0]); });
  return out;
}

RankInvariant rank_invariants(const NilpotentElement& y, const SemisimpleElement& sigma,
                              const Scalar& r) {
  if (!commutation_holds(y, sigma, r))
    throw std::invalid_argument("rank_invariants: [sigma,y] != 2ry");
  if (r.is_zero()) throw std::invalid_argument("rank_invariants requires r != 0");
  SigmaChains sc = sigma_chains(sigma, r);
  RankInvariant out;
  for (auto& chain : sc.chains) {
    RankInvariant::Chain rc;
    rc.start = chain.values[0];
    int len = (int)chain.values.size();
    for (auto& idx : chain.indices) rc.dims.push_back((int)idx.size());
    // step maps y_j : V_j -> V_{j+1}
    std::vector<ExactMatrix> steps;
    for (int j = 0; j + 1 < len; ++j) {
      auto& dom = chain.indices[j];
      auto& cod = chain.indices[j + 1];
      ExactMatrix m((int)cod.size(), (int)dom.size());
      for (size_t a = 0; a < cod.size(); ++a)
        for (size_t b = 0; b < dom.size(); ++b) m.at((int)a, (int)b) = y.mat.at(cod[a], dom[b]);
      steps.push_back(std::move(m));
    }
    rc.rank.assign(std::max(len - 1, 0), {});
    for (int i = 0; i + 1 < len; ++i) {
      ExactMatrix comp = steps[i];
      for (int j = i; j + 1 < len; ++j) {
        if (j > i) comp = steps[j] * comp;
        rc.rank[i].push_back(comp.rank());
      }
    }
    out.chains.push_back(std::move(rc));
  }
  return out;
}

bool closure_leq(const RankInvariant& a, const RankInvariant& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("closure_leq: shape mismatch");
  for (size_t c = 0; c < a.chains.size(); ++c)
    for (size_t i = 0; i < a.chains[c].rank.size(); ++i)
      for (size_t j = 0; j < a.chains[c].rank[i].size(); ++j)
        if (a.chains[c].rank[i][j] > b.chains[c].rank[i][j]) return false;
  return true;
}

NilpotentElement open_orbit_rep(const SemisimpleElement& sigma, const Scalar& r) {
  NilpotentElement y;
  y.n = sigma.n;
  y.mat = ExactMatrix::zero(sigma.n, sigma.n);
  if (r.is_zero()) {
    // regular nilpotent in each block of Z_g(sigma)
    GradedSpace g = graded_space(sigma, Scalar(0));
    for (auto& blk : g.blocks)
      for (size_t k = 0; k + 1 < blk.size(); ++k) y.mat.at(blk[k], blk[k + 1]) = Scalar(1);
    return y;
  }
  SigmaChains sc = sigma_chains(sigma, r);
  for (auto& chain : sc.chains)
    for (size_t j = 0; j + 1 < chain.indices.size(); ++j) {
      auto& dom = chain.indices[j];
      auto& cod = chain.indices[j + 1];
      for (size_t k = 0; k < std::min(dom.size(), cod.size()); ++k)
        y.mat.at(cod[k], dom[k]) = Scalar(1);
    }
  return y;
}

std::vector<ChainMultisegment> enumerate_chain_multisegments(const std::vector<int>& dims) {
  std::vector<ChainMultisegment> out;
  int len = (int)dims.size();
  // state: counts of open segments per start position
  struct State {
    std::vector<int> open_by_start;
    ChainMultisegment closed;
  };
  std::vector<State> states = {{std::vector<int>(len, 0), {}}};
  // position 0: open d_0 segments starting at 0
  if (len == 0) return {ChainMultisegment{}};
  for (auto& s : states) s.open_by_start[0] = dims[0];

  for (int p = 0; p < len; ++p) {
    std::vector<State> next;
    for (auto& s : states) {
      // choose how many open segments of each start close at p
      // (segments sharing a start are interchangeable)
      std::vector<int> starts;
      for (int a = 0; a <= p; ++a)
        if (s.open_by_start[a] > 0) starts.push_back(a);
      int continuing_needed_max = (p + 1 < len) ? dims[p + 1] : 0;
      // enumerate closure counts per start
      std::vector<int> close(starts.size(), 0);
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == starts.size()) {
          int open_total = 0;
          for (int a = 0; a <= p; ++a) open_total += s.open_by_start[a];
          int closing = 0;
          for (size_t t = 0; t < starts.size(); ++t) closing += close[t];
          int continuing = open_total - closing;
          if (p + 1 < len) {
            int new_opens = dims[p + 1] - continuing;
            if (new_opens < 0) return;
            State ns = s;
            for (size_t t = 0; t < starts.size(); ++t) {
              ns.open_by_start[starts[t]] -= close[t];
              for (int c = 0; c < close[t]; ++c) ns.closed.emplace_back(starts[t], p);
            }
            ns.open_by_start[p + 1] += new_opens;
            next.push_back(std::move(ns));
          } else {
            // last position: everything still open must close here
            if (continuing != 0) return;
            State ns = s;
            for (size_t t = 0; t < starts.size(); ++t)
              for (int c = 0; c < close[t]; ++c) ns.closed.emplace_back(starts[t], p);
            next.push_back(std::move(ns));
          }
          return;
        }
        for (int c = 0; c <= s.open_by_start[starts[k]]; ++c) {
          close[k] = c;
          rec(k + 1);
        }
        close[k] = 0;
      };
      (void)continuing_needed_max;
      rec(0);
    }
    states = std::move(next);
  }

  for (auto& s : states) {
    ChainMultisegment m = s.closed;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int multisegment_end_dim(const ChainMultisegment& m) {
  // dim Hom(M_[a,b], M_[a',b']) = 1 iff a' <= a <= b' <= b
  int d = 0;
  for (auto& [a, b] : m)
    for (auto& [a2, b2] : m)
      if (a2 <= a && a <= b2 && b2 <= b) ++d;
  return d;
}

std::vector<std::vector<int>> multisegment_ranks(const ChainMultisegment& m, int len) {
  std::vector<std::vector<int>> rank(std::max(len - 1, 0));
  for (int i = 0; i + 1 < len; ++i)
    for (int j = i; j + 1 < len; ++j) {
      int r = 0;
      for (auto& [a, b] : m)
        if (a <= i && j + 1 <= b) ++r;
      rank[i].push_back(r);
    }
  return rank;
}

NilpotentElement multisegment_representative(const SemisimpleElement& sigma, const Scalar& r,
                                             const std::vector<ChainMultisegment>& msegs) {
  SigmaChains sc = sigma_chains(sigma, r);
  if (msegs.size() != sc.chains.size())
    throw std::invalid_argument("multisegment_representative: chain count mismatch");
  NilpotentElement y;
  y.n = sigma.n;
  y.mat = ExactMatrix::zero(sigma.n, sigma.n);
  for (size_t c = 0; c < sc.chains.size(); ++c) {
    auto& chain = sc.chains[c];
    // lay segments into slots: slot s of position p hosts the s-th segment
    // covering p, in the sorted segment order
    std::vector<int> used(chain.values.size(), 0);
    for (auto& [a, b] : msegs[c]) {
      int prev_idx = -1;
      for (int p = a; p <= b; ++p) {
        int slot = used[p]++;
        if (slot >= (int)chain.indices[p].size())
          throw std::invalid_argument("multisegment does not fit dimension vector");
        int idx = chain.indices[p][slot];
        if (prev_idx >= 0) y.mat.at(idx, prev_idx) = Scalar(1);
        prev_idx = idx;
      }
    }
  }
  return y;
}

}  // namespace heckelab

#include "heckelab/root_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "heckelab/guards.hpp"

namespace heckelab {

int max_group_order() {
  if (const char* e = std::getenv("HECKE_LAB_MAX_DIM")) {
    long v = std::atol(e);
    if (v > 48) return (int)v;
  }
  return 48;
}

int max_module_dim() {
  if (const char* e = std::getenv("HECKE_LAB_MAX_DIM")) {
    long v = std::atol(e);
    if (v > 64) return (int)v;
  }
  return 64;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec mat_apply(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  QMat r(n, QVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

QMat mat_identity(int n) {
  QMat m(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat mat_transpose(const QMat& m) {
  QMat r(m[0].size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

static ExactMatrix to_exact(const QMat& m) { return from_qmat(m); }

QMat mat_inverse(const QMat& m) {
  auto inv = to_exact(m).inverse();
  if (!inv) throw std::invalid_argument("mat_inverse: singular matrix");
  QMat r(m.size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i][j] = inv->at((int)i, (int)j).re;
  return r;
}

Rat mat_det(const QMat& m) { return to_exact(m).det().re; }

QMat BasedRootDatum::reflection_on_x(int root_idx) const {
  QMat m = mat_identity(rank);
  const QVec& alpha = roots[root_idx];
  const QVec& cov = coroots[root_idx];
  // column j: e_j - <e_j, alpha^vee> alpha
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) m[i][j] -= cov[j] * alpha[i];
  return m;
}

int BasedRootDatum::root_index(const QVec& r) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots[i] == r) return i;
  return -1;
}

void BasedRootDatum::validate() const {
  for (int i = 0; i < num_roots(); ++i) {
    if (dot(roots[i], coroots[i]) != 2)
      throw std::logic_error(label + ": <alpha, alpha^vee> != 2");
    // reflections permute R
    QMat s = reflection_on_x(i);
    for (int j = 0; j < num_roots(); ++j)
      if (root_index(mat_apply(s, roots[j])) < 0)
        throw std::logic_error(label + ": reflection does not permute the roots");
  }
  // simple roots linearly independent; every root an integer combination of
  // them with uniform sign
  std::vector<QVec> srows;
  for (int k : simples) srows.push_back(roots[k]);
  ExactMatrix sm((int)srows.size(), rank);
  for (size_t i = 0; i < srows.size(); ++i)
    for (int j = 0; j < rank; ++j) sm.at((int)i, j) = Scalar(srows[i][j]);
  if (sm.rank() != (int)srows.size())
    throw std::logic_error(label + ": simple roots not independent");
  for (auto& r : roots) {
    ExactMatrix b(rank, 1);
    for (int i = 0; i < rank; ++i) b.at(i, 0) = Scalar(r[i]);
    auto sol = solve(sm.transpose(), b);
    if (!sol) throw std::logic_error(label + ": root outside simple span");
    int sign = 0;
    for (int k = 0; k < (int)srows.size(); ++k) {
      const Scalar& c = sol->at(k, 0);
      if (!c.is_integer()) throw std::logic_error(label + ": non-integral simple coefficient");
      if (c.re > 0) {
        if (sign < 0) throw std::logic_error(label + ": mixed-sign root");
        sign = 1;
      } else if (c.re < 0) {
        if (sign > 0) throw std::logic_error(label + ": mixed-sign root");
        sign = -1;
      }
    }
  }
}

namespace {

QVec unit(int n, int i, Rat v = Rat(1)) {
  QVec e(n, Rat(0));
  e[i] = v;
  return e;
}

BasedRootDatum build_gl(int n) {
  BasedRootDatum d;
  d.label = "A" + std::to_string(n - 1);
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QVec r(n, Rat(0));
      r[i] = 1;
      r[j] = -1;
      d.roots.push_back(r);
      d.coroots.push_back(r);
    }
  for (int i = 0; i + 1 < n; ++i) {
    QVec r(n, Rat(0));
    r[i] = 1;
    r[i + 1] = -1;
    d.simples.push_back(d.root_index(r));
  }
  return d;
}

BasedRootDatum build_b2() {
  BasedRootDatum d;
  d.label = "B2";
  d.rank = 2;
  auto add = [&](QVec r, QVec cv) {
    d.roots.push_back(std::move(r));
    d.coroots.push_back(std::move(cv));
  };
  // short +-e_i with coroots +-2e_i, long +-e1+-e2 with coroots +-e1+-e2
  for (int s : {1, -1}) {
    add(unit(2, 0, s), unit(2, 0, 2 * s));
    add(unit(2, 1, s), unit(2, 1, 2 * s));
  }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      QVec r = {Rat(s1), Rat(s2)};
      add(r, r);
    }
  d.simples = {d.root_index({Rat(1), Rat(-1)}), d.root_index({Rat(0), Rat(1)})};
  return d;
}

BasedRootDatum build_g2() {
  BasedRootDatum d;
  d.label = "G2";
  d.rank = 2;
  // basis of X: (alpha, beta), alpha short, beta long; Y carries the dual basis
  auto add = [&](long a, long b, long ca, long cb) {
    d.roots.push_back({Rat(a), Rat(b)});
    d.coroots.push_back({Rat(ca), Rat(cb)});
    d.roots.push_back({Rat(-a), Rat(-b)});
    d.coroots.push_back({Rat(-ca), Rat(-cb)});
  };
  add(1, 0, 2, -3);   // alpha
  add(0, 1, -1, 2);   // beta
  add(1, 1, -1, 3);   // alpha+beta
  add(2, 1, 1, 0);    // 2 alpha+beta
  add(3, 1, 1, -1);   // 3 alpha+beta
  add(3, 2, 0, 1);    // 3 alpha+2 beta
  d.simples = {0, 2};
  return d;
}

}  // namespace

BasedRootDatum build_root_datum(const std::string& label) {
  BasedRootDatum d;
  if (!label.empty() && label[0] == 'A') {
    int n = std::atoi(label.c_str() + 1);
    if (n < 1 || n > 11) throw std::invalid_argument("unsupported preset: " + label);
    d = build_gl(n + 1);
  } else if (label == "B2") {
    d = build_b2();
  } else if (label == "G2") {
    d = build_g2();
  } else {
    throw std::invalid_argument("unsupported preset: " + label);
  }
  d.validate();
  return d;
}

std::vector<QMat> diagram_automorphisms(const BasedRootDatum& datum, const std::string& gamma) {
  std::vector<QMat> out = {mat_identity(datum.rank)};
  if (gamma == "none" || gamma.empty()) return out;
  if (gamma == "flip") {
    if (datum.label.empty() || datum.label[0] != 'A')
      throw std::invalid_argument("flip automorphism is only available for type A");
    int n = datum.rank;
    QMat g(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) g[n - 1 - i][i] = -1;
    out.push_back(g);
    return out;
  }
  throw std::invalid_argument("unknown gamma spec: " + gamma);
}

int ExtendedWeylGroup::element_index(const QMat& m) const {
  for (int i = 0; i < size(); ++i)
    if (x_action[i] == m) return i;
  return -1;
}

int ExtendedWeylGroup::simple_reflection(int k) const {
  QMat s = datum.reflection_on_x(datum.simples[k]);
  int e = element_index(s);
  if (e < 0) throw std::logic_error("simple reflection missing from group");
  return e;
}

int ExtendedWeylGroup::gamma_element(int g) const {
  int e = element_index(gammas[g]);
  if (e < 0) throw std::logic_error("gamma element missing from group");
  return e;
}

SVec ExtendedWeylGroup::apply_to_point(int e, const SVec& t) const {
  const QMat& m = y_action[e];
  SVec r(t.size(), Scalar(0));
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t.size(); ++j)
      if (m[i][j] != 0) r[i] += Scalar(m[i][j]) * t[j];
  return r;
}

QVec ExtendedWeylGroup::apply_to_x(int e, const QVec& x) const { return mat_apply(x_action[e], x); }

std::vector<int> ExtendedWeylGroup::root_orbit_ids() const {
  int nr = datum.num_roots();
  std::vector<int> id(nr, -1);
  int next = 0;
  for (int r = 0; r < nr; ++r) {
    if (id[r] >= 0) continue;
    // BFS orbit
    std::vector<int> stack = {r};
    id[r] = next;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int e = 0; e < size(); ++e) {
        int img = root_perm[e][cur];
        if (id[img] < 0) {
          id[img] = next;
          stack.push_back(img);
        }
      }
    }
    ++next;
  }
  return id;
}

std::shared_ptr<const ExtendedWeylGroup> enumerate_group(const BasedRootDatum& datum,
                                                         const std::vector<QMat>& gammas_in) {
  auto g = std::make_shared<ExtendedWeylGroup>();
  g->datum = datum;
  g->gammas = gammas_in;

  // Gamma must stabilize Delta
  for (auto& gm : g->gammas)
    for (int k = 0; k < datum.num_simples(); ++k) {
      QVec img = mat_apply(gm, datum.simple_root(k));
      bool ok = false;
      for (int l = 0; l < datum.num_simples(); ++l)
        if (img == datum.simple_root(l)) ok = true;
      if (!ok) throw std::invalid_argument("gamma does not stabilize the simple system");
    }

  // BFS over W, keeping the lexicographically least reduced word per element
  struct WElem {
    QMat m;
    std::vector<int> word;
  };
  std::map<QMat, std::vector<int>> seen;
  std::vector<QMat> srefl;
  for (int k = 0; k < datum.num_simples(); ++k)
    srefl.push_back(datum.reflection_on_x(datum.simples[k]));

  std::vector<WElem> level = {{mat_identity(datum.rank), {}}};
  seen.emplace(level[0].m, level[0].word);
  std::vector<WElem> all = level;
  while (!level.empty()) {
    std::map<QMat, std::vector<int>> next;
    for (auto& u : level)
      for (int s = 0; s < (int)srefl.size(); ++s) {
        QMat v = mat_mul(u.m, srefl[s]);
        if (seen.count(v)) continue;
        std::vector<int> w = u.word;
        w.push_back(s);
        auto it = next.find(v);
        if (it == next.end() || w < it->second) next[v] = w;
      }
    level.clear();
    for (auto& [m, w] : next) {
      seen.emplace(m, w);
      level.push_back({m, w});
      all.push_back({m, w});
    }
    if ((int)all.size() * (int)g->gammas.size() > max_group_order())
      throw std::invalid_argument("group order exceeds guard (set HECKE_LAB_MAX_DIM to raise)");
  }

  std::sort(all.begin(), all.end(), [](const WElem& a, const WElem& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  g->w_size = (int)all.size();

  // full element list: (w, gamma), ordered by (length, word, gamma index)
  struct Full {
    QMat m;
    int w_idx, gamma_idx;
  };
  std::vector<Full> full;
  for (int wi = 0; wi < (int)all.size(); ++wi)
    for (int gi = 0; gi < (int)g->gammas.size(); ++gi) {
      QMat m = mat_mul(all[wi].m, g->gammas[gi]);
      full.push_back({m, wi, gi});
    }
  std::sort(full.begin(), full.end(), [&](const Full& a, const Full& b) {
    auto& wa = all[a.w_idx].word;
    auto& wb = all[b.w_idx].word;
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    if (wa != wb) return wa < wb;
    return a.gamma_idx < b.gamma_idx;
  });

  std::map<QMat, int> index;
  for (int i = 0; i < (int)full.size(); ++i) {
    if (index.count(full[i].m))
      throw std::logic_error("gamma overlaps W: extension is not faithful on X");
    index[full[i].m] = i;
  }

  int n_elem = (int)full.size();
  std::vector<int> w_elem_index(all.size(), -1);  // w index -> element index
  for (int i = 0; i < n_elem; ++i)
    if (full[i].gamma_idx == 0) w_elem_index[full[i].w_idx] = i;

  for (int i = 0; i < n_elem; ++i) {
    g->x_action.push_back(full[i].m);
    g->y_action.push_back(mat_transpose(mat_inverse(full[i].m)));
    g->length.push_back((int)all[full[i].w_idx].word.size());
    g->word.push_back(all[full[i].w_idx].word);
    g->gamma_part.push_back(full[i].gamma_idx);
    g->w_part.push_back(w_elem_index[full[i].w_idx]);
    Rat dt = mat_det(full[i].m);
    if (dt != 1 && dt != -1) throw std::logic_error("element determinant not +-1");
    g->det_char.push_back(dt == 1 ? 1 : -1);
  }

  g->mult.assign(n_elem, std::vector<int>(n_elem, -1));
  g->invs.assign(n_elem, -1);
  for (int i = 0; i < n_elem; ++i)
    for (int j = 0; j < n_elem; ++j) {
      auto it = index.find(mat_mul(g->x_action[i], g->x_action[j]));
      if (it == index.end()) throw std::logic_error("group not closed under multiplication");
      g->mult[i][j] = it->second;
      if (it->second == 0) {
        g->invs[i] = j;
      }
    }

  g->root_perm.assign(n_elem, std::vector<int>(datum.num_roots(), -1));
  for (int e = 0; e < n_elem; ++e)
    for (int r = 0; r < datum.num_roots(); ++r) {
      int img = datum.root_index(mat_apply(g->x_action[e], datum.roots[r]));
      if (img < 0) throw std::logic_error("group element does not permute the roots");
      g->root_perm[e][r] = img;
    }

  return g;
}

std::shared_ptr<const ExtendedWeylGroup> enumerate_group(const BasedRootDatum& datum,
                                                         const std::string& gamma) {
  return enumerate_group(datum, diagram_automorphisms(datum, gamma));
}

ParameterFunction ParameterFunction::constant(const BasedRootDatum& datum, const Rat& v) {
  ParameterFunction k;
  k.values.assign(datum.num_roots(), v);
  return k;
}

ParameterFunction ParameterFunction::by_length(const BasedRootDatum& datum,
                                               const std::map<std::string, Rat>& spec) {
  if (spec.count("all")) return constant(datum, spec.at("all"));
  // classify by squared-length ratio read off the Cartan pairings
  ParameterFunction k;
  k.values.assign(datum.num_roots(), Rat(0));
  for (int r = 0; r < datum.num_roots(); ++r) {
    bool is_long = false;
    for (int s = 0; s < datum.num_roots(); ++s) {
      Rat a = dot(datum.roots[r], datum.coroots[s]);
      Rat b = dot(datum.roots[s], datum.coroots[r]);
      if (abs(a) > abs(b)) is_long = true;  // (r,r) > (s,s)
    }
    std::string cls = is_long ? "long" : "short";
    if (!spec.count(cls)) throw std::invalid_argument("parameter spec missing class: " + cls);
    k.values[r] = spec.at(cls);
  }
  return k;
}

void ParameterFunction::validate_invariance(const ExtendedWeylGroup& g) const {
  for (int e = 0; e < g.size(); ++e)
    for (int r = 0; r < g.datum.num_roots(); ++r)
      if (values[g.root_perm[e][r]] != values[r])
        throw std::invalid_argument("parameter function is not W Gamma-invariant");
}

bool is_positive_position(const BasedRootDatum& datum, const SVec& t,
                          const std::vector<int>& p_simple_indices) {
  std::vector<bool> in_p(datum.num_simples(), false);
  for (int k : p_simple_indices) in_p[k] = true;
  for (int k = 0; k < datum.num_simples(); ++k) {
    Rat v(0);
    const QVec& alpha = datum.simple_root(k);
    for (int i = 0; i < datum.rank; ++i) v += alpha[i] * t[i].re;
    if (in_p[k]) {
      if (v != 0) return false;
    } else {
      if (v <= 0) return false;
    }
  }
  return true;
}

}  // namespace heckelab

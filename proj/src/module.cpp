#include "heckelab/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "heckelab/guards.hpp"

namespace heckelab {

namespace {

bool spec_equal(const GradedHeckeAlgebraSpec& a, const GradedHeckeAlgebraSpec& b) {
  if (a.group.get() == b.group.get()) return a.k == b.k && a.r == b.r;
  return a.group->x_action == b.group->x_action && a.group->gammas == b.group->gammas &&
         a.datum().roots == b.datum().roots && a.k == b.k && a.r == b.r;
}

}  // namespace

ExactMatrix FiniteModule::act_poly(const Poly& f) const {
  ExactMatrix acc(dim, dim);
  for (auto& [m, c] : f.terms) {
    ExactMatrix t = ExactMatrix::identity(dim).scaled(c);
    for (int i = 0; i < f.nvars; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * coord[i];
    acc = acc + t;
  }
  return acc;
}

ExactMatrix FiniteModule::act_linear(const QVec& x) const {
  ExactMatrix acc(dim, dim);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) acc = acc + coord[i].scaled(Scalar(x[i]));
  return acc;
}

const ExactMatrix& FiniteModule::act_element(int e) const {
  auto it = nw_cache_.find(e);
  if (it != nw_cache_.end()) return it->second;
  const auto& G = *spec.group;
  ExactMatrix m = ExactMatrix::identity(dim);
  for (int s : G.word[e]) m = m * simple_gen[s];
  if (G.gamma_part[e] != 0) m = m * gamma_gen[G.gamma_part[e]];
  return nw_cache_.emplace(e, std::move(m)).first->second;
}

ExactMatrix FiniteModule::act_algebra(const AlgebraElement& a) const {
  ExactMatrix acc(dim, dim);
  for (auto& [e, f] : a.coeff) acc = acc + act_poly(f) * act_element(e);
  return acc;
}

void verify_relations(const FiniteModule& m) {
  const auto& G = *m.spec.group;
  const auto& d = m.spec.datum();
  int nv = d.rank;
  if ((int)m.coord.size() != nv) throw std::invalid_argument("module: coordinate count mismatch");
  if ((int)m.simple_gen.size() != d.num_simples())
    throw std::invalid_argument("module: generator count mismatch");
  if ((int)m.gamma_gen.size() != (int)G.gammas.size())
    throw std::invalid_argument("module: gamma count mismatch");
  if (m.dim > max_module_dim())
    throw std::invalid_argument("module dimension exceeds guard (set HECKE_LAB_MAX_DIM)");

  ExactMatrix id = ExactMatrix::identity(m.dim);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (m.coord[i] * m.coord[j] != m.coord[j] * m.coord[i])
        throw std::logic_error("module: coordinate matrices do not commute");

  // cross relations on the linear generators
  for (int s = 0; s < d.num_simples(); ++s) {
    const ExactMatrix& Ns = m.simple_gen[s];
    if (Ns * Ns != id) throw std::logic_error("module: N_s^2 != 1");
    QMat refl = d.reflection_on_x(d.simples[s]);
    Scalar kr = Scalar(m.spec.k_simple(s)) * m.spec.r;
    for (int i = 0; i < nv; ++i) {
      QVec ei(nv, Rat(0));
      ei[i] = 1;
      QVec sxi = mat_apply(refl, ei);
      Rat pairing = dot(ei, d.simple_coroot(s));
      ExactMatrix lhs = Ns * m.coord[i] - m.act_linear(sxi) * Ns;
      if (lhs != id.scaled(kr * Scalar(pairing)))
        throw std::logic_error("module: cross relation fails");
    }
  }

  // braid relations: alternating words of length ord(s t) agree
  for (int s = 0; s < d.num_simples(); ++s)
    for (int t = s + 1; t < d.num_simples(); ++t) {
      int se = G.simple_reflection(s), te = G.simple_reflection(t);
      int prod = G.mult[se][te];
      int order = 1, cur = prod;
      while (cur != 0) {
        cur = G.mult[cur][prod];
        ++order;
      }
      ExactMatrix aw = id, bw = id;
      for (int k = 0; k < order; ++k) aw = aw * (k % 2 == 0 ? m.simple_gen[s] : m.simple_gen[t]);
      for (int k = 0; k < order; ++k) bw = bw * (k % 2 == 0 ? m.simple_gen[t] : m.simple_gen[s]);
      if (aw != bw) throw std::logic_error("module: braid relation fails");
    }

  // gamma relations
  if (!m.gamma_gen.empty() && m.gamma_gen[0] != id)
    throw std::logic_error("module: N_id must be the identity");
  for (size_t g = 1; g < G.gammas.size(); ++g) {
    for (size_t h = 1; h < G.gammas.size(); ++h) {
      QMat prod = mat_mul(G.gammas[g], G.gammas[h]);
      int idx = -1;
      for (size_t x = 0; x < G.gammas.size(); ++x)
        if (G.gammas[x] == prod) idx = (int)x;
      if (idx < 0) throw std::logic_error("module: Gamma not closed");
      if (m.gamma_gen[g] * m.gamma_gen[h] != m.gamma_gen[idx])
        throw std::logic_error("module: gamma multiplication fails");
    }
    for (int i = 0; i < nv; ++i) {
      QVec ei(nv, Rat(0));
      ei[i] = 1;
      QVec gxi = mat_apply(G.gammas[g], ei);
      if (m.gamma_gen[g] * m.coord[i] != m.act_linear(gxi) * m.gamma_gen[g])
        throw std::logic_error("module: gamma cross relation fails");
    }
    for (int s = 0; s < d.num_simples(); ++s) {
      QVec img = mat_apply(G.gammas[g], d.simple_root(s));
      int sp = -1;
      for (int t = 0; t < d.num_simples(); ++t)
        if (img == d.simple_root(t)) sp = t;
      if (sp < 0) throw std::logic_error("module: gamma does not permute the simples");
      if (m.gamma_gen[g] * m.simple_gen[s] != m.simple_gen[sp] * m.gamma_gen[g])
        throw std::logic_error("module: gamma conjugation relation fails");
    }
  }
}

FiniteModule make_module(GradedHeckeAlgebraSpec spec, std::vector<ExactMatrix> coord,
                         std::vector<ExactMatrix> simple_gen,
                         std::vector<ExactMatrix> gamma_gen) {
  FiniteModule m;
  m.spec = std::move(spec);
  m.dim = !gamma_gen.empty() ? gamma_gen[0].rows : (coord.empty() ? 0 : coord[0].rows);
  m.coord = std::move(coord);
  m.simple_gen = std::move(simple_gen);
  m.gamma_gen = std::move(gamma_gen);
  verify_relations(m);
  return m;
}

FiniteModule induce_character(const GradedHeckeAlgebraSpec& spec, const SVec& sigma0) {
  const auto& G = *spec.group;
  int n = spec.nvars();
  if ((int)sigma0.size() != n) throw std::invalid_argument("induce_character: bad point");
  int dim = G.size();

  std::vector<ExactMatrix> coord(n, ExactMatrix(dim, dim));
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(n, i);
    for (int w = 0; w < dim; ++w)
      for (auto& [v, h] : push_poly_right(spec, xi, w)) coord[i].at(v, w) += h.eval(sigma0);
  }
  std::vector<ExactMatrix> simple_gen;
  for (int s = 0; s < spec.num_simples(); ++s) {
    ExactMatrix ms(dim, dim);
    int se = G.simple_reflection(s);
    for (int w = 0; w < dim; ++w) ms.at(G.mult[se][w], w) = Scalar(1);
    simple_gen.push_back(std::move(ms));
  }
  std::vector<ExactMatrix> gamma_gen;
  for (size_t g = 0; g < G.gammas.size(); ++g) {
    ExactMatrix mg(dim, dim);
    int ge = G.gamma_element((int)g);
    for (int w = 0; w < dim; ++w) mg.at(G.mult[ge][w], w) = Scalar(1);
    gamma_gen.push_back(std::move(mg));
  }
  return make_module(spec, std::move(coord), std::move(simple_gen), std::move(gamma_gen));
}

GradedHeckeAlgebraSpec parabolic_spec(const GradedHeckeAlgebraSpec& spec,
                                      const ParabolicData& p) {
  const auto& d = spec.datum();
  ExactMatrix smat(d.num_simples(), d.rank);
  for (int k = 0; k < d.num_simples(); ++k)
    for (int j = 0; j < d.rank; ++j) smat.at(k, j) = Scalar(d.simple_root(k)[j]);
  std::vector<bool> in_p(d.num_simples(), false);
  for (int k : p.p_simples) in_p[k] = true;

  BasedRootDatum sub;
  sub.label = d.label + "-parabolic";
  sub.rank = d.rank;
  std::vector<Rat> sub_k;
  for (int r = 0; r < d.num_roots(); ++r) {
    ExactMatrix b(d.rank, 1);
    for (int j = 0; j < d.rank; ++j) b.at(j, 0) = Scalar(d.roots[r][j]);
    auto sol = solve(smat.transpose(), b);
    if (!sol) throw std::logic_error("parabolic_spec: root outside simple span");
    bool ok = true;
    for (int k = 0; k < d.num_simples(); ++k)
      if (!sol->at(k, 0).is_zero() && !in_p[k]) ok = false;
    if (!ok) continue;
    sub.roots.push_back(d.roots[r]);
    sub.coroots.push_back(d.coroots[r]);
    sub_k.push_back(spec.k[r]);
  }
  for (int k : p.p_simples) {
    int idx = sub.root_index(d.simple_root(k));
    if (idx < 0) throw std::invalid_argument("parabolic_spec: invalid P");
    sub.simples.push_back(idx);
  }

  std::vector<QMat> gammas;
  for (int g : p.gamma_subset) {
    const QMat& gm = spec.group->gammas[g];
    for (int k : p.p_simples) {
      QVec img = mat_apply(gm, d.simple_root(k));
      bool found = false;
      for (int l : p.p_simples)
        if (img == d.simple_root(l)) found = true;
      if (!found) throw std::invalid_argument("parabolic_spec: gamma does not stabilize P");
    }
    gammas.push_back(gm);
  }

  GradedHeckeAlgebraSpec out;
  out.group = enumerate_group(sub, gammas);
  out.k = sub_k;
  out.r = spec.r;
  return out;
}

FiniteModule induce_parabolic(const GradedHeckeAlgebraSpec& spec, const ParabolicData& p,
                              const FiniteModule& m) {
  const auto& G = *spec.group;
  GradedHeckeAlgebraSpec sub = parabolic_spec(spec, p);
  if (!spec_equal(sub, m.spec))
    throw std::invalid_argument("induce_parabolic: module is not over the parabolic subalgebra");

  int nsub = m.spec.group->size();
  std::vector<int> sub_to_parent(nsub, -1);
  std::vector<int> parent_to_sub(G.size(), -1);
  for (int e = 0; e < nsub; ++e) {
    int pe = G.element_index(m.spec.group->x_action[e]);
    if (pe < 0) throw std::logic_error("induce_parabolic: subgroup embedding failed");
    sub_to_parent[e] = pe;
    parent_to_sub[pe] = e;
  }

  // minimal coset representatives in canonical order
  std::vector<int> rep_of(G.size(), -1);
  std::vector<int> reps;
  for (int e = 0; e < G.size(); ++e) {
    if (rep_of[e] >= 0) continue;
    reps.push_back(e);
    for (int h = 0; h < nsub; ++h) rep_of[G.mult[e][sub_to_parent[h]]] = e;
  }
  std::vector<int> rep_pos(G.size(), -1);
  for (size_t i = 0; i < reps.size(); ++i) rep_pos[reps[i]] = (int)i;

  int dim = (int)reps.size() * m.dim;
  if (dim > max_module_dim())
    throw std::invalid_argument("induced module dimension exceeds guard (set HECKE_LAB_MAX_DIM)");

  auto decompose = [&](int w) {
    int u = rep_of[w];
    int h = G.mult[G.invs[u]][w];
    int hs = parent_to_sub[h];
    if (hs < 0) throw std::logic_error("induce_parabolic: coset decomposition failed");
    return std::pair<int, int>(rep_pos[u], hs);
  };

  int n = spec.nvars();
  std::vector<ExactMatrix> coord(n, ExactMatrix(dim, dim));
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(n, i);
    for (size_t u = 0; u < reps.size(); ++u) {
      auto rewritten = push_poly_right(spec, xi, reps[u]);
      for (auto& [v, h] : rewritten) {
        auto [urep, hsub] = decompose(v);
        ExactMatrix blk = m.act_element(hsub) * m.act_poly(h);
        for (int j = 0; j < m.dim; ++j)
          for (int i2 = 0; i2 < m.dim; ++i2)
            coord[i].at(urep * m.dim + i2, (int)u * m.dim + j) += blk.at(i2, j);
      }
    }
  }
  auto group_gen_matrix = [&](int ge) {
    ExactMatrix mg(dim, dim);
    for (size_t u = 0; u < reps.size(); ++u) {
      int w = G.mult[ge][reps[u]];
      auto [urep, hsub] = decompose(w);
      const ExactMatrix& hm = m.act_element(hsub);
      for (int j = 0; j < m.dim; ++j)
        for (int i2 = 0; i2 < m.dim; ++i2)
          mg.at(urep * m.dim + i2, (int)u * m.dim + j) += hm.at(i2, j);
    }
    return mg;
  };
  std::vector<ExactMatrix> simple_gen;
  for (int s = 0; s < spec.num_simples(); ++s)
    simple_gen.push_back(group_gen_matrix(G.simple_reflection(s)));
  std::vector<ExactMatrix> gamma_gen;
  for (size_t g = 0; g < G.gammas.size(); ++g)
    gamma_gen.push_back(group_gen_matrix(G.gamma_element((int)g)));
  return make_module(spec, std::move(coord), std::move(simple_gen), std::move(gamma_gen));
}

FiniteModule character_module(const GradedHeckeAlgebraSpec& sub_spec, const SVec& weight,
                              int eps) {
  int n = sub_spec.nvars();
  std::vector<ExactMatrix> coord;
  for (int i = 0; i < n; ++i) {
    ExactMatrix c(1, 1);
    c.at(0, 0) = weight[i];
    coord.push_back(std::move(c));
  }
  std::vector<ExactMatrix> sg(sub_spec.num_simples(), ExactMatrix(1, 1));
  for (auto& s : sg) s.at(0, 0) = Scalar(eps);
  std::vector<ExactMatrix> gg(sub_spec.group->gammas.size(), ExactMatrix(1, 1));
  for (auto& g : gg) g.at(0, 0) = Scalar(1);
  return make_module(sub_spec, std::move(coord), std::move(sg), std::move(gg));
}

FiniteModule twist_by_point(const FiniteModule& m, const SVec& t) {
  std::vector<ExactMatrix> coord = m.coord;
  for (size_t i = 0; i < coord.size(); ++i)
    for (int j = 0; j < m.dim; ++j) coord[i].at(j, j) += t[i];
  return make_module(m.spec, std::move(coord), m.simple_gen, m.gamma_gen);
}

FiniteModule langlands_standard(const GradedHeckeAlgebraSpec& spec,
                                const LanglandsDatum& datum) {
  if (!is_positive_position(spec.datum(), datum.t, datum.p.p_simples))
    throw std::invalid_argument("langlands_standard: twist not in positive position");
  if (!spec.r.is_real()) throw std::invalid_argument("langlands_standard: r must be real");
  if (!is_tempered(datum.tau))
    throw std::invalid_argument("langlands_standard: inducing module is not tempered");
  FiniteModule twisted = twist_by_point(datum.tau, datum.t);
  return induce_parabolic(spec, datum.p, twisted);
}

// ---------------- weights ----------------

namespace {

WeightSplit weight_split_impl(const FiniteModule& m) {
  struct Piece {
    ExactMatrix basis;
    SVec weight;
  };
  std::vector<Piece> pieces;
  pieces.push_back({ExactMatrix::identity(m.dim), {}});
  int n = m.spec.nvars();
  for (int i = 0; i < n; ++i) {
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      auto X = solve(piece.basis, m.coord[i] * piece.basis);
      if (!X) throw std::logic_error("weight_split: subspace not invariant");
      EigenRoots er = gaussian_roots(min_poly(*X));
      if (er.unresolved_degree > 0)
        throw std::runtime_error("weights are not Gaussian-rational; module not supported");
      for (auto& [lambda, mult] : er.roots) {
        auto K = generalized_eigenspace(*X, lambda, mult);
        if (K.empty()) continue;
        ExactMatrix kb((int)K[0].size(), (int)K.size());
        for (size_t c = 0; c < K.size(); ++c) kb.set_col((int)c, K[c]);
        Piece np;
        np.basis = piece.basis * kb;
        np.weight = piece.weight;
        np.weight.push_back(lambda);
        next.push_back(std::move(np));
      }
    }
    pieces = std::move(next);
  }
  WeightSplit ws;
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    for (size_t i = 0; i < a.weight.size(); ++i) {
      int c = scalar_cmp(a.weight[i], b.weight[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  int total = 0;
  for (auto& p : pieces) {
    ws.weights.push_back(p.weight);
    ws.basis.push_back(p.basis);
    total += p.basis.cols;
  }
  if (total != m.dim) throw std::logic_error("weight_split: dimensions do not add up");
  return ws;
}

}  // namespace

WeightSplit weight_split(const FiniteModule& m) {
  if (!m.ws_cache_) m.ws_cache_ = std::make_shared<const WeightSplit>(weight_split_impl(m));
  return *m.ws_cache_;
}

WeightDatum weights_and_central_character(const FiniteModule& m) {
  WeightSplit ws = weight_split(m);
  WeightDatum out;
  out.r = m.spec.r;
  for (size_t i = 0; i < ws.weights.size(); ++i)
    out.weights.emplace_back(ws.weights[i], ws.basis[i].cols);
  if (ws.weights.empty()) return out;

  const auto& G = *m.spec.group;
  std::vector<SVec> orbit;
  for (int e = 0; e < G.size(); ++e) {
    SVec img = G.apply_to_point(e, ws.weights[0]);
    bool seen = false;
    for (auto& o : orbit)
      if (o == img) seen = true;
    if (!seen) orbit.push_back(img);
  }
  bool all_in = true;
  for (auto& w : ws.weights) {
    bool in = false;
    for (auto& o : orbit)
      if (o == w) in = true;
    if (!in) all_in = false;
  }
  out.has_central_character = all_in;
  if (all_in) {
    auto lex_less = [](const SVec& a, const SVec& b) {
      for (size_t i = 0; i < a.size(); ++i) {
        int c = scalar_cmp(a[i], b[i]);
        if (c != 0) return c < 0;
      }
      return false;
    };
    SVec best = orbit[0];
    for (auto& o : orbit)
      if (lex_less(o, best)) best = o;
    out.central_orbit_rep = best;
  }
  return out;
}

long det_multiplicity(const FiniteModule& m) {
  const auto& G = *m.spec.group;
  Scalar acc(0);
  for (int e = 0; e < G.size(); ++e)
    acc += Scalar((long)G.det_char[e]) * m.act_element(e).trace();
  Scalar val = acc / Scalar((long)G.size());
  if (!val.is_integer() || val.re < 0)
    throw std::logic_error("det_multiplicity: non-integer value (broken N_w matrices)");
  return (long)val.re.get_num().get_si();
}

long trivial_multiplicity(const FiniteModule& m) {
  const auto& G = *m.spec.group;
  Scalar acc(0);
  for (int e = 0; e < G.size(); ++e) acc += m.act_element(e).trace();
  Scalar val = acc / Scalar((long)G.size());
  if (!val.is_integer() || val.re < 0)
    throw std::logic_error("trivial_multiplicity: non-integer value");
  return (long)val.re.get_num().get_si();
}

std::string to_string(Temperedness t) {
  switch (t) {
    case Temperedness::tempered: return "tempered";
    case Temperedness::essentially_discrete: return "essentially_discrete";
    default: return "neither";
  }
}

namespace {

struct ConeCoords {
  QVec coeffs;
  bool central_zero;
};

// expansion of Re(x) over the simple coroots plus a central remainder
ConeCoords cone_coords(const GradedHeckeAlgebraSpec& spec, const SVec& weight) {
  const auto& d = spec.datum();
  int ns = d.num_simples();
  ConeCoords out;
  out.coeffs.assign(ns, Rat(0));
  SVec combo(d.rank, Scalar(0));
  if (ns > 0) {
    ExactMatrix cartan(ns, ns), rhs(ns, 1);
    for (int a = 0; a < ns; ++a) {
      for (int b = 0; b < ns; ++b)
        cartan.at(a, b) = Scalar(dot(d.simple_root(a), d.simple_coroot(b)));
      Scalar v(0);
      for (int i = 0; i < d.rank; ++i) v += Scalar(d.simple_root(a)[i]) * Scalar(weight[i].re);
      rhs.at(a, 0) = v;
    }
    auto sol = solve(cartan, rhs);
    if (!sol) throw std::logic_error("cone_coords: Cartan matrix singular");
    for (int b = 0; b < ns; ++b) {
      out.coeffs[b] = sol->at(b, 0).re;
      for (int i = 0; i < d.rank; ++i)
        combo[i] += Scalar(d.simple_coroot(b)[i]) * sol->at(b, 0);
    }
  }
  out.central_zero = true;
  for (int i = 0; i < d.rank; ++i)
    if (combo[i] != Scalar(weight[i].re)) out.central_zero = false;
  return out;
}

}  // namespace

bool is_tempered(const FiniteModule& m) {
  WeightSplit ws = weight_split(m);
  for (auto& w : ws.weights) {
    ConeCoords cc = cone_coords(m.spec, w);
    if (!cc.central_zero) return false;
    for (auto& c : cc.coeffs)
      if (c > 0) return false;
  }
  return true;
}

bool is_essentially_discrete(const FiniteModule& m) {
  WeightSplit ws = weight_split(m);
  for (auto& w : ws.weights) {
    ConeCoords cc = cone_coords(m.spec, w);
    for (auto& c : cc.coeffs)
      if (c >= 0) return false;
  }
  return true;
}

Temperedness temperedness_class(const FiniteModule& m) {
  if (m.spec.num_simples() > 0 && is_essentially_discrete(m))
    return Temperedness::essentially_discrete;
  if (is_tempered(m)) return Temperedness::tempered;
  if (is_essentially_discrete(m)) return Temperedness::essentially_discrete;
  return Temperedness::neither;
}

std::pair<int, std::vector<ExactMatrix>> hom_space(const FiniteModule& m1,
                                                   const FiniteModule& m2) {
  if (!spec_equal(m1.spec, m2.spec)) throw std::invalid_argument("hom_space: spec mismatch");
  WeightSplit w1 = weight_split(m1), w2 = weight_split(m2);

  ExactMatrix B1(m1.dim, m1.dim), B2(m2.dim, m2.dim);
  {
    int c = 0;
    for (auto& b : w1.basis)
      for (int j = 0; j < b.cols; ++j, ++c)
        for (int i = 0; i < m1.dim; ++i) B1.at(i, c) = b.at(i, j);
    c = 0;
    for (auto& b : w2.basis)
      for (int j = 0; j < b.cols; ++j, ++c)
        for (int i = 0; i < m2.dim; ++i) B2.at(i, c) = b.at(i, j);
  }
  auto B1i = B1.inverse(), B2i = B2.inverse();
  if (!B1i || !B2i) throw std::logic_error("hom_space: adapted basis not invertible");

  struct Block {
    int r0, c0, rows, cols;
  };
  std::vector<Block> blocks;
  std::vector<std::pair<int, int>> off1, off2;
  {
    int o = 0;
    for (auto& b : w1.basis) {
      off1.emplace_back(o, b.cols);
      o += b.cols;
    }
    o = 0;
    for (auto& b : w2.basis) {
      off2.emplace_back(o, b.cols);
      o += b.cols;
    }
  }
  int nunk = 0;
  std::vector<int> unk_base;
  for (size_t i = 0; i < w1.weights.size(); ++i)
    for (size_t j = 0; j < w2.weights.size(); ++j)
      if (w1.weights[i] == w2.weights[j]) {
        blocks.push_back({off2[j].first, off1[i].first, off2[j].second, off1[i].second});
        unk_base.push_back(nunk);
        nunk += off2[j].second * off1[i].second;
      }
  if (nunk == 0) return {0, {}};

  std::vector<ExactMatrix> gens1, gens2;
  auto add_gen = [&](const ExactMatrix& a1, const ExactMatrix& a2) {
    gens1.push_back(*B1i * a1 * B1);
    gens2.push_back(*B2i * a2 * B2);
  };
  for (size_t i = 0; i < m1.coord.size(); ++i) add_gen(m1.coord[i], m2.coord[i]);
  for (size_t s = 0; s < m1.simple_gen.size(); ++s) add_gen(m1.simple_gen[s], m2.simple_gen[s]);
  for (size_t g = 1; g < m1.gamma_gen.size(); ++g) add_gen(m1.gamma_gen[g], m2.gamma_gen[g]);

  int nrows = (int)gens1.size() * m2.dim * m1.dim;
  ExactMatrix sys(nrows, nunk);
  for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
    const Block& bl = blocks[bidx];
    for (int br = 0; br < bl.rows; ++br)
      for (int bc = 0; bc < bl.cols; ++bc) {
        int unk = unk_base[bidx] + br * bl.cols + bc;
        int ti = bl.r0 + br;
        int tj = bl.c0 + bc;
        for (size_t g = 0; g < gens1.size(); ++g) {
          int rowbase = (int)g * m2.dim * m1.dim;
          for (int c = 0; c < m1.dim; ++c)
            if (!gens1[g].at(tj, c).is_zero())
              sys.at(rowbase + ti * m1.dim + c, unk) += gens1[g].at(tj, c);
          for (int r = 0; r < m2.dim; ++r)
            if (!gens2[g].at(r, ti).is_zero())
              sys.at(rowbase + r * m1.dim + tj, unk) -= gens2[g].at(r, ti);
        }
      }
  }
  auto ker = matrix_kernel(sys);
  std::vector<ExactMatrix> homs;
  for (auto& v : ker) {
    ExactMatrix Tb(m2.dim, m1.dim);
    for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
      const Block& bl = blocks[bidx];
      for (int br = 0; br < bl.rows; ++br)
        for (int bc = 0; bc < bl.cols; ++bc)
          Tb.at(bl.r0 + br, bl.c0 + bc) = v[unk_base[bidx] + br * bl.cols + bc];
    }
    homs.push_back(B2 * Tb * *B1i);
  }
  return {(int)ker.size(), homs};
}

FiniteModule sgn_pullback(const FiniteModule& m) {
  GradedHeckeAlgebraSpec spec2 = m.spec.with_r(-m.spec.r);
  std::vector<ExactMatrix> sg;
  for (auto& s : m.simple_gen) sg.push_back(s.scaled(Scalar(-1)));
  std::vector<ExactMatrix> gg;
  for (size_t g = 0; g < m.gamma_gen.size(); ++g) {
    Rat d = mat_det(m.spec.group->gammas[g]);
    gg.push_back(m.gamma_gen[g].scaled(Scalar(d)));
  }
  return make_module(spec2, m.coord, std::move(sg), std::move(gg));
}

std::optional<Scalar> central_evaluate(const Poly& z, const FiniteModule& m) {
  for (int e = 0; e < m.spec.group->size(); ++e)
    if (m.spec.act(e, z) != z)
      throw std::invalid_argument("central_evaluate: polynomial is not W Gamma-invariant");
  ExactMatrix a = m.act_poly(z);
  Scalar c;
  if (a.is_scalar_multiple_of_identity(&c)) return c;
  return std::nullopt;
}

// ---------------- submodule machinery ----------------

FiniteModule submodule(const FiniteModule& m, const ExactMatrix& basis_cols) {
  auto restrict_mat = [&](const ExactMatrix& g) {
    auto X = solve(basis_cols, g * basis_cols);
    if (!X) throw std::invalid_argument("submodule: subspace not invariant");
    return *X;
  };
  std::vector<ExactMatrix> coord, sg, gg;
  for (auto& c : m.coord) coord.push_back(restrict_mat(c));
  for (auto& s : m.simple_gen) sg.push_back(restrict_mat(s));
  for (auto& g : m.gamma_gen) gg.push_back(restrict_mat(g));
  return make_module(m.spec, std::move(coord), std::move(sg), std::move(gg));
}

namespace {

ExactMatrix complete_basis(const ExactMatrix& b, int dim) {
  std::vector<SVec> echelon;
  std::vector<int> lead;
  auto insert = [&](SVec v) {
    for (size_t e = 0; e < echelon.size(); ++e) {
      if (v[lead[e]].is_zero()) continue;
      Scalar f = v[lead[e]];
      for (int i = 0; i < dim; ++i) v[i] -= f * echelon[e][i];
    }
    for (int i = 0; i < dim; ++i)
      if (!v[i].is_zero()) {
        Scalar inv = v[i].inv();
        for (int k = 0; k < dim; ++k) v[k] *= inv;
        echelon.push_back(v);
        lead.push_back(i);
        return true;
      }
    return false;
  };
  for (int j = 0; j < b.cols; ++j) {
    SVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = b.at(i, j);
    if (!insert(v)) throw std::invalid_argument("complete_basis: dependent columns");
  }
  ExactMatrix full(dim, dim);
  for (int j = 0; j < b.cols; ++j)
    for (int i = 0; i < dim; ++i) full.at(i, j) = b.at(i, j);
  int c = b.cols;
  for (int i = 0; i < dim && c < dim; ++i) {
    SVec v(dim, Scalar(0));
    v[i] = Scalar(1);
    if (insert(v)) {
      full.at(i, c) = Scalar(1);
      ++c;
    }
  }
  if (c != dim) throw std::logic_error("complete_basis: completion failed");
  return full;
}

}  // namespace

FiniteModule quotient(const FiniteModule& m, const ExactMatrix& basis_cols) {
  int k = basis_cols.cols;
  ExactMatrix P = complete_basis(basis_cols, m.dim);
  auto Pi = P.inverse();
  if (!Pi) throw std::logic_error("quotient: basis completion not invertible");
  auto project = [&](const ExactMatrix& g) {
    ExactMatrix conj = *Pi * g * P;
    ExactMatrix q(m.dim - k, m.dim - k);
    for (int i = k; i < m.dim; ++i)
      for (int j = k; j < m.dim; ++j) q.at(i - k, j - k) = conj.at(i, j);
    return q;
  };
  std::vector<ExactMatrix> coord, sg, gg;
  for (auto& c : m.coord) coord.push_back(project(c));
  for (auto& s : m.simple_gen) sg.push_back(project(s));
  for (auto& g : m.gamma_gen) gg.push_back(project(g));
  return make_module(m.spec, std::move(coord), std::move(sg), std::move(gg));
}

ExactMatrix spin(const FiniteModule& m, const SVec& v) {
  std::vector<SVec> echelon;
  std::vector<int> lead;
  std::vector<SVec> worklist;
  auto insert = [&](SVec w) {
    for (size_t e = 0; e < echelon.size(); ++e) {
      if (w[lead[e]].is_zero()) continue;
      Scalar f = w[lead[e]];
      for (int i = 0; i < m.dim; ++i) w[i] -= f * echelon[e][i];
    }
    for (int i = 0; i < m.dim; ++i)
      if (!w[i].is_zero()) {
        Scalar inv = w[i].inv();
        for (int k = 0; k < m.dim; ++k) w[k] *= inv;
        echelon.push_back(w);
        lead.push_back(i);
        worklist.push_back(w);
        return;
      }
  };
  insert(v);
  std::vector<const ExactMatrix*> gens;
  for (auto& c : m.coord) gens.push_back(&c);
  for (auto& s : m.simple_gen) gens.push_back(&s);
  for (size_t g = 1; g < m.gamma_gen.size(); ++g) gens.push_back(&m.gamma_gen[g]);
  while (!worklist.empty()) {
    SVec w = worklist.back();
    worklist.pop_back();
    for (auto* g : gens) insert(g->apply(w));
  }
  ExactMatrix out(m.dim, (int)echelon.size());
  for (size_t c = 0; c < echelon.size(); ++c) out.set_col((int)c, echelon[c]);
  return out;
}

FiniteModule dual_module(const FiniteModule& m) {
  const auto& G = *m.spec.group;
  std::vector<ExactMatrix> coord, sg, gg;
  for (auto& c : m.coord) coord.push_back(c.transpose());
  for (auto& s : m.simple_gen) sg.push_back(s.transpose());
  for (size_t g = 0; g < m.gamma_gen.size(); ++g) {
    QMat inv = mat_inverse(G.gammas[g]);
    int gi = -1;
    for (size_t x = 0; x < G.gammas.size(); ++x)
      if (G.gammas[x] == inv) gi = (int)x;
    if (gi < 0) throw std::logic_error("dual_module: gamma inverse missing");
    gg.push_back(m.gamma_gen[gi].transpose());
  }
  return make_module(m.spec, std::move(coord), std::move(sg), std::move(gg));
}

// ---------------- composition factors ----------------

namespace {

std::vector<ExactMatrix> image_algebra_basis(const FiniteModule& m) {
  int d2 = m.dim * m.dim;
  std::vector<SVec> echelon;
  std::vector<int> lead;
  std::vector<ExactMatrix> basis;
  std::vector<ExactMatrix> worklist;
  auto insert = [&](const ExactMatrix& mat) {
    SVec v = mat.a;
    for (size_t e = 0; e < echelon.size(); ++e) {
      if (v[lead[e]].is_zero()) continue;
      Scalar f = v[lead[e]];
      for (int i = 0; i < d2; ++i) v[i] -= f * echelon[e][i];
    }
    for (int i = 0; i < d2; ++i)
      if (!v[i].is_zero()) {
        Scalar inv = v[i].inv();
        ExactMatrix nm(m.dim, m.dim);
        for (int k = 0; k < d2; ++k) {
          v[k] *= inv;
          nm.a[k] = v[k];
        }
        echelon.push_back(std::move(v));
        lead.push_back(i);
        basis.push_back(nm);
        worklist.push_back(std::move(nm));
        return;
      }
  };
  insert(ExactMatrix::identity(m.dim));
  std::vector<const ExactMatrix*> gens;
  for (auto& c : m.coord) gens.push_back(&c);
  for (auto& s : m.simple_gen) gens.push_back(&s);
  for (size_t g = 1; g < m.gamma_gen.size(); ++g) gens.push_back(&m.gamma_gen[g]);
  while (!worklist.empty()) {
    ExactMatrix b = worklist.back();
    worklist.pop_back();
    for (auto* g : gens) insert(*g * b);
  }
  return basis;
}

std::vector<ExactMatrix> algebra_radical(const std::vector<ExactMatrix>& basis) {
  int n = (int)basis.size();
  ExactMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar t(0);
      int d = basis[i].rows;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (!basis[i].at(a, b).is_zero()) t += basis[i].at(a, b) * basis[j].at(b, a);
      gram.at(i, j) = t;
    }
  auto ker = matrix_kernel(gram);
  std::vector<ExactMatrix> rad;
  for (auto& v : ker) {
    ExactMatrix r(basis[0].rows, basis[0].cols);
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero()) r = r + basis[i].scaled(v[i]);
    rad.push_back(std::move(r));
  }
  return rad;
}

std::vector<SVec> joint_eigenvectors(const FiniteModule& m, const SVec& weight) {
  int n = m.spec.nvars();
  ExactMatrix stacked(n * m.dim, m.dim);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        stacked.at(i * m.dim + r, c) = m.coord[i].at(r, c) - (r == c ? weight[i] : Scalar(0));
  return matrix_kernel(stacked);
}

// A proper nonzero submodule, or nullopt with simplicity certified.
// Spin splitting runs first; the trace-form radical of the image algebra is
// the final certificate (J = 0 and End = scalars force simplicity).
std::optional<ExactMatrix> find_proper_submodule(const FiniteModule& m) {
  WeightSplit ws = weight_split(m);
  for (auto& w : ws.weights)
    for (auto& v : joint_eigenvectors(m, w)) {
      ExactMatrix sp = spin(m, v);
      if (sp.cols > 0 && sp.cols < m.dim) return sp;
    }
  FiniteModule dual = dual_module(m);
  WeightSplit wsd = weight_split(dual);
  for (auto& w : wsd.weights)
    for (auto& v : joint_eigenvectors(dual, w)) {
      ExactMatrix sp = spin(dual, v);
      if (sp.cols > 0 && sp.cols < m.dim) {
        ExactMatrix sys(sp.cols, m.dim);
        for (int c = 0; c < sp.cols; ++c)
          for (int i = 0; i < m.dim; ++i) sys.at(c, i) = sp.at(i, c);
        auto ker = matrix_kernel(sys);
        ExactMatrix perp(m.dim, (int)ker.size());
        for (size_t c = 0; c < ker.size(); ++c) perp.set_col((int)c, ker[c]);
        if (perp.cols > 0 && perp.cols < m.dim) return perp;
      }
    }
  auto [edim, ends] = hom_space(m, m);
  if (edim > 1) {
    for (auto& T : ends) {
      Scalar c;
      if (T.is_scalar_multiple_of_identity(&c)) continue;
      EigenRoots er = gaussian_roots(min_poly(T));
      if (er.unresolved_degree > 0)
        throw std::runtime_error("composition_factors: non-split endomorphism algebra");
      for (auto& [lambda, mult] : er.roots) {
        ExactMatrix shifted = T;
        for (int i = 0; i < m.dim; ++i) shifted.at(i, i) -= lambda;
        auto ker = matrix_kernel(shifted);
        if (!ker.empty() && (int)ker.size() < m.dim) {
          ExactMatrix b(m.dim, (int)ker.size());
          for (size_t k = 0; k < ker.size(); ++k) b.set_col((int)k, ker[k]);
          return b;
        }
      }
    }
    throw std::logic_error("composition_factors: endomorphism splitting failed");
  }
  auto basis = image_algebra_basis(m);
  auto rad = algebra_radical(basis);
  if (!rad.empty()) {
    ExactMatrix cols(m.dim, (int)rad.size() * m.dim);
    for (size_t j = 0; j < rad.size(); ++j)
      for (int c = 0; c < m.dim; ++c)
        for (int i = 0; i < m.dim; ++i) cols.at(i, (int)j * m.dim + c) = rad[j].at(i, c);
    ExactMatrix jm = column_space(cols);
    if (jm.cols > 0 && jm.cols < m.dim) return jm;
    throw std::logic_error("composition_factors: inconsistent radical");
  }
  return std::nullopt;
}

void factors_rec(const FiniteModule& m, std::vector<FiniteModule>& out) {
  if (m.dim == 0) return;
  auto sub = find_proper_submodule(m);
  if (!sub) {
    out.push_back(m);
    return;
  }
  factors_rec(submodule(m, *sub), out);
  factors_rec(quotient(m, *sub), out);
}

}  // namespace

int Factors::total() const {
  int t = 0;
  for (size_t i = 0; i < classes.size(); ++i) t += multiplicity[i];
  return t;
}

Factors composition_factors(const FiniteModule& m) {
  std::vector<FiniteModule> raw;
  factors_rec(m, raw);
  Factors out;
  for (auto& f : raw) {
    bool placed = false;
    for (size_t c = 0; c < out.classes.size(); ++c) {
      if (out.classes[c].dim != f.dim) continue;
      if (hom_space(out.classes[c], f).first > 0) {
        out.multiplicity[c] += 1;
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.classes.push_back(f);
      out.multiplicity.push_back(1);
    }
  }
  return out;
}

SocleData socle_and_factors(const FiniteModule& m) {
  SocleData out;
  out.factors = composition_factors(m);
  std::vector<SVec> cols;
  for (size_t c = 0; c < out.factors.classes.size(); ++c) {
    auto [hdim, homs] = hom_space(out.factors.classes[c], m);
    if (hdim > 0) out.constituent_ids.push_back((int)c);
    for (auto& T : homs)
      for (int j = 0; j < T.cols; ++j) {
        SVec v(m.dim);
        for (int i = 0; i < m.dim; ++i) v[i] = T.at(i, j);
        cols.push_back(std::move(v));
      }
  }
  ExactMatrix all(m.dim, (int)cols.size());
  for (size_t c = 0; c < cols.size(); ++c) all.set_col((int)c, cols[c]);
  out.basis = column_space(all);
  return out;
}

FiniteModule head(const FiniteModule& m) {
  FiniteModule dual = dual_module(m);
  SocleData sd = socle_and_factors(dual);
  ExactMatrix sys(sd.basis.cols, m.dim);
  for (int c = 0; c < sd.basis.cols; ++c)
    for (int i = 0; i < m.dim; ++i) sys.at(c, i) = sd.basis.at(i, c);
  auto ker = matrix_kernel(sys);
  ExactMatrix rad(m.dim, (int)ker.size());
  for (size_t c = 0; c < ker.size(); ++c) rad.set_col((int)c, ker[c]);
  if (rad.cols == 0) return m;
  return quotient(m, rad);
}

bool is_irreducible(const FiniteModule& m) {
  if (m.dim == 0) return false;
  return !find_proper_submodule(m).has_value();
}

bool isomorphic(const FiniteModule& a, const FiniteModule& b) {
  if (a.dim != b.dim) return false;
  return hom_space(a, b).first > 0;
}

}  // namespace heckelab

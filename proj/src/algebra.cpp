#include "heckelab/algebra.hpp"

#include <stdexcept>

namespace heckelab {

Poly GradedHeckeAlgebraSpec::act(int element, const Poly& f) const {
  return apply_weyl_to_poly(group->x_action[element], f);
}

Poly GradedHeckeAlgebraSpec::demazure_simple(int s, const Poly& f) const {
  return demazure(f, simple_root_poly(s), group->datum.reflection_on_x(datum().simples[s]));
}

void GradedHeckeAlgebraSpec::validate() const {
  if ((int)k.size() != datum().num_roots())
    throw std::invalid_argument("spec: parameter function size mismatch");
  ParameterFunction pf{k};
  pf.validate_invariance(*group);
}

bool GradedHeckeAlgebraSpec::compatible(const GradedHeckeAlgebraSpec& o) const {
  return group.get() == o.group.get() && k == o.k && r == o.r;
}

GradedHeckeAlgebraSpec GradedHeckeAlgebraSpec::with_r(const Scalar& new_r) const {
  GradedHeckeAlgebraSpec s = *this;
  s.r = new_r;
  return s;
}

GradedHeckeAlgebraSpec make_spec(const std::string& type, const std::string& gamma,
                                 const std::map<std::string, Rat>& k, const Scalar& r) {
  BasedRootDatum d = build_root_datum(type);
  GradedHeckeAlgebraSpec spec;
  spec.group = enumerate_group(d, gamma);
  spec.k = ParameterFunction::by_length(d, k).values;
  spec.r = r;
  spec.validate();
  return spec;
}

Poly apply_weyl_to_poly(const QMat& w_on_x, const Poly& f) {
  if ((int)w_on_x.size() != f.nvars) throw std::invalid_argument("apply_weyl: dimension mismatch");
  // variable i maps to column i of the matrix
  std::vector<QVec> cols(f.nvars, QVec(f.nvars));
  for (int i = 0; i < f.nvars; ++i)
    for (int j = 0; j < f.nvars; ++j) cols[i][j] = w_on_x[j][i];
  return f.substitute_linear(cols);
}

Poly demazure(const Poly& f, const Poly& alpha, const QMat& reflection_on_x) {
  Poly diff = f - apply_weyl_to_poly(reflection_on_x, f);
  auto q = divide_by_linear(diff, alpha);
  if (!q)
    throw std::logic_error("demazure: inexact division (corrupted reflection action)");
  return *q;
}

AlgebraElement AlgebraElement::monomial(int element, Poly f) {
  AlgebraElement a;
  if (!f.is_zero()) a.coeff.emplace(element, std::move(f));
  return a;
}

AlgebraElement AlgebraElement::group_element(int element, int nvars) {
  return monomial(element, Poly::constant(nvars, Scalar(1)));
}

AlgebraElement AlgebraElement::polynomial(const Poly& f) { return monomial(0, f); }

void AlgebraElement::add_term(int element, const Poly& f) {
  if (f.is_zero()) return;
  auto it = coeff.find(element);
  if (it == coeff.end()) {
    coeff.emplace(element, f);
  } else {
    it->second = it->second + f;
    if (it->second.is_zero()) coeff.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (auto& [e, f] : o.coeff) r.add_term(e, f);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (auto& [e, f] : o.coeff) r.add_term(e, -f);
  return r;
}

AlgebraElement push_poly_left(const GradedHeckeAlgebraSpec& spec, int u, const Poly& g) {
  const auto& G = *spec.group;
  // N_u = N_{s_1} ... N_{s_l} N_gamma along the canonical reduced word
  // process from the right: start with N_gamma * g, then prepend reflections
  int gamma = G.gamma_part[u];
  AlgebraElement acc;
  {
    int ge = G.gamma_element(gamma);
    Poly moved = spec.act(ge, g);  // g o gamma^{-1}
    acc = AlgebraElement::monomial(ge, std::move(moved));
  }
  const auto& word = G.word[u];
  for (size_t pos = word.size(); pos-- > 0;) {
    int s = word[pos];
    int se = G.simple_reflection(s);
    Scalar kr = Scalar(spec.k_simple(s)) * spec.r;
    AlgebraElement next;
    for (auto& [v, h] : acc.coeff) {
      // N_s (h N_v) = (h o s) N_{s v} + k r D(h) N_v
      next.add_term(G.mult[se][v], spec.act(se, h));
      if (!kr.is_zero()) next.add_term(v, spec.demazure_simple(s, h).scaled(kr));
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::pair<int, Poly>> push_poly_right(const GradedHeckeAlgebraSpec& spec,
                                                  const Poly& g, int u) {
  const auto& G = *spec.group;
  // process the word from the left: g N_{s_1} ... = N_{s_1}(g o s_1) ... + k r D(g) ...
  std::vector<std::pair<int, Poly>> acc = {{0, g}};  // identity-prefixed
  const auto& word = G.word[u];
  for (int s : word) {
    int se = G.simple_reflection(s);
    Scalar kr = Scalar(spec.k_simple(s)) * spec.r;
    std::map<int, Poly> next;
    auto add = [&](int e, const Poly& p) {
      if (p.is_zero()) return;
      auto it = next.find(e);
      if (it == next.end())
        next.emplace(e, p);
      else {
        it->second = it->second + p;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (auto& [v, h] : acc) {
      // h N_s = N_s (h o s) + k r D(h); prefix v stays on the left
      add(G.mult[v][se], spec.act(se, h));
      if (!kr.is_zero()) add(v, spec.demazure_simple(s, h).scaled(kr));
    }
    acc.assign(next.begin(), next.end());
  }
  int gamma = G.gamma_part[u];
  if (gamma != 0) {
    int ge = G.gamma_element(gamma);
    std::vector<std::pair<int, Poly>> out;
    // g N_gamma = N_gamma (g o gamma)
    for (auto& [v, h] : acc) out.emplace_back(G.mult[v][ge], spec.act(G.invs[ge], h));
    return out;
  }
  return acc;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const GradedHeckeAlgebraSpec& spec) {
  const auto& G = *spec.group;
  AlgebraElement out;
  for (auto& [u, f] : a.coeff)
    for (auto& [v, g] : b.coeff) {
      // (f N_u)(g N_v) = f (N_u g) N_v
      AlgebraElement moved = push_poly_left(spec, u, g);
      for (auto& [w, h] : moved.coeff) out.add_term(G.mult[w][v], f * h);
    }
  return out;
}

AlgebraElement sgn_map(const AlgebraElement& a, const GradedHeckeAlgebraSpec& spec) {
  AlgebraElement out;
  for (auto& [e, f] : a.coeff)
    out.add_term(e, spec.group->det_char[e] == 1 ? f : -f);
  return out;
}

std::string element_to_string(const AlgebraElement& a, const GradedHeckeAlgebraSpec& spec) {
  if (a.coeff.empty()) return "0";
  // length-lexicographic element order = index order by construction
  std::string out;
  bool first = true;
  for (auto& [e, f] : a.coeff) {
    if (!first) out += " + ";
    first = false;
    std::string name = "N[";
    const auto& word = spec.group->word[e];
    if (word.empty() && spec.group->gamma_part[e] == 0) name = "N[e";
    for (size_t i = 0; i < word.size(); ++i)
      name += (i ? " " : "") + std::string("s") + std::to_string(word[i] + 1);
    if (spec.group->gamma_part[e] != 0)
      name += (word.empty() ? "" : " ") + std::string("g") +
              std::to_string(spec.group->gamma_part[e]);
    name += "]";
    out += "(" + f.str() + ") * " + name;
  }
  return out;
}

std::vector<std::string> relation_strings(const GradedHeckeAlgebraSpec& spec) {
  std::vector<std::string> out;
  for (int s = 0; s < spec.num_simples(); ++s) {
    Poly alpha = spec.simple_root_poly(s);
    out.push_back("N[s" + std::to_string(s + 1) + "] * f - (f o s" + std::to_string(s + 1) +
                  ") * N[s" + std::to_string(s + 1) + "] = " +
                  rat_to_string(spec.k_simple(s)) + " * r * (f - f o s" + std::to_string(s + 1) +
                  ") / (" + alpha.str() + ")");
  }
  for (size_t g = 1; g < spec.group->gammas.size(); ++g)
    out.push_back("N[g" + std::to_string(g) + "] * f = (f o g" + std::to_string(g) +
                  "^-1) * N[g" + std::to_string(g) + "]");
  return out;
}

std::pair<GradedHeckeAlgebraSpec, RootScaling> normalize_equal_parameters(
    const GradedHeckeAlgebraSpec& spec) {
  const BasedRootDatum& d = spec.datum();
  for (auto& v : spec.k)
    if (v <= 0) throw std::invalid_argument("normalize: parameters must be positive");

  // connected components of the root system via nonorthogonality
  int nr = d.num_roots();
  std::vector<int> comp(nr, -1);
  int ncomp = 0;
  for (int r = 0; r < nr; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<int> stack = {r};
    comp[r] = ncomp;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int s = 0; s < nr; ++s)
        if (comp[s] < 0 &&
            (dot(d.roots[cur], d.coroots[s]) != 0 || d.roots[s] == d.roots[cur]))
          { comp[s] = ncomp; stack.push_back(s); }
    }
    ++ncomp;
  }

  RootScaling scaling;
  scaling.factor.assign(nr, Rat(1));
  std::vector<Rat> new_k = spec.k;
  BasedRootDatum nd = d;
  nd.label = d.label + "-normalized";

  for (int c = 0; c < ncomp; ++c) {
    // long/short detection inside the component via Cartan pairings
    std::vector<bool> in_c(nr, false);
    for (int r = 0; r < nr; ++r) in_c[r] = (comp[r] == c);
    std::vector<bool> is_long(nr, false);
    Rat len_ratio_sq(1);
    for (int r = 0; r < nr; ++r) {
      if (!in_c[r]) continue;
      for (int s = 0; s < nr; ++s) {
        if (!in_c[s] || s == r) continue;
        Rat a = dot(d.roots[r], d.coroots[s]);
        Rat b = dot(d.roots[s], d.coroots[r]);
        if (a != 0 && b != 0 && abs(a) > abs(b)) {
          is_long[r] = true;
          Rat ratio = abs(a) / abs(b);
          if (ratio > len_ratio_sq) len_ratio_sq = ratio;
        }
      }
    }
    Rat k_short(0), k_long(0);
    for (int r = 0; r < nr; ++r) {
      if (!in_c[r]) continue;
      if (is_long[r]) k_long = spec.k[r];
      else k_short = spec.k[r];
    }
    if (k_short == 0) k_short = k_long;  // single-length component
    if (k_long == 0) k_long = k_short;
    Rat kappa = k_long / k_short;
    if (kappa != 1 && kappa != len_ratio_sq)
      throw std::invalid_argument(
          "normalize: parameter ratio is not admissible (must be 1 or the squared length ratio)");

    for (int r = 0; r < nr; ++r) {
      if (!in_c[r]) continue;
      Rat f(1);
      if (is_long[r] && kappa != 1) f /= kappa;      // divide long roots by kappa
      Rat k_after = spec.k[r] * f;                    // k scales with the root
      Rat base = Rat(2) / k_after;                    // then rescale to k = 2
      f *= base;
      scaling.factor[r] = f;
      new_k[r] = spec.k[r] * f;
      for (auto& x : nd.roots[r]) x *= f;
      for (auto& x : nd.coroots[r]) x /= f;  // keep <alpha, alpha^vee> = 2
    }
  }

  GradedHeckeAlgebraSpec out;
  auto gcopy = std::make_shared<ExtendedWeylGroup>(*spec.group);
  gcopy->datum = nd;
  out.group = gcopy;
  out.k = new_k;
  out.r = spec.r;
  for (auto& v : out.k)
    if (v != 2) throw std::logic_error("normalize: rescaling did not reach k = 2");
  return {out, scaling};
}

}  // namespace heckelab

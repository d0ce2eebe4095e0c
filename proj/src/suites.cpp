#include "heckelab/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace heckelab {

namespace {

using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, int num_range = 4, bool halves = false) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  Rat v(num(rng));
  if (halves && num(rng) % 2 == 0) v /= 2;
  return v;
}

Scalar random_gaussian(Rng& rng, int range = 3, bool halves = false) {
  return Scalar(random_rat(rng, range, halves), random_rat(rng, range, halves));
}

Poly random_poly(Rng& rng, int nvars, int max_deg = 2, int terms = 3) {
  Poly p(nvars);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Mono m(nvars, 0);
    for (int i = 0; i < nvars; ++i) m[i] = (unsigned)deg(rng);
    p.add_term(m, random_gaussian(rng, 3));
  }
  return p;
}

AlgebraElement random_element(Rng& rng, const GradedHeckeAlgebraSpec& spec, int support = 2) {
  AlgebraElement a;
  std::uniform_int_distribution<int> pick(0, spec.group->size() - 1);
  for (int s = 0; s < support; ++s) a.add_term(pick(rng), random_poly(rng, spec.nvars(), 2, 2));
  return a;
}

std::string svec_str(const SVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// random sigma with integer eigenvalues, plus a random nilpotent in the
// graded space
struct RandomParam {
  SemisimpleElement sigma;
  NilpotentElement y;
  Scalar r;
};

RandomParam random_parameter(Rng& rng, int nmax, const std::vector<long>& rs) {
  std::uniform_int_distribution<int> npick(2, nmax);
  std::uniform_int_distribution<int> eig(-4, 4);
  std::uniform_int_distribution<size_t> rpick(0, rs.size() - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  RandomParam p;
  int n = npick(rng);
  p.sigma.n = n;
  for (int i = 0; i < n; ++i) p.sigma.eigen.push_back(Scalar(eig(rng)));
  p.r = Scalar(rs[rpick(rng)]);
  p.y.n = n;
  p.y.mat = ExactMatrix(n, n);
  GradedSpace g = graded_space(p.sigma, p.r);
  for (auto& [i, j] : g.units) p.y.mat.at(i, j) = Scalar(coef(rng));
  return p;
}

// all partitions of n
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// parameter with a fixed Jordan type and a bounded / essentially bounded
// sigma_0 commuting with the standard graded triple
RandomParam bounded_parameter(Rng& rng, const std::vector<int>& jordan, bool essentially,
                              long rval) {
  int n = 0;
  for (int p : jordan) n += p;
  RandomParam out;
  out.r = Scalar(rval);
  out.sigma.n = n;
  out.sigma.eigen.assign(n, Scalar(0));
  out.y.n = n;
  out.y.mat = ExactMatrix(n, n);
  Rat common = essentially ? random_rat(rng, 3) : Rat(0);
  int pos = 0;
  for (int p : jordan) {
    Scalar c(common, random_rat(rng, 3));
    for (int j = 0; j < p; ++j) {
      // h-weight p-1-2j on this chain slot, sigma = sigma0 + r h
      out.sigma.eigen[pos + j] = c + out.r * Scalar(p - 1 - 2 * j);
      if (j + 1 < p) out.y.mat.at(pos + j, pos + j + 1) = Scalar(1);
    }
    pos += p;
  }
  return out;
}

// the generic (open-orbit) multisegment of a chain dimension vector
ChainMultisegment generic_multisegment(std::vector<int> dims) {
  ChainMultisegment out;
  while (true) {
    int lo = -1;
    for (size_t i = 0; i < dims.size(); ++i)
      if (dims[i] > 0) {
        lo = (int)i;
        break;
      }
    if (lo < 0) break;
    int hi = lo;
    while (hi + 1 < (int)dims.size() && dims[hi + 1] > 0) ++hi;
    for (int i = lo; i <= hi; ++i) --dims[i];
    out.emplace_back(lo, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChainMultisegment> generic_multisegs(const SigmaChains& chains) {
  std::vector<ChainMultisegment> out;
  for (auto& c : chains.chains) {
    std::vector<int> dims;
    for (auto& idx : c.indices) dims.push_back((int)idx.size());
    out.push_back(generic_multisegment(dims));
  }
  return out;
}

// grid of integral central characters per spec type
std::vector<SVec> grid_chars(const std::string& type) {
  std::vector<SVec> out;
  if (type == "A1") {
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= a; ++b) out.push_back({Scalar(a), Scalar(b)});
  } else if (type == "A2") {
    for (long a = -1; a <= 2; ++a)
      for (long b = -1; b <= a; ++b)
        for (long c = -1; c <= b; ++c) out.push_back({Scalar(a), Scalar(b), Scalar(c)});
  } else if (type == "B2") {
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= a; ++b) out.push_back({Scalar(a), Scalar(b)});
  }
  return out;
}

GradedHeckeAlgebraSpec grid_spec(const std::string& type) {
  return make_spec(type, "none", {{"all", Rat(2)}}, Scalar(1));
}

// ---------------- module suites ----------------

SuiteResult suite_exact_core(unsigned seed) {
  SuiteResult res{"exact-core"};
  Rng rng(seed);
  auto spec = make_spec("A2", "none", {{"all", Rat(2)}}, Scalar(1));
  const auto& d = spec.datum();

  for (int t = 0; t < 200; ++t) {
    int s = t % d.num_simples();
    Poly f = random_poly(rng, d.rank, 3, 4);
    Poly alpha = spec.simple_root_poly(s);
    QMat refl = d.reflection_on_x(d.simples[s]);
    Poly dz = demazure(f, alpha, refl);
    Poly fs = apply_weyl_to_poly(refl, f);
    res.check(alpha * dz == f - fs, "alpha * demazure(f) != f - f o s");
    bool invariant = (fs == f);
    res.check(dz.is_zero() == invariant, "demazure zero iff s-invariant");
    Poly finv = f + fs;  // manifestly s-invariant
    res.check(demazure(finv, alpha, refl).is_zero(), "demazure of invariant poly nonzero");
  }

  std::uniform_int_distribution<int> dims(1, 12), ent(-3, 3);
  for (int t = 0; t < 60; ++t) {
    int rws = dims(rng), cls = dims(rng);
    ExactMatrix m(rws, cls);
    for (auto& x : m.a) x = Scalar(Rat(ent(rng)), (t % 3 == 0) ? Rat(ent(rng)) : Rat(0));
    auto ker = matrix_kernel(m);
    res.check((int)ker.size() + m.rank() == cls, "rank-nullity fails");
    for (auto& v : ker) {
      SVec mv = m.apply(v);
      bool zero = true;
      for (auto& x : mv)
        if (!x.is_zero()) zero = false;
      res.check(zero, "kernel vector not in kernel");
    }
  }

  // serialization round-trip on random scalars
  for (int t = 0; t < 50; ++t) {
    Scalar s = random_gaussian(rng, 7, true);
    res.check(scalar_from_string(to_string(s)) == s, "scalar string round-trip");
  }
  return res;
}

SuiteResult suite_root_data(unsigned seed) {
  SuiteResult res{"root-data"};
  (void)seed;
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"}) {
    BasedRootDatum d = build_root_datum(label);
    for (int r = 0; r < d.num_roots(); ++r) {
      QMat s = d.reflection_on_x(r);
      res.check(mat_mul(s, s) == mat_identity(d.rank), "s_alpha^2 != id");
      for (int q = 0; q < d.num_roots(); ++q)
        res.check(d.root_index(mat_apply(s, d.roots[q])) >= 0, "s_alpha does not permute R");
    }
  }
  // det is a homomorphism on all pairs for |W Gamma| <= 16
  for (auto& [label, gamma] : std::vector<std::pair<std::string, std::string>>{
           {"A1", "none"}, {"A1", "flip"}, {"A2", "none"}, {"A2", "flip"}, {"B2", "none"}}) {
    auto g = enumerate_group(build_root_datum(label), gamma);
    if (g->size() > 16) continue;
    for (int a = 0; a < g->size(); ++a)
      for (int b = 0; b < g->size(); ++b)
        res.check(g->det_char[g->mult[a][b]] == g->det_char[a] * g->det_char[b],
                  "det not multiplicative");
  }
  // parameter invariance k(w alpha) = k(alpha)
  for (const char* label : {"A2", "B2", "G2"}) {
    BasedRootDatum d = build_root_datum(label);
    auto g = enumerate_group(d, "none");
    std::map<std::string, Rat> kspec;
    if (std::string(label) == "A2") kspec = {{"all", Rat(2)}};
    else kspec = {{"long", Rat(4)}, {"short", Rat(2)}};
    ParameterFunction k = ParameterFunction::by_length(d, kspec);
    bool ok = true;
    for (int e = 0; e < g->size(); ++e)
      for (int r = 0; r < d.num_roots(); ++r)
        if (k.values[g->root_perm[e][r]] != k.values[r]) ok = false;
    res.check(ok, std::string("parameter function not invariant on ") + label);
  }
  // positivity cone examples
  {
    BasedRootDatum a1 = build_root_datum("A1");
    res.check(is_positive_position(a1, {Scalar(1), Scalar(-1)}, {}), "A1 t=2 positive");
    res.check(!is_positive_position(a1, {Scalar(0), Scalar(0)}, {}), "A1 t=0 not positive");
    BasedRootDatum a2 = build_root_datum("A2");
    res.check(is_positive_position(a2, {Scalar(Rat(1, 3)), Scalar(Rat(1, 3)), Scalar(Rat(-2, 3))},
                                   {0}),
              "A2 wall point positive for P={alpha}");
  }
  return res;
}

SuiteResult suite_lie_geometry(unsigned seed) {
  SuiteResult res{"lie-geometry"};
  Rng rng(seed);

  // lemma 1.12 equivalence on random parameters
  for (int t = 0; t < 60; ++t) {
    RandomParam p = random_parameter(rng, 4, {1, 2});
    res.check(is_open(p.y, p.sigma, p.r) == lemma112_criterion(p.y, p.sigma, p.r),
              "lemma 1.12 mismatch at " + svec_str(p.sigma.eigen));
  }

  // distinguished => scalar sigma_0
  for (int n = 1; n <= 5; ++n) {
    NilpotentElement y{n, ExactMatrix(n, n)};
    for (int i = 0; i + 1 < n; ++i) y.mat.at(i, i + 1) = Scalar(1);
    res.check(is_distinguished(y), "regular nilpotent not distinguished");
    SemisimpleElement sig{n, SVec(n)};
    Scalar c = random_gaussian(rng, 2);
    for (int i = 0; i < n; ++i) sig.eigen[i] = c + Scalar(n - 1 - 2 * i);
    AdditiveParameter p{y, sig, Scalar(1)};
    ExactMatrix s0 = p.sigma0();
    Scalar val;
    res.check(s0.is_scalar_multiple_of_identity(&val), "sigma0 of distinguished y not scalar");
    if (n >= 2) {
      NilpotentElement sub{n, ExactMatrix(n, n)};
      for (int i = 0; i + 2 < n; ++i) sub.mat.at(i, i + 1) = Scalar(1);
      res.check(n == 2 ? is_distinguished(sub) == false || n != 2 : !is_distinguished(sub),
                "non-regular marked distinguished");
    }
  }

  // essentially bounded => open (small sample; the acceptance run is larger)
  for (int n = 1; n <= 4; ++n)
    for (auto& part : partitions(n))
      for (int t = 0; t < 6; ++t) {
        RandomParam p = bounded_parameter(rng, part, t % 2 == 1, 1);
        res.check(is_open(p.y, p.sigma, p.r), "bounded parameter not open");
      }

  // closure order consistency: leq is a partial order and respects orbit dims;
  // the combinatorial End formula agrees with the matrix centralizer
  {
    SemisimpleElement sig{4, {Scalar(3), Scalar(1), Scalar(1), Scalar(-1)}};
    Scalar r(1);
    SigmaChains sc = sigma_chains(sig, r);
    std::vector<std::vector<ChainMultisegment>> per_chain;
    for (auto& c : sc.chains) {
      std::vector<int> dims;
      for (auto& idx : c.indices) dims.push_back((int)idx.size());
      per_chain.push_back(enumerate_chain_multisegments(dims));
    }
    std::vector<std::vector<ChainMultisegment>> combos = {{}};
    for (auto& opts : per_chain) {
      std::vector<std::vector<ChainMultisegment>> next;
      for (auto& b : combos)
        for (auto& o : opts) {
          auto cur = b;
          cur.push_back(o);
          next.push_back(cur);
        }
      combos = next;
    }
    std::vector<RankInvariant> invs;
    std::vector<int> dims;
    int zdim = centralizer_dim_of_sigma(sig);
    for (auto& combo : combos) {
      NilpotentElement y = multisegment_representative(sig, r, combo);
      invs.push_back(rank_invariants(y, sig, r));
      int od = orbit_dimension(y, sig);
      dims.push_back(od);
      int end_formula = 0;
      for (auto& m : combo) end_formula += multisegment_end_dim(m);
      res.check(zdim - end_formula == od, "End formula disagrees with matrix centralizer");
    }
    for (size_t a = 0; a < invs.size(); ++a)
      for (size_t b = 0; b < invs.size(); ++b) {
        if (closure_leq(invs[a], invs[b]) && closure_leq(invs[b], invs[a]))
          res.check(invs[a] == invs[b], "closure_leq not antisymmetric");
        if (closure_leq(invs[a], invs[b]))
          res.check(dims[a] <= dims[b], "closure order inconsistent with orbit dims");
      }
    // open orbit rep realizes the maximum
    NilpotentElement top = open_orbit_rep(sig, r);
    res.check(is_open(top, sig, r), "open_orbit_rep not open");
    RankInvariant top_inv = rank_invariants(top, sig, r);
    for (auto& i : invs) res.check(closure_leq(i, top_inv), "open orbit not maximal");
  }

  // graded space examples
  {
    SemisimpleElement s2{2, {Scalar(1), Scalar(-1)}};
    res.check(graded_space(s2, Scalar(1)).dim() == 1, "graded space dim");
    SemisimpleElement s3{3, {Scalar(2), Scalar(0), Scalar(-2)}};
    res.check(graded_space(s3, Scalar(1)).dim() == 2, "graded space dim");
    SemisimpleElement z3{3, {Scalar(0), Scalar(0), Scalar(0)}};
    res.check(graded_space(z3, Scalar(1)).dim() == 0, "graded space dim");
    // r = 0 openness: regular nilpotent
    NilpotentElement reg{3, ExactMatrix(3, 3)};
    reg.mat.at(0, 1) = Scalar(1);
    reg.mat.at(1, 2) = Scalar(1);
    res.check(is_open(reg, z3, Scalar(0)), "regular nilpotent not open at r=0");
    NilpotentElement e12{3, ExactMatrix(3, 3)};
    e12.mat.at(0, 1) = Scalar(1);
    res.check(!is_open(e12, z3, Scalar(0)), "subregular open at r=0");
  }

  // boundedness classes
  {
    SemisimpleElement b{2, {Scalar::i(), -Scalar::i()}};
    res.check(boundedness_class(b) == Boundedness::bounded, "bounded misclassified");
    SemisimpleElement eb{2, {Scalar(1) + Scalar::i(), Scalar(1) - Scalar::i()}};
    res.check(boundedness_class(eb) == Boundedness::essentially_bounded,
              "essentially bounded misclassified");
    SemisimpleElement nb{2, {Scalar(1), Scalar(0)}};
    res.check(boundedness_class(nb) == Boundedness::neither, "neither misclassified");
  }
  return res;
}

SuiteResult suite_graded_hecke(unsigned seed) {
  SuiteResult res{"graded-hecke"};
  Rng rng(seed);

  std::vector<GradedHeckeAlgebraSpec> specs = {
      make_spec("A1", "none", {{"all", Rat(2)}}, Scalar(1)),
      make_spec("A2", "none", {{"all", Rat(2)}}, Scalar(1)),
      make_spec("B2", "none", {{"long", Rat(4)}, {"short", Rat(2)}}, Scalar(1)),
      make_spec("A2", "flip", {{"all", Rat(2)}}, Scalar(1))};

  // associativity
  for (auto& spec : specs)
    for (int t = 0; t < 12; ++t) {
      AlgebraElement a = random_element(rng, spec), b = random_element(rng, spec),
                     c = random_element(rng, spec);
      res.check(multiply(multiply(a, b, spec), c, spec) == multiply(a, multiply(b, c, spec), spec),
                "associativity fails");
    }

  // defining relations in normal form
  for (auto& spec : specs)
    for (int s = 0; s < spec.num_simples(); ++s)
      for (int t = 0; t < 6; ++t) {
        Poly f = random_poly(rng, spec.nvars(), 2, 3);
        int se = spec.group->simple_reflection(s);
        AlgebraElement lhs = multiply(AlgebraElement::group_element(se, spec.nvars()),
                                      AlgebraElement::polynomial(f), spec);
        AlgebraElement rhs = AlgebraElement::monomial(se, spec.act(se, f));
        Scalar kr = Scalar(spec.k_simple(s)) * spec.r;
        rhs.add_term(0, spec.demazure_simple(s, f).scaled(kr));
        res.check(lhs == rhs, "cross relation fails in normal form");
      }

  // N_w independent of the reduced word (all reduced words, all w in W(B2))
  {
    auto& spec = specs[2];
    const auto& G = *spec.group;
    std::function<std::vector<std::vector<int>>(int)> allwords = [&](int w) {
      std::vector<std::vector<int>> out;
      if (w == 0) return std::vector<std::vector<int>>{{}};
      for (int s = 0; s < spec.num_simples(); ++s) {
        int se = G.simple_reflection(s);
        int ws = G.mult[w][se];
        if (G.length[ws] < G.length[w])
          for (auto sub : allwords(ws)) {
            sub.push_back(s);
            out.push_back(sub);
          }
      }
      return out;
    };
    for (int w = 0; w < G.size(); ++w) {
      AlgebraElement ref = AlgebraElement::group_element(w, spec.nvars());
      for (auto& word : allwords(w)) {
        AlgebraElement prod = AlgebraElement::group_element(0, spec.nvars());
        for (int s : word)
          prod = multiply(prod,
                          AlgebraElement::group_element(G.simple_reflection(s), spec.nvars()),
                          spec);
        res.check(prod == ref, "N_w depends on the reduced word");
      }
    }
  }

  // N_s N_s = 1 and the A1 example N_s alpha N_s = -alpha + 2 k r N_s
  {
    auto& spec = specs[0];
    int se = spec.group->simple_reflection(0);
    AlgebraElement ns = AlgebraElement::group_element(se, spec.nvars());
    res.check(multiply(ns, ns, spec) == AlgebraElement::group_element(0, spec.nvars()),
              "N_s^2 != 1");
    Poly alpha = spec.simple_root_poly(0);
    AlgebraElement lhs =
        multiply(multiply(ns, AlgebraElement::polynomial(alpha), spec), ns, spec);
    AlgebraElement rhs = AlgebraElement::polynomial(-alpha);
    rhs.add_term(se, Poly::constant(spec.nvars(), Scalar(4)));
    res.check(lhs == rhs, "N_s alpha N_s != -alpha + 2 k r N_s");
  }

  // sgn: involution and algebra map between the +-r specializations
  for (auto& spec : specs) {
    GradedHeckeAlgebraSpec neg = spec.with_r(-spec.r);
    for (int t = 0; t < 8; ++t) {
      AlgebraElement a = random_element(rng, spec), b = random_element(rng, spec);
      res.check(sgn_map(sgn_map(a, spec), neg) == a, "sgn not involutive");
      res.check(sgn_map(multiply(a, b, spec), spec) ==
                    multiply(sgn_map(a, spec), sgn_map(b, spec), neg),
                "sgn not a homomorphism onto the -r specialization");
    }
  }

  // Theorem 4.7 normalization
  {
    auto a2k6 = make_spec("A2", "none", {{"all", Rat(6)}}, Scalar(1));
    auto [norm, scale] = normalize_equal_parameters(a2k6);
    res.check(norm.k == std::vector<Rat>(a2k6.datum().num_roots(), Rat(2)), "A2 k=6 -> k=2");
    for (auto& f : scale.factor) res.check(f == Rat(1, 3), "A2 k=6 scaling factor 1/3");

    auto b2 = make_spec("B2", "none", {{"long", Rat(4)}, {"short", Rat(2)}}, Scalar(1));
    auto [nb2, sb2] = normalize_equal_parameters(b2);
    res.check(nb2.k == std::vector<Rat>(b2.datum().num_roots(), Rat(2)), "B2 -> k=2");
    for (int r = 0; r < b2.datum().num_roots(); ++r) {
      bool is_long = (b2.k[r] == 4);
      res.check(sb2.factor[r] == (is_long ? Rat(1, 2) : Rat(1)), "B2 scaling factors");
    }
    // identity scaling when k = 2 already
    auto a2k2 = make_spec("A2", "none", {{"all", Rat(2)}}, Scalar(1));
    auto [na, sa] = normalize_equal_parameters(a2k2);
    for (auto& f : sa.factor) res.check(f == 1, "identity scaling for k=2");
    res.check(na.k == a2k2.k, "k=2 spec changed by normalization");

    // inadmissible ratio rejected
    bool threw = false;
    try {
      normalize_equal_parameters(
          make_spec("B2", "none", {{"long", Rat(6)}, {"short", Rat(2)}}, Scalar(1)));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    res.check(threw, "inadmissible ratio accepted");

    // module transfer: a module over the original spec still verifies over
    // the normalized spec
    FiniteModule mod = induce_character(b2, {Scalar(2), Scalar(1)});
    try {
      FiniteModule moved = make_module(nb2, mod.coord, mod.simple_gen, mod.gamma_gen);
      res.check(moved.dim == mod.dim, "module transfer dimension");
    } catch (const std::exception& e) {
      res.check(false, std::string("module transfer failed: ") + e.what());
    }
  }
  return res;
}

SuiteResult suite_module_engine(unsigned seed) {
  SuiteResult res{"module-engine"};
  Rng rng(seed);
  auto a1 = grid_spec("A1");
  auto a2 = grid_spec("A2");

  // A1 oracle block
  {
    FiniteModule E = induce_character(a1, {Scalar(1), Scalar(-1)});
    ExactMatrix am = E.act_linear(a1.datum().simple_root(0));
    ExactMatrix expect(2, 2);
    expect.at(0, 0) = Scalar(2);
    expect.at(0, 1) = Scalar(4);
    expect.at(1, 1) = Scalar(-2);
    res.check(am == expect, "A1 alpha action oracle");
    auto wd = weights_and_central_character(E);
    res.check(wd.has_central_character, "A1 module lost its central character");
    res.check(det_multiplicity(E) == 1, "det multiplicity of induced module");
    SocleData sd = socle_and_factors(E);
    res.check(sd.basis.cols == 1, "A1 socle dim");
    res.check(sd.factors.total() == 2, "A1 factor count");
    FiniteModule irr = induce_character(a1, {Scalar(0), Scalar(0)});
    res.check(is_irreducible(irr), "A1 c=0 module not irreducible");
  }

  // weights example: direct sum has no central character
  {
    FiniteModule e2 = induce_character(a1, {Scalar(1), Scalar(-1)});
    FiniteModule e4 = induce_character(a1, {Scalar(2), Scalar(-2)});
    std::vector<ExactMatrix> coord, sg, gg;
    auto blockdiag = [&](const ExactMatrix& x, const ExactMatrix& y2) {
      ExactMatrix m(4, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          m.at(i, j) = x.at(i, j);
          m.at(2 + i, 2 + j) = y2.at(i, j);
        }
      return m;
    };
    for (int i = 0; i < 2; ++i) coord.push_back(blockdiag(e2.coord[i], e4.coord[i]));
    sg.push_back(blockdiag(e2.simple_gen[0], e4.simple_gen[0]));
    gg.push_back(ExactMatrix::identity(4));
    FiniteModule sum = make_module(a1, coord, sg, gg);
    res.check(!weights_and_central_character(sum).has_central_character,
              "direct sum reported a central character");
    SocleData sd = socle_and_factors(sum);
    res.check(sd.basis.cols == 2 && sd.factors.total() == 4,
              "direct-sum socle/factor bookkeeping");
  }

  // induce_parabolic: transitivity, P=empty matches induce_character, dims
  {
    ParabolicData p0{{0}, {0}};
    GradedHeckeAlgebraSpec sub = parabolic_spec(a2, p0);
    FiniteModule st = character_module(sub, {Scalar(-1), Scalar(1), Scalar(0)}, -1);
    FiniteModule ind = induce_parabolic(a2, p0, st);
    res.check(ind.dim == 3, "A2 parabolic induction dimension");

    ParabolicData pe{{}, {0}};
    GradedHeckeAlgebraSpec esub = parabolic_spec(a2, pe);
    SVec mu = {Scalar(1), Scalar(0), Scalar(-1)};
    FiniteModule ch = character_module(esub, mu, -1);
    FiniteModule ind2 = induce_parabolic(a2, pe, ch);
    FiniteModule direct = induce_character(a2, mu);
    res.check(isomorphic(ind2, direct), "P=empty induction differs from induce_character");

    ParabolicData pall{{0, 1}, {0}};
    GradedHeckeAlgebraSpec allsub = parabolic_spec(a2, pall);
    FiniteModule full = induce_character(allsub, mu);
    FiniteModule same = induce_parabolic(a2, pall, full);
    res.check(same.dim == full.dim && isomorphic(same, full), "P=Delta induction not identity");
  }

  // Prop 2.2.a small sample (the acceptance run covers more)
  for (auto type : {std::string("A2"), std::string("B2")}) {
    GradedHeckeAlgebraSpec spec = grid_spec(type);
    int ns = spec.num_simples();
    for (int mask = 0; mask < (1 << ns); ++mask) {
      std::vector<int> P;
      for (int k = 0; k < ns; ++k)
        if (mask & (1 << k)) P.push_back(k);
      ParabolicData pd{P, {0}};
      GradedHeckeAlgebraSpec sub = parabolic_spec(spec, pd);
      for (int t = 0; t < 3; ++t) {
        SVec mu;
        for (int i = 0; i < spec.nvars(); ++i) mu.push_back(Scalar(random_rat(rng, 2)));
        FiniteModule m = induce_character(sub, mu);
        FiniteModule ind = induce_parabolic(spec, pd, m);
        res.check(det_multiplicity(ind) == det_multiplicity(m),
                  "det multiplicity not preserved by induction");
      }
    }
  }

  // hom_space examples
  {
    FiniteModule E = induce_character(a1, {Scalar(1), Scalar(-1)});
    GradedHeckeAlgebraSpec a1full = parabolic_spec(a1, ParabolicData{{0}, {0}});
    FiniteModule det_line = character_module(a1full, {Scalar(-1), Scalar(1)}, -1);
    // character_module builds over the parabolic spec; rebuild over a1
    FiniteModule det_line_a1 = make_module(a1, det_line.coord, det_line.simple_gen,
                                           det_line.gamma_gen);
    res.check(hom_space(det_line_a1, E).first == 1, "det line does not embed");
    res.check(hom_space(E, det_line_a1).first == 0, "det line is a quotient");
    FiniteModule irr = induce_character(a1, {Scalar(0), Scalar(0)});
    res.check(hom_space(irr, irr).first == 1, "Schur fails for irreducible");
  }

  // sgn pullback examples
  {
    FiniteModule E = induce_character(a1, {Scalar(1), Scalar(-1)});
    FiniteModule twice = sgn_pullback(sgn_pullback(E));
    res.check(twice.simple_gen[0] == E.simple_gen[0] && twice.spec.r == E.spec.r,
              "sgn pullback not involutive");
    res.check(det_multiplicity(sgn_pullback(E)) == trivial_multiplicity(E),
              "sgn pullback det/trivial exchange");
  }

  // Theorem 1.10 consistency across A1/A2 grids, including bounded
  // imaginary central characters
  {
    std::vector<std::pair<std::string, SVec>> cases = {
        {"A1", {Scalar(1), Scalar(-1)}},
        {"A1", {Scalar(2), Scalar(0)}},
        {"A1", {Scalar(Rat(1), Rat(1)), Scalar(Rat(-1), Rat(1))}},
        {"A2", {Scalar(2), Scalar(0), Scalar(-2)}},
        {"A2", {Scalar(Rat(2), Rat(1)), Scalar(Rat(0), Rat(1)), Scalar(Rat(-2), Rat(1))}},
        {"A2", {Scalar(1), Scalar(1), Scalar(-2)}}};
    for (auto& [type, sig_eigen] : cases) {
      GradedHeckeAlgebraSpec spec = grid_spec(type);
      SemisimpleElement sigma{(int)sig_eigen.size(), sig_eigen};
      Scalar r(1);
      SigmaChains chains = sigma_chains(sigma, r);
      std::vector<std::vector<ChainMultisegment>> per_chain;
      for (auto& c : chains.chains) {
        std::vector<int> dims;
        for (auto& idx : c.indices) dims.push_back((int)idx.size());
        per_chain.push_back(enumerate_chain_multisegments(dims));
      }
      std::vector<std::vector<ChainMultisegment>> combos = {{}};
      for (auto& opts : per_chain) {
        std::vector<std::vector<ChainMultisegment>> next;
        for (auto& b : combos)
          for (auto& o : opts) {
            auto cur = b;
            cur.push_back(o);
            next.push_back(cur);
          }
        combos = next;
      }
      for (auto& combo : combos) {
        FiniteModule std_mod = standard_module_from_multisegments(spec, sigma, r, combo);
        NilpotentElement y = multisegment_representative(sigma, r, combo);
        AdditiveParameter param{y, sigma, r};
        Boundedness b = boundedness_class(param.sigma0());
        res.check(is_tempered(std_mod) == (b == Boundedness::bounded),
                  "tempered <=> bounded fails at " + svec_str(sig_eigen));
      }
    }
  }

  // central character values on induced modules: the symmetric function
  // sum x_i^2 acts by its value at sigma0
  {
    SVec mu = {Scalar(2), Scalar(0), Scalar(-1)};
    FiniteModule E = induce_character(a2, mu);
    Poly p2(3);
    for (int i = 0; i < 3; ++i) p2 = p2 + Poly::variable(3, i) * Poly::variable(3, i);
    auto val = central_evaluate(p2, E);
    res.check(val.has_value() && *val == Scalar(5), "central evaluation value");
    bool threw = false;
    try {
      central_evaluate(Poly::variable(3, 0), E);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    res.check(threw, "non-invariant polynomial accepted");
  }

  // langlands standard: unique irreducible quotient (r > 0)
  {
    ParabolicData p0{{0}, {0}};
    GradedHeckeAlgebraSpec sub = parabolic_spec(a2, p0);
    FiniteModule st = character_module(sub, {Scalar(-1), Scalar(1), Scalar(0)}, -1);
    SVec t = {Scalar(1), Scalar(1), Scalar(-2)};
    FiniteModule L = langlands_standard(a2, LanglandsDatum{p0, st, t});
    res.check(L.dim == 3, "Langlands standard dimension");
    FiniteModule h = head(L);
    res.check(is_irreducible(h), "Langlands head not irreducible");
    bool threw = false;
    try {
      SVec bad = {Scalar(-1), Scalar(-1), Scalar(2)};
      langlands_standard(a2, LanglandsDatum{p0, st, bad});
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    res.check(threw, "positivity violation not caught");
  }
  return res;
}

SuiteResult suite_parameter_bridge(unsigned seed) {
  SuiteResult res{"parameter-bridge"};
  Rng rng(seed);

  // additive/multiplicative openness transfer (larger run in acceptance)
  for (int t = 0; t < 60; ++t) {
    RandomParam p = random_parameter(rng, 4, {1, 2});
    AdditiveParameter ap{p.y, p.sigma, p.r};
    res.check(is_open(p.y, p.sigma, p.r) == mult_is_open(to_multiplicative(ap)),
              "additive/multiplicative openness mismatch");
  }

  // to_multiplicative examples
  {
    AdditiveParameter p;
    p.sigma = {2, {Scalar(1), Scalar(-1)}};
    p.y = {2, ExactMatrix(2, 2)};
    p.y.mat.at(0, 1) = Scalar(1);
    p.r = Scalar(1);
    MultiplicativeParameter m = to_multiplicative(p);
    res.check(m.s_exp == p.sigma.eigen && m.q_exp == Scalar(2), "transcription");
    res.check(mult_is_open(m), "gl2 image should be open");
    AdditiveParameter z = p;
    z.y.mat = ExactMatrix(2, 2);
    res.check(!mult_is_open(to_multiplicative(z)), "zero orbit dense in 1-dim space");
  }

  // affine reduction
  {
    BasedRootDatum d = build_root_datum("B2");
    auto g = enumerate_group(d, "none");
    AffineReductionInput in;
    in.datum = d;
    in.group = g;
    in.lambda = ParameterFunction::by_length(d, {{"long", Rat(2)}, {"short", Rat(2)}});
    in.lambda_star = in.lambda;
    // short coroots lie in 2Y, so lambda* may differ there
    for (int r = 0; r < d.num_roots(); ++r) {
      bool in2y = true;
      for (auto& c : d.coroots[r])
        if (Rat(c / 2).get_den() != 1) in2y = false;
      if (in2y) in.lambda_star.values[r] = Rat(0);
    }
    in.u_basis_values = {Scalar(1), Scalar(1)};
    AffineReductionOutput out = reduce_affine(in);
    res.check((int)out.r_u.size() == d.num_roots(), "u=1 must keep all roots");
    for (auto& [r, k] : out.k_u) {
      bool short_root = (dot(d.roots[r], d.roots[r]) == 1);
      res.check(k == (short_root ? Rat(1) : Rat(2)), "k_u at u=1 is (lambda+lambda*)/2");
    }

    AffineReductionInput in2 = in;
    in2.u_basis_values = {Scalar(1), Scalar(-1)};
    AffineReductionOutput out2 = reduce_affine(in2);
    // alpha(u) = -1 with lambda = 2, lambda* = 0 gives k = 1
    for (auto& [r, k] : out2.k_u) {
      Scalar au = in2.root_value(r);
      bool short_root = (dot(d.roots[r], d.roots[r]) == 1);
      if (short_root && au == Scalar(-1)) res.check(k == Rat(1), "eq k_u substitution -1");
    }
    // R_u reflection-closed and k_u invariant under (W Gamma)_u
    for (auto& [out_set, input] :
         std::vector<std::pair<AffineReductionOutput*, AffineReductionInput*>>{{&out, &in},
                                                                               {&out2, &in2}}) {
      for (int r : out_set->r_u) {
        QMat s = d.reflection_on_x(r);
        for (int q : out_set->r_u) {
          int img = d.root_index(mat_apply(s, d.roots[q]));
          bool in_ru = std::find(out_set->r_u.begin(), out_set->r_u.end(), img) !=
                       out_set->r_u.end();
          res.check(in_ru, "R_u not reflection-closed");
        }
      }
      (void)input;
    }
  }

  // exp_u round-trip
  for (int t = 0; t < 50; ++t) {
    SVec sig;
    for (int i = 0; i < 3; ++i) sig.push_back(random_gaussian(rng, 4, true));
    ExpuWeight w = expu_transfer(sig, Scalar(1), {Scalar(1), Scalar(1), Scalar(1)});
    res.check(expu_log(w) == sig, "exp_u log round-trip");
  }

  // Steinberg character
  {
    BasedRootDatum d = build_root_datum("B2");
    auto g = enumerate_group(d, "none");
    ParameterFunction lam = ParameterFunction::constant(d, Rat(2));
    SteinbergCharacter st = steinberg_char(*g, lam, Scalar(1));
    res.check(st.quadratic_relation_ok, "Steinberg quadratic relation");
    for (int e = 0; e < g->size(); ++e)
      res.check(st.values[e] == g->det_char[e], "St(T_w) != det(w)");
    for (int a = 0; a < g->size(); ++a)
      for (int b = 0; b < g->size(); ++b)
        res.check(st.values[g->mult[a][b]] == st.values[a] * st.values[b],
                  "St not multiplicative");
  }
  return res;
}

}  // namespace

std::vector<std::string> module_suite_names() {
  return {"exact-core", "root-data",     "lie-geometry",
          "graded-hecke", "module-engine", "parameter-bridge"};
}

SuiteResult run_module_suite(const std::string& name, unsigned seed) {
  if (name == "exact-core") return suite_exact_core(seed);
  if (name == "root-data") return suite_root_data(seed);
  if (name == "lie-geometry") return suite_lie_geometry(seed);
  if (name == "graded-hecke") return suite_graded_hecke(seed);
  if (name == "module-engine") return suite_module_engine(seed);
  if (name == "parameter-bridge") return suite_parameter_bridge(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

// ---------------- acceptance criteria ----------------

namespace {

SuiteResult ac1_unique_open_orbit(unsigned) {
  SuiteResult res{"unique open orbit"};
  // all integer spectra in [-4,4]^n up to reordering, n <= 5, r = 1
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int k, int lo) {
      if (k == n) {
        multisets.push_back(cur);
        return;
      }
      for (int v = lo; v <= 4; ++v) {
        cur.push_back(v);
        rec(k + 1, v);
        cur.pop_back();
      }
    };
    rec(0, -4);
    for (auto& ms : multisets) {
      SemisimpleElement sigma{n, {}};
      for (int v : ms) sigma.eigen.push_back(Scalar(v));
      Scalar r(1);
      SigmaChains sc = sigma_chains(sigma, r);
      int zdim = centralizer_dim_of_sigma(sigma);
      int space_dim = 0;
      std::vector<std::vector<ChainMultisegment>> per_chain;
      for (auto& c : sc.chains) {
        std::vector<int> dims;
        for (auto& idx : c.indices) dims.push_back((int)idx.size());
        for (size_t j = 0; j + 1 < dims.size(); ++j) space_dim += dims[j] * dims[j + 1];
        per_chain.push_back(enumerate_chain_multisegments(dims));
      }
      // orbit dims via the End formula over all combinations
      long total = 1, open_count = 0;
      std::vector<size_t> idx(per_chain.size(), 0);
      for (auto& pc : per_chain) total *= (long)pc.size();
      for (long it = 0; it < total; ++it) {
        long rem = it;
        int end_dim = 0;
        for (size_t c = 0; c < per_chain.size(); ++c) {
          size_t pick = rem % per_chain[c].size();
          rem /= per_chain[c].size();
          end_dim += multisegment_end_dim(per_chain[c][pick]);
        }
        if (zdim - end_dim == space_dim) ++open_count;
      }
      res.check(open_count == 1, "open orbit count != 1 at " + svec_str(sigma.eigen));
    }
  }
  return res;
}

SuiteResult ac2_lemma112(unsigned seed) {
  SuiteResult res{"Lemma 1.12 equivalence"};
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    RandomParam p = random_parameter(rng, 5, {1, 2});
    res.check(is_open(p.y, p.sigma, p.r) == lemma112_criterion(p.y, p.sigma, p.r),
              "mismatch at " + svec_str(p.sigma.eigen));
  }
  return res;
}

SuiteResult ac3_bounded_open(unsigned seed) {
  SuiteResult res{"essentially bounded => open"};
  Rng rng(seed);
  for (int n = 1; n <= 4; ++n)
    for (auto& part : partitions(n))
      for (int t = 0; t < 50; ++t) {
        RandomParam p = bounded_parameter(rng, part, t % 2 == 1, t % 3 == 0 ? 2 : 1);
        bool open = is_open(p.y, p.sigma, p.r);
        AdditiveParameter ap{p.y, p.sigma, p.r};
        bool mopen = mult_is_open(to_multiplicative(ap));
        res.check(open && mopen, "bounded parameter not open, type " + svec_str(p.sigma.eigen));
      }
  return res;
}

SuiteResult ac4_exp_transfer(unsigned seed) {
  SuiteResult res{"additive/multiplicative openness agrees"};
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    RandomParam p = random_parameter(rng, 4, {1, 2});
    AdditiveParameter ap{p.y, p.sigma, p.r};
    res.check(is_open(p.y, p.sigma, p.r) == mult_is_open(to_multiplicative(ap)),
              "mismatch at " + svec_str(p.sigma.eigen));
  }
  return res;
}

SuiteResult ac5_a1_oracle(unsigned) {
  SuiteResult res{"A1 reducibility oracle"};
  auto a1 = grid_spec("A1");

  // brute-force oracle, fixed before the engine existed: alpha acts by
  // [[2,4],[0,-2]] and N_s by [[0,1],[1,0]] on the induced module at
  // alpha(sigma0) = 2; submodule lines found by direct search
  ExactMatrix alpha_oracle(2, 2), ns_oracle(2, 2);
  alpha_oracle.at(0, 0) = Scalar(2);
  alpha_oracle.at(0, 1) = Scalar(4);
  alpha_oracle.at(1, 1) = Scalar(-2);
  ns_oracle.at(0, 1) = Scalar(1);
  ns_oracle.at(1, 0) = Scalar(1);

  FiniteModule E = induce_character(a1, {Scalar(1), Scalar(-1)});
  res.check(E.act_linear(a1.datum().simple_root(0)) == alpha_oracle, "alpha matrix");
  res.check(E.simple_gen[0] == ns_oracle, "N_s matrix");

  // invariant lines of the oracle pair: eigenvectors of alpha stable under N_s
  std::vector<SVec> lines;
  for (auto& [val, mult] : gaussian_roots(min_poly(alpha_oracle)).roots) {
    ExactMatrix shifted = alpha_oracle;
    shifted.at(0, 0) -= val;
    shifted.at(1, 1) -= val;
    for (auto& v : matrix_kernel(shifted)) {
      SVec nv = ns_oracle.apply(v);
      // stable iff nv parallel to v
      Scalar det = v[0] * nv[1] - v[1] * nv[0];
      if (det.is_zero()) lines.push_back(v);
    }
    (void)mult;
  }
  res.check(lines.size() == 1, "oracle invariant line count");
  if (lines.size() == 1) {
    SVec nv = ns_oracle.apply(lines[0]);
    res.check(nv[0] == -lines[0][0] && nv[1] == -lines[0][1], "N_s acts by -1 on the line");
  }
  SocleData sd = socle_and_factors(E);
  res.check(sd.basis.cols == 1, "socle dimension 1");
  FiniteModule soc = submodule(E, sd.basis);
  res.check(soc.simple_gen[0].at(0, 0) == Scalar(-1), "socle N_s eigenvalue -1 (det)");

  FiniteModule irr = induce_character(a1, {Scalar(0), Scalar(0)});
  res.check(is_irreducible(irr), "module at alpha(sigma0)=0 not irreducible");
  return res;
}

struct GridCache {
  GradedHeckeAlgebraSpec spec;
  std::vector<std::pair<SVec, std::vector<StandardDatum>>> blocks;
};

GridCache build_grid(const std::string& type) {
  GridCache g{grid_spec(type), {}};
  for (auto& sig : grid_chars(type))
    g.blocks.emplace_back(sig, enumerate_standard_modules(g.spec, sig));
  return g;
}

SuiteResult ac6_generic_submodule(unsigned) {
  SuiteResult res{"generic factor embeds (Cor 2.7 analog)"};
  for (auto type : {std::string("A1"), std::string("A2"), std::string("B2")}) {
    GridCache grid = build_grid(type);
    for (auto& [sig, standards] : grid.blocks)
      for (auto& sd : standards) {
        Factors f = composition_factors(sd.module);
        std::vector<int> generic;
        for (size_t c = 0; c < f.classes.size(); ++c)
          if (det_multiplicity(f.classes[c]) >= 1) generic.push_back((int)c);
        if (generic.size() > 1)
          res.check(false, type + " " + svec_str(sig) + ": several generic factors");
        else if (generic.size() == 1)
          res.check(hom_space(f.classes[generic[0]], sd.module).first >= 1,
                    type + " " + svec_str(sig) + ": generic factor does not embed");
        else
          res.check(true, "");
      }
  }
  return res;
}

SuiteResult ac7_tempered_submodule(unsigned) {
  SuiteResult res{"tempered factors embed (Thm 1.11 analog)"};
  for (auto type : {std::string("A1"), std::string("A2"), std::string("B2")}) {
    GridCache grid = build_grid(type);
    for (auto& [sig, standards] : grid.blocks)
      for (auto& sd : standards) {
        Factors f = composition_factors(sd.module);
        for (auto& cls : f.classes) {
          Temperedness tc = temperedness_class(cls);
          if (tc == Temperedness::neither) {
            res.check(true, "");
            continue;
          }
          res.check(hom_space(cls, sd.module).first >= 1,
                    type + " " + svec_str(sig) + ": " + to_string(tc) +
                        " factor does not embed");
        }
      }
  }
  return res;
}

SuiteResult ac8_unique_generic(unsigned) {
  SuiteResult res{"unique generic irreducible per central character"};
  for (auto type : {std::string("A1"), std::string("A2"), std::string("B2")}) {
    GradedHeckeAlgebraSpec spec = grid_spec(type);
    for (auto& sig : grid_chars(type)) {
      FiniteModule big = induce_character(spec, sig);
      Factors f = composition_factors(big);
      std::vector<int> generic;
      for (size_t c = 0; c < f.classes.size(); ++c)
        if (det_multiplicity(f.classes[c]) >= 1) generic.push_back((int)c);
      res.check(generic.size() == 1,
                type + " " + svec_str(sig) + ": generic class count = " +
                    std::to_string(generic.size()));
      if (type != "B2" && generic.size() == 1) {
        // type A: the generic factor is the open-orbit standard module
        SemisimpleElement sigma{(int)sig.size(), sig};
        Scalar r(1);
        GradedSpace gs = graded_space(sigma, r);
        FiniteModule open_std =
            gs.dim() == 0
                ? big
                : standard_module_from_multisegments(spec, sigma, r,
                                                     generic_multisegs(sigma_chains(sigma, r)));
        if (gs.dim() == 0) {
          // empty graded space: the induced module itself must be irreducible
          res.check(f.total() == 1, type + " " + svec_str(sig) + ": zero block not irreducible");
        } else {
          res.check(is_irreducible(open_std),
                    type + " " + svec_str(sig) + ": open standard module not irreducible");
          res.check(isomorphic(f.classes[generic[0]], open_std),
                    type + " " + svec_str(sig) + ": generic factor is not the open orbit");
        }
      }
    }
  }
  return res;
}

SuiteResult ac9_det_preservation(unsigned seed) {
  SuiteResult res{"det multiplicity preserved by induction"};
  Rng rng(seed);
  for (auto type : {std::string("A2"), std::string("B2")}) {
    GradedHeckeAlgebraSpec spec = grid_spec(type);
    int ns = spec.num_simples();
    for (int mask = 0; mask < (1 << ns); ++mask) {
      std::vector<int> P;
      for (int k = 0; k < ns; ++k)
        if (mask & (1 << k)) P.push_back(k);
      ParabolicData pd{P, {0}};
      GradedHeckeAlgebraSpec sub = parabolic_spec(spec, pd);
      for (int t = 0; t < 20; ++t) {
        SVec mu;
        for (int i = 0; i < spec.nvars(); ++i) mu.push_back(random_gaussian(rng, 2, true));
        FiniteModule m = induce_character(sub, mu);
        FiniteModule ind = induce_parabolic(spec, pd, m);
        res.check(det_multiplicity(ind) == det_multiplicity(m),
                  type + ": det multiplicity changed under induction");
      }
    }
  }
  return res;
}

SuiteResult ac10_hom_closure(unsigned) {
  SuiteResult res{"Hom between standard modules respects closure"};
  std::vector<std::pair<int, SVec>> blocks = {
      {2, {Scalar(1), Scalar(-1)}},
      {2, {Scalar(0), Scalar(0)}},
      {2, {Scalar(2), Scalar(0)}},
      {3, {Scalar(2), Scalar(0), Scalar(-2)}},
      {3, {Scalar(1), Scalar(1), Scalar(-1)}},
      {3, {Scalar(2), Scalar(0), Scalar(0)}},
      {4, {Scalar(3), Scalar(1), Scalar(-1), Scalar(-3)}},
      {4, {Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)}},
      {4, {Scalar(2), Scalar(0), Scalar(0), Scalar(-2)}}};
  for (auto& [n, sig] : blocks) {
    BlockReport rep = block_report(n, sig);
    res.check(rep.hom_closure != Verdict::fail,
              "closure check failed in block " + svec_str(sig));
    res.check(rep.open_embeds != Verdict::fail,
              "open-orbit embedding failed in block " + svec_str(sig));
    res.check(rep.generic_submodule != Verdict::fail,
              "generic submodule check failed in block " + svec_str(sig));
  }
  return res;
}

SuiteResult ac11_engine_soundness(unsigned seed) {
  SuiteResult res{"engine soundness"};
  for (auto& name : {"graded-hecke"}) {
    SuiteResult sub = run_module_suite(name, seed);
    res.checks += sub.checks;
    for (auto& f : sub.failures) res.failures.push_back(f);
  }
  return res;
}

}  // namespace

int acceptance_count() { return 11; }

std::string acceptance_title(int id) {
  switch (id) {
    case 1: return "unique open orbit in g_N^{sigma,r}";
    case 2: return "openness criterion equivalence (200 random parameters)";
    case 3: return "essentially bounded parameters are open";
    case 4: return "additive and multiplicative openness agree";
    case 5: return "A1 reducibility oracle";
    case 6: return "unique generic factor of a standard module embeds";
    case 7: return "tempered/essentially-discrete factors embed";
    case 8: return "exactly one generic irreducible per central character";
    case 9: return "det multiplicity preserved by parabolic induction";
    case 10: return "nonzero Hom between standard modules respects closure order";
    case 11: return "rewriting engine soundness";
    default: return "?";
  }
}

SuiteResult run_acceptance(int id, unsigned seed) {
  switch (id) {
    case 1: return ac1_unique_open_orbit(seed);
    case 2: return ac2_lemma112(seed);
    case 3: return ac3_bounded_open(seed);
    case 4: return ac4_exp_transfer(seed);
    case 5: return ac5_a1_oracle(seed);
    case 6: return ac6_generic_submodule(seed);
    case 7: return ac7_tempered_submodule(seed);
    case 8: return ac8_unique_generic(seed);
    case 9: return ac9_det_preservation(seed);
    case 10: return ac10_hom_closure(seed);
    case 11: return ac11_engine_soundness(seed);
    default: throw std::invalid_argument("unknown acceptance id");
  }
}

}  // namespace heckelab

#include "heckelab/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "heckelab/guards.hpp"

namespace heckelab {

namespace {

struct PlacedSegment {
  Scalar center_re;  // real part of the segment center
  SVec values;       // eigenvalues along the segment, increasing
};

// canonical ordering: decreasing real center, longer segments first
bool placed_less(const PlacedSegment& a, const PlacedSegment& b) {
  int c = scalar_cmp(a.center_re, b.center_re);
  if (c != 0) return c > 0;
  if (a.values.size() != b.values.size()) return a.values.size() > b.values.size();
  for (size_t i = 0; i < a.values.size(); ++i) {
    int d = scalar_cmp(a.values[i], b.values[i]);
    if (d != 0) return d < 0;
  }
  return false;
}

}  // namespace

FiniteModule standard_module_from_multisegments(const GradedHeckeAlgebraSpec& spec,
                                                const SemisimpleElement& sigma, const Scalar& r,
                                                const std::vector<ChainMultisegment>& msegs) {
  SigmaChains chains = sigma_chains(sigma, r);
  if (msegs.size() != chains.chains.size())
    throw std::invalid_argument("standard module: chain count mismatch");

  std::vector<PlacedSegment> segs;
  for (size_t c = 0; c < msegs.size(); ++c)
    for (auto& [a, b] : msegs[c]) {
      PlacedSegment ps;
      Scalar sum(0);
      for (int p = a; p <= b; ++p) {
        ps.values.push_back(chains.chains[c].values[p]);
        sum += chains.chains[c].values[p];
      }
      Scalar center = sum / Scalar((long)(b - a + 1));
      ps.center_re = Scalar(center.re);
      segs.push_back(std::move(ps));
    }
  std::sort(segs.begin(), segs.end(), placed_less);

  int n = sigma.n;
  // coordinates laid out segment after segment; groups share a real center
  SVec lambda;
  SVec t;
  std::vector<int> p_group, p_inner;  // simple indices of the big datum
  int pos = 0;
  for (size_t s = 0; s < segs.size(); ++s) {
    for (size_t v = 0; v < segs[s].values.size(); ++v) {
      lambda.push_back(segs[s].values[v]);
      t.push_back(segs[s].center_re);
      if (v + 1 < segs[s].values.size()) p_inner.push_back(pos);
      ++pos;
    }
    if (s + 1 < segs.size() && segs[s].center_re == segs[s + 1].center_re)
      p_group.push_back(pos - 1);  // crossing simple joins the group
  }
  if (pos != n) throw std::logic_error("standard module: coordinate layout mismatch");
  p_group.insert(p_group.end(), p_inner.begin(), p_inner.end());
  std::sort(p_group.begin(), p_group.end());

  ParabolicData group_p{p_group, {0}};
  GradedHeckeAlgebraSpec group_spec = parabolic_spec(spec, group_p);

  // Steinberg character of the inner parabolic of the group algebra,
  // induced up to the group algebra and then twisted by t
  SVec mu(n);
  for (int i = 0; i < n; ++i) mu[i] = lambda[i] - t[i];
  std::vector<int> inner_rel;
  for (size_t k = 0; k < group_p.p_simples.size(); ++k)
    if (std::find(p_inner.begin(), p_inner.end(), group_p.p_simples[k]) != p_inner.end())
      inner_rel.push_back((int)k);
  ParabolicData inner_rel_p{inner_rel, {0}};
  GradedHeckeAlgebraSpec inner_spec = parabolic_spec(group_spec, inner_rel_p);
  FiniteModule st = character_module(inner_spec, mu, -1);
  FiniteModule tau = induce_parabolic(group_spec, inner_rel_p, st);
  if (!is_tempered(tau))
    throw std::logic_error("standard module: inducing module failed the tempered check");

  LanglandsDatum datum{group_p, std::move(tau), t};
  return langlands_standard(spec, datum);
}

std::string multisegment_label(const SigmaChains& chains,
                               const std::vector<ChainMultisegment>& msegs) {
  std::string out;
  bool first = true;
  for (size_t c = 0; c < msegs.size(); ++c)
    for (auto& [a, b] : msegs[c]) {
      if (!first) out += " ";
      first = false;
      out += "[" + to_string(chains.chains[c].values[a]);
      if (b > a) out += ".." + to_string(chains.chains[c].values[b]);
      out += "]";
    }
  if (out.empty()) out = "[]";
  return out;
}

std::vector<StandardDatum> enumerate_standard_modules(const GradedHeckeAlgebraSpec& spec,
                                                      const SVec& sigma0) {
  const auto& G = *spec.group;
  const auto& d = spec.datum();
  int ns = d.num_simples();

  // orbit of sigma0
  std::vector<SVec> orbit;
  for (int e = 0; e < G.size(); ++e) {
    SVec img = G.apply_to_point(e, sigma0);
    bool seen = false;
    for (auto& o : orbit)
      if (o == img) seen = true;
    if (!seen) orbit.push_back(img);
  }

  std::vector<StandardDatum> out;
  for (int mask = 0; mask < (1 << ns); ++mask) {
    std::vector<int> P;
    for (int k = 0; k < ns; ++k)
      if (mask & (1 << k)) P.push_back(k);
    ParabolicData pd{P, {0}};
    GradedHeckeAlgebraSpec subspec = parabolic_spec(spec, pd);

    std::vector<std::pair<SVec, std::vector<FiniteModule>>> seen_t;
    for (auto& lambda : orbit) {
      // lambda = sum_{b in P} c_b alpha_b^vee + t with alpha(t) = 0 on P
      int np = (int)P.size();
      SVec t = lambda;
      if (np > 0) {
        ExactMatrix cartan(np, np), rhs(np, 1);
        for (int a = 0; a < np; ++a) {
          for (int b = 0; b < np; ++b)
            cartan.at(a, b) = Scalar(dot(d.simple_root(P[a]), d.simple_coroot(P[b])));
          Scalar v(0);
          for (int i = 0; i < d.rank; ++i)
            v += Scalar(d.simple_root(P[a])[i]) * lambda[i];
          rhs.at(a, 0) = v;
        }
        auto sol = solve(cartan, rhs);
        if (!sol) throw std::logic_error("enumerate_standard: singular Cartan block");
        for (int b = 0; b < np; ++b)
          for (int i = 0; i < d.rank; ++i)
            t[i] -= Scalar(d.simple_coroot(P[b])[i]) * sol->at(b, 0);
      }
      if (!is_positive_position(d, t, P)) continue;

      SVec mu(lambda.size());
      for (size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i] - t[i];

      // tempered factors of the parabolic induction from the character mu
      FiniteModule base = induce_character(subspec, mu);
      Factors f = composition_factors(base);
      std::vector<FiniteModule> taus;
      for (auto& cls : f.classes)
        if (is_tempered(cls)) taus.push_back(cls);
      if (taus.empty()) continue;

      auto* slot = [&]() -> std::vector<FiniteModule>* {
        for (auto& [pt, mods] : seen_t)
          if (pt == t) return &mods;
        seen_t.emplace_back(t, std::vector<FiniteModule>{});
        return &seen_t.back().second;
      }();
      for (auto& tau : taus) {
        bool dup = false;
        for (auto& old : *slot)
          if (old.dim == tau.dim && hom_space(old, tau).first > 0) dup = true;
        if (dup) continue;
        slot->push_back(tau);
        StandardDatum sd{pd, t, tau, langlands_standard(spec, LanglandsDatum{pd, tau, t}), ""};
        std::ostringstream label;
        label << "P={";
        for (size_t k = 0; k < P.size(); ++k) label << (k ? "," : "") << "a" << (P[k] + 1);
        label << "} dim(tau)=" << tau.dim;
        sd.label = label.str();
        out.push_back(std::move(sd));
      }
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "not-applicable";
  }
}

bool BlockReport::all_pass() const {
  return open_embeds != Verdict::fail && generic_submodule != Verdict::fail &&
         hom_closure != Verdict::fail;
}

BlockReport block_report(int n, const SVec& sigma_eigen) {
  if (n > 4)
    throw std::invalid_argument("block-report: n exceeds the dimension guard (n <= 4)");
  BlockReport rep;
  rep.type = "A" + std::to_string(n - 1);
  rep.sigma = sigma_eigen;
  rep.r = Scalar(1);
  for (auto& v : sigma_eigen)
    if (!v.is_integer()) throw std::invalid_argument("block-report: sigma must be integral");

  GradedHeckeAlgebraSpec spec = make_spec(rep.type, "none", {{"all", Rat(2)}}, Scalar(1));
  SemisimpleElement sigma{n, sigma_eigen};
  Scalar r(1);
  GradedSpace gs = graded_space(sigma, r);
  rep.space_dim = gs.dim();
  SigmaChains chains = sigma_chains(sigma, r);

  // all orbits = products of per-chain multisegments
  std::vector<std::vector<ChainMultisegment>> per_chain;
  for (auto& c : chains.chains) {
    std::vector<int> dims;
    for (auto& idx : c.indices) dims.push_back((int)idx.size());
    per_chain.push_back(enumerate_chain_multisegments(dims));
  }
  std::vector<std::vector<ChainMultisegment>> combos = {{}};
  for (auto& options : per_chain) {
    std::vector<std::vector<ChainMultisegment>> next;
    for (auto& base : combos)
      for (auto& opt : options) {
        auto cur = base;
        cur.push_back(opt);
        next.push_back(std::move(cur));
      }
    combos = std::move(next);
  }

  for (auto& combo : combos) {
    BlockEntry e;
    e.msegs = combo;
    e.label = multisegment_label(chains, combo);
    NilpotentElement y = multisegment_representative(sigma, r, combo);
    e.orbit = rank_invariants(y, sigma, r);
    e.orbit_dim = orbit_dimension(y, sigma);
    e.module = standard_module_from_multisegments(spec, sigma, r, combo);
    e.det_mult = det_multiplicity(e.module);
    AdditiveParameter param{y, sigma, r};
    e.sigma0_class = boundedness_class(param.sigma0());
    e.tempered = is_tempered(e.module);
    e.irreducible = is_irreducible(e.module);
    SocleData sd = socle_and_factors(e.module);
    for (size_t c = 0; c < sd.factors.classes.size(); ++c) {
      std::ostringstream fl;
      fl << "dim " << sd.factors.classes[c].dim << " x" << sd.factors.multiplicity[c];
      if (det_multiplicity(sd.factors.classes[c]) >= 1) {
        fl << " generic";
        e.generic_factor_ids.push_back((int)c);
      }
      Temperedness tc = temperedness_class(sd.factors.classes[c]);
      if (tc != Temperedness::neither) fl << " " << to_string(tc);
      e.factor_labels.push_back(fl.str());
    }
    for (int id : sd.constituent_ids) {
      std::ostringstream sl;
      sl << "dim " << sd.factors.classes[id].dim;
      e.socle_labels.push_back(sl.str());
    }
    rep.entries.push_back(std::move(e));
  }

  // canonical entry order: by label
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const BlockEntry& a, const BlockEntry& b) { return a.label < b.label; });

  // (i) the open-orbit standard module is irreducible and embeds wherever it
  // occurs as a factor
  int open_idx = -1;
  for (size_t i = 0; i < rep.entries.size(); ++i)
    if (rep.entries[i].orbit_dim == rep.space_dim) open_idx = (int)i;
  if (open_idx >= 0) {
    const FiniteModule& open_mod = rep.entries[open_idx].module;
    bool ok = rep.entries[open_idx].irreducible;
    for (auto& e : rep.entries) {
      Factors f = composition_factors(e.module);
      bool occurs = false;
      for (auto& cls : f.classes)
        if (cls.dim == open_mod.dim && hom_space(cls, open_mod).first > 0) occurs = true;
      if (occurs && hom_space(open_mod, e.module).first < 1) ok = false;
    }
    rep.open_embeds = ok ? Verdict::pass : Verdict::fail;
  }

  // (ii) the unique generic factor of each standard module is a submodule
  {
    bool any = false, ok = true;
    for (auto& e : rep.entries) {
      SocleData sd = socle_and_factors(e.module);
      std::vector<int> generic;
      for (size_t c = 0; c < sd.factors.classes.size(); ++c)
        if (det_multiplicity(sd.factors.classes[c]) >= 1) generic.push_back((int)c);
      if (generic.empty()) continue;
      any = true;
      if (generic.size() > 1) ok = false;
      for (int g : generic)
        if (hom_space(sd.factors.classes[g], e.module).first < 1) ok = false;
    }
    rep.generic_submodule = !any ? Verdict::not_applicable
                                 : (ok ? Verdict::pass : Verdict::fail);
  }

  // (iii) nonzero Hom between standard modules forces closure containment
  {
    bool any = false, ok = true;
    for (auto& a : rep.entries)
      for (auto& b : rep.entries) {
        if (hom_space(a.module, b.module).first == 0) continue;
        any = true;
        if (!closure_leq(b.orbit, a.orbit)) ok = false;
      }
    rep.hom_closure = !any ? Verdict::not_applicable : (ok ? Verdict::pass : Verdict::fail);
  }

  return rep;
}

Json block_report_to_json(const BlockReport& r) {
  Json j;
  j["type"] = r.type;
  j["sigma"] = svec_to_json(r.sigma);
  j["r"] = scalar_to_json(r.r);
  j["space_dim"] = r.space_dim;
  Json entries = Json::array();
  for (auto& e : r.entries) {
    Json ej;
    ej["multisegment"] = e.label;
    Json ranks = Json::array();
    for (auto& c : e.orbit.chains) {
      Json cj;
      cj["start"] = scalar_to_json(c.start);
      cj["dims"] = c.dims;
      cj["ranks"] = c.rank;
      ranks.push_back(cj);
    }
    ej["orbit_ranks"] = ranks;
    ej["orbit_dim"] = e.orbit_dim;
    ej["dim"] = e.module.dim;
    ej["det_multiplicity"] = e.det_mult;
    ej["sigma0"] = to_string(e.sigma0_class);
    ej["tempered"] = e.tempered;
    ej["irreducible"] = e.irreducible;
    ej["factors"] = e.factor_labels;
    ej["socle"] = e.socle_labels;
    entries.push_back(ej);
  }
  j["standard_modules"] = entries;
  j["checks"] = {{"open_orbit_embeds", to_string(r.open_embeds)},
                 {"generic_is_submodule", to_string(r.generic_submodule)},
                 {"hom_implies_closure", to_string(r.hom_closure)}};
  return j;
}

std::string block_report_to_text(const BlockReport& r) {
  std::ostringstream os;
  os << "block " << r.type << "  sigma = (";
  for (size_t i = 0; i < r.sigma.size(); ++i) os << (i ? "," : "") << to_string(r.sigma[i]);
  os << ")  r = " << to_string(r.r) << "  dim g_N = " << r.space_dim << "\n";
  for (auto& e : r.entries) {
    os << "  " << e.label << "  dim " << e.module.dim << "  orbit-dim " << e.orbit_dim
       << "  det-mult " << e.det_mult << "  sigma0 " << to_string(e.sigma0_class);
    if (e.irreducible) os << "  irreducible";
    if (e.tempered) os << "  tempered";
    os << "\n    factors:";
    for (auto& f : e.factor_labels) os << " [" << f << "]";
    os << "\n    socle:";
    for (auto& s : e.socle_labels) os << " [" << s << "]";
    os << "\n";
  }
  os << "  checks: open-orbit-embeds " << to_string(r.open_embeds)
     << "; generic-is-submodule " << to_string(r.generic_submodule)
     << "; hom-implies-closure " << to_string(r.hom_closure) << "\n";
  return os.str();
}

}  // namespace heckelab

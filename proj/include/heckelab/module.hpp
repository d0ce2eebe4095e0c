#ifndef HECKELAB_MODULE_HPP
#define HECKELAB_MODULE_HPP

#include "heckelab/algebra.hpp"
#include "heckelab/lie.hpp"

namespace heckelab {

/*
  Explicit finite-dimensional module: one matrix per coordinate function of
  t and per generator N_{s_alpha}, N_gamma. Every constructor runs the full
  relation verification, so a FiniteModule is always a genuine module.
*/
struct WeightSplit;

struct FiniteModule {
  GradedHeckeAlgebraSpec spec;
  int dim = 0;
  std::vector<ExactMatrix> coord;       // one per coordinate of t
  std::vector<ExactMatrix> simple_gen;  // one per simple reflection
  std::vector<ExactMatrix> gamma_gen;   // aligned with spec.group->gammas

  ExactMatrix act_poly(const Poly& f) const;
  ExactMatrix act_linear(const QVec& x) const;
  const ExactMatrix& act_element(int e) const;  // N_e, cached
  ExactMatrix act_algebra(const AlgebraElement& a) const;

  mutable std::map<int, ExactMatrix> nw_cache_;
  mutable std::shared_ptr<const WeightSplit> ws_cache_;
};

FiniteModule make_module(GradedHeckeAlgebraSpec spec, std::vector<ExactMatrix> coord,
                         std::vector<ExactMatrix> simple_gen, std::vector<ExactMatrix> gamma_gen);

/// All defining relations as exact matrix identities; throws on failure.
void verify_relations(const FiniteModule& m);

// ---- construction ----

/// ind from O(t + C r) of the character (sigma0, r): dimension |W Gamma|,
/// basis {N_w (x) 1} in canonical element order.
FiniteModule induce_character(const GradedHeckeAlgebraSpec& spec, const SVec& sigma0);

/// Parabolic subalgebra data: subset P of the simple roots plus the part of
/// Gamma that is kept (indices into spec.group->gammas; must stabilize P).
struct ParabolicData {
  std::vector<int> p_simples;
  std::vector<int> gamma_subset = {0};
};

GradedHeckeAlgebraSpec parabolic_spec(const GradedHeckeAlgebraSpec& spec, const ParabolicData& p);

FiniteModule induce_parabolic(const GradedHeckeAlgebraSpec& spec, const ParabolicData& p,
                              const FiniteModule& m);

/// One-dimensional character of a parabolic subalgebra with N_s -> eps
/// (eps = +-1) and O(t) acting by the weight; the weight must satisfy
/// alpha(weight) = eps_alpha k_alpha r on P.
FiniteModule character_module(const GradedHeckeAlgebraSpec& sub_spec, const SVec& weight,
                              int eps);

/// tau' twisted by t: coordinates shift by x_i(t), group action unchanged.
/// t must be fixed by the subalgebra's group.
FiniteModule twist_by_point(const FiniteModule& m, const SVec& t);

struct LanglandsDatum {
  ParabolicData p;
  FiniteModule tau;  // tempered module over the parabolic subalgebra
  SVec t;            // in positive position with respect to P
};

FiniteModule langlands_standard(const GradedHeckeAlgebraSpec& spec, const LanglandsDatum& datum);

// ---- analysis ----

struct WeightDatum {
  std::vector<std::pair<SVec, int>> weights;  // (point of t, generalized multiplicity)
  bool has_central_character = false;
  SVec central_orbit_rep;  // canonical representative when present
  Scalar r;
};

/// Simultaneous generalized eigenspaces of the commuting coordinate
/// matrices. Non-Gaussian spectra are rejected with a clear error.
WeightDatum weights_and_central_character(const FiniteModule& m);

/// Weight-adapted decomposition: basis matrices per weight, cached per use.
struct WeightSplit {
  std::vector<SVec> weights;
  std::vector<ExactMatrix> basis;  // columns span the generalized weight space
};
WeightSplit weight_split(const FiniteModule& m);

/// Multiplicity of the det character in the restriction to C[W Gamma];
/// an exact nonnegative integer.
long det_multiplicity(const FiniteModule& m);
long trivial_multiplicity(const FiniteModule& m);

enum class Temperedness { tempered, essentially_discrete, neither };
std::string to_string(Temperedness t);

/// Closed-cone condition with vanishing central real part; holds for
/// discrete-series modules as well.
bool is_tempered(const FiniteModule& m);
/// Strict interior of the cone (central part unconstrained).
bool is_essentially_discrete(const FiniteModule& m);

/// Cone test on the real parts of the weights: inside the closed cone
/// spanned by the negative simple coroots for tempered (with vanishing
/// central part), strictly inside for essentially discrete. Reports the
/// finest class that applies.
Temperedness temperedness_class(const FiniteModule& m);

/// Exact basis of intertwiners M1 -> M2. Solved weight block by weight
/// block, so the system stays small.
std::pair<int, std::vector<ExactMatrix>> hom_space(const FiniteModule& m1,
                                                   const FiniteModule& m2);

FiniteModule sgn_pullback(const FiniteModule& m);

/// Evaluate a W Gamma-invariant polynomial on the module; returns the
/// scalar when the action is scalar, nullopt otherwise ("not scalar").
std::optional<Scalar> central_evaluate(const Poly& z, const FiniteModule& m);

// submodule machinery
FiniteModule submodule(const FiniteModule& m, const ExactMatrix& basis_cols);
FiniteModule quotient(const FiniteModule& m, const ExactMatrix& basis_cols);
ExactMatrix spin(const FiniteModule& m, const SVec& v);  // smallest invariant subspace containing v

/// Transpose-dual along the anti-automorphism N_w -> N_{w^-1}, identity on
/// O(t); soc and rad swap under it.
FiniteModule dual_module(const FiniteModule& m);

struct Factors {
  std::vector<FiniteModule> classes;  // one representative per iso-class
  std::vector<int> multiplicity;      // aligned
  int total() const;
};

/// Composition factors, grouped into iso-classes via hom_space (Schur).
Factors composition_factors(const FiniteModule& m);

struct SocleData {
  ExactMatrix basis;                 // columns span the socle
  std::vector<int> constituent_ids;  // indices into factors().classes
  Factors factors;
};

/// Socle (largest semisimple submodule) together with the composition
/// factors of the whole module.
SocleData socle_and_factors(const FiniteModule& m);

/// rad(M) via the dual socle; head = M / rad(M).
FiniteModule head(const FiniteModule& m);
bool is_irreducible(const FiniteModule& m);
bool isomorphic(const FiniteModule& a, const FiniteModule& b);

}  // namespace heckelab

#endif

#ifndef HECKELAB_BRIDGE_HPP
#define HECKELAB_BRIDGE_HPP

#include "heckelab/lie.hpp"
#include "heckelab/root_data.hpp"

namespace heckelab {

/// L-parameter (y, sigma, r) with [sigma, y] = 2 r y.
struct AdditiveParameter {
  NilpotentElement y;
  SemisimpleElement sigma;
  Scalar r;

  void validate() const;
  /// sigma_0 = sigma - r h for the grading-adapted JM triple.
  ExactMatrix sigma0() const;
};

/*
  Multiplicative avatar: s = "exp" of sigma carried as exponent data, q =
  "exp(2r)" carried as the exponent 2r. Nothing is ever evaluated
  transcendentally; Ad(s) N = q N holds at the exponent level.
*/
struct MultiplicativeParameter {
  int n = 0;
  SVec s_exp;      // exponents of s
  Scalar q_exp;    // exponent of q, i.e. 2r
  ExactMatrix nil;

  void validate() const;
};

MultiplicativeParameter to_multiplicative(const AdditiveParameter& p);

/// Openness on the multiplicative side: orbit of N under Z(s) (equal
/// exponents) dense in V_q(s) = { X : e_i - e_j = q-exponent on support }.
bool mult_is_open(const MultiplicativeParameter& m);

/*
  Affine-to-graded parameter reduction at a unitary point u in Hom(X, S^1).
  u is stored by its exact values on the lattice basis (Q(i) points of norm
  1; +-1 in all shipped presets).
*/
struct AffineReductionInput {
  BasedRootDatum datum;
  ParameterFunction lambda, lambda_star;
  SVec u_basis_values;
  std::shared_ptr<const ExtendedWeylGroup> group;  // W Gamma acting on X

  Scalar root_value(int root_idx) const;  // alpha(u), multiplicative on X
  void validate() const;
};

struct AffineReductionOutput {
  std::vector<int> r_u;                    // indices into datum.roots
  std::vector<int> delta_u;                // indices into r_u-subset (as root indices)
  std::vector<int> gamma_u;                // group elements stabilizing Delta_u inside (WGamma)_u
  std::vector<std::pair<int, Rat>> k_u;    // (root index, k_{u,alpha})
};

AffineReductionOutput reduce_affine(const AffineReductionInput& input);

/// Formal tag for exp_u(sigma) = u exp(sigma) together with exp(r).
struct ExpuWeight {
  SVec u_basis_values;
  SVec sigma_exp;
  Scalar r_exp;
};
ExpuWeight expu_transfer(const SVec& sigma, const Scalar& r, const SVec& u_basis_values);
SVec expu_log(const ExpuWeight& w);  // formal inverse on the sigma part

/// One-dimensional Steinberg character of the finite Hecke subalgebra:
/// T_{w gamma} -> det(w gamma), with the quadratic-relation check
/// (T_s + 1)(T_s - q^{2 lambda(alpha)}) = 0 evaluated on it.
struct SteinbergCharacter {
  std::vector<int> values;  // +-1 per group element, canonical order
  bool quadratic_relation_ok = false;
};
SteinbergCharacter steinberg_char(const ExtendedWeylGroup& group, const ParameterFunction& lambda,
                                  const Scalar& q_exponent);

}  // namespace heckelab

#endif

#ifndef HECKELAB_ALGEBRA_HPP
#define HECKELAB_ALGEBRA_HPP

#include "heckelab/poly.hpp"
#include "heckelab/root_data.hpp"

namespace heckelab {

/*
  Presentation data of the twisted graded Hecke algebra attached to
  (t, W x| Gamma, k, r), trivial cocycle. r is specialized to a Scalar at
  construction; the generic-r presentation is available only through
  relation_strings().
*/
struct GradedHeckeAlgebraSpec {
  std::shared_ptr<const ExtendedWeylGroup> group;
  std::vector<Rat> k;  // per root of group->datum
  Scalar r;

  const BasedRootDatum& datum() const { return group->datum; }
  int nvars() const { return datum().rank; }
  int num_simples() const { return datum().num_simples(); }

  Rat k_simple(int s) const { return k[datum().simples[s]]; }
  Poly simple_root_poly(int s) const { return Poly::linear(datum().simple_root(s)); }

  /// f composed with the action of element e on t, as a substitution on X.
  Poly act(int element, const Poly& f) const;
  /// Demazure difference (f - f o s_alpha)/alpha for the s-th simple root.
  Poly demazure_simple(int s, const Poly& f) const;

  void validate() const;
  bool compatible(const GradedHeckeAlgebraSpec& o) const;

  GradedHeckeAlgebraSpec with_r(const Scalar& new_r) const;
};

GradedHeckeAlgebraSpec make_spec(const std::string& type, const std::string& gamma,
                                 const std::map<std::string, Rat>& k, const Scalar& r);

/// Demazure operator for an arbitrary root (alpha as linear form, reflection
/// as a substitution matrix on X). The division is always exact; a failure
/// signals a corrupted reflection action.
Poly demazure(const Poly& f, const Poly& alpha, const QMat& reflection_on_x);

/// f o w^{-1}: substitute each coordinate by the linear form given by w's
/// matrix on X, so that the assignment w |-> (f -> f o w^{-1}) is an action.
Poly apply_weyl_to_poly(const QMat& w_on_x, const Poly& f);

/// Element in normal form sum_w f_w N_w with polynomials on the left.
struct AlgebraElement {
  std::map<int, Poly> coeff;  // group element index -> coefficient

  static AlgebraElement zero() { return {}; }
  static AlgebraElement monomial(int element, Poly f);
  static AlgebraElement group_element(int element, int nvars);
  static AlgebraElement polynomial(const Poly& f);

  void add_term(int element, const Poly& f);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const { return coeff == o.coeff; }
  bool is_zero() const { return coeff.empty(); }
};

/// N_u * g for a polynomial g: move g left through N_u.
AlgebraElement push_poly_left(const GradedHeckeAlgebraSpec& spec, int u, const Poly& g);
/// g * N_u rewritten as sum_v N_v h_v (polynomials on the right); returned
/// as (v, h_v) pairs.
std::vector<std::pair<int, Poly>> push_poly_right(const GradedHeckeAlgebraSpec& spec,
                                                  const Poly& g, int u);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const GradedHeckeAlgebraSpec& spec);

/// sgn automorphism: N_w -> det(w) N_w, fixes O(t), sends the r-specialized
/// algebra to the (-r)-specialized one.
AlgebraElement sgn_map(const AlgebraElement& a, const GradedHeckeAlgebraSpec& spec);

std::string element_to_string(const AlgebraElement& a, const GradedHeckeAlgebraSpec& spec);

/// Cross relations of the presentation with r kept formal, for display.
std::vector<std::string> relation_strings(const GradedHeckeAlgebraSpec& spec);

/// Theorem-4.7-style normalization: an isomorphic spec with k = 2 on every
/// root, obtained by dividing the long roots of each component by the
/// admissible ratio and then rescaling all roots. t and W are untouched.
struct RootScaling {
  std::vector<Rat> factor;  // new_root = factor * old_root, per root
};
std::pair<GradedHeckeAlgebraSpec, RootScaling> normalize_equal_parameters(
    const GradedHeckeAlgebraSpec& spec);

}  // namespace heckelab

#endif

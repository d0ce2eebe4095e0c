#ifndef HECKELAB_ROOT_DATA_HPP
#define HECKELAB_ROOT_DATA_HPP

#include <map>
#include <memory>
#include <string>

#include "heckelab/matrix.hpp"
#include "heckelab/scalar.hpp"

namespace heckelab {

using QMat = std::vector<QVec>;  // row-major rational matrix

Rat dot(const QVec& a, const QVec& b);
QVec mat_apply(const QMat& m, const QVec& v);
QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_identity(int n);
QMat mat_transpose(const QMat& m);
QMat mat_inverse(const QMat& m);
Rat mat_det(const QMat& m);

/*
  A based root datum (X, R, Y, R^vee, Delta), with X and Y realized as Z^n
  and the standard pairing. Presets:

    A1, A2, A3, A4   gl-style:  X = Y = Z^n (n = rank+1), roots e_i - e_j
    B2               adjoint:   X = Y = Z^2, short ±e_i, long ±e1±e2
    G2               X has basis (alpha, beta); coroots written in the
                     dual basis of Y
*/
struct BasedRootDatum {
  std::string label;
  int rank = 0;                   // lattice rank
  std::vector<QVec> roots;        // in X
  std::vector<QVec> coroots;      // in Y, aligned with roots
  std::vector<int> simples;       // indices into roots

  int num_roots() const { return (int)roots.size(); }
  int num_simples() const { return (int)simples.size(); }
  const QVec& simple_root(int k) const { return roots[simples[k]]; }
  const QVec& simple_coroot(int k) const { return coroots[simples[k]]; }

  /// <x, alpha^vee> for x in X (or t in t, Scalar-valued version below).
  Rat pair_coroot(const QVec& x, int root_idx) const { return dot(x, coroots[root_idx]); }

  /// Reflection s_alpha acting on X: x -> x - <x, alpha^vee> alpha.
  QMat reflection_on_x(int root_idx) const;

  int root_index(const QVec& r) const;  // -1 if absent
  void validate() const;
};

BasedRootDatum build_root_datum(const std::string& label);
/// Diagram automorphisms as matrices on X. "none" -> {id};
/// "flip" (type A only) -> {id, e_i -> -e_{n+1-i}}.
std::vector<QMat> diagram_automorphisms(const BasedRootDatum& datum, const std::string& gamma);

/*
  W extended by a group Gamma of datum automorphisms stabilizing Delta
  (trivial cocycle throughout). Elements are stored as matrices on X,
  ordered canonically by (length of the W-part, lexicographic canonical
  reduced word, Gamma index); index 0 is the identity.
*/
struct ExtendedWeylGroup {
  BasedRootDatum datum;
  std::vector<QMat> gammas;            // Gamma as matrices on X, identity first

  std::vector<QMat> x_action;          // element matrices on X
  std::vector<QMat> y_action;          // contragredient action on Y
  std::vector<int> length;             // length of the W-part
  std::vector<int> det_char;           // +-1
  std::vector<std::vector<int>> word;  // canonical reduced word of the W-part
  std::vector<int> gamma_part;         // index into gammas
  std::vector<int> w_part;             // element index of the W-part
  std::vector<std::vector<int>> mult;  // multiplication table
  std::vector<int> invs;
  std::vector<std::vector<int>> root_perm;  // permutation of datum.roots per element

  int size() const { return (int)x_action.size(); }
  int w_size = 0;  // |W|; W elements are exactly those with gamma_part == 0

  int element_index(const QMat& m) const;
  int simple_reflection(int k) const;  // element index of s_{alpha_k}
  int gamma_element(int g) const;      // element index of (e, gamma_g)

  bool is_w_element(int e) const { return gamma_part[e] == 0; }

  SVec apply_to_point(int e, const SVec& t) const;   // Y-side action on points of t
  QVec apply_to_x(int e, const QVec& x) const;

  /// Orbit partition of the roots under the full group.
  std::vector<int> root_orbit_ids() const;
};

std::shared_ptr<const ExtendedWeylGroup> enumerate_group(const BasedRootDatum& datum,
                                                         const std::vector<QMat>& gammas);
std::shared_ptr<const ExtendedWeylGroup> enumerate_group(const BasedRootDatum& datum,
                                                         const std::string& gamma = "none");

/// det of the action on X; multiplicative by construction.
inline int det_character(const ExtendedWeylGroup& g, int element) { return g.det_char[element]; }

/// W Gamma-invariant parameter function R -> Q, stored per root.
struct ParameterFunction {
  std::vector<Rat> values;  // aligned with datum.roots

  static ParameterFunction constant(const BasedRootDatum& datum, const Rat& v);
  /// by_length: {"all": v} or {"long": v, "short": v}.
  static ParameterFunction by_length(const BasedRootDatum& datum,
                                     const std::map<std::string, Rat>& spec);
  void validate_invariance(const ExtendedWeylGroup& g) const;
};

/// True iff alpha(Re t) = 0 for alpha in P and alpha(Re t) > 0 for
/// alpha in Delta \ P.
bool is_positive_position(const BasedRootDatum& datum, const SVec& t,
                          const std::vector<int>& p_simple_indices);

}  // namespace heckelab

#endif

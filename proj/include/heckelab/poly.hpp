#ifndef HECKELAB_POLY_HPP
#define HECKELAB_POLY_HPP

#include <map>
#include <optional>

#include "heckelab/scalar.hpp"

namespace heckelab {

using Mono = std::vector<unsigned>;  // exponent vector, one slot per coordinate of t

/// Multivariate polynomial on t with Q(i) coefficients.
/// Zero coefficients are never stored.
struct Poly {
  int nvars = 0;
  std::map<Mono, Scalar> terms;

  explicit Poly(int nv = 0) : nvars(nv) {}

  static Poly constant(int nvars, const Scalar& c);
  static Poly variable(int nvars, int i);
  /// Linear form sum c_i * x_i.
  static Poly linear(const SVec& coeffs);
  static Poly linear(const QVec& coeffs);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int total_degree() const;

  void add_term(const Mono& m, const Scalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;

  bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar eval(const SVec& point) const;
  /// Substitute x_i -> images[i] (an algebra endomorphism).
  Poly substitute(const std::vector<Poly>& images) const;
  /// Substitute x_i -> sum_j M[j][i] x_j, i.e. each variable is replaced by
  /// the linear form given by column i of M.
  Poly substitute_linear(const std::vector<QVec>& mat_cols) const;

  std::string str() const;
};

/// Exact division f / L by a nonzero linear form L (constant term allowed).
/// Returns nullopt when the division is not exact.
std::optional<Poly> divide_by_linear(const Poly& f, const Poly& L);

}  // namespace heckelab

#endif

#ifndef HECKELAB_MATRIX_HPP
#define HECKELAB_MATRIX_HPP

#include <optional>

#include "heckelab/scalar.hpp"

namespace heckelab {

/// Dense matrix over Q(i). Dimensions stay small (<= ~64) in every
/// workflow, so there is no sparse path.
struct ExactMatrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  static ExactMatrix identity(int n);
  static ExactMatrix zero(int r, int c) { return ExactMatrix(r, c); }

  Scalar& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Scalar& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  bool is_zero() const;
  bool is_scalar_multiple_of_identity(Scalar* out = nullptr) const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transpose() const;
  ExactMatrix pow(int e) const;
  Scalar trace() const;

  bool operator==(const ExactMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  SVec apply(const SVec& v) const;
  ExactMatrix col(int j) const;
  void set_col(int j, const SVec& v);

  /// In-place reduced row echelon form; fills pivot column indices.
  /// Pivoting is deterministic: first nonzero entry in column order.
  int rref(std::vector<int>* pivots = nullptr);
  int rank() const;
  Scalar det() const;
  std::optional<ExactMatrix> inverse() const;
};

ExactMatrix from_qmat(const std::vector<QVec>& rows);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

/// Canonical exact basis of the null space. Deterministic: reduced echelon
/// pivots in column order, each vector scaled so its first nonzero entry is 1.
std::vector<SVec> matrix_kernel(const ExactMatrix& m);

/// Solve A X = B exactly; nullopt when inconsistent. When the solution is
/// not unique, free variables are set to zero (deterministic).
std::optional<ExactMatrix> solve(const ExactMatrix& A, const ExactMatrix& B);

/// Column span as a matrix whose columns are a canonical basis.
ExactMatrix column_space(const ExactMatrix& m);
int span_rank(const std::vector<SVec>& vecs);
bool same_span(const std::vector<SVec>& a, const std::vector<SVec>& b);

// ---- univariate polynomials over Q(i), coefficients low to high ----

using UniPoly = std::vector<Scalar>;

UniPoly uni_trim(UniPoly p);
Scalar uni_eval(const UniPoly& p, const Scalar& x);
UniPoly uni_mul(const UniPoly& p, const UniPoly& q);
UniPoly uni_derivative(const UniPoly& p);
/// Monic gcd via the Euclidean algorithm.
UniPoly uni_gcd(UniPoly p, UniPoly q);
/// Division by (t - root); asserts exactness.
UniPoly uni_deflate(const UniPoly& p, const Scalar& root);

/// char poly of a square matrix, monic, computed by Faddeev-LeVerrier.
UniPoly char_poly(const ExactMatrix& m);
/// minimal polynomial, monic (Krylov-style: first linear dependence among
/// powers of m).
UniPoly min_poly(const ExactMatrix& m);

struct EigenRoots {
  std::vector<std::pair<Scalar, int>> roots;  // (value, multiplicity), canonically sorted
  int unresolved_degree = 0;  // >0 when a non-Gaussian factor remains
};

/// All Q(i) roots of a monic polynomial, with multiplicities. Roots are
/// located by exact divisor search on the integerized squarefree part; the
/// search throws when the coefficients are too large for that to be viable.
EigenRoots gaussian_roots(const UniPoly& p);

/// Generalized eigenspace basis: ker((m - lambda)^k) with k the multiplicity
/// of lambda in the minimal polynomial.
std::vector<SVec> generalized_eigenspace(const ExactMatrix& m, const Scalar& lambda,
                                         int minpoly_mult);

}  // namespace heckelab

#endif

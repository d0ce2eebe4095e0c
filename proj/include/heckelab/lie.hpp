#ifndef HECKELAB_LIE_HPP
#define HECKELAB_LIE_HPP

#include <array>

#include "heckelab/matrix.hpp"

namespace heckelab {

/// Semisimple element of gl_n, held in diagonal form. Conjugating into
/// diagonal form is the caller's responsibility.
struct SemisimpleElement {
  int n = 0;
  SVec eigen;

  ExactMatrix as_matrix() const;
};

struct NilpotentElement {
  int n = 0;
  ExactMatrix mat;

  void validate() const;  // throws unless mat^n = 0
};

/// g_N^{sigma,r}. For r != 0 this is the span of the matrix units E_ij with
/// a_i - a_j = 2r; for r = 0 it is the nilpotent cone of Z_g(sigma), stored
/// as the block partition of indices by eigenvalue.
struct GradedSpace {
  int n = 0;
  Scalar r;
  std::vector<std::pair<int, int>> units;     // r != 0
  std::vector<std::vector<int>> blocks;       // r == 0

  int dim() const { return (int)units.size(); }  // linear case only
};

struct SL2Triple {
  ExactMatrix e, h, f;
  void validate() const;
};

GradedSpace graded_space(const SemisimpleElement& sigma, const Scalar& r);

bool commutation_holds(const NilpotentElement& y, const SemisimpleElement& sigma,
                       const Scalar& r);

/// Jacobson-Morozov completion of y, via a deterministic Jordan-basis
/// algorithm (chain tops picked by leading index).
SL2Triple jm_triple(const NilpotentElement& y);

/// JM triple compatible with the grading by sigma, so that
/// sigma_0 = sigma - r h commutes with e, h, f. Requires [sigma,y] = 2ry.
struct AdaptedTriple {
  SL2Triple triple;
  ExactMatrix sigma0;
};
AdaptedTriple sl2_adapted(const NilpotentElement& y, const SemisimpleElement& sigma,
                          const Scalar& r);

std::vector<int> jordan_type(const NilpotentElement& y);  // partition, weakly decreasing

int centralizer_dim_of_sigma(const SemisimpleElement& sigma);
/// dim { X : [sigma,X] = 0, [X,y] = 0 }
int centralizer_intersection_dim(const NilpotentElement& y, const SemisimpleElement& sigma);
int orbit_dimension(const NilpotentElement& y, const SemisimpleElement& sigma);

bool is_open(const NilpotentElement& y, const SemisimpleElement& sigma, const Scalar& r);

bool lemma112_criterion(const NilpotentElement& y, const SemisimpleElement& sigma,
                        const Scalar& r);

enum class Boundedness { bounded, essentially_bounded, neither };
std::string to_string(Boundedness b);

Boundedness boundedness_class(const SemisimpleElement& sigma0);
/// Same classification for a not-necessarily-diagonal semisimple matrix;
/// the spectrum must be Gaussian-rational.
Boundedness boundedness_class(const ExactMatrix& sigma0);
SVec semisimple_spectrum(const ExactMatrix& m);  // with multiplicity, sorted

bool is_distinguished(const NilpotentElement& y);

/*
  Composite-rank invariant along the 2r-spaced eigenvalue chains of sigma.
  rank[i][j] (i <= j) is the rank of the composite map V_i -> V_{j+1}
  within a chain; two parameters with the same sigma lie in the same
  Z_G(sigma)-orbit iff their invariants coincide.
*/
struct RankInvariant {
  struct Chain {
    Scalar start;                        // lowest eigenvalue of the chain
    std::vector<int> dims;               // multiplicities along the chain
    std::vector<std::vector<int>> rank;  // rank[i][j], i <= j < len-1
  };
  std::vector<Chain> chains;

  bool same_shape(const RankInvariant& o) const;
  bool operator==(const RankInvariant& o) const;
};

RankInvariant rank_invariants(const NilpotentElement& y, const SemisimpleElement& sigma,
                              const Scalar& r);
bool closure_leq(const RankInvariant& a, const RankInvariant& b);

NilpotentElement open_orbit_rep(const SemisimpleElement& sigma, const Scalar& r);

// ---- multisegment bookkeeping (orbit enumeration oracle) ----

/// A segment is a run [lo, hi] of consecutive chain positions; a
/// multisegment for a chain with dimension vector d covers position p
/// exactly d_p times.
using Segment = std::pair<int, int>;
using ChainMultisegment = std::vector<Segment>;  // sorted, repetitions allowed

std::vector<ChainMultisegment> enumerate_chain_multisegments(const std::vector<int>& dims);

/// dim End of the quiver representation attached to a chain multisegment.
int multisegment_end_dim(const ChainMultisegment& m);

/// Composite ranks of the representation attached to a chain multisegment.
std::vector<std::vector<int>> multisegment_ranks(const ChainMultisegment& m, int len);

/// The eigenvalue chains of sigma for step 2r: each chain is the list of
/// (eigenvalue, indices) along the arithmetic progression.
struct SigmaChains {
  struct Chain {
    SVec values;
    std::vector<std::vector<int>> indices;  // indices[j] = coordinates with eigenvalue values[j]
  };
  std::vector<Chain> chains;
};
SigmaChains sigma_chains(const SemisimpleElement& sigma, const Scalar& r);

/// Representative nilpotent built from per-chain multisegments.
NilpotentElement multisegment_representative(const SemisimpleElement& sigma, const Scalar& r,
                                             const std::vector<ChainMultisegment>& msegs);

}  // namespace heckelab

#endif

#ifndef HECKELAB_REPORT_HPP
#define HECKELAB_REPORT_HPP

#include "heckelab/io.hpp"
#include "heckelab/module.hpp"

namespace heckelab {

/// Langlands standard module built from per-chain multisegments in a
/// type-A integral block (k = 2): segments grouped by decreasing real
/// center, Steinberg characters inside each segment.
FiniteModule standard_module_from_multisegments(const GradedHeckeAlgebraSpec& spec,
                                                const SemisimpleElement& sigma, const Scalar& r,
                                                const std::vector<ChainMultisegment>& msegs);

std::string multisegment_label(const SigmaChains& chains,
                               const std::vector<ChainMultisegment>& msegs);

/// All Langlands standard modules of a spec with central character
/// (W Gamma sigma0, r): data (P, tau', t) with tau' running over the
/// tempered factors of parabolic inductions from characters.
struct StandardDatum {
  ParabolicData p;
  SVec t;
  FiniteModule tau;
  FiniteModule module;
  std::string label;
};
std::vector<StandardDatum> enumerate_standard_modules(const GradedHeckeAlgebraSpec& spec,
                                                      const SVec& sigma0);

enum class Verdict { pass, fail, not_applicable };
std::string to_string(Verdict v);

struct BlockEntry {
  std::string label;
  std::vector<ChainMultisegment> msegs;
  RankInvariant orbit;
  int orbit_dim = 0;
  FiniteModule module;
  long det_mult = 0;
  Boundedness sigma0_class = Boundedness::neither;
  bool tempered = false;
  bool irreducible = false;
  std::vector<std::string> factor_labels;
  std::vector<std::string> socle_labels;
  std::vector<int> generic_factor_ids;   // indices into factor iso-classes
};

struct BlockReport {
  std::string type;    // e.g. "A2"
  SVec sigma;
  Scalar r;
  int space_dim = 0;
  std::vector<BlockEntry> entries;
  Verdict open_embeds = Verdict::not_applicable;
  Verdict generic_submodule = Verdict::not_applicable;
  Verdict hom_closure = Verdict::not_applicable;
  bool all_pass() const;
};

/// Type A(n-1) block report at k = 2, r = 1, integral sigma.
BlockReport block_report(int n, const SVec& sigma_eigen);

Json block_report_to_json(const BlockReport& r);
std::string block_report_to_text(const BlockReport& r);

}  // namespace heckelab

#endif

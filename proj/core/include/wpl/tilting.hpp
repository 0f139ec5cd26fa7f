#pragma once

#include "wpl/coxring.hpp"
#include "wpl/picard.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpl {

enum class WeightKind { Spherical, Euclidean, Hyperbolic };

enum class AdeSeries { A, D, E };

struct AdeLabel {
  AdeSeries series = AdeSeries::A;
  Int index;

  std::string str() const;  ///< e.g. "A5", "D5", "E8"
  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

struct WeightClass {
  WeightKind kind = WeightKind::Spherical;
  std::optional<AdeLabel> ade;  ///< present exactly when kind is Spherical

  friend bool operator==(const WeightClass&, const WeightClass&) = default;
};

/// Trichotomy by the sign of the Euler characteristic, with the Dynkin label
/// on the sorted weights in the spherical case: at most two weights > 1 gives
/// A_{p+q} (absent weights count as 1); (2,2,m) gives D_{m+2}; (2,3,3),
/// (2,3,4), (2,3,5) give E6, E7, E8.
WeightClass classify(const WplData& w);

/// Why a graded Ext scan stopped.
enum class TerminationReason { DegreeCutoff, TorsionPeriod, WitnessFound };

std::string to_string(TerminationReason reason);

/// A nonzero graded term: the piece at twist k+1 (i.e. the degree argument
/// carries (k+1) copies of the dualizing class).
struct Ext1Witness {
  std::int64_t k = 0;
  PicElt degree;                  ///< the section-space degree of the term
  std::vector<Monomial> monomials;
};

struct Ext1Sum {
  bool infinite = false;
  Int total;  ///< meaningful only when finite
  std::optional<Ext1Witness> first_nonzero;
  TerminationReason certificate = TerminationReason::DegreeCutoff;
};

/// Total dimension of the first Ext between the pulled-back summands i and j
/// over the dualizing bundle: the sum over k >= 0 of the section dimensions
/// of deg_i - deg_j + (k+1) * dualizing. The scan terminates by the sign of
/// the dualizing degree: negative (cutoff once the argument degree drops
/// below zero), zero (one torsion period decides everything), or positive
/// (a nonzero term is guaranteed and reported as the infinity witness).
Ext1Sum ext1_dim_K(const WplData& w, std::size_t i, std::size_t j,
                   std::optional<Int> k_cap = std::nullopt);

/// Degree-level core of ext1_dim_K.
Ext1Sum pullback_ext1_sum(const WplData& w, const PicElt& deg_i, const PicElt& deg_j,
                          std::optional<Int> k_cap = std::nullopt);

struct AcyclicityWitness {
  std::size_t i = 0;  ///< source vertex (into tilting_degrees)
  std::size_t j = 0;  ///< target vertex
  std::int64_t k = 0; ///< failing term sits at twist k+1
  PicElt degree;
  std::vector<Monomial> monomials;
};

struct AcyclicityVerdict {
  bool acyclic = false;
  std::optional<AcyclicityWitness> witness;  ///< present iff not acyclic
  TerminationReason certificate = TerminationReason::DegreeCutoff;
  WeightClass classification;
  /// acyclic must coincide with "spherical of series A"; a mismatch is
  /// reported here and never patched over.
  bool matches_classification = false;
};

/// Decide whether the pulled-back tilting bundle stays extension-free over
/// the dualizing bundle, scanning pairs (i descending, j ascending) so the
/// first witness is reported from the sink summand first.
AcyclicityVerdict is_pullback_acyclic(const WplData& w);

}  // namespace wpl

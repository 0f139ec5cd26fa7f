#pragma once

#include "wpl/coxring.hpp"
#include "wpl/picard.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace wpl {

struct Arrow {
  std::size_t src = 0;
  std::size_t dst = 0;
  Monomial label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver whose vertices carry degree classes and whose arrows carry
/// monomial labels. Arrows are kept sorted by (src, dst, label).
struct LabeledQuiver {
  std::vector<PicElt> vertices;
  std::vector<Arrow> arrows;

  friend bool operator==(const LabeledQuiver&, const LabeledQuiver&) = default;
};

/// Degrees of the summands of the canonical tilting bundle, in vertex order:
/// O, O(x_1), ..., O((p_1-1) x_1), O(x_2), ..., O((p_n-1) x_n), O(c).
std::vector<PicElt> tilting_degrees(const WplData& w);

/// Index of the interior vertex j on arm i (i 1-indexed, 1 <= j <= p_i - 1).
std::size_t arm_vertex_index(const WplData& w, std::size_t arm, std::int64_t j);

/// The star-shaped quiver of the canonical tilting bundle. Requires n >= 2.
LabeledQuiver canonical_quiver(const WplData& w);

/// One linear relation between parallel paths: sum of coeff * path, where a
/// path is the sequence of arrow indices from src to dst, at twist t.
struct PathRelation {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::int64_t t = 0;
  std::vector<std::pair<Rat, std::vector<std::size_t>>> terms;

  friend bool operator==(const PathRelation&, const PathRelation&) = default;
};

/// The defining relations (arm i) - (arm 2) + lambda_i (arm 1) for i >= 3,
/// written over the arrows of q (which must be canonical_quiver(w)).
std::vector<PathRelation> canonical_relations(const WplData& w, const LabeledQuiver& q);

/// Arrow indices along arm i (1-indexed) from source to sink, in path order.
std::vector<std::size_t> arm_arrows(const WplData& w, const LabeledQuiver& q,
                                    std::size_t arm);

/// dim Hom(O(a), O(b)) on the line.
Int hom_dim(const WplData& w, const PicElt& a, const PicElt& b);

/// dim Ext^1(O(a), O(b)) on the line, via duality.
Int ext1_dim(const WplData& w, const PicElt& a, const PicElt& b);

/// All directed paths src -> dst as arrow-index sequences, in lexicographic
/// arrow order. Throws CycleDegreeError if a directed cycle is reachable.
std::vector<std::vector<std::size_t>> enumerate_paths(const LabeledQuiver& q,
                                                      std::size_t src,
                                                      std::size_t dst);

/// Product of the labels along a path (left to right), reduced.
Poly path_poly(const WplData& w, const LabeledQuiver& q,
               const std::vector<std::size_t>& path);

struct PairReport {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t path_count = 0;
  Int hom_dimension;
  std::size_t kernel_dim = 0;
  bool surjective = false;
};

struct EndAlgebraReport {
  std::vector<PairReport> pairs;
  bool surjective = false;            ///< every pair map is onto
  bool relations_span_kernel = false; ///< defining relations span the source-to-sink kernel
  bool ok() const { return surjective && relations_span_kernel; }
  const PairReport& pair(std::size_t src, std::size_t dst) const;
};

/// Check that paths in the quiver present the section algebra of the tilting
/// bundle: path maps are onto each Hom space and the defining relations span
/// the kernel between the extreme vertices.
EndAlgebraReport verify_end_algebra(const WplData& w);

}  // namespace wpl

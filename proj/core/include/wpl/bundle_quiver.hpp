#pragma once

#include "wpl/canonical_algebra.hpp"
#include "wpl/coxring.hpp"
#include "wpl/picard.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wpl {

/// Graded pieces of the morphism spaces between the pulled-back tilting
/// summands over the total space of the dualizing bundle: the (i, j, k) piece
/// is spanned by monomials t^k * m with m a section of
/// deg(j) - deg(i) - k * dualizing.
class GradedHomTable {
public:
  GradedHomTable(const WplData& w, std::vector<PicElt> vertex_degrees,
                 std::int64_t k_max);

  std::size_t vertex_count() const { return degrees_.size(); }
  std::int64_t k_max() const { return k_max_; }
  const std::vector<PicElt>& degrees() const { return degrees_; }

  /// Monomial basis of the (i, j, k) piece (each monomial has t_exp == k).
  const std::vector<Monomial>& basis(std::size_t i, std::size_t j,
                                     std::int64_t k) const;

  /// Degree of the underlying section space of the (i, j, k) piece.
  PicElt piece_degree(std::size_t i, std::size_t j, std::int64_t k) const;

private:
  const WplData* w_;
  std::vector<PicElt> degrees_;
  std::int64_t k_max_;
  // table_[k][i][j]
  std::vector<std::vector<std::vector<std::vector<Monomial>>>> table_;
};

/// Per-piece bookkeeping from the arrow extraction.
struct PieceInfo {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t k = 0;
  std::size_t dim = 0;           ///< dimension of the piece
  std::size_t radical_sq_dim = 0;///< dimension of the composite span inside it
  std::size_t arrows_added = 0;  ///< primitives chosen in this piece
};

struct BundleQuiverExtraction {
  LabeledQuiver quiver;      ///< vertices from tilting order; labels carry t_exp
  std::int64_t k_max_used = 0;
  bool closure_verified = false;
  std::vector<PieceInfo> pieces;  ///< nonzero pieces with k <= k_max_used
};

/// Default twist window for arrow extraction: twice the lcm of the weights.
std::int64_t default_k_max(const WplData& w);

/// Extract a finite presentation quiver for the pulled-back tilting bundle:
/// arrows are canonically least monomial complements of composite spans in
/// each graded piece. Requires n >= 2 and k_max >= 0.
///
/// closure_verified holds when (a) generation of every piece up to k_max by
/// the extracted arrows checks out, and (b) every arrow sits in the lower
/// half of the window (twist <= k_max / 2), so doubling the window could not
/// have introduced the top arrows as late surprises.
BundleQuiverExtraction extract_bundle_quiver(const WplData& w, std::int64_t k_max);

struct GenerationWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t k = 0;
  Monomial monomial;  ///< basis monomial not reached by paths
};

struct GenerationCheck {
  bool ok = false;
  std::vector<GenerationWitness> unreached;
};

/// Verify that products of the extracted arrows span every graded piece up to
/// k_check (identity included at k == 0).
GenerationCheck check_generation(const WplData& w, const BundleQuiverExtraction& ex,
                                 std::int64_t k_check);

/// All paths src -> dst with total label twist exactly k, as arrow-index
/// sequences. Pre: every directed cycle has positive total twist (checked);
/// throws PathCapError when more than `cap` paths exist.
std::vector<std::vector<std::size_t>> enumerate_paths_with_twist(
    const LabeledQuiver& q, std::size_t src, std::size_t dst, std::int64_t k,
    std::size_t cap);

struct PieceRelations {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::int64_t k = 0;
  std::size_t path_count = 0;
  std::vector<PathRelation> relations;
};

struct RelationExtractionOptions {
  /// Highest twist scanned for relations; defaults to twice the maximal
  /// arrow twist (composites of two arrows bound the generating relations).
  std::optional<std::int64_t> k_limit;
  std::size_t path_cap = 200000;
  bool require_closure = true;
};

/// Kernel bases of the path maps for all pieces with at least one relation.
std::vector<PieceRelations> extract_relations(
    const WplData& w, const BundleQuiverExtraction& ex,
    const RelationExtractionOptions& opts = {});

}  // namespace wpl

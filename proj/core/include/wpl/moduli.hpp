#pragma once

#include "wpl/canonical_algebra.hpp"
#include "wpl/intlinalg.hpp"
#include "wpl/picard.hpp"
#include "wpl/ratlinalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wpl {

/// The refinement vectors over the vertex lattice: for each arm i and each
/// j = 1..p_i-1 the vector e_{i,j+1} - e_{i,j} - e_{i,1} + e_0 (where the
/// position j = p_i means the sink vertex), in arm-major order, followed by
/// b_0 = e_0. There are N - 1 of them; they span the kernel of the map
/// sending each vertex to its degree class, which construction certifies by
/// comparing Smith invariant factors with the presentation of the degree
/// group.
struct RefinementBasis {
  IntMat vectors;     ///< (N-1) x N, rows as described above
  IntVec invariants;  ///< Smith invariant factors of the row lattice
};

RefinementBasis refinement_basis(const WplData& w);

/// Index into RefinementBasis::vectors of the vector attached to arm i,
/// position j (1-indexed arm, 1 <= j <= p_i - 1); the last row is b_0.
std::size_t refinement_index(const WplData& w, std::size_t arm, std::int64_t j);

/// A refined representation at dimension vector one: a scalar per arrow of
/// the canonical quiver, a nonzero scalar per interior arm position, and a
/// nonzero scalar attached to the source vertex.
struct RefinedRep {
  std::vector<Rat> w_vals;          ///< indexed like canonical_quiver arrows
  std::vector<std::vector<Rat>> f;  ///< f[i-1][j-1] for arm i, position j
  Rat g = 1;
};

/// The zero representation: all arrow scalars 0, refinement scalars 1.
RefinedRep zero_rep(const WplData& w, const LabeledQuiver& q);

/// Throws unless rep is well-formed for q: shapes match, f and g are
/// nonzero, the ladder compatibility w_{i,j} = f_{i,j} w_{i,0} holds, and
/// the arm path products satisfy the defining relations.
void validate_refined(const WplData& w, const LabeledQuiver& q, const RefinedRep& rep);

/// Representation attached to a point of the affine cone: requires the Cox
/// relations u_i^{p_i} - u_2^{p_2} + lambda_i u_1^{p_1} = 0 for i >= 3.
RefinedRep rep_from_point(const WplData& w, const LabeledQuiver& q,
                          const std::vector<Rat>& u);

struct StabilityParam {
  IntVec theta;  ///< one weight per vertex; the dimension-one total is zero
};

/// theta_0 = 1 - N on the source vertex and 1 elsewhere.
StabilityParam default_vartheta(const WplData& w);

struct StabilityResult {
  bool stable = false;
  /// A destabilizing direction over the vertices (primitive integer entries)
  /// when unstable.
  std::optional<RatVec> destabilizer;
};

/// One-parameter-subgroup test: the representation is stable iff no nonzero
/// rational vector mu over the vertices satisfies all of: mu pairs to zero
/// with every refinement vector, mu is non-decreasing along every arrow
/// carrying a nonzero scalar, and theta(mu) <= 0. Decided exactly by extreme
/// ray enumeration; vertex counts above 12 are rejected.
StabilityResult is_stable(const WplData& w, const LabeledQuiver& q,
                          const RefinedRep& rep, const StabilityParam& theta);

/// Geometric cross-check: stable iff some arrow scalar is nonzero.
bool is_stable_geometric(const WplData& w, const LabeledQuiver& q,
                         const RefinedRep& rep);

/// Orbit equivalence under the vertex torus: identical supports and, on the
/// common support, the coordinate ratios satisfy every integer relation among
/// the corresponding characters.
bool is_isomorphic(const WplData& w, const LabeledQuiver& q, const RefinedRep& r1,
                   const RefinedRep& r2);

/// A framed refined representation over the extracted bundle quiver: framing
/// values (v_1..v_n, v_t), an evaluation scalar per arrow, a nonzero gauge
/// scalar per arrow, and a nonzero scalar at the source.
struct FramedRep {
  std::vector<Rat> v;
  std::vector<Rat> w_vals;
  std::vector<Rat> f;
  Rat g = 1;
};

/// Build the standard framed representation at v (all f = 1, g = 1, arrow
/// scalars by evaluating the labels). Requires n <= 3; when n = 3 the
/// framing point must satisfy v_3^{p_3} - v_2^{p_2} + v_1^{p_1} = 0.
FramedRep build_framed(const WplData& w, const LabeledQuiver& qt,
                       const std::vector<Rat>& v);

void validate_framed(const WplData& w, const LabeledQuiver& qt, const FramedRep& rep);

/// Stable iff the framing point is nonzero away from the fiber coordinate;
/// decided gauge-invariantly from the twist-zero arrow scalars.
bool is_stable_framed(const WplData& w, const LabeledQuiver& qt, const FramedRep& rep);

/// Orbit equivalence of framed representations: decided through the framing
/// values alone, with characters x_1..x_n and the dualizing class, via the
/// integer relation lattice on the common support.
bool is_isomorphic_framed(const WplData& w, const LabeledQuiver& qt,
                          const FramedRep& r1, const FramedRep& r2);

}  // namespace wpl

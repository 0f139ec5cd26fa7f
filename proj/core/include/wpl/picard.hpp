#pragma once

#include "wpl/intlinalg.hpp"
#include "wpl/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wpl {

/// A degree class in normal form: ell * c + sum_i arm[i] * x_i with
/// 0 <= arm[i] < p_i. Equality of normal forms is equality in the group.
struct PicElt {
  Int ell;
  std::vector<Int> arm;

  friend bool operator==(const PicElt&, const PicElt&) = default;
  bool is_zero() const;
};

/// Weighted projective line X(p_1,...,p_n; lambda) over the rationals.
///
/// Weights equal to 1 are dropped during construction (they do not change the
/// geometry). The surviving weights are all >= 2; `lambda` supplies the
/// interior points for arms 4..n — the first three branch points are
/// normalized to infinity, 0, 1, so `lambda` must have max(n-3, 0) entries,
/// pairwise distinct and different from 0 and 1.
class WplData {
public:
  std::size_t n() const { return p_.size(); }
  const std::vector<std::int64_t>& weights() const { return p_; }
  std::int64_t weight(std::size_t i) const;  ///< 1-indexed
  const std::vector<Rat>& lambda() const { return lambda_; }

  /// Interior parameter of arm i (1-indexed, i >= 3); arm 3 is 1.
  Rat lambda_for_arm(std::size_t i) const;

  const Int& pbar() const { return pbar_; }  ///< lcm of the weights
  /// Vertex count of the canonical quiver: sum_i (p_i - 1) + 2.
  std::size_t vertex_count() const;

  // --- group operations (all results in normal form) ---
  PicElt zero() const;
  PicElt unit() const;              ///< the class c
  PicElt x(std::size_t i) const;    ///< the class x_i, 1-indexed
  PicElt normal_form(const Int& c_coeff, const std::vector<Int>& x_coeffs) const;
  PicElt add(const PicElt& a, const PicElt& b) const;
  PicElt sub(const PicElt& a, const PicElt& b) const;
  PicElt neg(const PicElt& a) const;
  PicElt scale(const Int& m, const PicElt& a) const;
  /// The dualizing class (n-2) c - sum_i x_i.
  PicElt dualizing() const;

  /// Group homomorphism to Z with degree(x_i) = pbar / p_i, degree(c) = pbar.
  Int degree(const PicElt& d) const;

  /// 2 - sum_i (1 - 1/p_i); sign governs the trichotomy of weight types.
  Rat euler_characteristic() const;

  /// Order of d in the degree group; nullopt when infinite (degree != 0).
  std::optional<Int> torsion_order(const PicElt& d) const;

  /// Throws DataMismatchError unless d is a valid normal form for this data.
  void check(const PicElt& d) const;

  friend bool operator==(const WplData&, const WplData&) = default;

private:
  friend WplData make_wpl(const std::vector<Int>& weights,
                          const std::vector<Rat>& lambda);

  std::vector<std::int64_t> p_;
  std::vector<Rat> lambda_;
  Int pbar_;
};

WplData make_wpl(const std::vector<Int>& weights, const std::vector<Rat>& lambda = {});

/// A sublattice of Z^k given by basis rows (canonical Hermite form).
struct IntLattice {
  IntMat basis;
  std::size_t rank() const { return basis.size(); }
  friend bool operator==(const IntLattice&, const IntLattice&) = default;
};

/// Full lattice of integer relations { m : sum_j m_j * degrees[j] == 0 }
/// among the given degree classes.
IntLattice relation_lattice(const WplData& w, const std::vector<PicElt>& degrees);

}  // namespace wpl

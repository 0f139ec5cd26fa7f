#pragma once

#include "wpl/numeric.hpp"
#include "wpl/picard.hpp"
#include "wpl/ratlinalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace wpl {

/// Monomial t^t_exp * prod_i X_i^exps[i-1]. Within the coordinate ring of the
/// line itself t_exp is 0; over the total space of the dualizing bundle t is
/// the tautological fiber coordinate, of degree minus the dualizing class.
struct Monomial {
  std::vector<std::int64_t> exps;
  std::int64_t t_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: t_exp first, then exponents lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.t_exp <=> b.t_exp; c != 0) {
      return c;
    }
    return a.exps <=> b.exps;
  }
};

/// Polynomial with exact rational coefficients over reduced monomials,
/// ordered canonically. Zero coefficients are never stored.
using Poly = std::map<Monomial, Rat>;

Poly poly_of(const Monomial& m, const Rat& coeff = Rat(1));

/// Degree of the X-part in the degree group (ignores t_exp).
PicElt x_degree(const WplData& w, const Monomial& m);
/// Total degree over the bundle: x-part minus t_exp times the dualizing class.
PicElt total_degree(const WplData& w, const Monomial& m);

/// A monomial is reduced when exps[i] < p_i for every arm i >= 3.
bool is_reduced(const WplData& w, const Monomial& m);

/// Rewrite X_i^{p_i} -> X_2^{p_2} - lambda_i X_1^{p_1} (arms i >= 3) until all
/// monomials are reduced. Exact, terminating, and confluent.
Poly reduce(const WplData& w, const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& a);
/// Product followed by reduction.
Poly poly_mul(const WplData& w, const Poly& a, const Poly& b);

/// Dimension of the section space of O(d); exact for every arm count.
Int section_dim(const WplData& w, const PicElt& d);

/// Monomial basis of the section space (canonically sorted). Requires n >= 2.
std::vector<Monomial> section_basis(const WplData& w, const PicElt& d);

/// Independent oracle: enumerate all reduced monomials of the given degree by
/// exhaustive search over the (finite) exponent box. Requires n >= 2.
std::vector<Monomial> section_basis_bruteforce(const WplData& w, const PicElt& d);

/// Evaluate at X_i = point[i-1], t = t_value.
Rat eval(const WplData& w, const Poly& p, const std::vector<Rat>& point,
         const Rat& t_value = Rat(0));

/// Coordinates of q in the given monomial basis; throws DataMismatchError if
/// q has a term outside the basis.
RatVec coordinates(const Poly& q, const std::vector<Monomial>& basis);

}  // namespace wpl

#include "wpl/moduli.hpp"

#include "wpl/coxring.hpp"
#include "wpl/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace wpl {

namespace {

void require_two_arms(const WplData& w, const char* who) {
  if (w.n() < 2) {
    throw ArityError(std::string(who) + ": needs at least two arms (weights >= 2)");
  }
}

/// Torsion order of the degree group, from the Smith form of its presentation
/// (rows x_1..x_n, c; columns p_i x_i - c).
Int degree_group_torsion(const WplData& w) {
  const std::size_t n = w.n();
  IntMat pres(n + 1, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    pres[i][i] = Int(w.weights()[i]);
    pres[n][i] = Int(-1);
  }
  const SmithNormalForm snf = smith_normal_form(pres);
  Int torsion(1);
  for (const Int& d : snf.invariants) {
    torsion *= d;
  }
  return torsion;
}

}  // namespace

std::size_t refinement_index(const WplData& w, std::size_t arm, std::int64_t j) {
  if (arm < 1 || arm > w.n()) {
    throw DataMismatchError("refinement_index: arm out of range");
  }
  if (j < 1 || j >= w.weights()[arm - 1]) {
    throw DataMismatchError("refinement_index: position out of range");
  }
  std::size_t idx = 0;
  for (std::size_t i = 1; i < arm; ++i) {
    idx += static_cast<std::size_t>(w.weights()[i - 1] - 1);
  }
  return idx + static_cast<std::size_t>(j - 1);
}

RefinementBasis refinement_basis(const WplData& w) {
  require_two_arms(w, "refinement_basis");
  const std::size_t n_verts = w.vertex_count();
  const std::size_t sink = n_verts - 1;
  RefinementBasis basis;

  for (std::size_t i = 1; i <= w.n(); ++i) {
    const std::int64_t p = w.weights()[i - 1];
    for (std::int64_t j = 1; j < p; ++j) {
      IntVec b(n_verts, Int(0));
      const std::size_t next = j + 1 == p ? sink : arm_vertex_index(w, i, j + 1);
      b[next] += 1;
      b[arm_vertex_index(w, i, j)] -= 1;
      b[arm_vertex_index(w, i, 1)] -= 1;
      b[0] += 1;
      basis.vectors.push_back(std::move(b));
    }
  }
  IntVec b0(n_verts, Int(0));
  b0[0] = 1;
  basis.vectors.push_back(std::move(b0));

  if (basis.vectors.size() != n_verts - 1) {
    throw CertificateError("refinement_basis: unexpected vector count");
  }

  // Certify that the rows span the full kernel of the vertex-degree map:
  // every row maps to zero, the rank is N - 1, and the quotient's torsion
  // matches the degree group's own presentation.
  const std::vector<PicElt> degs = tilting_degrees(w);
  for (const IntVec& b : basis.vectors) {
    PicElt image = w.zero();
    for (std::size_t v = 0; v < n_verts; ++v) {
      if (b[v] != 0) {
        image = w.add(image, w.scale(b[v], degs[v]));
      }
    }
    if (!image.is_zero()) {
      throw CertificateError("refinement_basis: vector does not map to zero");
    }
  }
  const SmithNormalForm snf = smith_normal_form(basis.vectors);
  basis.invariants = snf.invariants;
  if (snf.rank != n_verts - 1) {
    throw CertificateError("refinement_basis: rows are not independent");
  }
  Int torsion(1);
  for (const Int& d : snf.invariants) {
    torsion *= d;
  }
  if (torsion != degree_group_torsion(w)) {
    throw CertificateError("refinement_basis: quotient differs from the degree group");
  }
  return basis;
}

RefinedRep zero_rep(const WplData& w, const LabeledQuiver& q) {
  RefinedRep rep;
  rep.w_vals.assign(q.arrows.size(), Rat(0));
  for (std::size_t i = 1; i <= w.n(); ++i) {
    rep.f.emplace_back(static_cast<std::size_t>(w.weights()[i - 1] - 1), Rat(1));
  }
  rep.g = 1;
  return rep;
}

void validate_refined(const WplData& w, const LabeledQuiver& q, const RefinedRep& rep) {
  require_two_arms(w, "validate_refined");
  if (rep.w_vals.size() != q.arrows.size()) {
    throw DataMismatchError("refined rep: arrow scalar count mismatch");
  }
  if (rep.f.size() != w.n()) {
    throw DataMismatchError("refined rep: arm count mismatch in f");
  }
  for (std::size_t i = 1; i <= w.n(); ++i) {
    const auto& fi = rep.f[i - 1];
    if (fi.size() != static_cast<std::size_t>(w.weights()[i - 1] - 1)) {
      throw DataMismatchError("refined rep: f row length mismatch");
    }
    for (const Rat& x : fi) {
      if (x == 0) {
        throw DataMismatchError("refined rep: refinement scalars must be nonzero");
      }
    }
  }
  if (rep.g == 0) {
    throw DataMismatchError("refined rep: g must be nonzero");
  }

  // Ladder compatibility along each arm, then the defining relations on the
  // full arm products.
  std::vector<Rat> products(w.n(), Rat(1));
  for (std::size_t i = 1; i <= w.n(); ++i) {
    const std::vector<std::size_t> arm = arm_arrows(w, q, i);
    for (std::size_t j = 1; j < arm.size(); ++j) {
      if (rep.w_vals[arm[j]] != rep.f[i - 1][j - 1] * rep.w_vals[arm[0]]) {
        throw DataMismatchError("refined rep: ladder compatibility fails on arm " +
                                std::to_string(i));
      }
    }
    for (std::size_t j = 0; j < arm.size(); ++j) {
      products[i - 1] *= rep.w_vals[arm[j]];
    }
  }
  for (std::size_t i = 3; i <= w.n(); ++i) {
    if (products[i - 1] - products[1] + w.lambda_for_arm(i) * products[0] != 0) {
      throw RelationViolationError("refined rep: arm products violate relation " +
                                   std::to_string(i));
    }
  }
}

RefinedRep rep_from_point(const WplData& w, const LabeledQuiver& q,
                          const std::vector<Rat>& u) {
  require_two_arms(w, "rep_from_point");
  if (u.size() != w.n()) {
    throw DataMismatchError("rep_from_point: expected " + std::to_string(w.n()) +
                            " coordinates");
  }
  for (std::size_t i = 3; i <= w.n(); ++i) {
    const Rat lhs = rat_pow(u[i - 1], Int(w.weights()[i - 1])) -
                    rat_pow(u[1], Int(w.weights()[1])) +
                    w.lambda_for_arm(i) * rat_pow(u[0], Int(w.weights()[0]));
    if (lhs != 0) {
      throw RelationViolationError("rep_from_point: coordinates violate relation " +
                                   std::to_string(i));
    }
  }
  RefinedRep rep = zero_rep(w, q);
  for (std::size_t i = 1; i <= w.n(); ++i) {
    for (std::size_t a : arm_arrows(w, q, i)) {
      rep.w_vals[a] = u[i - 1];
    }
  }
  validate_refined(w, q, rep);
  return rep;
}

StabilityParam default_vartheta(const WplData& w) {
  const std::size_t n_verts = w.vertex_count();
  StabilityParam theta;
  theta.theta.assign(n_verts, Int(1));
  theta.theta[0] = Int(1) - Int(static_cast<std::int64_t>(n_verts));
  return theta;
}

namespace {

/// Scale a nonzero rational direction to primitive integer entries.
RatVec primitive_direction(const RatVec& v) {
  Int denom_lcm(1);
  for (const Rat& x : v) {
    denom_lcm = lcm_int(denom_lcm, boost::multiprecision::denominator(x));
  }
  Int gcd_all(0);
  std::vector<Int> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(denom_lcm);
    scaled[i] = boost::multiprecision::numerator(s);
    gcd_all = boost::multiprecision::gcd(gcd_all, scaled[i]);
  }
  RatVec out(v.size(), Rat(0));
  if (gcd_all == 0) {
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rat(scaled[i] / gcd_all);
  }
  return out;
}

}  // namespace

StabilityResult is_stable(const WplData& w, const LabeledQuiver& q,
                          const RefinedRep& rep, const StabilityParam& theta) {
  validate_refined(w, q, rep);
  const std::size_t n_verts = q.vertices.size();
  if (n_verts > 12) {
    throw SizeError("is_stable: exact ray enumeration is limited to 12 vertices");
  }
  if (theta.theta.size() != n_verts) {
    throw DataMismatchError("is_stable: theta length mismatch");
  }

  // Solution space of the equality constraints b(mu) = 0.
  const RefinementBasis rb = refinement_basis(w);
  RatMat eq;
  for (const IntVec& b : rb.vectors) {
    RatVec row(n_verts);
    for (std::size_t v = 0; v < n_verts; ++v) {
      row[v] = Rat(b[v]);
    }
    eq.push_back(std::move(row));
  }
  const RatMat v_basis = rat_kernel_basis(eq, n_verts);
  const std::size_t d = v_basis.size();
  if (d == 0) {
    return StabilityResult{true, std::nullopt};
  }

  // Express the arrow inequalities and theta in kernel coordinates.
  RatMat ineq;  // rows: mu_{t(a)} - mu_{s(a)} >= 0 for supported arrows
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (rep.w_vals[a] == 0) {
      continue;
    }
    RatVec row(d, Rat(0));
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = v_basis[c][q.arrows[a].dst] - v_basis[c][q.arrows[a].src];
    }
    ineq.push_back(std::move(row));
  }
  RatVec theta_proj(d, Rat(0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t v = 0; v < n_verts; ++v) {
      theta_proj[c] += Rat(theta.theta[v]) * v_basis[c][v];
    }
  }

  auto lift = [&](const RatVec& y) {
    RatVec mu(n_verts, Rat(0));
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t v = 0; v < n_verts; ++v) {
        mu[v] += y[c] * v_basis[c][v];
      }
    }
    return primitive_direction(mu);
  };
  auto in_cone = [&](const RatVec& y) {
    for (const RatVec& row : ineq) {
      Rat dot(0);
      for (std::size_t c = 0; c < d; ++c) {
        dot += row[c] * y[c];
      }
      if (dot < 0) {
        return false;
      }
    }
    return true;
  };
  auto theta_of = [&](const RatVec& y) {
    Rat dot(0);
    for (std::size_t c = 0; c < d; ++c) {
      dot += theta_proj[c] * y[c];
    }
    return dot;
  };

  // Lineality directions satisfy every inequality in both signs, so one of
  // the two signs already meets theta <= 0.
  const RatMat lineality = rat_kernel_basis(ineq, d);
  if (!lineality.empty()) {
    RatVec y = lineality.front();
    if (theta_of(y) > 0) {
      for (Rat& x : y) {
        x = -x;
      }
    }
    return StabilityResult{false, lift(y)};
  }

  // Pointed cone: every extreme ray is cut out by d - 1 independent rows, so
  // enumerate row subsets of that size (for d = 1 the empty subset, whose
  // kernel is the whole line, covering both candidate directions).
  std::vector<std::size_t> subset(d - 1);
  StabilityResult result{true, std::nullopt};
  std::function<std::optional<RatVec>(std::size_t, std::size_t)> find =
      [&](std::size_t pos, std::size_t start) -> std::optional<RatVec> {
    if (pos + 1 == d) {
      RatMat rows;
      for (std::size_t s = 0; s + 1 < d; ++s) {
        rows.push_back(ineq[subset[s]]);
      }
      const RatMat ray = rat_kernel_basis(rows, d);
      if (ray.size() != 1) {
        return std::nullopt;
      }
      for (const bool flip : {false, true}) {
        RatVec y = ray.front();
        if (flip) {
          for (Rat& x : y) {
            x = -x;
          }
        }
        if (in_cone(y) && theta_of(y) <= 0) {
          return y;
        }
      }
      return std::nullopt;
    }
    for (std::size_t r = start; r < ineq.size(); ++r) {
      subset[pos] = r;
      if (auto found = find(pos + 1, r + 1)) {
        return found;
      }
    }
    return std::nullopt;
  };
  if (auto y = find(0, 0)) {
    result.stable = false;
    result.destabilizer = lift(*y);
  }
  return result;
}

bool is_stable_geometric(const WplData& w, const LabeledQuiver& q,
                         const RefinedRep& rep) {
  validate_refined(w, q, rep);
  return std::any_of(rep.w_vals.begin(), rep.w_vals.end(),
                     [](const Rat& x) { return x != 0; });
}

bool is_isomorphic(const WplData& w, const LabeledQuiver& q, const RefinedRep& r1,
                   const RefinedRep& r2) {
  validate_refined(w, q, r1);
  validate_refined(w, q, r2);
  const std::size_t n_verts = q.vertices.size();

  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if ((r1.w_vals[a] == 0) != (r2.w_vals[a] == 0)) {
      return false;
    }
  }

  const RefinementBasis rb = refinement_basis(w);
  IntMat char_cols;  // one row per support coordinate; transposed below
  std::vector<Rat> ratios;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (r1.w_vals[a] == 0) {
      continue;
    }
    IntVec col(n_verts, Int(0));
    col[q.arrows[a].dst] += 1;
    col[q.arrows[a].src] -= 1;
    char_cols.push_back(std::move(col));
    ratios.push_back(r2.w_vals[a] / r1.w_vals[a]);
  }
  for (std::size_t i = 1; i <= w.n(); ++i) {
    for (std::int64_t j = 1; j < w.weights()[i - 1]; ++j) {
      char_cols.push_back(rb.vectors[refinement_index(w, i, j)]);
      ratios.push_back(r2.f[i - 1][static_cast<std::size_t>(j - 1)] /
                       r1.f[i - 1][static_cast<std::size_t>(j - 1)]);
    }
  }
  char_cols.push_back(rb.vectors.back());  // b_0 for g
  ratios.push_back(r2.g / r1.g);

  // Matrix with characters as columns; its integer kernel lists the
  // multiplicative relations the ratios must satisfy.
  const std::size_t s = char_cols.size();
  IntMat m(n_verts, IntVec(s, Int(0)));
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t v = 0; v < n_verts; ++v) {
      m[v][c] = char_cols[c][v];
    }
  }
  for (const IntVec& rel : kernel_basis(m)) {
    Rat prod(1);
    for (std::size_t c = 0; c < s; ++c) {
      prod *= rat_pow(ratios[c], rel[c]);
    }
    if (prod != 1) {
      return false;
    }
  }
  return true;
}

FramedRep build_framed(const WplData& w, const LabeledQuiver& qt,
                       const std::vector<Rat>& v) {
  require_two_arms(w, "build_framed");
  if (w.n() > 3) {
    throw ArityError("build_framed: at most three arms are supported");
  }
  if (v.size() != w.n() + 1) {
    throw DataMismatchError("build_framed: expected " + std::to_string(w.n() + 1) +
                            " framing values");
  }
  if (w.n() == 3) {
    const Rat lhs = rat_pow(v[2], Int(w.weights()[2])) -
                    rat_pow(v[1], Int(w.weights()[1])) +
                    rat_pow(v[0], Int(w.weights()[0]));
    if (lhs != 0) {
      throw RelationViolationError("build_framed: framing point violates the relation");
    }
  }
  FramedRep rep;
  rep.v = v;
  const std::vector<Rat> point(v.begin(), v.end() - 1);
  const Rat t_value = v.back();
  for (const Arrow& a : qt.arrows) {
    rep.w_vals.push_back(eval(w, poly_of(a.label), point, t_value));
  }
  rep.f.assign(qt.arrows.size(), Rat(1));
  rep.g = 1;
  validate_framed(w, qt, rep);
  return rep;
}

void validate_framed(const WplData& w, const LabeledQuiver& qt, const FramedRep& rep) {
  require_two_arms(w, "validate_framed");
  if (w.n() > 3) {
    throw ArityError("validate_framed: at most three arms are supported");
  }
  if (rep.v.size() != w.n() + 1) {
    throw DataMismatchError("framed rep: framing value count mismatch");
  }
  if (rep.w_vals.size() != qt.arrows.size() || rep.f.size() != qt.arrows.size()) {
    throw DataMismatchError("framed rep: arrow scalar count mismatch");
  }
  for (const Rat& x : rep.f) {
    if (x == 0) {
      throw DataMismatchError("framed rep: f scalars must be nonzero");
    }
  }
  if (rep.g == 0) {
    throw DataMismatchError("framed rep: g must be nonzero");
  }
  if (w.n() == 3) {
    const Rat lhs = rat_pow(rep.v[2], Int(w.weights()[2])) -
                    rat_pow(rep.v[1], Int(w.weights()[1])) +
                    rat_pow(rep.v[0], Int(w.weights()[0]));
    if (lhs != 0) {
      throw RelationViolationError("framed rep: framing point violates the relation");
    }
  }
  const std::vector<Rat> point(rep.v.begin(), rep.v.end() - 1);
  const Rat t_value = rep.v.back();
  for (std::size_t a = 0; a < qt.arrows.size(); ++a) {
    const Rat expected = rep.f[a] * eval(w, poly_of(qt.arrows[a].label), point, t_value);
    if (rep.w_vals[a] != expected) {
      throw DataMismatchError("framed rep: arrow scalar differs from f * label(v)");
    }
  }
}

bool is_stable_framed(const WplData& w, const LabeledQuiver& qt, const FramedRep& rep) {
  validate_framed(w, qt, rep);
  for (std::size_t a = 0; a < qt.arrows.size(); ++a) {
    if (qt.arrows[a].label.t_exp == 0 && rep.w_vals[a] != 0) {
      return true;
    }
  }
  return false;
}

bool is_isomorphic_framed(const WplData& w, const LabeledQuiver& qt,
                          const FramedRep& r1, const FramedRep& r2) {
  validate_framed(w, qt, r1);
  validate_framed(w, qt, r2);
  const std::size_t count = w.n() + 1;
  for (std::size_t c = 0; c < count; ++c) {
    if ((r1.v[c] == 0) != (r2.v[c] == 0)) {
      return false;
    }
  }
  std::vector<PicElt> chars;
  std::vector<Rat> ratios;
  for (std::size_t c = 0; c < count; ++c) {
    if (r1.v[c] == 0) {
      continue;
    }
    chars.push_back(c + 1 <= w.n() ? w.x(c + 1) : w.dualizing());
    ratios.push_back(r2.v[c] / r1.v[c]);
  }
  const IntLattice lattice = relation_lattice(w, chars);
  for (const IntVec& rel : lattice.basis) {
    Rat prod(1);
    for (std::size_t c = 0; c < ratios.size(); ++c) {
      prod *= rat_pow(ratios[c], rel[c]);
    }
    if (prod != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace wpl

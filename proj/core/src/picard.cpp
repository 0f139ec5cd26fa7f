#include "wpl/picard.hpp"

#include "wpl/errors.hpp"

#include <algorithm>
#include <string>

namespace wpl {

bool PicElt::is_zero() const {
  if (ell != 0) {
    return false;
  }
  return std::all_of(arm.begin(), arm.end(), [](const Int& a) { return a == 0; });
}

std::int64_t WplData::weight(std::size_t i) const {
  if (i < 1 || i > p_.size()) {
    throw DataMismatchError("weight: arm index out of range");
  }
  return p_[i - 1];
}

Rat WplData::lambda_for_arm(std::size_t i) const {
  if (i < 3 || i > p_.size()) {
    throw DataMismatchError("lambda_for_arm: arm index out of range");
  }
  if (i == 3) {
    return Rat(1);
  }
  return lambda_[i - 4];
}

std::size_t WplData::vertex_count() const {
  std::size_t count = 2;
  for (std::int64_t pi : p_) {
    count += static_cast<std::size_t>(pi - 1);
  }
  return count;
}

PicElt WplData::zero() const {
  return PicElt{Int(0), std::vector<Int>(p_.size(), Int(0))};
}

PicElt WplData::unit() const {
  return PicElt{Int(1), std::vector<Int>(p_.size(), Int(0))};
}

PicElt WplData::x(std::size_t i) const {
  if (i < 1 || i > p_.size()) {
    throw DataMismatchError("x: arm index out of range");
  }
  PicElt d = zero();
  d.arm[i - 1] = 1;
  return d;
}

PicElt WplData::normal_form(const Int& c_coeff, const std::vector<Int>& x_coeffs) const {
  if (x_coeffs.size() != p_.size()) {
    throw DataMismatchError("normal_form: expected " + std::to_string(p_.size()) +
                            " arm coefficients, got " + std::to_string(x_coeffs.size()));
  }
  PicElt d;
  d.ell = c_coeff;
  d.arm.resize(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const Int pi(p_[i]);
    d.arm[i] = pos_mod(x_coeffs[i], pi);
    d.ell += floor_div(x_coeffs[i], pi);
  }
  return d;
}

PicElt WplData::add(const PicElt& a, const PicElt& b) const {
  check(a);
  check(b);
  std::vector<Int> xs(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    xs[i] = a.arm[i] + b.arm[i];
  }
  return normal_form(a.ell + b.ell, xs);
}

PicElt WplData::sub(const PicElt& a, const PicElt& b) const {
  return add(a, neg(b));
}

PicElt WplData::neg(const PicElt& a) const {
  check(a);
  std::vector<Int> xs(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    xs[i] = -a.arm[i];
  }
  return normal_form(-a.ell, xs);
}

PicElt WplData::scale(const Int& m, const PicElt& a) const {
  check(a);
  std::vector<Int> xs(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    xs[i] = m * a.arm[i];
  }
  return normal_form(m * a.ell, xs);
}

PicElt WplData::dualizing() const {
  std::vector<Int> xs(p_.size(), Int(-1));
  return normal_form(Int(static_cast<std::int64_t>(p_.size())) - 2, xs);
}

Int WplData::degree(const PicElt& d) const {
  check(d);
  Int total = d.ell * pbar_;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    total += d.arm[i] * (pbar_ / p_[i]);
  }
  return total;
}

Rat WplData::euler_characteristic() const {
  Rat chi(2);
  for (std::int64_t pi : p_) {
    chi -= Rat(pi - 1, pi);
  }
  return chi;
}

std::optional<Int> WplData::torsion_order(const PicElt& d) const {
  check(d);
  if (degree(d) != 0) {
    return std::nullopt;
  }
  Int bound(1);
  for (std::int64_t pi : p_) {
    bound *= pi;
  }
  PicElt acc = d;
  const PicElt z = zero();
  for (Int m(1); m <= bound; ++m) {
    if (acc == z) {
      return m;
    }
    acc = add(acc, d);
  }
  throw CapExceededError("torsion_order: no period within the group bound");
}

void WplData::check(const PicElt& d) const {
  if (d.arm.size() != p_.size()) {
    throw DataMismatchError("degree class has " + std::to_string(d.arm.size()) +
                            " arm entries, expected " + std::to_string(p_.size()));
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (d.arm[i] < 0 || d.arm[i] >= p_[i]) {
      throw DataMismatchError("degree class arm entry out of normal-form range");
    }
  }
}

WplData make_wpl(const std::vector<Int>& weights, const std::vector<Rat>& lambda) {
  WplData w;
  for (const Int& pi : weights) {
    if (pi < 1) {
      throw WeightError("weights must be positive, got " + pi.str());
    }
    if (pi > 1000000) {
      throw WeightError("weight too large: " + pi.str());
    }
    if (pi > 1) {
      w.p_.push_back(to_int64(pi));
    }
  }
  const std::size_t n = w.p_.size();
  const std::size_t expected = n > 3 ? n - 3 : 0;
  if (lambda.size() != expected) {
    throw LambdaError("expected " + std::to_string(expected) +
                      " interior parameters, got " + std::to_string(lambda.size()));
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0 || lambda[i] == 1) {
      throw LambdaError("interior parameters must avoid the normalized points 0 and 1");
    }
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      if (lambda[i] == lambda[j]) {
        throw LambdaError("interior parameters must be pairwise distinct");
      }
    }
  }
  w.lambda_ = lambda;
  w.pbar_ = Int(1);
  for (std::int64_t pi : w.p_) {
    w.pbar_ = lcm_int(w.pbar_, Int(pi));
  }
  return w;
}

IntLattice relation_lattice(const WplData& w, const std::vector<PicElt>& degrees) {
  const std::size_t n = w.n();
  const std::size_t k = degrees.size();
  for (const PicElt& d : degrees) {
    w.check(d);
  }
  // Coordinates over the free presentation: rows are (x_1, ..., x_n, c);
  // columns are the k degree classes followed by the n defining relations
  // p_i * x_i - c. A combination of degrees vanishes in the group iff it can
  // be matched by a combination of the defining relations.
  IntMat a(n + 1, IntVec(k + n, Int(0)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a[i][j] = degrees[j].arm[i];
    }
    a[n][j] = degrees[j].ell;
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i][k + i] = Int(w.weights()[i]);
    a[n][k + i] = Int(-1);
  }
  IntMat full_kernel = kernel_basis(a);
  IntMat projected;
  projected.reserve(full_kernel.size());
  for (const IntVec& row : full_kernel) {
    projected.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return IntLattice{row_lattice_basis(projected)};
}

}  // namespace wpl

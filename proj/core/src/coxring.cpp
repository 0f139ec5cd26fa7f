#include "wpl/coxring.hpp"

#include "wpl/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace wpl {

namespace {

void check_monomial(const WplData& w, const Monomial& m) {
  if (m.exps.size() != w.n()) {
    throw DataMismatchError("monomial has " + std::to_string(m.exps.size()) +
                            " exponents, expected " + std::to_string(w.n()));
  }
  for (std::int64_t e : m.exps) {
    if (e < 0) {
      throw DataMismatchError("monomial exponent is negative");
    }
  }
  if (m.t_exp < 0) {
    throw DataMismatchError("monomial t-exponent is negative");
  }
}

void require_two_arms(const WplData& w, const char* who) {
  if (w.n() < 2) {
    throw ArityError(std::string(who) + ": needs at least two arms (weights >= 2)");
  }
}

}  // namespace

Poly poly_of(const Monomial& m, const Rat& coeff) {
  Poly p;
  if (coeff != 0) {
    p.emplace(m, coeff);
  }
  return p;
}

PicElt x_degree(const WplData& w, const Monomial& m) {
  check_monomial(w, m);
  std::vector<Int> xs(m.exps.begin(), m.exps.end());
  return w.normal_form(Int(0), xs);
}

PicElt total_degree(const WplData& w, const Monomial& m) {
  PicElt x = x_degree(w, m);
  return w.add(x, w.scale(Int(-m.t_exp), w.dualizing()));
}

bool is_reduced(const WplData& w, const Monomial& m) {
  check_monomial(w, m);
  for (std::size_t i = 2; i < w.n(); ++i) {
    if (m.exps[i] >= w.weights()[i]) {
      return false;
    }
  }
  return true;
}

Poly reduce(const WplData& w, const Poly& p) {
  Poly out;
  std::vector<std::pair<Monomial, Rat>> work(p.begin(), p.end());
  while (!work.empty()) {
    auto [m, coeff] = std::move(work.back());
    work.pop_back();
    if (coeff == 0) {
      continue;
    }
    check_monomial(w, m);
    std::size_t hot = w.n();
    for (std::size_t i = 2; i < w.n(); ++i) {
      if (m.exps[i] >= w.weights()[i]) {
        hot = i;
        break;
      }
    }
    if (hot == w.n()) {
      auto [it, inserted] = out.emplace(m, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
          out.erase(it);
        }
      }
      continue;
    }
    // X_hot^{p_hot} == X_2^{p_2} - lambda_hot * X_1^{p_1}
    const Rat lambda = w.lambda_for_arm(hot + 1);
    Monomial base = m;
    base.exps[hot] -= w.weights()[hot];

    Monomial first = base;
    first.exps[1] += w.weights()[1];
    work.emplace_back(std::move(first), coeff);

    if (lambda != 0) {
      Monomial second = base;
      second.exps[0] += w.weights()[0];
      work.emplace_back(std::move(second), -lambda * coeff);
    }
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) {
    auto [it, inserted] = out.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        out.erase(it);
      }
    }
  }
  return out;
}

Poly poly_scale(const Rat& c, const Poly& a) {
  Poly out;
  if (c == 0) {
    return out;
  }
  for (const auto& [m, coeff] : a) {
    out.emplace(m, c * coeff);
  }
  return out;
}

Poly poly_mul(const WplData& w, const Poly& a, const Poly& b) {
  Poly raw;
  for (const auto& [ma, ca] : a) {
    check_monomial(w, ma);
    for (const auto& [mb, cb] : b) {
      check_monomial(w, mb);
      Monomial m;
      m.exps.resize(w.n());
      for (std::size_t i = 0; i < w.n(); ++i) {
        m.exps[i] = ma.exps[i] + mb.exps[i];
      }
      m.t_exp = ma.t_exp + mb.t_exp;
      auto [it, inserted] = raw.emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) {
          raw.erase(it);
        }
      }
    }
  }
  return reduce(w, raw);
}

Int section_dim(const WplData& w, const PicElt& d) {
  w.check(d);
  return d.ell >= 0 ? d.ell + 1 : Int(0);
}

std::vector<Monomial> section_basis(const WplData& w, const PicElt& d) {
  require_two_arms(w, "section_basis");
  w.check(d);
  std::vector<Monomial> basis;
  if (d.ell < 0) {
    return basis;
  }
  const std::int64_t ell = to_int64(d.ell);
  for (std::int64_t s = 0; s <= ell; ++s) {
    Monomial m;
    m.exps.resize(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) {
      m.exps[i] = to_int64(d.arm[i]);
    }
    m.exps[0] += s * w.weights()[0];
    m.exps[1] += (ell - s) * w.weights()[1];
    basis.push_back(std::move(m));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Monomial> section_basis_bruteforce(const WplData& w, const PicElt& d) {
  require_two_arms(w, "section_basis_bruteforce");
  w.check(d);
  std::vector<Monomial> found;
  const Int target = w.degree(d);
  if (target < 0) {
    return found;
  }
  const std::size_t n = w.n();
  std::vector<std::int64_t> exps(n, 0);
  std::function<void(std::size_t, Int)> walk = [&](std::size_t i, Int remaining) {
    if (i == n) {
      if (remaining == 0) {
        Monomial m{exps, 0};
        if (x_degree(w, m) == d) {
          found.push_back(std::move(m));
        }
      }
      return;
    }
    const Int step = w.pbar() / w.weights()[i];
    const std::int64_t cap =
        i >= 2 ? w.weights()[i] - 1 : to_int64(floor_div(remaining, step));
    for (std::int64_t e = 0; e <= cap; ++e) {
      const Int used = step * e;
      if (used > remaining) {
        break;
      }
      exps[i] = e;
      walk(i + 1, remaining - used);
    }
    exps[i] = 0;
  };
  walk(0, target);
  std::sort(found.begin(), found.end());
  return found;
}

Rat eval(const WplData& w, const Poly& p, const std::vector<Rat>& point,
         const Rat& t_value) {
  if (point.size() != w.n()) {
    throw DataMismatchError("eval: point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(w.n()));
  }
  Rat total(0);
  for (const auto& [m, coeff] : p) {
    check_monomial(w, m);
    Rat term = coeff;
    for (std::size_t i = 0; i < w.n(); ++i) {
      term *= rat_pow(point[i], Int(m.exps[i]));
    }
    term *= rat_pow(t_value, Int(m.t_exp));
    total += term;
  }
  return total;
}

RatVec coordinates(const Poly& q, const std::vector<Monomial>& basis) {
  RatVec coords(basis.size(), Rat(0));
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i], i);
  }
  for (const auto& [m, c] : q) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw DataMismatchError("coordinates: polynomial has a term outside the basis");
    }
    coords[it->second] = c;
  }
  return coords;
}

}  // namespace wpl

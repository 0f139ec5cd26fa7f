#include "wpl/tilting.hpp"

#include "wpl/canonical_algebra.hpp"
#include "wpl/errors.hpp"

#include <algorithm>

namespace wpl {

std::string AdeLabel::str() const {
  switch (series) {
    case AdeSeries::A:
      return "A" + index.str();
    case AdeSeries::D:
      return "D" + index.str();
    case AdeSeries::E:
      return "E" + index.str();
  }
  throw Error("AdeLabel: invalid series");
}

std::string to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::DegreeCutoff:
      return "degree_cutoff";
    case TerminationReason::TorsionPeriod:
      return "torsion_period";
    case TerminationReason::WitnessFound:
      return "witness_found";
  }
  throw Error("TerminationReason: invalid value");
}

WeightClass classify(const WplData& w) {
  const Rat chi = w.euler_characteristic();
  if (chi == 0) {
    return WeightClass{WeightKind::Euclidean, std::nullopt};
  }
  if (chi < 0) {
    return WeightClass{WeightKind::Hyperbolic, std::nullopt};
  }
  std::vector<std::int64_t> p = w.weights();
  std::sort(p.begin(), p.end());
  AdeLabel label;
  if (p.size() <= 2) {
    // With at most two weights above 1 the tuple reads (1, p, q); its label
    // index is p + q with missing entries counted as 1.
    label.series = AdeSeries::A;
    Int sum(2 - static_cast<std::int64_t>(p.size()));
    for (std::int64_t pi : p) {
      sum += pi;
    }
    label.index = sum;
  } else if (p.size() == 3 && p[0] == 2 && p[1] == 2) {
    label.series = AdeSeries::D;
    label.index = Int(p[2] + 2);
  } else if (p.size() == 3 && p[0] == 2 && p[1] == 3 && p[2] <= 5) {
    label.series = AdeSeries::E;
    label.index = Int(p[2] + 3);
  } else {
    throw Error("classify: positive Euler characteristic outside the known list");
  }
  return WeightClass{WeightKind::Spherical, label};
}

namespace {

Ext1Witness make_term(const WplData& w, const PicElt& degree, std::int64_t k) {
  Ext1Witness term;
  term.k = k;
  term.degree = degree;
  // Fewer than two arms has no monomial model; the degree alone stands then.
  if (w.n() >= 2) {
    term.monomials = section_basis(w, degree);
  }
  return term;
}

}  // namespace

Ext1Sum pullback_ext1_sum(const WplData& w, const PicElt& deg_i, const PicElt& deg_j,
                          std::optional<Int> k_cap) {
  w.check(deg_i);
  w.check(deg_j);
  const PicElt omega = w.dualizing();
  const Int delta_omega = w.degree(omega);
  const PicElt diff = w.sub(deg_i, deg_j);

  Ext1Sum out;
  out.total = 0;

  auto term_degree = [&](const Int& twist) {
    return w.add(diff, w.scale(twist, omega));
  };
  auto check_cap = [&](const Int& twist) {
    if (k_cap && twist > *k_cap + 1) {
      throw CapExceededError("ext1 scan passed the requested cap at twist " + twist.str());
    }
  };

  if (delta_omega < 0) {
    // Degrees of successive terms drop strictly; stop below zero.
    for (Int twist(1);; ++twist) {
      check_cap(twist);
      const PicElt arg = term_degree(twist);
      if (w.degree(arg) < 0) {
        break;
      }
      const Int dim = section_dim(w, arg);
      if (dim > 0) {
        out.total += dim;
        if (!out.first_nonzero) {
          out.first_nonzero = make_term(w, arg, to_int64(twist - 1));
        }
      }
    }
    out.infinite = false;
    out.certificate = TerminationReason::DegreeCutoff;
    return out;
  }

  if (delta_omega == 0) {
    // The dualizing class is torsion; one period decides the whole sum.
    const Int period = w.torsion_order(omega).value();
    for (Int twist(1); twist <= period; ++twist) {
      check_cap(twist);
      const PicElt arg = term_degree(twist);
      const Int dim = section_dim(w, arg);
      if (dim > 0) {
        out.infinite = true;
        out.first_nonzero = make_term(w, arg, to_int64(twist - 1));
        out.certificate = TerminationReason::WitnessFound;
        return out;
      }
    }
    out.infinite = false;
    out.total = 0;
    out.certificate = TerminationReason::TorsionPeriod;
    return out;
  }

  // Growing degrees: a nonzero term must appear by the time the argument
  // degree clears (n-1) * pbar, because a normal form with that degree has a
  // non-negative free part.
  const Int d0 = w.degree(diff);
  const Int n_int(static_cast<std::int64_t>(w.n()));
  const Int guaranteed =
      floor_div((n_int + 1) * w.pbar() + abs(d0), delta_omega) + 2;
  for (Int twist(1); twist <= guaranteed; ++twist) {
    check_cap(twist);
    const PicElt arg = term_degree(twist);
    const Int dim = section_dim(w, arg);
    if (dim > 0) {
      out.infinite = true;
      out.first_nonzero = make_term(w, arg, to_int64(twist - 1));
      out.certificate = TerminationReason::WitnessFound;
      return out;
    }
  }
  throw CapExceededError("ext1 scan exceeded the guaranteed witness bound");
}

Ext1Sum ext1_dim_K(const WplData& w, std::size_t i, std::size_t j,
                   std::optional<Int> k_cap) {
  const std::vector<PicElt> degs = tilting_degrees(w);
  if (i >= degs.size() || j >= degs.size()) {
    throw DataMismatchError("ext1_dim_K: vertex index out of range");
  }
  return pullback_ext1_sum(w, degs[i], degs[j], k_cap);
}

AcyclicityVerdict is_pullback_acyclic(const WplData& w) {
  AcyclicityVerdict verdict;
  verdict.classification = classify(w);
  const std::vector<PicElt> degs = tilting_degrees(w);
  const std::size_t n_verts = degs.size();

  verdict.acyclic = true;
  for (std::size_t step = 0; step < n_verts && verdict.acyclic; ++step) {
    const std::size_t i = n_verts - 1 - step;  // sink summand first
    for (std::size_t j = 0; j < n_verts; ++j) {
      const Ext1Sum sum = pullback_ext1_sum(w, degs[i], degs[j]);
      if (sum.infinite || sum.total > 0) {
        verdict.acyclic = false;
        AcyclicityWitness wit;
        wit.i = i;
        wit.j = j;
        wit.k = sum.first_nonzero->k;
        wit.degree = sum.first_nonzero->degree;
        wit.monomials = sum.first_nonzero->monomials;
        verdict.witness = std::move(wit);
        verdict.certificate = TerminationReason::WitnessFound;
        break;
      }
    }
  }

  if (verdict.acyclic) {
    verdict.certificate = verdict.classification.kind == WeightKind::Euclidean
                              ? TerminationReason::TorsionPeriod
                              : TerminationReason::DegreeCutoff;
  }

  const bool expect_acyclic =
      verdict.classification.kind == WeightKind::Spherical &&
      verdict.classification.ade &&
      verdict.classification.ade->series == AdeSeries::A;
  verdict.matches_classification = verdict.acyclic == expect_acyclic;
  return verdict;
}

}  // namespace wpl

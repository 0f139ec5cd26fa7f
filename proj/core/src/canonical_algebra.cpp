#include "wpl/canonical_algebra.hpp"

#include "wpl/errors.hpp"
#include "wpl/ratlinalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace wpl {

namespace {

void require_two_arms(const WplData& w, const char* who) {
  if (w.n() < 2) {
    throw ArityError(std::string(who) + ": needs at least two arms (weights >= 2)");
  }
}

Monomial unit_monomial(const WplData& w) {
  return Monomial{std::vector<std::int64_t>(w.n(), 0), 0};
}

Monomial var_monomial(const WplData& w, std::size_t arm) {
  Monomial m = unit_monomial(w);
  m.exps[arm - 1] = 1;
  return m;
}

}  // namespace

std::vector<PicElt> tilting_degrees(const WplData& w) {
  std::vector<PicElt> degs;
  degs.push_back(w.zero());
  for (std::size_t i = 1; i <= w.n(); ++i) {
    for (std::int64_t j = 1; j < w.weights()[i - 1]; ++j) {
      degs.push_back(w.scale(Int(j), w.x(i)));
    }
  }
  degs.push_back(w.unit());
  return degs;
}

std::size_t arm_vertex_index(const WplData& w, std::size_t arm, std::int64_t j) {
  if (arm < 1 || arm > w.n()) {
    throw DataMismatchError("arm_vertex_index: arm out of range");
  }
  if (j < 1 || j >= w.weights()[arm - 1]) {
    throw DataMismatchError("arm_vertex_index: position out of range");
  }
  std::size_t idx = 1;
  for (std::size_t k = 1; k < arm; ++k) {
    idx += static_cast<std::size_t>(w.weights()[k - 1] - 1);
  }
  return idx + static_cast<std::size_t>(j - 1);
}

LabeledQuiver canonical_quiver(const WplData& w) {
  require_two_arms(w, "canonical_quiver");
  LabeledQuiver q;
  q.vertices = tilting_degrees(w);
  const std::size_t sink = q.vertices.size() - 1;
  for (std::size_t i = 1; i <= w.n(); ++i) {
    const std::int64_t p = w.weights()[i - 1];
    const Monomial label = var_monomial(w, i);
    for (std::int64_t j = 0; j < p; ++j) {
      const std::size_t src = j == 0 ? 0 : arm_vertex_index(w, i, j);
      const std::size_t dst = j == p - 1 ? sink : arm_vertex_index(w, i, j + 1);
      q.arrows.push_back(Arrow{src, dst, label});
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
  });
  return q;
}

namespace {

/// Arrow indices along arm i from source to sink, in path order.
std::vector<std::size_t> arm_path(const WplData& w, const LabeledQuiver& q,
                                  std::size_t arm) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_ends;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    by_ends[{q.arrows[a].src, q.arrows[a].dst}] = a;
  }
  const std::size_t sink = q.vertices.size() - 1;
  const std::int64_t p = w.weights()[arm - 1];
  std::vector<std::size_t> path;
  for (std::int64_t j = 0; j < p; ++j) {
    const std::size_t src = j == 0 ? 0 : arm_vertex_index(w, arm, j);
    const std::size_t dst = j == p - 1 ? sink : arm_vertex_index(w, arm, j + 1);
    auto it = by_ends.find({src, dst});
    if (it == by_ends.end()) {
      throw DataMismatchError("arm_path: quiver does not contain the arm arrow");
    }
    path.push_back(it->second);
  }
  return path;
}

}  // namespace

std::vector<std::size_t> arm_arrows(const WplData& w, const LabeledQuiver& q,
                                    std::size_t arm) {
  if (arm < 1 || arm > w.n()) {
    throw DataMismatchError("arm_arrows: arm out of range");
  }
  return arm_path(w, q, arm);
}

std::vector<PathRelation> canonical_relations(const WplData& w, const LabeledQuiver& q) {
  require_two_arms(w, "canonical_relations");
  std::vector<PathRelation> rels;
  const std::size_t sink = q.vertices.size() - 1;
  for (std::size_t i = 3; i <= w.n(); ++i) {
    PathRelation rel;
    rel.src = 0;
    rel.dst = sink;
    rel.t = 0;
    rel.terms.emplace_back(Rat(1), arm_path(w, q, i));
    rel.terms.emplace_back(Rat(-1), arm_path(w, q, 2));
    rel.terms.emplace_back(w.lambda_for_arm(i), arm_path(w, q, 1));
    rels.push_back(std::move(rel));
  }
  return rels;
}

Int hom_dim(const WplData& w, const PicElt& a, const PicElt& b) {
  return section_dim(w, w.sub(b, a));
}

Int ext1_dim(const WplData& w, const PicElt& a, const PicElt& b) {
  return section_dim(w, w.add(w.sub(a, b), w.dualizing()));
}

std::vector<std::vector<std::size_t>> enumerate_paths(const LabeledQuiver& q,
                                                      std::size_t src,
                                                      std::size_t dst) {
  if (src >= q.vertices.size() || dst >= q.vertices.size()) {
    throw DataMismatchError("enumerate_paths: vertex out of range");
  }
  std::vector<std::vector<std::size_t>> out_arrows(q.vertices.size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    out_arrows[q.arrows[a].src].push_back(a);
  }
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> current;
  std::vector<bool> on_stack(q.vertices.size(), false);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (on_stack[v]) {
      throw CycleDegreeError("enumerate_paths: directed cycle encountered");
    }
    if (v == dst) {
      paths.push_back(current);
      // Keep walking: dst may have outgoing arrows, and a path may revisit
      // dst only through a cycle, which the on_stack guard reports.
    }
    on_stack[v] = true;
    for (std::size_t a : out_arrows[v]) {
      current.push_back(a);
      dfs(q.arrows[a].dst);
      current.pop_back();
    }
    on_stack[v] = false;
  };
  dfs(src);
  return paths;
}

Poly path_poly(const WplData& w, const LabeledQuiver& q,
               const std::vector<std::size_t>& path) {
  Poly acc = poly_of(Monomial{std::vector<std::int64_t>(w.n(), 0), 0});
  for (std::size_t a : path) {
    if (a >= q.arrows.size()) {
      throw DataMismatchError("path_poly: arrow index out of range");
    }
    acc = poly_mul(w, acc, poly_of(q.arrows[a].label));
  }
  return acc;
}

const PairReport& EndAlgebraReport::pair(std::size_t src, std::size_t dst) const {
  for (const PairReport& pr : pairs) {
    if (pr.src == src && pr.dst == dst) {
      return pr;
    }
  }
  throw DataMismatchError("EndAlgebraReport: pair not present");
}

EndAlgebraReport verify_end_algebra(const WplData& w) {
  require_two_arms(w, "verify_end_algebra");
  const LabeledQuiver q = canonical_quiver(w);
  const std::size_t nverts = q.vertices.size();
  EndAlgebraReport report;
  report.surjective = true;
  report.relations_span_kernel = true;

  for (std::size_t i = 0; i < nverts; ++i) {
    for (std::size_t j = 0; j < nverts; ++j) {
      const PicElt d = w.sub(q.vertices[j], q.vertices[i]);
      const std::vector<Monomial> basis = section_basis(w, d);
      const auto paths = enumerate_paths(q, i, j);

      RatMat images;
      images.reserve(paths.size());
      for (const auto& path : paths) {
        images.push_back(coordinates(path_poly(w, q, path), basis));
      }
      RatMat copy = images;
      const std::size_t rank = rref(copy).size();

      PairReport pr;
      pr.src = i;
      pr.dst = j;
      pr.path_count = paths.size();
      pr.hom_dimension = Int(static_cast<std::int64_t>(basis.size()));
      pr.kernel_dim = paths.size() - rank;
      pr.surjective = rank == basis.size();
      if (!pr.surjective) {
        report.surjective = false;
      }

      if (i == 0 && j == nverts - 1) {
        // The defining relations must span the kernel of the path map.
        std::map<std::vector<std::size_t>, std::size_t> path_index;
        for (std::size_t t = 0; t < paths.size(); ++t) {
          path_index.emplace(paths[t], t);
        }
        const auto rels = canonical_relations(w, q);
        RowSpace rel_span(paths.size());
        for (const PathRelation& rel : rels) {
          RatVec vec(paths.size(), Rat(0));
          Poly combo;
          for (const auto& [coeff, path] : rel.terms) {
            auto it = path_index.find(path);
            if (it == path_index.end()) {
              throw DataMismatchError("verify_end_algebra: relation path missing");
            }
            vec[it->second] += coeff;
            combo = poly_add(combo, poly_scale(coeff, path_poly(w, q, path)));
          }
          if (!combo.empty()) {
            report.relations_span_kernel = false;
          }
          rel_span.insert(std::move(vec));
        }
        if (rel_span.rank() != pr.kernel_dim) {
          report.relations_span_kernel = false;
        }
      }
      report.pairs.push_back(std::move(pr));
    }
  }
  return report;
}

}  // namespace wpl

#include "wpl/bundle_quiver.hpp"

#include "wpl/errors.hpp"
#include "wpl/ratlinalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace wpl {

namespace {

void require_two_arms(const WplData& w, const char* who) {
  if (w.n() < 2) {
    throw ArityError(std::string(who) + ": needs at least two arms (weights >= 2)");
  }
}

Poly unit_poly(const WplData& w) {
  return poly_of(Monomial{std::vector<std::int64_t>(w.n(), 0), 0});
}

/// Topological order of the vertices under the twist-zero arrows; throws
/// CycleDegreeError if those arrows admit a directed cycle.
std::vector<std::size_t> zero_twist_topo_order(const LabeledQuiver& q) {
  const std::size_t n = q.vertices.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> outs(n);
  for (const Arrow& a : q.arrows) {
    if (a.label.t_exp == 0) {
      outs[a.src].push_back(a.dst);
      ++indegree[a.dst];
    }
  }
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) {
      ready.push(v);
    }
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    order.push_back(v);
    for (std::size_t u : outs[v]) {
      if (--indegree[u] == 0) {
        ready.push(u);
      }
    }
  }
  if (order.size() != n) {
    throw CycleDegreeError("twist-zero arrows contain a directed cycle");
  }
  return order;
}

}  // namespace

GradedHomTable::GradedHomTable(const WplData& w, std::vector<PicElt> vertex_degrees,
                               std::int64_t k_max)
    : w_(&w), degrees_(std::move(vertex_degrees)), k_max_(k_max) {
  if (k_max < 0) {
    throw DataMismatchError("GradedHomTable: negative twist window");
  }
  require_two_arms(w, "GradedHomTable");
  for (const PicElt& d : degrees_) {
    w.check(d);
  }
  const std::size_t n = degrees_.size();
  table_.resize(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    auto& layer = table_[static_cast<std::size_t>(k)];
    layer.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      layer[i].resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Monomial> basis = section_basis(w, piece_degree(i, j, k));
        for (Monomial& m : basis) {
          m.t_exp = k;
        }
        layer[i][j] = std::move(basis);
      }
    }
  }
}

const std::vector<Monomial>& GradedHomTable::basis(std::size_t i, std::size_t j,
                                                   std::int64_t k) const {
  if (i >= degrees_.size() || j >= degrees_.size() || k < 0 || k > k_max_) {
    throw DataMismatchError("GradedHomTable::basis: index out of range");
  }
  return table_[static_cast<std::size_t>(k)][i][j];
}

PicElt GradedHomTable::piece_degree(std::size_t i, std::size_t j,
                                    std::int64_t k) const {
  if (i >= degrees_.size() || j >= degrees_.size()) {
    throw DataMismatchError("GradedHomTable::piece_degree: index out of range");
  }
  return w_->add(w_->sub(degrees_[j], degrees_[i]),
                 w_->scale(Int(-k), w_->dualizing()));
}

std::int64_t default_k_max(const WplData& w) {
  return 2 * to_int64(w.pbar());
}

BundleQuiverExtraction extract_bundle_quiver(const WplData& w, std::int64_t k_max) {
  require_two_arms(w, "extract_bundle_quiver");
  if (k_max < 0) {
    throw DataMismatchError("extract_bundle_quiver: negative twist window");
  }
  const std::vector<PicElt> degs = tilting_degrees(w);
  const std::size_t n_verts = degs.size();
  GradedHomTable table(w, degs, k_max);

  BundleQuiverExtraction ex;
  ex.quiver.vertices = degs;
  ex.k_max_used = k_max;

  for (std::int64_t k = 0; k <= k_max; ++k) {
    for (std::size_t i = 0; i < n_verts; ++i) {
      for (std::size_t j = 0; j < n_verts; ++j) {
        if (k == 0 && i == j) {
          continue;  // identity piece, not in the radical
        }
        const std::vector<Monomial>& basis = table.basis(i, j, k);
        if (basis.empty()) {
          continue;
        }
        // Span of composites of radical pieces inside this piece. Distinct
        // factor pairs often share the same raw product monomial, so reduce
        // each raw product once.
        RowSpace span(basis.size());
        std::set<Monomial> seen_raw;
        for (std::size_t v = 0; v < n_verts && !span.full(); ++v) {
          for (std::int64_t k1 = 0; k1 <= k && !span.full(); ++k1) {
            const std::int64_t k2 = k - k1;
            if (k1 == 0 && v == i) {
              continue;  // identity on the left
            }
            if (k2 == 0 && v == j) {
              continue;  // identity on the right
            }
            const auto& left = table.basis(i, v, k1);
            const auto& right = table.basis(v, j, k2);
            for (const Monomial& m1 : left) {
              for (const Monomial& m2 : right) {
                Monomial raw;
                raw.exps.resize(w.n());
                for (std::size_t e = 0; e < w.n(); ++e) {
                  raw.exps[e] = m1.exps[e] + m2.exps[e];
                }
                raw.t_exp = k;
                if (!seen_raw.insert(raw).second) {
                  continue;
                }
                span.insert(coordinates(reduce(w, poly_of(raw)), basis));
                if (span.full()) {
                  break;
                }
              }
              if (span.full()) {
                break;
              }
            }
          }
        }

        PieceInfo info;
        info.i = i;
        info.j = j;
        info.k = k;
        info.dim = basis.size();
        info.radical_sq_dim = span.rank();

        // Primitive arrows: canonically least monomials completing the span.
        for (std::size_t b = 0; b < basis.size() && !span.full(); ++b) {
          RatVec unit(basis.size(), Rat(0));
          unit[b] = 1;
          if (span.insert(std::move(unit))) {
            ex.quiver.arrows.push_back(Arrow{i, j, basis[b]});
            ++info.arrows_added;
          }
        }
        ex.pieces.push_back(std::move(info));
      }
    }
  }

  std::sort(ex.quiver.arrows.begin(), ex.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) {
              return std::tie(a.src, a.dst, a.label) <
                     std::tie(b.src, b.dst, b.label);
            });

  // Certify the window: arrows must generate everything scanned and must sit
  // in the lower half of the window, so that no later primitive could hide
  // just beyond it.
  bool arrows_low = k_max >= 1;
  for (const Arrow& a : ex.quiver.arrows) {
    if (2 * a.label.t_exp > k_max) {
      arrows_low = false;
      break;
    }
  }
  ex.closure_verified = arrows_low && check_generation(w, ex, k_max).ok;
  return ex;
}

GenerationCheck check_generation(const WplData& w, const BundleQuiverExtraction& ex,
                                 std::int64_t k_check) {
  require_two_arms(w, "check_generation");
  if (k_check < 0) {
    throw DataMismatchError("check_generation: negative twist window");
  }
  const LabeledQuiver& q = ex.quiver;
  const std::size_t n_verts = q.vertices.size();
  GradedHomTable table(w, q.vertices, k_check);
  const std::vector<std::size_t> topo = zero_twist_topo_order(q);

  // Arrows grouped by destination, twist-zero ones marked.
  std::vector<std::vector<std::size_t>> in_arrows(n_verts);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].label.t_exp <= k_check) {
      in_arrows[q.arrows[a].dst].push_back(a);
    }
  }

  GenerationCheck result;
  result.ok = true;

  for (std::size_t i = 0; i < n_verts; ++i) {
    // reached[j][k]: span of path images from i within piece (i, j, k).
    std::vector<std::vector<RowSpace>> reached(n_verts);
    for (std::size_t j = 0; j < n_verts; ++j) {
      for (std::int64_t k = 0; k <= k_check; ++k) {
        reached[j].emplace_back(table.basis(i, j, k).size());
      }
    }

    for (std::int64_t k = 0; k <= k_check; ++k) {
      for (std::size_t j : topo) {
        auto& space = reached[j][static_cast<std::size_t>(k)];
        if (i == j && k == 0) {
          if (!table.basis(i, i, 0).empty()) {
            RatVec unit(table.basis(i, i, 0).size(), Rat(0));
            unit[0] = 1;  // the identity section
            space.insert(std::move(unit));
          }
          continue;
        }
        const auto& basis = table.basis(i, j, k);
        if (basis.empty()) {
          continue;
        }
        for (std::size_t a_idx : in_arrows[j]) {
          const Arrow& a = q.arrows[a_idx];
          const std::int64_t ka = a.label.t_exp;
          if (ka > k) {
            continue;
          }
          const auto& src_basis = table.basis(i, a.src, k - ka);
          const auto& src_space = reached[a.src][static_cast<std::size_t>(k - ka)];
          for (const auto& [pivot, row] : src_space.rows()) {
            Poly element;
            for (std::size_t t = 0; t < row.size(); ++t) {
              if (row[t] != 0) {
                element = poly_add(element, poly_of(src_basis[t], row[t]));
              }
            }
            const Poly prod = poly_mul(w, element, poly_of(a.label));
            space.insert(coordinates(prod, basis));
            if (space.full()) {
              break;
            }
          }
          if (space.full()) {
            break;
          }
        }
      }
    }

    for (std::size_t j = 0; j < n_verts; ++j) {
      for (std::int64_t k = 0; k <= k_check; ++k) {
        const auto& basis = table.basis(i, j, k);
        const auto& space = reached[j][static_cast<std::size_t>(k)];
        if (space.rank() == basis.size()) {
          continue;
        }
        result.ok = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
          RatVec unit(basis.size(), Rat(0));
          unit[b] = 1;
          if (!space.contains(std::move(unit))) {
            result.unreached.push_back(GenerationWitness{i, j, k, basis[b]});
          }
        }
      }
    }
  }
  return result;
}

std::vector<std::vector<std::size_t>> enumerate_paths_with_twist(
    const LabeledQuiver& q, std::size_t src, std::size_t dst, std::int64_t k,
    std::size_t cap) {
  if (src >= q.vertices.size() || dst >= q.vertices.size()) {
    throw DataMismatchError("enumerate_paths_with_twist: vertex out of range");
  }
  if (k < 0) {
    throw DataMismatchError("enumerate_paths_with_twist: negative twist");
  }
  zero_twist_topo_order(q);  // validates the positive-cycle precondition

  std::vector<std::vector<std::size_t>> outs(q.vertices.size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    outs[q.arrows[a].src].push_back(a);
  }

  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t v,
                                                           std::int64_t used) {
    if (v == dst && used == k) {
      if (paths.size() >= cap) {
        throw PathCapError("enumerate_paths_with_twist: more than " +
                           std::to_string(cap) + " paths");
      }
      paths.push_back(current);
    }
    for (std::size_t a : outs[v]) {
      const std::int64_t ka = q.arrows[a].label.t_exp;
      if (used + ka > k) {
        continue;
      }
      current.push_back(a);
      dfs(q.arrows[a].dst, used + ka);
      current.pop_back();
    }
  };
  dfs(src, 0);
  return paths;
}

std::vector<PieceRelations> extract_relations(const WplData& w,
                                              const BundleQuiverExtraction& ex,
                                              const RelationExtractionOptions& opts) {
  require_two_arms(w, "extract_relations");
  if (opts.require_closure && !ex.closure_verified) {
    throw CertificateError(
        "extract_relations: extraction window was not certified closed");
  }
  std::int64_t max_twist = 0;
  for (const Arrow& a : ex.quiver.arrows) {
    max_twist = std::max(max_twist, a.label.t_exp);
  }
  const std::int64_t k_limit = opts.k_limit.value_or(2 * max_twist);
  if (k_limit < 0) {
    throw DataMismatchError("extract_relations: negative twist limit");
  }

  const LabeledQuiver& q = ex.quiver;
  const std::size_t n_verts = q.vertices.size();
  GradedHomTable table(w, q.vertices, k_limit);

  std::vector<PieceRelations> out;
  for (std::int64_t k = 0; k <= k_limit; ++k) {
    for (std::size_t i = 0; i < n_verts; ++i) {
      for (std::size_t j = 0; j < n_verts; ++j) {
        const auto paths =
            enumerate_paths_with_twist(q, i, j, k, opts.path_cap);
        if (paths.size() < 2) {
          continue;  // a lone path cannot carry a relation (images are nonzero)
        }
        const auto& basis = table.basis(i, j, k);
        // Matrix of the path map, one column per path.
        RatMat a_mat(basis.size(), RatVec(paths.size(), Rat(0)));
        for (std::size_t p = 0; p < paths.size(); ++p) {
          const RatVec coords =
              coordinates(path_poly(w, q, paths[p]), basis);
          for (std::size_t r = 0; r < basis.size(); ++r) {
            a_mat[r][p] = coords[r];
          }
        }
        const RatMat kernel = rat_kernel_basis(a_mat, paths.size());
        if (kernel.empty()) {
          continue;
        }
        PieceRelations pr;
        pr.src = i;
        pr.dst = j;
        pr.k = k;
        pr.path_count = paths.size();
        for (const RatVec& vec : kernel) {
          PathRelation rel;
          rel.src = i;
          rel.dst = j;
          rel.t = k;
          for (std::size_t p = 0; p < paths.size(); ++p) {
            if (vec[p] != 0) {
              rel.terms.emplace_back(vec[p], paths[p]);
            }
          }
          pr.relations.push_back(std::move(rel));
        }
        out.push_back(std::move(pr));
      }
    }
  }
  return out;
}

}  // namespace wpl

#include "wpl/export.hpp"

#include "wpl/errors.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace wpl {

namespace {

using nlohmann::json;

void append_power(std::string& out, const std::string& base, const Int& exp) {
  if (!out.empty()) {
    out += '*';
  }
  out += base;
  if (exp != 1) {
    out += '^';
    out += exp.str();
  }
}

/// One additive term like "2c" or "-x3"; sign carried by the coefficient.
std::string additive_term(const Int& coeff, const std::string& symbol) {
  if (coeff == 1) {
    return symbol;
  }
  if (coeff == -1) {
    return "-" + symbol;
  }
  return coeff.str() + symbol;
}

std::vector<std::string> canonical_vertex_names(const WplData& w) {
  std::vector<std::string> names;
  names.reserve(w.vertex_count());
  names.emplace_back("v0");
  for (std::size_t i = 1; i <= w.n(); ++i) {
    for (std::int64_t j = 1; j < w.weights()[i - 1]; ++j) {
      names.push_back("v" + std::to_string(i) + std::to_string(j));
    }
  }
  names.emplace_back("v1");
  const std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) {
    throw Error("vertex_name: identifiers collide for these weights");
  }
  return names;
}

void require_canonical_vertices(const WplData& w, const LabeledQuiver& q,
                                const char* who) {
  if (q.vertices != tilting_degrees(w)) {
    throw DataMismatchError(std::string(who) +
                            ": quiver is not on the canonical vertex set");
  }
}

json degree_to_json(const PicElt& d) {
  json arm = json::array();
  for (const Int& a : d.arm) {
    arm.push_back(to_int64(a));
  }
  return json{{"ell", to_int64(d.ell)}, {"arm", std::move(arm)}};
}

PicElt degree_from_json(const json& j) {
  PicElt d;
  d.ell = Int(j.at("ell").get<std::int64_t>());
  for (const auto& a : j.at("arm")) {
    d.arm.emplace_back(a.get<std::int64_t>());
  }
  return d;
}

}  // namespace

std::string render_monomial(const Monomial& m) {
  std::string out;
  if (m.t_exp != 0) {
    append_power(out, "t", Int(m.t_exp));
  }
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] != 0) {
      append_power(out, "x" + std::to_string(i + 1), Int(m.exps[i]));
    }
  }
  return out.empty() ? "1" : out;
}

std::string render_degree(const PicElt& d) {
  std::vector<std::string> terms;
  if (d.ell != 0) {
    terms.push_back(additive_term(d.ell, "c"));
  }
  for (std::size_t i = 0; i < d.arm.size(); ++i) {
    if (d.arm[i] != 0) {
      terms.push_back(additive_term(d.arm[i], "x" + std::to_string(i + 1)));
    }
  }
  if (terms.empty()) {
    return "0";
  }
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() != '-') {
      out += '+';
    }
    out += terms[i];
  }
  return out;
}

std::string bundle_name(const PicElt& d) {
  if (d.is_zero()) {
    return "O";
  }
  return "O(" + render_degree(d) + ")";
}

std::string vertex_name(const WplData& w, std::size_t idx) {
  const std::vector<std::string> names = canonical_vertex_names(w);
  if (idx >= names.size()) {
    throw DataMismatchError("vertex_name: index out of range");
  }
  return names[idx];
}

std::string to_dot(const WplData& w, const LabeledQuiver& q) {
  require_canonical_vertices(w, q, "to_dot");
  const std::vector<std::string> names = canonical_vertex_names(w);
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  " << names[v] << " [label=\"" << bundle_name(q.vertices[v])
        << "\"];\n";
  }
  for (const Arrow& a : q.arrows) {
    out << "  " << names[a.src] << " -> " << names[a.dst] << " [label=\""
        << render_monomial(a.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json_string(const WplData& w, const LabeledQuiver& q,
                           const std::vector<PathRelation>* relations,
                           const JsonCertificate* certificate) {
  require_canonical_vertices(w, q, "to_json_string");
  const std::vector<std::string> names = canonical_vertex_names(w);

  json doc;
  doc["schema"] = 1;
  doc["weights"] = json::array();
  for (std::int64_t p : w.weights()) {
    doc["weights"].push_back(p);
  }
  doc["lambda"] = json::array();
  for (const Rat& l : w.lambda()) {
    doc["lambda"].push_back(rat_to_string(l));
  }

  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    doc["vertices"].push_back(json{{"id", v},
                                   {"degree", degree_to_json(q.vertices[v])},
                                   {"name", bundle_name(q.vertices[v])}});
  }

  doc["arrows"] = json::array();
  for (const Arrow& a : q.arrows) {
    json exps = json::array();
    for (std::int64_t e : a.label.exps) {
      exps.push_back(e);
    }
    doc["arrows"].push_back(
        json{{"src", a.src},
             {"dst", a.dst},
             {"label", json{{"t", a.label.t_exp}, {"exps", std::move(exps)}}}});
  }

  if (relations != nullptr) {
    json rels = json::array();
    for (const PathRelation& r : *relations) {
      json terms = json::array();
      for (const auto& [coeff, path] : r.terms) {
        json path_json = json::array();
        for (std::size_t arrow : path) {
          path_json.push_back(arrow);
        }
        terms.push_back(
            json{{"coeff", rat_to_string(coeff)}, {"path", std::move(path_json)}});
      }
      rels.push_back(json{{"src", r.src},
                          {"dst", r.dst},
                          {"t", r.t},
                          {"terms", std::move(terms)}});
    }
    doc["relations"] = std::move(rels);
  }

  if (certificate != nullptr) {
    doc["certificate"] = json{{"k_max", certificate->k_max},
                              {"closure_verified", certificate->closure_verified}};
  }

  return doc.dump(2) + "\n";
}

ParsedQuiver quiver_from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    if (doc.at("schema").get<int>() != 1) {
      throw DataMismatchError("quiver_from_json_string: unsupported schema version");
    }
    std::vector<Int> weights;
    for (const auto& p : doc.at("weights")) {
      weights.emplace_back(p.get<std::int64_t>());
    }
    std::vector<Rat> lambda;
    for (const auto& l : doc.at("lambda")) {
      lambda.push_back(parse_rational(l.get<std::string>()));
    }
    WplData w = make_wpl(weights, lambda);

    LabeledQuiver q;
    for (const auto& v : doc.at("vertices")) {
      if (v.at("id").get<std::size_t>() != q.vertices.size()) {
        throw DataMismatchError("quiver_from_json_string: vertex ids must be 0..N-1");
      }
      PicElt d = degree_from_json(v.at("degree"));
      w.check(d);
      q.vertices.push_back(std::move(d));
    }
    for (const auto& a : doc.at("arrows")) {
      Arrow arrow;
      arrow.src = a.at("src").get<std::size_t>();
      arrow.dst = a.at("dst").get<std::size_t>();
      if (arrow.src >= q.vertices.size() || arrow.dst >= q.vertices.size()) {
        throw DataMismatchError("quiver_from_json_string: arrow endpoint out of range");
      }
      arrow.label.t_exp = a.at("label").at("t").get<std::int64_t>();
      for (const auto& e : a.at("label").at("exps")) {
        arrow.label.exps.push_back(e.get<std::int64_t>());
      }
      if (arrow.label.exps.size() != w.n()) {
        throw DataMismatchError("quiver_from_json_string: label arity mismatch");
      }
      q.arrows.push_back(std::move(arrow));
    }
    return ParsedQuiver{std::move(w), std::move(q)};
  } catch (const json::exception& e) {
    throw DataMismatchError(std::string("quiver_from_json_string: ") + e.what());
  }
}

}  // namespace wpl

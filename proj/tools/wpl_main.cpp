// Command-line front end for the wpl library: classification, section
// dimensions, quiver extraction and export, acyclicity reports, and the
// stability / orbit / framed decision procedures.
//
// Exit codes: 0 success, 1 usage or parse error, 2 semantic input error,
// 3 certificate or internal failure.

#include "wpl/bundle_quiver.hpp"
#include "wpl/canonical_algebra.hpp"
#include "wpl/coxring.hpp"
#include "wpl/errors.hpp"
#include "wpl/export.hpp"
#include "wpl/moduli.hpp"
#include "wpl/parse.hpp"
#include "wpl/picard.hpp"
#include "wpl/tilting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitCertificate = 3;

struct CommonArgs {
  std::string weights;
  std::string lambda;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--weights", args.weights, "Comma-separated weights p1,p2,...")
      ->required();
  cmd->add_option("--lambda", args.lambda,
                  "Comma-separated interior parameters for arms 4.. (exact "
                  "rationals a/b)");
}

wpl::WplData make_data(const CommonArgs& args) {
  const std::vector<wpl::Int> weights = wpl::parse_weight_list(args.weights);
  std::vector<wpl::Rat> lambda;
  if (!args.lambda.empty()) {
    lambda = wpl::parse_rational_list(args.lambda);
  }
  return wpl::make_wpl(weights, lambda);
}

/// Effective window bound: --kmax flag, then WPL_KMAX, then the default.
std::int64_t resolve_kmax(const wpl::WplData& w,
                          const std::optional<std::int64_t>& flag) {
  if (flag.has_value()) {
    return *flag;
  }
  if (const char* env = std::getenv("WPL_KMAX")) {
    const std::string text(env);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      throw wpl::ParseError("WPL_KMAX is not an integer", 0);
    }
    if (used != text.size()) {
      throw wpl::ParseError("WPL_KMAX has trailing characters", used);
    }
    return value;
  }
  return wpl::default_k_max(w);
}

std::string kind_string(wpl::WeightKind kind) {
  switch (kind) {
    case wpl::WeightKind::Spherical:
      return "spherical";
    case wpl::WeightKind::Euclidean:
      return "euclidean";
    case wpl::WeightKind::Hyperbolic:
      return "hyperbolic";
  }
  throw wpl::Error("unknown weight kind");
}

json classification_json(const wpl::WeightClass& cls) {
  json out;
  out["kind"] = kind_string(cls.kind);
  if (cls.ade.has_value()) {
    out["label"] = cls.ade->str();
  }
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_classify(const CommonArgs& args, const std::string& format) {
  const wpl::WplData w = make_data(args);
  const wpl::WeightClass cls = wpl::classify(w);
  const wpl::Rat chi = w.euler_characteristic();
  const wpl::Int delta_omega = w.degree(w.dualizing());
  if (format == "json") {
    json out = classification_json(cls);
    out["chi"] = wpl::rat_to_string(chi);
    out["delta_omega"] = delta_omega.str();
    out["pbar"] = w.pbar().str();
    out["vertices"] = w.vertex_count();
    emit(out);
  } else {
    std::cout << "kind: " << kind_string(cls.kind) << "\n";
    if (cls.ade.has_value()) {
      std::cout << "label: " << cls.ade->str() << "\n";
    }
    std::cout << "chi: " << wpl::rat_to_string(chi) << "\n";
    std::cout << "delta_omega: " << delta_omega.str() << "\n";
    std::cout << "pbar: " << w.pbar().str() << "\n";
    std::cout << "vertices: " << w.vertex_count() << "\n";
  }
  return kExitOk;
}

int run_h0(const CommonArgs& args, const std::string& degree_expr,
           bool with_basis) {
  const wpl::WplData w = make_data(args);
  const wpl::PicElt d = wpl::parse_degree(degree_expr, w);
  std::cout << "dim: " << wpl::section_dim(w, d).str() << "\n";
  if (with_basis) {
    for (const wpl::Monomial& m : wpl::section_basis(w, d)) {
      std::cout << wpl::render_monomial(m) << "\n";
    }
  }
  return kExitOk;
}

int run_quiver(const CommonArgs& args, const std::string& format) {
  const wpl::WplData w = make_data(args);
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  if (format == "dot") {
    std::cout << wpl::to_dot(w, q);
  } else {
    const std::vector<wpl::PathRelation> relations = wpl::canonical_relations(w, q);
    std::cout << wpl::to_json_string(w, q, &relations);
  }
  return kExitOk;
}

int run_kquiver(const CommonArgs& args, const std::string& format,
                const std::optional<std::int64_t>& kmax_flag, bool with_relations) {
  const wpl::WplData w = make_data(args);
  const std::int64_t k_max = resolve_kmax(w, kmax_flag);
  const wpl::BundleQuiverExtraction ex = wpl::extract_bundle_quiver(w, k_max);
  if (format == "dot") {
    std::cout << wpl::to_dot(w, ex.quiver);
  } else {
    std::vector<wpl::PathRelation> flat;
    if (with_relations) {
      for (const wpl::PieceRelations& piece : wpl::extract_relations(w, ex)) {
        flat.insert(flat.end(), piece.relations.begin(), piece.relations.end());
      }
    }
    const wpl::JsonCertificate cert{ex.k_max_used, ex.closure_verified};
    std::cout << wpl::to_json_string(w, ex.quiver,
                                     with_relations ? &flat : nullptr, &cert);
  }
  if (!ex.closure_verified) {
    std::cerr << "closure not verified at k_max = " << ex.k_max_used << "\n";
    return kExitCertificate;
  }
  return kExitOk;
}

int run_tilting(const CommonArgs& args) {
  const wpl::WplData w = make_data(args);
  const wpl::AcyclicityVerdict verdict = wpl::is_pullback_acyclic(w);
  json out;
  out["acyclic"] = verdict.acyclic;
  out["certificate"] = wpl::to_string(verdict.certificate);
  out["classification"] = classification_json(verdict.classification);
  out["matches_classification"] = verdict.matches_classification;
  if (verdict.witness.has_value()) {
    const wpl::AcyclicityWitness& wit = *verdict.witness;
    json monomials = json::array();
    for (const wpl::Monomial& m : wit.monomials) {
      monomials.push_back(wpl::render_monomial(m));
    }
    out["witness"] = json{{"i", wit.i},
                          {"j", wit.j},
                          {"k", wit.k},
                          {"degree", wpl::render_degree(wit.degree)},
                          {"monomials", std::move(monomials)}};
  }
  emit(out);
  return kExitOk;
}

int run_stability(const CommonArgs& args, const std::string& point_text) {
  const wpl::WplData w = make_data(args);
  const std::vector<wpl::Rat> u = wpl::parse_rational_list(point_text);
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  const wpl::RefinedRep rep = wpl::rep_from_point(w, q, u);
  const wpl::StabilityResult result =
      wpl::is_stable(w, q, rep, wpl::default_vartheta(w));
  json out;
  out["stable"] = result.stable;
  if (result.destabilizer.has_value()) {
    json mu = json::array();
    for (const wpl::Rat& x : *result.destabilizer) {
      mu.push_back(wpl::rat_to_string(x));
    }
    out["destabilizer"] = std::move(mu);
  }
  emit(out);
  return kExitOk;
}

int run_orbit(const CommonArgs& args, const std::string& point1_text,
              const std::string& point2_text) {
  const wpl::WplData w = make_data(args);
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  const wpl::RefinedRep r1 = wpl::rep_from_point(w, q, wpl::parse_rational_list(point1_text));
  const wpl::RefinedRep r2 = wpl::rep_from_point(w, q, wpl::parse_rational_list(point2_text));
  json out;
  out["isomorphic"] = wpl::is_isomorphic(w, q, r1, r2);
  emit(out);
  return kExitOk;
}

int run_framed(const CommonArgs& args, const std::string& v_text,
               const std::string& v2_text,
               const std::optional<std::int64_t>& kmax_flag) {
  const wpl::WplData w = make_data(args);
  const std::int64_t k_max = resolve_kmax(w, kmax_flag);
  const wpl::BundleQuiverExtraction ex = wpl::extract_bundle_quiver(w, k_max);
  if (!ex.closure_verified) {
    throw wpl::CertificateError("framed: closure not verified at k_max = " +
                                std::to_string(ex.k_max_used));
  }
  const wpl::FramedRep rep =
      wpl::build_framed(w, ex.quiver, wpl::parse_rational_list(v_text));
  json out;
  json v_json = json::array();
  for (const wpl::Rat& x : rep.v) {
    v_json.push_back(wpl::rat_to_string(x));
  }
  out["v"] = std::move(v_json);
  out["stable"] = wpl::is_stable_framed(w, ex.quiver, rep);
  if (!v2_text.empty()) {
    const wpl::FramedRep rep2 =
        wpl::build_framed(w, ex.quiver, wpl::parse_rational_list(v2_text));
    out["isomorphic"] = wpl::is_isomorphic_framed(w, ex.quiver, rep, rep2);
  }
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for weighted projective lines: degree "
               "classes, section spaces, canonical and enlarged quivers, "
               "acyclicity certificates, and moduli decision procedures"};
  app.require_subcommand(1);

  CommonArgs classify_args;
  std::string classify_format = "text";
  CLI::App* classify = app.add_subcommand("classify", "Weight-type classification");
  add_common(classify, classify_args);
  classify->add_option("--format", classify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CommonArgs h0_args;
  std::string h0_degree;
  bool h0_basis = false;
  CLI::App* h0 = app.add_subcommand("h0", "Section-space dimension of a degree");
  add_common(h0, h0_args);
  h0->add_option("--degree", h0_degree, "Degree expression, e.g. \"2c-x1\"")
      ->required();
  h0->add_flag("--basis", h0_basis, "Also print the monomial basis");

  CommonArgs quiver_args;
  std::string quiver_format = "json";
  CLI::App* quiver = app.add_subcommand("quiver", "Canonical quiver with relations");
  add_common(quiver, quiver_args);
  quiver->add_option("--format", quiver_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CommonArgs kquiver_args;
  std::string kquiver_format = "json";
  std::optional<std::int64_t> kquiver_kmax;
  bool kquiver_relations = false;
  CLI::App* kquiver =
      app.add_subcommand("kquiver", "Enlarged quiver over the canonical bundle");
  add_common(kquiver, kquiver_args);
  kquiver->add_option("--format", kquiver_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  kquiver->add_option("--kmax", kquiver_kmax, "Window bound (default 2*pbar)");
  kquiver->add_flag("--relations", kquiver_relations,
                    "Include extracted relations (json only)");

  CommonArgs tilting_args;
  CLI::App* tilting = app.add_subcommand("tilting", "Acyclicity verdict as JSON");
  add_common(tilting, tilting_args);

  CommonArgs stability_args;
  std::string stability_point;
  CLI::App* stability =
      app.add_subcommand("stability", "Stability of the representation at a point");
  add_common(stability, stability_args);
  stability->add_option("--point", stability_point, "Comma-separated rationals")
      ->required();

  CommonArgs orbit_args;
  std::string orbit_point1;
  std::string orbit_point2;
  CLI::App* orbit = app.add_subcommand("orbit", "Orbit equivalence of two points");
  add_common(orbit, orbit_args);
  orbit->add_option("--point1", orbit_point1, "First point")->required();
  orbit->add_option("--point2", orbit_point2, "Second point")->required();

  CommonArgs framed_args;
  std::string framed_v;
  std::string framed_v2;
  std::optional<std::int64_t> framed_kmax;
  CLI::App* framed =
      app.add_subcommand("framed", "Framed representation build and stability");
  add_common(framed, framed_args);
  framed->add_option("--v", framed_v, "Framing values v1,...,vt")->required();
  framed->add_option("--v2", framed_v2,
                     "Second framing point: also report orbit equivalence");
  framed->add_option("--kmax", framed_kmax, "Window bound (default 2*pbar)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      return run_classify(classify_args, classify_format);
    }
    if (h0->parsed()) {
      return run_h0(h0_args, h0_degree, h0_basis);
    }
    if (quiver->parsed()) {
      return run_quiver(quiver_args, quiver_format);
    }
    if (kquiver->parsed()) {
      if (kquiver_relations && kquiver_format != "json") {
        std::cerr << "--relations requires --format json\n";
        return kExitUsage;
      }
      return run_kquiver(kquiver_args, kquiver_format, kquiver_kmax,
                         kquiver_relations);
    }
    if (tilting->parsed()) {
      return run_tilting(tilting_args);
    }
    if (stability->parsed()) {
      return run_stability(stability_args, stability_point);
    }
    if (orbit->parsed()) {
      return run_orbit(orbit_args, orbit_point1, orbit_point2);
    }
    if (framed->parsed()) {
      return run_framed(framed_args, framed_v, framed_v2, framed_kmax);
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const wpl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wpl::DegreeIndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::WeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::LambdaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::DataMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::RelationViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const wpl::Error& e) {
    // CertificateError, CycleDegreeError, PathCapError, CapExceededError and
    // anything else internal.
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCertificate;
  }
}

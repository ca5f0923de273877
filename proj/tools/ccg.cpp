// ccg: verification campaigns, converse construction, constant-area loci
// and disk-model figures. Exit codes: 0 success or pass, 1 infeasible input
// or failed verification, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccg/campaign.hpp"
#include "ccg/cevians.hpp"
#include "ccg/errors.hpp"
#include "ccg/lexell.hpp"
#include "ccg/random.hpp"
#include "ccg/render.hpp"
#include "ccg/sampling.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ccg;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else if (!write_text(path, text)) {
    std::cerr << "cannot write " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

json disk_json(const HPoint& p) {
  const DiskPoint d = hpoint_to_disk(p);
  return json::array({d.u, d.w});
}
json vertex_json(const HPoint& p) { return disk_json(p); }
json vertex_json(const SpherePoint& p) { return json::array({p.vec().x0, p.vec().x1, p.vec().x2}); }
json vertex_json(const EPoint& p) { return json::array({p.x, p.y}); }

std::string_view chart_name(Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic: return "poincare-disk";
    case Geometry::Spherical: return "unit-sphere";
    case Geometry::Euclidean: return "cartesian";
  }
  return "";
}

std::string infeasibility_reason(const GeometryError& e) {
  const std::string what = e.what();
  if (e.kind() == ErrorKind::Infeasible) return "relation residual";
  if (what.find("heron") != std::string::npos) return "heron radicand";
  return "sine bound";
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string geometry = "hyperbolic";
  int trials = 1000;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  std::string json_path;
};

int run_verify(const VerifyArgs& a) {
  Theorem t;
  Geometry g;
  try {
    t = parse_theorem(a.theorem);
    g = parse_geometry(a.geometry);
  } catch (const GeometryError& e) {
    throw UsageError{e.what()};
  }
  if (!supports(t, g)) {
    throw UsageError{std::string(to_string(t)) + " is only available in hyperbolic geometry"};
  }
  if (a.trials < 1) throw UsageError{"--trials must be positive"};
  const VerifyReport rep = run_campaign(t, g, a.trials, a.seed, a.tolerance);
  const std::string text = to_json(rep);
  if (a.json_path.empty()) {
    std::cout << text;
  } else if (!write_text(a.json_path, text)) {
    throw UsageError{"cannot write " + a.json_path};
  }
  return rep.pass ? kExitOk : kExitFailed;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  std::vector<double> lengths;
  std::string geometry = "hyperbolic";
  std::string svg_path;
  std::string json_path;
};

template <PlaneGeometry Plane>
json construct_report(const RatioSumInput& in, const std::string& svg_path) {
  const Construction<Plane> c = construct_from_ratios<Plane>(in);
  const CevianFrame<Plane> again = cevian_frame(c.tri, c.O);
  const RatioSumInput& back = again.lengths;
  const double roundtrip = std::max({std::abs(back.A_len - in.A_len), std::abs(back.B_len - in.B_len),
                                     std::abs(back.C_len - in.C_len), std::abs(back.a_len - in.a_len),
                                     std::abs(back.b_len - in.b_len), std::abs(back.c_len - in.c_len)});
  const double angle_roundtrip =
      std::max({std::abs(again.p - c.p), std::abs(again.q - c.q), std::abs(again.r - c.r)});

  json doc;
  doc["command"] = "construct";
  doc["geometry"] = to_string(Plane::kind);
  doc["status"] = "ok";
  doc["input"] = {{"AO", in.A_len}, {"BO", in.B_len}, {"CO", in.C_len},
                  {"OD", in.a_len}, {"OE", in.b_len}, {"OF", in.c_len}, {"units", "model-units"}};
  doc["ratios"] = {{"alpha", c.ratios.alpha}, {"beta", c.ratios.beta}, {"gamma", c.ratios.gamma}};
  doc["g"] = c.g;
  doc["h"] = c.h;
  doc["i"] = c.i;
  doc["delta"] = c.delta;
  doc["heron_area"] = c.heron_area;
  doc["recovered_angles"] = {{"BOF", c.p}, {"AOF", c.q}, {"BOD", c.r}, {"units", "radians"}};
  doc["vertex_angles"] = {{"AOB", Plane::angle(c.O, c.tri.A, c.tri.B)},
                          {"BOC", Plane::angle(c.O, c.tri.B, c.tri.C)},
                          {"COA", Plane::angle(c.O, c.tri.C, c.tri.A)},
                          {"units", "radians"}};
  doc["vertices"] = {{"A", vertex_json(c.tri.A)}, {"B", vertex_json(c.tri.B)}, {"C", vertex_json(c.tri.C)},
                     {"O", vertex_json(c.O)},     {"D", vertex_json(c.D)},     {"E", vertex_json(c.E)},
                     {"F", vertex_json(c.F)},     {"chart", chart_name(Plane::kind)}};
  doc["residuals"] = {{"relation", c.ratios.relation},
                      {"angle_sum", c.angle_sum_residual},
                      {"containment", c.containment},
                      {"length_roundtrip", roundtrip},
                      {"angle_roundtrip", angle_roundtrip}};
  if (!svg_path.empty()) {
    if constexpr (Plane::kind == Geometry::Hyperbolic) {
      const RenderScene scene = cevian_scene(c.tri, c.O, c.D, c.E, c.F);
      const SceneCheck check = validate_scene(scene);
      if (!write_text(svg_path, to_svg(scene))) throw UsageError{"cannot write " + svg_path};
      doc["svg"] = {{"path", svg_path}, {"valid", check.ok}};
    } else {
      throw UsageError{"--svg is only available in hyperbolic geometry"};
    }
  }
  return doc;
}

int run_construct(const ConstructArgs& a) {
  Geometry g;
  try {
    g = parse_geometry(a.geometry);
  } catch (const GeometryError& e) {
    throw UsageError{e.what()};
  }
  for (double v : a.lengths) {
    if (!(v > 0.0)) throw UsageError{"lengths must be positive"};
  }
  const RatioSumInput in{a.lengths[0], a.lengths[1], a.lengths[2], a.lengths[3], a.lengths[4], a.lengths[5]};
  try {
    json doc;
    switch (g) {
      case Geometry::Hyperbolic: doc = construct_report<HyperbolicPlane>(in, a.svg_path); break;
      case Geometry::Spherical: doc = construct_report<SphericalPlane>(in, a.svg_path); break;
      case Geometry::Euclidean: doc = construct_report<EuclideanPlane>(in, a.svg_path); break;
    }
    return emit(doc, a.json_path);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::Infeasible && e.kind() != ErrorKind::InfeasibleGeometry) throw;
    json doc;
    doc["command"] = "construct";
    doc["geometry"] = to_string(g);
    doc["status"] = "infeasible";
    doc["reason"] = infeasibility_reason(e);
    doc["message"] = e.what();
    emit(doc, a.json_path);
    std::cerr << "infeasible: " << infeasibility_reason(e) << "\n";
    return kExitFailed;
  }
}

// ---- lexell ---------------------------------------------------------------

struct LexellArgs {
  double x = 0.8;
  std::optional<double> y;
  std::vector<double> apex;
  int samples = 20;
  std::vector<double> foliate;
  std::uint64_t seed = 1;
  std::string svg_path;
  std::string json_path;
};

json locus_json(const AreaLocus& locus, int samples, std::uint64_t seed) {
  const LocusReport rep = check_locus(locus, samples);
  const auto [from, to] = ideal_endpoints(locus.axis);
  json doc;
  doc["apex"] = disk_json(locus.apex);
  doc["apex_mirror"] = disk_json(locus.apex_mirror);
  doc["axis"] = {{"normal", json::array({locus.axis.normal().x0, locus.axis.normal().x1,
                                         locus.axis.normal().x2})},
                 {"ideal_endpoint_angles", json::array({std::atan2(from.w, from.u), std::atan2(to.w, to.u)})},
                 {"units", "radians"}};
  doc["offset"] = locus.carrier.offset;
  doc["mirror_offset"] = locus.mirror.offset;
  doc["offset_units"] = "model-units";
  doc["area"] = locus.area;
  doc["area_units"] = "radians";
  doc["samples"] = samples;
  doc["area_spread"] = rep.area_spread;
  doc["mirror_residual"] = rep.mirror_residual;
  doc["midpoint_residual"] = rep.midpoint_residual;
  doc["subarc_difference"] = equal_subarc_check(locus, 100, seed);
  return doc;
}

int run_lexell(const LexellArgs& a) {
  if (a.y && !a.apex.empty()) throw UsageError{"give either --y or --apex, not both"};
  if (!a.apex.empty() && a.apex.size() != 2) throw UsageError{"--apex takes two disk coordinates u,w"};
  if (!a.y && a.apex.empty() && a.foliate.empty()) throw UsageError{"an apex (--y or --apex) or --foliate is required"};
  if (a.samples < 2) throw UsageError{"--samples must be at least 2"};

  BaseConfig base;
  std::optional<HPoint> apex;
  try {
    base = BaseConfig::standard(a.x);
    if (a.y) apex = apex_on_axis(base, *a.y);
    if (!a.apex.empty()) apex = disk_to_hpoint(DiskPoint::make(a.apex[0], a.apex[1]));
  } catch (const GeometryError& e) {
    throw UsageError{e.what()};
  }

  json doc;
  doc["command"] = "lexell";
  doc["half_distance"] = base.x;
  doc["base"] = {{"A", disk_json(base.A)}, {"B", disk_json(base.B)}, {"chart", "poincare-disk"}};
  RenderScene scene;
  try {
    if (apex) {
      const AreaLocus locus = lexell_locus(base, *apex);
      json l = locus_json(locus, a.samples, a.seed);
      if (a.y) l["area_formula"] = apex_area_formula(base.x, *a.y);
      doc["locus"] = l;
      scene = lexell_scene(locus);
    }
    if (!a.foliate.empty()) {
      const std::vector<AreaLocus> leaves = foliation(base, a.foliate);
      json arr = json::array();
      bool ordered = true;
      double worst_separation = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < leaves.size(); ++k) {
        const LocusReport rep = check_locus(leaves[k], a.samples);
        arr.push_back({{"target_area", a.foliate[k]},
                       {"area", leaves[k].area},
                       {"apex_height", hdist(HPoint::origin(), leaves[k].apex)},
                       {"offset", leaves[k].carrier.offset},
                       {"area_spread", rep.area_spread}});
        for (std::size_t m = 0; m < k; ++m) {
          worst_separation = std::min(worst_separation, leaf_separation(leaves[k], leaves[m]));
          const bool area_up = a.foliate[k] > a.foliate[m];
          const double apex_k = hdist(HPoint::origin(), leaves[k].apex);
          const double apex_m = hdist(HPoint::origin(), leaves[m].apex);
          if (area_up != (apex_k > apex_m)) ordered = false;
        }
      }
      doc["foliation"] = {{"area_limit", foliation_area_limit(base.x)},
                          {"leaves", arr},
                          {"ordered", ordered},
                          {"min_separation", leaves.size() > 1 ? json(worst_separation) : json(nullptr)}};
      if (!apex) scene = foliation_scene(base, leaves);
      else {
        for (const auto& leaf : leaves) scene.add_hypercycle(leaf.carrier, "carrier");
      }
    }
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::Domain || e.kind() == ErrorKind::Range) throw UsageError{e.what()};
    json err;
    err["command"] = "lexell";
    err["status"] = "failed";
    err["reason"] = std::string(to_string(e.kind()));
    err["message"] = e.what();
    emit(err, a.json_path);
    std::cerr << e.what() << "\n";
    return kExitFailed;
  }
  if (!a.svg_path.empty()) {
    const SceneCheck check = validate_scene(scene);
    if (!write_text(a.svg_path, to_svg(scene))) throw UsageError{"cannot write " + a.svg_path};
    doc["svg"] = {{"path", a.svg_path}, {"valid", check.ok}};
  }
  doc["status"] = "ok";
  return emit(doc, a.json_path);
}

// ---- render ---------------------------------------------------------------

struct RenderArgs {
  std::string figure = "lexell";
  double x = 0.8;
  double y = 1.0;
  std::vector<double> foliate;
  std::uint64_t seed = 1;
  std::string svg_path;
  std::string json_path;
};

int run_render(const RenderArgs& a) {
  RenderScene scene;
  try {
    if (a.figure == "lexell") {
      const BaseConfig base = BaseConfig::standard(a.x);
      scene = lexell_scene(lexell_locus(base, apex_on_axis(base, a.y)));
    } else if (a.figure == "foliation") {
      const BaseConfig base = BaseConfig::standard(a.x);
      std::vector<double> areas = a.foliate;
      if (areas.empty()) {
        const double limit = foliation_area_limit(base.x);
        for (int k = 1; k <= 5; ++k) areas.push_back(limit * k / 6.0);
      }
      scene = foliation_scene(base, foliation(base, areas));
    } else if (a.figure == "cevians") {
      Rng rng = Rng::for_trial(a.seed, 0);
      const CevianFrame<HyperbolicPlane> fr = random_frame<HyperbolicPlane>(rng);
      scene = cevian_scene(fr.tri, fr.O, fr.D, fr.E, fr.F);
    } else {
      throw UsageError{"unknown figure '" + a.figure + "'"};
    }
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::Domain || e.kind() == ErrorKind::Range) throw UsageError{e.what()};
    std::cerr << e.what() << "\n";
    return kExitFailed;
  }
  const SceneCheck check = validate_scene(scene);
  if (!write_text(a.svg_path, to_svg(scene))) throw UsageError{"cannot write " + a.svg_path};
  json doc;
  doc["command"] = "render";
  doc["figure"] = a.figure;
  doc["svg"] = a.svg_path;
  doc["valid"] = check.ok;
  doc["max_radius"] = check.max_radius;
  doc["max_orthogonality_error"] = check.max_orthogonality;
  doc["min_hypercycle_tilt"] = check.min_hypercycle_tilt;
  doc["units"] = "radians";
  if (!check.ok) doc["message"] = check.message;
  const int rc = emit(doc, a.json_path);
  return rc != kExitOk ? rc : (check.ok ? kExitOk : kExitFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-curvature plane geometry: identities, constructions and figures"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a seeded verification campaign");
  v->add_option("theorem", verify.theorem, "menelaus | euler-ratio | ceva | lambert | lexell | pqr")->required();
  v->add_option("--geometry", verify.geometry, "hyperbolic | spherical | euclidean");
  v->add_option("--trials", verify.trials, "Number of random trials");
  v->add_option("--seed", verify.seed, "Seed of the trial sequence");
  v->add_option("--tolerance", verify.tolerance, "Override the pass tolerance");
  v->add_option("--json", verify.json_path, "Write the report here instead of stdout");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Rebuild a triangle from the six cevian lengths");
  c->add_option("lengths", construct.lengths, "AO BO CO OD OE OF")->required()->expected(6);
  c->add_option("--geometry", construct.geometry, "hyperbolic | spherical | euclidean");
  c->add_option("--svg", construct.svg_path, "Write a disk figure (hyperbolic only)");
  c->add_option("--json", construct.json_path, "Write the report here instead of stdout");

  LexellArgs lexell;
  auto* l = app.add_subcommand("lexell", "Constant-area locus over a symmetric base");
  l->add_option("--x", lexell.x, "Half of the base length");
  l->add_option("--y", lexell.y, "Apex on the perpendicular axis at this distance");
  l->add_option("--apex", lexell.apex, "Apex as disk coordinates u,w")->delimiter(',')->expected(2);
  l->add_option("--samples", lexell.samples, "Locus samples in the parameter range [-3, 3]");
  l->add_option("--foliate", lexell.foliate, "Comma-separated target areas")->delimiter(',');
  l->add_option("--seed", lexell.seed, "Seed of the random chords");
  l->add_option("--svg", lexell.svg_path, "Write a disk figure");
  l->add_option("--json", lexell.json_path, "Write the report here instead of stdout");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw a disk-model figure");
  r->add_option("--figure", render.figure, "lexell | foliation | cevians");
  r->add_option("--x", render.x, "Half of the base length");
  r->add_option("--y", render.y, "Apex distance from the base midpoint");
  r->add_option("--foliate", render.foliate, "Comma-separated target areas")->delimiter(',');
  r->add_option("--seed", render.seed, "Seed of the random triangle");
  r->add_option("--svg", render.svg_path, "Output SVG path")->required();
  r->add_option("--json", render.json_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*v) return run_verify(verify);
    if (*c) return run_construct(construct);
    if (*l) return run_lexell(lexell);
    if (*r) return run_render(render);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

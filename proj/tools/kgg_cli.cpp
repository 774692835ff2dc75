// kgg: order-k proximity graphs, matchings, blocking sets, and theorem trials.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgg/constructions.hpp"
#include "kgg/error.hpp"
#include "kgg/matching.hpp"
#include "kgg/partition_mst.hpp"
#include "kgg/point_io.hpp"
#include "kgg/proximity.hpp"
#include "kgg/render.hpp"
#include "kgg/trials.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    kgg::write_file(out_path, text);
  }
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw kgg::InvalidArgument("expected i,j but got '" + text + "'");
  try {
    std::size_t used = 0;
    const int i = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const int j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {i, j};
  } catch (const std::logic_error&) {
    throw kgg::InvalidArgument("expected i,j but got '" + text + "'");
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw kgg::InvalidArgument("expected N or LO:HI for --n but got '" + text + "'");
  }
}

std::vector<kgg::Distribution> parse_dists(const std::string& text) {
  std::vector<kgg::Distribution> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(kgg::parse_distribution(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_index(int i, std::size_t n) {
  if (i < 0 || static_cast<std::size_t>(i) >= n) {
    throw kgg::InvalidArgument("vertex " + std::to_string(i) + " out of range");
  }
}

json matching_json(const kgg::Matching& m) {
  json j;
  j["size"] = m.size();
  json pairs = json::array();
  for (const auto& e : m.pairs) pairs.push_back({e.u, e.v});
  j["pairs"] = pairs;
  j["ws"] = m.ws.weights();
  j["lambda"] = m.bottleneck;
  return j;
}

struct Common {
  double tau = kgg::TolerancePolicy::from_env().tau;
  std::string out;
  std::string svg;
};

void add_tau(CLI::App* sub, Common& c) {
  sub->add_option("--tau", c.tau, "absolute tolerance for predicates (default $KGG_TAU or 1e-9)");
}

kgg::TolerancePolicy policy(const Common& c) {
  kgg::TolerancePolicy pol{c.tau};
  kgg::validate(pol);
  return pol;
}

kgg::PointFile load(const std::string& path, const kgg::TolerancePolicy& pol) {
  kgg::PointFile f = kgg::read_points(path);
  kgg::validate_points(f.points, pol);
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-k Gabriel, relative-neighborhood and Delaunay graphs"};
  app.require_subcommand(1);
  Common common;

  // build
  std::string build_in;
  std::string family_text = "GG";
  int k = 0;
  auto* build = app.add_subcommand("build", "proximity graph with per-edge depth");
  build->add_option("points", build_in, "point file")->required();
  build->add_option("--family", family_text, "GG, RNG or DG");
  build->add_option("--k", k, "order")->check(CLI::NonNegativeNumber);
  build->add_option("--out", common.out, "JSON output (default stdout)");
  build->add_option("--svg", common.svg, "also render the graph");
  add_tau(build, common);

  // match
  std::string match_in;
  std::string mode = "max";
  std::optional<int> match_k;
  std::string forbid_text;
  auto* match = app.add_subcommand("match", "maximum, bottleneck or lex-min matching");
  match->add_option("points", match_in, "point file")->required();
  match->add_option("--mode", mode, "max | bottleneck | lexmin")
      ->check(CLI::IsMember({"max", "bottleneck", "lexmin"}));
  match->add_option("--family", family_text, "GG, RNG or DG (max mode)");
  match->add_option("--k", match_k, "restrict to the order-k graph")->check(CLI::NonNegativeNumber);
  match->add_option("--forbid-edge", forbid_text, "i,j excluded (bottleneck mode)");
  match->add_option("--out", common.out, "JSON output (default stdout)");
  match->add_option("--svg", common.svg, "also render the matching");
  add_tau(match, common);

  // verify
  kgg::TrialConfig cfg;
  std::string theorem = "thm4.5";
  std::string n_text;
  std::string dist_text = "uniform,clustered";
  auto* verify = app.add_subcommand("verify", "randomized theorem trials");
  verify->add_option("--theorem", theorem, "trial family id");
  verify->add_option("--n", n_text, "N or LO:HI");
  verify->add_option("--k", cfg.k, "order (theorem default when omitted)");
  verify->add_option("--dist", dist_text, "comma list of uniform, gaussian, clustered");
  verify->add_option("--trials", cfg.trials, "number of trials");
  verify->add_option("--seed", cfg.seed, "base seed");
  verify->add_option("--eps", cfg.eps, "counterexample8gg parameter");
  verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  verify->add_option("--out", common.out, "report path (default stdout)");
  add_tau(verify, common);

  // gen
  std::string gen_name;
  double eps = kgg::kDefaultCounterexampleEps;
  int gen_n = 10;
  double spacing = 1.0;
  std::string blockers_out;
  auto* gen = app.add_subcommand("gen", "named constructions");
  gen->add_option("name", gen_name, "counterexample8gg | tight0gg | blockingtight | collinear")
      ->required()
      ->check(CLI::IsMember({"counterexample8gg", "tight0gg", "blockingtight", "collinear"}));
  gen->add_option("--eps", eps, "counterexample8gg parameter");
  gen->add_option("--n", gen_n, "collinear point count");
  gen->add_option("--spacing", spacing, "collinear spacing");
  gen->add_option("--out", common.out, "point file (default stdout)");
  gen->add_option("--blockers-out", blockers_out, "blockingtight blockers");
  gen->add_option("--svg", common.svg, "also render");

  // render
  std::string render_in;
  std::optional<int> render_k;
  std::string disks = "none";
  std::string render_matching = "none";
  std::string blockers_in;
  auto* render = app.add_subcommand("render", "SVG of points, graph, disks, matching");
  render->add_option("points", render_in, "point file")->required();
  render->add_option("--family", family_text, "GG, RNG or DG");
  render->add_option("--k", render_k, "draw the order-k graph")->check(CLI::NonNegativeNumber);
  render->add_option("--disks", disks, "none | graph | mst")
      ->check(CLI::IsMember({"none", "graph", "mst"}));
  render->add_option("--matching", render_matching, "none | max | bottleneck | lexmin")
      ->check(CLI::IsMember({"none", "max", "bottleneck", "lexmin"}));
  render->add_option("--blockers", blockers_in, "blocker point file");
  render->add_option("--out", common.out, "SVG path (default stdout)");
  add_tau(render, common);

  // block
  std::string block_in;
  int block_k = 0;
  std::optional<double> delta;
  auto* block = app.add_subcommand("block", "blocking set construction and check");
  block->add_option("points", block_in, "point file")->required();
  block->add_option("--k", block_k, "order")->check(CLI::NonNegativeNumber);
  block->add_option("--delta", delta, "blocker offset (default 1e-4 times closest pair)");
  block->add_option("--blockers", blockers_in, "check this blocker file instead of constructing");
  block->add_option("--out", common.out, "JSON output (default stdout)");
  block->add_option("--blockers-out", blockers_out, "write the constructed blockers");
  block->add_option("--svg", common.svg, "also render");
  add_tau(block, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const kgg::TolerancePolicy pol = policy(common);

    if (*build) {
      const kgg::PointFile f = load(build_in, pol);
      const kgg::Family family = kgg::parse_family(family_text);
      const kgg::ProximityGraph g = kgg::build_proximity(family, f.points, k, pol);
      json out;
      out["family"] = kgg::family_name(family);
      out["k"] = k;
      out["tau"] = pol.tau;
      json verts = json::array();
      for (std::size_t i = 0; i < f.points.size(); ++i) {
        json v;
        v["id"] = i;
        v["x"] = f.points[i].x;
        v["y"] = f.points[i].y;
        if (!f.labels[i].empty()) v["label"] = f.labels[i];
        verts.push_back(std::move(v));
      }
      out["vertices"] = std::move(verts);
      json edges = json::array();
      for (const auto& e : g.edges()) {
        json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["depth"] = g.depth(e.u, e.v);
        je["length"] = std::sqrt(kgg::dist2(f.points[static_cast<std::size_t>(e.u)],
                                            f.points[static_cast<std::size_t>(e.v)]));
        edges.push_back(std::move(je));
      }
      out["edges"] = std::move(edges);
      emit(common.out, out.dump(2) + "\n");
      if (!common.svg.empty()) {
        kgg::Scene scene{f.points, f.labels, {}, g.edges(), {}, {}};
        kgg::write_file(common.svg, kgg::render_svg(scene));
      }
      return 0;
    }

    if (*match) {
      const kgg::PointFile f = load(match_in, pol);
      kgg::Matching m;
      json out;
      out["mode"] = mode;
      if (mode == "max") {
        const kgg::Family family = kgg::parse_family(family_text);
        const int order = match_k.value_or(0);
        const kgg::ProximityGraph g = kgg::build_proximity(family, f.points, order, pol);
        m = kgg::make_matching(kgg::max_matching(g.graph()).pairs, f.points);
        out["family"] = kgg::family_name(family);
        out["k"] = order;
      } else if (mode == "bottleneck") {
        kgg::BottleneckOptions opts;
        if (match_k) {
          opts.allowed = kgg::build_kgg(f.points, *match_k, pol).edges();
          out["k"] = *match_k;
        }
        if (!forbid_text.empty()) {
          const auto [i, j] = parse_pair(forbid_text);
          check_index(i, f.points.size());
          check_index(j, f.points.size());
          opts.forbid = kgg::Edge(i, j);
          out["forbid"] = {opts.forbid->u, opts.forbid->v};
        }
        m = kgg::bottleneck_matching(f.points, opts);
      } else {
        m = kgg::lexmin_matching(f.points);
      }
      const json mj = matching_json(m);
      for (const auto& [key, value] : mj.items()) out[key] = value;
      emit(common.out, out.dump(2) + "\n");
      if (!common.svg.empty()) {
        kgg::Scene scene{f.points, f.labels, {}, {}, m.pairs, {}};
        kgg::write_file(common.svg, kgg::render_svg(scene));
      }
      return 0;
    }

    if (*verify) {
      cfg.theorem = kgg::parse_theorem(theorem);
      cfg.tau = pol.tau;
      cfg.dists = parse_dists(dist_text);
      if (!n_text.empty()) std::tie(cfg.n_min, cfg.n_max) = parse_range(n_text);
      const kgg::Report report = kgg::run_trials(cfg);
      emit(common.out, kgg::to_json(report).dump(2) + "\n");
      std::fprintf(stderr, "%s: %d passed, %d failed, %.2f s\n", theorem.c_str(), report.passed,
                   report.failed, report.seconds);
      if (const auto* f = report.first_failure()) {
        std::fprintf(stderr, "first failure: trial %d (seed %llu): %s\n", f->index,
                     static_cast<unsigned long long>(f->seed), f->detail.c_str());
      }
      return report.failed == 0 ? 0 : kExitVerification;
    }

    if (*gen) {
      kgg::LabeledInstance inst;
      kgg::PointSet blockers;
      if (gen_name == "counterexample8gg") {
        inst = kgg::gen_counterexample_8gg(eps);
      } else if (gen_name == "tight0gg") {
        inst = kgg::gen_tight_0gg();
      } else if (gen_name == "blockingtight") {
        auto [i, b] = kgg::gen_blocking_tight();
        inst = std::move(i);
        blockers = std::move(b.blockers);
      } else {
        inst.points = kgg::gen_collinear(gen_n, spacing);
      }
      emit(common.out, kgg::format_points(inst.points, inst.labels));
      if (!blockers_out.empty()) kgg::write_file(blockers_out, kgg::format_points(blockers));
      if (!common.svg.empty()) {
        kgg::Scene scene{inst.points, inst.labels, blockers, {}, {}, {}};
        kgg::write_file(common.svg, kgg::render_svg(scene));
      }
      return 0;
    }

    if (*render) {
      const kgg::PointFile f = load(render_in, pol);
      kgg::Scene scene{f.points, f.labels, {}, {}, {}, {}};
      const kgg::Family family = kgg::parse_family(family_text);
      if (render_k) scene.edges = kgg::build_proximity(family, f.points, *render_k, pol).edges();
      if (disks == "graph") {
        const auto edges = render_k ? scene.edges : kgg::build_kgg(f.points, 0, pol).edges();
        kgg::WitnessTree tree;
        for (const auto& e : edges) tree.edges.push_back({e, 0, 0, 0.0});
        scene.disks = kgg::disk_system(f.points, tree).disks;
      } else if (disks == "mst") {
        scene.disks = kgg::disk_system(f.points, kgg::euclidean_mst(f.points)).disks;
      }
      if (render_matching == "max") {
        const auto edges = render_k ? scene.edges : kgg::build_kgg(f.points, 0, pol).edges();
        scene.highlighted = kgg::max_matching(kgg::Graph(static_cast<int>(f.points.size()), edges)).pairs;
      } else if (render_matching == "bottleneck") {
        scene.highlighted = kgg::bottleneck_matching(f.points).pairs;
      } else if (render_matching == "lexmin") {
        scene.highlighted = kgg::lexmin_matching(f.points).pairs;
      }
      if (!blockers_in.empty()) scene.blockers = kgg::read_points(blockers_in).points;
      emit(common.out, kgg::render_svg(scene));
      return 0;
    }

    if (*block) {
      const kgg::PointFile f = load(block_in, pol);
      kgg::PointSet blockers;
      json out;
      out["k"] = block_k;
      if (!blockers_in.empty()) {
        blockers = kgg::read_points(blockers_in).points;
      } else {
        const double d = delta.value_or(kgg::default_blocker_offset(f.points));
        blockers = kgg::blockers_right(f.points, block_k, d).blockers;
        out["delta"] = d;
        if (!blockers_out.empty()) kgg::write_file(blockers_out, kgg::format_points(blockers));
      }
      const kgg::BlockingReport rep = kgg::verify_blocked(f.points, blockers, block_k, pol);
      out["blockers"] = blockers.size();
      out["blocked"] = rep.blocked;
      json unblocked = json::array();
      for (const auto& e : rep.unblocked) unblocked.push_back({e.u, e.v});
      out["unblocked"] = std::move(unblocked);
      emit(common.out, out.dump(2) + "\n");
      if (!common.svg.empty()) {
        kgg::Scene scene{f.points, f.labels, blockers, rep.unblocked, {}, {}};
        kgg::write_file(common.svg, kgg::render_svg(scene));
      }
      return rep.blocked ? 0 : kExitVerification;
    }
  } catch (const kgg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

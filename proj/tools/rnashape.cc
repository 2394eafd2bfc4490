// Command-line front end. Every subcommand parses its input, calls one
// library entry point and prints the result; exit status reflects the error
// class (2 usage, 3 input, 4 infeasible, 5 internal consistency).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rnashape/bijections.h"
#include "rnashape/diagram.h"
#include "rnashape/enumerate.h"
#include "rnashape/errors.h"
#include "rnashape/fatgraph.h"
#include "rnashape/sample.h"
#include "rnashape/series.h"
#include "rnashape/shape.h"

namespace {

using nlohmann::json;
using namespace rnashape;

enum ExitCode { kOk = 0, kUsage = 2, kInput = 3, kInfeasible = 4, kInternal = 5 };

struct InputOptions {
  std::string path = "-";
  std::string inline_diagram;
  bool batch = false;
};

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.path, "Diagram file ('-' for stdin)");
  cmd->add_option("-d,--diagram", in.inline_diagram,
                  "Inline diagram, e.g. \"2 2 | 1-4 2-3\"");
  cmd->add_flag("--batch", in.batch,
                "Read one diagram per blank-line separated paragraph");
}

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) throw rnashape::Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<Diagram> ReadDiagrams(const InputOptions& in) {
  if (!in.inline_diagram.empty()) return {ParseDiagram(in.inline_diagram)};
  std::string text = ReadAll(in.path);
  if (in.batch) return ParseDiagramBatch(text);
  return {ParseDiagram(text)};
}

json CyclesJson(const BoundaryDecomposition& bd) {
  json cycles = json::array();
  for (const auto& c : bd.cycles) cycles.push_back(c);
  return cycles;
}

json LoopsJson(const LoopProfile& p) {
  json details = json::array();
  for (const Loop& l : p.loops) {
    details.push_back({{"type", ToString(l.type)},
                       {"length", l.length},
                       {"pseudoknot", l.pseudoknot},
                       {"class", l.alpha ? "alpha" : "beta"}});
  }
  return {{"plant", p.plant},       {"hairpin", p.hairpin},
          {"interior", p.interior}, {"multi", p.multi},
          {"pseudoknot", p.pseudoknot}, {"empty", p.empty},
          {"alpha", p.alpha},       {"beta", p.beta},
          {"details", details}};
}

json PolyJson(const IntPolynomial& p) {
  json m = json::object();
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] != 0) m[std::to_string(k)] = p[k].str();
  }
  return m;
}

json SeriesJson(const PowerSeries& s) {
  json m = json::object();
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k] != 0) m[std::to_string(k)] = s[k].str();
  }
  return m;
}

Diagram MaybePlanted(const Diagram& d, bool planted) {
  return planted ? d.AssumePlanted() : d;
}

std::optional<std::filesystem::path> CacheDir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return std::nullopt;
}

void PrintError(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology, shapes and shape polynomials of RNA complexes"};
  app.require_subcommand(1);

  // genus / loops
  InputOptions genus_in;
  bool genus_planted = false;
  auto* genus_cmd = app.add_subcommand("genus", "Boundary cycles and genus");
  AddInputOptions(genus_cmd, genus_in);
  genus_cmd->add_flag("--planted", genus_planted,
                      "Treat outermost arcs as rainbows");

  InputOptions loops_in;
  bool loops_planted = false;
  auto* loops_cmd = app.add_subcommand("loops", "Loop classification");
  AddInputOptions(loops_cmd, loops_in);
  loops_cmd->add_flag("--planted", loops_planted,
                      "Treat outermost arcs as rainbows");

  // shape
  InputOptions shape_in;
  bool shape_stacks = false;
  auto* shape_cmd = app.add_subcommand("shape", "Project a diagram to its shape");
  AddInputOptions(shape_cmd, shape_in);
  shape_cmd->add_flag("--stacks", shape_stacks,
                      "Also report the stacks of the input diagram");

  // bij
  InputOptions bij_in;
  std::string direction;
  auto* bij_cmd = app.add_subcommand("bij", "Apply theta/eta bijections to shapes");
  bij_cmd->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"theta", "theta-inv", "eta", "eta-inv"}));
  AddInputOptions(bij_cmd, bij_in);

  // poly
  int poly_b = 1, poly_g = 1;
  bool poly_general = false;
  auto* poly_cmd = app.add_subcommand("poly", "Shape polynomial");
  poly_cmd->add_option("--backbones", poly_b)->check(CLI::IsMember({1, 2}));
  poly_cmd->add_option("--genus", poly_g)->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_flag("--general", poly_general,
                     "Two backbones: include disconnected pairs");

  // series
  std::string series_kind;
  int series_order = 20, series_l = 1, series_g = 0;
  auto* series_cmd = app.add_subcommand("series", "Fiber / matching series");
  series_cmd->add_option("kind", series_kind)
      ->required()
      ->check(CLI::IsMember({"fiber", "w", "catalan"}));
  series_cmd->add_option("--order", series_order)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--l", series_l, "Non-rainbow arcs of the shape")
      ->check(CLI::PositiveNumber);
  series_cmd->add_option("--genus", series_g)->check(CLI::NonNegativeNumber);

  // enumerate
  int en_b = 1, en_g = 1, en_arcs = 0, en_threads = 1;
  bool en_profile = false, en_count = false, en_disconnected = false;
  bool en_matchings = false, en_connected = false, en_exact = false;
  std::uint64_t en_limit = 0;
  auto* en_cmd = app.add_subcommand("enumerate", "Brute-force enumeration");
  en_cmd->add_option("--backbones", en_b)->check(CLI::PositiveNumber);
  en_cmd->add_option("--genus", en_g)->check(CLI::NonNegativeNumber);
  en_cmd->add_flag("--profile", en_profile, "Emit arc count -> number JSON");
  en_cmd->add_flag("--count", en_count, "Emit only the number found");
  en_cmd->add_flag("--disconnected", en_disconnected,
                   "Two backbones: include pairs of one-backbone shapes");
  en_cmd->add_flag("--matchings", en_matchings,
                   "Enumerate perfect matchings instead of shapes");
  en_cmd->add_option("--arcs", en_arcs, "Matchings: number of arcs");
  en_cmd->add_flag("--connected", en_connected, "Matchings: connected only");
  en_cmd->add_flag("--exact", en_exact,
                   "Matchings: genus equal to --genus instead of at most");
  en_cmd->add_option("--node-limit", en_limit);
  en_cmd->add_option("--threads", en_threads)->check(CLI::PositiveNumber);

  // sample
  SamplerConfig sc;
  sc.count = 1;
  std::optional<int> sample_arcs;
  bool stats_only = false, best_effort = false;
  std::uint64_t sample_limit = 0;
  int sample_threads = 1;
  std::string sample_format = "json", cache_flag;
  auto* sample_cmd = app.add_subcommand("sample", "Uniform two-backbone shapes");
  sample_cmd->add_option("--genus", sc.genus)->required()->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--count", sc.count)->required();
  sample_cmd->add_option("--arcs", sample_arcs, "Only shapes with this many arcs");
  sample_cmd->add_option("--seed", sc.seed);
  sample_cmd->add_flag("--stats-only", stats_only);
  sample_cmd->add_option("--format", sample_format, "Stats footer format")
      ->check(CLI::IsMember({"json", "csv"}));
  sample_cmd->add_flag("--best-effort", best_effort,
                       "Allow genus >= 2 (enumerates a large table)");
  sample_cmd->add_option("--node-limit", sample_limit);
  sample_cmd->add_option("--threads", sample_threads)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--cache-dir", cache_flag,
                         std::string("Shape table cache (default $") +
                             kCacheDirEnv + ")");

  // fiber
  InputOptions fiber_in;
  int fiber_arcs = 1;
  auto* fiber_cmd = app.add_subcommand("fiber", "Count matchings in a shape's fiber");
  AddInputOptions(fiber_cmd, fiber_in);
  fiber_cmd->add_option("--arcs", fiber_arcs)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (genus_cmd->parsed() || loops_cmd->parsed()) {
      const bool loops = loops_cmd->parsed();
      const InputOptions& in = loops ? loops_in : genus_in;
      const bool planted = loops ? loops_planted : genus_planted;
      for (const Diagram& raw : ReadDiagrams(in)) {
        Diagram d = MaybePlanted(raw, planted);
        BoundaryDecomposition bd = BoundaryComponents(d);
        json out = {{"r", bd.r},
                    {"genus", bd.genus},
                    {"cycles", CyclesJson(bd)},
                    {"component_genera", bd.component_genera}};
        if (loops) out["loops"] = LoopsJson(ClassifyLoops(d, bd));
        std::cout << out.dump() << '\n';
      }
    } else if (shape_cmd->parsed()) {
      bool first = true;
      for (const Diagram& d : ReadDiagrams(shape_in)) {
        ProjectedShape p = ProjectShape(d);
        json meta = {{"genus", Genus(p.shape)},
                     {"arcs", p.shape.arc_count()},
                     {"empty", p.empty_pure_preshape}};
        meta["class"] = (p.shape.backbones() == 1 && !p.empty_pure_preshape)
                            ? json(ToString(ClassifyShape(p.shape)))
                            : json(nullptr);
        if (shape_stacks) {
          json stacks = json::array();
          for (const Stack& s : Stacks(d)) {
            stacks.push_back({{"outer", {s.outer.left, s.outer.right}},
                              {"length", s.length},
                              {"exterior", s.exterior}});
          }
          meta["stacks"] = stacks;
        }
        if (!first) std::cout << '\n';
        first = false;
        std::cout << SerializeDiagram(p.shape) << meta.dump() << '\n';
      }
    } else if (bij_cmd->parsed()) {
      for (const Diagram& raw : ReadDiagrams(bij_in)) {
        Diagram d = raw.AssumePlanted();
        Diagram out = direction == "theta"       ? Theta(d)
                      : direction == "theta-inv" ? ThetaInverse(d)
                      : direction == "eta"       ? Eta(d)
                                                 : EtaInverse(d);
        std::cout << SerializeDiagram(out);
        if (bij_in.batch) std::cout << '\n';
      }
    } else if (poly_cmd->parsed()) {
      IntPolynomial p;
      if (poly_b == 1) {
        p = poly_g == 0 ? IntPolynomial{} : ShapePolynomial1(poly_g);
      } else {
        p = poly_general ? ShapePolynomial2General(poly_g)
                         : ShapePolynomial2(poly_g);
      }
      std::cout << json{{"backbones", poly_b},
                        {"genus", poly_g},
                        {"coefficients", PolyJson(p)},
                        {"total", p.Evaluate(1).str()}}
                       .dump()
                << '\n';
    } else if (series_cmd->parsed()) {
      PowerSeries s = series_kind == "fiber" ? FiberSeries(series_l, series_order)
                      : series_kind == "w"   ? MatchingSeries2(series_g, series_order)
                                             : CatalanSeries(series_order);
      json out = {{"kind", series_kind},
                  {"order", series_order},
                  {"coefficients", SeriesJson(s)}};
      if (series_kind == "fiber") out["l"] = series_l;
      if (series_kind == "w") out["genus"] = series_g;
      std::cout << out.dump() << '\n';
    } else if (en_cmd->parsed()) {
      std::vector<Diagram> found;
      if (en_matchings) {
        EnumSpec spec;
        spec.backbones = en_b;
        spec.min_arcs = spec.max_arcs = en_arcs;
        spec.genus_cap = en_g;
        spec.exact_genus = en_exact;
        spec.connected_only = en_connected;
        spec.node_limit = en_limit;
        std::uint64_t n = EnumerateMatchings(spec, [&](const Diagram& d) {
          if (!en_count && !en_profile) found.push_back(d);
        });
        if (en_count || en_profile) {
          std::cout << json{{"count", n}}.dump() << '\n';
        }
      } else {
        ShapeEnumOptions opt{en_disconnected, en_limit, en_threads};
        found = EnumerateShapes(en_b, en_g, opt);
        if (en_profile) {
          json m = json::object();
          for (auto [k, v] : ArcProfile(found)) m[std::to_string(k)] = v;
          std::cout << json{{"count", found.size()}, {"profile", m}}.dump()
                    << '\n';
          found.clear();
        } else if (en_count) {
          std::cout << json{{"count", found.size()}}.dump() << '\n';
          found.clear();
        }
      }
      for (const Diagram& d : found) std::cout << CanonicalCode(d) << '\n';
    } else if (sample_cmd->parsed()) {
      sc.arcs = sample_arcs;
      if (sc.genus >= 2 && !best_effort) {
        throw InfeasibleError("sampling genus " + std::to_string(sc.genus) +
                              " needs --best-effort");
      }
      TableOptions topt;
      topt.cache_dir = CacheDir(cache_flag);
      topt.enumeration.node_limit = sample_limit;
      topt.enumeration.threads = sample_threads;
      ShapeTable table = BuildTable(1, sc.genus + 1, topt);
      SampleStats stats = SampleShapes(sc, table, [&](const Diagram& d) {
        if (!stats_only) std::cout << CanonicalCode(d) << '\n';
      });
      if (sample_format == "csv") {
        std::cout << stats.ToCsv();
      } else {
        json arcs = json::object(), lengths = json::object();
        for (auto [k, v] : stats.arc_histogram) arcs[std::to_string(k)] = v;
        for (auto [k, v] : stats.loop_length_histogram) {
          lengths[std::to_string(k)] = v;
        }
        std::cout << json{{"samples", stats.samples},
                          {"seed", sc.seed},
                          {"genus", sc.genus},
                          {"attempts", stats.attempts},
                          {"accepted", stats.accepted},
                          {"alpha_mean", stats.alpha_mean()},
                          {"alpha_variance", stats.alpha_variance()},
                          {"beta_mean", stats.beta_mean()},
                          {"beta_variance", stats.beta_variance()},
                          {"arc_histogram", arcs},
                          {"loop_length_histogram", lengths},
                          {"table_digest", table.digest}}
                         .dump()
                  << '\n';
      }
    } else if (fiber_cmd->parsed()) {
      for (const Diagram& raw : ReadDiagrams(fiber_in)) {
        Diagram s = raw.AssumePlanted();
        std::cout << json{{"arcs", fiber_arcs},
                          {"count", CountFiber(s, fiber_arcs)}}
                         .dump()
                  << '\n';
      }
    }
  } catch (const InfeasibleError& e) {
    PrintError("infeasible", e.what());
    return kInfeasible;
  } catch (const ConsistencyError& e) {
    PrintError("consistency", e.what());
    return kInternal;
  } catch (const rnashape::Error& e) {
    PrintError("input", e.what());
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    PrintError("input", e.what());
    return kInput;
  }
  return kOk;
}

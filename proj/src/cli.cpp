#include "mixnull/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixnull/enumerate.hpp"
#include "mixnull/errors.hpp"
#include "mixnull/families.hpp"
#include "mixnull/graph_text.hpp"
#include "mixnull/invariants.hpp"
#include "mixnull/report.hpp"
#include "mixnull/verifier.hpp"

namespace mixnull {
namespace {

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

struct Settings {
  std::string analyze_path = "-";

  std::size_t nmin = 1;
  std::size_t nmax = 6;
  std::size_t emax = 9;
  std::size_t jobs = 1;
  std::uint64_t cap = kDefaultOrientationCap;
  bool halve = false;
  bool disconnected = false;
  bool no_lemmas = false;
  std::string graph6_path;

  std::size_t s1 = 0, s2 = 0, s3 = 0, c = 0, k = 0;
  std::uint64_t seed = 0;
  std::string meta_path;

  std::string ped_path = "-";
  bool closure = false;

  std::size_t cycle_n = 0;
  std::size_t cycle_sigma = 0;
};

int cmd_analyze(const Settings& s, std::istream& in, std::ostream& out) {
  const MixedGraph g = parse_graph(slurp(s.analyze_path, in));
  out << to_json(analyze(g)).dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
  VerifyOptions opt;
  opt.jobs = s.jobs;
  opt.halve = s.halve;
  opt.orientation_cap = s.cap;
  opt.lemma_checks = !s.no_lemmas;
  VerificationReport report;
  Json scope;
  if (!s.graph6_path.empty()) {
    std::istringstream g6(slurp(s.graph6_path, in));
    const auto graphs = read_graph6_stream(g6);
    report = verify_graphs(graphs, opt);
    scope = Json{{"graph6", s.graph6_path}, {"halve", s.halve}};
  } else {
    EnumerationScope sc;
    sc.n_min = s.nmin;
    sc.n_max = s.nmax;
    sc.e_max = s.emax;
    sc.connected_only = !s.disconnected;
    sc.orientation_cap = s.cap;
    report = verify_all(sc, opt);
    scope = Json{{"n_min", sc.n_min},
                 {"n_max", sc.n_max},
                 {"e_max", sc.e_max},
                 {"connected_only", sc.connected_only},
                 {"orientation_cap", sc.orientation_cap},
                 {"halve", s.halve}};
  }
  Json j;
  j["scope"] = scope;
  const Json body = to_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  out << j.dump(2) << '\n';
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_family(const Settings& s, bool by_k, std::ostream& out, std::ostream& err) {
  FamilySpec spec = by_k ? gen_for_k(s.c, s.k) : FamilySpec{s.s1, s.s2, s.s3, 0};
  spec.orientation_seed = s.seed;
  const FamilyGraph fam = gen_theorem2_family(spec);
  out << serialize_graph(fam.graph);
  const std::string meta = family_metadata(spec).dump(2) + "\n";
  if (s.meta_path.empty()) {
    err << meta;
  } else {
    std::ofstream file(s.meta_path);
    if (!file) throw InputError("cannot write " + s.meta_path);
    file << meta;
  }
  return kExitOk;
}

int cmd_ped(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const MixedGraph g = parse_graph(slurp(s.ped_path, in));
  if (s.closure) {
    out << serialize_graph(ped_closure(g));
    return kExitOk;
  }
  if (pendant_vertices(g).empty()) {
    err << "error: graph has no pendant vertex\n";
    return kExitViolation;
  }
  out << serialize_graph(ped(g));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact nullity and inertia of mixed graphs", "mixnull"};
  app.require_subcommand(1);
  Settings s;

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectral and structural report as JSON");
  analyze_cmd->add_option("path", s.analyze_path, "graph file, or - for stdin");

  auto* verify_cmd = app.add_subcommand("verify", "Check every orientation of small graphs");
  verify_cmd->add_option("--nmin", s.nmin, "smallest order")->capture_default_str();
  verify_cmd->add_option("--nmax", s.nmax, "largest order (at most 8)")->capture_default_str();
  verify_cmd->add_option("--emax", s.emax, "largest edge count")->capture_default_str();
  verify_cmd->add_option("--jobs", s.jobs, "worker threads")->capture_default_str();
  verify_cmd->add_option("--cap", s.cap, "orientation cap per graph")->capture_default_str();
  verify_cmd->add_flag("--halve", s.halve, "skip orientations whose converse comes first");
  verify_cmd->add_flag("--disconnected", s.disconnected, "include disconnected graphs");
  verify_cmd->add_flag("--no-lemmas", s.no_lemmas, "skip per-vertex deletion checks");
  verify_cmd->add_option("--graph6", s.graph6_path, "read underlying graphs from a graph6 file");

  auto* family_cmd = app.add_subcommand("family", "Graph with a prescribed nullity deficit");
  auto* s1_opt = family_cmd->add_option("--s1", s.s1, "triangles");
  auto* s2_opt = family_cmd->add_option("--s2", s.s2, "4-cycles");
  auto* s3_opt = family_cmd->add_option("--s3", s.s3, "4-cycles with a pendant edge");
  auto* c_opt = family_cmd->add_option("--c", s.c, "cyclomatic number");
  auto* k_opt = family_cmd->add_option("--k", s.k, "deficit: eta = n - 2m + 2c - k");
  family_cmd->add_option("--seed", s.seed, "orientation seed, 0 = all undirected");
  family_cmd->add_option("--meta", s.meta_path, "write expected invariants here instead of stderr");

  auto* ped_cmd = app.add_subcommand("ped", "Pendant edge deletion");
  ped_cmd->add_option("path", s.ped_path, "graph file, or - for stdin");
  ped_cmd->add_flag("--closure", s.closure, "repeat while a pendant vertex exists");

  auto* cycle_cmd = app.add_subcommand("cycle", "Mixed cycle with a given signature");
  cycle_cmd->add_option("--n", s.cycle_n, "length")->required();
  cycle_cmd->add_option("--sigma", s.cycle_sigma, "signature")->required();

  std::vector<const char*> argv{"mixnull"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(s, in, out);
    if (verify_cmd->parsed()) return cmd_verify(s, in, out);
    if (family_cmd->parsed()) {
      const bool by_parts = s1_opt->count() + s2_opt->count() + s3_opt->count() > 0;
      const bool by_k = c_opt->count() + k_opt->count() > 0;
      if (by_parts == by_k || (by_k && (c_opt->count() == 0 || k_opt->count() == 0))) {
        err << "error: give either --s1/--s2/--s3 or both --c and --k\n";
        return kExitUsage;
      }
      return cmd_family(s, by_k, out, err);
    }
    if (ped_cmd->parsed()) return cmd_ped(s, in, out, err);
    if (cycle_cmd->parsed()) {
      out << serialize_graph(gen_cycle(s.cycle_n, s.cycle_sigma));
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mixnull

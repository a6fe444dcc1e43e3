// kstab: command-line front end for the stability library.
//
// Exit codes: 0 success, 1 a check or predicate came out false, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kstab/canonical.hpp"
#include "kstab/constructions.hpp"
#include "kstab/enumeration.hpp"
#include "kstab/erdos_rogers.hpp"
#include "kstab/graph6.hpp"
#include "kstab/mis.hpp"
#include "kstab/parallel.hpp"
#include "kstab/stability.hpp"
#include "kstab/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph6 string, or @path naming a file of graph6 lines.
std::vector<kstab::Graph> load_graphs(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    auto graphs = kstab::g6_read_all(in);
    if (graphs.empty()) throw UsageError("no graphs in " + arg.substr(1));
    return graphs;
  }
  return {kstab::g6_decode(arg)};
}

void write_json(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int resolve_jobs(int jobs) { return jobs <= 0 ? kstab::default_jobs() : jobs; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (k,l)-stability of graph independence numbers"};
  app.set_version_flag("--version", kstab::tool_version());
  app.require_subcommand(1);

  int jobs = 0;
  std::string json_path;
  bool allow_long = false;
  app.add_option("--jobs", jobs, "Worker count (default: hardware parallelism)");
  app.add_option("--json", json_path, "Also write results as JSON to this path");
  app.add_flag("--allow-long", allow_long, "Permit the optional long-running order-11 catalog");

  // alpha
  std::string graph_arg;
  bool witness = false;
  auto* alpha_cmd = app.add_subcommand("alpha", "Independence number of each graph");
  alpha_cmd->add_option("graph", graph_arg, "graph6 string or @file")->required();
  alpha_cmd->add_flag("--witness", witness, "Also print a maximum independent set");

  // drop
  int k = 0;
  int l = 0;
  auto* drop_cmd = app.add_subcommand("drop", "Worst-case drop of alpha after removing k vertices");
  drop_cmd->add_option("graph", graph_arg, "graph6 string or @file")->required();
  drop_cmd->add_option("--k", k, "Removal size (omit for the full profile)");

  // stable / tight
  auto* stable_cmd = app.add_subcommand("stable", "Is the graph (k,l)-stable?");
  stable_cmd->add_option("graph", graph_arg, "graph6 string or @file")->required();
  stable_cmd->add_option("--k", k)->required();
  stable_cmd->add_option("--l", l)->required();
  auto* tight_cmd = app.add_subcommand("tight", "Is the graph tight (k,l)-stable?");
  tight_cmd->add_option("graph", graph_arg, "graph6 string or @file")->required();
  tight_cmd->add_option("--k", k)->required();
  tight_cmd->add_option("--l", l)->required();

  // construct
  std::string family;
  int n = 0;
  int m = 0;
  int lift_count = 0;
  std::uint64_t seed = 0;
  std::vector<int> differences;
  std::string base_graph;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction as graph6");
  construct_cmd->add_option("--family", family, "kn_tight, mn_matching, cycle, path, wheel, circulant, stable3, "
                                                "stable4, even20, figure2, lift, sandwich")
      ->required();
  construct_cmd->add_option("--n", n, "Vertex count");
  construct_cmd->add_option("--m", m, "Circulant parameter m (stable3, stable4)");
  construct_cmd->add_option("--k", k, "Circulant parameter k (even20)");
  construct_cmd->add_option("--seed", seed, "Seed (sandwich)");
  construct_cmd->add_option("--diffs", differences, "Differences (circulant)")->delimiter(',');
  construct_cmd->add_option("--graph", base_graph, "Base graph6 (lift)");
  construct_cmd->add_option("--j", lift_count, "Isolated vertices to add (lift)");

  // enumerate
  std::vector<std::string> filters;
  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All graphs on n vertices up to isomorphism");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--filter", filters, "NAME:ARGS, repeatable or joined with '+'");
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of classes");

  // erdos-rogers
  int s = 0;
  int t = 0;
  bool table = false;
  auto* er_cmd = app.add_subcommand("erdos-rogers", "Exact Erdos-Rogers values f_{s,s+t}(n), n <= 8");
  er_cmd->add_option("--n", n)->required();
  er_cmd->add_option("--s", s);
  er_cmd->add_option("--t", t);
  er_cmd->add_flag("--table", table, "CSV grid over every (s,t)");

  // verify
  std::vector<std::string> suites;
  int max_n = kstab::kMaxSuiteOrder;
  std::string format = "text";
  bool deterministic = false;
  std::string output_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suites");
  verify_cmd->add_option("--suite", suites, "Suite name, repeatable (default: all)")
      ->check(CLI::IsMember(kstab::suite_names()));
  verify_cmd->add_option("--max-n", max_n, "Largest order for catalog suites (9 adds the n=9 uniqueness run)");
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output", output_path, "Write the report here instead of standard output");
  verify_cmd->add_flag("--deterministic", deterministic, "Write 0 for every duration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    using nlohmann::ordered_json;
    ordered_json results = ordered_json::array();
    int exit_code = kExitOk;

    if (*alpha_cmd) {
      for (const auto& g : load_graphs(graph_arg)) {
        const auto r = kstab::max_independent_set(g);
        std::cout << r.alpha;
        if (witness) std::cout << ' ' << r.witness.to_string();
        std::cout << '\n';
        results.push_back({{"graph", kstab::g6_encode(g)}, {"alpha", r.alpha}, {"witness", r.witness.labels()}});
      }
    } else if (*drop_cmd) {
      for (const auto& g : load_graphs(graph_arg)) {
        if (drop_cmd->count("--k") > 0) {
          const int d = kstab::alpha_drop(g, k);
          std::cout << d << '\n';
          results.push_back({{"graph", kstab::g6_encode(g)}, {"k", k}, {"drop", d}});
        } else {
          const auto p = kstab::stability_profile(g);
          std::cout << "alpha=" << p.alpha << " drops=";
          for (int i = 1; i <= p.k_max(); ++i) std::cout << (i > 1 ? "," : "") << p.drops[static_cast<std::size_t>(i)];
          std::cout << " stable_vertices=" << p.stable_vertex_count << '\n';
          std::vector<int> drops(p.drops.begin() + 1, p.drops.end());
          results.push_back({{"graph", kstab::g6_encode(g)},
                             {"alpha", p.alpha},
                             {"drops", drops},
                             {"stable_vertex_count", p.stable_vertex_count}});
        }
      }
    } else if (*stable_cmd || *tight_cmd) {
      const bool want_tight = tight_cmd->parsed();
      for (const auto& g : load_graphs(graph_arg)) {
        const bool v = want_tight ? kstab::is_tight_stable(g, k, l) : kstab::is_stable(g, k, l);
        std::cout << (v ? "true" : "false") << '\n';
        if (!v) exit_code = kExitCheckFailed;
        results.push_back({{"graph", kstab::g6_encode(g)}, {"k", k}, {"l", l}, {want_tight ? "tight" : "stable", v}});
      }
    } else if (*construct_cmd) {
      const auto fam = kstab::parse_family(family);
      if (!fam) throw UsageError("unknown family '" + family + "'");
      kstab::ConstructionSpec spec;
      spec.family = *fam;
      spec.n = n;
      spec.m = m;
      spec.k = k;
      spec.j = lift_count;
      spec.seed = seed;
      spec.differences = differences;
      if (!base_graph.empty()) spec.base = kstab::g6_decode(base_graph);
      const auto g = kstab::construct(spec);
      std::cout << kstab::g6_encode(g) << '\n';
      results.push_back({{"family", family}, {"graph", kstab::g6_encode(g)}});
    } else if (*enumerate_cmd) {
      kstab::Filter filter;
      for (const auto& f : filters) filter.add(kstab::Filter::parse(f));
      kstab::EnumerateOptions options;
      options.jobs = resolve_jobs(jobs);
      options.allow_long = allow_long;
      std::uint64_t count = 0;
      kstab::for_each_class(n, options, [&](const kstab::CatalogEntry& e) {
        if (!filter.empty() && !filter(e.graph)) return;
        ++count;
        if (!count_only) std::cout << e.code.bytes() << '\n';
      });
      if (count_only) std::cout << count << '\n';
      results.push_back({{"n", n}, {"filter", filter.describe()}, {"count", count}});
    } else if (*er_cmd) {
      if (table) {
        std::cout << "s,t,predicted,computed,match\n";
        for (const auto& c : kstab::er_table(n, resolve_jobs(jobs))) {
          std::cout << c.s << ',' << c.t << ',' << (c.predicted ? std::to_string(*c.predicted) : "NA") << ','
                    << c.computed << ',' << (c.match() ? "true" : "false") << '\n';
          if (!c.match()) exit_code = kExitCheckFailed;
          results.push_back({{"s", c.s},
                             {"t", c.t},
                             {"predicted", c.predicted ? ordered_json(*c.predicted) : ordered_json(nullptr)},
                             {"computed", c.computed},
                             {"match", c.match()}});
        }
      } else {
        if (er_cmd->count("--s") == 0 || er_cmd->count("--t") == 0) throw UsageError("--s and --t are required without --table");
        const int value = kstab::er_f(n, s, t, resolve_jobs(jobs));
        const auto predicted = kstab::er_predicted(n, s, t);
        std::cout << value;
        if (predicted) std::cout << " (closed form " << *predicted << ")";
        std::cout << '\n';
        if (predicted && *predicted != value) exit_code = kExitCheckFailed;
        results.push_back({{"n", n}, {"s", s}, {"t", t}, {"computed", value},
                           {"predicted", predicted ? ordered_json(*predicted) : ordered_json(nullptr)}});
      }
    } else if (*verify_cmd) {
      kstab::RunConfig config;
      config.max_n = max_n;
      config.jobs = resolve_jobs(jobs);
      config.allow_long = allow_long;
      config.suites = suites;
      const auto report = kstab::run_all(config);
      std::ostringstream text;
      if (format == "json") {
        text << report.to_json(!deterministic);
      } else {
        report.write_text(text);
      }
      if (output_path.empty()) {
        std::cout << text.str();
      } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << text.str();
      }
      write_json(json_path, report.to_json(!deterministic));
      return report.ok() ? kExitOk : kExitCheckFailed;
    }

    write_json(json_path, results.dump(2) + "\n");
    return exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

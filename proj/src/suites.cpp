#include "kstab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kstab/canonical.hpp"
#include "kstab/constructions.hpp"
#include "kstab/enumeration.hpp"
#include "kstab/erdos_rogers.hpp"
#include "kstab/graph6.hpp"
#include "kstab/mis.hpp"
#include "kstab/parallel.hpp"
#include "kstab/stability.hpp"

namespace kstab {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Check make_check(std::string suite, Params params, std::string expected, std::string actual, bool ok,
                 const Stopwatch& clock) {
  return Check{std::move(suite), std::move(params), std::move(expected), std::move(actual),
               ok ? Status::pass : Status::fail, clock.elapsed_ms()};
}

std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

void check_max_n(int max_n, int cap, const char* suite) {
  if (max_n > cap) {
    throw std::invalid_argument(std::string(suite) + ": max_n " + str(max_n) + " exceeds " + str(cap));
  }
}

// Catalogs and profiles are shared by all suites of a process; entries are
// never modified after insertion.
const std::vector<CatalogEntry>& catalog(int n, int jobs) {
  static std::mutex mutex;
  static std::map<int, std::vector<CatalogEntry>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    EnumerateOptions options;
    options.jobs = jobs;
    it = cache.emplace(n, enumerate(n, options)).first;
  }
  return it->second;
}

ProfileCache& profiles() {
  static ProfileCache cache;
  return cache;
}

std::vector<StabilityProfile> catalog_profiles(int n, int jobs) {
  const auto& entries = catalog(n, jobs);
  std::vector<StabilityProfile> out(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i, std::size_t) {
    out[i] = profiles().get(entries[i].graph, entries[i].code);
  });
  return out;
}

bool tight(const StabilityProfile& p, int k, int l) {
  return p.stable(k, l) && p.alpha == stability_bound(p.n, k, l);
}

}  // namespace

VerificationReport suite_stability_bound(int max_n, int jobs) {
  check_max_n(max_n, kMaxSuiteOrder, "stability-bound");
  VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto profs = catalog_profiles(n, jobs);
    const std::int64_t shared_ms = clock.elapsed_ms();
    for (int k = 1; k < n; ++k) {
      for (int l = 0; l < k; ++l) {
        const Stopwatch cell;
        const int bound = stability_bound(n, k, l);
        int stable = 0;
        int violations = 0;
        for (const auto& p : profs) {
          if (!p.stable(k, l)) continue;
          ++stable;
          if (p.alpha > bound) ++violations;
        }
        Check c = make_check("stability-bound", {{"n", str(n)}, {"k", str(k)}, {"l", str(l)}},
                             "alpha <= " + str(bound) + " for every stable class",
                             "classes=" + str(static_cast<int>(profs.size())) + " stable=" + str(stable) +
                                 " violations=" + str(violations),
                             violations == 0, cell);
        if (k == 1 && l == 0) c.duration_ms += shared_ms;
        report.add(std::move(c));
      }
    }
  }
  return report;
}

VerificationReport suite_hall(int max_n, int jobs) {
  check_max_n(max_n, kMaxSuiteOrder, "hall");
  VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto& entries = catalog(n, jobs);
    const auto profs = catalog_profiles(n, jobs);
    std::atomic<int> stable_classes{0};
    std::atomic<int> sets{0};
    std::atomic<int> failures{0};
    parallel_for(entries.size(), jobs, [&](std::size_t i, std::size_t) {
      if (!profs[i].stable(1, 0)) return;
      ++stable_classes;
      for (VertexSet y : all_max_independent_sets(entries[i].graph)) {
        ++sets;
        if (!saturating_matching(entries[i].graph, y).has_value()) ++failures;
      }
    });
    report.add(make_check("hall", {{"n", str(n)}}, "every maximum independent set of a (1,0)-stable class is saturated",
                          "stable_classes=" + str(stable_classes.load()) + " sets=" + str(sets.load()) +
                              " failures=" + str(failures.load()),
                          failures == 0, clock));
  }
  {
    const Stopwatch clock;
    const Graph g = figure2();
    const auto m = saturating_matching(g, VertexSet::of({3, 4, 5}));
    const bool ok = m && m->pairs == std::vector<Edge>{{3, 0}, {4, 1}, {5, 2}};
    report.add(make_check("hall", {{"graph", "figure2"}, {"Y", "{3,4,5}"}}, "matching {(3,0),(4,1),(5,2)}",
                          m ? "matching of " + str(static_cast<int>(m->pairs.size())) + " edges" : "none", ok, clock));
  }
  return report;
}

VerificationReport suite_uniqueness(int n_odd, int jobs, bool allow_long) {
  const bool allowed = n_odd == 3 || n_odd == 5 || n_odd == 7 || n_odd == 9 || (allow_long && n_odd == 11);
  if (!allowed) throw std::invalid_argument("uniqueness: n must be 3, 5, 7 or 9 (11 with the long-run flag)");
  const Stopwatch clock;
  EnumerateOptions options;
  options.jobs = jobs;
  options.allow_long = allow_long;
  const auto found = search_tight_stable(n_odd, 2, 0, options);
  const CanonicalCode expected = canonical(cycle(n_odd));
  const bool ok = found.size() == 1 && found.front() == expected;
  std::string actual = str(static_cast<int>(found.size())) + " class(es):";
  for (const auto& c : found) actual += " " + c.bytes();
  Params params{{"n", str(n_odd)}, {"k", "2"}, {"l", "0"}};
  if (n_odd == 11) params.emplace_back("method", "alpha-pruned augmentation (independent reconstruction)");
  VerificationReport report;
  report.add(make_check("uniqueness", std::move(params), "exactly the cycle " + expected.bytes(), actual, ok, clock));
  return report;
}

VerificationReport suite_edge_bounds(int max_n, int jobs) {
  check_max_n(max_n, kMaxSuiteOrder, "edge-bounds");
  VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto& entries = catalog(n, jobs);
    const auto profs = catalog_profiles(n, jobs);
    const int lo = mn_matching(n).edge_count();
    const int hi = kn_tight(n).edge_count();
    const CanonicalCode low_code = canonical(mn_matching(n));
    const CanonicalCode high_code = canonical(kn_tight(n));
    int count = 0;
    int min_edges = hi + 1;
    int max_edges = -1;
    int outside = 0;
    bool has_low = false;
    bool has_high = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!tight(profs[i], 1, 0)) continue;
      ++count;
      const int e = entries[i].graph.edge_count();
      min_edges = std::min(min_edges, e);
      max_edges = std::max(max_edges, e);
      if (e < lo || e > hi) ++outside;
      has_low = has_low || entries[i].code == low_code;
      has_high = has_high || entries[i].code == high_code;
    }
    const bool ok = count > 0 && outside == 0 && min_edges == lo && max_edges == hi && has_low && has_high;
    report.add(make_check("edge-bounds", {{"n", str(n)}},
                          "edges in [" + str(lo) + ", " + str(hi) + "], both ends attained by the constructions",
                          "tight_classes=" + str(count) + " edges in [" + str(min_edges) + ", " + str(max_edges) +
                              "] outside=" + str(outside) + " matching_found=" + str(has_low) +
                              " bipartite_found=" + str(has_high),
                          ok, clock));
  }
  return report;
}

VerificationReport suite_stable_vertex_bound(int max_n, int jobs) {
  check_max_n(max_n, kMaxSuiteOrder, "stable-vertex-bound");
  VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto profs = catalog_profiles(n, jobs);
    int violations = 0;
    int equality = 0;
    for (const auto& p : profs) {
      const int bound = stable_vertex_bound(n, p.stable_vertex_count);
      if (p.alpha > bound) ++violations;
      if (p.alpha == bound) ++equality;
    }
    report.add(make_check("stable-vertex-bound", {{"n", str(n)}}, "alpha <= floor(n - m/2) for every class",
                          "classes=" + str(static_cast<int>(profs.size())) + " equality=" + str(equality) +
                              " violations=" + str(violations),
                          violations == 0, clock));
  }
  for (int n : {6, 8}) {
    for (int m : {2, 4, 6}) {
      const Stopwatch clock;
      const int side = (m + 1) / 2;
      const Graph g = lift(kn_tight(2 * side), n - 2 * side);
      const int count = stable_vertex_count(g);
      const int a = alpha(g);
      const int bound = stable_vertex_bound(n, m);
      report.add(make_check("stable-vertex-bound", {{"n", str(n)}, {"m", str(m)}, {"witness", "K_{m/2,m/2}+isolated"}},
                            "m=" + str(m) + " alpha=" + str(bound),
                            "m=" + str(count) + " alpha=" + str(a), count == m && a == bound, clock));
    }
  }
  return report;
}

VerificationReport suite_lift(int max_n, int jobs) {
  check_max_n(max_n, kMaxSuiteOrder - 1, "lift");
  VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto& entries = catalog(n, jobs);
    const auto profs = catalog_profiles(n, jobs);
    std::atomic<int> tight_pairs{0};
    std::atomic<int> violations{0};
    parallel_for(entries.size(), jobs, [&](std::size_t i, std::size_t) {
      const Graph lifted = lift(entries[i].graph, 1);
      for (int k = 1; k < n; ++k) {
        for (int l = 0; l < k; ++l) {
          if (!tight(profs[i], k, l)) continue;
          ++tight_pairs;
          if (!is_tight_stable(lifted, k + 1, l + 1)) ++violations;
        }
      }
    });
    report.add(make_check("lift", {{"n", str(n)}}, "every tight (k,l) class lifts to tight (k+1,l+1)",
                          "tight_pairs=" + str(tight_pairs.load()) + " violations=" + str(violations.load()),
                          violations == 0, clock));
  }
  return report;
}

VerificationReport suite_erdos_rogers(int max_n, int jobs) {
  check_max_n(max_n, kMaxErdosRogersOrder, "erdos-rogers");
  VerificationReport report;
  for (int n = 3; n <= max_n; ++n) {
    const Stopwatch clock;
    const auto cells = er_table(n, jobs);
    int skipped = 0;
    for (const ErCell& c : cells) {
      if (!c.predicted) {
        ++skipped;
        continue;
      }
      report.add(make_check("erdos-rogers", {{"n", str(n)}, {"s", str(c.s)}, {"t", str(c.t)}}, "f = " + str(*c.predicted),
                            "f = " + str(c.computed), c.computed == *c.predicted, clock));
    }
    report.add(make_check("erdos-rogers", {{"n", str(n)}, {"cells", "not-applicable"}},
                          "closed form inapplicable cells are skipped", "skipped=" + str(skipped), true, clock));
  }
  return report;
}

VerificationReport suite_constructions(int jobs) {
  VerificationReport report;
  const std::string suite = "constructions";

  for (int m : {3, 4, 5}) {
    const Stopwatch clock;
    const int a = alpha(stable3_circulant(m));
    report.add(make_check(suite, {{"family", "stable3"}, {"m", str(m)}, {"property", "alpha"}}, "alpha = " + str(m * m),
                          "alpha = " + str(a), a == m * m, clock));
  }
  for (int m : {3, 4}) {
    const Stopwatch clock;
    const bool s = is_stable(stable3_circulant(m), 3, 0);
    report.add(make_check(suite, {{"family", "stable3"}, {"m", str(m)}, {"property", "(3,0)-stable"}}, "true", str(s), s,
                          clock));
  }
  {
    const Stopwatch clock;
    const Graph g = stable4_circulant(3);
    const bool s = is_stable(g, 4, 0);
    report.add(make_check(suite, {{"family", "stable4"}, {"m", "3"}, {"property", "(4,0)-stable"}}, "true",
                          str(s) + " (alpha = " + str(alpha(g)) + ")", s, clock));
  }

  auto tight_check = [&](const std::string& family, int n, const Graph& g, int k, int l) {
    const Stopwatch clock;
    const bool t = is_tight_stable(g, k, l);
    report.add(make_check(suite,
                          {{"family", family}, {"n", str(n)}, {"property", "tight (" + str(k) + "," + str(l) + ")-stable"}},
                          "true", str(t) + " (alpha = " + str(alpha(g)) + ")", t, clock));
  };
  for (int n = 3; n <= 15; n += 2) tight_check("cycle", n, cycle(n), 2, 0);
  for (int n = 4; n <= 14; n += 2) tight_check("wheel", n, wheel(n), 2, 0);
  for (int n = 2; n <= 14; ++n) tight_check("kn_tight", n, kn_tight(n), 1, 0);
  for (int n = 3; n <= 14; ++n) tight_check("path", n, path(n), 2, 1);
  for (int n = 2; n <= 14; ++n) tight_check("mn_matching", n, mn_matching(n), 1, 0);
  tight_check("figure2", 6, figure2(), 1, 0);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    tight_check("sandwich(seed=" + std::to_string(seed) + ")", 8, sandwich_sample(8, seed), 1, 0);
  }

  {
    const Stopwatch clock;
    EnumerateOptions options;
    options.jobs = jobs;
    const auto found = search_tight_stable(6, 3, 0, options);
    report.add(make_check(suite, {{"search", "tight (3,0)-stable"}, {"n", "6"}}, "no class",
                          str(static_cast<int>(found.size())) + " class(es)", found.empty(), clock));
  }

  // The family is claimed tight for every k >= 3; for odd k both differences are
  // odd, the graph is bipartite and alpha = k exceeds the tight value k - 1.
  for (int k : {3, 4, 5, 6}) {
    const Stopwatch clock;
    const Graph g = even20_circulant(k);
    const bool stable = is_stable(g, 2, 0);
    const bool t = stable && alpha(g) == stability_bound(2 * k, 2, 0);
    Check c = make_check(suite, {{"family", "even20"}, {"k", str(k)}, {"property", "tight (2,0)-stable"}},
                         "true (claimed: tight (2,0)-stable for every k >= 3)",
                         "tight=" + str(t) + " stable=" + str(stable) + " alpha=" + str(alpha(g)) +
                             " tight_alpha=" + str(stability_bound(2 * k, 2, 0)),
                         t, clock);
    if (!t && k % 2 == 1) c.status = Status::discrepancy_noted;
    report.add(std::move(c));
  }

  // includes lift(cycle(5),1) at n=6 and lift(cycle(7),2) at n=9
  for (int n = 3; n <= 12; ++n) {
    for (int l = 0; l + 2 < n; ++l) {
      tight_check("lift(kn_tight(" + str(n - l) + ")," + str(l) + ")", n, lift(kn_tight(n - l), l), l + 1, l);
      const int base = n - l;
      const bool odd = base % 2 == 1;
      const std::string name = std::string(odd ? "cycle" : "wheel") + "(" + str(base) + ")";
      tight_check("lift(" + name + "," + str(l) + ")", n, lift(odd ? cycle(base) : wheel(base), l), l + 2, l);
    }
  }
  return report;
}

std::vector<std::string> pinned_discrepancies() {
  return {
      "constructions[family=even20,k=3,property=tight (2,0)-stable]",
      "constructions[family=even20,k=5,property=tight (2,0)-stable]",
  };
}

Check discrepancy_pin_check(const VerificationReport& report) {
  const Stopwatch clock;
  const auto observed = report.discrepancy_keys();
  const auto pinned = pinned_discrepancies();
  auto join = [](const std::vector<std::string>& keys) {
    std::string out;
    for (const auto& k : keys) out += (out.empty() ? "" : "; ") + k;
    return out.empty() ? std::string("none") : out;
  };
  return make_check("discrepancy-pin", {}, join(pinned), join(observed), observed == pinned, clock);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"stability-bound", "hall",       "stable-vertex-bound", "lift",
                                              "edge-bounds",     "erdos-rogers", "uniqueness",        "constructions"};
  return names;
}

VerificationReport run_all(const RunConfig& config) {
  const auto& names = suite_names();
  for (const auto& s : config.suites) {
    if (std::find(names.begin(), names.end(), s) == names.end()) throw std::invalid_argument("unknown suite '" + s + "'");
  }
  auto selected = [&](const std::string& name) {
    return config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end();
  };
  const int catalog_n = std::min(config.max_n, kMaxSuiteOrder);
  const int jobs = config.jobs;

  VerificationReport report;
  if (selected("stability-bound")) report.append(suite_stability_bound(catalog_n, jobs));
  if (selected("hall")) report.append(suite_hall(catalog_n, jobs));
  if (selected("stable-vertex-bound")) report.append(suite_stable_vertex_bound(catalog_n, jobs));
  if (selected("lift")) report.append(suite_lift(std::min(catalog_n, kMaxSuiteOrder - 1), jobs));
  if (selected("edge-bounds")) report.append(suite_edge_bounds(catalog_n, jobs));
  if (selected("erdos-rogers")) report.append(suite_erdos_rogers(std::min(catalog_n, kMaxErdosRogersOrder), jobs));
  if (selected("uniqueness")) {
    for (int n = 3; n <= config.max_n && n <= kMaxLongCatalogOrder; n += 2) {
      if (n == kMaxLongCatalogOrder && !config.allow_long) break;
      report.append(suite_uniqueness(n, jobs, config.allow_long));
    }
  }
  if (selected("constructions")) {
    report.append(suite_constructions(jobs));
    report.add(discrepancy_pin_check(report));
  }
  return report;
}

}  // namespace kstab

#include "kstab/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "kstab/mis.hpp"
#include "kstab/parallel.hpp"
#include "kstab/stability.hpp"

namespace kstab {

namespace {

// Nodes at this order are distributed across workers; shallower levels are
// built serially.
constexpr int kSplitOrder = 7;

void check_order(int n, const EnumerateOptions& options) {
  const int cap = options.allow_long ? kMaxLongCatalogOrder : kMaxCatalogOrder;
  if (n < 1 || n > cap) {
    throw std::invalid_argument("catalog order " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]" +
                                (n == kMaxLongCatalogOrder ? " (needs the long-run flag)" : ""));
  }
}

// (degree, sum of neighbour degrees) packed into one integer.
std::array<int, kMaxVertices> vertex_invariants(const Graph& g) {
  std::array<int, kMaxVertices> deg{};
  for (int v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::array<int, kMaxVertices> inv{};
  for (int v = 0; v < g.order(); ++v) {
    int sum = 0;
    for (int u : g.neighbors(v)) sum += deg[static_cast<std::size_t>(u)];
    inv[static_cast<std::size_t>(v)] = (deg[static_cast<std::size_t>(v)] << 12) | sum;
  }
  return inv;
}

class Augmenter {
 public:
  Augmenter(int target, const GraphPredicate& hereditary) : target_(target), hereditary_(hereditary) {}

  // Accepted one-vertex extensions of a canonical parent, one per class.
  std::vector<CatalogEntry> children(const Graph& parent) const {
    const int j = parent.order();
    std::vector<CatalogEntry> out;
    std::unordered_set<CanonicalCode> seen;
    for (Word x = 0; x <= low_bits(j); ++x) {
      Rows rows = parent.rows();
      rows[static_cast<std::size_t>(j)] = x;
      for (Word rest = x; rest != 0; rest &= rest - 1) rows[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(j);
      const Graph child = make_graph_unchecked(j + 1, rows);
      const auto inv = vertex_invariants(child);
      const int top = *std::max_element(inv.begin(), inv.begin() + child.order());
      const bool candidate = inv[static_cast<std::size_t>(j)] == top && (!hereditary_ || hereditary_(child));
      if (candidate) {
        CanonicalForm form = canonical_form(child);
        if (accept(form, inv, top) && seen.insert(form.code).second) {
          out.push_back(CatalogEntry{std::move(form.code), form.graph});
        }
      }
      if (x == low_bits(j)) break;
    }
    return out;
  }

  template <typename Emit>
  void descend(const CatalogEntry& node, Emit&& emit) const {
    if (node.graph.order() == target_) {
      emit(node);
      return;
    }
    for (const CatalogEntry& child : children(node.graph)) descend(child, emit);
  }

 private:
  // The newest vertex must lie in the orbit of the designated vertex: among
  // the vertices of largest invariant, the one placed last by the canonical
  // labeling.
  static bool accept(const CanonicalForm& form, const std::array<int, kMaxVertices>& inv, int top) {
    const int last = form.graph.order() - 1;
    int chosen = -1;
    for (int pos = last; pos >= 0; --pos) {
      const int v = form.labeling[static_cast<std::size_t>(pos)];
      if (inv[static_cast<std::size_t>(v)] == top) {
        chosen = v;
        break;
      }
    }
    return form.orbits[static_cast<std::size_t>(last)] == form.orbits[static_cast<std::size_t>(chosen)];
  }

  int target_;
  const GraphPredicate& hereditary_;
};

}  // namespace

void for_each_class(int n, const EnumerateOptions& options, const std::function<void(const CatalogEntry&)>& visit) {
  check_order(n, options);
  const Augmenter augmenter(n, options.hereditary);
  const Graph root = Graph::empty(1);
  std::vector<CatalogEntry> level;
  if (!options.hereditary || options.hereditary(root)) level.push_back(CatalogEntry{canonical(root), root});

  const int split = std::min(n, kSplitOrder);
  for (int order = 1; order < split; ++order) {
    std::vector<CatalogEntry> next;
    for (const CatalogEntry& parent : level) {
      auto kids = augmenter.children(parent.graph);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }

  std::mutex visit_mutex;
  parallel_for(level.size(), options.jobs, [&](std::size_t i, std::size_t) {
    augmenter.descend(level[i], [&](const CatalogEntry& entry) {
      std::lock_guard lock(visit_mutex);
      visit(entry);
    });
  });
}

std::vector<CatalogEntry> enumerate(int n, const EnumerateOptions& options) {
  std::vector<CatalogEntry> out;
  for_each_class(n, options, [&](const CatalogEntry& e) { out.push_back(e); });
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  return out;
}

std::uint64_t count_classes(int n, const EnumerateOptions& options) {
  std::uint64_t count = 0;
  for_each_class(n, options, [&](const CatalogEntry&) { ++count; });
  return count;
}

namespace {

std::vector<int> parse_ints(std::string_view args, std::size_t expected, std::string_view term) {
  std::vector<int> out;
  while (!args.empty()) {
    const auto comma = args.find(',');
    const std::string_view piece = args.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("filter '" + std::string(term) + "': bad integer '" + std::string(piece) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (out.size() != expected) {
    throw std::invalid_argument("filter '" + std::string(term) + "' expects " + std::to_string(expected) + " arguments");
  }
  return out;
}

}  // namespace

Filter Filter::parse(std::string_view text) {
  Filter f;
  while (!text.empty()) {
    const auto plus = text.find('+');
    f.add(text.substr(0, plus));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return f;
}

Filter& Filter::add(const Filter& other) {
  for (const Term& t : other.terms_) terms_.push_back(t);
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.cost < b.cost; });
  return *this;
}

Filter& Filter::add(std::string_view term) {
  const auto colon = term.find(':');
  const std::string_view name = term.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : term.substr(colon + 1);
  Term t{std::string(term), 0, {}};
  if (name == "edge-count-range") {
    const auto v = parse_ints(args, 2, term);
    if (v[0] > v[1]) throw std::invalid_argument("filter '" + std::string(term) + "': empty edge-count range");
    t.cost = 0;
    t.test = [lo = v[0], hi = v[1]](const Graph& g) { return g.edge_count() >= lo && g.edge_count() <= hi; };
  } else if (name == "contains-triangle" || name == "triangle-free") {
    parse_ints(args, 0, term);
    const bool want = name == "contains-triangle";
    t.cost = 1;
    t.test = [want](const Graph& g) { return contains_triangle(g) == want; };
  } else if (name == "alpha-equals") {
    const auto v = parse_ints(args, 1, term);
    t.cost = 2;
    t.test = [a = v[0]](const Graph& g) { return alpha(g) == a; };
  } else if (name == "alpha-at-most") {
    const auto v = parse_ints(args, 1, term);
    t.cost = 2;
    t.test = [a = v[0]](const Graph& g) { return alpha(g) <= a; };
  } else if (name == "stable" || name == "tight-stable") {
    const auto v = parse_ints(args, 2, term);
    if (!(v[0] > v[1] && v[1] >= 0)) throw std::invalid_argument("filter '" + std::string(term) + "' needs k > l >= 0");
    const bool tight = name == "tight-stable";
    t.cost = 3;
    t.test = [k = v[0], l = v[1], tight](const Graph& g) {
      if (g.order() <= k) return false;
      return tight ? is_tight_stable(g, k, l) : is_stable(g, k, l);
    };
  } else {
    throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
  }
  terms_.push_back(std::move(t));
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.cost < b.cost; });
  return *this;
}

bool Filter::operator()(const Graph& g) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.test(g); });
}

std::string Filter::describe() const {
  if (terms_.empty()) return "all";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += "+";
    out += t.text;
  }
  return out;
}

std::vector<CanonicalCode> search_with(int n, const Filter& filter, const EnumerateOptions& options) {
  std::vector<CanonicalCode> out;
  for_each_class(n, options, [&](const CatalogEntry& e) {
    if (filter(e.graph)) out.push_back(e.code);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalCode> search_tight_stable(int n, int k, int l, const EnumerateOptions& options) {
  const int tight_alpha = stability_bound(n, k, l);
  EnumerateOptions pruned = options;
  pruned.hereditary = [tight_alpha, outer = options.hereditary](const Graph& g) {
    return alpha(g) <= tight_alpha && (!outer || outer(g));
  };
  std::vector<CanonicalCode> out;
  for_each_class(n, pruned, [&](const CatalogEntry& e) {
    if (alpha(e.graph) == tight_alpha && is_stable(e.graph, k, l)) out.push_back(e.code);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kstab

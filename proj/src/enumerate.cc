#include "rnashape/enumerate.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rnashape/errors.h"
#include "rnashape/fatgraph.h"
#include "rnashape/shape.h"

namespace rnashape {

namespace {

using Visit = std::function<void(const Diagram&)>;

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void Spend() {
    if (limit_ && used_.fetch_add(1, std::memory_order_relaxed) >= limit_) {
      throw InfeasibleError("enumeration node limit of " +
                            std::to_string(limit_) + " exceeded");
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Backtracking over one fixed backbone layout. The leftmost undecided vertex
// is either left unpaired (partial mode) or paired with a later free vertex.
class Searcher {
 public:
  Searcher(const EnumSpec& spec, std::vector<int> lengths, NodeBudget& budget,
           const Visit& visit)
      : spec_(spec),
        lengths_(std::move(lengths)),
        budget_(budget),
        visit_(visit) {
    int n = 0;
    for (int len : lengths_) n += len;
    partner_.assign(n + 1, 0);
    backbone_.assign(n + 1, 0);
    Vertex v = 1;
    for (int k = 0; k < static_cast<int>(lengths_.size()); ++k) {
      first_.push_back(v);
      for (int i = 0; i < lengths_[k]; ++i) backbone_[v++] = k;
    }
    if (spec_.shapes_only) {
      for (int k = 0; k < static_cast<int>(lengths_.size()); ++k) {
        Vertex f = first_[k];
        Vertex l = f + lengths_[k] - 1;
        partner_[f] = l;
        partner_[l] = f;
      }
    }
  }

  // Restricts the first decision to pairing the first free vertex with
  // `partner` (used to split work across threads). 0 means unrestricted.
  void Run(Vertex first_choice = 0) {
    first_choice_ = first_choice;
    Step(1, 0);
  }

 private:
  int n() const { return static_cast<int>(partner_.size()) - 1; }

  bool ViolatesShape(Vertex i, Vertex j) const {
    if (j == i + 1 && backbone_[i] == backbone_[j]) return true;
    // (i-1, j+1) already placed: (i, j) would extend its stack.
    return i > 1 && j < n() && partner_[i - 1] == j + 1;
  }

  void Step(Vertex pos, int arcs) {
    budget_.Spend();
    while (pos <= n() && partner_[pos] != 0) ++pos;
    if (pos > n()) {
      Leaf(arcs);
      return;
    }
    const Vertex only = first_choice_;
    first_choice_ = 0;
    if (!spec_.matching_only && only == 0) Step(pos + 1, arcs);
    if (arcs >= spec_.max_arcs) return;
    for (Vertex j = pos + 1; j <= n(); ++j) {
      if (partner_[j] != 0) continue;
      if (only != 0 && j != only) continue;
      if (spec_.shapes_only && ViolatesShape(pos, j)) continue;
      partner_[pos] = j;
      partner_[j] = pos;
      if (counter_.FormalGenus(lengths_, partner_) <= spec_.genus_cap) {
        Step(pos + 1, arcs + 1);
      }
      partner_[pos] = partner_[j] = 0;
    }
  }

  void Leaf(int arcs) {
    if (arcs < spec_.min_arcs) return;
    if (spec_.exact_genus &&
        counter_.FormalGenus(lengths_, partner_) != spec_.genus_cap) {
      return;
    }
    if (spec_.connected_only && lengths_.size() > 1 && !Connected()) return;
    visit_(Diagram::FromPartners(lengths_, partner_, spec_.shapes_only));
  }

  bool Connected() const {
    std::vector<int> parent(lengths_.size());
    for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int groups = static_cast<int>(parent.size());
    for (Vertex v = 1; v <= n(); ++v) {
      if (partner_[v] > v) {
        int a = find(backbone_[v]);
        int b = find(backbone_[partner_[v]]);
        if (a != b) {
          parent[a] = b;
          --groups;
        }
      }
    }
    return groups == 1;
  }

  const EnumSpec& spec_;
  std::vector<int> lengths_;
  NodeBudget& budget_;
  const Visit& visit_;
  std::vector<Vertex> partner_;
  std::vector<int> backbone_;
  std::vector<Vertex> first_;
  BoundaryCounter counter_;
  Vertex first_choice_ = 0;
};

void Compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    prefix.push_back(first);
    Compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Unplanted backbone layouts to search, in visit order.
std::vector<std::vector<int>> Layouts(const EnumSpec& spec) {
  std::vector<std::vector<int>> out;
  if (!spec.splits.empty()) {
    out = spec.splits;
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      int sa = 0, sb = 0;
      for (int x : a) sa += x;
      for (int x : b) sb += x;
      return sa < sb;
    });
    return out;
  }
  const bool perfect = spec.matching_only || spec.shapes_only;
  const int lo = perfect ? 2 * std::max(spec.min_arcs, 0) : 1;
  const int hi = perfect ? 2 * spec.max_arcs : spec.max_vertices;
  for (int v = std::max(lo, spec.backbones); v <= hi; ++v) {
    if (perfect && v % 2) continue;
    std::vector<int> prefix;
    Compositions(v, spec.backbones, prefix, out);
  }
  return out;
}

std::vector<int> SearchLengths(const EnumSpec& spec,
                               const std::vector<int>& layout) {
  std::vector<int> lengths = layout;
  if (spec.shapes_only) {
    for (int& len : lengths) len += 2;
  }
  return lengths;
}

void Validate(const EnumSpec& spec) {
  if (spec.backbones < 1) throw PreconditionError("backbones must be >= 1");
  if (spec.genus_cap < 0 && spec.backbones == 1) {
    throw PreconditionError("genus cap must be >= 0");
  }
  if (!spec.matching_only && !spec.shapes_only && spec.max_vertices <= 0) {
    throw PreconditionError("partial enumeration needs max_vertices");
  }
}

}  // namespace

std::uint64_t EnumerateMatchings(const EnumSpec& spec_in, const Visit& visit) {
  EnumSpec spec = spec_in;
  if (spec.shapes_only) spec.matching_only = true;
  Validate(spec);
  NodeBudget budget(spec.node_limit);
  std::uint64_t count = 0;
  Visit counting = [&](const Diagram& d) {
    ++count;
    visit(d);
  };
  for (const auto& layout : Layouts(spec)) {
    int v = 0;
    for (int x : layout) v += x;
    if (spec.matching_only && v % 2) continue;
    Searcher s(spec, SearchLengths(spec, layout), budget, counting);
    s.Run();
  }
  return count;
}

int ShapeArcBound(int backbones, int genus) {
  return 6 * (genus + backbones - 1) - 1;
}

std::vector<Diagram> EnumerateShapes(int backbones, int genus,
                                     const ShapeEnumOptions& options) {
  if (backbones != 1 && backbones != 2) {
    throw PreconditionError("shape enumeration supports 1 or 2 backbones");
  }
  if (genus < 0) throw PreconditionError("genus must be >= 0");
  EnumSpec spec;
  spec.backbones = backbones;
  spec.min_arcs = 1;
  spec.max_arcs = ShapeArcBound(backbones, genus) - backbones;
  spec.genus_cap = genus;
  spec.exact_genus = true;
  spec.shapes_only = true;
  spec.connected_only = backbones == 2 && !options.include_disconnected;
  spec.node_limit = options.node_limit;
  if (spec.max_arcs < spec.min_arcs) return {};

  // Tasks: one per (layout, partner of the first inner vertex).
  struct Task {
    std::vector<int> lengths;
    Vertex choice;
  };
  std::vector<Task> tasks;
  for (const auto& layout : Layouts(spec)) {
    auto lengths = SearchLengths(spec, layout);
    int n = 0;
    for (int len : lengths) n += len;
    for (Vertex j = 3; j < n; ++j) tasks.push_back({lengths, j});
  }

  NodeBudget budget(spec.node_limit);
  std::vector<std::vector<Diagram>> results(tasks.size());
  std::atomic<size_t> next_task{0};
  auto worker = [&] {
    for (size_t t = next_task++; t < tasks.size(); t = next_task++) {
      Visit collect = [&results, t](const Diagram& d) {
        results[t].push_back(d);
      };
      Searcher s(spec, tasks[t].lengths, budget, collect);
      s.Run(tasks[t].choice);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&, i] {
        try {
          worker();
        } catch (...) {
          errors[i] = std::current_exception();
          next_task = tasks.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<Diagram> shapes;
  for (auto& r : results) {
    for (auto& d : r) shapes.push_back(std::move(d));
  }
  std::sort(shapes.begin(), shapes.end(), CanonicalLess);
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  return shapes;
}

std::map<int, std::uint64_t> ArcProfile(const std::vector<Diagram>& diagrams) {
  std::map<int, std::uint64_t> profile;
  for (const Diagram& d : diagrams) ++profile[d.arc_count()];
  return profile;
}

std::uint64_t CountFiber(const Diagram& shape, int n,
                         std::uint64_t node_limit) {
  if (shape.backbones() != 2 || !IsShape(shape)) {
    throw PreconditionError("fiber counting expects a two-backbone shape");
  }
  if (n < 1) throw PreconditionError("fiber counting needs n >= 1");
  const int g = Genus(shape);
  EnumSpec spec;
  spec.backbones = 2;
  spec.min_arcs = spec.max_arcs = n;
  spec.genus_cap = g;
  spec.exact_genus = true;
  spec.connected_only = true;
  spec.node_limit = node_limit;
  std::uint64_t count = 0;
  EnumerateMatchings(spec, [&](const Diagram& d) {
    if (ProjectShape(d).shape == shape) ++count;
  });
  return count;
}

}  // namespace rnashape

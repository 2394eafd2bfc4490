#include "rnashape/fatgraph.h"

#include <algorithm>

namespace rnashape {

namespace {

// next[h] = sigma(h): following paired vertex on the same backbone, wrapping.
// Returns the number of backbones without any paired vertex.
int BuildRotation(std::span<const int> lengths, std::span<const Vertex> partner,
                  std::vector<Vertex>& next) {
  next.assign(partner.size(), 0);
  int bare = 0;
  Vertex start = 1;
  for (int len : lengths) {
    Vertex first = 0;
    Vertex prev = 0;
    for (Vertex v = start; v < start + len; ++v) {
      if (partner[v] == 0) continue;
      if (prev) {
        next[prev] = v;
      } else {
        first = v;
      }
      prev = v;
    }
    if (prev) {
      next[prev] = first;
    } else {
      ++bare;
    }
    start += len;
  }
  return bare;
}

int ArcCount(std::span<const Vertex> partner) {
  int arcs = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(partner.size()); ++v) {
    if (partner[v] > v) ++arcs;
  }
  return arcs;
}

}  // namespace

int BoundaryCounter::CountCycles(std::span<const int> lengths,
                                 std::span<const Vertex> partner) {
  int cycles = BuildRotation(lengths, partner, next_);
  seen_.assign(partner.size(), 0);
  for (Vertex h = 1; h < static_cast<Vertex>(partner.size()); ++h) {
    if (partner[h] == 0 || seen_[h]) continue;
    ++cycles;
    for (Vertex x = h; !seen_[x]; x = next_[partner[x]]) seen_[x] = 1;
  }
  return cycles;
}

int BoundaryCounter::FormalGenus(std::span<const int> lengths,
                                 std::span<const Vertex> partner) {
  int r = CountCycles(lengths, partner);
  int b = static_cast<int>(lengths.size());
  return (2 - r - b + ArcCount(partner)) / 2;
}

BoundaryDecomposition BoundaryComponents(const Diagram& d) {
  const auto& partner = d.partners();
  std::vector<Vertex> next;
  int bare = BuildRotation(d.backbone_lengths(), partner, next);

  BoundaryDecomposition bd;
  std::vector<char> seen(partner.size(), 0);
  for (Vertex h = 1; h <= d.size(); ++h) {
    if (!d.paired(h) || seen[h]) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = h; !seen[x]; x = next[partner[x]]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    bd.cycles.push_back(std::move(cycle));
  }
  bd.cycles.resize(bd.cycles.size() + bare);
  bd.r = static_cast<int>(bd.cycles.size());
  bd.genus = (2 - bd.r - d.backbones() + d.arc_count()) / 2;

  auto parts = Components(d);
  if (parts.size() == 1) {
    bd.component_genera.push_back(bd.genus);
  } else {
    for (const Diagram& c : parts) bd.component_genera.push_back(Genus(c));
  }
  return bd;
}

int Genus(const Diagram& d) {
  BoundaryCounter counter;
  return counter.FormalGenus(d.backbone_lengths(), d.partners());
}

LoopProfile ClassifyLoops(const Diagram& d) {
  return ClassifyLoops(d, BoundaryComponents(d));
}

LoopProfile ClassifyLoops(const Diagram& d, const BoundaryDecomposition& bd) {
  LoopProfile p;
  for (const auto& cycle : bd.cycles) {
    Loop loop;
    loop.length = static_cast<int>(cycle.size());
    std::vector<Arc> arcs;
    for (Vertex h : cycle) {
      Vertex w = d.partner(h);
      arcs.push_back({std::min(h, w), std::max(h, w)});
      if (!d.same_backbone(h, w)) loop.alpha = false;
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    bool at_rainbow = false;
    if (loop.length == 1) {
      Vertex first = d.backbone_first(d.backbone_of(cycle[0]));
      while (!d.paired(first)) ++first;
      at_rainbow = first == cycle[0];
    }
    if (loop.length == 0) {
      loop.type = LoopType::kEmpty;
    } else if (at_rainbow) {
      loop.type = LoopType::kPlant;
    } else if (loop.length == 1) {
      loop.type = LoopType::kHairpin;
    } else if (loop.length == 2) {
      loop.type = LoopType::kInterior;
    } else {
      loop.type = LoopType::kMulti;
      for (size_t a = 0; a < arcs.size() && !loop.pseudoknot; ++a) {
        for (size_t b = a + 1; b < arcs.size(); ++b) {
          const Arc& x = arcs[a];
          const Arc& y = arcs[b];
          if ((x.left < y.left && y.left < x.right && x.right < y.right) ||
              (y.left < x.left && x.left < y.right && y.right < x.right)) {
            loop.pseudoknot = true;
            break;
          }
        }
      }
    }

    switch (loop.type) {
      case LoopType::kPlant: ++p.plant; break;
      case LoopType::kHairpin: ++p.hairpin; break;
      case LoopType::kInterior: ++p.interior; break;
      case LoopType::kMulti: ++p.multi; break;
      case LoopType::kEmpty: ++p.empty; break;
    }
    if (loop.pseudoknot) ++p.pseudoknot;
    if (loop.alpha) {
      ++p.alpha;
    } else {
      ++p.beta;
    }
    p.loops.push_back(loop);
  }
  return p;
}

std::string_view ToString(LoopType type) {
  switch (type) {
    case LoopType::kPlant: return "plant";
    case LoopType::kHairpin: return "hairpin";
    case LoopType::kInterior: return "interior";
    case LoopType::kMulti: return "multi";
    case LoopType::kEmpty: return "empty";
  }
  return "?";
}

}  // namespace rnashape

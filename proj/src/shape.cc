#include "rnashape/shape.h"

#include "rnashape/errors.h"

namespace rnashape {

namespace {

struct Work {
  std::vector<int> lengths;
  std::vector<Vertex> partner;
  std::vector<int> backbone;

  explicit Work(const Diagram& d)
      : lengths(d.backbone_lengths()), partner(d.partners()) {
    Reindex();
  }

  int n() const { return static_cast<int>(partner.size()) - 1; }

  void Reindex() {
    backbone.assign(partner.size(), -1);
    Vertex v = 1;
    for (int k = 0; k < static_cast<int>(lengths.size()); ++k) {
      for (int i = 0; i < lengths[k]; ++i) backbone[v++] = k;
    }
  }

  bool IsRainbow(Vertex p) const {
    Vertex q = partner[p];
    int k = backbone[p];
    Vertex first = 1;
    for (int i = 0; i < k; ++i) first += lengths[i];
    return p == first && q == first + lengths[k] - 1;
  }

  bool CollapseStacks() {
    std::vector<Vertex> inner;
    for (Vertex p = 2; p < n(); ++p) {
      Vertex q = partner[p];
      if (q > p && q < n() && partner[p - 1] == q + 1) inner.push_back(p);
    }
    for (Vertex p : inner) {
      partner[partner[p]] = 0;
      partner[p] = 0;
    }
    return !inner.empty();
  }

  bool DeleteOneArcs() {
    bool changed = false;
    for (Vertex p = 1; p < n(); ++p) {
      if (partner[p] == p + 1 && backbone[p] == backbone[p + 1] &&
          !IsRainbow(p)) {
        partner[p] = partner[p + 1] = 0;
        changed = true;
      }
    }
    return changed;
  }

  bool DeleteUnpaired() {
    std::vector<Vertex> relabel(partner.size(), 0);
    Vertex next = 1;
    for (Vertex v = 1; v <= n(); ++v) {
      if (partner[v]) {
        relabel[v] = next++;
      } else {
        --lengths[backbone[v]];
      }
    }
    if (next == static_cast<Vertex>(partner.size())) return false;
    std::vector<Vertex> p(next, 0);
    for (Vertex v = 1; v <= n(); ++v) {
      if (partner[v]) p[relabel[v]] = relabel[partner[v]];
    }
    partner = std::move(p);
    Reindex();
    return true;
  }
};

}  // namespace

Diagram ReducePlanted(const Diagram& planted, ReductionOrder order) {
  if (!HasRainbows(planted)) {
    throw PreconditionError("reduction needs a rainbow over every backbone");
  }
  Work w(planted);
  bool changed = true;
  while (changed) {
    changed = false;
    if (order == ReductionOrder::kCollapseFirst) {
      changed |= w.CollapseStacks();
      changed |= w.DeleteOneArcs();
      changed |= w.DeleteUnpaired();
    } else {
      changed |= w.DeleteOneArcs();
      changed |= w.DeleteUnpaired();
      changed |= w.CollapseStacks();
    }
  }
  return Diagram::FromPartners(std::move(w.lengths), std::move(w.partner),
                               true);
}

ProjectedShape ProjectShape(const Diagram& d) {
  if (d.planted()) throw PreconditionError("projection expects unplanted input");
  Diagram s = ReducePlanted(Plant(d));
  bool empty = s.arc_count() == s.backbones();
  return {std::move(s), empty};
}

bool IsShape(const Diagram& d) {
  if (!HasRainbows(d)) return false;
  const int n = d.size();
  for (Vertex p = 1; p <= n; ++p) {
    Vertex q = d.partner(p);
    if (q == 0) return false;
    if (q < p) continue;
    if (q == p + 1 && d.same_backbone(p, q)) {
      const int k = d.backbone_of(p);
      if (p != d.backbone_first(k) || q != d.backbone_last(k)) return false;
    }
    if (q > p + 2 && d.partner(p + 1) == q - 1) return false;
  }
  return true;
}

ShapeClass ClassifyShape(const Diagram& s) {
  if (s.backbones() != 1) {
    throw PreconditionError("A/B classes are defined for one backbone only");
  }
  if (!IsShape(s)) throw PreconditionError("not a shape");
  if (s.arc_count() < 2) {
    throw PreconditionError("rainbow-only shape has no A/B class");
  }
  const Vertex last_inner = s.size() - 1;
  const Vertex after = s.partner(2) + 1;
  if (after <= last_inner && s.partner(after) == last_inner) {
    return ShapeClass::kA;
  }
  return ShapeClass::kB;
}

std::string_view ToString(ShapeClass c) {
  return c == ShapeClass::kA ? "A" : "B";
}

}  // namespace rnashape

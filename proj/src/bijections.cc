#include "rnashape/bijections.h"

#include "rnashape/errors.h"
#include "rnashape/shape.h"

namespace rnashape {

namespace {

void RequireClass(const Diagram& s, ShapeClass want, const char* op) {
  if (s.backbones() != 1 || !IsShape(s) || s.arc_count() < 2 ||
      ClassifyShape(s) != want) {
    throw PreconditionError(std::string(op) + " expects a one-backbone " +
                            std::string(ToString(want)) + "-shape");
  }
}

}  // namespace

Diagram Theta(const Diagram& a_shape) {
  RequireClass(a_shape, ShapeClass::kA, "theta");
  const int n = a_shape.size();
  const Vertex x = a_shape.partner(2) + 1;
  const Vertex y = n - 1;
  std::vector<Vertex> relabel(n + 1, 0);
  Vertex next = 1;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != x && v != y) relabel[v] = next++;
  }
  std::vector<Vertex> partner(next, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (relabel[v]) partner[relabel[v]] = relabel[a_shape.partner(v)];
  }
  return Diagram::FromPartners({n - 2}, std::move(partner), true);
}

Diagram ThetaInverse(const Diagram& b_shape) {
  RequireClass(b_shape, ShapeClass::kB, "theta-inverse");
  const int n = b_shape.size();
  const Vertex after = b_shape.partner(2);  // new vertex follows this one
  // Old vertex v moves right by one past `after`, and by one more at S.
  auto shift = [&](Vertex v) { return v + (v > after) + (v == n); };
  std::vector<Vertex> partner(n + 3, 0);
  for (Vertex v = 1; v <= n; ++v) {
    partner[shift(v)] = shift(b_shape.partner(v));
  }
  const Vertex x = after + 1;
  const Vertex y = n + 1;
  partner[x] = y;
  partner[y] = x;
  return Diagram::FromPartners({n + 2}, std::move(partner), true);
}

Diagram Eta(const Diagram& q) {
  if (q.backbones() != 2 || !IsShape(q)) {
    throw PreconditionError(
        "eta expects a two-backbone shape or a pair of one-backbone shapes");
  }
  const int n = q.size();
  std::vector<Vertex> partner(n + 3, 0);
  for (Vertex v = 1; v <= n; ++v) partner[v + 1] = q.partner(v) + 1;
  partner[1] = n + 2;
  partner[n + 2] = 1;
  return Diagram::FromPartners({n + 2}, std::move(partner), true);
}

Diagram EtaInverse(const Diagram& a_shape) {
  RequireClass(a_shape, ShapeClass::kA, "eta-inverse");
  const int n = a_shape.size();
  const Vertex cut = a_shape.partner(2);
  std::vector<Vertex> partner(n - 1, 0);
  for (Vertex v = 2; v < n; ++v) partner[v - 1] = a_shape.partner(v) - 1;
  return Diagram::FromPartners({cut - 1, n - 1 - cut}, std::move(partner),
                               true);
}

}  // namespace rnashape

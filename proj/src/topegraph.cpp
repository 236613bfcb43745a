#include "arrchow/topegraph.hpp"

#include <tuple>
#include <algorithm>
#include <ostream>

#include "arrchow/errors.hpp"

namespace arrchow {

int TopeGraph::index_of(const SignVector& s) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || *it != s) return -1;
  return static_cast<int>(it - vertices.begin());
}

TopeGraph build_tope_graph(const Arrangement& a, int jobs) {
  ChamberSearch search = explore_chambers(a, jobs);
  TopeGraph g;
  g.vertices = search.chambers;
  std::sort(g.vertices.begin(), g.vertices.end());
  for (size_t c = 0; c < search.chambers.size(); ++c) {
    const int u = g.index_of(search.chambers[c]);
    for (int h : search.walls[c]) {
      const int v = g.index_of(search.chambers[c].flipped(h));
      if (v < 0) throw std::logic_error("wall crossing left the chamber set");
      if (u < v) g.edges.push_back(TopeEdge{u, v, h});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const TopeEdge& x, const TopeEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  return g;
}

DirectedTopeGraph direct(const TopeGraph& g, const SignVector& base) {
  DirectedTopeGraph d;
  d.base = g.index_of(base);
  if (d.base < 0) throw BaseNotAChamber("base sign vector is not a vertex of the tope graph");
  d.vertices = g.vertices;
  d.indegree.assign(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    // Relative to base, exactly one endpoint agrees with it on the edge's coordinate.
    const bool u_agrees = g.vertices[e.u].signs[e.hyperplane] == base.signs[e.hyperplane];
    TopeEdge arc = u_agrees ? e : TopeEdge{e.v, e.u, e.hyperplane};
    d.indegree[arc.v] += 1;
    d.arcs.push_back(arc);
  }
  return d;
}

namespace {

IntPolynomial degree_census(const std::vector<int>& counts) {
  std::vector<BigInt> c;
  for (int k : counts) {
    if (k >= static_cast<int>(c.size())) c.resize(k + 1);
    c[k] += 1;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial h_via_indegree(const DirectedTopeGraph& g) { return degree_census(g.indegree); }

IntPolynomial h_via_indegree(const Arrangement& a, const SignVector& base, int jobs) {
  return h_via_indegree(direct(build_tope_graph(a, jobs), base));
}

IntPolynomial h_via_separation(const Arrangement& a, const SignVector& base, int jobs) {
  const std::vector<SignVector> all = chambers(a, jobs);
  if (!std::binary_search(all.begin(), all.end(), base)) {
    throw BaseNotAChamber("base sign vector is not a chamber");
  }
  WallOracle oracle(a);
  std::vector<int> sep;
  sep.reserve(all.size());
  for (const auto& c : all) {
    int k = 0;
    for (int h : oracle.walls(c.signs)) k += c.signs[h] != base.signs[h];
    sep.push_back(k);
  }
  return degree_census(sep);
}

void dump_tope_graph(const TopeGraph& g, std::ostream& out) {
  for (const auto& v : g.vertices) out << v.to_string() << '\n';
  for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.hyperplane << '\n';
}

}  // namespace arrchow

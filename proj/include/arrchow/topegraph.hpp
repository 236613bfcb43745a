#pragma once

#include <iosfwd>
#include <vector>

#include "arrchow/arrangement.hpp"
#include "arrchow/poly.hpp"

namespace arrchow {

struct TopeEdge {
  int u, v;       // vertex indices, u < v
  int hyperplane;  // the single coordinate where they differ
};

struct TopeGraph {
  std::vector<SignVector> vertices;  // sorted
  std::vector<TopeEdge> edges;       // sorted by (u, v)

  int index_of(const SignVector& s) const;  // -1 if absent
};

struct DirectedTopeGraph {
  std::vector<SignVector> vertices;
  std::vector<TopeEdge> arcs;  // u -> v: v has more signs differing from the base
  std::vector<int> indegree;
  int base = -1;
};

TopeGraph build_tope_graph(const Arrangement& a, int jobs = 1);
DirectedTopeGraph direct(const TopeGraph& g, const SignVector& base);

IntPolynomial h_via_indegree(const Arrangement& a, const SignVector& base, int jobs = 1);
IntPolynomial h_via_indegree(const DirectedTopeGraph& g);
// Sum over chambers C of t^(number of walls of C separating it from base).
// Walls are recomputed per chamber through the wall oracle.
IntPolynomial h_via_separation(const Arrangement& a, const SignVector& base, int jobs = 1);

// Vertex sign strings one per line, then "i j k" per edge.
void dump_tope_graph(const TopeGraph& g, std::ostream& out);

}  // namespace arrchow

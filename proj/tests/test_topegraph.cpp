#include <doctest.h>

#include <sstream>

#include "arrchow/errors.hpp"
#include "arrchow/feasibility.hpp"
#include "arrchow/permstats.hpp"
#include "arrchow/topegraph.hpp"

using namespace arrchow;

namespace {

SignVector all_plus(const Arrangement& a) { return SignVector{std::vector<int8_t>(a.size(), 1)}; }

std::vector<Arrangement> simplicial_family() {
  std::vector<Arrangement> out;
  out.push_back(make_family(Family::A, 3));
  for (int n = 2; n <= 4; ++n) out.push_back(make_family(Family::B, n));
  out.push_back(make_family(Family::D, 3));
  out.push_back(make_family(Family::D, 4));
  for (int s = 0; s <= 4; ++s) out.push_back(make_family(Family::Dns, 4, s));
  return out;
}

}  // namespace

TEST_CASE("topegraph: small graphs") {
  const Arrangement line(1, {{1}});
  const TopeGraph g = build_tope_graph(line);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  const DirectedTopeGraph d = direct(g, SignVector::from_string("+"));
  CHECK(d.arcs.size() == 1);
  CHECK(d.vertices[d.arcs[0].u].to_string() == "+");
  CHECK(d.vertices[d.arcs[0].v].to_string() == "-");
  CHECK(h_via_indegree(line, SignVector::from_string("+")) == IntPolynomial{1, 1});

  const TopeGraph b2 = build_tope_graph(make_family(Family::B, 2));
  CHECK(b2.vertices.size() == 8);
  CHECK(b2.edges.size() == 8);
  std::vector<int> degree(8, 0);
  for (const auto& e : b2.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int x : degree) CHECK(x == 2);
  for (const auto& base : b2.vertices) {
    const DirectedTopeGraph db = direct(b2, base);
    int sources = 0, sinks = 0;
    std::vector<int> out(8, 0);
    for (const auto& arc : db.arcs) ++out[arc.u];
    for (int v = 0; v < 8; ++v) {
      sources += db.indegree[v] == 0;
      sinks += out[v] == 0;
    }
    CHECK(sources == 1);
    CHECK(sinks == 1);
    CHECK(h_via_indegree(db) == IntPolynomial{1, 6, 1});
  }

  const TopeGraph d3 = build_tope_graph(make_family(Family::D, 3));
  CHECK(d3.vertices.size() == 24);
  std::vector<int> deg3(24, 0);
  for (const auto& e : d3.edges) {
    ++deg3[e.u];
    ++deg3[e.v];
  }
  for (int x : deg3) CHECK(x == 3);
}

TEST_CASE("topegraph: edges differ in exactly the recorded coordinate") {
  for (const Arrangement& a : simplicial_family()) {
    const TopeGraph g = build_tope_graph(a);
    for (const auto& e : g.edges) {
      CHECK(e.u < e.v);
      const auto& x = g.vertices[e.u].signs;
      const auto& y = g.vertices[e.v].signs;
      int diff = 0;
      for (size_t i = 0; i < x.size(); ++i) diff += x[i] != y[i];
      CHECK(diff == 1);
      CHECK(x[e.hyperplane] != y[e.hyperplane]);
      // The shared face is a wall: zeroing the coordinate stays realizable.
      std::vector<int8_t> face = x;
      face[e.hyperplane] = 0;
      CHECK(sign_vector_realizable(a.normals(), a.dim(), face));
    }
  }
}

TEST_CASE("topegraph: orientation from the all-plus base") {
  for (const Arrangement& a : simplicial_family()) {
    const TopeGraph g = build_tope_graph(a);
    const DirectedTopeGraph d = direct(g, all_plus(a));
    long long total = 0;
    int sources = 0;
    for (size_t v = 0; v < d.vertices.size(); ++v) {
      total += d.indegree[v];
      if (d.indegree[v] == 0) {
        ++sources;
        CHECK(d.vertices[v] == all_plus(a));
      }
    }
    CHECK(total == static_cast<long long>(g.edges.size()));
    CHECK(sources == 1);
    for (const auto& arc : d.arcs) CHECK(d.vertices[arc.u].minus_count() < d.vertices[arc.v].minus_count());
  }
  const Arrangement b2 = make_family(Family::B, 2);
  CHECK_THROWS_AS(direct(build_tope_graph(b2), SignVector::from_string("++-+")), BaseNotAChamber);
}

TEST_CASE("topegraph: h-polynomial examples") {
  const Arrangement d3 = make_family(Family::D, 3);
  const Arrangement b3 = make_family(Family::B, 3);
  CHECK(h_via_indegree(d3, all_plus(d3)) == IntPolynomial{1, 11, 11, 1});
  CHECK(h_via_indegree(b3, all_plus(b3)) == IntPolynomial{1, 23, 23, 1});
  CHECK(h_via_separation(d3, all_plus(d3)) == IntPolynomial{1, 11, 11, 1});
}

TEST_CASE("topegraph property: three h-methods agree and are palindromic") {
  for (const Arrangement& a : simplicial_family()) {
    const SignVector base = all_plus(a);
    const IntPolynomial h = h_via_indegree(a, base);
    CHECK(h == h_via_separation(a, base));
    CHECK(h == f_to_h(f_polynomial(f_vector(a))));
    CHECK(is_palindromic(h));
    CHECK(h.coeff_sum() == static_cast<long>(chambers(a).size()));
  }
}

TEST_CASE("topegraph property: base independence over every chamber of D3") {
  const Arrangement d3 = make_family(Family::D, 3);
  const TopeGraph g = build_tope_graph(d3);
  CHECK(g.vertices.size() == 24);
  for (const auto& base : g.vertices) {
    CHECK(h_via_indegree(direct(g, base)) == IntPolynomial{1, 11, 11, 1});
    CHECK(h_via_separation(d3, base) == IntPolynomial{1, 11, 11, 1});
  }
  // A handful of bases of B4 and D_{4,2}.
  for (const Arrangement& a : {make_family(Family::B, 4), make_family(Family::Dns, 4, 2)}) {
    const TopeGraph ga = build_tope_graph(a);
    const IntPolynomial ref = h_via_indegree(direct(ga, all_plus(a)));
    for (size_t k = 0; k < ga.vertices.size(); k += 37) CHECK(h_via_indegree(direct(ga, ga.vertices[k])) == ref);
  }
}

TEST_CASE("topegraph: closed forms agree with tope graph counts") {
  for (int n = 1; n <= 5; ++n) {
    const Arrangement b = make_family(Family::B, n);
    CHECK(h_b_closed(n) == h_via_indegree(b, all_plus(b)));
  }
  for (int n = 3; n <= 4; ++n) {
    const Arrangement d = make_family(Family::D, n);
    CHECK(h_d_closed(n) == h_via_indegree(d, all_plus(d)));
  }
}

TEST_CASE("topegraph: jobs do not change the graph") {
  const Arrangement a = make_family(Family::Dns, 4, 2);
  const TopeGraph g1 = build_tope_graph(a, 1);
  const TopeGraph g3 = build_tope_graph(a, 3);
  CHECK(g1.vertices == g3.vertices);
  REQUIRE(g1.edges.size() == g3.edges.size());
  for (size_t i = 0; i < g1.edges.size(); ++i) {
    CHECK(g1.edges[i].u == g3.edges[i].u);
    CHECK(g1.edges[i].v == g3.edges[i].v);
    CHECK(g1.edges[i].hyperplane == g3.edges[i].hyperplane);
  }
  std::ostringstream o1, o3;
  dump_tope_graph(g1, o1);
  dump_tope_graph(g3, o3);
  CHECK(o1.str() == o3.str());
}

TEST_CASE("topegraph: non-simplicial input keeps only genuine walls") {
  // Four generic planes in R^3: 14 chambers, some of them with four walls.
  const Arrangement a(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  const TopeGraph g = build_tope_graph(a);
  CHECK(g.vertices.size() == 14);
  WallOracle oracle(a);
  for (const auto& v : g.vertices) {
    const auto walls = oracle.walls(v.signs);
    for (int i = 0; i < a.size(); ++i) {
      const bool listed = std::find(walls.begin(), walls.end(), i) != walls.end();
      CHECK(listed == oracle.is_wall_lp(v.signs, i));
    }
  }
  // A 3-dimensional cone over a quadrilateral separates its wall count from the flip count.
  const Arrangement cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}, {1, 1, -1}});
  WallOracle co(cone);
  for (const auto& v : chambers(cone)) {
    const auto walls = co.walls(v.signs);
    for (int i = 0; i < cone.size(); ++i) {
      const bool listed = std::find(walls.begin(), walls.end(), i) != walls.end();
      CHECK(listed == co.is_wall_lp(v.signs, i));
    }
  }
}

// Copyright 2026 The LINSIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "linsia/harness.hpp"
#include "linsia/hierarchy.hpp"
#include "oracles.hpp"

using namespace linsia;
using doctest::Approx;

namespace {

// Two triangles joined by the edge 2-3.
Graph bridged_triangles() {
  return oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Four 5-cliques: 0-1 and 2-3 are tied by a three-edge fan (super weight 3/4),
// the pairs by a single edge (1/2). Parallel bridges would also weigh 1/2.
Graph paired_cliques() {
  return oracle::clique_chain(
      4, 5, {{0, 5}, {0, 6}, {0, 7}, {10, 15}, {10, 16}, {10, 17}, {9, 11}});
}

void check_refinement(const Hierarchy& h) {
  for (std::size_t t = 1; t < h.levels.size(); ++t) {
    const Level& lower = h.levels[t - 1];
    const Level& upper = h.levels[t];
    CHECK(upper.cover.size() < lower.cover.size());
    REQUIRE(upper.parent.size() == lower.cover.size());
    for (std::size_t c = 0; c < lower.cover.size(); ++c) {
      const Community& big = upper.cover[upper.parent[c]];
      for (NodeId v : lower.cover[c]) CHECK(std::binary_search(big.begin(), big.end(), v));
    }
    // Every upper community is exactly the union of its children.
    for (std::size_t u = 0; u < upper.cover.size(); ++u) {
      Community joined;
      for (std::size_t c = 0; c < lower.cover.size(); ++c) {
        if (upper.parent[c] != u) continue;
        joined.insert(joined.end(), lower.cover[c].begin(), lower.cover[c].end());
      }
      std::sort(joined.begin(), joined.end());
      joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
      CHECK(joined == upper.cover[u]);
    }
  }
}

}  // namespace

TEST_CASE("super edge across one unit bridge") {
  Graph g = bridged_triangles();
  Graph sn = build_super_network(g, Cover(6, {{0, 1, 2}, {3, 4, 5}}));
  REQUIRE(sn.num_nodes() == 2);
  REQUIRE(sn.num_edges() == 1);
  CHECK(sn.weight(0, 1) == 0.5);
}

TEST_CASE("super edge through an overlapping endpoint") {
  // Node 2 also sits in {2, 6}, so the 2-3 term is halved.
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}, {2, 6}};
  Graph g = Graph::from_edges(7, edges);
  Cover cover(7, {{0, 1, 2}, {3, 4, 5}, {2, 6}});
  REQUIRE(cover[1] == Community{2, 6});
  Graph sn = build_super_network(g, cover);
  CHECK(sn.weight(0, 2) == 0.25);
  CHECK(sn.weight(1, 2) == 0.25);
}

TEST_CASE("counts distinct endpoints, not edges") {
  // Star center 0 in one community, leaves 1..3 in another.
  Graph g = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  Graph sn = build_super_network(g, Cover(4, {{0}, {1, 2, 3}}));
  CHECK(sn.weight(0, 1) == Approx(3.0 / 4.0));
}

TEST_CASE("edge weights enter the super edge") {
  std::vector<Edge> edges = {{0, 1, 1.0}, {2, 3, 1.0}, {1, 2, 4.0}, {0, 3, 2.0}};
  Graph g = Graph::from_edges(4, edges);
  Graph sn = build_super_network(g, Cover(4, {{0, 1}, {2, 3}}));
  CHECK(sn.weight(0, 1) == Approx(6.0 / 4.0));
}

TEST_CASE("no crossing edge, no super edge") {
  Graph g = oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Graph sn = build_super_network(g, Cover(6, {{0, 1, 2}, {3, 4, 5}}));
  CHECK(sn.num_nodes() == 2);
  CHECK(sn.num_edges() == 0);
  Graph single = build_super_network(g, Cover(6, {{0, 1, 2, 3, 4, 5}}));
  CHECK(single.num_nodes() == 1);
  CHECK(single.num_edges() == 0);
}

TEST_CASE("super network weights are positive and finite") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PlantedPartition p;
    p.n = 90;
    p.communities = 5;
    p.p_in = 0.25;
    p.p_out = 0.03;
    p.overlap_nodes = 6;
    p.seed = seed;
    PlantedGraph pg = planted_partition(p);
    Graph sn = build_super_network(pg.graph, pg.truth);
    for (const Edge& e : sn.edges()) {
      CHECK(e.weight > 0.0);
      CHECK(std::isfinite(e.weight));
    }
  }
}

TEST_CASE("disconnected triangles give a single level") {
  Graph g = oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Hierarchy h = detect_hierarchy(g, HierarchyOptions{});
  REQUIRE(h.levels.size() == 1);
  CHECK(h.levels[0].cover == Cover(6, {{0, 1, 2}, {3, 4, 5}}));
  Division d = best_division(h, g, Mode::kDisjoint);
  CHECK(d.best == 0);
  CHECK(d.subc == 0);
}

TEST_CASE("paired cliques merge pairwise") {
  Graph g = paired_cliques();
  Hierarchy h = detect_hierarchy(g, HierarchyOptions{});
  REQUIRE(h.levels.size() >= 2);
  CHECK(h.levels[0].cover.size() == 4);
  CHECK(h.levels[1].cover ==
        Cover(20, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19}}));
  check_refinement(h);
}

TEST_CASE("seeding reproduces the unseeded upper levels") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    PlantedPartition p;
    p.n = 120;
    p.communities = 6;
    p.p_in = 0.3;
    p.p_out = 0.02;
    p.seed = seed;
    Graph g = planted_partition(p).graph;
    Hierarchy plain = detect_hierarchy(g, HierarchyOptions{});
    Hierarchy seeded = detect_hierarchy(g, HierarchyOptions{}, plain.levels[0].cover);
    REQUIRE(seeded.levels.size() == plain.levels.size());
    for (std::size_t t = 0; t < plain.levels.size(); ++t) {
      CHECK(seeded.levels[t].cover == plain.levels[t].cover);
    }
  }
}

TEST_CASE("seed cover becomes level zero") {
  Graph g = paired_cliques();
  Cover seed(20, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12, 13, 14}, {15, 16, 17, 18, 19}});
  Hierarchy h = detect_hierarchy(g, HierarchyOptions{}, seed);
  CHECK(h.levels[0].cover == seed);
  check_refinement(h);
  CHECK_THROWS_AS(detect_hierarchy(g, HierarchyOptions{}, Cover(3, {{0, 1, 2}})), Error);
}

TEST_CASE("hierarchy invariants on planted graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    PlantedPartition p;
    p.n = 150;
    p.communities = 5;
    p.p_in = 0.2;
    p.p_out = 0.03;
    p.overlap_nodes = seed;
    p.seed = seed;
    Graph g = planted_partition(p).graph;
    for (Mode m : {Mode::kDisjoint, Mode::kOverlapping}) {
      HierarchyOptions o;
      o.propagation.mode = m;
      Hierarchy h = detect_hierarchy(g, o);
      check_refinement(h);
      CHECK(h.levels.size() <= g.num_nodes());
      for (std::size_t t = 1; t < h.levels.size(); ++t) CHECK(h.levels[t].cover.is_disjoint());
      Division d = best_division(h, g, m);
      for (double s : d.scores) CHECK(d.scores[d.best] >= s);
    }
  }
}

TEST_CASE("level cap") {
  Graph g = paired_cliques();
  HierarchyOptions o;
  o.max_levels = 1;
  CHECK(detect_hierarchy(g, o).levels.size() == 1);
}

TEST_CASE("division selection") {
  std::vector<double> a = {0.31, 0.42, 0.40};
  Division d = select_division(a);
  CHECK(d.best == 1);
  CHECK(d.subc == 0);

  std::vector<double> flat = {0.3, 0.3, 0.3};
  d = select_division(flat);
  CHECK(d.best == 2);
  CHECK(d.subc == 1);

  std::vector<double> one = {0.2};
  d = select_division(one);
  CHECK(d.best == 0);
  CHECK(d.subc == 0);

  std::vector<double> first = {0.5, 0.1, 0.4};
  d = select_division(first);
  CHECK(d.best == 0);
  CHECK(d.subc == 0);

  std::vector<double> deep = {0.1, 0.3, 0.2, 0.5};
  d = select_division(deep);
  CHECK(d.best == 3);
  CHECK(d.subc == 1);

  CHECK_THROWS_AS(select_division(std::vector<double>{}), Error);
}

TEST_CASE("best division uses EQ once overlap appears") {
  Graph g = bridged_triangles();
  Cover overlap(6, {{0, 1, 2, 3}, {2, 3, 4, 5}});
  Hierarchy h = detect_hierarchy(g, HierarchyOptions{}, overlap);
  CHECK(best_division(h, g, Mode::kDisjoint).metric == Metric::kEQ);
  Hierarchy plain = detect_hierarchy(g, HierarchyOptions{});
  CHECK(best_division(plain, g, Mode::kDisjoint).metric == Metric::kQ);
  CHECK(best_division(plain, g, Mode::kOverlapping).metric == Metric::kEQ);
}

TEST_CASE("frozen alpha is reused upstairs") {
  Graph g = paired_cliques();
  HierarchyOptions o;
  o.freeze_alpha = true;
  Hierarchy h = detect_hierarchy(g, o);
  for (const Level& level : h.levels) CHECK(level.alpha == h.levels[0].alpha);
}

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
#include <numeric>
#include <random>

#include <doctest.h>

#include "linsia/metrics.hpp"
#include "oracles.hpp"

using namespace linsia;
using doctest::Approx;

namespace {

Graph two_triangles() {
  return oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

std::vector<std::size_t> random_assignment(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> k(1, std::max<std::size_t>(1, n));
  std::uniform_int_distribution<std::size_t> pick(0, k(rng) - 1);
  std::vector<std::size_t> out(n);
  for (auto& c : out) c = pick(rng);
  return out;
}

// Random cover with some nodes in two or three communities.
std::vector<Community> random_cover(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  const std::size_t k = count(rng);
  std::vector<Community> cs(k);
  std::bernoulli_distribution coin(0.35);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (NodeId v = 0; v < n; ++v) {
    cs[pick(rng)].push_back(v);
    for (std::size_t c = 0; c < k; ++c) {
      if (coin(rng) && std::find(cs[c].begin(), cs[c].end(), v) == cs[c].end()) {
        cs[c].push_back(v);
      }
    }
  }
  std::erase_if(cs, [](const Community& c) { return c.empty(); });
  for (Community& c : cs) std::sort(c.begin(), c.end());
  return cs;
}

}  // namespace

TEST_CASE("metric names") {
  CHECK(parse_metric("Q") == Metric::kQ);
  CHECK(parse_metric("ENMI") == Metric::kENMI);
  CHECK(to_string(Metric::kEQ) == "EQ");
  CHECK_THROWS_AS(parse_metric("F1"), Error);
}

TEST_CASE("modularity examples") {
  Graph g = two_triangles();
  CHECK(modularity_q(g, Cover(6, {{0, 1, 2, 3, 4, 5}})) == Approx(0.0));
  CHECK(modularity_q(g, Cover(6, {{0, 1, 2}, {3, 4, 5}})) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("modularity errors") {
  Graph g = two_triangles();
  CHECK_THROWS_AS(modularity_q(g, Cover(6, {{0, 1, 2, 3}, {3, 4, 5}})), Error);
  CHECK_THROWS_AS(modularity_q(Graph::from_edges(3, {}), Cover(3, {{0, 1, 2}})), Error);
  CHECK_THROWS_AS(modularity_q(g, Cover(4, {{0, 1, 2, 3}})), Error);
}

TEST_CASE("modularity matches the double loop") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  int checked = 0;
  while (checked < 200) {
    Graph g = oracle::random_graph(size(rng), density(rng), rng);
    if (g.num_edges() == 0) continue;
    auto assignment = random_assignment(g.num_nodes(), rng);
    const double q = modularity_q(g, Cover::from_assignment(assignment));
    CHECK(std::abs(q - oracle::modularity(g, assignment)) <= 1e-12);
    ++checked;
  }
}

TEST_CASE("weighted modularity uses strengths") {
  std::vector<Edge> edges = {{0, 1, 3.0}, {1, 2, 1.0}, {2, 3, 3.0}};
  Graph g = Graph::from_edges(4, edges);
  Cover c(4, {{0, 1}, {2, 3}});
  // 2m = 14; intra weight 6 per side, strengths 3,4,4,3.
  const double expected = 2.0 * (3.0 / 7.0 - (7.0 / 14.0) * (7.0 / 14.0));
  CHECK(modularity_q(g, c, true) == Approx(expected).epsilon(1e-14));
  CHECK(modularity_q(g, c, false) == Approx(oracle::modularity(g, {0, 0, 1, 1})));
}

TEST_CASE("EQ reduces to Q on partitions") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(10, 0.35, rng);
    if (g.num_edges() == 0) continue;
    Cover c = Cover::from_assignment(random_assignment(g.num_nodes(), rng));
    CHECK(std::abs(extended_modularity_eq(g, c) - modularity_q(g, c)) <= 1e-12);
  }
}

TEST_CASE("EQ with a duplicated community") {
  Graph g = oracle::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  std::vector<Community> cs = {{0, 1, 2}, {0, 1, 2}, {3, 4, 5}};
  const double eq = extended_modularity_eq(g, cs);
  CHECK(eq == Approx(oracle::extended_modularity(g, cs)).epsilon(1e-14));
  // Listing the first triangle twice puts its members in O = 2 communities:
  // each pair term is quartered and summed twice, so it is halved overall.
  std::vector<Community> single = {{0, 1, 2}, {3, 4, 5}};
  const double q = extended_modularity_eq(g, single);
  const double first = oracle::extended_modularity(g, {{0, 1, 2}});
  CHECK(eq == Approx(q - 0.5 * first).epsilon(1e-14));
  CHECK_THROWS_AS(extended_modularity_eq(g, std::vector<Community>{}), Error);
}

TEST_CASE("EQ matches the direct sum on overlapping covers") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    if (g.num_edges() == 0) continue;
    auto cs = random_cover(g.num_nodes(), rng);
    CHECK(std::abs(extended_modularity_eq(g, cs) - oracle::extended_modularity(g, cs)) <= 1e-12);
    const double eq = extended_modularity_eq(g, Cover(g.num_nodes(), cs));
    CHECK(eq >= -1.0);
    CHECK(eq <= 1.0);
  }
}

TEST_CASE("Q and EQ ignore relabeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(10, 0.4, rng);
    if (g.num_edges() == 0) continue;
    std::vector<NodeId> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], 1.0});
    Graph h = Graph::from_edges(10, edges);
    auto cs = random_cover(10, rng);
    std::vector<Community> moved;
    for (const Community& c : cs) {
      Community m;
      for (NodeId v : c) m.push_back(perm[v]);
      moved.push_back(m);
    }
    std::reverse(moved.begin(), moved.end());
    CHECK(extended_modularity_eq(h, moved) == Approx(extended_modularity_eq(g, cs)));
  }
}

TEST_CASE("NMI examples") {
  Cover a(4, {{0, 1}, {2, 3}});
  CHECK(nmi(a, a) == Approx(1.0));
  Cover one(4, {{0, 1, 2, 3}});
  Cover singles(4, {{0}, {1}, {2}, {3}});
  CHECK(nmi(one, singles) == Approx(0.0));
  CHECK(nmi(one, one) == 1.0);
  Cover b(4, {{0, 1, 2}, {3}});
  CHECK(nmi(a, b) == Approx(0.3437110184854507).epsilon(1e-14));
  CHECK_THROWS_AS(nmi(a, Cover(3, {{0, 1, 2}})), Error);
  CHECK_THROWS_AS(nmi(a, Cover(4, {{0, 1, 2}, {2, 3}})), Error);
}

TEST_CASE("NMI matches the contingency table on every small partition pair") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<std::size_t>> partitions;
    oracle::for_each_partition(n, [&](const auto& p) { partitions.push_back(p); });
    for (const auto& pa : partitions) {
      Cover a = Cover::from_assignment(pa);
      for (const auto& pb : partitions) {
        Cover b = Cover::from_assignment(pb);
        const double v = nmi(a, b);
        CHECK(std::abs(v - oracle::nmi(pa, pb)) <= 1e-12);
        CHECK(std::abs(v - nmi(b, a)) <= 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("ENMI examples") {
  Cover a(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(enmi(a, a) == Approx(1.0));
  Cover worse(6, {{0, 1, 3}, {2, 4, 5}});
  CHECK(enmi(a, worse) < enmi(a, a));
  Cover x(4, {{0, 1}, {1, 2}, {3}});
  Cover complement(4, {{2, 3}, {0, 3}, {0, 1, 2}});
  CHECK(enmi(x, complement) == Approx(0.33541493183820337).epsilon(1e-12));
  CHECK_THROWS_AS(enmi(a, Cover(4, {{0, 1, 2, 3}})), Error);
}

TEST_CASE("ENMI matches the definition on every small partition pair") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<std::size_t>> partitions;
    oracle::for_each_partition(n, [&](const auto& p) { partitions.push_back(p); });
    for (const auto& pa : partitions) {
      for (const auto& pb : partitions) {
        Cover a = Cover::from_assignment(pa);
        Cover b = Cover::from_assignment(pb);
        const double v = enmi(a, b);
        CHECK(std::abs(v - oracle::enmi(n, a.communities(), b.communities())) <= 1e-12);
        CHECK(std::abs(v - enmi(b, a)) <= 1e-12);
        CHECK(v >= -1e-9);
        CHECK(v <= 1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("ENMI matches the definition on random overlapping covers") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + trial % 5;
    Cover a(n, random_cover(n, rng));
    Cover b(n, random_cover(n, rng));
    const double v = enmi(a, b);
    CHECK(std::abs(v - oracle::enmi(n, a.communities(), b.communities())) <= 1e-12);
    CHECK(v >= -1e-9);
    CHECK(v <= 1.0 + 1e-9);
  }
}

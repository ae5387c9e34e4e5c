// Copyright 2026 The sketchsdp Authors.
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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "oracles.hpp"
#include "sbm.hpp"

using namespace sketchsdp;

TEST_CASE("graph construction rejects self-loops and duplicates") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidArgument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), InvalidArgument);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), InvalidArgument);
}

TEST_CASE("adjacency is symmetric, sorted, and consistent with the edge list") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(15, 0.3, rng);
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      auto nb = g.neighbors(i);
      degree_sum += nb.size();
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (auto j : nb) {
        CHECK(j != i);
        CHECK(g.has_edge(j, i));
      }
    }
    CHECK(g.edge_count() * 2 == degree_sum);
  }
}

TEST_CASE("sample_sbm degenerate rates") {
  SUBCASE("p=1, q=0 gives two disjoint edges") {
    for (Seed seed : {0ULL, 1ULL, 99ULL}) {
      const auto drawn = sample_sbm(SbmParams::general(2, 2, 1.0, 0.0), seed);
      const std::vector<Edge> expected{{0, 1}, {2, 3}};
      CHECK(std::equal(drawn.graph.edges().begin(), drawn.graph.edges().end(), expected.begin(), expected.end()));
      CHECK(drawn.planted == Partition::from_sides({0, 1}, {2, 3}));
    }
  }
  SUBCASE("p=q=1 gives K6") {
    const auto drawn = sample_sbm(SbmParams::general(3, 3, 1.0, 1.0), 5);
    CHECK(drawn.graph.edge_count() == 15);
    CHECK(drawn.graph == oracle::complete(6));
  }
}

TEST_CASE("sample_sbm edge count matches the binomial mean") {
  // E|E| = 0.5 * 2 * C(50,2) + 0.1 * 2500 = 1475
  // Var = 0.25 * 2450 + 0.09 * 2500 = 837.5
  const auto params = SbmParams::assortative(50, 50, 0.5, 0.1);
  const double mean = 1475.0;
  const double sd = std::sqrt(837.5);
  const auto single = sample_sbm(params, 2024);
  CHECK(std::abs(static_cast<double>(single.graph.edge_count()) - mean) <= 4.0 * sd);

  double total = 0.0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) total += static_cast<double>(sample_sbm(params, static_cast<Seed>(s)).graph.edge_count());
  CHECK(std::abs(total / seeds - mean) <= 4.0 * sd / std::sqrt(static_cast<double>(seeds)));
}

TEST_CASE("sample_sbm is reproducible") {
  const auto params = SbmParams::assortative(30, 20, 0.4, 0.1);
  CHECK(sample_sbm(params, 7).graph == sample_sbm(params, 7).graph);
  CHECK_FALSE(sample_sbm(params, 7).graph == sample_sbm(params, 8).graph);
}

TEST_CASE("p = q makes within and cross densities exchangeable") {
  const auto params = SbmParams::general(10, 10, 0.3, 0.3);
  const int seeds = 1000;
  std::vector<double> diffs;
  for (int s = 0; s < seeds; ++s) {
    const auto drawn = sample_sbm(params, static_cast<Seed>(s) + 5000);
    double within = 0, cross = 0;
    for (const auto& e : drawn.graph.edges()) ((e.u < 10) == (e.v < 10) ? within : cross) += 1;
    diffs.push_back(within / 90.0 - cross / 100.0);
  }
  const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / seeds;
  double var = 0.0;
  for (double d : diffs) var += (d - mean) * (d - mean);
  var /= seeds - 1;
  CHECK(std::abs(mean) <= 4.0 * std::sqrt(var / seeds));
}

TEST_CASE("SBM parameter validation") {
  CHECK_THROWS_AS(SbmParams::general(0, 3, 0.5, 0.5), InvalidArgument);
  CHECK_THROWS_AS(SbmParams::general(3, 3, 1.5, 0.5), InvalidArgument);
  CHECK_THROWS_AS(SbmParams::assortative(3, 3, 0.2, 0.5), InvalidArgument);
  CHECK_NOTHROW(SbmParams::general(3, 3, 0.2, 0.5));
}

TEST_CASE("log-scale conversion clamps and reports") {
  const auto ok = to_sbm(LogScaleParams{10.0, 2.0, 400});
  CHECK_FALSE(ok.clamped);
  CHECK(ok.params.p == doctest::Approx(10.0 * std::log(400.0) / 400.0).epsilon(1e-15));
  CHECK(ok.params.n1 == 200);
  const auto big = to_sbm(LogScaleParams{50.0, 1.0, 10});
  CHECK(big.clamped);
  CHECK(big.params.p == 1.0);
  CHECK(big.params.q == doctest::Approx(std::log(10.0) / 10.0));
  CHECK_THROWS_AS(to_sbm(LogScaleParams{10.0, 2.0, 7}), InvalidArgument);
}

TEST_CASE("bernoulli_vertex_sample") {
  const Graph g = Graph::from_edges(1000, std::vector<Edge>{});
  CHECK(bernoulli_vertex_sample(g, 0.0, 3).empty());
  CHECK(bernoulli_vertex_sample(g, 1.0, 3) == g.labels());
  CHECK(bernoulli_vertex_sample(g, 0.3, 42) == bernoulli_vertex_sample(g, 0.3, 42));
  CHECK_THROWS_AS(bernoulli_vertex_sample(g, 1.5, 0), InvalidArgument);

  double total = 0.0;
  for (int s = 0; s < 500; ++s) total += static_cast<double>(bernoulli_vertex_sample(g, 0.5, static_cast<Seed>(s)).size());
  CHECK(std::abs(total / 500.0 - 500.0) <= 3.0 * std::sqrt(1000.0 * 0.25));
}

TEST_CASE("induced_subgraph") {
  SUBCASE("K4 restricted to {0,1,2} is K3") {
    const Graph sub = induced_subgraph(oracle::complete(4), {0, 1, 2});
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(sub.labels() == std::vector<VertexId>{0, 1, 2});
  }
  SUBCASE("path restricted to {0,2,3} keeps only {2,3}") {
    const Graph sub = induced_subgraph(oracle::path(4), {0, 2, 3});
    CHECK(sub.edge_count() == 1);
    CHECK(sub.labels() == std::vector<VertexId>{0, 2, 3});
    const Edge e = sub.edges()[0];
    CHECK(sub.label(e.u) == 2);
    CHECK(sub.label(e.v) == 3);
  }
  SUBCASE("empty subset") {
    const Graph sub = induced_subgraph(oracle::complete(5), {});
    CHECK(sub.num_vertices() == 0);
    CHECK(sub.edge_count() == 0);
  }
  SUBCASE("full subset is the identity; subsets never gain edges") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const Graph g = oracle::random_graph(20, 0.25, rng);
      CHECK(induced_subgraph(g, g.labels()) == g);
      const VertexSet sub = bernoulli_vertex_sample(g, 0.5, static_cast<Seed>(t));
      const Graph h = induced_subgraph(g, sub);
      CHECK(h.edge_count() <= g.edge_count());
      // Nested restriction preserves labels and edges.
      const VertexSet inner = bernoulli_vertex_sample(h, 0.5, static_cast<Seed>(t) + 100);
      CHECK(induced_subgraph(h, inner) == induced_subgraph(g, inner));
    }
  }
  SUBCASE("unknown vertex") { CHECK_THROWS_AS(induced_subgraph(oracle::path(3), {5}), InvalidArgument); }
}

TEST_CASE("edges_to_set") {
  CHECK(edges_to_set(oracle::complete(4), 0, {1, 2, 3}) == 3);
  CHECK(edges_to_set(oracle::complete(4), 0, {}) == 0);
  CHECK(edges_to_set(oracle::path(4), 1, {0, 3}) == 1);
  CHECK(edges_to_set(oracle::complete(4), 0, {0, 1}) == 1);  // self never counts

  Rng rng(8);
  const Graph g = oracle::random_graph(25, 0.3, rng);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexSet s1, s2;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (u == v) continue;
      (rng.coin() ? s1 : s2).push_back(u);
    }
    CHECK(edges_to_set(g, static_cast<VertexId>(v), s1) + edges_to_set(g, static_cast<VertexId>(v), s2) == g.degree(v));
  }
}

TEST_CASE("partition helpers") {
  const Partition p = Partition::from_sides({2, 5}, {1, 7});
  CHECK(p.vertices() == std::vector<VertexId>{1, 2, 5, 7});
  CHECK(p.side_of(2) == 1);
  CHECK(p.side_of(1) == -1);
  CHECK_FALSE(p.side_of(3).has_value());
  CHECK(p.canonical().side_of(1) == 1);
  CHECK(same_up_to_flip(p, p.flipped()));
  CHECK_FALSE(same_up_to_flip(p, Partition::from_sides({1, 2}, {5, 7})));
  CHECK_THROWS_AS(Partition({{1, 1}, {1, -1}}), InvalidArgument);
  CHECK_THROWS_AS(Partition({{1, 0}}), InvalidArgument);
  CHECK(p.restricted_to({2, 7}) == Partition::from_sides({2}, {7}));
}

TEST_CASE("edge list and partition text formats round-trip") {
  Rng rng(21);
  for (int t = 0; t < 5; ++t) {
    const Graph g = oracle::random_graph(30, 0.2, rng);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);

    const Partition p = oracle::halves(30);
    std::stringstream pbuf;
    write_partition(pbuf, p);
    CHECK(read_partition(pbuf) == p);
  }
  std::stringstream text("# comment\nn 4\n0 1\n\n2 3 # trailing\n");
  const Graph g = read_edge_list(text);
  CHECK(g.num_vertices() == 4);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list parse errors") {
  auto parse = [](const char* s) {
    std::stringstream in(s);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 x\n"), ParseError);
  std::stringstream bad_sign("0 +1\n1 0\n");
  CHECK_THROWS_AS(read_partition(bad_sign), ParseError);
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "groundkit/fvs_oracle.hpp"
#include "support/random_graphs.hpp"
#include "support/second_oracle.hpp"

using namespace groundkit;
using testing::acyclic_by_closure;
using testing::digraph_from_mask;
using testing::mfvs_size_by_circuits;
using testing::random_digraph;

namespace {

Digraph cycle_graph(std::size_t n) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.intern("n" + std::to_string(i));
  for (VertexId v = 0; v < n; ++v) g.add_arc(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("fvs_oracle");

TEST_CASE("is_acyclic and is_fvs basics") {
  Digraph g = cycle_graph(3);
  CHECK_FALSE(is_acyclic(g));
  CHECK(is_fvs(g, {0}));
  CHECK(is_fvs(g, {1}));
  CHECK_FALSE(is_fvs(g, {}));
  Digraph dag;
  dag.add_arc(dag.intern("a"), dag.intern("b"));
  CHECK(is_acyclic(dag));
  CHECK(is_fvs(dag, {}));
  Digraph loop;
  loop.add_arc(loop.intern("x"), loop.intern("x"));
  CHECK_FALSE(is_acyclic(loop));
}

TEST_CASE("exact_mfvs on known graphs") {
  Digraph empty;
  FvsResult r = exact_mfvs(empty);
  CHECK(r.size == 0);
  CHECK(r.witnesses == std::vector<std::vector<VertexId>>{{}});

  r = exact_mfvs(cycle_graph(3));
  CHECK(r.size == 1);
  CHECK(r.witnesses == std::vector<std::vector<VertexId>>{{0}, {1}, {2}});

  Digraph two;  // two disjoint 2-cycles
  VertexId a = two.intern("a"), b = two.intern("b"), c = two.intern("c"), d = two.intern("d");
  two.add_arc(a, b);
  two.add_arc(b, a);
  two.add_arc(c, d);
  two.add_arc(d, c);
  r = exact_mfvs(two);
  CHECK(r.size == 2);
  CHECK(r.witnesses ==
        std::vector<std::vector<VertexId>>{{a, c}, {a, d}, {b, c}, {b, d}});
}

TEST_CASE("self-loop vertices are forced into every witness") {
  Digraph g;
  VertexId a = g.intern("a"), b = g.intern("b"), c = g.intern("c");
  g.add_arc(a, a);
  g.add_arc(b, c);
  g.add_arc(c, b);
  FvsResult r = exact_mfvs(g);
  CHECK(r.size == 2);
  for (const auto& w : r.witnesses) CHECK(std::count(w.begin(), w.end(), a) == 1);
}

TEST_CASE("complete bidirectional K4 needs n-1 vertices") {
  Digraph g;
  for (int i = 0; i < 4; ++i) g.intern("n" + std::to_string(i));
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = 0; v < 4; ++v)
      if (u != v) g.add_arc(u, v);
  FvsResult r = exact_mfvs(g);
  CHECK(r.size == 3);
  CHECK(r.witnesses.size() == 4);
}

TEST_CASE("size cap") {
  Digraph g;
  for (int i = 0; i < 21; ++i) g.intern("n" + std::to_string(i));
  CHECK_THROWS_AS(exact_mfvs(g), CapExceededError);
  MfvsOptions opts;
  opts.max_n = 24;
  CHECK(exact_mfvs(g, opts).size == 0);
}

TEST_CASE("first-witness mode returns the lexicographically smallest") {
  MfvsOptions first_only;
  first_only.all_witnesses = false;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    Digraph g = random_digraph(rng, 7, 0.3, 0.15);
    FvsResult all = exact_mfvs(g);
    FvsResult one = exact_mfvs(g, first_only);
    REQUIRE(one.witnesses.size() == 1);
    CHECK(one.size == all.size);
    CHECK(one.witnesses.front() == all.witnesses.front());
  }
}

TEST_CASE("oracle agreement: every digraph on 3 vertices") {
  for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
    Digraph g = digraph_from_mask(3, mask);
    CHECK(is_acyclic(g) == acyclic_by_closure(g));
    CHECK(exact_mfvs(g).size == mfvs_size_by_circuits(g));
  }
}

TEST_CASE("oracle agreement: every digraph on 4 vertices") {
  MfvsOptions fast;
  fast.all_witnesses = false;
  for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
    Digraph g = digraph_from_mask(4, mask);
    if (is_acyclic(g) != acyclic_by_closure(g)) {
      FAIL("acyclicity mismatch at mask " << mask);
    }
    if (exact_mfvs(g, fast).size != mfvs_size_by_circuits(g)) {
      FAIL("mfvs size mismatch at mask " << mask);
    }
  }
}

TEST_CASE("oracle agreement: seeded digraphs on 5 vertices") {
  std::mt19937_64 rng(905);
  for (int t = 0; t < 300; ++t) {
    Digraph g = random_digraph(rng, 5, 0.35, 0.2);
    CHECK(exact_mfvs(g).size == mfvs_size_by_circuits(g));
  }
}

TEST_CASE("every witness is a minimum fvs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    Digraph g = random_digraph(rng, 8, 0.25, 0.1);
    FvsResult r = exact_mfvs(g);
    for (const auto& w : r.witnesses) {
      CHECK(w.size() == r.size);
      CHECK(is_fvs(g, w));
    }
  }
}

TEST_CASE("preserves_mfvs accepts a correct step and rejects size drift") {
  Digraph g;  // self-loop a, 2-cycle b<->c
  VertexId a = g.intern("a"), b = g.intern("b"), c = g.intern("c");
  g.add_arc(a, a);
  g.add_arc(b, c);
  g.add_arc(c, b);

  Digraph after = g;
  after.remove_vertex(a);
  CHECK(preserves_mfvs(g, after, {a}));
  CHECK_FALSE(preserves_mfvs(g, after, {}));   // dropped the compensation
  CHECK_FALSE(preserves_mfvs(g, g, {a}));      // counted a vertex twice
}

TEST_CASE("a broken subset rule without compensation is caught on the 2-cycle") {
  Digraph g;
  VertexId u = g.intern("u"), v = g.intern("v");
  g.add_arc(u, v);
  g.add_arc(v, u);
  Digraph broken = g;
  broken.remove_vertex(u);  // subset action minus the U commitment
  CHECK_FALSE(preserves_mfvs(g, broken, {}));
  CHECK(preserves_mfvs(g, broken, {u}));  // the real rule passes
  CHECK(check_preservation(g, ReductionKind::Subset, u, v));
}

TEST_CASE("check_preservation holds for every applicable target on random graphs") {
  std::mt19937_64 rng(23);
  const ReductionKind vertex_kinds[] = {ReductionKind::Loop, ReductionKind::InClique,
                                        ReductionKind::OutClique};
  for (int t = 0; t < 12; ++t) {
    Digraph g = random_digraph(rng, 6, 0.3, 0.2);
    for (VertexId u : g.vertices()) {
      for (ReductionKind k : vertex_kinds) CHECK(check_preservation(g, k, u));
      for (VertexId v : g.vertices()) {
        if (u == v) continue;
        CHECK(check_preservation(g, ReductionKind::Subset, u, v));
        if (g.has_arc(u, v) && !g.has_arc(v, u)) {
          CHECK(check_preservation(g, ReductionKind::Pie, u, v));
          CHECK(check_preservation(g, ReductionKind::DomePlusPlus, u, v));
        }
      }
    }
  }
}

TEST_SUITE_END();

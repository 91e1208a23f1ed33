#pragma once

#include <cstdint>
#include <vector>

#include "groundkit/digraph.hpp"
#include "groundkit/reductions.hpp"

namespace groundkit {

// True iff G - U has no circuit. Self-loops count as circuits.
bool is_fvs(const Digraph& g, const std::vector<VertexId>& u);

bool is_acyclic(const Digraph& g);

struct MfvsOptions {
  std::size_t max_n = 20;       // CapExceededError beyond this many vertices
  bool all_witnesses = true;    // false: only the lexicographically first
};

struct FvsResult {
  std::size_t size = 0;
  // Every minimum feedback vertex set (or just the first), each sorted
  // ascending; the list itself is in lexicographic order.
  std::vector<std::vector<VertexId>> witnesses;
};

// Exhaustive minimum-FVS search by increasing cardinality. Vertices with
// self-loops are forced into every candidate. Deterministic.
FvsResult exact_mfvs(const Digraph& g, const MfvsOptions& opts = {});

// Checks that the step g -> g_after with partial-MFVS delta `included`
// preserves the MFVS: mfvs(g).size == included.size() + mfvs(g_after).size
// and every witness of g_after lifts (union with `included`) to an FVS of g.
bool preserves_mfvs(const Digraph& g, const Digraph& g_after,
                    const std::vector<VertexId>& included, const MfvsOptions& opts = {});

// Applies the pointed reduction and runs preserves_mfvs on the outcome.
// A target whose predicate fails leaves the graph unchanged (trivially true).
bool check_preservation(const Digraph& g, ReductionKind kind, VertexId u,
                        VertexId v = kNoVertex, const MfvsOptions& opts = {});

}  // namespace groundkit

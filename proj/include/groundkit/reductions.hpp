#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groundkit/digraph.hpp"

namespace groundkit {

enum class ReductionKind { Loop, Subset, InClique, OutClique, Pie, DomePlusPlus };

const char* reduction_name(ReductionKind k);

using PriorityMap = std::map<ReductionKind, int>;

// Confluent family and its priorities (smaller value = applied first).
std::vector<ReductionKind> confluent_kinds();     // Loop, Subset, InClique, OutClique, Pie
std::vector<ReductionKind> nonconfluent_kinds();  // + DomePlusPlus
PriorityMap confluent_priorities();     // vertex rules and Pie
PriorityMap nonconfluent_priorities();  // adds DomePlusPlus at the lowest priority

// --- predicates ------------------------------------------------------------

// l(g,u): self-loop present.
bool pred_loop(const Digraph& g, VertexId u);
// i(g,u): no self-loop on u and N-(u) is a diclique.
bool pred_in_clique(const Digraph& g, VertexId u);
// o(g,u): no self-loop on u and N+(u) is a diclique.
bool pred_out_clique(const Digraph& g, VertexId u);
// s(g,u,v): v loop-free, u<->v, and v's in/out neighborhoods are contained
// in u's. The containment checks ignore u and v themselves.
bool pred_subset(const Digraph& g, VertexId u, VertexId v);
// p(g,(u,v)): the arc lies on no circuit of G - A^<->.
// Requires (u,v) in A and not bidirectional (BidirectionalArcError).
bool pred_pie(const Digraph& g, VertexId u, VertexId v);
// d(g,(u,v)): every vu-path of G - A^<-> passes through an interior vertex
// that is an H-predecessor of v or an H-successor of u (H = G - A^<->).
// Vacuously true when v does not reach u in H. Same preconditions as Pie.
bool pred_dome(const Digraph& g, VertexId u, VertexId v);

// --- pointed application ---------------------------------------------------

struct TraceDelta {
  bool applied = false;
  // Vertex committed to the partial MFVS (Loop/Subset only).
  std::optional<VertexId> included;
};

struct ApplyResult {
  Digraph graph;
  TraceDelta delta;
};

// One pointed reduction at the given target. Loop/InClique/OutClique take u;
// Subset takes (u,v) and removes u; Pie/DomePlusPlus take the arc (u,v).
// When the predicate fails the graph comes back unchanged.
ApplyResult apply(ReductionKind kind, const Digraph& g, VertexId u, VertexId v = kNoVertex);

// --- sweeps and the priority engine -----------------------------------------

struct ReductionTrace {
  std::vector<VertexId> included;  // the partial MFVS U, in commit order
  std::uint64_t loop = 0;
  std::uint64_t subset = 0;
  std::uint64_t in_clique = 0;
  std::uint64_t out_clique = 0;
  std::uint64_t pie = 0;
  std::uint64_t dome = 0;
  std::uint64_t isolated = 0;  // vertices stripped bare by arc removals, then trimmed
  std::uint64_t remaining_vertices = 0;
  std::uint64_t remaining_arcs = 0;
  std::uint64_t initial_vertices = 0;

  std::uint64_t reductions_total() const {
    return loop + subset + in_clique + out_clique + pie + dome + isolated;
  }
  std::uint64_t excluded() const {
    return initial_vertices - remaining_vertices - included.size();
  }
};

// One log entry per committed change, in application order.
struct Application {
  ReductionKind kind;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;   // Subset witness / arc head
  bool isolated_trim = false;  // u trimmed after losing all incident arcs
};

struct ReduceOptions {
  bool keep_log = false;
  // When set, sweeps whose visiting order is provably immaterial -- the
  // self-loop sweep, whose target set is fixed at pass start and whose
  // removals commute -- run in a seeded random order. Orders that could
  // steer which vertices join U (Subset pairs, contraction targets) or
  // where an arc-removal burst pauses stay canonical, so the final graph,
  // U and the trace counters never depend on the seed; only the commit
  // order inside a loop pass does.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SweepResult {
  Digraph graph;
  ReductionTrace trace;
};

// Applies one kind repeatedly over all current targets (ascending) until a
// full pass changes nothing.
SweepResult sweep(ReductionKind kind, const Digraph& g);

struct ReduceResult {
  Digraph graph;
  ReductionTrace trace;
  std::vector<Application> log;  // populated when keep_log
};

// Nested fixed points by priority level: at level p, repeat (reduce all
// levels below p, then sweep every kind of priority p) until stable.
// Strictly priority-compliant: no application at level p happens while any
// lower-level reduction is applicable. Vertices isolated by Pie/Dome arc
// removals are trimmed on the spot and counted separately.
ReduceResult reduce(const Digraph& g, const std::vector<ReductionKind>& kinds,
                    const PriorityMap& priorities, const ReduceOptions& opts = {});

// True if any reduction of the family applies anywhere.
bool any_applicable(const Digraph& g, const std::vector<ReductionKind>& kinds);

}  // namespace groundkit

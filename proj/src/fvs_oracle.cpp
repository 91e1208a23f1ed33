#include "groundkit/fvs_oracle.hpp"

#include <algorithm>

namespace groundkit {

namespace {

// Cycle test on G - excluded, three-color DFS, no graph copy.
bool acyclic_excluding(const Digraph& g, const std::vector<bool>& excluded) {
  const std::size_t n = g.index_bound();
  enum : unsigned char { White, Grey, Black };
  std::vector<unsigned char> color(n, White);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (!g.has_vertex(root) || excluded[root] || color[root] != White) continue;
    color[root] = Grey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        VertexId w = succ[f.next++];
        if (excluded[w]) continue;
        if (color[w] == Grey) return false;  // back arc (covers self-loops)
        if (color[w] == White) {
          color[w] = Grey;
          stack.push_back({w, 0});
        }
      } else {
        color[f.v] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

bool is_acyclic(const Digraph& g) {
  std::vector<bool> excluded(g.index_bound(), false);
  return acyclic_excluding(g, excluded);
}

bool is_fvs(const Digraph& g, const std::vector<VertexId>& u) {
  std::vector<bool> excluded(g.index_bound(), false);
  for (VertexId x : u) {
    if (!g.has_vertex(x))
      throw UnknownVertexError("is_fvs: unknown vertex id " + std::to_string(x));
    excluded[x] = true;
  }
  return acyclic_excluding(g, excluded);
}

FvsResult exact_mfvs(const Digraph& g, const MfvsOptions& opts) {
  const std::vector<VertexId> verts = g.vertices();
  if (verts.size() > opts.max_n)
    throw CapExceededError("exact_mfvs: " + std::to_string(verts.size()) +
                           " vertices exceeds cap " + std::to_string(opts.max_n));

  std::vector<bool> excluded(g.index_bound(), false);
  std::vector<VertexId> forced, free;
  for (VertexId v : verts) {
    if (g.has_self_loop(v)) {
      forced.push_back(v);  // every FVS must contain self-loop vertices
      excluded[v] = true;
    } else {
      free.push_back(v);
    }
  }

  FvsResult result;
  for (std::size_t extra = 0; forced.size() + extra <= verts.size(); ++extra) {
    if (extra > free.size()) break;
    // Lexicographic combinations of `free`, size `extra`.
    std::vector<std::size_t> pick(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
    for (;;) {
      for (std::size_t i : pick) excluded[free[i]] = true;
      if (acyclic_excluding(g, excluded)) {
        std::vector<VertexId> witness = forced;
        for (std::size_t i : pick) witness.push_back(free[i]);
        std::sort(witness.begin(), witness.end());
        result.witnesses.push_back(std::move(witness));
      }
      for (std::size_t i : pick) excluded[free[i]] = false;
      if (!result.witnesses.empty() && !opts.all_witnesses) break;
      // advance combination
      if (extra == 0) break;
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == free.size() - extra + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!result.witnesses.empty()) {
      result.size = forced.size() + extra;
      return result;
    }
  }
  // Removing every vertex always works, so we never get here.
  result.size = verts.size();
  result.witnesses.push_back(verts);
  return result;
}

bool preserves_mfvs(const Digraph& g, const Digraph& g_after,
                    const std::vector<VertexId>& included, const MfvsOptions& opts) {
  FvsResult before = exact_mfvs(g, opts);
  FvsResult after = exact_mfvs(g_after, opts);
  if (before.size != included.size() + after.size) return false;
  for (const auto& witness : after.witnesses) {
    std::vector<VertexId> lifted = witness;
    lifted.insert(lifted.end(), included.begin(), included.end());
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    if (!is_fvs(g, lifted)) return false;
  }
  return true;
}

bool check_preservation(const Digraph& g, ReductionKind kind, VertexId u, VertexId v,
                        const MfvsOptions& opts) {
  ApplyResult step = apply(kind, g, u, v);
  std::vector<VertexId> included;
  if (step.delta.included) included.push_back(*step.delta.included);
  return preserves_mfvs(g, step.graph, included, opts);
}

}  // namespace groundkit

#include "groundkit/reductions.hpp"

#include <algorithm>
#include <random>

namespace groundkit {

const char* reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Loop: return "loop";
    case ReductionKind::Subset: return "subset";
    case ReductionKind::InClique: return "in_clique";
    case ReductionKind::OutClique: return "out_clique";
    case ReductionKind::Pie: return "pie";
    case ReductionKind::DomePlusPlus: return "dome";
  }
  return "?";
}

std::vector<ReductionKind> confluent_kinds() {
  return {ReductionKind::Loop, ReductionKind::Subset, ReductionKind::InClique,
          ReductionKind::OutClique, ReductionKind::Pie};
}

std::vector<ReductionKind> nonconfluent_kinds() {
  auto k = confluent_kinds();
  k.push_back(ReductionKind::DomePlusPlus);
  return k;
}

PriorityMap confluent_priorities() {
  return {{ReductionKind::Loop, 1},
          {ReductionKind::Subset, 1},
          {ReductionKind::InClique, 1},
          {ReductionKind::OutClique, 1},
          {ReductionKind::Pie, 2}};
}

PriorityMap nonconfluent_priorities() {
  auto p = confluent_priorities();
  p[ReductionKind::DomePlusPlus] = 3;
  return p;
}

namespace {

void require_vertex(const Digraph& g, VertexId u) {
  if (!g.has_vertex(u))
    throw UnknownVertexError("unknown vertex id " + std::to_string(u));
}

// Shared precondition of Pie and Dome++: the arc exists and is not in A^<->.
void require_plain_arc(const Digraph& g, VertexId u, VertexId v) {
  if (!g.has_arc(u, v))
    throw UnknownArcError("unknown arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (g.has_arc(v, u))
    throw BidirectionalArcError("arc (" + g.label(u) + ", " + g.label(v) +
                                ") is bidirectional");
}

bool h_arc(const Digraph& g, VertexId a, VertexId b) {
  return g.has_arc(a, b) && !g.has_arc(b, a);
}

// v reaches u inside H = G - A^<->?
bool h_reaches(const Digraph& g, VertexId from, VertexId to) {
  std::vector<bool> seen(g.index_bound(), false);
  std::vector<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId x = queue.back();
    queue.pop_back();
    if (x == to) return true;
    for (VertexId w : g.successors(x)) {
      if (seen[w] || g.has_arc(w, x)) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return false;
}

// Component ids of H = G - A^<-> (iterative Tarjan, ascending roots).
std::vector<std::uint32_t> h_scc_ids(const Digraph& g) {
  const std::size_t n = g.index_bound();
  std::vector<std::uint32_t> idx(n, 0), low(n, 0), comp(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::uint32_t counter = 1, comp_counter = 0;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (VertexId root = 0; root < n; ++root) {
    if (!g.has_vertex(root) || idx[root] != 0) continue;
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        VertexId w = succ[f.next++];
        if (g.has_arc(w, f.v)) continue;  // bidirectional, not in H
        if (idx[w] == 0) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        VertexId v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == idx[v]) {
          ++comp_counter;
          for (;;) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_counter;
            if (w == v) break;
          }
        }
      }
    }
  }
  return comp;
}

}  // namespace

bool pred_loop(const Digraph& g, VertexId u) {
  require_vertex(g, u);
  return g.has_self_loop(u);
}

bool pred_in_clique(const Digraph& g, VertexId u) {
  require_vertex(g, u);
  return !g.has_self_loop(u) && g.is_diclique(g.predecessors(u));
}

bool pred_out_clique(const Digraph& g, VertexId u) {
  require_vertex(g, u);
  return !g.has_self_loop(u) && g.is_diclique(g.successors(u));
}

bool pred_subset(const Digraph& g, VertexId u, VertexId v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) return false;
  if (g.has_self_loop(v)) return false;
  if (!g.has_arc(u, v) || !g.has_arc(v, u)) return false;
  // v's neighborhoods nest inside u's; u and v themselves don't count.
  for (VertexId p : g.predecessors(v))
    if (p != u && p != v && !g.has_arc(p, u)) return false;
  for (VertexId s : g.successors(v))
    if (s != u && s != v && !g.has_arc(u, s)) return false;
  return true;
}

bool pred_pie(const Digraph& g, VertexId u, VertexId v) {
  require_plain_arc(g, u, v);
  return !h_reaches(g, v, u);
}

bool pred_dome(const Digraph& g, VertexId u, VertexId v) {
  require_plain_arc(g, u, v);
  // Interior blockers: H-predecessors of v and H-successors of u.
  std::vector<bool> blocked(g.index_bound(), false);
  for (VertexId p : g.predecessors(v))
    if (h_arc(g, p, v)) blocked[p] = true;
  for (VertexId s : g.successors(u))
    if (h_arc(g, u, s)) blocked[s] = true;
  blocked[u] = blocked[v] = false;  // path endpoints are not interior
  // Does some vu-path in H avoid every blocker?
  std::vector<bool> seen(g.index_bound(), false);
  std::vector<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    VertexId x = queue.back();
    queue.pop_back();
    for (VertexId w : g.successors(x)) {
      if (seen[w] || g.has_arc(w, x) || blocked[w]) continue;
      if (w == u) return false;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return true;
}

ApplyResult apply(ReductionKind kind, const Digraph& g, VertexId u, VertexId v) {
  ApplyResult result{g, {}};
  switch (kind) {
    case ReductionKind::Loop:
      if (pred_loop(g, u)) {
        result.graph.remove_vertex(u);
        result.delta = {true, u};
      }
      break;
    case ReductionKind::Subset:
      if (pred_subset(g, u, v)) {
        result.graph.remove_vertex(u);
        result.delta = {true, u};
      }
      break;
    case ReductionKind::InClique:
      if (pred_in_clique(g, u)) {
        result.graph.contract(u);
        result.delta = {true, std::nullopt};
      }
      break;
    case ReductionKind::OutClique:
      if (pred_out_clique(g, u)) {
        result.graph.contract(u);
        result.delta = {true, std::nullopt};
      }
      break;
    case ReductionKind::Pie:
      if (pred_pie(g, u, v)) {
        result.graph.remove_arc(u, v);
        result.delta = {true, std::nullopt};
      }
      break;
    case ReductionKind::DomePlusPlus:
      if (pred_dome(g, u, v)) {
        result.graph.remove_arc(u, v);
        result.delta = {true, std::nullopt};
      }
      break;
  }
  return result;
}

namespace {

// Mutating engine shared by sweep() and reduce().
class Reducer {
public:
  Reducer(const Digraph& g, std::vector<ReductionKind> kinds, PriorityMap priorities,
          const ReduceOptions& opts, bool trim_isolated)
      : g_(g),
        kinds_(std::move(kinds)),
        priorities_(std::move(priorities)),
        opts_(opts),
        trim_isolated_(trim_isolated) {
    if (opts_.shuffle_seed) rng_.emplace(*opts_.shuffle_seed);
    trace_.initial_vertices = g_.vertex_count();
    for (ReductionKind k : kinds_) {
      auto it = priorities_.find(k);
      if (it == priorities_.end())
        throw Error(std::string("no priority for reduction kind ") + reduction_name(k));
      levels_[it->second].push_back(k);
    }
    for (auto& [p, ks] : levels_) std::sort(ks.begin(), ks.end());
  }

  ReduceResult run() {
    if (!levels_.empty()) {
      std::vector<int> ps;
      for (const auto& [p, ks] : levels_) ps.push_back(p);
      fixpoint(ps, ps.size());
    }
    trace_.remaining_vertices = g_.vertex_count();
    trace_.remaining_arcs = g_.arc_count();
    return {std::move(g_), std::move(trace_), std::move(log_)};
  }

private:
  // Stabilize all levels up to ps[count-1].
  bool fixpoint(const std::vector<int>& ps, std::size_t count) {
    if (count == 0) return false;
    bool ever = false;
    for (;;) {
      bool changed = fixpoint(ps, count - 1);
      for (ReductionKind k : levels_[ps[count - 1]]) changed |= run_pass(k, ps[count - 1]);
      if (!changed) break;
      ever = true;
    }
    return ever;
  }

  bool run_pass(ReductionKind kind, int level) {
    switch (kind) {
      case ReductionKind::Loop: return pass_loop();
      case ReductionKind::Subset: return pass_subset();
      case ReductionKind::InClique: return pass_contract(ReductionKind::InClique);
      case ReductionKind::OutClique: return pass_contract(ReductionKind::OutClique);
      case ReductionKind::Pie: return burst_pie(level);
      case ReductionKind::DomePlusPlus: return burst_dome(level);
    }
    return false;
  }

  void maybe_shuffle(std::vector<VertexId>& xs) {
    if (rng_) std::shuffle(xs.begin(), xs.end(), *rng_);
  }

  void log_app(ReductionKind kind, VertexId u, VertexId v = kNoVertex, bool trim = false) {
    if (opts_.keep_log) log_.push_back({kind, u, v, trim});
  }

  bool pass_loop() {
    auto targets = g_.vertices();
    maybe_shuffle(targets);
    bool changed = false;
    for (VertexId u : targets) {
      if (!g_.has_vertex(u) || !g_.has_self_loop(u)) continue;
      g_.remove_vertex(u);
      trace_.included.push_back(u);
      ++trace_.loop;
      log_app(ReductionKind::Loop, u);
      changed = true;
    }
    return changed;
  }

  bool pass_subset() {
    // Unordered bidirectional pairs in canonical ascending order, with the
    // lower index tried as the removal candidate first. The pair order is
    // never shuffled: a pair can become applicable mid-pass when an earlier
    // removal shrinks a neighborhood, and whether that happens before or
    // after the pair's visit decides whether a later contraction pass can
    // consume the candidate instead -- which would leak the order into U.
    std::vector<Arc> pairs;
    for (VertexId p : g_.vertices())
      for (VertexId q : g_.successors(p))
        if (q > p && g_.has_arc(q, p)) pairs.push_back({p, q});
    bool changed = false;
    for (const Arc& a : pairs) {
      if (!g_.has_arc(a.from, a.to) || !g_.has_arc(a.to, a.from)) continue;
      VertexId doomed = kNoVertex, witness = kNoVertex;
      if (pred_subset(g_, a.from, a.to)) {
        doomed = a.from;
        witness = a.to;
      } else if (pred_subset(g_, a.to, a.from)) {
        doomed = a.to;
        witness = a.from;
      } else {
        continue;
      }
      g_.remove_vertex(doomed);
      trace_.included.push_back(doomed);
      ++trace_.subset;
      log_app(ReductionKind::Subset, doomed, witness);
      changed = true;
    }
    return changed;
  }

  bool pass_contract(ReductionKind kind) {
    // Contractions stay in ascending order even in shuffled mode: when two
    // mutually adjacent vertices are both contractible, the order decides
    // which of them later picks up the self-loop (and thus lands in U).
    auto targets = g_.vertices();
    bool changed = false;
    for (VertexId u : targets) {
      if (!g_.has_vertex(u)) continue;
      bool ok = kind == ReductionKind::InClique ? pred_in_clique(g_, u) : pred_out_clique(g_, u);
      if (!ok) continue;
      g_.contract(u);
      if (kind == ReductionKind::InClique)
        ++trace_.in_clique;
      else
        ++trace_.out_clique;
      log_app(kind, u);
      changed = true;
    }
    return changed;
  }

  // Trim a vertex stripped of all incident arcs. Touches no other
  // neighborhood, so it cannot enable anything.
  void trim_if_isolated(VertexId u, ReductionKind cause) {
    if (!trim_isolated_ || !g_.has_vertex(u)) return;
    if (g_.in_degree(u) != 0 || g_.out_degree(u) != 0) return;
    g_.remove_vertex(u);
    ++trace_.isolated;
    log_app(cause, u, kNoVertex, true);
  }

  // Arc removal shrank N-(v) and N+(u); only these spots can newly satisfy
  // a level-1 predicate.
  bool lower_kind_enabled(VertexId u, VertexId v, int level) const {
    auto lower_has = [&](ReductionKind k) {
      for (const auto& [p, ks] : levels_) {
        if (p >= level) break;
        if (std::find(ks.begin(), ks.end(), k) != ks.end()) return true;
      }
      return false;
    };
    if (lower_has(ReductionKind::InClique) && g_.has_vertex(v) && pred_in_clique(g_, v))
      return true;
    if (lower_has(ReductionKind::OutClique) && g_.has_vertex(u) && pred_out_clique(g_, u))
      return true;
    if (lower_has(ReductionKind::Subset)) {
      for (VertexId x : {u, v}) {
        if (!g_.has_vertex(x)) continue;
        for (VertexId y : g_.successors(x))
          if (y != x && g_.has_arc(y, x) && pred_subset(g_, y, x)) return true;
      }
    }
    return false;
  }

  bool pie_applicable_anywhere() const {
    auto comp = h_scc_ids(g_);
    for (const Arc& a : g_.arcs())
      if (!g_.has_arc(a.to, a.from) && comp[a.from] != comp[a.to]) return true;
    return false;
  }

  // Pie: an arc of H is on no circuit of H iff its ends lie in different
  // SCCs of H. Removing such arcs changes neither A^<-> nor the SCCs of H,
  // so one SCC pass yields the whole batch; we bail out early only when a
  // removal enables a higher-priority rule. The batch keeps its canonical
  // arc order: shuffling it would move the bail point, hand the lower
  // levels a different intermediate graph, and let the order steer U.
  bool burst_pie(int level) {
    bool ever = false;
    for (;;) {
      auto comp = h_scc_ids(g_);
      std::vector<Arc> removable;
      for (const Arc& a : g_.arcs())
        if (!g_.has_arc(a.to, a.from) && comp[a.from] != comp[a.to]) removable.push_back(a);
      if (removable.empty()) return ever;
      for (const Arc& a : removable) {
        if (!g_.has_arc(a.from, a.to)) continue;  // endpoint trimmed meanwhile
        g_.remove_arc(a.from, a.to);
        ++trace_.pie;
        log_app(ReductionKind::Pie, a.from, a.to);
        ever = true;
        trim_if_isolated(a.from, ReductionKind::Pie);
        trim_if_isolated(a.to, ReductionKind::Pie);
        if (lower_kind_enabled(a.from, a.to, level)) return true;
      }
    }
  }

  bool burst_dome(int level) {
    bool ever = false;
    for (;;) {
      // Canonical order for the same reason as burst_pie: the pause point
      // must not depend on the seed.
      std::vector<Arc> candidates;
      for (const Arc& a : g_.arcs())
        if (!g_.has_arc(a.to, a.from)) candidates.push_back(a);
      bool changed = false;
      for (const Arc& a : candidates) {
        if (!g_.has_arc(a.from, a.to) || g_.has_arc(a.to, a.from)) continue;
        if (!pred_dome(g_, a.from, a.to)) continue;
        g_.remove_arc(a.from, a.to);
        ++trace_.dome;
        log_app(ReductionKind::DomePlusPlus, a.from, a.to);
        ever = changed = true;
        trim_if_isolated(a.from, ReductionKind::DomePlusPlus);
        trim_if_isolated(a.to, ReductionKind::DomePlusPlus);
        // Arc removal may promote work at any lower level.
        if (lower_kind_enabled(a.from, a.to, level)) return true;
        if (pie_applicable_anywhere()) return true;
      }
      if (!changed) return ever;
    }
  }

  Digraph g_;
  std::vector<ReductionKind> kinds_;
  PriorityMap priorities_;
  ReduceOptions opts_;
  bool trim_isolated_ = true;
  std::optional<std::mt19937_64> rng_;
  std::map<int, std::vector<ReductionKind>> levels_;
  ReductionTrace trace_;
  std::vector<Application> log_;
};

}  // namespace

SweepResult sweep(ReductionKind kind, const Digraph& g) {
  // The one-kind engine: single level, repeat until stable. Unlike
  // reduce(), a bare sweep leaves isolated vertices in place.
  PriorityMap one{{kind, 1}};
  Reducer r(g, {kind}, one, {}, /*trim_isolated=*/false);
  ReduceResult res = r.run();
  return {std::move(res.graph), std::move(res.trace)};
}

ReduceResult reduce(const Digraph& g, const std::vector<ReductionKind>& kinds,
                    const PriorityMap& priorities, const ReduceOptions& opts) {
  Reducer r(g, kinds, priorities, opts, /*trim_isolated=*/true);
  return r.run();
}

bool any_applicable(const Digraph& g, const std::vector<ReductionKind>& kinds) {
  for (ReductionKind k : kinds) {
    switch (k) {
      case ReductionKind::Loop:
        for (VertexId u : g.vertices())
          if (g.has_self_loop(u)) return true;
        break;
      case ReductionKind::Subset:
        for (VertexId u : g.vertices())
          for (VertexId v : g.successors(u))
            if (v != u && g.has_arc(v, u) && pred_subset(g, u, v)) return true;
        break;
      case ReductionKind::InClique:
        for (VertexId u : g.vertices())
          if (pred_in_clique(g, u)) return true;
        break;
      case ReductionKind::OutClique:
        for (VertexId u : g.vertices())
          if (pred_out_clique(g, u)) return true;
        break;
      case ReductionKind::Pie:
        for (const Arc& a : g.arcs())
          if (!g.has_arc(a.to, a.from) && pred_pie(g, a.from, a.to)) return true;
        break;
      case ReductionKind::DomePlusPlus:
        for (const Arc& a : g.arcs())
          if (!g.has_arc(a.to, a.from) && pred_dome(g, a.from, a.to)) return true;
        break;
    }
  }
  return false;
}

}  // namespace groundkit

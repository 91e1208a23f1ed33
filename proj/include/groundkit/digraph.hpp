#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groundkit/errors.hpp"

namespace groundkit {

// Dense index into one graph's vertex tables. Indices stay stable for the
// lifetime of the graph: removal tombstones an index, it never gets reused,
// so traces and logs keep naming vertices consistently across a run.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct Arc {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite digraph with interned string labels and arc-set semantics:
// (u,v) is present at most once, adding it twice collapses silently.
// Adjacency lists are kept sorted; every iteration order exposed here is
// ascending by index, so equal graphs serialize byte-identically.
class Digraph {
public:
  // Get-or-create the vertex for `label`. Labels are non-empty and map 1:1
  // to live vertices. Re-interning a removed label mints a fresh index.
  VertexId intern(std::string_view label);
  // kNoVertex when no live vertex carries the label.
  VertexId find(std::string_view label) const;
  // Valid for tombstoned ids too (traces outlive removals).
  const std::string& label(VertexId u) const;

  bool has_vertex(VertexId u) const { return u < alive_.size() && alive_[u]; }
  bool has_arc(VertexId u, VertexId v) const;
  bool has_self_loop(VertexId u) const { return has_arc(u, u); }

  // False if the arc was already there.
  bool add_arc(VertexId u, VertexId v);
  void remove_arc(VertexId u, VertexId v);   // UnknownArcError if absent
  void remove_vertex(VertexId u);            // UnknownVertexError if not live

  // G∘u: delete u, then connect every predecessor to every successor
  // (u itself excluded from both sides). May create self-loops (p,p) when
  // p was both a predecessor and a successor of u.
  void contract(VertexId u);

  const std::vector<VertexId>& successors(VertexId u) const;
  const std::vector<VertexId>& predecessors(VertexId u) const;
  std::size_t out_degree(VertexId u) const { return successors(u).size(); }
  std::size_t in_degree(VertexId u) const { return predecessors(u).size(); }

  std::vector<VertexId> vertices() const;  // live ids, ascending
  std::vector<Arc> arcs() const;           // ascending (from, then to)
  std::size_t vertex_count() const { return n_alive_; }
  std::size_t arc_count() const { return n_arcs_; }
  // All ids (live or tombstoned) are < index_bound().
  std::size_t index_bound() const { return alive_.size(); }

  // Diclique: pairwise arcs in both directions, and no member has a
  // self-loop. Sets of size <= 1 qualify (when loop-free).
  bool is_diclique(const std::vector<VertexId>& members) const;

  // A^<->: arcs whose reverse is present. Contains both orientations of
  // each pair and any self-loops. Ascending.
  std::vector<Arc> bidirectional_arcs() const;

  // Blocks sorted by smallest member, members ascending.
  std::vector<std::vector<VertexId>> strongly_connected_components() const;

  // True iff no circuit passes through (u,v), i.e. v does not reach u.
  // Self-loops are never acyclic. UnknownArcError if the arc is absent.
  bool arc_is_acyclic(VertexId u, VertexId v) const;

  // BFS over successors.
  bool reaches(VertexId from, VertexId to) const;

  std::vector<std::string> vertex_labels() const;                       // ascending index
  std::vector<std::pair<std::string, std::string>> labeled_arcs() const;  // ascending index

private:
  void check_vertex(VertexId u) const;

  std::vector<std::string> labels_;
  std::vector<bool> alive_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t n_alive_ = 0;
  std::size_t n_arcs_ = 0;
};

// Relation tags riding on arcs, keyed by label pair so they survive vertex
// removal and graph rebuilds. Used both for tags on arcs of an owning graph
// and as the free-standing preserved-relation sidecar.
class ArcAnnotations {
public:
  using Key = std::pair<std::string, std::string>;

  void add(const std::string& from, const std::string& to, const std::string& tag) {
    tags_[{from, to}].insert(tag);
  }
  const std::set<std::string>* find(const std::string& from, const std::string& to) const {
    auto it = tags_.find({from, to});
    return it == tags_.end() ? nullptr : &it->second;
  }
  void merge(const ArcAnnotations& other) {
    for (const auto& [key, tags] : other.tags_)
      tags_[key].insert(tags.begin(), tags.end());
  }
  bool empty() const { return tags_.empty(); }
  std::size_t size() const { return tags_.size(); }
  const std::map<Key, std::set<std::string>>& entries() const { return tags_; }

private:
  std::map<Key, std::set<std::string>> tags_;
};

}  // namespace groundkit

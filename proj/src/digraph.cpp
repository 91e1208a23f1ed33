#include "groundkit/digraph.hpp"

#include <algorithm>

namespace groundkit {

namespace {

bool sorted_contains(const std::vector<VertexId>& xs, VertexId x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  return it != xs.end() && *it == x;
}

// Returns false if already present.
bool sorted_insert(std::vector<VertexId>& xs, VertexId x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it != xs.end() && *it == x) return false;
  xs.insert(it, x);
  return true;
}

void sorted_erase(std::vector<VertexId>& xs, VertexId x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it != xs.end() && *it == x) xs.erase(it);
}

}  // namespace

void Digraph::check_vertex(VertexId u) const {
  if (!has_vertex(u))
    throw UnknownVertexError("unknown vertex id " + std::to_string(u));
}

VertexId Digraph::intern(std::string_view label) {
  if (label.empty()) throw Error("vertex label must be non-empty");
  std::string key(label);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  VertexId id = static_cast<VertexId>(labels_.size());
  labels_.push_back(std::move(key));
  alive_.push_back(true);
  out_.emplace_back();
  in_.emplace_back();
  index_.emplace(labels_.back(), id);
  ++n_alive_;
  return id;
}

VertexId Digraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? kNoVertex : it->second;
}

const std::string& Digraph::label(VertexId u) const {
  if (u >= labels_.size())
    throw UnknownVertexError("unknown vertex id " + std::to_string(u));
  return labels_[u];
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return sorted_contains(out_[u], v);
}

bool Digraph::add_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (!sorted_insert(out_[u], v)) return false;
  sorted_insert(in_[v], u);
  ++n_arcs_;
  return true;
}

void Digraph::remove_arc(VertexId u, VertexId v) {
  if (!has_arc(u, v))
    throw UnknownArcError("unknown arc (" + (u < labels_.size() ? labels_[u] : std::to_string(u)) +
                          ", " + (v < labels_.size() ? labels_[v] : std::to_string(v)) + ")");
  sorted_erase(out_[u], v);
  sorted_erase(in_[v], u);
  --n_arcs_;
}

void Digraph::remove_vertex(VertexId u) {
  check_vertex(u);
  for (VertexId s : out_[u])
    if (s != u) sorted_erase(in_[s], u);
  for (VertexId p : in_[u])
    if (p != u) sorted_erase(out_[p], u);
  // A self-loop sits in both lists but is a single arc.
  std::size_t removed = out_[u].size() + in_[u].size();
  if (sorted_contains(out_[u], u)) --removed;
  n_arcs_ -= removed;
  out_[u].clear();
  out_[u].shrink_to_fit();
  in_[u].clear();
  in_[u].shrink_to_fit();
  alive_[u] = false;
  index_.erase(labels_[u]);
  --n_alive_;
}

void Digraph::contract(VertexId u) {
  check_vertex(u);
  std::vector<VertexId> preds, succs;
  preds.reserve(in_[u].size());
  succs.reserve(out_[u].size());
  for (VertexId p : in_[u])
    if (p != u) preds.push_back(p);
  for (VertexId s : out_[u])
    if (s != u) succs.push_back(s);
  remove_vertex(u);
  for (VertexId p : preds)
    for (VertexId s : succs) add_arc(p, s);
}

const std::vector<VertexId>& Digraph::successors(VertexId u) const {
  check_vertex(u);
  return out_[u];
}

const std::vector<VertexId>& Digraph::predecessors(VertexId u) const {
  check_vertex(u);
  return in_[u];
}

std::vector<VertexId> Digraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_alive_);
  for (VertexId u = 0; u < alive_.size(); ++u)
    if (alive_[u]) out.push_back(u);
  return out;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(n_arcs_);
  for (VertexId u = 0; u < alive_.size(); ++u) {
    if (!alive_[u]) continue;
    for (VertexId v : out_[u]) out.push_back({u, v});
  }
  return out;
}

bool Digraph::is_diclique(const std::vector<VertexId>& members) const {
  for (VertexId u : members) check_vertex(u);
  for (VertexId u : members)
    if (has_arc(u, u)) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) continue;
      if (!has_arc(members[i], members[j]) || !has_arc(members[j], members[i])) return false;
    }
  return true;
}

std::vector<Arc> Digraph::bidirectional_arcs() const {
  std::vector<Arc> out;
  for (VertexId u = 0; u < alive_.size(); ++u) {
    if (!alive_[u]) continue;
    for (VertexId v : out_[u])
      if (sorted_contains(out_[v], u)) out.push_back({u, v});
  }
  return out;
}

std::vector<std::vector<VertexId>> Digraph::strongly_connected_components() const {
  // Iterative Tarjan; roots visited in ascending index order.
  const std::size_t n = alive_.size();
  std::vector<std::uint32_t> idx(n, 0), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> blocks;
  std::uint32_t counter = 1;

  struct Frame {
    VertexId v;
    std::size_t next;  // next successor position to explore
  };
  std::vector<Frame> call;

  for (VertexId root = 0; root < n; ++root) {
    if (!alive_[root] || idx[root] != 0) continue;
    call.push_back({root, 0});
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < out_[f.v].size()) {
        VertexId w = out_[f.v][f.next++];
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
          std::vector<VertexId> block;
          for (;;) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            block.push_back(w);
            if (w == v) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

bool Digraph::reaches(VertexId from, VertexId to) const {
  check_vertex(from);
  check_vertex(to);
  std::vector<bool> seen(alive_.size(), false);
  std::vector<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (v == to) return true;
    for (VertexId w : out_[v])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return false;
}

bool Digraph::arc_is_acyclic(VertexId u, VertexId v) const {
  if (!has_arc(u, v))
    throw UnknownArcError("unknown arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (u == v) return false;
  return !reaches(v, u);
}

std::vector<std::string> Digraph::vertex_labels() const {
  std::vector<std::string> out;
  out.reserve(n_alive_);
  for (VertexId u = 0; u < alive_.size(); ++u)
    if (alive_[u]) out.push_back(labels_[u]);
  return out;
}

std::vector<std::pair<std::string, std::string>> Digraph::labeled_arcs() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(n_arcs_);
  for (const Arc& a : arcs()) out.emplace_back(labels_[a.from], labels_[a.to]);
  return out;
}

}  // namespace groundkit

#include "groundkit/amr_pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace groundkit::amr {

namespace {

constexpr const char* kDefineConcept = "define-01";

std::vector<const penman::Edge*> root_edges(const penman::AmrGraph& g, const std::string& role) {
  std::vector<const penman::Edge*> out;
  for (const penman::Edge& e : g.edges)
    if (e.source == g.root && e.role == role) out.push_back(&e);
  return out;
}

bool has_outgoing(const penman::AmrGraph& g, const std::string& var) {
  for (const penman::Edge& e : g.edges)
    if (e.source == var) return true;
  return false;
}

}  // namespace

const char* validity_name(Validity v) {
  switch (v) {
    case Validity::Valid: return "Valid";
    case Validity::MissingArg1: return "MissingArg1";
    case Validity::MissingArg2: return "MissingArg2";
    case Validity::WrongRoot: return "WrongRoot";
    case Validity::NonAtomicDefined: return "NonAtomicDefined";
    case Validity::Patched: return "Patched";
    case Validity::Rejected: return "Rejected";
  }
  return "?";
}

bool metrics_identity_holds(const PreprocessMetrics& m) {
  return m.final_quantity + m.final_invalid + m.polysemy_filtered + m.symbol_collisions ==
         m.definition_quantity;
}

ValidityStatus validate(const penman::AmrGraph& g) {
  const std::string* root_concept = g.concept_of(g.root);
  if (root_concept == nullptr || *root_concept != kDefineConcept)
    return {Validity::WrongRoot, ""};
  auto arg1 = root_edges(g, ":ARG1");
  if (arg1.size() != 1) return {Validity::MissingArg1, ""};
  if (has_outgoing(g, arg1[0]->target)) return {Validity::NonAtomicDefined, ""};
  if (root_edges(g, ":ARG2").size() != 1) return {Validity::MissingArg2, ""};
  return {Validity::Valid, ""};
}

const std::string* defined_label(const DefinitionEntry& e) {
  auto arg1 = root_edges(e.amr, ":ARG1");
  if (arg1.size() != 1) return nullptr;
  return e.amr.concept_of(arg1[0]->target);
}

DefinitionEntry patch(const DefinitionEntry& entry, const penman::AmrGraph& replacement) {
  if (validate(entry.amr).kind == Validity::Valid) return entry;

  const penman::AmrGraph& g = entry.amr;
  const std::string* root_concept = g.concept_of(g.root);
  if (root_concept == nullptr || *root_concept != kDefineConcept)
    throw UnpatchableError("root is not " + std::string(kDefineConcept));
  auto arg1 = root_edges(g, ":ARG1");
  if (arg1.size() != 1) throw UnpatchableError("no unique :ARG1 edge from the root");
  if (has_outgoing(g, arg1[0]->target)) throw UnpatchableError(":ARG1 target is not atomic");

  penman::AmrGraph out;
  out.root = "v0";
  out.instances.emplace_back("v0", *root_concept);
  out.instances.emplace_back("v1", *g.concept_of(arg1[0]->target));

  std::map<std::string, std::string> rename;
  for (const auto& [var, c] : replacement.instances) {
    rename.emplace(var, "v" + std::to_string(rename.size() + 2));
    out.instances.emplace_back(rename.at(var), c);
  }
  out.edges.push_back({"v0", ":ARG1", "v1", 0});
  out.edges.push_back({"v0", ":ARG2", rename.at(replacement.root), 1});
  for (const penman::Edge& e : replacement.edges)
    out.edges.push_back({rename.at(e.source), e.role, rename.at(e.target), e.pos + 2});
  for (const penman::Attribute& a : replacement.attributes)
    out.attributes.push_back({rename.at(a.source), a.role, a.value, a.pos + 2});
  out.check();

  DefinitionEntry patched = entry;
  patched.amr = std::move(out);
  patched.status = {Validity::Patched, ""};
  return patched;
}

SenseSelection select_senses(std::vector<DefinitionEntry> entries) {
  SenseSelection out;
  std::map<std::pair<std::string, std::string>, std::size_t> best;  // (lexeme, label) -> index
  std::vector<std::string> labels(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const DefinitionEntry& e = entries[i];
    if (e.status.kind != Validity::Valid && e.status.kind != Validity::Patched)
      throw InvalidEntryError("entry '" + e.lexeme + "." + std::to_string(e.sense) +
                              "' is not Valid or Patched");
    const std::string* label = defined_label(e);
    if (label == nullptr)
      throw InvalidEntryError("entry '" + e.lexeme + "." + std::to_string(e.sense) +
                              "' has no defined symbol");
    labels[i] = *label;
    auto [it, fresh] = best.emplace(std::make_pair(e.lexeme, labels[i]), i);
    if (!fresh) {
      if (e.sense < entries[it->second].sense) it->second = i;
      ++out.polysemy_filtered;
    }
  }

  std::map<std::string, std::vector<std::size_t>> by_label;
  for (const auto& [key, idx] : best) by_label[key.second].push_back(idx);
  std::set<std::size_t> keep;
  for (const auto& [label, idxs] : by_label) {
    if (idxs.size() == 1)
      keep.insert(idxs[0]);
    else
      out.symbol_collisions += idxs.size();
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!keep.count(i)) continue;
    entries[i].kept = true;
    out.kept.push_back(std::move(entries[i]));
  }
  return out;
}

BypassResult bypass_root(const DefinitionEntry& e) {
  if (e.status.kind != Validity::Valid && e.status.kind != Validity::Patched)
    throw InvalidEntryError("entry '" + e.lexeme + "." + std::to_string(e.sense) + "' is " +
                            validity_name(e.status.kind) + ", cannot bypass root");
  const penman::AmrGraph& g = e.amr;
  const std::string* label = defined_label(e);
  auto arg2 = root_edges(g, ":ARG2");
  if (label == nullptr || arg2.size() != 1)
    throw InvalidEntryError("entry '" + e.lexeme + "." + std::to_string(e.sense) +
                            "' lost its definition structure");

  // Variables reachable from the :ARG2 target.
  std::set<std::string> subgraph{arg2[0]->target};
  std::vector<std::string> queue{arg2[0]->target};
  std::multimap<std::string, const penman::Edge*> out_edges;
  for (const penman::Edge& edge : g.edges) out_edges.emplace(edge.source, &edge);
  while (!queue.empty()) {
    std::string v = std::move(queue.back());
    queue.pop_back();
    auto [lo, hi] = out_edges.equal_range(v);
    for (auto it = lo; it != hi; ++it)
      if (subgraph.insert(it->second->target).second) queue.push_back(it->second->target);
  }

  BypassResult res;
  res.defined_label = *label;
  std::set<std::pair<std::string, std::string>> arcs;
  for (const std::string& var : subgraph) arcs.emplace(*g.concept_of(var), *label);
  res.definitional_arcs.assign(arcs.begin(), arcs.end());
  for (const penman::Edge& edge : g.edges)
    if (subgraph.count(edge.source))
      res.preserved.add(*g.concept_of(edge.source), *g.concept_of(edge.target), edge.role);
  return res;
}

UnionResult union_corpus(const std::vector<DefinitionEntry>& kept, PreprocessMetrics partial) {
  bool blank = partial.definition_quantity == 0 && partial.initial_invalid == 0 &&
               partial.saved == 0 && partial.final_invalid == 0 &&
               partial.polysemy_filtered == 0 && partial.symbol_collisions == 0;
  if (blank) partial.definition_quantity = kept.size();

  UnionResult res;
  res.metrics = partial;
  res.metrics.final_quantity = kept.size();
  if (!metrics_identity_holds(res.metrics))
    throw Error("preprocess metrics conservation identity violated");

  std::set<std::pair<std::string, std::string>> arcs;
  for (const DefinitionEntry& e : kept) {
    BypassResult b = bypass_root(e);
    arcs.insert(b.definitional_arcs.begin(), b.definitional_arcs.end());
    res.preserved.merge(b.preserved);
  }
  std::set<std::string> labels;
  for (const auto& [from, to] : arcs) {
    labels.insert(from);
    labels.insert(to);
  }
  for (const std::string& l : labels) res.graph.intern(l);
  for (const auto& [from, to] : arcs) {
    res.graph.add_arc(res.graph.find(from), res.graph.find(to));
    res.graph_tags.add(from, to, kDefineConcept);
  }
  return res;
}

CorpusResult process_corpus(std::string_view corpus_text) {
  std::vector<penman::PenmanDocument> docs = penman::parse_corpus(corpus_text);
  PreprocessMetrics m;
  m.definition_quantity = docs.size();

  std::vector<DefinitionEntry> entries;
  std::set<std::pair<std::string, std::uint32_t>> ids;
  for (penman::PenmanDocument& doc : docs) {
    const std::string* id = doc.metadata_value("id");
    if (id == nullptr)
      throw ParseError(ParseError::Kind::Format, "corpus block missing '# ::id lexeme.N'");
    penman::EntryId eid = penman::parse_entry_id(*id);
    if (!ids.emplace(eid.lexeme, eid.sense).second)
      throw ParseError(ParseError::Kind::Format, "duplicate entry id '" + *id + "'");

    DefinitionEntry e;
    e.lexeme = std::move(eid.lexeme);
    e.sense = eid.sense;
    e.amr = std::move(doc.graph);
    e.status = validate(e.amr);
    if (e.status.kind != Validity::Valid) {
      ++m.initial_invalid;
      if (const std::string* rep = doc.metadata_value("def-amr")) {
        try {
          e = patch(e, penman::parse_penman(*rep).graph);
          ++m.saved;
        } catch (const UnpatchableError& ex) {
          e.status = {Validity::Rejected, ex.what()};
          ++m.final_invalid;
        }
      } else {
        ++m.final_invalid;
      }
    }
    entries.push_back(std::move(e));
  }

  std::vector<DefinitionEntry> usable;
  for (const DefinitionEntry& e : entries)
    if (e.status.kind == Validity::Valid || e.status.kind == Validity::Patched) usable.push_back(e);
  SenseSelection sel = select_senses(std::move(usable));
  m.polysemy_filtered = sel.polysemy_filtered;
  m.symbol_collisions = sel.symbol_collisions;

  std::set<std::pair<std::string, std::uint32_t>> kept_ids;
  for (const DefinitionEntry& k : sel.kept) kept_ids.emplace(k.lexeme, k.sense);
  for (DefinitionEntry& e : entries) e.kept = kept_ids.count({e.lexeme, e.sense}) != 0;

  UnionResult u = union_corpus(sel.kept, m);
  return {std::move(u.graph), std::move(u.graph_tags), std::move(u.preserved), u.metrics,
          std::move(entries)};
}

}  // namespace groundkit::amr

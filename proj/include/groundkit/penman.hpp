#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "groundkit/errors.hpp"

namespace groundkit::penman {

// Role edge between two instantiated variables. Stored normalized: an
// inverse role ":X-of" from s to t arrives here as (t, ":X", s). `pos`
// remembers source order for canonical serialization.
struct Edge {
  std::string source;
  std::string role;
  std::string target;
  std::uint32_t pos = 0;
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.source == b.source && a.role == b.role && a.target == b.target;
  }
};

// Role with a constant value (number, quoted string, bare symbol).
struct Attribute {
  std::string source;
  std::string role;
  std::string value;
  std::uint32_t pos = 0;
  friend bool operator==(const Attribute& a, const Attribute& b) {
    return a.source == b.source && a.role == b.role && a.value == b.value;
  }
};

// Rooted AMR graph. Invariant (enforced by check()): one instance triple
// per variable; every edge endpoint and attribute source instantiated;
// after inverse-role normalization every variable is reachable from the
// root and the edge relation is acyclic.
struct AmrGraph {
  std::string root;
  std::vector<std::pair<std::string, std::string>> instances;  // var -> concept, first-visit order
  std::vector<Edge> edges;
  std::vector<Attribute> attributes;

  const std::string* concept_of(std::string_view var) const;
  bool has_instance(std::string_view var) const { return concept_of(var) != nullptr; }

  // Throws ParseError (DanglingVariable / DuplicateInstance / NotRooted /
  // Cycle) when the invariant is broken.
  void check() const;
};

// Structural equality: same root, instance set, edge set, attribute set
// (source order ignored).
bool structurally_equal(const AmrGraph& a, const AmrGraph& b);

// One corpus block: `# ::key value` metadata lines followed by a graph.
struct PenmanDocument {
  std::vector<std::pair<std::string, std::string>> metadata;  // in file order
  AmrGraph graph;

  const std::string* metadata_value(std::string_view key) const;
};

// Identifier "lexeme.N" (split at the last dot).
struct EntryId {
  std::string lexeme;
  std::uint32_t sense = 0;
};
EntryId parse_entry_id(std::string_view id);  // ParseError(Format) when malformed

// Parses one block of PENMAN text. Errors carry 1-based line/column.
PenmanDocument parse_penman(std::string_view text);

// Canonical form: depth-first from the root, each variable instantiated at
// first visit, later mentions as bare re-entrant variables, roles kept in
// source order. Normalized graphs never need inverse roles.
std::string serialize_penman(const PenmanDocument& doc);
std::string serialize_graph(const AmrGraph& g);

// Blank-line separated blocks.
std::vector<PenmanDocument> parse_corpus(std::string_view text);
std::string serialize_corpus(const std::vector<PenmanDocument>& docs);

}  // namespace groundkit::penman

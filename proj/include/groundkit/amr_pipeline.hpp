#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groundkit/digraph.hpp"
#include "groundkit/errors.hpp"
#include "groundkit/penman.hpp"

namespace groundkit::amr {

// A definition graph is usable when its root concept is "define-01", the
// root has exactly one :ARG1 edge whose target is atomic (the defined
// symbol), and exactly one :ARG2 edge (the defining subgraph).
enum class Validity {
  Valid,
  MissingArg1,
  MissingArg2,
  WrongRoot,
  NonAtomicDefined,
  Patched,
  Rejected,
};

const char* validity_name(Validity v);

struct ValidityStatus {
  Validity kind = Validity::Valid;
  std::string reason;  // set only for Rejected

  friend bool operator==(const ValidityStatus& a, const ValidityStatus& b) {
    return a.kind == b.kind;
  }
};

// One dictionary definition rendered as an AMR graph. (lexeme, sense) is
// unique within a corpus.
struct DefinitionEntry {
  std::string lexeme;
  std::uint32_t sense = 0;
  penman::AmrGraph amr;
  ValidityStatus status;
  bool kept = false;  // survived validation, patching and sense selection
};

// Counts for one corpus run. Conservation identity:
// final_quantity = definition_quantity - final_invalid - polysemy_filtered
//                - symbol_collisions.
struct PreprocessMetrics {
  std::uint64_t definition_quantity = 0;
  std::uint64_t initial_invalid = 0;
  std::uint64_t saved = 0;
  std::uint64_t final_invalid = 0;
  std::uint64_t polysemy_filtered = 0;
  std::uint64_t symbol_collisions = 0;
  std::uint64_t final_quantity = 0;
};

bool metrics_identity_holds(const PreprocessMetrics& m);

// Classifies a definition graph. Failures are reported in the fixed order
// WrongRoot, MissingArg1, NonAtomicDefined, MissingArg2.
ValidityStatus validate(const penman::AmrGraph& g);

// Concept label of the unique :ARG1 target, or nullptr when absent or
// ambiguous.
const std::string* defined_label(const DefinitionEntry& e);

// Repairs an entry that kept a usable root and defined symbol: everything
// except the root and the :ARG1 node is dropped, the replacement
// definition graph is attached under a fresh :ARG2 edge, and variables are
// renumbered v0, v1, ... (root, defined symbol, then the replacement's
// instances in order). A Valid entry is returned unchanged. Throws
// UnpatchableError when the root is not define-01 or the :ARG1 edge is
// absent, ambiguous or non-atomic.
DefinitionEntry patch(const DefinitionEntry& entry, const penman::AmrGraph& replacement);

struct SenseSelection {
  std::vector<DefinitionEntry> kept;  // input order, kept flag set
  std::uint64_t polysemy_filtered = 0;
  std::uint64_t symbol_collisions = 0;
};

// Keeps the smallest sense per (lexeme, defined label); when survivors of
// distinct lexemes still share a defined label, all of them are dropped as
// collisions. Entries must be Valid or Patched.
SenseSelection select_senses(std::vector<DefinitionEntry> entries);

struct BypassResult {
  std::string defined_label;
  // (concept -> defined symbol) per concept of the :ARG2 subgraph; sorted,
  // set semantics, self-loops possible.
  std::vector<std::pair<std::string, std::string>> definitional_arcs;
  ArcAnnotations preserved;  // original role edges of the :ARG2 subgraph
};

// Drops the root: every concept of the :ARG2 subgraph gains one arc toward
// the defined symbol, and the subgraph's role edges move to the preserved
// sidecar (attribute constants are not vertices and are not preserved).
// Throws InvalidEntryError unless the entry is Valid or Patched.
BypassResult bypass_root(const DefinitionEntry& e);

struct UnionResult {
  Digraph graph;
  ArcAnnotations graph_tags;  // "define-01" on every union arc
  ArcAnnotations preserved;
  PreprocessMetrics metrics;
};

// Merges the per-entry bypass results by sorted label. `partial` carries
// the counts accumulated upstream; final_quantity is filled here and the
// conservation identity is enforced. With a default `partial` the kept
// entries are taken to be the whole corpus.
UnionResult union_corpus(const std::vector<DefinitionEntry>& kept, PreprocessMetrics partial = {});

struct CorpusResult {
  Digraph graph;
  ArcAnnotations graph_tags;
  ArcAnnotations preserved;
  PreprocessMetrics metrics;
  std::vector<DefinitionEntry> entries;  // corpus order, final statuses
};

// Full pipeline over one corpus text: parse blocks (each needs `# ::id
// lexeme.N`; `# ::def-amr <graph>` supplies a replacement definition for
// patching), validate, patch, select senses, bypass roots, union.
CorpusResult process_corpus(std::string_view corpus_text);

}  // namespace groundkit::amr

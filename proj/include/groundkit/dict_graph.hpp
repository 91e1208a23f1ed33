#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "groundkit/digraph.hpp"

namespace groundkit::dict {

// Headword -> ordered definitions. Only the first definition of each
// lexeme feeds the digraph.
struct RawDictionary {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;  // file order
};

struct Stoplist {
  std::set<std::string> words;  // lowercased

  bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// Lowercased alphabetic tokens, split on every non-letter byte. Bytes >=
// 0x80 count as letters so UTF-8 words pass through untouched.
std::vector<std::string> tokenize(std::string_view definition);

// JSON lines, one object per lexeme:
//   {"lexeme": "...", "definitions": ["...", ...]}
// Empty definition strings and duplicate lexemes are format errors.
RawDictionary read_dictionary_jsonl(const std::string& path);
RawDictionary parse_dictionary_jsonl(std::string_view text);

// One word per line; blank lines and '#' comments skipped.
Stoplist read_stoplist(const std::string& path);
Stoplist parse_stoplist(std::string_view text);

// One vertex per lexeme and per surviving token; for each lexeme, arcs
// token -> lexeme over the stoplist-surviving tokens of its first
// definition (set semantics per definition).
Digraph build_dictionary_digraph(const RawDictionary& dict, const Stoplist& stop);

}  // namespace groundkit::dict

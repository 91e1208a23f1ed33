#include "groundkit/dict_graph.hpp"

#include <json.hpp>

#include "groundkit/errors.hpp"
#include "groundkit/graph_io.hpp"

namespace groundkit::dict {

namespace {

bool letter(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view definition) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : definition) {
    if (letter(c)) {
      cur.push_back(lower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RawDictionary parse_dictionary_jsonl(std::string_view text) {
  RawDictionary dict;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError(ParseError::Kind::Format, "dictionary line is not a JSON object", line_no,
                       1);
    if (!j.contains("lexeme") || !j["lexeme"].is_string() ||
        j["lexeme"].get_ref<const std::string&>().empty())
      throw ParseError(ParseError::Kind::Format, "missing or empty \"lexeme\"", line_no, 1);
    if (!j.contains("definitions") || !j["definitions"].is_array())
      throw ParseError(ParseError::Kind::Format, "missing \"definitions\" array", line_no, 1);
    std::string lexeme = j["lexeme"].get<std::string>();
    if (!seen.insert(lexeme).second)
      throw ParseError(ParseError::Kind::Format, "duplicate lexeme '" + lexeme + "'", line_no, 1);
    std::vector<std::string> defs;
    for (const auto& d : j["definitions"]) {
      if (!d.is_string() || d.get_ref<const std::string&>().empty())
        throw ParseError(ParseError::Kind::Format, "definitions must be non-empty strings",
                         line_no, 1);
      defs.push_back(d.get<std::string>());
    }
    dict.entries.emplace_back(std::move(lexeme), std::move(defs));
  }
  return dict;
}

RawDictionary read_dictionary_jsonl(const std::string& path) {
  return parse_dictionary_jsonl(read_text_file(path));
}

Stoplist parse_stoplist(std::string_view text) {
  Stoplist stop;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    std::string_view word = line.substr(b, e - b + 1);
    if (word.front() == '#') continue;
    std::string w;
    for (unsigned char c : word) w.push_back(lower(c));
    stop.words.insert(std::move(w));
  }
  return stop;
}

Stoplist read_stoplist(const std::string& path) { return parse_stoplist(read_text_file(path)); }

Digraph build_dictionary_digraph(const RawDictionary& dict, const Stoplist& stop) {
  Digraph g;
  for (const auto& [lexeme, defs] : dict.entries) g.intern(lexeme);
  for (const auto& [lexeme, defs] : dict.entries) {
    if (defs.empty()) continue;
    VertexId w = g.find(lexeme);
    std::set<std::string> used;
    for (std::string& tok : tokenize(defs.front())) {
      if (stop.contains(tok)) continue;
      if (!used.insert(tok).second) continue;
      g.add_arc(g.intern(tok), w);
    }
  }
  return g;
}

}  // namespace groundkit::dict

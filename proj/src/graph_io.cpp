#include "groundkit/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace groundkit {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string joined_tags(const ArcAnnotations* annotations, const std::string& from,
                        const std::string& to) {
  if (!annotations) return {};
  const auto* tags = annotations->find(from, to);
  if (!tags) return {};
  std::string out;
  for (const auto& t : *tags) {
    if (!out.empty()) out.push_back(',');
    out += t;
  }
  return out;
}

}  // namespace

LoadedGraph read_arc_list(std::string_view text) {
  LoadedGraph result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (pos > text.size()) break;
      continue;
    }
    auto fields = split(line, '\t');
    if (fields.size() > 3)
      throw ParseError(ParseError::Kind::Format, "too many fields in arc-list line", line_no, 1);
    for (auto f : fields)
      if (f.empty())
        throw ParseError(ParseError::Kind::Format, "empty label in arc-list line", line_no, 1);
    if (fields.size() == 1) {
      result.graph.intern(fields[0]);
    } else {
      VertexId u = result.graph.intern(fields[0]);
      VertexId v = result.graph.intern(fields[1]);
      result.graph.add_arc(u, v);
      if (fields.size() == 3) {
        for (auto tag : split(fields[2], ','))
          if (!tag.empty())
            result.annotations.add(std::string(fields[0]), std::string(fields[1]),
                                   std::string(tag));
      }
    }
    if (pos > text.size()) break;
  }
  return result;
}

LoadedGraph read_arc_list_file(const std::string& path) {
  return read_arc_list(read_text_file(path));
}

std::string write_arc_list(const Digraph& g, const ArcAnnotations* annotations) {
  std::string out;
  for (VertexId u : g.vertices()) {
    // Isolated vertices have no arc line to carry them.
    if (g.out_degree(u) == 0 && g.in_degree(u) == 0) {
      out += g.label(u);
      out.push_back('\n');
    }
  }
  for (const Arc& a : g.arcs()) {
    out += g.label(a.from);
    out.push_back('\t');
    out += g.label(a.to);
    std::string tags = joined_tags(annotations, g.label(a.from), g.label(a.to));
    if (!tags.empty()) {
      out.push_back('\t');
      out += tags;
    }
    out.push_back('\n');
  }
  return out;
}

void write_arc_list_file(const std::string& path, const Digraph& g,
                         const ArcAnnotations* annotations) {
  write_text_file(path, write_arc_list(g, annotations));
}

std::string write_annotation_list(const ArcAnnotations& annotations) {
  std::string out;
  for (const auto& [key, tags] : annotations.entries()) {
    out += key.first;
    out.push_back('\t');
    out += key.second;
    std::string joined;
    for (const auto& t : tags) {
      if (!joined.empty()) joined.push_back(',');
      joined += t;
    }
    if (!joined.empty()) {
      out.push_back('\t');
      out += joined;
    }
    out.push_back('\n');
  }
  return out;
}

std::string write_dot(const Digraph& g, const ArcAnnotations* annotations) {
  std::string out = "digraph G {\n";
  for (VertexId u : g.vertices()) {
    out += "  ";
    out += quote_dot(g.label(u));
    out += ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out += "  ";
    out += quote_dot(g.label(a.from));
    out += " -> ";
    out += quote_dot(g.label(a.to));
    std::string tags = joined_tags(annotations, g.label(a.from), g.label(a.to));
    if (!tags.empty()) {
      out += " [label=";
      out += quote_dot(tags);
      out += "]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace groundkit

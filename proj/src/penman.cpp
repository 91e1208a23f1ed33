#include "groundkit/penman.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace groundkit::penman {

namespace {

constexpr std::size_t kMaxDepth = 5000;

struct Token {
  enum Kind { LParen, RParen, Slash, Role, Atom, Str, End };
  Kind kind;
  std::string text;
  std::size_t line, col;
};

bool atom_char(char c) {
  return c != '(' && c != ')' && c != '/' && c != '"' && c != ' ' && c != '\t' && c != '\r' &&
         c != '\n';
}

class Lexer {
public:
  Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

  Token next() {
    skip_ws();
    if (pos_ >= text_.size()) return {Token::End, "", line_, col_};
    std::size_t line = line_, col = col_;
    char c = text_[pos_];
    if (c == '(') return advance(), Token{Token::LParen, "(", line, col};
    if (c == ')') return advance(), Token{Token::RParen, ")", line, col};
    if (c == '/') return advance(), Token{Token::Slash, "/", line, col};
    if (c == '"') return lex_string(line, col);
    if (c == ':') {
      std::string t;
      while (pos_ < text_.size() && atom_char(text_[pos_])) {
        t.push_back(text_[pos_]);
        advance();
      }
      if (t.size() == 1)
        throw ParseError(ParseError::Kind::Syntax, "empty role name", line, col);
      return {Token::Role, t, line, col};
    }
    std::string t;
    while (pos_ < text_.size() && atom_char(text_[pos_])) {
      t.push_back(text_[pos_]);
      advance();
    }
    return {Token::Atom, t, line, col};
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        advance();
      else
        break;
    }
  }

  // Keeps the quotes and escapes verbatim, so values round-trip bytewise.
  Token lex_string(std::size_t line, std::size_t col) {
    std::string t = "\"";
    advance();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\\' && pos_ + 1 < text_.size()) {
        t.push_back(c);
        advance();
        t.push_back(text_[pos_]);
        advance();
        continue;
      }
      t.push_back(c);
      advance();
      if (c == '"') return {Token::Str, t, line, col};
    }
    throw ParseError(ParseError::Kind::Syntax, "unterminated string literal", line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

bool inverse_role(const std::string& role) {
  // ":X-of" with non-empty X.
  return role.size() > 4 && role.compare(role.size() - 3, 3, "-of") == 0;
}

std::string strip_of(const std::string& role) { return role.substr(0, role.size() - 3); }

class Parser {
public:
  Parser(std::string_view text, std::size_t first_line) : lex_(text, first_line) { shift(); }

  AmrGraph parse() {
    if (tok_.kind != Token::LParen)
      throw ParseError(ParseError::Kind::Syntax, "expected '('", tok_.line, tok_.col);
    AmrGraph g;
    g.root = parse_node(g, 0);
    if (tok_.kind == Token::LParen)
      throw ParseError(ParseError::Kind::MultipleRoots, "more than one root node", tok_.line,
                       tok_.col);
    if (tok_.kind != Token::End)
      throw ParseError(ParseError::Kind::Syntax, "trailing content after graph", tok_.line,
                       tok_.col);
    resolve(g);
    g.check();
    return g;
  }

private:
  void shift() { tok_ = lex_.next(); }

  Token expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind)
      throw ParseError(ParseError::Kind::Syntax, std::string("expected ") + what, tok_.line,
                       tok_.col);
    Token t = tok_;
    shift();
    return t;
  }

  std::string parse_node(AmrGraph& g, std::size_t depth) {
    if (depth > kMaxDepth)
      throw ParseError(ParseError::Kind::Syntax, "nesting too deep", tok_.line, tok_.col);
    expect(Token::LParen, "'('");
    Token var = expect(Token::Atom, "variable");
    if (g.has_instance(var.text))
      throw ParseError(ParseError::Kind::DuplicateInstance,
                       "variable '" + var.text + "' instantiated twice", var.line, var.col);
    expect(Token::Slash, "'/'");
    Token concept_tok = expect(Token::Atom, "concept");
    g.instances.emplace_back(var.text, concept_tok.text);

    while (tok_.kind == Token::Role) {
      Token role = tok_;
      shift();
      if (tok_.kind == Token::LParen) {
        std::string child = parse_node(g, depth + 1);
        add_edge(g, var.text, role, child);
      } else if (tok_.kind == Token::Str) {
        add_attribute(g, var.text, role, tok_.text);
        shift();
      } else if (tok_.kind == Token::Atom) {
        // Variable reference or constant; settled after the full parse.
        pending_.push_back({var.text, role, tok_.text, seq_++});
        shift();
      } else {
        throw ParseError(ParseError::Kind::Syntax, "expected value after role", tok_.line,
                         tok_.col);
      }
    }
    expect(Token::RParen, "')'");
    return var.text;
  }

  void add_edge(AmrGraph& g, const std::string& source, const Token& role,
                const std::string& target) {
    if (inverse_role(role.text))
      g.edges.push_back({target, strip_of(role.text), source, seq_++});
    else
      g.edges.push_back({source, role.text, target, seq_++});
  }

  void add_attribute(AmrGraph& g, const std::string& source, const Token& role,
                     const std::string& value) {
    if (inverse_role(role.text))
      throw ParseError(ParseError::Kind::Syntax,
                       "inverse role '" + role.text + "' on constant value", role.line, role.col);
    g.attributes.push_back({source, role.text, value, seq_++});
  }

  struct Pending {
    std::string source;
    Token role;
    std::string value;
    std::uint32_t pos;
  };

  // A bare atom is a re-entrant variable reference iff that variable is
  // instantiated somewhere in the block; otherwise it is a constant.
  void resolve(AmrGraph& g) {
    for (const Pending& p : pending_) {
      if (g.has_instance(p.value)) {
        if (inverse_role(p.role.text))
          g.edges.push_back({p.value, strip_of(p.role.text), p.source, p.pos});
        else
          g.edges.push_back({p.source, p.role.text, p.value, p.pos});
      } else {
        if (inverse_role(p.role.text))
          throw ParseError(ParseError::Kind::Syntax,
                           "inverse role '" + p.role.text + "' on constant value", p.role.line,
                           p.role.col);
        g.attributes.push_back({p.source, p.role.text, p.value, p.pos});
      }
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return a.pos < b.pos; });
    std::sort(g.attributes.begin(), g.attributes.end(),
              [](const Attribute& a, const Attribute& b) { return a.pos < b.pos; });
  }

  Lexer lex_;
  Token tok_;
  std::vector<Pending> pending_;
  std::uint32_t seq_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

const std::string* AmrGraph::concept_of(std::string_view var) const {
  for (const auto& [v, c] : instances)
    if (v == var) return &c;
  return nullptr;
}

void AmrGraph::check() const {
  std::set<std::string> vars;
  for (const auto& [v, c] : instances) {
    if (!vars.insert(v).second)
      throw ParseError(ParseError::Kind::DuplicateInstance,
                       "variable '" + v + "' instantiated twice");
  }
  if (!vars.count(root))
    throw ParseError(ParseError::Kind::DanglingVariable, "root '" + root + "' not instantiated");
  for (const Edge& e : edges) {
    if (!vars.count(e.source))
      throw ParseError(ParseError::Kind::DanglingVariable,
                       "edge source '" + e.source + "' not instantiated");
    if (!vars.count(e.target))
      throw ParseError(ParseError::Kind::DanglingVariable,
                       "edge target '" + e.target + "' not instantiated");
  }
  for (const Attribute& a : attributes)
    if (!vars.count(a.source))
      throw ParseError(ParseError::Kind::DanglingVariable,
                       "attribute source '" + a.source + "' not instantiated");

  // Reachability from the root over normalized edges.
  std::map<std::string, std::vector<const Edge*>> out;
  for (const Edge& e : edges) out[e.source].push_back(&e);
  std::set<std::string> reached{root};
  std::vector<std::string> queue{root};
  while (!queue.empty()) {
    std::string v = std::move(queue.back());
    queue.pop_back();
    auto it = out.find(v);
    if (it == out.end()) continue;
    for (const Edge* e : it->second)
      if (reached.insert(e->target).second) queue.push_back(e->target);
  }
  for (const auto& [v, c] : instances)
    if (!reached.count(v))
      throw ParseError(ParseError::Kind::NotRooted,
                       "variable '" + v + "' unreachable from root");

  // Acyclicity (three-color DFS over variables).
  std::map<std::string, int> color;  // 0 white, 1 grey, 2 black
  struct Frame {
    std::string var;
    std::size_t next;
  };
  for (const auto& [start, c0] : instances) {
    if (color[start] != 0) continue;
    std::vector<Frame> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto it = out.find(f.var);
      std::size_t fanout = it == out.end() ? 0 : it->second.size();
      if (f.next < fanout) {
        const std::string& w = it->second[f.next++]->target;
        int& cw = color[w];
        if (cw == 1)
          throw ParseError(ParseError::Kind::Cycle,
                           "cycle through variable '" + w + "' after normalization");
        if (cw == 0) {
          cw = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[f.var] = 2;
        stack.pop_back();
      }
    }
  }
}

bool structurally_equal(const AmrGraph& a, const AmrGraph& b) {
  if (a.root != b.root) return false;
  auto inst = [](const AmrGraph& g) {
    auto v = g.instances;
    std::sort(v.begin(), v.end());
    return v;
  };
  if (inst(a) != inst(b)) return false;
  auto edges = [](const AmrGraph& g) {
    std::vector<std::tuple<std::string, std::string, std::string>> v;
    for (const Edge& e : g.edges) v.emplace_back(e.source, e.role, e.target);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (edges(a) != edges(b)) return false;
  auto attrs = [](const AmrGraph& g) {
    std::vector<std::tuple<std::string, std::string, std::string>> v;
    for (const Attribute& at : g.attributes) v.emplace_back(at.source, at.role, at.value);
    std::sort(v.begin(), v.end());
    return v;
  };
  return attrs(a) == attrs(b);
}

const std::string* PenmanDocument::metadata_value(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return &v;
  return nullptr;
}

EntryId parse_entry_id(std::string_view id) {
  auto dot = id.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == id.size())
    throw ParseError(ParseError::Kind::Format,
                     "malformed entry id '" + std::string(id) + "' (want lexeme.N)");
  std::string_view digits = id.substr(dot + 1);
  std::uint32_t sense = 0;
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw ParseError(ParseError::Kind::Format,
                       "malformed entry id '" + std::string(id) + "' (want lexeme.N)");
    sense = sense * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return {std::string(id.substr(0, dot)), sense};
}

namespace {

PenmanDocument parse_block(std::string_view block, std::size_t first_line) {
  PenmanDocument doc;
  std::string graph_text;
  std::size_t graph_first_line = first_line;
  bool graph_started = false;
  std::size_t line_no = first_line;
  std::size_t pos = 0;
  while (pos < block.size()) {
    std::size_t eol = block.find('\n', pos);
    if (eol == std::string_view::npos) eol = block.size();
    std::string_view line = block.substr(pos, eol - pos);
    pos = eol + 1;
    std::string_view t = trim(line);
    if (!t.empty() && t.front() == '#') {
      std::string_view rest = trim(t.substr(1));
      if (rest.rfind("::", 0) == 0) {
        rest.remove_prefix(2);
        std::size_t sp = rest.find_first_of(" \t");
        std::string key(rest.substr(0, sp));
        std::string value(sp == std::string_view::npos ? std::string_view{}
                                                       : trim(rest.substr(sp + 1)));
        if (key.empty())
          throw ParseError(ParseError::Kind::Format, "empty metadata key", line_no, 1);
        doc.metadata.emplace_back(std::move(key), std::move(value));
      }
      // plain comment lines are dropped
    } else {
      if (!graph_started && !t.empty()) {
        graph_started = true;
        graph_first_line = line_no;
      }
      if (graph_started) {
        graph_text.append(line);
        graph_text.push_back('\n');
      }
    }
    ++line_no;
  }
  if (trim(graph_text).empty())
    throw ParseError(ParseError::Kind::Syntax, "block has no graph", first_line, 1);
  Parser p(graph_text, graph_first_line);
  doc.graph = p.parse();
  return doc;
}

}  // namespace

PenmanDocument parse_penman(std::string_view text) { return parse_block(text, 1); }

std::vector<PenmanDocument> parse_corpus(std::string_view text) {
  std::vector<PenmanDocument> docs;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  std::string block;
  std::size_t block_first_line = 1;
  auto flush = [&]() {
    if (!trim(block).empty()) docs.push_back(parse_block(block, block_first_line));
    block.clear();
  };
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (trim(line).empty()) {
      flush();
      block_first_line = line_no + 1;
    } else {
      if (trim(block).empty()) block_first_line = line_no;
      block.append(line);
      block.push_back('\n');
    }
    ++line_no;
  }
  flush();
  return docs;
}

namespace {

struct Emitter {
  const AmrGraph& g;
  std::map<std::string, std::vector<std::pair<std::uint32_t, int>>> items;  // var -> (pos, index)
  std::set<std::string> emitted;
  std::string out;

  explicit Emitter(const AmrGraph& graph) : g(graph) {
    // Merge edges (index >= 0) and attributes (~index < 0) per source,
    // ordered by original position.
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      items[g.edges[i].source].emplace_back(g.edges[i].pos, static_cast<int>(i));
    for (std::size_t i = 0; i < g.attributes.size(); ++i)
      items[g.attributes[i].source].emplace_back(g.attributes[i].pos, ~static_cast<int>(i));
    for (auto& [v, xs] : items) std::sort(xs.begin(), xs.end());
  }

  void node(const std::string& var, std::size_t depth) {
    emitted.insert(var);
    out.push_back('(');
    out += var;
    out += " / ";
    out += *g.concept_of(var);
    auto it = items.find(var);
    if (it != items.end()) {
      for (const auto& [pos, idx] : it->second) {
        out.push_back('\n');
        out.append((depth + 1) * 3, ' ');
        if (idx >= 0) {
          const Edge& e = g.edges[static_cast<std::size_t>(idx)];
          out += e.role;
          out.push_back(' ');
          if (emitted.count(e.target))
            out += e.target;  // re-entrant mention
          else
            node(e.target, depth + 1);
        } else {
          const Attribute& a = g.attributes[static_cast<std::size_t>(~idx)];
          out += a.role;
          out.push_back(' ');
          out += a.value;
        }
      }
    }
    out.push_back(')');
  }
};

}  // namespace

std::string serialize_graph(const AmrGraph& g) {
  g.check();
  Emitter em(g);
  em.node(g.root, 0);
  em.out.push_back('\n');
  return em.out;
}

std::string serialize_penman(const PenmanDocument& doc) {
  std::string out;
  for (const auto& [k, v] : doc.metadata) {
    out += "# ::";
    out += k;
    if (!v.empty()) {
      out.push_back(' ');
      out += v;
    }
    out.push_back('\n');
  }
  out += serialize_graph(doc.graph);
  return out;
}

std::string serialize_corpus(const std::vector<PenmanDocument>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out.push_back('\n');
    out += serialize_penman(docs[i]);
  }
  return out;
}

}  // namespace groundkit::penman

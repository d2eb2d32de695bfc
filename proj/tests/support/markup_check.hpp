#pragma once

// Small conforming-enough parsers for the emitted SVG (XML) and DOT text.
// Each returns an empty string on success, otherwise a description of the
// first problem found.

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace markup {

struct XmlElement {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::string text;
  std::vector<XmlElement> children;
};

class XmlParser {
 public:
  explicit XmlParser(const std::string& s) : s_(s) {}

  std::string parse(XmlElement& root) {
    try {
      skip_ws();
      if (s_.compare(i_, 5, "<?xml") == 0) {
        auto end = s_.find("?>", i_);
        if (end == std::string::npos) return "unterminated declaration";
        i_ = end + 2;
      }
      skip_misc();
      root = element();
      skip_misc();
      if (i_ != s_.size()) return "content after root element at " + std::to_string(i_);
      return {};
    } catch (const std::string& e) {
      return e;
    }
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void skip_misc() {
    skip_ws();
    while (s_.compare(i_, 4, "<!--") == 0) {
      auto end = s_.find("-->", i_);
      if (end == std::string::npos) throw std::string("unterminated comment");
      i_ = end + 3;
      skip_ws();
    }
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.';
  }
  std::string name() {
    const auto start = i_;
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      throw std::string("expected a name at " + std::to_string(i_));
    }
    while (i_ < s_.size() && name_char(s_[i_])) ++i_;
    return s_.substr(start, i_ - start);
  }
  std::string decode(const std::string& raw) {
    std::string out;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '<') throw std::string("raw '<' in character data");
      if (raw[k] != '&') {
        out += raw[k];
        continue;
      }
      auto semi = raw.find(';', k);
      if (semi == std::string::npos) throw std::string("unterminated entity");
      const auto ent = raw.substr(k + 1, semi - k - 1);
      static const std::map<std::string, char> known{
          {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''}};
      if (auto it = known.find(ent); it != known.end()) {
        out += it->second;
      } else if (!ent.empty() && ent[0] == '#') {
        out += '?';
      } else {
        throw std::string("unknown entity &" + ent + ";");
      }
      k = semi;
    }
    return out;
  }
  XmlElement element() {
    if (i_ >= s_.size() || s_[i_] != '<') throw std::string("expected '<' at " + std::to_string(i_));
    ++i_;
    XmlElement e;
    e.name = name();
    while (true) {
      skip_ws();
      if (i_ >= s_.size()) throw std::string("unterminated start tag <" + e.name);
      if (s_.compare(i_, 2, "/>") == 0) {
        i_ += 2;
        return e;
      }
      if (s_[i_] == '>') {
        ++i_;
        break;
      }
      const auto key = name();
      skip_ws();
      if (i_ >= s_.size() || s_[i_] != '=') throw std::string("expected '=' after attribute " + key);
      ++i_;
      skip_ws();
      const char q = s_[i_];
      if (q != '"' && q != '\'') throw std::string("unquoted attribute " + key);
      const auto end = s_.find(q, i_ + 1);
      if (end == std::string::npos) throw std::string("unterminated attribute " + key);
      if (e.attrs.count(key)) throw std::string("duplicate attribute " + key);
      e.attrs[key] = decode(s_.substr(i_ + 1, end - i_ - 1));
      i_ = end + 1;
    }
    while (true) {
      const auto lt = s_.find('<', i_);
      if (lt == std::string::npos) throw std::string("unterminated element <" + e.name);
      e.text += decode(s_.substr(i_, lt - i_));
      i_ = lt;
      if (s_.compare(i_, 4, "<!--") == 0) {
        auto end = s_.find("-->", i_);
        if (end == std::string::npos) throw std::string("unterminated comment");
        i_ = end + 3;
        continue;
      }
      if (s_.compare(i_, 2, "</") == 0) {
        i_ += 2;
        const auto closing = name();
        if (closing != e.name) throw std::string("mismatched </" + closing + "> for <" + e.name + ">");
        skip_ws();
        if (i_ >= s_.size() || s_[i_] != '>') throw std::string("bad end tag");
        ++i_;
        return e;
      }
      e.children.push_back(element());
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

inline std::string check_xml(const std::string& text, XmlElement* out = nullptr) {
  XmlElement root;
  auto err = XmlParser(text).parse(root);
  if (out) *out = std::move(root);
  return err;
}

inline void collect(const XmlElement& e, const std::string& name, std::vector<const XmlElement*>& out) {
  if (e.name == name) out.push_back(&e);
  for (const auto& c : e.children) collect(c, name, out);
}

// --- DOT -----------------------------------------------------------------------

struct DotEdge {
  std::string from;
  std::string to;
  std::map<std::string, std::string> attrs;
};

struct DotGraph {
  bool directed = false;
  std::string id;
  std::map<std::string, std::map<std::string, std::string>> nodes;
  std::vector<DotEdge> edges;
};

// Recursive descent over the DOT grammar (graph, stmt_list, node/edge/attr
// statements, attribute lists). Subgraphs and ports are not needed here.
class DotParser {
 public:
  explicit DotParser(const std::string& s) : s_(s) {}

  std::string parse(DotGraph& g) {
    try {
      tokenize();
      auto kw = next();
      if (kw.kind == Tok::id && lower(kw.text) == "strict") kw = next();
      if (kw.kind != Tok::id || (lower(kw.text) != "digraph" && lower(kw.text) != "graph")) {
        throw std::string("expected graph or digraph");
      }
      g.directed = lower(kw.text) == "digraph";
      if (peek().kind == Tok::id) g.id = next().text;
      expect("{");
      while (!(peek().kind == Tok::punct && peek().text == "}")) {
        if (peek().kind == Tok::end) throw std::string("unterminated graph body");
        statement(g);
      }
      expect("}");
      if (peek().kind != Tok::end) throw std::string("content after graph body");
      return {};
    } catch (const std::string& e) {
      return e;
    }
  }

 private:
  enum class Tok { id, punct, arrow, end };
  struct Token {
    Tok kind;
    std::string text;
  };

  static std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < s_.size()) {
      const char c = s_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '/' && i + 1 < s_.size() && s_[i + 1] == '/') {
        while (i < s_.size() && s_[i] != '\n') ++i;
      } else if (c == '"') {
        std::string out;
        ++i;
        bool closed = false;
        while (i < s_.size()) {
          if (s_[i] == '\\' && i + 1 < s_.size()) {
            if (s_[i + 1] == '"') {
              out += '"';
            } else {
              out += s_[i];
              out += s_[i + 1];
            }
            i += 2;
            continue;
          }
          if (s_[i] == '"') {
            closed = true;
            ++i;
            break;
          }
          out += s_[i++];
        }
        if (!closed) throw std::string("unterminated string");
        toks_.push_back({Tok::id, out});
      } else if (c == '-' && i + 1 < s_.size() && (s_[i + 1] == '>' || s_[i + 1] == '-')) {
        toks_.push_back({Tok::arrow, s_.substr(i, 2)});
        i += 2;
      } else if (std::string("{}[]=;,").find(c) != std::string::npos) {
        toks_.push_back({Tok::punct, std::string(1, c)});
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
        const auto start = i;
        while (i < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i])) || s_[i] == '_' || s_[i] == '.' || s_[i] == '-')) {
          ++i;
        }
        toks_.push_back({Tok::id, s_.substr(start, i - start)});
      } else {
        throw std::string("unexpected character '") + c + "'";
      }
    }
  }

  const Token& peek() {
    static const Token end{Tok::end, ""};
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  Token next() {
    auto t = peek();
    if (pos_ < toks_.size()) ++pos_;
    return t;
  }
  void expect(const std::string& p) {
    auto t = next();
    if (t.kind != Tok::punct || t.text != p) throw std::string("expected '" + p + "' got '" + t.text + "'");
  }
  std::map<std::string, std::string> attr_list() {
    std::map<std::string, std::string> out;
    while (peek().kind == Tok::punct && peek().text == "[") {
      next();
      while (!(peek().kind == Tok::punct && peek().text == "]")) {
        auto k = next();
        if (k.kind != Tok::id) throw std::string("expected attribute name");
        expect("=");
        auto v = next();
        if (v.kind != Tok::id) throw std::string("expected attribute value for " + k.text);
        out[k.text] = v.text;
        if (peek().kind == Tok::punct && (peek().text == "," || peek().text == ";")) next();
      }
      expect("]");
    }
    return out;
  }
  void statement(DotGraph& g) {
    auto first = next();
    if (first.kind != Tok::id) throw std::string("expected a statement, got '" + first.text + "'");
    const auto kw = lower(first.text);
    if (kw == "graph" || kw == "node" || kw == "edge") {
      attr_list();
    } else if (peek().kind == Tok::punct && peek().text == "=") {
      next();
      if (next().kind != Tok::id) throw std::string("expected value after '='");
    } else if (peek().kind == Tok::arrow) {
      std::vector<std::string> chain{first.text};
      while (peek().kind == Tok::arrow) {
        auto op = next();
        if (g.directed != (op.text == "->")) throw std::string("edge operator does not match graph kind");
        auto t = next();
        if (t.kind != Tok::id) throw std::string("expected edge target");
        chain.push_back(t.text);
      }
      const auto attrs = attr_list();
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        g.nodes.try_emplace(chain[k]);
        g.nodes.try_emplace(chain[k + 1]);
        g.edges.push_back({chain[k], chain[k + 1], attrs});
      }
    } else {
      auto attrs = attr_list();
      auto& node = g.nodes[first.text];
      for (auto& [k, v] : attrs) node[k] = v;
    }
    if (peek().kind == Tok::punct && peek().text == ";") next();
  }

  const std::string& s_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline std::string check_dot(const std::string& text, DotGraph* out = nullptr) {
  DotGraph g;
  auto err = DotParser(text).parse(g);
  if (out) *out = std::move(g);
  return err;
}

}  // namespace markup

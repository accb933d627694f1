#include <cctype>
#include <map>
#include <optional>

#include "dowker/io.hpp"

namespace dowker {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string galois_label(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b) {
  return compact_labels(ctx.objects(), a.bits()) + " | " + compact_labels(ctx.attributes(), b.bits());
}

}  // namespace

std::string poset_dot(const Poset& p, std::string_view graph_name) {
  std::string out = "digraph " + quote(graph_name) + " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out += "  n" + std::to_string(i) + " [label=" + quote(p.element(i)) + "];\n";
  for (const auto& c : hasse(p)) out += "  n" + std::to_string(c.lower) + " -> n" + std::to_string(c.upper) + ";\n";
  return out + "}\n";
}

std::string lattice_dot(const ConceptLattice& lattice, bool reduced) {
  const auto& ctx = lattice.context();
  const auto labels = reduced ? reduced_labels(lattice) : lattice.concepts();
  std::string out = std::string("digraph ") + (reduced ? "reduced_lattice" : "concept_lattice") +
                    " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + quote(galois_label(ctx, labels[i].extent, labels[i].intent)) +
           "];\n";
  for (const auto& c : hasse(lattice.order()))
    out += "  n" + std::to_string(c.lower) + " -> n" + std::to_string(c.upper) + ";\n";
  return out + "}\n";
}

std::string cosheaf_dot(const DowkerCosheaf& cs) {
  const auto& ctx = cs.context();
  std::string out = "digraph dowker_cosheaf {\n  rankdir=BT;\n  node [shape=box];\n";
  std::map<std::size_t, std::vector<std::size_t>> by_dim;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs.cell(i).is_top) by_dim[cs.cell(i).face.count()].push_back(i);
  for (const auto& [size, cells] : by_dim) {
    out += "  subgraph dim" + std::to_string(size) + " {\n    rank=same;\n";
    for (auto i : cells) {
      const auto& cell = cs.cell(i);
      out += "    n" + std::to_string(i) + " [label=" + quote(galois_label(ctx, cell.face, cell.costalk));
      out += cell.is_concept ? ", style=bold" : ", style=solid";
      out += "];\n";
    }
    out += "  }\n";
  }
  for (const auto& c : hasse(cs.base()))
    if (!cs.cell(c.upper).is_top)
      out += "  n" + std::to_string(c.lower) + " -> n" + std::to_string(c.upper) + ";\n";
  return out + "}\n";
}

namespace {

struct Token {
  enum Kind { Id, Punct, EdgeOp, End } kind;
  std::string text;
  std::size_t offset;
};

class DotParser {
 public:
  explicit DotParser(std::string_view text) : text_(text) {}

  std::string run() {
    try {
      next();
      graph();
      if (tok_.kind != Token::End) fail("trailing content");
    } catch (const std::string& e) {
      return e;
    }
    return {};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw "offset " + std::to_string(tok_.offset) + ": " + what + " near '" + tok_.text + "'";
  }

  static bool keyword(const Token& t, std::string_view k) {
    if (t.kind != Token::Id || t.text.size() != k.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(t.text[i])) != k[i]) return false;
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//" || (c == '#' && (pos_ == 0 || text_[pos_ - 1] == '\n'))) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        const auto end = text_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) {
          tok_ = {Token::End, "/*", pos_};
          fail("unterminated comment");
        }
        pos_ = end + 2;
      } else {
        break;
      }
    }
  }

  void next() {
    skip_space();
    const auto start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    const char c = text_[pos_];
    if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= text_.size()) {
        tok_ = {Token::End, "\"", start};
        fail("unterminated string");
      }
      ++pos_;
      tok_ = {Token::Id, std::string(text_.substr(start, pos_ - start)), start};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
               static_cast<unsigned char>(c) >= 0x80) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                     static_cast<unsigned char>(text_[pos_]) >= 0x80))
        ++pos_;
      tok_ = {Token::Id, std::string(text_.substr(start, pos_ - start)), start};
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
               (c == '-' && pos_ + 1 < text_.size() &&
                (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '.'))) {
      ++pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      tok_ = {Token::Id, std::string(text_.substr(start, pos_ - start)), start};
    } else if (text_.substr(pos_, 2) == "->" || text_.substr(pos_, 2) == "--") {
      pos_ += 2;
      tok_ = {Token::EdgeOp, std::string(text_.substr(start, 2)), start};
    } else if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
      ++pos_;
      tok_ = {Token::Punct, std::string(1, c), start};
    } else {
      tok_ = {Token::Punct, std::string(1, c), start};
      fail("unexpected character");
    }
  }

  bool punct(char c) const { return tok_.kind == Token::Punct && tok_.text[0] == c; }

  void expect(char c) {
    if (!punct(c)) fail(std::string("expected '") + c + "'");
    next();
  }

  std::string id() {
    if (tok_.kind != Token::Id) fail("expected an identifier");
    auto t = tok_.text;
    next();
    return t;
  }

  void graph() {
    if (keyword(tok_, "strict")) next();
    if (keyword(tok_, "digraph")) {
      directed_ = true;
    } else if (!keyword(tok_, "graph")) {
      fail("expected 'graph' or 'digraph'");
    }
    next();
    if (tok_.kind == Token::Id) next();
    expect('{');
    stmt_list();
    expect('}');
  }

  void stmt_list() {
    while (!punct('}') && tok_.kind != Token::End) {
      stmt();
      if (punct(';')) next();
    }
  }

  void attr_list() {
    while (punct('[')) {
      next();
      while (!punct(']')) {
        id();
        expect('=');
        id();
        if (punct(';') || punct(',')) next();
      }
      next();
    }
  }

  void node_or_subgraph() {
    if (keyword(tok_, "subgraph") || punct('{')) {
      subgraph();
      return;
    }
    id();
    if (punct(':')) {
      next();
      id();
      if (punct(':')) {
        next();
        id();
      }
    }
  }

  void subgraph() {
    if (keyword(tok_, "subgraph")) {
      next();
      if (tok_.kind == Token::Id) next();
    }
    expect('{');
    stmt_list();
    expect('}');
  }

  void edge_rhs() {
    while (tok_.kind == Token::EdgeOp) {
      if ((tok_.text == "->") != directed_) fail("edge operator does not match graph kind");
      next();
      node_or_subgraph();
    }
  }

  void stmt() {
    if (keyword(tok_, "graph") || keyword(tok_, "node") || keyword(tok_, "edge")) {
      next();
      if (!punct('[')) fail("expected an attribute list");
      attr_list();
      return;
    }
    if (keyword(tok_, "subgraph") || punct('{')) {
      subgraph();
      edge_rhs();
      attr_list();
      return;
    }
    id();
    if (punct('=')) {
      next();
      id();
      return;
    }
    if (punct(':')) {
      next();
      id();
      if (punct(':')) {
        next();
        id();
      }
    }
    edge_rhs();
    attr_list();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Token::End, "", 0};
  bool directed_ = false;
};

}  // namespace

std::string validate_dot(std::string_view text) { return DotParser(text).run(); }

}  // namespace dowker

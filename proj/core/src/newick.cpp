#include "cordlasso/newick.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include "cordlasso/errors.hpp"

namespace cordlasso {

namespace {

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' || c == ':' ||
         c == ';';
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  ParsedNewick parse() {
    skip_space();
    parse_subtree(kNoVertex);
    if (peek() == ':') {
      advance();
      parse_weight();  // a root length has no edge to sit on
    }
    skip_space();
    expect(';', "expected ';' at end of tree");
    skip_space();
    if (pos_ < text_.size()) fail("unexpected text after ';'");

    const std::size_t edges = parents_.size() - 1;
    if (!weights_.empty() && weights_.size() != edges) {
      throw ParseError("branch lengths must be given for all edges or none", line_, column_);
    }
    ParsedNewick out{XTree(std::move(parents_), labels_), std::nullopt};
    if (!weights_.empty()) out.weights = EdgeWeighting{std::move(weights_)};
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  void expect(char c, const std::string& message) {
    if (peek() != c) fail(message);
    advance();
  }

  std::string read_token() {
    std::string token;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      token += text_[pos_];
      advance();
    }
    return token;
  }

  Rational parse_weight() {
    skip_space();
    const std::size_t line = line_;
    const std::size_t column = column_;
    const std::string token = read_token();
    if (token.empty()) fail("expected a branch length after ':'");
    try {
      return parse_rational(token);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line, column);
    }
  }

  Vertex new_vertex(Vertex parent) {
    parents_.push_back(parent);
    return parents_.size() - 1;
  }

  Vertex parse_subtree(Vertex parent) {
    skip_space();
    const Vertex v = new_vertex(parent);
    if (peek() == '(') {
      const std::size_t open_line = line_;
      const std::size_t open_column = column_;
      advance();
      std::size_t kids = 0;
      while (true) {
        parse_subtree(v);
        ++kids;
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        expect(')', "expected ',' or ')'");
        break;
      }
      if (kids < 2) throw ParseError("unary vertex", open_line, open_column);
      skip_space();
      if (pos_ < text_.size() && !is_delimiter(peek())) fail("interior vertex labels are not supported");
    } else {
      const std::size_t line = line_;
      const std::size_t column = column_;
      const std::string label = read_token();
      if (label.empty()) fail("expected a leaf label or '('");
      if (!seen_.insert(label).second) throw ParseError("duplicate leaf label '" + label + "'", line, column);
      labels_.emplace(v, label);
    }
    skip_space();
    if (parent != kNoVertex && peek() == ':') {
      advance();
      weights_.emplace(v, parse_weight());
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<Vertex> parents_;
  std::map<Vertex, LeafLabel> labels_;
  std::map<Vertex, Rational> weights_;
  LeafSet seen_;
};

void print_subtree(const XTree& t, Vertex v, const std::optional<EdgeWeighting>& w, std::string& out) {
  if (t.is_leaf(v)) {
    out += t.label(v);
  } else {
    std::vector<std::pair<std::string, Vertex>> kids;
    for (Vertex c : t.children(v)) kids.emplace_back(t.canonical(c), c);
    std::sort(kids.begin(), kids.end());
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      print_subtree(t, kids[i].second, w, out);
    }
    out += ')';
  }
  if (w && v != t.root()) {
    out += ':';
    out += to_string(w->weight.at(v));
  }
}

}  // namespace

ParsedNewick parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string print_newick(const XTree& t, const std::optional<EdgeWeighting>& weights) {
  std::string out;
  print_subtree(t, t.root(), weights, out);
  out += ';';
  return out;
}

std::string print_newick(const XTree& t, const HeightMap& heights) {
  return print_newick(t, to_edge_weights(t, heights));
}

}  // namespace cordlasso

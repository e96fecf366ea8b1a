#include "lecq/QueryGraph.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lecq/Errors.h"

namespace lecq {

std::string QueryVertex::display() const {
  return constant ? constant->toNTriples() : variable;
}

QueryGraph::QueryGraph(std::vector<QueryVertex> vertices,
                       std::vector<QueryEdge> edges,
                       std::vector<std::string> projection)
    : vertices_(std::move(vertices)), projection_(std::move(projection)) {
  if (edges.empty()) throw QueryError("query has no triple patterns");
  std::set<std::string> names;
  for (const auto& v : vertices_) {
    if (v.isVariable() && !names.insert(v.variable).second) {
      throw QueryError("duplicate query vertex " + v.variable);
    }
  }
  std::set<std::string> labelVars;
  for (auto& e : edges) {
    if (e.src >= vertices_.size() || e.dst >= vertices_.size()) {
      throw QueryError("query edge endpoint out of range");
    }
    bool duplicate = std::any_of(edges_.begin(), edges_.end(), [&](auto& x) {
      return x.src == e.src && x.dst == e.dst && x.label == e.label &&
             x.labelVariable == e.labelVariable;
    });
    if (duplicate) continue;
    if (e.hasVariableLabel()) {
      if (e.labelVariable.empty()) {
        throw QueryError("predicate variable without a name");
      }
      if (names.contains(e.labelVariable)) {
        throw UnsupportedFeatureError("predicate variable " + e.labelVariable +
                                      " also used as a vertex");
      }
      if (!labelVars.insert(e.labelVariable).second) {
        throw UnsupportedFeatureError("predicate variable " + e.labelVariable +
                                      " used more than once");
      }
    }
    edges_.push_back(std::move(e));
  }

  incident_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[edges_[i].src].push_back(i);
    if (edges_[i].dst != edges_[i].src) incident_[edges_[i].dst].push_back(i);
  }

  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto ei : incident_[v]) {
      for (auto w : {edges_[ei].src, edges_[ei].dst}) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw QueryError("query graph is disconnected");
  }

  for (const auto& p : projection_) {
    if (!names.contains(p) && !labelVars.contains(p)) {
      throw QueryError("projected variable " + p + " not in pattern");
    }
  }
}

std::optional<std::size_t> QueryGraph::findVariable(
    std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].isVariable() && vertices_[i].variable == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> QueryGraph::variableVertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].isVariable()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> QueryGraph::starCenter() const {
  for (std::size_t c = 0; c < vertices_.size(); ++c) {
    bool all = std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) {
      return e.src == c || e.dst == c;
    });
    if (all) return c;
  }
  return std::nullopt;
}

// ____________________________________________________________________________
namespace {

const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const std::string kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

enum class Tok { kIri, kPrefixed, kVar, kBlank, kLiteral, kWord, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

const std::set<std::string> kUnsupportedKeywords = {
    "OPTIONAL", "FILTER",  "UNION", "MINUS", "GRAPH",  "BIND",
    "VALUES",   "SERVICE", "ORDER", "LIMIT", "OFFSET", "GROUP",
    "HAVING",   "ASK",     "CONSTRUCT", "DESCRIBE", "FROM", "NOT",
    "EXISTS"};

class BgpParser {
 public:
  explicit BgpParser(std::string_view text) : s_(text) { tokenize(); }

  QueryGraph parse() {
    while (isWord("PREFIX") || isWord("BASE")) {
      if (isWord("BASE")) {
        throw UnsupportedFeatureError("BASE declarations are not supported");
      }
      advance();
      const Token& p = expect(Tok::kPrefixed, "prefix name");
      std::string name = p.text.substr(0, p.text.find(':'));
      if (p.text.back() != ':' || p.text.find(':') != p.text.size() - 1) {
        fail("malformed prefix declaration", p);
      }
      const Token& iri = expect(Tok::kIri, "prefix IRI");
      prefixes_[name] = iri.text;
    }
    if (!isWord("SELECT")) fail("expected SELECT", peek());
    advance();
    if (isWord("DISTINCT") || isWord("REDUCED")) advance();
    std::vector<std::string> projection;
    if (isPunct("*")) {
      advance();
    } else {
      while (peek().kind == Tok::kVar) {
        projection.push_back(peek().text);
        advance();
        if (isPunct(",")) advance();
      }
      if (projection.empty()) fail("expected projection", peek());
    }
    if (isWord("WHERE")) advance();
    if (!isPunct("{")) fail("expected '{'", peek());
    advance();
    triples();
    if (!isPunct("}")) fail("expected '}'", peek());
    advance();
    if (isPunct(".")) advance();
    if (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kWord) checkKeyword(peek());
      fail("trailing content", peek());
    }
    return QueryGraph(std::move(vertices_), std::move(edges_),
                      std::move(projection));
  }

 private:
  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw QueryError(what + " at offset " + std::to_string(t.offset));
  }

  void checkKeyword(const Token& t) const {
    auto w = upper(t.text);
    if (kUnsupportedKeywords.contains(w)) {
      throw UnsupportedFeatureError(w + " is not supported");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool isWord(const char* w) const {
    return peek().kind == Tok::kWord && upper(peek().text) == w;
  }
  bool isPunct(const char* p) const {
    return peek().kind == Tok::kPunct && peek().text == p;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    const Token& t = peek();
    advance();
    return t;
  }

  void triples() {
    while (!isPunct("}")) {
      if (peek().kind == Tok::kWord) checkKeyword(peek());
      if (isPunct("{")) throw UnsupportedFeatureError("nested groups");
      std::size_t subject = vertex(peek());
      advance();
      while (true) {
        auto [label, labelVar] = verb();
        while (true) {
          std::size_t object = vertex(peek());
          advance();
          edges_.push_back(QueryEdge{subject, object, label, labelVar});
          if (!isPunct(",")) break;
          advance();
        }
        if (!isPunct(";")) break;
        advance();
        if (isPunct(".") || isPunct("}")) break;
      }
      if (isPunct(".")) {
        advance();
      } else if (!isPunct("}")) {
        if (peek().kind == Tok::kWord) checkKeyword(peek());
        if (isPunct("{")) throw UnsupportedFeatureError("nested groups");
        fail("expected '.' or '}'", peek());
      }
    }
  }

  std::pair<std::optional<Term>, std::string> verb() {
    const Token& t = peek();
    if (t.kind == Tok::kPunct &&
        (t.text == "/" || t.text == "|" || t.text == "^" || t.text == "+" ||
         t.text == "(" || t.text == "!")) {
      throw UnsupportedFeatureError("property paths are not supported");
    }
    std::pair<std::optional<Term>, std::string> out;
    if (t.kind == Tok::kVar) {
      out = {std::nullopt, t.text};
    } else if (t.kind == Tok::kWord && t.text == "a") {
      out = {Term::iri(kRdfType), {}};
    } else if (t.kind == Tok::kIri || t.kind == Tok::kPrefixed) {
      out = {constant(t), {}};
    } else {
      if (t.kind == Tok::kWord) checkKeyword(t);
      fail("expected predicate", t);
    }
    advance();
    const Token& next = peek();
    if (next.kind == Tok::kPunct &&
        (next.text == "/" || next.text == "|" || next.text == "*" ||
         next.text == "+" || next.text == "?")) {
      throw UnsupportedFeatureError("property paths are not supported");
    }
    return out;
  }

  Term constant(const Token& t) {
    switch (t.kind) {
      case Tok::kIri: return Term::iri(t.text);
      case Tok::kPrefixed: {
        auto colon = t.text.find(':');
        auto it = prefixes_.find(t.text.substr(0, colon));
        if (it == prefixes_.end()) fail("undeclared prefix", t);
        return Term::iri(it->second + t.text.substr(colon + 1));
      }
      case Tok::kLiteral: return literal(t);
      default: fail("expected constant", t);
    }
  }

  Term literal(const Token& t) {
    // Literals are tokenised with their suffix; a prefixed datatype is
    // expanded here.
    auto caret = t.text.rfind("^^");
    auto closing = t.text.rfind('"');
    if (caret != std::string::npos && caret > closing &&
        t.text[caret + 2] != '<') {
      Token dt{Tok::kPrefixed, t.text.substr(caret + 2), t.offset};
      Term iri = constant(dt);
      return Term::literalToken(t.text.substr(0, caret) + "^^" +
                                iri.toNTriples());
    }
    return Term::literalToken(t.text);
  }

  std::size_t vertex(const Token& t) {
    QueryVertex v;
    if (t.kind == Tok::kVar || t.kind == Tok::kBlank) {
      v.variable = t.text;
    } else if (t.kind == Tok::kIri || t.kind == Tok::kPrefixed ||
               t.kind == Tok::kLiteral) {
      v.constant = constant(t);
    } else if (t.kind == Tok::kWord && t.text.find_first_not_of("0123456789") ==
                                           std::string::npos) {
      v.constant = Term::literal(t.text, {}, kXsdInteger);
    } else {
      if (t.kind == Tok::kWord) checkKeyword(t);
      fail("expected subject or object", t);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].constant == v.constant &&
          vertices_[i].variable == v.variable) {
        return i;
      }
    }
    vertices_.push_back(std::move(v));
    return vertices_.size() - 1;
  }

  void tokenize() {
    std::size_t i = 0;
    auto isNameChar = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
             c == '-' || c == '.' || static_cast<unsigned char>(c) >= 0x80;
    };
    while (true) {
      while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) {
        ++i;
      }
      if (i < s_.size() && s_[i] == '#') {
        while (i < s_.size() && s_[i] != '\n') ++i;
        continue;
      }
      if (i >= s_.size()) break;
      std::size_t start = i;
      char c = s_[i];
      if (c == '<') {
        auto close = s_.find('>', i);
        auto space = s_.find_first_of(" \t\n", i);
        if (close == std::string_view::npos || space < close) {
          // A comparison operator, only legal inside FILTER expressions.
          toks_.push_back({Tok::kPunct, "<", start});
          ++i;
          continue;
        }
        toks_.push_back({Tok::kIri, std::string(s_.substr(i + 1, close - i - 1)),
                         start});
        i = close + 1;
      } else if ((c == '?' || c == '$') && i + 1 < s_.size() &&
                 isNameChar(s_[i + 1])) {
        ++i;
        while (i < s_.size() && isNameChar(s_[i]) && s_[i] != '.') ++i;
        toks_.push_back(
            {Tok::kVar, "?" + std::string(s_.substr(start + 1, i - start - 1)),
             start});
      } else if (c == '_' && i + 1 < s_.size() && s_[i + 1] == ':') {
        i += 2;
        while (i < s_.size() && isNameChar(s_[i]) && s_[i] != '.') ++i;
        toks_.push_back({Tok::kBlank, std::string(s_.substr(start, i - start)),
                         start});
      } else if (c == '"') {
        ++i;
        bool closed = false;
        while (i < s_.size()) {
          if (s_[i] == '\\') {
            i += 2;
            continue;
          }
          if (s_[i++] == '"') {
            closed = true;
            break;
          }
        }
        if (!closed) throw QueryError("unterminated literal");
        if (i < s_.size() && s_[i] == '@') {
          ++i;
          while (i < s_.size() &&
                 (std::isalnum(static_cast<unsigned char>(s_[i])) ||
                  s_[i] == '-')) {
            ++i;
          }
        } else if (s_.substr(i, 2) == "^^") {
          i += 2;
          if (i < s_.size() && s_[i] == '<') {
            auto close = s_.find('>', i);
            if (close == std::string_view::npos) {
              throw QueryError("unterminated datatype IRI");
            }
            i = close + 1;
          } else {
            while (i < s_.size() && (isNameChar(s_[i]) || s_[i] == ':')) ++i;
          }
        }
        toks_.push_back({Tok::kLiteral, std::string(s_.substr(start, i - start)),
                         start});
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == ':') {
        while (i < s_.size() && (isNameChar(s_[i]) || s_[i] == ':')) ++i;
        // A trailing '.' terminates the triple, it is not part of the name.
        while (i > start + 1 && s_[i - 1] == '.') --i;
        std::string word(s_.substr(start, i - start));
        toks_.push_back({word.find(':') != std::string::npos ? Tok::kPrefixed
                                                             : Tok::kWord,
                         word, start});
      } else {
        toks_.push_back({Tok::kPunct, std::string(1, c), start});
        ++i;
      }
    }
    toks_.push_back({Tok::kEnd, "", s_.size()});
  }

  std::string_view s_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::vector<QueryVertex> vertices_;
  std::vector<QueryEdge> edges_;
};

}  // namespace

QueryGraph parseBgp(std::string_view text) { return BgpParser(text).parse(); }

QueryGraph loadQueryFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QueryError("cannot open query file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseBgp(buf.str());
}

// ____________________________________________________________________________
ResolvedQuery::ResolvedQuery(const QueryGraph& q, const Dictionary& dict)
    : query(&q) {
  for (const auto& v : q.vertices()) {
    if (v.isVariable()) {
      vertexConstant.push_back(kNullTerm);
    } else {
      vertexConstant.push_back(dict.find(*v.constant).value_or(kAbsentTerm));
    }
  }
  for (const auto& e : q.edges()) {
    if (e.hasVariableLabel()) {
      edgeLabel.push_back(kAnyLabel);
    } else {
      edgeLabel.push_back(dict.find(*e.label).value_or(kAbsentTerm));
    }
  }
}

}  // namespace lecq

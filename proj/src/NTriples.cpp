#include "lecq/NTriples.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lecq/Errors.h"

namespace lecq {

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t lineNo)
      : s_(line), lineNo_(lineNo) {}

  void skipSpace() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool atEnd() {
    skipSpace();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError(what + " at column " + std::to_string(pos_ + 1), lineNo_);
  }

  Term iri() {
    if (peek() != '<') fail("expected IRI");
    auto close = s_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string_view body = s_.substr(pos_ + 1, close - pos_ - 1);
    if (body.empty()) fail("empty IRI");
    for (char c : body) {
      if (c == ' ' || c == '<' || c == '"' || c == '\t') fail("invalid IRI");
    }
    pos_ = close + 1;
    return Term::iri(std::string(body));
  }

  Term blank() {
    if (s_.substr(pos_, 2) != "_:") fail("expected blank node");
    std::size_t start = pos_ + 2;
    std::size_t end = start;
    while (end < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[end])) ||
            s_[end] == '_' || s_[end] == '-' || s_[end] == '.')) {
      ++end;
    }
    while (end > start && s_[end - 1] == '.') --end;
    if (end == start) fail("empty blank node label");
    pos_ = end;
    return Term::blank(std::string(s_.substr(start, end - start)));
  }

  Term literal() {
    std::size_t start = pos_;
    ++pos_;
    bool closed = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= s_.size()) break;
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == '"') {
        closed = true;
        break;
      }
    }
    if (!closed) fail("unterminated literal");
    if (peek() == '@') {
      std::size_t tagStart = ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == tagStart) fail("empty language tag");
    } else if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      iri();
    }
    return Term::literalToken(std::string(s_.substr(start, pos_ - start)));
  }

  Term subject() {
    skipSpace();
    if (peek() == '<') return iri();
    if (peek() == '_') return blank();
    fail("expected subject");
  }
  Term predicate() {
    skipSpace();
    return iri();
  }
  Term object() {
    skipSpace();
    if (peek() == '<') return iri();
    if (peek() == '_') return blank();
    if (peek() == '"') return literal();
    fail("expected object");
  }
  void dot() {
    skipSpace();
    if (peek() != '.') fail("expected '.'");
    ++pos_;
    if (!atEnd()) fail("trailing content");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string_view s_;
  std::size_t lineNo_;
  std::size_t pos_ = 0;
};

}  // namespace

RdfGraph parseNTriples(std::istream& in) {
  RdfGraph graph;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineScanner scan(line, lineNo);
    if (scan.atEnd()) continue;
    Term s = scan.subject();
    Term p = scan.predicate();
    Term o = scan.object();
    scan.dot();
    graph.addTriple(s, p, o);
  }
  return graph;
}

RdfGraph parseNTriples(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parseNTriples(in);
}

RdfGraph loadNTriplesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file " + path);
  return parseNTriples(in);
}

void writeNTriples(const RdfGraph& graph, std::ostream& out) {
  const auto& dict = graph.dictionary();
  for (const auto& e : graph.edges()) {
    out << dict.term(e.src).toNTriples() << ' '
        << dict.term(e.label).toNTriples() << ' '
        << dict.term(e.dst).toNTriples() << " .\n";
  }
}

}  // namespace lecq

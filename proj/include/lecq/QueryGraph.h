#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lecq/Dictionary.h"
#include "lecq/Term.h"

namespace lecq {

struct QueryVertex {
  std::optional<Term> constant;
  // Variable name including its sigil ("?x", or "_:b" for blank nodes).
  std::string variable;

  bool isVariable() const { return !constant.has_value(); }
  std::string display() const;
};

struct QueryEdge {
  std::size_t src;
  std::size_t dst;
  std::optional<Term> label;
  std::string labelVariable;

  bool hasVariableLabel() const { return !label.has_value(); }
};

// A connected basic graph pattern. Vertices are numbered in order of first
// appearance, edges in pattern order.
class QueryGraph {
 public:
  // Throws QueryError if the pattern is empty or disconnected and
  // UnsupportedFeatureError for predicate variables that repeat or double as
  // vertices. Identical patterns collapse.
  QueryGraph(std::vector<QueryVertex> vertices, std::vector<QueryEdge> edges,
             std::vector<std::string> projection = {});

  const std::vector<QueryVertex>& vertices() const { return vertices_; }
  const std::vector<QueryEdge>& edges() const { return edges_; }
  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  const std::vector<std::string>& projection() const { return projection_; }
  const std::vector<std::size_t>& incidentEdges(std::size_t v) const {
    return incident_[v];
  }
  std::optional<std::size_t> findVariable(std::string_view name) const;
  // Indices of vertices that are variables.
  std::vector<std::size_t> variableVertices() const;

  // A vertex incident to every edge, if one exists. Self-loops on the centre
  // are allowed.
  std::optional<std::size_t> starCenter() const;

 private:
  std::vector<QueryVertex> vertices_;
  std::vector<QueryEdge> edges_;
  std::vector<std::string> projection_;
  std::vector<std::vector<std::size_t>> incident_;
};

QueryGraph parseBgp(std::string_view text);
QueryGraph loadQueryFile(const std::string& path);

// Query constants and labels translated to ids of one dictionary. Constants
// missing from the dictionary become kAbsentTerm so they never match.
struct ResolvedQuery {
  const QueryGraph* query;
  std::vector<TermId> vertexConstant;  // kNullTerm for variables
  std::vector<TermId> edgeLabel;       // kAnyLabel for predicate variables

  ResolvedQuery(const QueryGraph& q, const Dictionary& dict);

  bool admitsVertex(std::size_t v, TermId value) const {
    return vertexConstant[v] == kNullTerm || vertexConstant[v] == value;
  }
  bool admitsLabel(std::size_t e, TermId label) const {
    return edgeLabel[e] == kAnyLabel || edgeLabel[e] == label;
  }
};

}  // namespace lecq

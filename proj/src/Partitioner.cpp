#include "lecq/Partitioner.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "lecq/Errors.h"

namespace lecq {

void VertexAssignment::assign(const Term& vertex, FragmentId fragment) {
  if (fragment < 0) {
    throw PartitionError("negative fragment id for " + vertex.toNTriples());
  }
  homes_[vertex.toNTriples()] = fragment;
  fragmentCount_ = std::max(fragmentCount_, fragment + 1);
}

std::optional<FragmentId> VertexAssignment::find(const Term& vertex) const {
  if (auto it = homes_.find(vertex.toNTriples()); it != homes_.end()) {
    return it->second;
  }
  return std::nullopt;
}

VertexAssignment hashPartition(const RdfGraph& g, std::uint32_t k) {
  if (k == 0) throw PartitionError("fragment count must be positive");
  if (k > static_cast<std::uint32_t>(std::numeric_limits<FragmentId>::max())) {
    throw PartitionError("fragment count too large");
  }
  VertexAssignment a(static_cast<FragmentId>(k));
  for (auto v : g.vertices()) {
    const Term& t = g.dictionary().term(v);
    a.assign(t, static_cast<FragmentId>(fnv1a64(t.toNTriples()) % k));
  }
  return a;
}

DistributedGraph buildDistributed(const RdfGraph& g,
                                  const VertexAssignment& a) {
  const auto& dict = g.dictionary();
  std::unordered_map<TermId, FragmentId> home;
  for (auto v : g.vertices()) {
    auto f = a.find(dict.term(v));
    if (!f) {
      throw PartitionError("vertex without fragment: " +
                           dict.term(v).toNTriples());
    }
    home[v] = *f;
  }
  auto k = static_cast<std::size_t>(a.fragmentCount());
  std::vector<std::vector<TermId>> internal(k), extended(k);
  std::vector<std::vector<DataEdge>> internalEdges(k), crossing(k);
  std::vector<std::unordered_set<TermId>> extendedSeen(k);
  for (auto v : g.vertices()) internal[home[v]].push_back(v);
  for (const auto& e : g.edges()) {
    FragmentId fs = home[e.src];
    FragmentId fd = home[e.dst];
    if (fs == fd) {
      internalEdges[fs].push_back(e);
      continue;
    }
    crossing[fs].push_back(e);
    crossing[fd].push_back(e);
    if (extendedSeen[fs].insert(e.dst).second) extended[fs].push_back(e.dst);
    if (extendedSeen[fd].insert(e.src).second) extended[fd].push_back(e.src);
  }
  std::vector<Fragment> fragments;
  for (std::size_t i = 0; i < k; ++i) {
    fragments.emplace_back(static_cast<FragmentId>(i), g.sharedDictionary(),
                           std::move(internal[i]), std::move(extended[i]),
                           std::move(internalEdges[i]), std::move(crossing[i]));
  }
  return DistributedGraph(g.sharedDictionary(), std::move(fragments),
                          std::move(home));
}

void writePartitionFile(const RdfGraph& g, const VertexAssignment& a,
                        std::ostream& out) {
  for (auto v : g.vertices()) {
    const Term& t = g.dictionary().term(v);
    auto f = a.find(t);
    if (!f) throw PartitionError("vertex without fragment: " + t.toNTriples());
    out << t.toNTriples() << '\t' << *f << '\n';
  }
}

VertexAssignment readPartitionFile(std::istream& in) {
  VertexAssignment a;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.rfind('\t');
    auto fail = [&](const std::string& what) {
      throw PartitionError("partition file line " + std::to_string(lineNo) +
                           ": " + what);
    };
    if (tab == std::string::npos || tab == 0) fail("expected <term>\\t<id>");
    std::string key = line.substr(0, tab);
    std::string idText = line.substr(tab + 1);
    if (idText.empty() ||
        idText.find_first_not_of("0123456789") != std::string::npos ||
        idText.size() > 9) {
      fail("bad fragment id '" + idText + "'");
    }
    std::optional<Term> term;
    if (key.size() > 2 && key.front() == '<' && key.back() == '>') {
      term = Term::iri(key.substr(1, key.size() - 2));
    } else if (key.size() > 2 && key.starts_with("_:")) {
      term = Term::blank(key.substr(2));
    } else if (key.size() >= 2 && key.front() == '"') {
      term = Term::literalToken(key);
    } else {
      fail("bad term '" + key + "'");
    }
    if (a.find(*term)) fail("duplicate vertex " + key);
    a.assign(*term, static_cast<FragmentId>(std::stol(idText)));
  }
  return a;
}

VertexAssignment loadPartitionFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PartitionError("cannot open partition file " + path);
  return readPartitionFile(in);
}

// ____________________________________________________________________________
PartitionCostReport partitionCost(const DistributedGraph& d) {
  PartitionCostReport r;
  r.crossingEdges = d.crossingEdgeCount();
  std::unordered_map<TermId, std::uint64_t> degree;
  std::vector<TermId> order;
  for (const auto& f : d.fragments()) {
    for (auto v : f.internalVertices()) {
      degree[v] = 0;
      order.push_back(v);
    }
    r.maxFragmentEdges = std::max<std::uint64_t>(r.maxFragmentEdges,
                                                 f.edgeCount());
  }
  // Each crossing edge is stored twice; count it once via its source's home.
  for (const auto& f : d.fragments()) {
    for (const auto& e : f.crossingEdges()) {
      if (f.isInternal(e.src)) {
        ++degree[e.src];
        ++degree[e.dst];
      }
    }
  }
  std::sort(order.begin(), order.end());
  Rational denominator = 2 * Rational(r.crossingEdges);
  for (auto v : order) {
    VertexCost c{v, degree[v], Rational(0), Rational(0)};
    if (r.crossingEdges > 0) {
      c.probability = Rational(c.crossingDegree) / denominator;
      c.expectation = Rational(c.crossingDegree) * c.probability;
    }
    r.totalExpectation += c.expectation;
    r.perVertex.push_back(std::move(c));
  }
  r.cost = r.totalExpectation * Rational(r.maxFragmentEdges);
  return r;
}

std::string formatRational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

std::string toJson(const PartitionCostReport& r, const Dictionary& dict) {
  using nlohmann::json;
  json perVertex = json::array();
  for (const auto& c : r.perVertex) {
    perVertex.push_back({{"vertex", dict.term(c.vertex).toNTriples()},
                         {"crossing_degree", c.crossingDegree},
                         {"p", formatRational(c.probability)},
                         {"e", formatRational(c.expectation)}});
  }
  json out = {{"per_vertex", perVertex},
              {"crossing_edges", r.crossingEdges},
              {"e_total", formatRational(r.totalExpectation)},
              {"e_total_value", toDouble(r.totalExpectation)},
              {"max_fragment_edges", r.maxFragmentEdges},
              {"cost", formatRational(r.cost)},
              {"cost_value", toDouble(r.cost)}};
  return out.dump(2);
}

LecCountBound estimateLecCount(const DistributedGraph& d, const QueryGraph& q) {
  return estimateLecCount(d, q.edgeCount());
}

LecCountBound estimateLecCount(const DistributedGraph& d,
                               std::size_t queryEdges) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  LecCountBound b;
  for (const auto& f : d.fragments()) {
    std::uint64_t base = f.crossingEdges().size();
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < queryEdges; ++i) {
      if (base != 0 && value > kMax / base) {
        value = kMax;
        break;
      }
      value *= base;
    }
    b.perFragment.push_back(value);
    b.total = (kMax - b.total < value) ? kMax : b.total + value;
  }
  return b;
}

}  // namespace lecq

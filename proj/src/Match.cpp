#include "lecq/Match.h"

#include <algorithm>
#include <json.hpp>

namespace lecq {

std::vector<std::string> serializeMatch(const Match& m, const QueryGraph& q,
                                        const Dictionary& dict) {
  std::vector<std::string> out;
  for (auto v : m.assignment) out.push_back(dict.term(v).toNTriples());
  for (std::size_t i = 0; i < q.edgeCount(); ++i) {
    if (q.edges()[i].hasVariableLabel()) {
      out.push_back(dict.term(m.edgeMap[i].label).toNTriples());
    }
  }
  return out;
}

std::string matchToJsonLine(const Match& m, const QueryGraph& q,
                            const Dictionary& dict) {
  nlohmann::json obj = nlohmann::json::object();
  for (std::size_t v = 0; v < q.vertexCount(); ++v) {
    const auto& qv = q.vertices()[v];
    if (qv.isVariable()) {
      obj[qv.variable] = dict.term(m.assignment[v]).toNTriples();
    }
  }
  for (std::size_t i = 0; i < q.edgeCount(); ++i) {
    const auto& qe = q.edges()[i];
    if (qe.hasVariableLabel()) {
      obj[qe.labelVariable] = dict.term(m.edgeMap[i].label).toNTriples();
    }
  }
  return obj.dump();
}

void sortCanonically(std::vector<Match>& matches, const QueryGraph& q,
                     const Dictionary& dict) {
  std::vector<std::pair<std::vector<std::string>, Match>> keyed;
  keyed.reserve(matches.size());
  for (auto& m : matches) {
    keyed.emplace_back(serializeMatch(m, q, dict), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  matches.clear();
  for (auto& [key, m] : keyed) matches.push_back(std::move(m));
}

}  // namespace lecq

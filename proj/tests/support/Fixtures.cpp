#include "Fixtures.h"

#include "lecq/NTriples.h"

namespace lecq::test {

std::string dataPath(const std::string& name) {
  return std::string(LECQ_TEST_DATA_DIR) + "/" + name;
}

Dataset loadDataset(const std::string& nt, const std::string& part,
                    const std::string& rq) {
  Dataset d{loadNTriplesFile(dataPath(nt)),
            loadPartitionFile(dataPath(part)), nullptr, nullptr};
  d.dist = std::make_unique<DistributedGraph>(
      buildDistributed(d.graph, d.assignment));
  d.query = std::make_unique<QueryGraph>(loadQueryFile(dataPath(rq)));
  return d;
}

Dataset runningExample() {
  return loadDataset("running_example.nt", "running_example.part",
                     "running_example.rq");
}

const std::map<std::string, Term>& exampleTerms() {
  static const std::map<std::string, Term> terms = [] {
    const std::string e = "http://example.org/";
    return std::map<std::string, Term>{
        {"001", Term::iri(e + "Crispin_Wright")},
        {"002", Term::iri(e + "Philosopher")},
        {"003", Term::literal("Crispin Wright", "en")},
        {"004", Term::literal("Philosophy of language", "en")},
        {"005", Term::iri(e + "Philosophy_of_language")},
        {"006", Term::iri(e + "Ludwig_Wittgenstein")},
        {"007", Term::literal("Ludwig Wittgenstein", "en")},
        {"008", Term::iri(e + "Logic")},
        {"009", Term::literal("Logic", "en")},
        {"010", Term::iri(e + "Philosophy_of_mind")},
        {"011", Term::literal("Philosophy of mind", "en")},
        {"012", Term::iri(e + "Michael_Dummett")},
        {"013", Term::iri(e + "Metaphysics")},
        {"014", Term::iri(e + "Gottlob_Frege")},
        {"015", Term::literal("Metaphysics", "en")},
    };
  }();
  return terms;
}

TermId exampleVertex(const Dataset& d, const std::string& number) {
  return d.graph.dictionary().find(exampleTerms().at(number)).value();
}

namespace {

// Query vertex -> (vertex number, extended?) and query edge -> data edge.
struct LpmShape {
  FragmentId fragment;
  std::vector<std::pair<std::string, bool>> bindings;  // "" for NULL
  std::vector<bool> mapped;
};

const std::map<std::string, LpmShape>& lpmShapes() {
  // Query: e0 v1->v2 mainInterest, e1 v3->v1 influencedBy, e2 v2->v4 label,
  // e3 v3->v5 name.
  static const std::map<std::string, LpmShape> shapes = {
      {"PM11",
       {0,
        {{"006", true}, {"", false}, {"001", false}, {"", false}, {"003", false}},
        {false, true, false, true}}},
      {"PM12",
       {0,
        {{"012", true}, {"", false}, {"001", false}, {"", false}, {"003", false}},
        {false, true, false, true}}},
      {"PM13",
       {0,
        {{"006", true}, {"005", false}, {"", false}, {"004", false}, {"", false}},
        {true, false, true, false}}},
      {"PM21",
       {1,
        {{"006", false}, {"008", false}, {"001", true}, {"009", false}, {"", false}},
        {true, true, true, false}}},
      {"PM22",
       {1,
        {{"006", false}, {"010", false}, {"001", true}, {"011", false}, {"", false}},
        {true, true, true, false}}},
      {"PM23",
       {1,
        {{"006", false}, {"005", true}, {"001", true}, {"", false}, {"", false}},
        {true, true, false, false}}},
      {"PM31",
       {2,
        {{"012", false}, {"013", false}, {"001", true}, {"015", false}, {"", false}},
        {true, true, true, false}}},
      {"PM32",
       {2,
        {{"014", true}, {"013", false}, {"", false}, {"015", false}, {"", false}},
        {true, false, true, false}}},
  };
  return shapes;
}

}  // namespace

std::vector<std::string> exampleLpmNames() {
  return {"PM11", "PM12", "PM13", "PM21", "PM22", "PM23", "PM31", "PM32"};
}

LocalPartialMatch exampleLpm(const Dataset& d, const std::string& name) {
  const auto& shape = lpmShapes().at(name);
  const auto& q = *d.query;
  LocalPartialMatch m{shape.fragment, {}, {}, {shape.fragment}};
  for (const auto& [number, extended] : shape.bindings) {
    if (number.empty()) {
      m.bindings.push_back({});
    } else {
      m.bindings.push_back({exampleVertex(d, number),
                            extended ? SlotState::kExtended
                                     : SlotState::kInternal});
    }
  }
  const auto& dict = d.graph.dictionary();
  for (std::size_t i = 0; i < q.edgeCount(); ++i) {
    if (!shape.mapped[i]) {
      m.edgeMap.push_back(std::nullopt);
      continue;
    }
    const auto& qe = q.edges()[i];
    m.edgeMap.push_back(DataEdge{m.bindings[qe.src].vertex,
                                 *dict.find(*qe.label),
                                 m.bindings[qe.dst].vertex});
  }
  return m;
}

Dataset costExample(char variant) {
  return loadDataset("cost_example.nt",
                     std::string("cost_example_") + variant + ".part",
                     "star2.rq");
}

}  // namespace lecq::test

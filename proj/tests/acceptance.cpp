// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "Fixtures.h"
#include "RandomInstance.h"
#include "lecq/Assembly.h"
#include "lecq/CentralizedMatcher.h"
#include "lecq/Engine.h"
#include "lecq/FeaturePruning.h"
#include "lecq/LecFeature.h"
#include "lecq/LocalMatcher.h"
#include "lecq/Partitioner.h"
#include "lecq/Wire.h"

using namespace lecq;

namespace {

constexpr std::uint64_t kCorpusSize = 600;

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    failed_ |= !ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    std::cout << (failed_ ? "FAIL" : "PASS") << "  criterion " << id_ << ": "
              << title_ << " (" << checks_ << " checks)\n";
    for (const auto& n : notes_) std::cout << "      " << n << '\n';
    for (const auto& f : failures_) std::cout << "      failed: " << f << '\n';
    return !failed_;
  }

 private:
  int id_;
  std::string title_;
  std::size_t checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string seedTag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

std::vector<test::Dataset> buildCorpus() {
  std::vector<test::Dataset> corpus;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    corpus.push_back(test::randomInstance(seed));
  }
  return corpus;
}

std::vector<Match> centralized(const test::Dataset& d) {
  auto m = findMatchesCentralized(d.graph, *d.query);
  sortCanonically(m, *d.query, d.graph.dictionary());
  return m;
}

std::vector<LocalPartialMatch> lpmsOf(const test::Dataset& d, FragmentId f) {
  return findLocalPartialMatches(d.dist->fragment(f), *d.query);
}

// ____________________________________________________________________________
bool runningExamplePipeline() {
  Criterion c(1, "running-example pipeline");
  auto start = Clock::now();
  auto d = test::runningExample();
  const auto& q = *d.query;
  const auto& dict = d.graph.dictionary();
  auto pm = [&](const std::string& n) { return test::exampleLpm(d, n); };
  auto label = [&](const char* l) {
    return *dict.find(Term::iri(std::string("http://example.org/") + l));
  };
  auto v = [&](const char* n) { return test::exampleVertex(d, n); };
  auto lf = [&](FragmentId f,
                std::vector<std::tuple<const char*, const char*, const char*,
                                       std::uint32_t>> crossing,
                const char* sign) {
    LecFeature out{f, {}, LecSign::fromString(sign), {f}};
    for (auto [s, t, l, e] : crossing) out.crossing.push_back({{v(s), label(l), v(t)}, e});
    std::sort(out.crossing.begin(), out.crossing.end());
    return out;
  };
  // The seven features, fragments numbered from 0.
  std::map<std::string, LecFeature> expected = {
      {"PM11", lf(0, {{"001", "006", "influencedBy", 1}}, "00101")},
      {"PM12", lf(0, {{"001", "012", "influencedBy", 1}}, "00101")},
      {"PM13", lf(0, {{"006", "005", "mainInterest", 0}}, "01010")},
      {"PM21", lf(1, {{"001", "006", "influencedBy", 1}}, "11010")},
      {"PM23", lf(1,
                  {{"006", "005", "mainInterest", 0},
                   {"001", "006", "influencedBy", 1}},
                  "10000")},
      {"PM31", lf(2, {{"001", "012", "influencedBy", 1}}, "11010")},
      {"PM32", lf(2, {{"014", "013", "mainInterest", 0}}, "01010")},
  };

  // Feature computation from the fixture matches.
  std::vector<LecFeature> features;
  for (FragmentId f = 0; f < 3; ++f) {
    std::vector<LocalPartialMatch> lpms;
    for (const auto& n : test::exampleLpmNames()) {
      if (pm(n).fragment == f) lpms.push_back(pm(n));
    }
    auto fs = computeLecFeatures(lpms, q);
    features.insert(features.end(), fs.begin(), fs.end());
  }
  std::set<LecFeature> want;
  for (const auto& [n, f] : expected) want.insert(f);
  c.expect(features.size() == 7 &&
               std::set<LecFeature>(features.begin(), features.end()) == want,
           "seven features");

  // Grouping: P1 = {PM11, PM12}, P2 = {PM13}, P3 = {PM21, PM31},
  // P4 = {PM23}, P5 = {PM32}.
  std::vector<std::set<LecFeature>> fiveGroups = {
      {expected.at("PM11"), expected.at("PM12")},
      {expected.at("PM13")},
      {expected.at("PM21"), expected.at("PM31")},
      {expected.at("PM23")},
      {expected.at("PM32")}};
  auto groups = groupFeatures(features);
  std::set<std::set<LecFeature>> got;
  for (const auto& g : groups) got.insert({g.members.begin(), g.members.end()});
  bool groupsOk = got == std::set<std::set<LecFeature>>(fiveGroups.begin(),
                                                        fiveGroups.end());
  c.expect(groupsOk, "feature groups equal P1..P5 (got " +
                         std::to_string(groups.size()) + " groups)");
  if (!groupsOk) {
    std::ostringstream s;
    s << "groups by sign:";
    for (const auto& g : groups) {
      s << " [" << g.sign.toString() << "]x" << g.members.size();
    }
    c.note(s.str());
  }

  // Pruning.
  auto survivors = pruneFeatures(groups, buildFeatureJoinGraph(groups), q);
  std::set<LecFeature> removed = want;
  for (const auto& s : survivors) removed.erase(s);
  c.expect(removed == std::set<LecFeature>{expected.at("PM32")},
           "pruning removes exactly the PM32 feature");

  // Match groups over the survivors.
  std::set<LecFeature> keep(survivors.begin(), survivors.end());
  std::vector<LocalPartialMatch> kept;
  for (const auto& n : test::exampleLpmNames()) {
    if (keep.contains(featureOf(pm(n), q))) kept.push_back(pm(n));
  }
  auto lpmGroups = groupLpms(kept, q);
  std::set<std::set<LocalPartialMatch>> gotGr;
  for (const auto& g : lpmGroups) gotGr.insert({g.members.begin(), g.members.end()});
  std::set<std::set<LocalPartialMatch>> wantGr = {
      {pm("PM11"), pm("PM12")},
      {pm("PM13")},
      {pm("PM21"), pm("PM22"), pm("PM31")},
      {pm("PM23")}};
  c.expect(gotGr == wantGr, "match groups equal Gr1..Gr4");

  // Assembly.
  auto matches = assembleLec(lpmGroups, buildLpmJoinGraph(lpmGroups, q), q);
  std::vector<TermId> target = {v("006"), v("008"), v("001"), v("009"), v("003")};
  bool hasTarget = false;
  for (const auto& m : matches) hasTarget |= m.assignment == target;
  c.expect(matches.size() == 1, "assembly emits exactly one match (got " +
                                    std::to_string(matches.size()) + ")");
  c.expect(hasTarget, "the match on 003, 001, 006, 008, 009 is emitted");
  auto oracle = centralized(d);
  auto sorted = matches;
  sortCanonically(sorted, q, dict);
  c.expect(sorted == oracle, "assembled matches equal the centralized answer");
  if (matches.size() != 1) {
    for (const auto& m : sorted) {
      std::string line = "emitted:";
      for (auto t : serializeMatch(m, q, dict)) line += " " + t;
      c.note(line);
    }
  }
  double secs = secondsSince(start);
  c.expect(secs < 1.0, "runtime under one second");
  return c.report();
}

// ____________________________________________________________________________
bool fragmentConstruction() {
  Criterion c(2, "fragment construction on the example graph");
  auto d = test::runningExample();
  auto v = [&](const char* n) { return test::exampleVertex(d, n); };
  const auto& dict = d.graph.dictionary();
  auto inf = *dict.find(Term::iri("http://example.org/influencedBy"));
  auto mi = *dict.find(Term::iri("http://example.org/mainInterest"));
  const auto& f = d.dist->fragment(0);
  c.expect(std::set<TermId>(f.extendedVertices().begin(),
                            f.extendedVertices().end()) ==
               std::set<TermId>{v("006"), v("012")},
           "extended vertices of the first fragment");
  c.expect(f.extendedVertices().size() == 2, "no duplicate extended vertices");
  c.expect(std::set<DataEdge>(f.crossingEdges().begin(), f.crossingEdges().end()) ==
                   std::set<DataEdge>{{v("001"), inf, v("006")},
                                      {v("006"), mi, v("005")},
                                      {v("001"), inf, v("012")}} &&
               f.crossingEdges().size() == 3,
           "crossing edges of the first fragment");
  return c.report();
}

// ____________________________________________________________________________
std::vector<EngineOptions> flagCombinations() {
  std::vector<EngineOptions> out;
  for (int bits = 0; bits < 16; ++bits) {
    EngineOptions o;
    o.useCandidates = bits & 1;
    o.prune = bits & 2;
    o.lecAssembly = bits & 4;
    o.coordinatorPrune = bits & 8;
    if (o.coordinatorPrune && !o.prune) continue;
    out.push_back(o);
  }
  return out;
}

bool oracleEquivalence(const std::vector<test::Dataset>& corpus) {
  Criterion c(3, "engine equals centralized evaluation on the random corpus");
  auto start = Clock::now();
  auto combos = flagCombinations();
  std::size_t runs = 0, nonEmpty = 0, crossing = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    auto want = centralized(d);
    nonEmpty += !want.empty();
    for (auto o : combos) {
      o.threads = seed % 4 == 0 ? 3 : 1;
      auto r = runQuery(*d.dist, *d.query, o);
      ++runs;
      crossing += r.crossingMatches.size();
      c.expect(r.matches == want, seedTag(seed));
    }
  }
  double secs = secondsSince(start);
  c.expect(corpus.size() >= 500, "at least 500 instances");
  c.expect(secs < 60.0, "total runtime under 60 s");
  std::ostringstream s;
  s << corpus.size() << " instances, " << runs << " runs, " << nonEmpty
    << " with answers, " << crossing << " crossing matches, " << secs << " s";
  c.note(s.str());
  return c.report();
}

// ____________________________________________________________________________
bool pruningSafety(const std::vector<test::Dataset>& corpus) {
  Criterion c(4, "pruning never loses a match");
  std::size_t pruned = 0, total = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    EngineOptions on, off;
    off.prune = false;
    on.useCandidates = off.useCandidates = false;
    auto a = runQuery(*d.dist, *d.query, on);
    auto b = runQuery(*d.dist, *d.query, off);
    c.expect(a.matches == b.matches, seedTag(seed) + ": match sets differ");
    std::set<LecFeature> kept(a.survivors.begin(), a.survivors.end());
    total += a.features.size();
    pruned += a.features.size() - a.survivors.size();
    for (const auto& m : b.crossingMatches) {
      for (const auto& part : decomposeCrossingMatch(*d.dist, *d.query, m)) {
        c.expect(kept.contains(featureOf(part, *d.query)),
                 seedTag(seed) + ": pruned feature used by a match");
      }
    }
  }
  c.note(std::to_string(pruned) + " of " + std::to_string(total) +
         " features pruned over the corpus");
  return c.report();
}

// ____________________________________________________________________________
bool theoremSuite(const std::vector<test::Dataset>& corpus) {
  Criterion c(5, "class, join and assembly properties");
  std::size_t classPairs = 0, joins = 0, emitted = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    const auto& q = *d.query;
    std::vector<std::vector<LocalPartialMatch>> lpms;
    std::vector<std::vector<std::vector<std::size_t>>> classes;
    std::vector<LecFeature> features;
    for (const auto& f : d.dist->fragments()) {
      lpms.push_back(lpmsOf(d, f.id()));
      classes.push_back(equivalenceClasses(lpms.back()));
      if (!lpms.back().empty()) {
        auto fs = computeLecFeatures(lpms.back(), q);
        features.insert(features.end(), fs.begin(), fs.end());
      }
    }

    // Members of one class cover the same part of the query.
    for (std::size_t f = 0; f < lpms.size(); ++f) {
      for (const auto& cls : classes[f]) {
        const auto& first = lpms[f][cls.front()];
        for (auto i : cls) {
          const auto& m = lpms[f][i];
          bool same = featureOf(m, q) == featureOf(first, q);
          for (std::size_t e = 0; e < q.edgeCount(); ++e) {
            same &= m.edgeMap[e].has_value() == first.edgeMap[e].has_value();
          }
          for (std::size_t u = 0; u < q.vertexCount(); ++u) {
            same &= m.bindings[u].state == first.bindings[u].state;
          }
          c.expect(same, seedTag(seed) + ": class members differ in shape");
        }
      }
    }

    // Joinable features: every member pair joins.
    for (std::size_t fa = 0; fa < lpms.size(); ++fa) {
      for (std::size_t fb = 0; fb < lpms.size(); ++fb) {
        if (fa == fb) continue;
        for (const auto& x : classes[fa]) {
          for (const auto& y : classes[fb]) {
            const auto& rx = lpms[fa][x.front()];
            const auto& ry = lpms[fb][y.front()];
            bool repJoins = lpmJoin(rx, ry, q).has_value();
            ++classPairs;
            if (!repJoins) continue;
            ++joins;
            for (auto i : x) {
              for (auto j : y) {
                c.expect(lpmJoin(lpms[fa][i], lpms[fb][j], q).has_value(),
                         seedTag(seed) + ": member pair fails to join");
              }
            }
          }
        }
      }
    }

    // Equal signs never join.
    for (const auto& a : features) {
      for (const auto& b : features) {
        if (a.sign == b.sign) {
          c.expect(!joinable(a, b), seedTag(seed) + ": equal signs joinable");
        }
      }
    }

    // The parts of every emitted match form a valid feature chain.
    EngineOptions o;
    o.useCandidates = false;
    for (const auto& m : runQuery(*d.dist, q, o).crossingMatches) {
      ++emitted;
      auto parts = decomposeCrossingMatch(*d.dist, q, m);
      std::vector<LecFeature> fs;
      for (const auto& p : parts) fs.push_back(featureOf(p, q));
      LecSign all(q.vertexCount());
      bool ok = fs.size() >= 2;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        all = all | fs[i].sign;
        bool partner = false;
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (i == j) continue;
          partner |= joinable(fs[i], fs[j]);
          ok &= !fs[i].sign.intersects(fs[j].sign);
        }
        ok &= partner;
      }
      ok &= all.all();
      c.expect(ok, seedTag(seed) + ": emitted match violates chain conditions");
    }
  }
  c.note(std::to_string(classPairs) + " class pairs, " + std::to_string(joins) +
         " joining, " + std::to_string(emitted) + " emitted crossing matches");
  return c.report();
}

// ____________________________________________________________________________
bool costModel(const std::vector<test::Dataset>& corpus) {
  Criterion c(6, "partitioning cost model");
  std::size_t multi = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    if (d.dist->fragments().size() < 2) continue;
    ++multi;
    auto r = partitionCost(*d.dist);
    Rational sum = 0;
    for (const auto& v : r.perVertex) sum += v.probability;
    c.expect(sum == 1, seedTag(seed) + ": probabilities sum to " +
                           formatRational(sum));
  }
  auto a = test::costExample('a');
  auto b = test::costExample('b');
  auto ca = partitionCost(*a.dist).cost;
  auto cb = partitionCost(*b.dist).cost;
  c.expect(ca == Rational(55, 2), "cost (a) is 27.5, got " + formatRational(ca));
  c.expect(cb == Rational(117, 5), "cost (b) is 23.4, got " + formatRational(cb));
  auto na = countLecFeatures(*a.dist, *a.query);
  auto nb = countLecFeatures(*b.dist, *b.query);
  c.expect(na == 10, "feature count (a) is 10, got " + std::to_string(na));
  c.expect(nb == 9, "feature count (b) is 9, got " + std::to_string(nb));
  c.note(std::to_string(multi) + " multi-fragment instances; costs " +
         formatRational(ca) + " and " + formatRational(cb) +
         "; feature counts " + std::to_string(na) + " and " + std::to_string(nb));
  return c.report();
}

// ____________________________________________________________________________
bool shipmentBounds(const std::vector<test::Dataset>& corpus) {
  Criterion c(7, "shipment bounds");
  constexpr std::uint32_t kBits = kDefaultCandidateBits;
  std::size_t tight = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    const auto& q = *d.query;
    EngineOptions o;
    o.candidateBits = kBits;
    auto r = runQuery(*d.dist, q, o);
    auto perFeature =
        wire::kEdgeEntryBytes * (q.edgeCount() + q.vertexCount()) +
        wire::kFeatureHeaderBytes;
    auto bound = estimateLecCount(*d.dist, q).total;
    auto featureBytes = r.ledger.bytes(Phase::kFeatureUp);
    c.expect(featureBytes <= bound * perFeature,
             seedTag(seed) + ": feature bytes " + std::to_string(featureBytes) +
                 " exceed " + std::to_string(bound * perFeature));
    tight = std::max(tight, featureBytes);

    auto candidateBytes = [&](const QueryResult& x) {
      return x.ledger.bytes(Phase::kCandidateUp) +
             x.ledger.bytes(Phase::kCandidateDown);
    };
    std::size_t expected = q.variableVertices().size() *
                           d.dist->fragments().size() * 2 *
                           ((kBits + 7) / 8 + wire::kCandidateHeaderBytes);
    c.expect(candidateBytes(r) == expected,
             seedTag(seed) + ": candidate bytes " +
                 std::to_string(candidateBytes(r)) + " != " +
                 std::to_string(expected));

    // Twice the data, same crossing structure: same candidate traffic and
    // the same feature bound.
    auto doubled = test::doubleInternally(d);
    c.expect(doubled.graph.edgeCount() > d.graph.edgeCount() ||
                 d.dist->crossingEdgeCount() == d.graph.edgeCount(),
             seedTag(seed) + ": doubling added nothing");
    c.expect(doubled.dist->crossingEdgeCount() == d.dist->crossingEdgeCount(),
             seedTag(seed) + ": doubling changed crossing edges");
    auto r2 = runQuery(*doubled.dist, q, o);
    c.expect(candidateBytes(r2) == expected,
             seedTag(seed) + ": candidate bytes depend on graph size");
    c.expect(estimateLecCount(*doubled.dist, q).total == bound,
             seedTag(seed) + ": feature bound depends on graph size");
    c.expect(r2.ledger.bytes(Phase::kFeatureUp) <= bound * perFeature,
             seedTag(seed) + ": doubled feature bytes exceed bound");
  }
  c.note("largest feature-phase shipment " + std::to_string(tight) + " bytes");
  return c.report();
}

// ____________________________________________________________________________
bool candidateFilter(const std::vector<test::Dataset>& corpus) {
  Criterion c(8, "candidate filter has no false negatives");
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < corpus.size(); ++seed) {
    const auto& d = corpus[seed];
    const auto& q = *d.query;
    const auto& dict = d.graph.dictionary();
    auto matches = centralized(d);
    for (std::uint32_t bits : {kDefaultCandidateBits, 16u}) {
      for (auto var : q.variableVertices()) {
        std::vector<CandidateBitVector> perSite;
        for (const auto& f : d.dist->fragments()) {
          perSite.push_back(
              compressCandidates(localCandidates(f, q, var), dict, var, bits));
        }
        auto merged = aggregateCandidates(perSite);
        for (const auto& m : matches) {
          ++checked;
          c.expect(admits(merged, dict.term(m.assignment[var])),
                   seedTag(seed) + ": match vertex rejected");
        }
      }
      EngineOptions on, off;
      on.candidateBits = bits;
      off.useCandidates = false;
      c.expect(runQuery(*d.dist, q, on).matches ==
                   runQuery(*d.dist, q, off).matches,
               seedTag(seed) + ": filtering changes the answer");
    }
  }
  c.note(std::to_string(checked) + " match vertices checked");
  return c.report();
}

}  // namespace

int main() {
  bool ok = runningExamplePipeline();
  ok &= fragmentConstruction();
  auto corpus = buildCorpus();
  ok &= oracleEquivalence(corpus);
  ok &= pruningSafety(corpus);
  ok &= theoremSuite(corpus);
  ok &= costModel(corpus);
  ok &= shipmentBounds(corpus);
  ok &= candidateFilter(corpus);
  return ok ? 0 : 1;
}

#pragma once

#include <iosfwd>
#include <string_view>

#include "lecq/RdfGraph.h"

namespace lecq {

// Parses the N-Triples subset: IRIs, blank nodes and literals with optional
// language tag or datatype, one triple per line, '#' comments. Duplicate
// triples collapse. Throws DataError carrying the 1-based line number.
RdfGraph parseNTriples(std::istream& in);
RdfGraph parseNTriples(std::string_view text);
RdfGraph loadNTriplesFile(const std::string& path);

void writeNTriples(const RdfGraph& graph, std::ostream& out);

}  // namespace lecq

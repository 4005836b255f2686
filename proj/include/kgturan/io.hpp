#pragma once

#include "kgturan/alternation.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/hypergraph.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/turan.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace kgturan {

using Json = nlohmann::ordered_json;

/// {"n": int, "labels": [str]?, "edges": [[int,...],...]}; labels only when present.
Json hypergraph_to_json(const Hypergraph& h);
/// Throws InvalidArgument on a malformed document.
Hypergraph hypergraph_from_json(const Json& doc);

/// Canonical text form: compact, keys in fixed order, trailing newline.
/// Parsing it back and serialising again gives identical bytes.
std::string canonical_hypergraph_text(const Hypergraph& h);
Hypergraph parse_hypergraph_text(const std::string& text);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// DIMACS edge format, 1-indexed, for 2-uniform hypergraphs.
std::string to_dimacs(const Hypergraph& g, const std::vector<std::string>& comments = {});
Hypergraph parse_dimacs(std::istream& in);

/// One {"pattern": int, "edges": [int,...]} object per line.
std::string occurrences_json_lines(const std::vector<PatternOccurrence>& occurrences);

Json chromatic_value_json(const ChromaticValue& v);
Json coloring_json(const ColoringCertificate& c);
ColoringCertificate coloring_from_json(const Json& doc);

Json turan_report_json(const TuranReport& r);
TuranReport turan_report_from_json(const Json& doc);

Json pattern_family_json(const PatternFamily& family);
PatternFamily pattern_family_from_json(const Json& doc);

Json altermatic_json(const AltermaticCertificate& c);
AltermaticCertificate altermatic_from_json(const Json& doc);

} // namespace kgturan

#include "kgturan/io.hpp"

#include "kgturan/errors.hpp"

#include <fstream>
#include <sstream>

namespace kgturan {

namespace {

template <typename T>
T get_field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key))
        throw InvalidArgument(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<std::uint32_t> id_list(const Json& doc, const char* key)
{
    auto values = get_field<std::vector<long long>>(doc, key);
    std::vector<std::uint32_t> out;
    for (auto v : values) {
        if (v < 0 || v > static_cast<long long>(UINT32_MAX))
            throw InvalidArgument(std::string("field '") + key + "' holds a negative or oversized index");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

} // namespace

Json hypergraph_to_json(const Hypergraph& h)
{
    Json doc;
    doc["n"] = h.num_vertices();
    if (h.has_labels())
        doc["labels"] = h.labels();
    doc["edges"] = Json::array();
    for (const auto& e : h.edges())
        doc["edges"].push_back(e);
    return doc;
}

Hypergraph hypergraph_from_json(const Json& doc)
{
    auto n = get_field<long long>(doc, "n");
    if (n < 0)
        throw InvalidArgument("field 'n' must be nonnegative");
    std::vector<std::string> labels;
    if (doc.contains("labels"))
        labels = get_field<std::vector<std::string>>(doc, "labels");
    auto raw = get_field<std::vector<std::vector<long long>>>(doc, "edges");
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : raw) {
        std::vector<VertexId> members;
        for (auto v : e) {
            if (v < 0 || v >= n)
                throw InvalidArgument("hyperedge member " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                                      ")");
            members.push_back(static_cast<VertexId>(v));
        }
        edges.push_back(std::move(members));
    }
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges), std::move(labels));
}

std::string canonical_hypergraph_text(const Hypergraph& h) { return hypergraph_to_json(h).dump() + "\n"; }

Hypergraph parse_hypergraph_text(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    return hypergraph_from_json(doc);
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

std::string to_dimacs(const Hypergraph& g, const std::vector<std::string>& comments)
{
    if (!g.is_graph())
        throw InvalidArgument("DIMACS export needs a 2-uniform hypergraph");
    std::ostringstream out;
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e[0] + 1 << ' ' << e[1] + 1 << '\n';
    return out.str();
}

Hypergraph parse_dimacs(std::istream& in)
{
    std::string line;
    long long n = -1;
    long long declared = 0;
    std::vector<std::vector<VertexId>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string format;
            if (!(ls >> format >> n >> declared) || format != "edge" || n < 0)
                throw InvalidArgument("malformed DIMACS problem line: " + line);
        } else if (tag == "e") {
            long long u, v;
            if (n < 0 || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw InvalidArgument("malformed DIMACS edge line: " + line);
            edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
        } else {
            throw InvalidArgument("unknown DIMACS line: " + line);
        }
    }
    if (n < 0)
        throw InvalidArgument("DIMACS input has no problem line");
    if (static_cast<long long>(edges.size()) != declared)
        throw InvalidArgument("DIMACS edge count does not match the problem line");
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string occurrences_json_lines(const std::vector<PatternOccurrence>& occurrences)
{
    std::string out;
    for (const auto& occ : occurrences) {
        Json line;
        line["pattern"] = occ.pattern_index;
        line["edges"] = occ.edge_ids;
        out += line.dump() + "\n";
    }
    return out;
}

Json chromatic_value_json(const ChromaticValue& v)
{
    return v.is_unbounded() ? Json("unbounded") : Json(v.value());
}

Json coloring_json(const ColoringCertificate& c)
{
    Json doc;
    doc["num_colors"] = c.num_colors;
    doc["assignment"] = c.assignment;
    doc["coloring_kind"] = c.kind == ColoringKind::graph ? "graph" : "hypergraph";
    return doc;
}

ColoringCertificate coloring_from_json(const Json& doc)
{
    ColoringCertificate c;
    auto colours = get_field<long long>(doc, "num_colors");
    if (colours < 0)
        throw InvalidArgument("num_colors must be nonnegative");
    c.num_colors = static_cast<std::size_t>(colours);
    c.assignment = get_field<std::vector<int>>(doc, "assignment");
    if (doc.contains("coloring_kind"))
        c.kind = get_field<std::string>(doc, "coloring_kind") == "graph" ? ColoringKind::graph
                                                                       : ColoringKind::hypergraph;
    return c;
}

Json turan_report_json(const TuranReport& r)
{
    Json doc;
    doc["value"] = r.value;
    doc["mode"] = to_string(r.mode);
    if (!r.coloring) {
        doc["witness"] = {{"edges", r.witness}};
    } else {
        doc["witness"] = {{"ordering", r.coloring->ordering.sequence()}, {"colour", r.coloring->colour}};
    }
    doc["nodes"] = r.nodes;
    return doc;
}

TuranReport turan_report_from_json(const Json& doc)
{
    TuranReport r;
    auto value = get_field<long long>(doc, "value");
    if (value < 0)
        throw InvalidArgument("value must be nonnegative");
    r.value = static_cast<std::size_t>(value);
    r.mode = parse_bound_mode(get_field<std::string>(doc, "mode"));
    auto w = get_field<Json>(doc, "witness");
    if (w.contains("ordering")) {
        AlternatingColoring c{LinearOrdering(id_list(w, "ordering")), get_field<std::vector<int>>(w, "colour")};
        r.coloring = std::move(c);
    } else {
        r.witness = id_list(w, "edges");
    }
    return r;
}

Json pattern_family_json(const PatternFamily& family)
{
    Json doc = Json::array();
    for (const auto& p : family.patterns())
        doc.push_back(hypergraph_to_json(p));
    return doc;
}

PatternFamily pattern_family_from_json(const Json& doc)
{
    if (!doc.is_array())
        throw InvalidArgument("pattern family must be a JSON array of hypergraphs");
    std::vector<Hypergraph> patterns;
    for (const auto& p : doc)
        patterns.push_back(hypergraph_from_json(p));
    return PatternFamily(std::move(patterns));
}

Json altermatic_json(const AltermaticCertificate& c)
{
    Json doc;
    doc["representation"] = hypergraph_to_json(c.representation);
    doc["level"] = c.level;
    doc["strong"] = c.strong;
    doc["ordering"] = c.ordering.sequence();
    doc["alternation"] = c.alternation;
    doc["value"] = c.value;
    if (c.witness)
        doc["witness"] = c.witness->entries();
    else
        doc["witness"] = nullptr;
    return doc;
}

AltermaticCertificate altermatic_from_json(const Json& doc)
{
    AltermaticCertificate c;
    c.representation = hypergraph_from_json(get_field<Json>(doc, "representation"));
    c.level = get_field<std::size_t>(doc, "level");
    c.strong = get_field<bool>(doc, "strong");
    c.ordering = LinearOrdering(id_list(doc, "ordering"));
    c.alternation = get_field<std::size_t>(doc, "alternation");
    c.value = get_field<std::size_t>(doc, "value");
    if (doc.contains("witness") && !doc.at("witness").is_null())
        c.witness = SignVector(get_field<std::vector<int>>(doc, "witness"));
    return c;
}

} // namespace kgturan

#include "kgturan/cli.hpp"

#include "kgturan/alternation.hpp"
#include "kgturan/errors.hpp"
#include "kgturan/exact.hpp"
#include "kgturan/families.hpp"
#include "kgturan/harness.hpp"
#include "kgturan/io.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"
#include "kgturan/turan.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace kgturan {

namespace {

struct Caps {
    std::size_t max_vertices = 64;
    std::size_t max_occurrences = 2'000'000;
    std::size_t max_host_edges = 4096;
    std::size_t max_kneser_pairs = 4096;
    std::size_t max_kneser_tuples = 512;
    std::size_t max_exact_edges = 24;
    std::size_t max_ordering_edges = 8;
    std::size_t max_alt_vertices = 20;
    bool huge = false;
};

struct Options {
    std::string family;
    int n = 0, k = 0, d = 0, s = 0, m = 0, perm_r = 0;
    std::string host;
    std::size_t mult = 1;
    std::string pattern;
    int len = 0, pattern_s = 0;
    std::string input;
    std::string family_file;

    std::string quantity;
    int r = 2;
    std::size_t level = 1;
    std::string ordering;
    std::string mode = "exact";
    std::uint64_t seed = 1;
    std::size_t restarts = 64;
    std::size_t workers = 1;
    bool strong = false;
    bool as_graph = false;
    bool pretty = false;

    std::string cert_file;
    std::vector<std::string> groups;
    std::string what = "kg";
    std::string format = "json";
    std::string output;

    Caps caps;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Instance resolution

struct Instance {
    Json echo;
    std::optional<Hypergraph> host;
    std::optional<PatternFamily> family;
    std::optional<Hypergraph> representation; // given directly
    std::optional<NamedKneser> named;
    NamedKneserParams params;
};

Hypergraph host_from_options(const Options& o)
{
    auto kind = parse_family_kind(o.host);
    std::vector<int> params;
    switch (kind) {
    case FamilyKind::complete_bipartite: params = {o.m, o.n}; break;
    case FamilyKind::complete_uniform: params = {o.n, o.s}; break;
    default: params = {o.n}; break;
    }
    Hypergraph h = build_named_family(kind, params);
    if (o.mult == 0)
        throw InvalidArgument("--mult must be at least 1");
    if (o.mult > 1)
        h = build_multigraph(h, o.mult);
    return h;
}

PatternFamily family_from_options(const Options& o)
{
    if (!o.family_file.empty())
        return pattern_family_from_json(read_json_file(o.family_file));
    auto kind = parse_family_kind(o.pattern);
    std::vector<int> params;
    if (kind == FamilyKind::complete_bipartite || kind == FamilyKind::complete_uniform)
        params = {o.len, o.pattern_s};
    else
        params = {o.len};
    return PatternFamily::single(build_named_family(kind, params));
}

Instance resolve_instance(const Options& o)
{
    int sources = !o.family.empty() + !o.host.empty() + !o.input.empty();
    if (sources != 1)
        throw InvalidArgument("give exactly one of --family, --host, --input");
    bool has_pattern = !o.pattern.empty() || !o.family_file.empty();
    Instance inst;
    if (!o.family.empty()) {
        if (has_pattern)
            throw InvalidArgument("--family already fixes the pattern; drop --pattern/--family-file");
        inst.named = parse_named_kneser(o.family);
        inst.params = {o.n, o.k, o.d, o.s, o.m, o.perm_r};
        auto rep = named_representation(*inst.named, inst.params);
        inst.host = rep.host;
        inst.family = rep.family;
        inst.echo = {{"source", "named"},
                     {"family", to_string(*inst.named)},
                     {"params", {{"n", o.n}, {"k", o.k}, {"d", o.d}, {"s", o.s}, {"m", o.m}, {"perm_r", o.perm_r}}}};
        return inst;
    }
    Json pattern_echo;
    if (!o.family_file.empty())
        pattern_echo = {{"family_file", o.family_file}};
    else if (!o.pattern.empty())
        pattern_echo = {{"pattern", o.pattern}, {"len", o.len}, {"pattern_s", o.pattern_s}};
    if (!o.host.empty()) {
        if (!has_pattern)
            throw InvalidArgument("--host needs --pattern or --family-file");
        inst.host = host_from_options(o);
        inst.family = family_from_options(o);
        inst.echo = {{"source", "host"}, {"host", o.host}, {"n", o.n}, {"m", o.m}, {"s", o.s}, {"mult", o.mult}};
        inst.echo["family"] = pattern_echo;
        return inst;
    }
    Json doc = read_json_file(o.input);
    inst.echo = {{"source", "input"}, {"path", o.input}};
    if (doc.is_object() && doc.contains("host")) {
        if (has_pattern)
            throw InvalidArgument("the input document already holds a family");
        inst.host = hypergraph_from_json(doc.at("host"));
        if (!doc.contains("family"))
            throw InvalidArgument("instance document needs a 'family' array");
        inst.family = pattern_family_from_json(doc.at("family"));
    } else if (has_pattern) {
        inst.host = hypergraph_from_json(doc);
        inst.family = family_from_options(o);
        inst.echo["family"] = pattern_echo;
    } else {
        inst.representation = hypergraph_from_json(doc);
    }
    return inst;
}

PatternOptions pattern_options(const Options& o)
{
    PatternOptions p;
    p.max_occurrences = o.caps.max_occurrences;
    p.max_host_edges = o.caps.max_host_edges;
    p.workers = o.workers;
    return p;
}

KneserOptions kneser_options(const Options& o)
{
    KneserOptions k;
    k.max_rep_edges_pairs = o.caps.max_kneser_pairs;
    k.max_rep_edges_tuples = o.caps.max_kneser_tuples;
    k.unlimited = o.caps.huge;
    return k;
}

TuranOptions turan_options(const Options& o)
{
    TuranOptions t;
    t.max_exact_edges = o.caps.max_exact_edges;
    t.max_ordering_edges = o.caps.max_ordering_edges;
    t.patterns = pattern_options(o);
    return t;
}

AltLimits alt_limits(const Options& o)
{
    AltLimits a;
    a.max_vertices = o.caps.max_alt_vertices;
    a.max_ordering_vertices = o.caps.max_ordering_edges;
    return a;
}

const Hypergraph& require_host(const Instance& inst)
{
    if (!inst.host || !inst.family)
        throw InvalidArgument("this quantity needs a host and a pattern family");
    return *inst.host;
}

Hypergraph representation_of(const Instance& inst, const Options& o)
{
    if (inst.representation)
        return *inst.representation;
    const Hypergraph& host = require_host(inst);
    std::string host_text = canonical_hypergraph_text(host);
    std::string family_text = pattern_family_json(*inst.family).dump();
    const char* dir = std::getenv("KGTURAN_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        std::ostringstream name;
        name << "pattern-" << std::hex << std::setw(16) << std::setfill('0')
             << std::hash<std::string>{}(host_text + family_text) << ".json";
        file = std::filesystem::path(dir) / name.str();
        std::ifstream in(file);
        if (in) {
            try {
                Json cached = Json::parse(in);
                if (cached.at("host").dump() + "\n" == host_text && cached.at("family").dump() == family_text)
                    return hypergraph_from_json(cached.at("pattern_hypergraph"));
            } catch (const std::exception&) {
                // Unreadable cache entries are recomputed and overwritten.
            }
        }
    }
    Hypergraph rep = pattern_hypergraph(host, *inst.family, pattern_options(o));
    if (!file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        Json entry;
        entry["host"] = hypergraph_to_json(host);
        entry["family"] = pattern_family_json(*inst.family);
        entry["pattern_hypergraph"] = hypergraph_to_json(rep);
        std::ofstream out(file);
        if (out)
            out << entry.dump() << '\n';
    }
    return rep;
}

std::vector<std::uint32_t> parse_ordering(const std::string& text)
{
    bool inline_list = !text.empty() && text.find_first_not_of("0123456789, ") == std::string::npos;
    std::vector<std::uint32_t> seq;
    if (inline_list) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(' ') == std::string::npos)
                throw InvalidArgument("empty entry in --ordering");
            seq.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        return seq;
    }
    Json doc = read_json_file(text);
    if (doc.is_object() && doc.contains("ordering"))
        doc = doc.at("ordering");
    if (!doc.is_array())
        throw InvalidArgument("ordering file must hold a JSON array");
    for (const auto& v : doc) {
        if (!v.is_number_unsigned())
            throw InvalidArgument("ordering entries must be nonnegative integers");
        seq.push_back(v.get<std::uint32_t>());
    }
    return seq;
}

void check_caps(const Options& o)
{
    Caps defaults;
    const auto& c = o.caps;
    bool raised = c.max_vertices > defaults.max_vertices || c.max_occurrences > defaults.max_occurrences ||
                  c.max_host_edges > defaults.max_host_edges || c.max_kneser_pairs > defaults.max_kneser_pairs ||
                  c.max_kneser_tuples > defaults.max_kneser_tuples ||
                  c.max_exact_edges > defaults.max_exact_edges ||
                  c.max_ordering_edges > defaults.max_ordering_edges ||
                  c.max_alt_vertices > defaults.max_alt_vertices;
    if (raised && !c.huge)
        throw InvalidArgument("raising a cap above its default needs --i-know-this-is-huge");
    if (o.r < 2)
        throw InvalidArgument("--r must be at least 2");
    if (o.level < 1)
        throw InvalidArgument("--i must be at least 1");
    if (o.workers < 1)
        throw InvalidArgument("--workers must be at least 1");
}

Json config_json(const std::string& verb, const Options& o, const Json& instance)
{
    Json c;
    c["verb"] = verb;
    if (!o.quantity.empty())
        c["quantity"] = o.quantity;
    if (!instance.is_null())
        c["instance"] = instance;
    c["r"] = o.r;
    c["i"] = o.level;
    c["ordering"] = o.ordering.empty() ? Json(nullptr) : Json(o.ordering);
    c["mode"] = o.mode;
    c["strong"] = o.strong;
    c["seed"] = o.seed;
    c["restarts"] = o.restarts;
    c["workers"] = o.workers;
    c["caps"] = {{"max_vertices", o.caps.max_vertices},
                 {"max_occurrences", o.caps.max_occurrences},
                 {"max_host_edges", o.caps.max_host_edges},
                 {"max_kneser_pairs", o.caps.max_kneser_pairs},
                 {"max_kneser_tuples", o.caps.max_kneser_tuples},
                 {"max_exact_edges", o.caps.max_exact_edges},
                 {"max_ordering_edges", o.caps.max_ordering_edges},
                 {"max_alt_vertices", o.caps.max_alt_vertices},
                 {"i_know_this_is_huge", o.caps.huge}};
    return c;
}

void emit(const Json& doc, const Options& o, std::ostream& out)
{
    if (!o.pretty) {
        out << doc.dump(2) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : doc.items())
        width = std::max(width, key.size());
    for (const auto& [key, value] : doc.items()) {
        if (key == "config")
            continue;
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        if (text.size() > 100)
            text = text.substr(0, 97) + "...";
        out << std::left << std::setw(static_cast<int>(width) + 2) << key << text << '\n';
    }
}

Json certificate_for_coloring(const Hypergraph& target, const ChromaticResult& chi)
{
    Json cert;
    cert["kind"] = "coloring";
    cert["value"] = chromatic_value_json(chi.value);
    cert["num_colors"] = chi.coloring.num_colors;
    cert["assignment"] = chi.coloring.assignment;
    cert["coloring_kind"] = chi.coloring.kind == ColoringKind::graph ? "graph" : "hypergraph";
    cert["witness"] = {{"clique", chi.clique}, {"refuted_colors", chi.refuted_colors}, {"nodes", chi.nodes}};
    cert["graph"] = hypergraph_to_json(target);
    return cert;
}

// ---------------------------------------------------------------------------
// Verbs

Json do_compute(const Options& o)
{
    static const std::set<std::string> quantities = {"chi", "alpha", "beta", "ex", "ex-alt", "ex-salt",
                                                     "alt-sigma", "salt-sigma", "certificate"};
    if (!quantities.count(o.quantity))
        throw InvalidArgument("unknown quantity '" + o.quantity + "'");
    Instance inst = resolve_instance(o);
    Json doc;
    doc["config"] = config_json("compute", o, inst.echo);
    SolverLimits limits{o.caps.max_vertices};
    const std::string& q = o.quantity;

    if (q == "chi") {
        Hypergraph target;
        if (o.as_graph) {
            target = representation_of(inst, o);
        } else {
            target = kneser_power(representation_of(inst, o), o.r, kneser_options(o)).result;
        }
        bool graph = target.is_graph() && !target.has_parallel_edges();
        auto chi = graph ? chromatic_number_graph(target, limits) : chromatic_number_hypergraph(target, limits);
        doc["chi"] = chromatic_value_json(chi.value);
        doc["mode"] = "exact";
        doc["target"] = {{"vertices", target.num_vertices()}, {"edges", target.num_edges()}};
        doc["certificate"] = certificate_for_coloring(target, chi);
    } else if (q == "alpha" || q == "beta") {
        Hypergraph rep = representation_of(inst, o);
        Json cert;
        if (q == "alpha") {
            auto a = independence_number(rep, limits);
            doc["alpha"] = a.value;
            cert = {{"kind", "independent_set"}, {"value", a.value}, {"witness", a.witness}};
        } else {
            auto b = covering_number(rep, limits);
            doc["beta"] = b.value;
            cert = {{"kind", "cover"}, {"value", b.value}, {"witness", b.witness}};
        }
        doc["mode"] = "exact";
        cert["hypergraph"] = hypergraph_to_json(rep);
        doc["certificate"] = cert;
    } else if (q == "ex" || q == "ex-alt" || q == "ex-salt") {
        const Hypergraph& host = require_host(inst);
        TuranReport report;
        if (q == "ex") {
            if (o.mode != "exact" && o.mode != "heuristic")
                throw InvalidArgument("--mode must be exact or heuristic");
            report = turan_number(host, *inst.family, turan_options(o), o.mode == "heuristic");
        } else if (!o.ordering.empty()) {
            report = ex_alt_sigma(host, *inst.family, LinearOrdering(parse_ordering(o.ordering)), q == "ex-salt",
                                  turan_options(o));
        } else {
            OrderingSearch search;
            if (o.mode == "exact")
                search.mode = BoundMode::exact;
            else if (o.mode == "heuristic")
                search.mode = BoundMode::upper_bound;
            else
                throw InvalidArgument("--mode must be exact or heuristic");
            search.seed = o.seed;
            search.restarts = o.restarts;
            search.workers = o.workers;
            report = ex_alt_min(host, *inst.family, q == "ex-salt", search, turan_options(o));
        }
        doc[q] = report.value;
        doc["mode"] = to_string(report.mode);
        Json cert = turan_report_json(report);
        cert["kind"] = "turan";
        cert["quantity"] = q;
        if (q != "ex" && !o.ordering.empty())
            cert["fixed_ordering"] = true;
        cert["host"] = hypergraph_to_json(host);
        cert["family"] = pattern_family_json(*inst.family);
        doc["certificate"] = cert;
    } else if (q == "alt-sigma" || q == "salt-sigma") {
        Hypergraph rep = representation_of(inst, o);
        LinearOrdering sigma = o.ordering.empty() ? LinearOrdering::identity(rep.num_vertices())
                                                  : LinearOrdering(parse_ordering(o.ordering));
        AltermaticCertificate cert = altermatic_certificate(rep, sigma, o.level, q == "salt-sigma", alt_limits(o));
        doc[q] = cert.alternation;
        doc["mode"] = "exact";
        Json c = altermatic_json(cert);
        c["kind"] = "altermatic";
        doc["certificate"] = c;
    } else {
        Hypergraph rep = representation_of(inst, o);
        AltermaticCertificate cert =
            o.ordering.empty()
                ? best_altermatic_certificate(rep, o.level, o.strong, alt_limits(o))
                : altermatic_certificate(rep, LinearOrdering(parse_ordering(o.ordering)), o.level, o.strong,
                                         alt_limits(o));
        doc["certificate_value"] = cert.value;
        doc["alternation"] = cert.alternation;
        doc["mode"] = o.ordering.empty() ? "best-over-orderings" : "fixed-ordering";
        doc["bound"] = "lower bound for chi(KG(rep))";
        Json c = altermatic_json(cert);
        c["kind"] = "altermatic";
        doc["certificate"] = c;
    }
    return doc;
}

bool verify_coloring_doc(const Json& cert, std::string& why)
{
    Hypergraph graph = hypergraph_from_json(cert.at("graph"));
    const Json& value = cert.at("value");
    if (value.is_string()) {
        if (value.get<std::string>() != "unbounded") {
            why = "value must be an integer or \"unbounded\"";
            return false;
        }
        bool singleton = graph.num_edges() > 0 && graph.min_edge_size() == 1;
        if (!singleton)
            why = "claimed unbounded but no hyperedge is a singleton";
        return singleton;
    }
    ColoringCertificate c = coloring_from_json(cert);
    if (!value.is_number_unsigned() || value.get<std::size_t>() != c.num_colors) {
        why = "value does not match num_colors";
        return false;
    }
    if (!validate_coloring(graph, c)) {
        why = "colouring is not proper";
        return false;
    }
    if (cert.contains("witness") && cert.at("witness").contains("clique")) {
        auto clique = cert.at("witness").at("clique").get<std::vector<VertexId>>();
        std::set<std::vector<VertexId>> edges(graph.edges().begin(), graph.edges().end());
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                std::vector<VertexId> e{std::min(clique[a], clique[b]), std::max(clique[a], clique[b])};
                if (!edges.count(e)) {
                    why = "clique witness is not a clique";
                    return false;
                }
            }
    }
    return true;
}

bool verify_turan_doc(const Json& cert, std::string& why)
{
    Hypergraph host = hypergraph_from_json(cert.at("host"));
    PatternFamily family = pattern_family_from_json(cert.at("family"));
    TuranReport report = turan_report_from_json(cert);
    std::string quantity = cert.value("quantity", std::string("ex"));
    if (quantity == "ex") {
        if (!validate_turan_witness(host, family, report)) {
            why = "witness edge set is not family-free or has the wrong size";
            return false;
        }
        if (report.mode == BoundMode::exact && host.num_edges() <= 24) {
            auto alpha = independence_number(pattern_hypergraph(host, family));
            if (alpha.value != report.value) {
                why = "value is not maximum: alpha of the pattern hypergraph is " + std::to_string(alpha.value);
                return false;
            }
        }
        return true;
    }
    bool strong = quantity == "ex-salt";
    if (quantity != "ex-alt" && !strong) {
        why = "unknown quantity '" + quantity + "'";
        return false;
    }
    if (!validate_alternating_witness(host, family, report, strong)) {
        why = "alternating colouring witness is invalid";
        return false;
    }
    auto again = ex_alt_sigma(host, family, report.coloring->ordering, strong);
    if (again.value != report.value) {
        why = "the recorded ordering gives " + std::to_string(again.value) + ", not the claimed value";
        return false;
    }
    return true;
}

Json do_verify(const Options& o)
{
    Json doc = read_json_file(o.cert_file);
    Json cert = doc.is_object() && doc.contains("certificate") ? doc.at("certificate") : doc;
    if (!cert.is_object() || !cert.contains("kind"))
        throw InvalidArgument("certificate has no 'kind'");
    std::string kind = cert.at("kind").get<std::string>();
    bool ok = false;
    std::string why;
    try {
        if (kind == "coloring") {
            ok = verify_coloring_doc(cert, why);
        } else if (kind == "turan" || kind == "alternating") {
            ok = verify_turan_doc(cert, why);
        } else if (kind == "altermatic") {
            ok = verify_altermatic(altermatic_from_json(cert));
            if (!ok)
                why = "altermatic certificate does not re-check";
        } else {
            throw InvalidArgument("unknown certificate kind '" + kind + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed certificate: ") + e.what());
    } catch (const InvalidArgument& e) {
        // Structurally invalid content (bad ids, bad signs) is a failed verification.
        ok = false;
        why = e.what();
    }
    Json out;
    out["config"] = config_json("verify", o, Json(nullptr));
    out["config"]["certificate_file"] = o.cert_file;
    out["kind"] = kind;
    out["valid"] = ok;
    if (!ok)
        out["reason"] = why;
    return out;
}

Json do_build(const Options& o)
{
    Instance inst = resolve_instance(o);
    Json doc;
    doc["config"] = config_json("build", o, inst.echo);
    if (inst.host)
        doc["host"] = {{"vertices", inst.host->num_vertices()}, {"edges", inst.host->num_edges()}};
    Hypergraph rep = representation_of(inst, o);
    auto kg = kneser_power(rep, o.r, kneser_options(o));
    doc["representation"] = hypergraph_to_json(rep);
    doc["kneser"] = {{"r", o.r}, {"vertices", kg.result.num_vertices()}, {"edges", kg.result.num_edges()}};
    if (inst.named && o.r == 2) {
        Hypergraph direct = direct_named_graph(*inst.named, inst.params);
        doc["direct"] = {{"vertices", direct.num_vertices()}, {"edges", direct.num_edges()}};
        if (kg.result.num_vertices() <= 16) {
            auto phi = find_isomorphism(kg.result, direct);
            doc["isomorphic_to_direct"] = phi.has_value();
            if (phi)
                doc["bijection"] = *phi;
        } else {
            doc["isomorphic_to_direct"] = nullptr;
        }
    }
    doc["result"] = hypergraph_to_json(kg.result);
    return doc;
}

std::string do_export(const Options& o)
{
    Instance inst = resolve_instance(o);
    std::string text;
    if (o.what == "occurrences") {
        if (o.format != "jsonl" && o.format != "json")
            throw InvalidArgument("occurrences export only supports jsonl");
        const Hypergraph& host = require_host(inst);
        text = occurrences_json_lines(enumerate_occurrences(host, *inst.family, pattern_options(o)));
    } else {
        Hypergraph target;
        if (o.what == "host")
            target = require_host(inst);
        else if (o.what == "rep")
            target = representation_of(inst, o);
        else if (o.what == "kg")
            target = kneser_power(representation_of(inst, o), o.r, kneser_options(o)).result;
        else
            throw InvalidArgument("--what must be host, rep, kg or occurrences");
        if (o.format == "json")
            text = canonical_hypergraph_text(target);
        else if (o.format == "dimacs")
            text = to_dimacs(target, {"kgturan export " + o.what + " r=" + std::to_string(o.r)});
        else
            throw InvalidArgument("--format must be json or dimacs");
    }
    return text;
}

void add_instance_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--family", o.family, "named Kneser family: kneser, schrijver, circular, generalized, permutation");
    cmd->add_option("--n", o.n, "n parameter");
    cmd->add_option("--k", o.k, "k parameter");
    cmd->add_option("--d", o.d, "d parameter (circular)");
    cmd->add_option("--s", o.s, "s parameter (generalized, complete_uniform host)");
    cmd->add_option("--m", o.m, "m parameter (permutation, complete_bipartite host)");
    cmd->add_option("--perm-r", o.perm_r, "r parameter of the permutation graph S_r(m,n)");
    cmd->add_option("--host", o.host, "host family: cycle, path, complete, complete_bipartite, matching, "
                                      "complete_uniform, star");
    cmd->add_option("--mult", o.mult, "multiplicity of every host edge");
    cmd->add_option("--pattern", o.pattern, "pattern family kind");
    cmd->add_option("--len", o.len, "pattern size parameter");
    cmd->add_option("--pattern-s", o.pattern_s, "second pattern parameter");
    cmd->add_option("--family-file", o.family_file, "JSON array of pattern hypergraphs");
    cmd->add_option("--input", o.input, "JSON hypergraph or {\"host\", \"family\"} document");
}

void add_cap_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--max-vertices", o.caps.max_vertices, "solver vertex cap");
    cmd->add_option("--max-occurrences", o.caps.max_occurrences, "occurrence cap");
    cmd->add_option("--max-host-edges", o.caps.max_host_edges, "host edge cap for occurrence search");
    cmd->add_option("--max-kneser-pairs", o.caps.max_kneser_pairs, "representation edge cap for r = 2");
    cmd->add_option("--max-kneser-tuples", o.caps.max_kneser_tuples, "representation edge cap for r >= 3");
    cmd->add_option("--max-exact-edges", o.caps.max_exact_edges, "host edge cap for exact Turan searches");
    cmd->add_option("--max-ordering-edges", o.caps.max_ordering_edges, "ground set cap for ordering scans");
    cmd->add_option("--max-alt-vertices", o.caps.max_alt_vertices, "vertex cap for sign-vector searches");
    cmd->add_flag("--i-know-this-is-huge", o.caps.huge, "allow caps above their defaults");
}

void add_run_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--r", o.r, "uniformity of KG^r");
    cmd->add_option("--i", o.level, "alternation level i");
    cmd->add_option("--ordering", o.ordering, "ordering as a comma list or a JSON file");
    cmd->add_option("--mode", o.mode, "exact or heuristic");
    cmd->add_option("--seed", o.seed, "seed for heuristic orderings");
    cmd->add_option("--restarts", o.restarts, "random orderings in heuristic mode");
    cmd->add_option("--workers", o.workers, "worker threads");
    cmd->add_flag("--strong", o.strong, "strong altermatic certificate (salt)");
    cmd->add_flag("--as-graph", o.as_graph, "colour the representation itself instead of its Kneser hypergraph");
    cmd->add_flag("--pretty", o.pretty, "print a table instead of JSON");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Kneser representations, generalized Turan numbers and chromatic certificates", "kgturan"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "build an instance and its Kneser hypergraph");
    add_instance_options(build, o);
    add_run_options(build, o);
    add_cap_options(build, o);

    auto* compute = app.add_subcommand("compute", "compute a quantity");
    compute->add_option("quantity", o.quantity,
                        "chi | alpha | beta | ex | ex-alt | ex-salt | alt-sigma | salt-sigma | certificate")
        ->required();
    add_instance_options(compute, o);
    add_run_options(compute, o);
    add_cap_options(compute, o);

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("file", o.cert_file, "certificate JSON")->required();
    verify->add_flag("--pretty", o.pretty, "print a table instead of JSON");

    auto* golden = app.add_subcommand("golden", "run the golden chromatic-number suite");
    golden->add_option("--group", o.groups, "restrict to groups (repeatable)");
    golden->add_option("--max-vertices", o.caps.max_vertices, "solver vertex cap");
    golden->add_flag("--i-know-this-is-huge", o.caps.huge, "allow caps above their defaults");
    golden->add_flag("--pretty", o.pretty, "print a table instead of JSON");

    auto* exp = app.add_subcommand("export", "write an instance in JSON, DIMACS or JSON lines");
    add_instance_options(exp, o);
    add_run_options(exp, o);
    add_cap_options(exp, o);
    exp->add_option("--what", o.what, "host | rep | kg | occurrences");
    exp->add_option("--format", o.format, "json | dimacs | jsonl");
    exp->add_option("--output", o.output, "output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        check_caps(o);
        if (compute->parsed()) {
            emit(do_compute(o), o, out);
        } else if (build->parsed()) {
            emit(do_build(o), o, out);
        } else if (verify->parsed()) {
            Json doc = do_verify(o);
            emit(doc, o, out);
            if (!doc.at("valid").get<bool>())
                return 1;
        } else if (golden->parsed()) {
            std::set<std::string> groups(o.groups.begin(), o.groups.end());
            GoldenReport report = run_golden_suite(groups, SolverLimits{o.caps.max_vertices});
            out << (o.pretty ? golden_report_table(report) : golden_report_json(report) + "\n");
            return report.ok() ? 0 : 1;
        } else if (exp->parsed()) {
            std::string text = do_export(o);
            if (o.output.empty())
                out << text;
            else
                write_text_file(o.output, text);
        }
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace kgturan

#include "kgturan/cli.hpp"
#include "kgturan/errors.hpp"
#include "kgturan/families.hpp"
#include "kgturan/io.hpp"
#include "kgturan/kneser.hpp"
#include "kgturan/patterns.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace kgturan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "kgturan-tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("hypergraph json round trip")
{
    Hypergraph h(4, {{0, 1}, {1, 2, 3}, {0, 1}}, {"a", "b", "c", "d"});
    auto text = canonical_hypergraph_text(h);
    CHECK(text == R"({"n":4,"labels":["a","b","c","d"],"edges":[[0,1],[1,2,3],[0,1]]})"
                  "\n");
    auto back = parse_hypergraph_text(text);
    CHECK(back == h);
    CHECK(canonical_hypergraph_text(back) == text);
    CHECK_THROWS_AS(parse_hypergraph_text(R"({"n":2,"edges":[[0,5]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_hypergraph_text("{not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_hypergraph_text(R"({"edges":[]})"), InvalidArgument);
}

TEST_CASE("dimacs")
{
    auto g = kneser_power(complete_uniform_hypergraph(5, 2), 2).result;
    auto text = to_dimacs(g, {"petersen"});
    CHECK(text.rfind("c petersen\np edge 10 15\n", 0) == 0);
    std::istringstream in(text);
    CHECK(parse_dimacs(in) == g);
    CHECK_THROWS_AS(to_dimacs(complete_uniform_hypergraph(4, 3)), InvalidArgument);
    std::istringstream bad("p edge 2 1\ne 1 3\n");
    CHECK_THROWS_AS(parse_dimacs(bad), InvalidArgument);
}

TEST_CASE("occurrence lines")
{
    auto occ = enumerate_occurrences(cycle_graph(5), PatternFamily::single(matching_graph(2)));
    auto text = occurrences_json_lines(occ);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.rfind(R"({"pattern":0,"edges":[0,2]})", 0) == 0);
}

TEST_CASE("certificate documents round trip")
{
    ColoringCertificate c{3, {0, 1, 2, 0}, ColoringKind::graph};
    auto back = coloring_from_json(coloring_json(c));
    CHECK(back.assignment == c.assignment);
    CHECK(back.num_colors == 3);
    CHECK(back.kind == ColoringKind::graph);
    CHECK(chromatic_value_json(ChromaticValue::unbounded()) == "unbounded");

    PatternFamily fam({path_graph(2), cycle_graph(3)});
    auto fam2 = pattern_family_from_json(pattern_family_json(fam));
    CHECK(fam2.patterns() == fam.patterns());
}

}

TEST_SUITE("cli") {

TEST_CASE("compute chi of KG(5,2)")
{
    auto r = cli({"compute", "chi", "--family", "kneser", "--n", "5", "--k", "2"});
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    CHECK(doc["chi"] == 3);
    CHECK(doc["config"]["verb"] == "compute");
    CHECK(doc["config"]["instance"]["family"] == "kneser");
}

TEST_CASE("compute ex of K4 with P2")
{
    auto r = cli({"compute", "ex", "--host", "complete", "--n", "4", "--pattern", "path", "--len", "2"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["ex"] == 2);
}

TEST_CASE("other quantities")
{
    auto base = std::vector<std::string>{"--host", "complete", "--n", "4", "--pattern", "path", "--len", "2"};
    auto with = [&](std::vector<std::string> head) {
        head.insert(head.end(), base.begin(), base.end());
        return cli(head);
    };
    CHECK(Json::parse(with({"compute", "ex-alt"}).out)["ex-alt"] == 2);
    CHECK(Json::parse(with({"compute", "alpha"}).out)["alpha"] == 2);
    CHECK(Json::parse(with({"compute", "beta"}).out)["beta"] == 4);
    auto salt = Json::parse(with({"compute", "ex-salt"}).out)["ex-salt"].get<int>();
    CHECK(salt >= 3);
    CHECK(salt <= 5);
    auto cert = Json::parse(cli({"compute", "certificate", "--family", "kneser", "--n", "5", "--k", "2"}).out);
    CHECK(cert["certificate_value"].get<int>() <= 3);
}

TEST_CASE("invalid input exits 2")
{
    CHECK(cli({"compute", "chi", "--family", "mycielski", "--n", "5"}).code == 2);
    CHECK(cli({"compute", "chi", "--family", "kneser", "--n", "3", "--k", "2"}).code == 2);
    CHECK(cli({"compute", "volume", "--family", "kneser", "--n", "5", "--k", "2"}).code == 2);
    auto path = temp_path("broken.json");
    std::ofstream(path) << "{ nope";
    CHECK(cli({"compute", "chi", "--input", path}).code == 2);
    CHECK(cli({"compute", "chi", "--family", "kneser", "--n", "12", "--k", "2"}).code == 2);
    CHECK(cli({"compute", "chi", "--family", "kneser", "--n", "5", "--k", "2", "--max-vertices", "100"}).code == 2);
}

TEST_CASE("certificates verify and tampering is caught")
{
    auto r = cli({"compute", "chi", "--family", "kneser", "--n", "5", "--k", "2"});
    auto doc = Json::parse(r.out);
    auto good = temp_path("good.json");
    write_text_file(good, doc.dump(2));
    auto ok = cli({"verify", good});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["valid"] == true);

    auto assignment = doc["certificate"]["assignment"];
    doc["certificate"]["assignment"][0] = doc["certificate"]["assignment"][1];
    for (std::size_t v = 0; v < assignment.size(); ++v)
        doc["certificate"]["assignment"][v] = 0;
    auto bad = temp_path("bad.json");
    write_text_file(bad, doc.dump(2));
    auto no = cli({"verify", bad});
    CHECK(no.code == 1);
    CHECK(Json::parse(no.out)["valid"] == false);

    auto turan = Json::parse(cli({"compute", "ex", "--host", "complete", "--n", "4", "--pattern", "path",
                                  "--len", "2"}).out);
    auto tf = temp_path("turan.json");
    write_text_file(tf, turan.dump());
    CHECK(cli({"verify", tf}).code == 0);
    turan["certificate"]["value"] = 3;
    write_text_file(tf, turan.dump());
    CHECK(cli({"verify", tf}).code == 1);

    auto alt = Json::parse(cli({"compute", "ex-alt", "--host", "complete", "--n", "4", "--pattern", "path",
                                "--len", "2"}).out);
    write_text_file(tf, alt.dump());
    CHECK(cli({"verify", tf}).code == 0);

    auto am = Json::parse(cli({"compute", "certificate", "--family", "schrijver", "--n", "6", "--k", "2",
                               "--strong"}).out);
    write_text_file(tf, am.dump());
    CHECK(cli({"verify", tf}).code == 0);
    am["certificate"]["value"] = am["certificate"]["value"].get<int>() + 1;
    write_text_file(tf, am.dump());
    CHECK(cli({"verify", tf}).code == 1);
}

TEST_CASE("identical argv gives identical bytes")
{
    std::vector<std::string> args{"compute", "ex-alt", "--host", "complete", "--n", "5", "--pattern", "path",
                                  "--len", "2", "--mode", "heuristic", "--seed", "7"};
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["mode"] == "upper-bound");
}

TEST_CASE("export round trip is byte identical")
{
    auto first = temp_path("rep.json");
    auto second = temp_path("rep2.json");
    REQUIRE(cli({"export", "--what", "rep", "--family", "schrijver", "--n", "7", "--k", "2", "--output", first})
                .code == 0);
    REQUIRE(cli({"export", "--what", "rep", "--input", first, "--output", second}).code == 0);
    CHECK(slurp(first) == slurp(second));
    CHECK(parse_hypergraph_text(slurp(first)).num_edges() == 14);

    auto dimacs = cli({"export", "--what", "kg", "--family", "kneser", "--n", "5", "--k", "2", "--format",
                       "dimacs"});
    CHECK(dimacs.code == 0);
    CHECK(dimacs.out.find("p edge 10 15") != std::string::npos);
    auto lines = cli({"export", "--what", "occurrences", "--host", "cycle", "--n", "5", "--pattern", "matching",
                      "--len", "2", "--format", "jsonl"});
    CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 5);
}

TEST_CASE("build and golden verbs")
{
    auto b = cli({"build", "--family", "circular", "--n", "5", "--d", "2"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out)["isomorphic_to_direct"] == true);
    auto g = cli({"golden", "--group", "kneser"});
    CHECK(g.code == 0);
    CHECK(Json::parse(g.out)["ok"] == true);
    CHECK(cli({"golden", "--group", "nope"}).code == 2);
}

}

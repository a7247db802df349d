#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ctn/cli.hpp"

using namespace ctn;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "ctn_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("bounds CSV golden output")
{
    const auto r = run({"bounds", "--l", "2..5"});
    CHECK(r.code == 0);
    CHECK(r.out == "# ctn-toolkit 1.0.0\n"
                   "# config: {\"command\":\"bounds\",\"l\":\"2..5\",\"format\":\"csv\"}\n"
                   "l, kind, value\n"
                   "2, exact, 3/4\n"
                   "3, asymptotic, sqrt(2)-1\n"
                   "4, exponent, -1/2\n"
                   "5, exponent, 0\n");
}

TEST_CASE("build report")
{
    const auto r = run({"build", "--n", "5"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["vertex_count"] == 120);
    CHECK(j["edge_count"] == 600);
    CHECK(j["status"] == "pass");
    CHECK(j["config"]["n"] == 5);
}

TEST_CASE("census flags the documented mismatch")
{
    const auto r = run({"census", "--n", "4"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["status"] == "documented-mismatch");
    CHECK(j["total"] == 162);
    CHECK(j["per_edge"]["measured"] == 9);
    CHECK(j["per_edge"]["closed_form"] == 5);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"census", "--n", "6"}).code == 2);
    CHECK(run({"search", "--n", "4", "--forbid", "4", "--method", "exact"}).code == 2);
    CHECK(run({"search", "--n", "3", "--forbid", "5"}).code == 2);
    CHECK(run({"search", "--n", "3", "--forbid", "4", "--method", "anneal"}).code == 2);
    CHECK(run({"verify", "--n", "3", "--identities", "9"}).code == 2);
    CHECK(run({"bounds", "--l", "1..3"}).code == 2);
    CHECK(run({"chi", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run({"lift-demo", "--n", "3", "--x", "1123"}).code == 2);
    const auto r = run({"census", "--n", "6"});
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help and version")
{
    CHECK(run({"--version"}).out == "ctn-toolkit 1.0.0\n");
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search writes reports that round trip through --mask")
{
    const auto path = scratch("search.json");
    const auto r = run({"search", "--n", "4", "--forbid", "6", "--seed", "3", "--budget", "500", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(slurp(path));
    CHECK(j["result"]["verified"] == true);
    CHECK(std::filesystem::exists(path.string() + ".log"));
    CHECK(slurp(path).find("elapsed") == std::string::npos);

    const auto v = run({"verify", "--n", "4", "--mask", path.string(), "--identities", "1,2,8"});
    CHECK(v.code == 0);
    const auto chi = run({"chi", "--n", "4", "--mask", path.string(), "--format", "json"});
    CHECK(chi.code == 0);
    CHECK(Json::parse(chi.out)["completed_four_cycles"]["max_per_edge"].get<int>() <= 2);
}

TEST_CASE("seeded runs are byte identical")
{
    const std::vector<std::string> args{"search", "--n", "4", "--forbid", "4", "--seed", "9", "--budget", "800",
                                        "--restarts", "3"};
    auto with_threads = args;
    with_threads.insert(with_threads.end(), {"--threads", "3"});
    const auto a = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == run(args).out);
    // thread count is not part of the report and must not change it
    auto b = Json::parse(run(with_threads).out);
    auto c = Json::parse(a.out);
    CHECK(b["subgraph"] == c["subgraph"]);
    const std::vector<std::string> ramsey{"ramsey", "--n", "4", "--colors", "3", "--forbid", "6", "--seed", "5"};
    CHECK(run(ramsey).out == run(ramsey).out);
}

TEST_CASE("verify lemma suite at n = 3")
{
    const auto r = run({"verify", "--n", "3", "--suite", "lemmas"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["status"] == "pass");
}

TEST_CASE("malformed mask files are usage errors")
{
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"n":3,"edges":[["123","123"]]})";
    CHECK(run({"chi", "--n", "3", "--mask", bad.string()}).code == 2);
    const auto wrong_n = scratch("wrong_n.json");
    std::ofstream(wrong_n) << R"({"n":4,"edges":[]})";
    CHECK(run({"verify", "--n", "3", "--mask", wrong_n.string()}).code == 2);
}

TEST_CASE("lift demo")
{
    const auto r = run({"lift-demo", "--n", "4", "--x", "id", "--i", "1", "--l", "3"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["lifted_length"] == 6);
    const auto none = run({"lift-demo", "--n", "3", "--l", "4"});
    CHECK(none.code == 0);
    CHECK(Json::parse(none.out)["lifted"].is_null());
}

TEST_CASE("ramsey with a supplied colouring")
{
    const auto path = scratch("coloring.json");
    std::ofstream(path) << "[0,0,0,0,0,0,0,0,0]";
    const auto r = run({"ramsey", "--n", "3", "--colors", "2", "--forbid", "4", "--coloring", path.string()});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["result"]["monochromatic"]["color"] == 0);
    CHECK(j["result"]["class_sizes"] == Json::parse("[9,0]"));
}

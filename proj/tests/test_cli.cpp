#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cartsym/cli.hpp"
#include "cartsym/report.hpp"

using namespace cartsym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "cartsym");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("table of dihedral:6 as csv")
{
    const auto r = cli({"table", "--group", "dihedral:6", "--n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "character,degree,dim,dbar\n"
                   "lambda:1,1,2,1\n"
                   "lambda:2,1,0,\n"
                   "lambda:3,1,2,1\n"
                   "lambda:4,1,0,\n"
                   "psi:1,2,4,1\n"
                   "psi:2,2,4,1\n");
}

TEST_CASE("dims of a cycle product")
{
    const auto r = cli({"dims", "--group", "cycleprod:(1 2 3)(4 5)", "--char", "q:3", "--n", "2"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["dbar"] == Json::array({4}));
}

TEST_CASE("obasis verdicts and exit codes")
{
    const auto yes = cli({"obasis", "--group", "dihedral:4", "--char", "psi:1"});
    CHECK(yes.code == 0);
    CHECK(Json::parse(yes.out)["verdict"] == "has-O-basis");
    const auto no = cli({"obasis", "--group", "dihedral:6", "--char", "psi:1"});
    CHECK(no.code == 0);
    CHECK(Json::parse(no.out)["verdict"] == "no-O-basis");
    const auto undecided = cli({"obasis", "--group", "dihedral:12", "--char", "psi:1", "--budget", "1"});
    CHECK(undecided.code == 3);
    CHECK(Json::parse(undecided.out)["verdict"] == "undecided");
}

TEST_CASE("budget from the environment")
{
    setenv("CARTSYM_BUDGET", "1", 1);
    const auto r = cli({"obasis", "--group", "dihedral:12", "--char", "psi:1"});
    unsetenv("CARTSYM_BUDGET");
    CHECK(r.code == 3);
}

TEST_CASE("usage errors name the production")
{
    const auto bad_group = cli({"dims", "--group", "dihedral:x", "--char", "psi:1"});
    CHECK(bad_group.code == 1);
    CHECK(bad_group.err.find("dihedral:m") != std::string::npos);
    const auto bad_char = cli({"dims", "--group", "dihedral:6", "--char", "qtuple:a"});
    CHECK(bad_char.code == 1);
    CHECK(bad_char.err.find("qtuple:INT") != std::string::npos);
    CHECK(cli({"dims", "--group", "dihedral:6"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"dims", "--group", "dihedral:6", "--char", "psi:9"}).code == 1);
    CHECK(cli({"table", "--group", "dihedral:6", "--char", "psi:1"}).code == 1);
    CHECK(cli({"dims", "--group", "dihedral:6", "--char", "all"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("text and gram output")
{
    const auto r = cli({"gram", "--group", "dihedral:4", "--char", "psi:1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1  1  1/2") != std::string::npos);
}

TEST_CASE("verify with a corrupted character file exits 2")
{
    const auto g = resolve_group("dihedral:4");
    const auto psi = resolve_character(g, parse_character_descriptor("psi:1"));
    const auto bad = psi.with_value(g.group->index_of(g.group->generators()[0]), Cyclotomic(1));
    const std::string path = "cartsym_cli_bad.json";
    {
        std::ofstream out(path);
        out << character_to_json(bad);
    }
    const auto r = cli({"verify", "--char", "file:" + path, "--format", "csv"});
    CHECK(r.code == 2);
    CHECK(r.out.find("class-function") != std::string::npos);
    // validated loading refuses it outright
    CHECK(cli({"dims", "--char", "file:" + path}).code == 1);
    const std::string good = "cartsym_cli_good.json";
    {
        std::ofstream out(good);
        out << character_to_json(psi);
    }
    CHECK(cli({"verify", "--char", "file:" + good}).code == 0);
    CHECK(cli({"dims", "--group", "dihedral:4", "--char", "file:" + good}).code == 0);
    std::remove(path.c_str());
    std::remove(good.c_str());
}

TEST_CASE("verify a single group")
{
    const auto r = cli({"verify", "--group", "dihedral:5", "--n", "3", "--level", "quick"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(Json::parse(line)["passed"] == true);
        ++count;
    }
    CHECK(count == 5); // four characters and the family report
}

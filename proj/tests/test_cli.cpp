#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowdiv/cli.hpp"
#include "chowdiv/graded_ring.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chowdiv;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path workdir() {
    fs::path p = fs::temp_directory_path() / "chowdiv-cli-tests";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string golden(const std::string& name) {
    return slurp(fs::path(CHOWDIV_GOLDEN_DIR) / name);
}

}  // namespace

TEST_CASE("ring build") {
    fs::path out = workdir() / "p3.json";
    RunResult r = run({"ring", "build", "--family", R"({"type":"proj","m":3})", "--out",
                       out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("ranks 1,1,1,1") != std::string::npos);
    GradedRingModel R = deserialize(slurp(out));
    CHECK(R.cutoff == 3);

    // malformed JSON: usage error, diagnostic on stderr
    RunResult bad = run({"ring", "build", "--family", "{oops", "--out",
                         (workdir() / "x.json").string()});
    CHECK(bad.code == 64);
    CHECK(!bad.err.empty());

    // build failure
    RunResult fail = run({"ring", "build", "--family", R"({"type":"quadric_odd","m":1})",
                          "--out", (workdir() / "y.json").string()});
    CHECK(fail.code == 65);

    // cutoff override truncates
    fs::path cut = workdir() / "p3cut.json";
    RunResult rc = run({"ring", "build", "--family", R"({"type":"proj","m":3})", "--cutoff",
                        "2", "--out", cut.string()});
    CHECK(rc.code == 0);
    CHECK(deserialize(slurp(cut)).cutoff == 2);
    RunResult rc2 = run({"ring", "build", "--family", R"({"type":"proj","m":3})", "--cutoff",
                         "9", "--out", cut.string()});
    CHECK(rc2.code == 65);
}

TEST_CASE("ring ranks") {
    RunResult r = run({"ring", "ranks", "--family",
                       R"({"type":"product","left":{"type":"proj","m":1},"right":{"type":"proj","m":1}})"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ranks 1,2,1") != std::string::npos);

    RunResult miss = run({"ring", "ranks"});
    CHECK(miss.code == 64);
    RunResult nofile = run({"ring", "ranks", "--ring", (workdir() / "absent.json").string()});
    CHECK(nofile.code == 65);
}

TEST_CASE("div check exit-code contract") {
    fs::path p4 = workdir() / "p4.json";
    REQUIRE(run({"ring", "build", "--family", R"({"type":"proj","m":4})", "--out",
                 p4.string()}).code == 0);
    fs::path q4 = workdir() / "q4.json";
    REQUIRE(run({"ring", "build", "--family", R"({"type":"quadric_even","m":4})", "--out",
                 q4.string()}).code == 0);

    CHECK(run({"div", "check", "--ring", p4.string(), "--expect", "4"}).code == 0);

    RunResult rq = run({"div", "check", "--ring", q4.string(), "--expect", "3"});
    CHECK(rq.code == 1);
    CHECK(rq.out.find("a - b") != std::string::npos);  // witness printed

    CHECK(run({"div", "check", "--ring", q4.string(), "--expect", "2"}).code == 0);
    CHECK(run({"div", "bound", "--ring", q4.string(), "--expect", "2"}).code == 0);

    // --family works in place of a ring file
    CHECK(run({"div", "bound", "--family", R"({"type":"proj","m":4})", "--expect", "4"}).code ==
          0);
    CHECK(run({"div", "bound", "--ring", q4.string(), "--family", "x"}).code == 64);

    // scan limit and height flags
    RunResult lim = run({"div", "bound", "--ring", q4.string(), "--max-degree", "2",
                         "--height", "1", "--expect", "2"});
    CHECK(lim.code == 0);
    CHECK(lim.out.find("certified-up-to 2") != std::string::npos);
    CHECK(run({"div", "bound", "--ring", q4.string(), "--max-degree", "9"}).code == 65);
}

TEST_CASE("certify command") {
    RunResult r = run({"certify", "--space", "OG,2,9", "--axioms", "paper"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bound=2") != std::string::npos);
    CHECK(r.out.find("odd-quadric m=3") != std::string::npos);

    RunResult sg = run({"certify", "--space", "SGmax,4"});
    CHECK(sg.out.find("bound=3") != std::string::npos);

    RunResult q8 = run({"certify", "--family", R"({"type":"quadric_even","m":8})", "--axioms",
                        "checked"});
    CHECK(q8.code == 0);
    CHECK(q8.out.find("bound=4") != std::string::npos);
    CHECK(q8.out.find("axiom sets disagree") != std::string::npos);
    CHECK(q8.out.find("paper=7") != std::string::npos);

    RunResult badax = run({"certify", "--space", "P,4", "--axioms", "wild"});
    CHECK(badax.code == 65);
}

TEST_CASE("crossval command") {
    RunResult r = run({"crossval", "--family", R"({"type":"quadric_even","m":4})"});
    CHECK(r.code == 0);
    CHECK(r.out.find("paper=conflict") != std::string::npos);
    CHECK(r.out.find("discrepancy: yes") != std::string::npos);

    RunResult j = run({"crossval", "--space", "G,2,5", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"agree_paper\": \"equal\"") != std::string::npos);
}

TEST_CASE("table matches the committed golden file") {
    RunResult r = run({"table", "--rows", "acceptance", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("table_acceptance.tsv"));

    // contested even-quadric row
    RunResult q6 = run({"table", "--rows", "Q,6", "--format", "tsv"});
    CHECK(q6.out.find("conflict") != std::string::npos);
    CHECK(q6.out.find("yes") != std::string::npos);

    // G(1,3): s = 1, checker confirms on P^1 x P^1
    RunResult g13 = run({"table", "--rows", "G,1,3", "--format", "tsv"});
    CHECK(g13.out.find("G(1,3)\t1\t1\t1\t1\texact\tequal\tequal\tno") != std::string::npos);

    RunResult badrow = run({"table", "--rows", "OG,4,9"});
    CHECK(badrow.code == 65);
}

TEST_CASE("split verdict and unit-factor commands") {
    RunResult s1 = run({"split", "verdict", "--space", "G,2,5", "--rank", "2"});
    CHECK(s1.code == 0);
    CHECK(s1.out.find("verdict: splits") != std::string::npos);

    RunResult s2 = run({"split", "verdict", "--space", "G,2,5", "--rank", "3"});
    CHECK(s2.code == 0);
    CHECK(s2.out.find("verdict: unknown") != std::string::npos);

    // splitting type input: rank is its length, normalization reported
    RunResult s3 = run({"split", "verdict", "--space", "G,2,5", "--type", "2,2"});
    CHECK(s3.code == 0);
    CHECK(s3.out.find("normalized type: 0 0") != std::string::npos);
    CHECK(s3.out.find("twist -2") != std::string::npos);
    CHECK(s3.out.find("verdict: splits") != std::string::npos);
    CHECK(run({"split", "verdict", "--space", "G,2,5", "--type", "2,x"}).code == 64);
    CHECK(run({"split", "verdict", "--space", "G,2,5", "--rank", "2", "--type", "1,1"}).code ==
          64);

    fs::path pv = workdir() / "pv.json";
    REQUIRE(run({"ring", "build", "--family",
                 R"({"type":"proj_bundle","base":{"type":"proj","m":2},"rank":2,"chern":[[2],[1]]})",
                 "--out", pv.string()})
                .code == 0);
    RunResult uf = run({"unit-factor", "--ring", pv.string(), "--k", "1", "--l", "1",
                        "--height", "1"});
    CHECK(uf.code == 0);
    CHECK(uf.out.find("2 nontrivial factorizations") != std::string::npos);
    CHECK(uf.out.find("h + u") != std::string::npos);

    RunResult guard = run({"unit-factor", "--ring", pv.string(), "--k", "1", "--l", "1",
                           "--height", "1", "--guard", "2"});
    CHECK(guard.code == 65);
    CHECK(guard.err.find("guard") != std::string::npos);
}

TEST_CASE("machine outputs are byte-stable") {
    std::vector<std::vector<std::string>> cmds = {
        {"table", "--rows", "P,4;Q,6;G,2,5", "--format", "tsv"},
        {"table", "--rows", "P,4;Q,6;G,2,5", "--format", "json"},
        {"div", "check", "--family", R"({"type":"quadric_even","m":6})", "--format", "json"},
        {"certify", "--space", "SG,2,9", "--format", "json"},
        {"crossval", "--space", "OG,2,9", "--format", "json"},
        {"unit-factor", "--family",
         R"({"type":"proj_bundle","base":{"type":"proj","m":2},"rank":2,"chern":[[2],[1]]})",
         "--k", "1", "--l", "1", "--height", "1", "--format", "json"},
    };
    for (const auto& cmd : cmds) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }

    // two builds of the same family give byte-identical ring files
    fs::path f1 = workdir() / "d1.json", f2 = workdir() / "d2.json";
    REQUIRE(run({"ring", "build", "--family", R"({"type":"quadric_even","m":6})", "--out",
                 f1.string()}).code == 0);
    REQUIRE(run({"ring", "build", "--family", R"({"type":"quadric_even","m":6})", "--out",
                 f2.string()}).code == 0);
    CHECK(slurp(f1) == slurp(f2));
}

TEST_CASE("machine output schemas") {
    using nlohmann::json;

    RunResult div = run({"div", "check", "--family", R"({"type":"quadric_even","m":4})",
                         "--format", "json"});
    json jd = json::parse(div.out);
    CHECK(jd["bound"] == 2);
    CHECK(jd["status"] == "refuted-at");
    CHECK(jd["at"] == 3);
    CHECK(jd["exact"] == true);
    CHECK(jd["witness"]["y"]["text"] == "a - b");
    CHECK(jd["witness"]["y"]["coeffs"] == json::array({"1", "-1"}));
    bool saw_pair = false;
    for (const auto& p : jd["pairs"])
        if (p["i"] == 1 && p["j"] == 2) {
            saw_pair = true;
            CHECK(p["status"] == "refuted");
        }
    CHECK(saw_pair);

    RunResult cert = run({"certify", "--space", "Q,6", "--axioms", "checked", "--format",
                          "json"});
    json jc = json::parse(cert.out);
    CHECK(jc["axioms"] == "checked");
    CHECK(jc["bound"] == 2);
    CHECK(jc["bound_paper"] == 3);
    CHECK(jc["axiom_sets_disagree"] == true);
    CHECK(jc["tree"]["rule"] == "vmrt");

    RunResult sv = run({"split", "verdict", "--space", "SG,2,9", "--rank", "4", "--format",
                        "json"});
    json js = json::parse(sv.out);
    CHECK(js["status"] == "splits");
    CHECK(js["bound"] == 4);
    CHECK(js["provenance"]["rule"] == "proj-bundle");

    RunResult tab = run({"table", "--rows", "Q,6", "--format", "json"});
    json jt = json::parse(tab.out);
    REQUIRE(jt.is_array());
    CHECK(jt[0]["space"] == "Q^6");
    CHECK(jt[0]["s_paper"] == 3);
    CHECK(jt[0]["cert_checked"] == 2);
    CHECK(jt[0]["discrepancy"] == true);
    CHECK(jt[0]["refuted_at"] == 3);
}

TEST_CASE("usage errors") {
    CHECK(run({"nonsense"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"div", "check"}).code == 64);  // neither --ring nor --family
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("table") != std::string::npos);
}

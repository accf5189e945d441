#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LRCARTON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(LRCARTON_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("count") {
    auto r = run_cli("count --rect 2x3 --lambda 2 --mu 2,1 --nu 1");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");

    r = run_cli("count --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2");
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    r = run_cli("count --rect 3x3 --lambda 2,1 --mu 2,1 --nu 2,1");
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    r = run_cli("count --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2 --verbose");
    CHECK(r.status == 0);
    CHECK(r.out == "2\nballot: 2\nrectification: 2\n");

    // empty shape spelled as 0
    r = run_cli("count --rect 2x2 --lambda 2 --mu 0 --nu 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("growth renders the worked diagram") {
    auto r = run_cli(
        "growth --left \"0;1;2;3;3,1\" "
        "--top \"3,1;4,1;4,2;4,3;4,3,1;5,3,1;5,3,2\"");
    CHECK(r.status == 0);
    CHECK(r.out == golden("table1.txt"));

    // a single-partition left chain echoes the top chain
    r = run_cli("growth --left \"2,1\" --top \"2,1;2,2;3,2\"");
    CHECK(r.status == 0);
    CHECK(r.out == "(2,1)  (2,2)  (3,2)\n");

    // the layered-example pair: the bottom row reads the rectified chain and
    // the right column the vacating record
    r = run_cli("growth --left \"0;1;2;2,1\" --top \"2,1;2,2;3,2;4,2;4,2,1\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "(2,1)  (2,2)  (3,2)  (4,2)  (4,2,1)\n"
          "(2)    (2,1)  (3,1)  (4,1)  (4,1,1)\n"
          "(1)    (1,1)  (2,1)  (3,1)  (3,1,1)\n"
          "∅      (1)    (2)    (3)    (3,1)\n");

    // mismatched junction is a usage error
    r = run_cli("growth --left \"0;1\" --top \"2;2,1\"");
    CHECK(r.status == 1);
}

TEST_CASE("enumerate text output") {
    auto r = run_cli("enumerate --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2");
    CHECK(r.status == 0);
    CHECK(r.out == golden("section3_enumerate.txt"));

    r = run_cli("enumerate --rect 2x3 --lambda 2 --mu 2,1 --nu 1");
    CHECK(r.status == 0);
    CHECK(r.out == golden("figure2_enumerate.txt"));

    // parallel extension produces the same bytes
    r = run_cli("enumerate --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2 --parallel");
    CHECK(r.status == 0);
    CHECK(r.out == golden("section3_enumerate.txt"));

    // size mismatch: no cartons, zero footer
    r = run_cli("enumerate --rect 2x3 --lambda 2 --mu 2 --nu 1");
    CHECK(r.status == 0);
    CHECK(r.out == "count: 0\n");
}

TEST_CASE("enumerate json output") {
    auto r = run_cli("enumerate --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2 --format json");
    CHECK(r.status == 0);
    std::stringstream ss(r.out);
    std::string line;
    std::vector<nlohmann::json> docs;
    while (std::getline(ss, line)) docs.push_back(nlohmann::json::parse(line));
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].at("faces").size() == 6);
    CHECK(docs[1].at("geometry").at("a") == 3);
    CHECK(docs[2] == nlohmann::json{{"count", 2}});
}

TEST_CASE("verify") {
    auto r = run_cli("verify --rect 2x2");
    CHECK(r.status == 0);
    CHECK(r.out.find("verify: all checks passed") != std::string::npos);

    r = run_cli("verify --rect 2x3 --max-size 4 --parallel");
    CHECK(r.status == 0);
}

TEST_CASE("symmetry") {
    auto r = run_cli("symmetry --rect 2x3 --lambda 2 --mu 2,1 --nu 1 --sigma mu,lambda,nu");
    CHECK(r.status == 0);
    CHECK(r.out.find("carton 1 -> carton 1") != std::string::npos);
    CHECK(r.out.find("symmetry: bijection verified") != std::string::npos);

    r = run_cli("symmetry --rect 3x4 --lambda 2,1 --mu 3,1 --nu 3,2 --sigma nu,lambda,mu");
    CHECK(r.status == 0);
    CHECK(r.out.find("source cartons: 2, target cartons: 2") != std::string::npos);

    r = run_cli("symmetry --rect 2x3 --lambda 2 --mu 2,1 --nu 1 --sigma lambda,lambda,nu");
    CHECK(r.status == 1);
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("count --rect 2x3 --lambda 2 --mu 2,1").status == 1);
    CHECK(run_cli("count --rect nonsense --lambda 2 --mu 2,1 --nu 1").status == 1);
    CHECK(run_cli("count --rect 2x3 --lambda 9 --mu 2,1 --nu 1").status == 1);
    CHECK(run_cli("enumerate --rect 2x3 --lambda 2 --mu 2,1 --nu 1 --format yaml").status == 1);
}

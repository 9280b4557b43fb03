#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lly/graph6.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = lly::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "lly_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("gen emits graph6") {
  const auto r = run({"gen", "petersen"});
  CHECK(r.code == 0);
  CHECK(r.out == "IheA@GUAo\n");
  CHECK(run({"gen", "complete", "4"}).out == "C~\n");
  // both are pentagons, relabeled
  for (const char* flag : {"--line-graph", "--complement"}) {
    const auto g = lly::graph6_decode(run({"gen", "cycle", "5", flag}).out.substr(0, 4));
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    for (lly::Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
  }
}

TEST_CASE("gen writes to a file") {
  const auto path = temp_dir() + "/j.g6";
  CHECK(run({"gen", "johnson", "6", "3", "-o", path}).code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line.size() == 33);
  CHECK(run({"analyze", path}).out.find("\"order\":20") != std::string::npos);
}

TEST_CASE("pipelines through stdin") {
  const auto j = run({"gen", "johnson", "6", "3"});
  const auto s = run({"sharpness", "-"}, j.out);
  CHECK(s.code == 0);
  CHECK(s.out == "sharp=true lambda1=2/3 kappa_min=2/3 mode=exact_certified family=johnson(6,3)\n");

  const auto p = run({"gen", "petersen"});
  CHECK(run({"curvature", "-", "--edge", "0", "1"}, p.out).out == "0/1\n");
  CHECK(run({"curvature", "-", "--edge", "0", "1", "--format", "json"}, p.out).out.find("\"kappa\":\"0/1\"") !=
        std::string::npos);
  const auto csv = run({"--format", "csv", "curvature", "-"}, p.out);
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "graph,u,v,numerator,denominator");
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 16);
}

TEST_CASE("several graphs per input keep their order") {
  const std::string input = run({"gen", "petersen"}).out + run({"gen", "icosahedron"}).out;
  const auto r = run({"sharpness", "-", "--format", "json", "--threads", "2"}, input);
  CHECK(r.code == 0);
  const auto first = r.out.substr(0, r.out.find('\n'));
  CHECK(first.find("\"kappa_min\":\"0/1\"") != std::string::npos);
  CHECK(r.out.find("\"kappa_min\":\"2/5\"") > r.out.find('\n'));
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::string input = run({"gen", "icosahedron"}).out + run({"gen", "shrikhande"}).out;
  for (const char* cmd : {"analyze", "curvature", "spectrum", "sharpness"}) {
    CAPTURE(cmd);
    const auto a = run({cmd, "-", "--format", "json", "--threads", "1"}, input);
    const auto b = run({cmd, "-", "--format", "json", "--threads", "3"}, input);
    const auto c = run({cmd, "-", "--format", "json", "--threads", "1"}, input);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("spectrum text and json") {
  const auto ico = run({"gen", "icosahedron"}).out;
  const auto t = run({"spectrum", "-"}, ico);
  CHECK(t.out.find("lambda1 0.5527864045 = 1/1-1/5*sqrt(5)") != std::string::npos);
  const auto j = run({"spectrum", "-", "--format", "json"}, ico);
  CHECK(j.out.find("\"distance_regular\":{\"intersection_array\"") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
  CHECK(run({"gen", "johnson", "6"}).code == 2);
  CHECK(run({"gen", "johnson", "3", "5"}).code == 2);
  CHECK(run({"sharpness"}).code == 2);
  CHECK(run({"sharpness", "-", "--format", "xml"}, "C~\n").code == 2);
  CHECK(run({"sharpness", "-", "--threads", "0"}, "C~\n").code == 2);
  CHECK(run({"sharpness", "-"}, "not graph6!\n").code == 2);
  CHECK(run({"sharpness", "-"}, "").code == 2);
  CHECK(run({"analyze", "/nonexistent/file.g6"}).code == 2);
  CHECK(run({"curvature", "-", "--edge", "0", "2"}, "IheA@GUAo\n").code == 2);
  CHECK(run({"curvature", "-", "--edge", "0", "99"}, "IheA@GUAo\n").code == 2);
  CHECK(run({"curvature", "-"}, "C?\n").code == 2);  // disconnected
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "tables", "--caps", "cp=x"}).code == 2);
  CHECK(run({"verify", "tables", "--caps", "bogus=3"}).code == 2);
  CHECK(run({"verify", "lemmas", "/nonexistent/dir"}).code == 2);
  const auto r = run({"gen", "nonsense"});
  CHECK(r.out.empty());
  CHECK(r.err.find("unknown family") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sharpness") != std::string::npos);
}

TEST_CASE("thread count from the environment") {
  ::setenv("LLY_THREADS", "zero", 1);
  CHECK(run({"sharpness", "-"}, "C~\n").code == 2);
  ::setenv("LLY_THREADS", "2", 1);
  CHECK(run({"sharpness", "-"}, "C~\n").code == 0);
  ::unsetenv("LLY_THREADS");
}

TEST_CASE("verify tables with small caps") {
  const auto r = run({"verify", "tables", "--caps", "cp=3,hamming2=3,triangular=5,hamming_vertices=16,"
                                                   "johnson_vertices=10,demi_cube=4,doob=3",
                      "--threads", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Table 1") != std::string::npos);
  CHECK(r.out.find("0 mismatched") != std::string::npos);
  const auto one = run({"verify", "tables", "--table", "1", "--format", "csv"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\n2,") == std::string::npos);
}

TEST_CASE("verify tables fails on a wrong extra graph") {
  const auto dir = temp_dir();
  CHECK(run({"gen", "petersen", "-o", dir + "/fake.g6"}).code == 0);
  const auto r = run({"verify", "tables", "--table", "2", "--caps", "hamming_vertices=4,johnson_vertices=3,demi_cube=2",
                      "--graph", "conway_smith=" + dir + "/fake.g6"});
  CHECK(r.code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
  CHECK(run({"verify", "tables", "--graph", "other=" + dir + "/fake.g6"}).code == 2);
}

TEST_CASE("verify classify and lemmas") {
  const auto dir = temp_dir();
  std::string graphs = run({"gen", "icosahedron"}).out + run({"gen", "johnson", "7", "3"}).out +
                       run({"gen", "petersen", "--line-graph"}).out;
  {
    std::ofstream f(dir + "/mix.g6");
    f << graphs;
  }
  const auto c = run({"verify", "classify", dir + "/mix.g6", "--format", "json"});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"member\":\"icosahedron\"") != std::string::npos);
  CHECK(c.out.find("\"sharp_family\":\"johnson(7,3)\"") != std::string::npos);

  run({"gen", "dodecahedron", "-o", dir + "/host.g6"});
  const auto l = run({"verify", "lemmas", dir});
  CHECK(l.code == 0);
  CHECK(l.out.find("PASS line graph sign host.g6:0") != std::string::npos);
  CHECK(l.out.find("FAIL") == std::string::npos);
}

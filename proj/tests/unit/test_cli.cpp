#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CORELATTICE_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("enumerate emits records and a footer") {
  const Run r = run("enumerate 3 4");
  CHECK(r.code == 0);
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 6);
  CHECK(recs.back()["count"] == 5);
  CHECK(recs.back()["average_size"] == "2");
  CHECK(recs.front().contains("co_skew_length"));
  CHECK(lines(run("enumerate 2 3").out).size() == 3);
}

TEST_CASE("summary and csv") {
  const Run s = run("--summary enumerate 3 4");
  CHECK(s.code == 0);
  REQUIRE(lines(s.out).size() == 1);
  CHECK(run("enumerate 3 4 --summary").out == s.out);
  const Run c = run("--format csv enumerate 2 3");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("charges,z,partition,size,length,skew_length,co_skew_length\n", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 3);
}

TEST_CASE("output is deterministic across thread settings") {
  CHECK(run("enumerate 5 12").out == run("--serial enumerate 5 12").out);
  CHECK(run("--threads 1 poly 4 7").out == run("poly 4 7").out);
}

TEST_CASE("exit codes") {
  CHECK(run("enumerate 4 6").code == 2);
  CHECK(run("enumerate 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--format xml enumerate 3 4").code == 2);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("--cap 1 enumerate 3 4").code == 3);
  CHECK(run("enumerate 3 4", "CORELATTICE_CAP=4").code == 3);
  CHECK(run("enumerate 3 4", "CORELATTICE_CAP=5").code == 0);
  CHECK(run("enumerate 3 4", "CORELATTICE_CAP=abc").code == 2);
  CHECK(run("--cap 5 enumerate 3 4", "CORELATTICE_CAP=1").code == 0);
  CHECK(run("--help").code == 0);
}

TEST_CASE("poly") {
  const auto j = nlohmann::json::parse(run("poly 3 4").out);
  CHECK(j["catalan"] == "5");
  CHECK(j["cat_q_text"] == "1 + q^2 + q^3 + q^4 + q^6");
  CHECK(j["symmetric"] == true);
  CHECK(nlohmann::json::parse(run("poly 3 11").out)["catalan"] == "26");
  const auto one = nlohmann::json::parse(run("poly 5 1").out);
  CHECK(one["cat_q_text"] == "1");
  CHECK(one["cat_qt_text"] == "1");
}

TEST_CASE("verify") {
  const Run a = run("verify anderson --a-max 5 --b-max 16");
  CHECK(a.code == 0);
  for (const auto& rec : lines(a.out)) CHECK(rec["passed"] == true);
  CHECK(run("verify sizmaj2 --n-max 7").code == 0);
  CHECK(run("verify qt3 --b-max 20").code == 0);
  const auto s = lines(run("--summary verify unimodality --a-max 3 --b-max 10").out);
  REQUIRE(s.size() == 1);
  CHECK(s.front()["passed"] == true);
  CHECK(run("verify age-search").code == 0);
}

TEST_CASE("perm, ehrhart, search-age") {
  const auto p = nlohmann::json::parse(run("perm --permutation 3,2,1").out);
  CHECK(p["maj"] == 3);
  CHECK(p["siz"] == 4);
  CHECK(run("perm --permutation 1,1").code == 2);
  CHECK(run("perm 3").code == 0);
  CHECK(run("perm 12").code == 3);
  CHECK(run("ehrhart --a 3").code == 0);
  CHECK(nlohmann::json::parse(run("ehrhart --polytope triangle").out)["passed"] == true);
  CHECK(run("ehrhart --polytope dodecahedron").code == 2);
  CHECK(run("ehrhart").code == 2);
  const auto age = nlohmann::json::parse(run("search-age 3 4 7 10").out);
  CHECK(age["success"] == true);
  CHECK(run("search-age 3 4 5").code == 0);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.jsonl";
  CHECK(run("-o " + path + " enumerate 2 3").code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  fclose(f);
  std::remove(path.c_str());
  CHECK(run("-o /nonexistent/dir/x enumerate 2 3").code == 2);
}

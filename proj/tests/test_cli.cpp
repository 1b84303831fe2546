#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "domcube/families.hpp"
#include "domcube/graph_io.hpp"

#ifndef DOMCUBE_CLI_PATH
#error "DOMCUBE_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string command;
  if (!stdin_text.empty()) {
    // One quoted argument per input line; graph6 bytes (63..126) and edge
    // lists never contain a single quote, so plain quoting is safe and no
    // backslash interpretation can corrupt the payload.
    command += "printf '%s\\n'";
    std::size_t start = 0;
    while (start < stdin_text.size()) {
      std::size_t end = stdin_text.find('\n', start);
      if (end == std::string::npos) end = stdin_text.size();
      command += " '" + stdin_text.substr(start, end - start) + "'";
      start = end + 1;
    }
    command += " | ";
  }
  command += std::string(DOMCUBE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> chunk{};
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    result.out.append(chunk.data(), got);
  int status = pclose(pipe);
  result.code = status < 0 ? -1 : WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("cli classify") {
  RunResult r = run("classify", "Cl\n");
  CHECK(r.out == "dm=false mdscomds=true leaf_condition=false\n");
  CHECK(r.code == 0);

  RunResult witness = run("classify --witness", "Cl\n");
  CHECK(witness.out ==
        "dm=false mdscomds=true leaf_condition=false dm_witness={0,1},{0,2},{0,3}\n");

  RunResult multi = run("classify", "Cl\nA_\nBg\n");
  CHECK(multi.out ==
        "dm=false mdscomds=true leaf_condition=false\n"
        "dm=true mdscomds=true leaf_condition=true\n"
        "dm=true mdscomds=true leaf_condition=true\n");

  RunResult parallel = run("classify --jobs 4", "Cl\nA_\nBg\n");
  CHECK(parallel.out == multi.out);

  RunResult edgelist = run("classify --format edgelist", "n 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(edgelist.out == "dm=false mdscomds=true leaf_condition=false\n");
}

TEST_CASE("cli domgraph") {
  RunResult full = run("domgraph --k full --stats", "A_\n");
  CHECK(full.out == "order=3 size=2 connected=true isometric=true\n");
  CHECK(full.code == 0);

  RunResult capped = run("domgraph --k 2 --stats", "Cl\n");
  CHECK(capped.out == "order=6 size=0 connected=false isometric=n/a\n");

  RunResult empty = run("domgraph --k 1 --stats", "Cl\n");
  CHECK(empty.out == "order=0 size=0 connected=n/a isometric=n/a\n");

  SECTION("dot export") {
    RunResult dot = run("domgraph --dot cli_dump.dot", "A_\n");
    CHECK(dot.code == 0);
    std::ifstream file("cli_dump.dot");
    REQUIRE(file.good());
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(text.find("label=\"{0,1}\"") != std::string::npos);
  }
}

TEST_CASE("cli median and partial-cube") {
  // C6 = cycle 0..5.
  std::string c6 = domcube::write_graph6(domcube::cycle_graph(6)) + "\n";
  RunResult median = run("median", c6);
  CHECK(median.out == "median=false witness=(0,2,4)\n");
  CHECK(median.code == 1);

  std::string k13 = domcube::write_graph6(domcube::star_graph(3)) + "\n";
  RunResult star = run("median", k13);
  CHECK(star.out == "median=true\n");
  CHECK(star.code == 0);

  RunResult cube = run("partial-cube", c6);
  CHECK(cube.out == "partial_cube=true\n");
  CHECK(cube.code == 0);

  std::string c3 = domcube::write_graph6(domcube::cycle_graph(3)) + "\n";
  RunResult odd = run("partial-cube", c3);
  CHECK(odd.out == "partial_cube=false reason=odd_cycle\n");
  CHECK(odd.code == 1);

  RunResult labels = run("partial-cube --labels", "Bg\n");
  CHECK(labels.out == "partial_cube=true labels={};{0};{0,1}\n");
}

TEST_CASE("cli numbers") {
  CHECK(run("gamma", "Cl\n").out == "gamma=2\n");
  std::string fixture = domcube::write_graph6(domcube::inverse_sum_counterexample()) + "\n";
  CHECK(run("gamma", fixture).out == "gamma=2\n");
  CHECK(run("inv-gamma", fixture).out == "inv_gamma=5\n");
}

TEST_CASE("cli extend") {
  RunResult corona = run("extend --mode corona", "A_\n");
  CHECK(corona.out == "Cq\n");

  RunResult completion = run("extend", "Bg\n");
  CHECK(completion.out == "Bg\n");  // three-path already qualifies

  RunResult block = run("extend --mode corona --format edgelist", "n 2\n0 1\n");
  CHECK(block.out == "n 4\n0 1\n0 2\n1 3\n");
}

TEST_CASE("cli geodesic") {
  RunResult path = run("geodesic --from 0 --to 1", "A_\n");
  CHECK(path.out == "path={0};{0,1};{1} length=2\n");

  RunResult far = run("geodesic --from '{0,1}' --to '{2,3}'", "Cl\n");
  CHECK(far.out == "path={0,1};{0,1,2};{0,1,2,3};{1,2,3};{2,3} length=4\n");

  RunResult bad = run("geodesic --from 0 --to 1", "Cl\n");
  CHECK(bad.code == 2);  // {0} does not dominate the four-cycle
}

TEST_CASE("cli verify") {
  RunResult sweep = run("verify thm3.1 --max-n 4");
  CHECK(sweep.out == "checked=46 failures=0\n");
  CHECK(sweep.code == 0);

  RunResult lemmas = run("verify lemmas --max-n 3");
  CHECK(lemmas.out.find("failures=0") != std::string::npos);
  CHECK(lemmas.code == 0);

  RunResult cubes = run("verify thm3.6 --max-n 3 --samples 20");
  CHECK(cubes.out == "checked=31 failures=0 seed=0 samples=20\n");

  RunResult unknown = run("verify nonsense");
  CHECK(unknown.code == 2);
}

TEST_CASE("cli counterexamples feed back in and reproduce") {
  RunResult sweep = run("verify thm3.1 --max-n 6");
  REQUIRE(sweep.code == 1);  // the n=6 sweep reports deviations
  auto pos = sweep.out.find("counterexample=");
  REQUIRE(pos != std::string::npos);
  pos += std::string("counterexample=").size();
  std::string g6 = sweep.out.substr(pos, sweep.out.find(' ', pos) - pos);

  RunResult reproduced = run("classify", g6 + "\n");
  CHECK(reproduced.out == "dm=false mdscomds=true leaf_condition=false\n");
}

TEST_CASE("cli classify witnesses") {
  std::string c3 = domcube::write_graph6(domcube::cycle_graph(3)) + "\n";
  RunResult r = run("classify --witness", c3);
  CHECK(r.out ==
        "dm=false mdscomds=false leaf_condition=false "
        "dm_witness={0},{1},{2} mdscomds_witness={0}\n");
}

TEST_CASE("cli preimage") {
  {
    std::ofstream target("cli_target_p3.g6");
    target << domcube::write_graph6(domcube::path_graph(3)) << "\n";
  }
  RunResult found = run("preimage --target cli_target_p3.g6");
  CHECK(found.out == "preimage=A_\n");
  CHECK(found.code == 0);

  {
    std::ofstream target("cli_target_k13.g6");
    target << domcube::write_graph6(domcube::star_graph(3)) << "\n";
  }
  RunResult absent = run("preimage --target cli_target_k13.g6 --max-host-n 5");
  CHECK(absent.out == "preimage=absent\n");
  CHECK(absent.code == 1);
}

TEST_CASE("cli exit codes") {
  RunResult budget = run("classify", domcube::write_graph6(domcube::path_graph(18)) + "\n");
  CHECK(budget.code == 3);

  RunResult raised = run("classify --budget 1048576",
                         domcube::write_graph6(domcube::path_graph(18)) + "\n");
  CHECK(raised.code == 0);

  RunResult garbage = run("classify", "\x7f_not_graph6\n");
  CHECK(garbage.code == 2);

  RunResult no_cmd = run("frobnicate");
  CHECK(no_cmd.code == 2);

  RunResult empty_input = run("classify", "\n");
  CHECK(empty_input.code == 2);
}

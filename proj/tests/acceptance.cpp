// Acceptance gate: the eight pinned criteria, one pass/fail line each.
// argv[1] must point at the CLI binary (used by the determinism criterion).

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "domcube/domcube.hpp"

using namespace domcube;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << number << " " << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

std::string run_command(const std::string& command, int* exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return output;
  }
  std::array<char, 4096> chunk{};
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    output.append(chunk.data(), got);
  int status = pclose(pipe);
  *exit_code = status < 0 ? -1 : WEXITSTATUS(status);
  return output;
}

std::string stats(const Report& r) {
  return r.machine_line() + " elapsed=" + std::to_string(r.elapsed_seconds) + "s";
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";
  int jobs = 0;  // hardware default

  {
    Report r = verify_classification_equivalence(6, jobs);
    report(1, "classification-equivalence-n6", r.failures == 0 && r.elapsed_seconds < 300.0,
           stats(r));
  }
  {
    Report r = verify_median_star_equivalence(5, jobs);
    report(2, "median-star-equivalence-n5", r.failures == 0 && r.elapsed_seconds < 300.0,
           stats(r));
  }
  {
    Report r = verify_partial_cube_embedding(5, 500, 8, 0, jobs);
    report(3, "partial-cube-embedding-n5-plus-500-samples",
           r.failures == 0 && r.elapsed_seconds < 300.0, stats(r));
  }
  {
    bool ok = true;
    std::string note;

    Graph c4 = cycle_graph(4);
    StarCheck c4_star = is_dm_star(c4);
    ok = ok && !c4_star.holds && c4_star.witness.has_value();
    if (c4_star.witness) {
      VertexSet majority =
          star((*c4_star.witness)[0], (*c4_star.witness)[1], (*c4_star.witness)[2]);
      ok = ok && !is_dominating(c4, majority);
      for (VertexSet s : *c4_star.witness) ok = ok && is_dominating(c4, s);
    }
    ok = ok && is_mdscomds(c4).holds;
    if (!ok) note = "four-cycle fixtures";

    MdsComplementCheck c3 = is_mdscomds(cycle_graph(3));
    bool c3_ok = !c3.holds && c3.witness.has_value() && c3.witness->count() == 1;
    if (!c3_ok && note.empty()) note = "triangle witness";
    ok = ok && c3_ok;

    bool c6_ok = is_partial_cube(cycle_graph(6)).value && !is_median_graph(cycle_graph(6)).value;
    if (!c6_ok && note.empty()) note = "six-cycle split";
    ok = ok && c6_ok;

    bool star_ok = !search_dominating_graph_preimage(star_graph(3), 5).has_value() &&
                   !search_dominating_graph_preimage(star_graph(4), 5).has_value();
    if (!star_ok && note.empty()) note = "star preimages";
    ok = ok && star_ok;

    Graph fixture = inverse_sum_counterexample();
    int gamma = domination_number(fixture);
    int inverse = inverse_domination_number(fixture);
    bool fixture_ok =
        gamma == 2 && inverse == 5 && gamma + inverse == 7 && !is_dm_characterized(fixture);
    if (!fixture_ok && note.empty()) note = "seven-vertex fixture";
    ok = ok && fixture_ok;

    report(4, "counterexample-fixtures", ok, note);
  }
  {
    Report r = verify_domination_sum(6, jobs);
    report(5, "domination-sum-n6", r.failures == 0, stats(r));
  }
  {
    Report r = verify_structural_rules(5, jobs);
    report(6, "structural-rules-n5", r.failures == 0, stats(r));
  }
  {
    detail::Stopwatch clock;
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      std::uint64_t h = detail::mix(0xC0FFEE ^ detail::mix(i));
      int n = 1 + static_cast<int>(h % 10);
      Graph g = random_graph(n, detail::mix(h + 1));
      std::string text = write_graph6(g);
      if (parse_graph6(text) != g || write_graph6(parse_graph6(text)) != text) ++bad;
    }
    double elapsed = clock.seconds();
    report(7, "graph6-round-trip-10000", bad == 0 && elapsed < 10.0,
           "bad=" + std::to_string(bad) + " elapsed=" + std::to_string(elapsed) + "s");
  }
  {
    bool ok = false;
    std::string note;
    if (cli_path.empty()) {
      note = "no CLI path given";
    } else {
      int code1 = 0, code8 = 0;
      std::string out1 =
          run_command(cli_path + " verify thm3.1 --max-n 5 --jobs 1 2>/dev/null", &code1);
      std::string out8 =
          run_command(cli_path + " verify thm3.1 --max-n 5 --jobs 8 2>/dev/null", &code8);
      ok = code1 == 0 && code8 == 0 && !out1.empty() && out1 == out8;
      note = "jobs1=" + out1.substr(0, out1.find('\n')) +
             (ok ? " identical" : " MISMATCH jobs8=" + out8.substr(0, out8.find('\n')));
    }
    report(8, "cli-output-determinism", ok, note);
  }

  if (failures == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return 1;
}

// Command-line front end: classification, dominating-graph construction,
// median / partial-cube recognition, and the exhaustive verification sweeps,
// over graph6 lines or edge-list blocks.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "domcube/domcube.hpp"

namespace {

using namespace domcube;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::string format = "graph6";
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSubsetBudget;
  int jobs = 1;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file) raise(Errc::parse_error, "cannot open " + path);
  return read_stream(file);
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// graph6: one graph per nonempty line. edgelist: blocks split on blank lines.
std::vector<Graph> parse_units(const std::string& text, const std::string& format) {
  std::vector<Graph> graphs;
  if (format == "graph6") {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string unit = trim(line);
      if (unit.empty()) continue;
      try {
        graphs.push_back(parse_graph6(unit));
      } catch (const Error& e) {
        raise(e.code(), "input line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  } else {
    std::istringstream in(text);
    std::string line, block;
    int block_no = 0;
    auto flush = [&] {
      if (trim(block).empty()) {
        block.clear();
        return;
      }
      ++block_no;
      try {
        graphs.push_back(parse_edgelist(block));
      } catch (const Error& e) {
        raise(e.code(), "input block " + std::to_string(block_no) + ": " + e.what());
      }
      block.clear();
    };
    while (std::getline(in, line)) {
      if (trim(line).empty())
        flush();
      else
        block += line + "\n";
    }
    flush();
  }
  return graphs;
}

std::string write_unit(const Graph& g, const std::string& format) {
  if (format == "graph6") return write_graph6(g);
  return write_edgelist(g);
}

const char* yn(bool b) { return b ? "true" : "false"; }

// Order-preserving parallel map; aborts with the error of the lowest failing
// index so output and diagnostics do not depend on the worker count.
template <typename Fn>
std::vector<std::string> ordered_map(std::size_t count, int jobs, const Fn& fn) {
  std::vector<std::string> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  std::mutex error_lock;
  std::size_t error_index = count;
  std::exception_ptr error;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = count * w / workers;
    std::size_t hi = count * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> hold(error_lock);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::string triple_braces(const StarTriple& t) {
  return t[0].to_braces() + "," + t[1].to_braces() + "," + t[2].to_braces();
}

VertexSet parse_vertex_set(std::string text, int order) {
  VertexSet out;
  for (char& ch : text)
    if (ch == '{' || ch == '}' || ch == ' ') ch = ',';
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int v;
    try {
      v = std::stoi(item);
    } catch (...) {
      raise(Errc::parse_error, "bad vertex '" + item + "' in set");
    }
    if (v < 0 || v >= order)
      raise(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " not in host of order " +
                                           std::to_string(order));
    out = out.with(v);
  }
  return out;
}

int run_verify(const std::string& token, int max_n, std::uint64_t trials, std::uint64_t samples,
               int sample_max_n, const GlobalOptions& global) {
  Report report;
  if (token == "thm3.1") {
    report = verify_classification_equivalence(max_n > 0 ? max_n : 6, global.jobs, global.budget);
  } else if (token == "prop2.1") {
    report = verify_median_star_equivalence(max_n > 0 ? max_n : 5, global.jobs, global.budget);
  } else if (token == "thm3.6") {
    report = verify_partial_cube_embedding(max_n > 0 ? max_n : 5, samples, sample_max_n,
                                           global.seed, global.jobs, global.budget);
  } else if (token == "lemmas") {
    report = verify_structural_rules(max_n > 0 ? max_n : 5, global.jobs, global.budget);
  } else if (token == "cor3.4") {
    report = verify_domination_sum(max_n > 0 ? max_n : 6, global.jobs, global.budget);
  } else if (token == "cor3.5") {
    report = verify_extension_bound(trials, max_n > 0 ? max_n : 12, global.seed, global.jobs,
                                    global.budget);
  } else {
    raise(Errc::parse_error, "unknown check '" + token + "'");
  }
  std::cout << report.machine_line() << "\n";
  std::cerr << report.summary_line() << "\n";
  return report.failures == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating graphs, median graphs and partial cubes at desk scale"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "input format: graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--budget", global.budget, "subset enumeration budget")->capture_default_str();
  app.add_option("--jobs", global.jobs, "worker threads")->capture_default_str();

  std::string input = "-";
  bool classify_witness = false;
  auto* cmd_classify = app.add_subcommand("classify", "dm / mdscomds / leaf-condition per graph");
  cmd_classify->add_option("input", input, "file or - for stdin");
  cmd_classify->add_flag("--witness", classify_witness, "print failing witnesses");

  std::string domgraph_k = "full";
  std::string dot_path;
  bool domgraph_stats = false;
  auto* cmd_domgraph = app.add_subcommand("domgraph", "build the (k-)dominating graph");
  cmd_domgraph->add_option("input", input, "file or - for stdin");
  cmd_domgraph->add_option("--k", domgraph_k, "size cap, a number or 'full'")
      ->capture_default_str();
  cmd_domgraph->add_option("--dot", dot_path, "write DOT for every input graph to this file");
  cmd_domgraph->add_flag("--stats", domgraph_stats, "print order/size/connected/isometric");

  auto* cmd_median = app.add_subcommand("median", "median-graph recognition");
  cmd_median->add_option("input", input, "file or - for stdin");

  bool cube_labels = false;
  auto* cmd_cube = app.add_subcommand("partial-cube", "partial-cube recognition");
  cmd_cube->add_option("input", input, "file or - for stdin");
  cmd_cube->add_flag("--labels", cube_labels, "print a hypercube labeling when true");

  auto* cmd_gamma = app.add_subcommand("gamma", "domination number");
  cmd_gamma->add_option("input", input, "file or - for stdin");

  auto* cmd_inv = app.add_subcommand("inv-gamma", "inverse domination number");
  cmd_inv->add_option("input", input, "file or - for stdin");

  std::string extend_mode = "completion";
  auto* cmd_extend = app.add_subcommand("extend", "grow the host until every vertex touches a leaf");
  cmd_extend->add_option("input", input, "file or - for stdin");
  cmd_extend->add_option("--mode", extend_mode, "corona or completion")
      ->check(CLI::IsMember({"corona", "completion"}))
      ->capture_default_str();

  std::string from_text, to_text;
  auto* cmd_geodesic = app.add_subcommand("geodesic", "shortest path in the dominating graph");
  cmd_geodesic->add_option("input", input, "file or - for stdin");
  cmd_geodesic->add_option("--from", from_text, "dominating set, e.g. 0,2 or {0,2}")->required();
  cmd_geodesic->add_option("--to", to_text, "dominating set")->required();

  std::string verify_token;
  int verify_max_n = 0;
  std::uint64_t verify_trials = 200;
  std::uint64_t verify_samples = 500;
  int verify_sample_max_n = 8;
  auto* cmd_verify = app.add_subcommand("verify", "run one exhaustive verification sweep");
  cmd_verify->add_option("check", verify_token, "thm3.1|prop2.1|thm3.6|lemmas|cor3.4|cor3.5")
      ->required()
      ->check(CLI::IsMember({"thm3.1", "prop2.1", "thm3.6", "lemmas", "cor3.4", "cor3.5"}));
  cmd_verify->add_option("--max-n", verify_max_n, "sweep bound (per-check default)");
  cmd_verify->add_option("--trials", verify_trials, "random trials (cor3.5)")
      ->capture_default_str();
  cmd_verify->add_option("--samples", verify_samples, "random samples (thm3.6)")
      ->capture_default_str();
  cmd_verify->add_option("--sample-max-n", verify_sample_max_n, "sampled order bound (thm3.6)")
      ->capture_default_str();

  std::string target_path;
  int max_host_n = 5;
  auto* cmd_preimage = app.add_subcommand("preimage", "search hosts whose dominating graph matches");
  cmd_preimage->add_option("--target", target_path, "file holding the target graph")->required();
  cmd_preimage->add_option("--max-host-n", max_host_n, "largest host order to scan")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_verify->parsed())
      return run_verify(verify_token, verify_max_n, verify_trials, verify_samples,
                        verify_sample_max_n, global);

    if (cmd_preimage->parsed()) {
      std::vector<Graph> targets = parse_units(read_input(target_path), global.format);
      if (targets.size() != 1) raise(Errc::parse_error, "target file must hold exactly one graph");
      auto found = search_dominating_graph_preimage(targets[0], max_host_n, global.budget);
      if (found) {
        std::cout << "preimage=" << write_graph6(*found) << "\n";
        return kExitTrue;
      }
      std::cout << "preimage=absent\n";
      return kExitFalse;
    }

    std::vector<Graph> graphs = parse_units(read_input(input), global.format);
    if (graphs.empty()) raise(Errc::parse_error, "no input graphs");

    if (cmd_classify->parsed()) {
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        Classification c = classify(graphs[i], global.budget);
        std::string line = std::string("dm=") + yn(c.dm) + " mdscomds=" + yn(c.mdscomds) +
                           " leaf_condition=" + yn(c.leaf_condition);
        if (classify_witness) {
          if (c.star_witness) line += " dm_witness=" + triple_braces(*c.star_witness);
          if (c.mdscomds_witness) line += " mdscomds_witness=" + c.mdscomds_witness->to_braces();
        }
        return line;
      });
      for (const auto& line : lines) std::cout << line << "\n";
      return kExitTrue;
    }

    if (cmd_median->parsed()) {
      bool all_true = true;
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        MedianCheck m = is_median_graph(graphs[i]);
        if (m.value) return std::string("median=true");
        std::string line = "median=false";
        if (m.reason == MedianReason::disconnected) line += " reason=disconnected";
        if (m.witness)
          line += " witness=(" + std::to_string((*m.witness)[0]) + "," +
                  std::to_string((*m.witness)[1]) + "," + std::to_string((*m.witness)[2]) + ")";
        return line;
      });
      for (const auto& line : lines) {
        std::cout << line << "\n";
        if (line.find("median=false") == 0) all_true = false;
      }
      return all_true ? kExitTrue : kExitFalse;
    }

    if (cmd_cube->parsed()) {
      bool all_true = true;
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        PartialCubeCheck pc = is_partial_cube(graphs[i]);
        if (!pc.value) {
          std::string reason = pc.reason == PartialCubeReason::disconnected ? "disconnected"
                               : pc.reason == PartialCubeReason::not_bipartite
                                   ? "odd_cycle"
                                   : "theta_not_transitive";
          return "partial_cube=false reason=" + reason;
        }
        std::string line = "partial_cube=true";
        if (cube_labels) {
          line += " labels=";
          auto labels = hypercube_labeling(graphs[i]);
          for (std::size_t v = 0; v < labels.size(); ++v) {
            if (v) line += ";";
            line += labels[v].to_braces();
          }
        }
        return line;
      });
      for (const auto& line : lines) {
        std::cout << line << "\n";
        if (line.find("partial_cube=false") == 0) all_true = false;
      }
      return all_true ? kExitTrue : kExitFalse;
    }

    if (cmd_gamma->parsed()) {
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        return "gamma=" + std::to_string(domination_number(graphs[i], global.budget));
      });
      for (const auto& line : lines) std::cout << line << "\n";
      return kExitTrue;
    }

    if (cmd_inv->parsed()) {
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        return "inv_gamma=" + std::to_string(inverse_domination_number(graphs[i], global.budget));
      });
      for (const auto& line : lines) std::cout << line << "\n";
      return kExitTrue;
    }

    if (cmd_extend->parsed()) {
      auto lines = ordered_map(graphs.size(), global.jobs, [&](std::size_t i) {
        Graph grown = extend_mode == "corona" ? corona_k1(graphs[i]) : leaf_completion(graphs[i]);
        return write_unit(grown, global.format);
      });
      for (std::size_t i = 0; i < lines.size(); ++i) {
        std::cout << lines[i];
        if (global.format == "graph6")
          std::cout << "\n";
        else if (i + 1 < lines.size())
          std::cout << "\n";  // blank separator between edge-list blocks
      }
      return kExitTrue;
    }

    if (cmd_domgraph->parsed()) {
      std::string dot_accum;
      for (const Graph& g : graphs) {
        int k = g.order();
        if (domgraph_k != "full") {
          try {
            k = std::stoi(domgraph_k);
          } catch (...) {
            raise(Errc::parse_error, "--k expects a number or 'full'");
          }
          if (k < 0) raise(Errc::parse_error, "--k must be nonnegative");
          k = std::min(k, g.order());
        }
        DomGraph h = build_dominating_graph(g, k, global.budget);
        if (!dot_path.empty()) dot_accum += write_dot(h);
        if (domgraph_stats || dot_path.empty()) std::cout << summary_line(h) << "\n";
      }
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) raise(Errc::parse_error, "cannot write " + dot_path);
        out << dot_accum;
      }
      return kExitTrue;
    }

    if (cmd_geodesic->parsed()) {
      for (const Graph& g : graphs) {
        DomGraph h = build_full_dominating_graph(g, global.budget);
        VertexSet from = parse_vertex_set(from_text, g.order());
        VertexSet to = parse_vertex_set(to_text, g.order());
        auto i = h.index_of(from);
        auto j = h.index_of(to);
        if (!i) raise(Errc::parse_error, "--from is not a dominating set of the input");
        if (!j) raise(Errc::parse_error, "--to is not a dominating set of the input");
        auto path = geodesic(h, *i, *j);
        std::string line = "path=";
        for (std::size_t step = 0; step < path.size(); ++step) {
          if (step) line += ";";
          line += h.label(path[step]).to_braces();
        }
        line += " length=" + std::to_string(path.size() - 1);
        std::cout << line << "\n";
      }
      return kExitTrue;
    }

    raise(Errc::parse_error, "no subcommand dispatched");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "torsionlab/torsionlab.hpp"

namespace {

using namespace torsionlab;

constexpr int kUsageError = 2;

struct GlobalFlags {
  std::string format = "text";
  std::size_t max_degree = 4;
  std::size_t max_iter = 64;
  std::size_t stability_window = 3;
  std::size_t workers = 1;
};

dsl::ExecOptions exec_options(const GlobalFlags& g) {
  dsl::ExecOptions o;
  o.search.degree_bound = g.max_degree;
  o.search.iteration_cap = g.max_iter;
  o.iteration_cap = g.max_iter;
  o.stability_window = g.stability_window;
  o.seed = dsl::seed_from_environment();
  o.workers = g.workers;
  return o;
}

ReportFormat report_format(const GlobalFlags& g) { return g.format == "json" ? ReportFormat::Json : ReportFormat::Text; }

int emit(const dsl::ExecResult& r, const GlobalFlags& g) {
  std::cout << render(r.report, report_format(g));
  return r.exit_status();
}

int run_script(const std::string& path, const GlobalFlags& g) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kUsageError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  dsl::Script script;
  try {
    script = dsl::parse(buf.str());
  } catch (const dsl::SyntaxError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kUsageError;
  }
  return emit(dsl::execute(script, exec_options(g)), g);
}

int run_single(dsl::StatementNode node, const GlobalFlags& g) {
  dsl::Script s;
  s.statements.push_back({std::move(node), {}});
  return emit(dsl::execute(s, exec_options(g)), g);
}

std::optional<dsl::Range> parse_levels(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  return dsl::Range{std::stoll(m[1]), std::stoll(m[2])};
}

int list_examples(const GlobalFlags& g) {
  Json list = Json::array();
  for (auto& e : example_registry()) {
    Json claims = Json::array();
    for (auto& [name, desc] : e.claims) claims.push_back(name);
    list.push_back({{"tag", e.tag}, {"summary", e.summary}, {"claims", claims}});
  }
  std::cout << render(Json{{"examples", list}}, report_format(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion functors and fairness of ideals in truncated monomial rings"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", g.max_degree, "degree bound for bounded searches")->check(CLI::NonNegativeNumber);
  app.add_option("--max-iter", g.max_iter, "iteration cap for saturation chains")->check(CLI::PositiveNumber);
  app.add_option("--stability-window", g.stability_window, "levels that must agree for stability")
      ->check(CLI::Range(2, 64));
  app.add_option("--workers", g.workers, "worker threads for the harness")->check(CLI::Range(1, 256));

  auto* run = app.add_subcommand("run", "execute a script");
  std::string path;
  run->add_option("file", path, "script file")->required();

  auto* harness = app.add_subcommand("harness", "run the proposition harness");
  std::int64_t instances = 500;
  std::optional<std::int64_t> seed;
  harness->add_option("--instances", instances, "number of random instances")->check(CLI::NonNegativeNumber);
  harness->add_option("--seed", seed, "random seed (default: TORSIONLAB_SEED or 42)");

  auto* examples = app.add_subcommand("examples", "list or replicate registry examples");
  bool list = false;
  std::string tag, levels;
  std::optional<std::int64_t> window;
  auto* list_flag = examples->add_flag("--list", list, "list registry tags");
  auto* run_opt = examples->add_option("--run", tag, "tag to replicate");
  examples->add_option("--levels", levels, "level range a..b");
  examples->add_option("--window", window, "stability window");
  list_flag->excludes(run_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) return run_script(path, g);
    if (*harness) {
      dsl::HarnessStmt h{instances, seed};
      if (!seed) h.seed = static_cast<std::int64_t>(dsl::seed_from_environment());
      return run_single(h, g);
    }
    if (list) return list_examples(g);
    if (tag.empty()) {
      std::cerr << "examples: pass --list or --run <tag>\n";
      return kUsageError;
    }
    dsl::RunExampleStmt r{tag, std::nullopt, window};
    if (!levels.empty()) {
      r.levels = parse_levels(levels);
      if (!r.levels) {
        std::cerr << "--levels expects a..b\n";
        return kUsageError;
      }
    }
    if (!window) r.window = static_cast<std::int64_t>(g.stability_window);
    return run_single(r, g);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

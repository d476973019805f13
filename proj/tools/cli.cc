// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pipround/bounds.h"
#include "pipround/error.h"
#include "pipround/generators.h"
#include "pipround/harness.h"
#include "pipround/instance.h"
#include "pipround/instance_io.h"
#include "pipround/lp.h"
#include "pipround/oracle.h"
#include "pipround/regimes.h"
#include "pipround/rounding.h"

namespace pipround::cli {

namespace {

using nlohmann::json;

int DefaultThreads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Options shared by every subcommand.
struct Common {
  std::optional<uint64_t> seed;
  bool deterministic = false;
  std::string out = "-";
};

void AddCommon(CLI::App* app, Common& common) {
  app->add_option("--seed", common.seed, "Master seed (drawn from entropy if absent)");
  app->add_flag("--deterministic", common.deterministic,
                "Suppress timestamps and wall-clock fields");
  app->add_option("--out", common.out, "Output file, - for stdout");
}

uint64_t ResolveSeed(const Common& common, std::ostream& err) {
  if (common.seed) return *common.seed;
  std::random_device device;
  const uint64_t seed =
      (static_cast<uint64_t>(device()) << 32) ^ static_cast<uint64_t>(device());
  err << "seed: " << seed << "\n";
  return seed;
}

// Writes through `out` for "-" and through a file otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (path == "-" || path.empty()) {
      stream_ = &out;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) {
      throw Error(ErrorCode::kInvalidArgument, "cannot write \"" + path + "\"");
    }
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::vector<int> ToIntList(const std::vector<uint8_t>& x) {
  return std::vector<int>(x.begin(), x.end());
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  Common common;
  std::string input;
  std::string regime = "auto";
  std::optional<double> eps;
  int64_t trials = 1000;
  int threads = DefaultThreads();
  bool force_heuristic = false;
  std::string mode = "cascaded";
  bool unsorted_baseline = false;
  std::string dump_basis;
  std::string trials_csv;
};

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const PipInstance instance = ReadInstanceFile(args.input);
  const NormalizedInstance normalized = Normalize(instance);

  RegimeConfig config;
  if (args.regime == "auto") {
    try {
      config = SelectRegime(normalized, args.eps);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kWidthOne || !args.force_heuristic) throw;
      err << "warning: width 1, running the heuristic without a guarantee\n";
      config = HeuristicConfig(normalized);
    }
  } else {
    config = ConfigFor(ParseRegime(args.regime), normalized, args.eps);
  }

  const uint64_t seed = ResolveSeed(args.common, err);
  const FractionalSolution lp = SolveLp(normalized);
  if (!args.dump_basis.empty()) {
    std::ofstream basis(args.dump_basis);
    if (!basis) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write \"" + args.dump_basis + "\"");
    }
    WriteBasis(basis, normalized.base, lp);
  }

  RoundingOptions options;
  options.mode = args.mode == "isolated" ? AlterationMode::kIsolated
                                         : AlterationMode::kCascaded;
  options.unsorted_baseline = args.unsorted_baseline;
  options.threads = args.threads;
  const RoundAndAlterResult result =
      RoundAndAlter(normalized, lp, config, args.trials, seed, options);

  if (!args.trials_csv.empty()) {
    std::ofstream csv(args.trials_csv, std::ios::binary);
    if (!csv) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write \"" + args.trials_csv + "\"");
    }
    WriteTrialCsv(csv, result.trials);
  }

  const std::vector<uint8_t>& x = result.best.x_double_prime;
  if (!instance.IsFeasible(std::span<const uint8_t>(x))) {
    err << "internal error: rounded solution violates the input constraints\n";
    return kExitFailure;
  }
  json doc;
  doc["value"] = instance.ObjectiveValue(std::span<const uint8_t>(x));
  doc["x"] = ToIntList(x);
  doc["regime"] = std::string(RegimeName(config.regime));
  doc["heuristic"] = config.heuristic;
  doc["alpha"] = config.alpha;
  doc["lpOpt"] = lp.objective;
  doc["meanValue"] = result.mean_value;
  doc["trials"] = args.trials;
  doc["seed"] = seed;
  Sink sink(args.common.out, out);
  sink.stream() << doc.dump(2) << "\n";
  return kExitOk;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  Common common;
  std::string kind = "random";
  int n = 20;
  int m = 5;
  double width = 2.0;
  double density = 0.5;
  double eps = 0.5;
  int column_nnz = 2;
  std::string profile = "uniform";
  std::vector<std::string> graph;
  std::string layout = "sparse";
};

Graph BuildGraph(const std::vector<std::string>& tokens, uint64_t seed) {
  auto usage = [] {
    return Error(ErrorCode::kInvalidArgument,
                 "--graph expects: k N | path N | random N P | file PATH");
  };
  if (tokens.size() < 2) throw usage();
  const std::string& shape = tokens[0];
  auto count = [&] {
    try {
      return std::stoi(tokens[1]);
    } catch (const std::exception&) {
      throw usage();
    }
  };
  if ((shape == "k" || shape == "complete") && tokens.size() == 2) {
    return CompleteGraph(count());
  }
  if (shape == "path" && tokens.size() == 2) return PathGraph(count());
  if (shape == "random" && tokens.size() == 3) {
    double p = 0.0;
    try {
      p = std::stod(tokens[2]);
    } catch (const std::exception&) {
      throw usage();
    }
    return RandomGraph(count(), p, seed);
  }
  if (shape == "file" && tokens.size() == 2) {
    std::ifstream in(tokens[1]);
    if (!in) {
      throw Error(ErrorCode::kParseError, "cannot read \"" + tokens[1] + "\"");
    }
    return ReadEdgeList(in);
  }
  throw usage();
}

int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  const uint64_t seed = ResolveSeed(args.common, err);
  json meta;
  meta["kind"] = args.kind;
  meta["seed"] = seed;
  PipInstance instance = [&] {
    if (args.kind == "random") {
      return RandomInstance(args.n, args.m, args.width, args.density, seed);
    }
    if (args.kind == "sparse") {
      return SparseColumnInstance(args.n, args.m, args.width, args.column_nnz,
                                  seed);
    }
    if (args.kind == "mixed") {
      return MixedWidthInstance(args.n, args.m, args.eps, args.density, seed);
    }
    if (args.kind == "knapsack") {
      return KnapsackInstance(args.n, args.width,
                              ParseKnapsackProfile(args.profile), seed);
    }
    if (args.kind == "mis") {
      std::string description;
      for (const std::string& t : args.graph) {
        description += (description.empty() ? "" : " ") + t;
      }
      meta["graph"] = description;
      return MisToPip(BuildGraph(args.graph, seed));
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown kind \"" + args.kind + "\"");
  }();
  const MatrixLayout layout =
      args.layout == "dense" ? MatrixLayout::kDense : MatrixLayout::kSparse;
  Sink sink(args.common.out, out);
  sink.stream() << InstanceToJson(instance, layout, meta.dump());
  return kExitOk;
}

// --- experiment -------------------------------------------------------------

struct ExperimentArgs {
  Common common;
  std::string spec;
  int threads = DefaultThreads();
};

int RunExperiment(const ExperimentArgs& args, std::ostream& out,
                  std::ostream& err) {
  std::ifstream in(args.spec, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read \"" + args.spec + "\"");
  std::stringstream text;
  text << in.rdbuf();
  const std::string base_dir =
      std::filesystem::path(args.spec).parent_path().string();
  const SweepSpec spec = ParseSweepSpec(text.str(), base_dir.empty() ? "." : base_dir);

  SweepOptions options;
  options.seed = ResolveSeed(args.common, err);
  options.deterministic = args.common.deterministic;
  options.threads = args.threads;
  Sink sink(args.common.out, out);
  const int failed = RunSweep(spec, options, sink.stream());
  if (failed > 0) err << "warning: " << failed << " cell(s) reported an error\n";
  return kExitOk;
}

// --- verify-bounds ----------------------------------------------------------

struct VerifyArgs {
  Common common;
  int draws = 500;
  int64_t samples = 20000;
};

int RunVerifyBounds(const VerifyArgs& args, std::ostream& out,
                    std::ostream& err) {
  const uint64_t seed = ResolveSeed(args.common, err);
  std::vector<GridCheck> checks = CheckLemmaGrids();
  checks.push_back(CheckChernoffDominance(args.draws, args.samples, seed));

  Sink sink(args.common.out, out);
  std::ostream& os = sink.stream();
  char line[160];
  std::snprintf(line, sizeof(line), "%-14s %10s %11s %14s  %s\n", "check",
                "points", "violations", "min_slack", "result");
  os << line;
  bool all = true;
  for (const GridCheck& c : checks) {
    std::snprintf(line, sizeof(line), "%-14s %10lld %11lld %14.6e  %s\n",
                  c.name.c_str(), static_cast<long long>(c.points),
                  static_cast<long long>(c.violations), c.min_slack,
                  c.passed() ? "PASS" : "FAIL");
    os << line;
    all = all && c.passed();
  }
  return all ? kExitOk : kExitFailure;
}

// --- oracle -----------------------------------------------------------------

struct OracleArgs {
  Common common;
  std::string input;
  int64_t node_limit = kDefaultNodeLimit;
};

int RunOracle(const OracleArgs& args, std::ostream& out, std::ostream&) {
  const PipInstance instance = ReadInstanceFile(args.input);
  const std::vector<Violation> violations = Validate(instance);
  if (!IsValid(violations)) {
    std::string message = "invalid instance:";
    for (const Violation& v : violations) message += " " + ToString(v);
    throw Error(ErrorCode::kInvalidInstance, message);
  }
  const ExactResult exact = BruteForceOpt(instance, args.node_limit);
  const FractionalSolution lp = SolveLp(instance);
  json doc;
  doc["value"] = exact.value;
  doc["x"] = ToIntList(exact.argmax);
  doc["nodes"] = exact.nodes_explored;
  doc["lpOpt"] = lp.objective;
  Sink sink(args.common.out, out);
  sink.stream() << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Round-and-alter approximation for packing integer programs"};
  app.name("pipround");
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  AddCommon(solve_cmd, solve.common);
  solve_cmd->add_option("--input", solve.input, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--regime", solve.regime)
      ->check(CLI::IsMember({"auto", "weak", "strong", "largew", "smallwidth"}));
  solve_cmd->add_option("--eps", solve.eps, "LargeW eps, also the auto hint")
      ->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--trials", solve.trials)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threads", solve.threads)->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--force-heuristic", solve.force_heuristic,
                      "Run width-1 instances without a guarantee");
  solve_cmd->add_option("--mode", solve.mode)
      ->check(CLI::IsMember({"cascaded", "isolated"}));
  solve_cmd->add_flag("--unsorted-baseline", solve.unsorted_baseline,
                      "Alter in column order instead of sorted order");
  solve_cmd->add_option("--dump-basis", solve.dump_basis,
                        "Write the final LP basis to this file");
  solve_cmd->add_option("--trials-csv", solve.trials_csv,
                        "Write per-trial statistics to this file");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  AddCommon(gen_cmd, gen.common);
  gen_cmd->add_option("--kind", gen.kind)
      ->check(CLI::IsMember({"random", "knapsack", "mis", "sparse", "mixed"}));
  gen_cmd->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--width", gen.width);
  gen_cmd->add_option("--density", gen.density);
  gen_cmd->add_option("--eps", gen.eps);
  gen_cmd->add_option("--column-nnz", gen.column_nnz);
  gen_cmd->add_option("--profile", gen.profile)
      ->check(CLI::IsMember({"uniform", "small", "smallItems", "mixed",
                             "mixedBigSmall"}));
  gen_cmd->add_option("--graph", gen.graph,
                      "k N | path N | random N P | file PATH")
      ->expected(2, 3);
  gen_cmd->add_option("--layout", gen.layout)
      ->check(CLI::IsMember({"dense", "sparse"}));

  ExperimentArgs experiment;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Run a sweep spec and write a CSV");
  AddCommon(experiment_cmd, experiment.common);
  experiment_cmd->add_option("--spec", experiment.spec, "Sweep spec JSON")
      ->required()
      ->check(CLI::ExistingFile);
  experiment_cmd->add_option("--threads", experiment.threads)
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-bounds", "Check the tail bound and inequalities on their grids");
  AddCommon(verify_cmd, verify.common);
  verify_cmd->add_option("--draws", verify.draws)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", verify.samples)->check(CLI::PositiveNumber);

  OracleArgs oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Exact optimum by branch and bound");
  AddCommon(oracle_cmd, oracle.common);
  oracle_cmd->add_option("--input", oracle.input, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--node-limit", oracle.node_limit)
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("pipround");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve, out, err);
    if (*gen_cmd) return RunGen(gen, out, err);
    if (*experiment_cmd) return RunExperiment(experiment, out, err);
    if (*verify_cmd) return RunVerifyBounds(verify, out, err);
    if (*oracle_cmd) return RunOracle(oracle, out, err);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kWidthOne ? kExitHardness : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pipround::cli

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

#include "pipround/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <mutex>
#include <numbers>
#include <thread>

#include "json.hpp"
#include "pipround/error.h"
#include "pipround/generators.h"
#include "pipround/instance_io.h"
#include "pipround/oracle.h"
#include "pipround/random.h"

namespace pipround {

namespace {

struct SortedEntry {
  double coef;
  int col;
  int pair;  // index into RejectionReport::pairs, -1 outside supp(x)
};

template <typename Body>
void ParallelFor(int64_t count, int threads, Body body) {
  threads = static_cast<int>(std::clamp<int64_t>(threads, 1, std::max<int64_t>(count, 1)));
  if (threads == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int c = 0; c < threads; ++c) {
    pool.emplace_back(body, c, count * c / threads, count * (c + 1) / threads);
  }
  for (std::thread& t : pool) t.join();
}

double PairBound(const RegimeConfig& cfg, double coef, double delta1) {
  if (cfg.regime == Regime::kLargeW) {
    return std::numbers::e * cfg.eps * coef / delta1;
  }
  return coef / (2.0 * delta1);
}

}  // namespace

double WilsonHalfWidth(int64_t successes, int64_t n, double z) {
  if (n <= 0) return 1.0;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  return z / (1.0 + z2 / nn) *
         std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
}

double RejectionReport::MaxPairExcess(double k) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const PairRejection& p : pairs) {
    worst = std::max(worst,
                     p.estimate - (p.analytic_bound + k * p.wilson_half_width));
  }
  return worst;
}

double RejectionReport::MaxItemExcess(double k) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const ItemRejection& it : items) {
    worst = std::max(worst,
                     it.sum_estimate - (config.gamma + k * it.sum_half_width));
  }
  return worst;
}

double RejectionReport::MaxItemSum() const {
  double worst = 0.0;
  for (const ItemRejection& it : items) worst = std::max(worst, it.sum_estimate);
  return worst;
}

RejectionReport EstimateRejections(const NormalizedInstance& inst,
                                   const FractionalSolution& lp,
                                   const RegimeConfig& config, int64_t trials,
                                   AlterationMode mode, uint64_t seed,
                                   int threads) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const PipInstance& a = inst.base;
  const int n = a.num_cols();
  const int m = a.num_rows();
  const bool small_width = SchemeFor(config) == AlterationScheme::kSmallWidth;
  if (small_width && !(config.eps > 0.0 && config.eps <= 1.0)) {
    throw Error(ErrorCode::kEpsOutOfRange, "small-width config without eps");
  }
  const double half_eps = config.eps / 2.0;

  RejectionReport report;
  report.mode = mode;
  report.config = config;
  report.trials = trials;

  // Pairs in row-major order, and per-row entries in alteration order.
  std::vector<std::vector<SortedEntry>> rows(m);
  std::vector<std::vector<std::pair<int, int>>> pairs_of_col(n);  // (row, pair)
  for (int i = 0; i < m; ++i) {
    for (const MatrixEntry& e : a.row(i)) {
      if (!(e.value > 0.0)) continue;
      int pair = -1;
      if (lp.x[e.index] > 0.0) {
        pair = static_cast<int>(report.pairs.size());
        PairRejection p;
        p.row = i;
        p.col = e.index;
        p.coefficient = e.value;
        p.big = small_width && e.value > half_eps;
        p.analytic_bound = PairBound(config, e.value, inst.delta1);
        report.pairs.push_back(p);
        pairs_of_col[e.index].emplace_back(i, pair);
      }
      rows[i].push_back({e.value, e.index, pair});
    }
    std::sort(rows[i].begin(), rows[i].end(),
              [](const SortedEntry& x, const SortedEntry& y) {
                if (x.coef != y.coef) return x.coef < y.coef;
                return x.col < y.col;
              });
  }

  const int workers = static_cast<int>(std::clamp<int64_t>(threads, 1, trials));
  std::vector<std::vector<int64_t>> counts(
      workers, std::vector<int64_t>(report.pairs.size(), 0));

  auto isolated = [&](int worker, int64_t lo, int64_t hi) {
    std::vector<int64_t>& count = counts[worker];
    for (int64_t t = lo; t < hi; ++t) {
      RandomStream rng = RandomStream::ForTrial(seed, static_cast<uint64_t>(t));
      const std::vector<uint8_t> x_prime = IndependentRound(lp.x, config.alpha, rng);
      for (int i = 0; i < m; ++i) {
        // Load of the rounded items strictly before the current entry,
        // excluding the entry itself (it is the forced item).
        double prefix = 0.0;
        int bigs_before = 0;
        for (const SortedEntry& e : rows[i]) {
          const bool is_big = small_width && e.coef > half_eps;
          if (e.pair >= 0) {
            bool rejected;
            if (!small_width) {
              rejected = prefix + e.coef > inst.width + kFeasibilityTolerance;
            } else if (is_big) {
              rejected = bigs_before > 0;
            } else {
              rejected = prefix + e.coef > config.eps + kFeasibilityTolerance;
            }
            if (rejected) ++count[e.pair];
          }
          if (x_prime[e.col]) {
            if (is_big) {
              ++bigs_before;
            } else {
              prefix += e.coef;
            }
          }
        }
      }
    }
  };

  auto cascaded = [&](int worker, int64_t lo, int64_t hi) {
    std::vector<int64_t>& count = counts[worker];
    auto record = [&](const RoundingOutcome& outcome, int j) {
      for (const Rejection& r : outcome.rejections) {
        if (r.col != j) continue;
        for (const auto& [row, pair] : pairs_of_col[j]) {
          if (row == r.row) ++count[pair];
        }
        return;
      }
    };
    for (int64_t t = lo; t < hi; ++t) {
      RandomStream rng = RandomStream::ForTrial(seed, static_cast<uint64_t>(t));
      std::vector<uint8_t> x_prime = IndependentRound(lp.x, config.alpha, rng);
      const RoundingOutcome base =
          Alter(inst, config, x_prime, AlterationMode::kCascaded);
      for (int j = 0; j < n; ++j) {
        if (pairs_of_col[j].empty()) continue;
        if (x_prime[j]) {
          record(base, j);
          continue;
        }
        x_prime[j] = 1;
        record(Alter(inst, config, x_prime, AlterationMode::kCascaded), j);
        x_prime[j] = 0;
      }
    }
  };

  if (mode == AlterationMode::kIsolated) {
    ParallelFor(trials, workers, isolated);
  } else {
    ParallelFor(trials, workers, cascaded);
  }

  for (size_t p = 0; p < report.pairs.size(); ++p) {
    PairRejection& pr = report.pairs[p];
    for (const auto& c : counts) pr.rejections += c[p];
    pr.conditioned_samples = trials;
    pr.estimate = static_cast<double>(pr.rejections) / static_cast<double>(trials);
    pr.wilson_half_width = WilsonHalfWidth(pr.rejections, trials);
  }
  report.low_sample_warning = trials < 100 && !report.pairs.empty();
  for (int j = 0; j < n; ++j) {
    if (pairs_of_col[j].empty()) continue;
    ItemRejection item;
    item.col = j;
    for (const auto& [row, pair] : pairs_of_col[j]) {
      const PairRejection& pr = report.pairs[pair];
      item.sum_estimate += pr.estimate;
      item.sum_half_width += pr.wilson_half_width;
      item.sum_bound += pr.analytic_bound;
    }
    report.items.push_back(item);
  }
  return report;
}

// --- Sweeps -----------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void SpecFail(const std::string& message) {
  throw Error(ErrorCode::kParseError, "sweep spec: " + message);
}

template <typename T>
T Field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj[key].get<T>();
  } catch (const json::exception&) {
    SpecFail(std::string("bad value for \"") + key + "\"");
  }
}

std::string FormatReal(double v) {
  if (std::isnan(v)) return "";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", v);
  return buffer;
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

PipInstance BuildInstance(const InstanceSpec& spec, uint64_t seed) {
  if (spec.kind == "random") {
    return RandomInstance(spec.n, spec.m, spec.width, spec.density, seed);
  }
  if (spec.kind == "sparse_column") {
    return SparseColumnInstance(spec.n, spec.m, spec.width, spec.column_nnz, seed);
  }
  if (spec.kind == "mixed") {
    return MixedWidthInstance(spec.n, spec.m, spec.eps, spec.density, seed);
  }
  if (spec.kind == "knapsack") {
    return KnapsackInstance(spec.n, spec.width,
                            ParseKnapsackProfile(spec.profile), seed);
  }
  if (spec.kind == "mis") {
    if (spec.graph == "complete") return MisToPip(CompleteGraph(spec.vertices));
    if (spec.graph == "path") return MisToPip(PathGraph(spec.vertices));
    if (spec.graph == "random") {
      return MisToPip(RandomGraph(spec.vertices, spec.edge_probability, seed));
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown graph \"" + spec.graph + "\"");
  }
  if (spec.kind == "file") return ReadInstanceFile(spec.path);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown instance kind \"" + spec.kind + "\"");
}

struct PreparedInstance {
  std::string name;
  std::optional<NormalizedInstance> normalized;
  FractionalSolution lp;
  std::optional<double> ip_opt;
  std::string error;
};

PreparedInstance Prepare(const SweepSpec& spec, size_t index, uint64_t master) {
  const InstanceSpec& is = spec.instances[index];
  PreparedInstance out;
  out.name = is.name.empty() ? is.kind + std::to_string(index) : is.name;
  try {
    const uint64_t seed =
        is.seed.value_or(RandomStream::DeriveSeed(master, 1'000'000 + index));
    out.normalized = Normalize(BuildInstance(is, seed));
    out.lp = SolveLp(*out.normalized);
    if (out.normalized->num_cols() <= std::min(spec.oracle_max_n, kMaxOracleColumns)) {
      try {
        out.ip_opt = BruteForceOpt(out.normalized->base, spec.oracle_node_limit).value;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNodeLimit) throw;
      }
    }
  } catch (const Error& e) {
    out.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  return out;
}

}  // namespace

SweepSpec ParseSweepSpec(std::string_view json_text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    SpecFail(e.what());
  }
  if (!doc.is_object()) SpecFail("top level must be an object");
  SweepSpec spec;
  if (doc.contains("regimes")) {
    if (doc["regimes"].is_string()) {
      spec.regimes = {doc["regimes"].get<std::string>()};
    } else {
      spec.regimes = Field<std::vector<std::string>>(doc, "regimes", {});
    }
  }
  if (doc.contains("trials")) {
    if (doc["trials"].is_number_integer()) {
      spec.trials = {doc["trials"].get<int64_t>()};
    } else {
      spec.trials = Field<std::vector<int64_t>>(doc, "trials", {});
    }
  }
  for (int64_t t : spec.trials) {
    if (t < 1) SpecFail("trial counts must be >= 1");
  }
  if (doc.contains("eps")) spec.eps = Field<double>(doc, "eps", 0.0);
  if (doc.contains("rejection_trials")) {
    spec.rejection_trials = Field<int64_t>(doc, "rejection_trials", 0);
  }
  spec.oracle_max_n = Field<int>(doc, "oracle_max_n", spec.oracle_max_n);
  spec.oracle_node_limit =
      Field<int64_t>(doc, "oracle_node_limit", spec.oracle_node_limit);
  spec.force_heuristic = Field<bool>(doc, "force_heuristic", false);
  if (doc.contains("instances")) {
    if (!doc["instances"].is_array()) SpecFail("\"instances\" must be an array");
    for (const json& item : doc["instances"]) {
      if (!item.is_object()) SpecFail("instance entries must be objects");
      InstanceSpec is;
      is.name = Field<std::string>(item, "name", "");
      is.kind = Field<std::string>(item, "kind", is.kind);
      is.n = Field<int>(item, "n", is.n);
      is.m = Field<int>(item, "m", is.m);
      is.width = Field<double>(item, "width", is.width);
      is.density = Field<double>(item, "density", is.density);
      is.eps = Field<double>(item, "eps", is.eps);
      is.column_nnz = Field<int>(item, "column_nnz", is.column_nnz);
      is.profile = Field<std::string>(item, "profile", is.profile);
      is.graph = Field<std::string>(item, "graph", is.graph);
      is.vertices = Field<int>(item, "vertices", is.vertices);
      is.edge_probability = Field<double>(item, "p", is.edge_probability);
      if (item.contains("seed")) is.seed = Field<uint64_t>(item, "seed", 0);
      is.path = Field<std::string>(item, "path", "");
      if (is.kind == "file" && !is.path.empty() &&
          std::filesystem::path(is.path).is_relative()) {
        is.path = (std::filesystem::path(base_dir) / is.path).string();
      }
      spec.instances.push_back(std::move(is));
    }
  }
  return spec;
}

const std::vector<std::string>& SweepColumns() {
  static const std::vector<std::string> columns{
      "cell",       "instance",   "n",           "m",
      "W",          "delta0",     "delta1",      "regime",
      "alpha",      "eps",        "trials",      "seed",
      "lp_opt",     "ip_opt",     "mean_value",  "std_error",
      "best_value", "ratio_vs_lp", "ratio_vs_ip", "max_item_rejection_sum",
      "infeasible_trials", "wall_ms", "error"};
  return columns;
}

int RunSweep(const SweepSpec& spec, const SweepOptions& options,
             std::ostream& out) {
  if (!options.deterministic) {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << stamp << "\n";
  }
  const auto& columns = SweepColumns();
  for (size_t k = 0; k < columns.size(); ++k) {
    out << (k ? "," : "") << columns[k];
  }
  out << "\n";
  out.flush();

  const size_t num_instances = spec.instances.size();
  const size_t cells_per_instance = spec.regimes.size() * spec.trials.size();
  const size_t num_cells = num_instances * cells_per_instance;
  if (num_cells == 0) return 0;

  std::vector<PreparedInstance> prepared(num_instances);
  ParallelFor(static_cast<int64_t>(num_instances), options.threads,
              [&](int, int64_t lo, int64_t hi) {
                for (int64_t k = lo; k < hi; ++k) {
                  prepared[k] = Prepare(spec, static_cast<size_t>(k), options.seed);
                }
              });

  std::vector<std::optional<std::string>> rows(num_cells);
  std::atomic<int> failures{0};
  std::mutex output_mutex;
  size_t next_to_write = 0;
  std::atomic<size_t> next_cell{0};

  auto run_cell = [&](size_t cell) {
    const size_t instance_index = cell / cells_per_instance;
    const std::string& regime_name =
        spec.regimes[(cell % cells_per_instance) / spec.trials.size()];
    const int64_t trials = spec.trials[cell % spec.trials.size()];
    const uint64_t cell_seed = RandomStream::DeriveSeed(options.seed, cell);
    const PreparedInstance& prep = prepared[instance_index];
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::string> f(columns.size());
    f[0] = std::to_string(cell);
    f[1] = prep.name;
    f[7] = regime_name;
    f[10] = std::to_string(trials);
    f[11] = std::to_string(cell_seed);
    std::string error = prep.error;
    if (prep.normalized) {
      const NormalizedInstance& inst = *prep.normalized;
      f[2] = std::to_string(inst.num_cols());
      f[3] = std::to_string(inst.num_rows());
      f[4] = FormatReal(inst.width);
      f[5] = std::to_string(inst.delta0);
      f[6] = FormatReal(inst.delta1);
      f[12] = FormatReal(prep.lp.objective);
      if (prep.ip_opt) f[13] = FormatReal(*prep.ip_opt);
      try {
        RegimeConfig cfg;
        if (regime_name == "auto") {
          try {
            cfg = SelectRegime(inst, spec.eps);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kWidthOne || !spec.force_heuristic) throw;
            cfg = HeuristicConfig(inst);
          }
        } else {
          cfg = ConfigFor(ParseRegime(regime_name), inst, spec.eps);
        }
        f[7] = std::string(RegimeName(cfg.regime)) + (cfg.heuristic ? "-heuristic" : "");
        f[8] = FormatReal(cfg.alpha);
        f[9] = FormatReal(cfg.eps);
        const RoundAndAlterResult r =
            RoundAndAlter(inst, prep.lp, cfg, trials, cell_seed);
        f[14] = FormatReal(r.mean_value);
        f[15] = FormatReal(r.std_error);
        f[16] = FormatReal(r.best.value);
        f[17] = FormatReal(prep.lp.objective > 0 ? r.mean_value / prep.lp.objective : 1.0);
        if (prep.ip_opt) {
          f[18] = FormatReal(*prep.ip_opt > 0 ? r.mean_value / *prep.ip_opt : 1.0);
        }
        const int64_t rejection_trials = spec.rejection_trials.value_or(trials);
        if (rejection_trials > 0) {
          const RejectionReport rep = EstimateRejections(
              inst, prep.lp, cfg, rejection_trials, AlterationMode::kIsolated,
              RandomStream::DeriveSeed(cell_seed, 1));
          f[19] = FormatReal(rep.MaxItemSum());
        }
        f[20] = std::to_string(r.infeasible_trials);
      } catch (const Error& e) {
        error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
      }
    }
    if (!error.empty()) failures.fetch_add(1);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    f[21] = options.deterministic ? "0" : FormatReal(std::round(elapsed.count()));
    f[22] = error;

    std::string line;
    for (size_t k = 0; k < f.size(); ++k) {
      if (k) line += ',';
      line += CsvQuote(f[k]);
    }
    line += '\n';

    std::lock_guard<std::mutex> lock(output_mutex);
    rows[cell] = std::move(line);
    while (next_to_write < num_cells && rows[next_to_write]) {
      out << *rows[next_to_write];
      rows[next_to_write].reset();
      ++next_to_write;
    }
    out.flush();
  };

  ParallelFor(static_cast<int64_t>(num_cells), options.threads,
              [&](int, int64_t, int64_t) {
                for (size_t cell = next_cell.fetch_add(1); cell < num_cells;
                     cell = next_cell.fetch_add(1)) {
                  run_cell(cell);
                }
              });
  return failures.load();
}

}  // namespace pipround

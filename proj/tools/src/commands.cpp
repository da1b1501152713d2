#include "shannon/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "shannon/deterministic.hpp"
#include "shannon/local_sim.hpp"
#include "shannon/mssa.hpp"
#include "shannon/vizing.hpp"

namespace shannon::cli {

using Json = nlohmann::ordered_json;

namespace {

Json line(std::string_view event) {
  Json j;
  j["v"] = kStatsVersion;
  j["event"] = event;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes text to path, or to `out` for "-". Returns false on I/O failure.
bool write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) return true;
  if (path == "-") {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  return static_cast<bool>(f);
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const std::string& l : lines) {
    s += l;
    s += '\n';
  }
  return s;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw FormatError("not an integer: " + std::string(s));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int resolve_mult(const std::string& token, int max_degree) {
  if (token == "half") return (max_degree + 1) / 2;
  if (token == "full") return max_degree;
  return parse_int(token);
}

Json summary(const Multigraph& g, const RunConfig& cfg, const VerificationReport& rep) {
  Json j = line("summary");
  j["algorithm"] = algorithm_name(cfg.algorithm);
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["max_degree"] = g.max_degree();
  j["max_mult"] = g.max_multiplicity();
  j["bound"] = rep.bound;
  j["colors_used"] = rep.colors_used;
  j["proper"] = rep.proper;
  j["uncolored"] = rep.uncolored;
  return j;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "det") return Algorithm::kDet;
  if (name == "seq") return Algorithm::kSeq;
  if (name == "dist") return Algorithm::kDist;
  if (name == "vizing") return Algorithm::kVizing;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kDet: return "det";
    case Algorithm::kSeq: return "seq";
    case Algorithm::kDist: return "dist";
    case Algorithm::kVizing: return "vizing";
  }
  return "?";
}

int algorithm_bound(Algorithm a, const Multigraph& g) {
  int b = a == Algorithm::kVizing ? vizing_bound(g.max_degree(), g.max_multiplicity()) : shannon_bound(g.max_degree());
  return std::max(1, b);
}

std::string validate(const RunConfig& cfg) {
  if (cfg.ell && cfg.algorithm != Algorithm::kSeq && cfg.algorithm != Algorithm::kDist) {
    return "--ell applies only to seq and dist";
  }
  if (cfg.budget && cfg.algorithm != Algorithm::kDist) return "--budget applies only to dist";
  if (cfg.ell && *cfg.ell < 3) return "--ell must be at least 3";
  if (cfg.budget && *cfg.budget < 1) return "--budget must be positive";
  return {};
}

bool debug_invariants_from_env() {
  const char* v = std::getenv("SHANNON_DEBUG_INVARIANTS");
  return v != nullptr && std::string_view(v) == "1";
}

ColorRun run_color(const Multigraph& g, const RunConfig& cfg) {
  ColorRun run;
  const int bound = algorithm_bound(cfg.algorithm, g);
  Json extra;
  switch (cfg.algorithm) {
    case Algorithm::kDet: {
      DeterministicResult r = color_deterministic(g);
      for (std::size_t i = 0; i < r.batches.size(); ++i) {
        const BatchStats& b = r.batches[i];
        Json j = line("batch");
        j["iteration"] = i;
        j["pair"] = {b.pair.first, b.pair.second};
        j["buckets"] = b.bucket_count;
        j["bucket_sizes"] = b.bucket_sizes;
        j["batch_size"] = b.batch_size;
        j["chains_computed"] = b.chains_computed;
        j["chains_augmented"] = b.chains_augmented;
        j["progress"] = b.dom_after - b.dom_before;
        j["dom"] = b.dom_after;
        run.stats.push_back(j.dump());
      }
      extra["iterations"] = r.iterations;
      run.colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
      break;
    }
    case Algorithm::kSeq: {
      SequentialParams p;
      p.ell = cfg.ell.value_or(0);
      p.seed = cfg.seed;
      p.debug_invariants = cfg.debug_invariants;
      p.keep_records = true;
      SequentialResult r = color_sequential_random(g, p);
      for (const ExecutionRecord& rec : r.records) {
        Json j = line("mssa");
        j["edge"] = rec.edge;
        j["pivot"] = rec.pivot;
        j["d"] = rec.d;
        j["iterations"] = rec.iterations;
        j["chain_length"] = rec.chain_length;
        j["outcome"] = rec.outcome == MssaOutcome::kSuccess ? "success" : "budget_exhausted";
        run.stats.push_back(j.dump());
      }
      extra["ell"] = p.ell > 0 ? p.ell : default_ell(g.max_degree());
      extra["seed"] = cfg.seed;
      extra["total_iterations"] = r.total_iterations;
      extra["total_chain_length"] = r.total_chain_length;
      extra["max_chain_length"] = r.max_chain_length;
      run.colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
      break;
    }
    case Algorithm::kDist: {
      DistributedParams p;
      p.ell = cfg.ell.value_or(0);
      p.budget = cfg.budget.value_or(0);
      p.seed = cfg.seed;
      p.debug_invariants = cfg.debug_invariants;
      DistributedResult r = color_distributed(g, p);
      for (const StageResult& s : r.stage_log) {
        Json j = line("stage");
        j["stage"] = s.stage;
        j["uncolored"] = s.uncolored;
        j["survivors"] = s.survivors.size();
        j["conflict_edges"] = s.conflict_edges;
        j["mean_deg"] = s.survivors.empty() ? 0.0 : 2.0 * static_cast<double>(s.conflict_edges) /
                                                          static_cast<double>(s.survivors.size());
        j["independent"] = s.independent.size();
        j["colored"] = s.colored;
        j["rounds_charged"] = s.rounds_charged;
        j["mssa_iterations"] = s.mssa_iterations;
        run.stats.push_back(j.dump());
      }
      extra["ell"] = r.ell;
      extra["budget"] = r.budget;
      extra["seed"] = cfg.seed;
      extra["stages"] = r.stages;
      extra["rounds"] = r.rounds;
      extra["rounds_per_stage_factor"] = kRoundsPerStage;
      run.colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
      break;
    }
    case Algorithm::kVizing: {
      VizingStats vs;
      PartialColoring phi = color_vizing(g, &vs);
      extra["fan_length_total"] = vs.fan_length_total;
      extra["path_length_total"] = vs.path_length_total;
      extra["max_chain_length"] = vs.max_chain_length;
      run.colors.assign(phi.colors().begin(), phi.colors().end());
      break;
    }
  }
  run.report = verify(g, run.colors, bound);
  Json s = summary(g, cfg, run.report);
  for (auto& [k, v] : extra.items()) s[k] = v;
  run.stats.push_back(s.dump());
  return run;
}

Multigraph load_graph(const GraphSource& src) {
  if (!src.path.empty()) return read_graph_file(src.path);
  if (src.extremal) return shannon_extremal(*src.extremal);
  return random_multigraph(src.n, src.max_degree, src.max_mult, src.seed);
}

int cmd_generate(const GraphSource& src, const std::string& out_path, std::ostream& out, std::ostream& err) {
  Multigraph g;
  try {
    g = load_graph(src);
  } catch (const std::exception& ex) {
    err << "generate: " << ex.what() << '\n';
    return kExitConfig;
  }
  if (!write_text(out_path.empty() ? "-" : out_path, g.serialize(), out)) {
    err << "generate: cannot write " << out_path << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

int cmd_color(const GraphSource& src, const RunConfig& cfg, const std::string& out_path,
              const std::string& stats_path, std::ostream& out, std::ostream& err) {
  if (std::string why = validate(cfg); !why.empty()) {
    err << "color: " << why << '\n';
    return kExitConfig;
  }
  Multigraph g;
  try {
    g = load_graph(src);
  } catch (const std::exception& ex) {
    err << "color: " << ex.what() << '\n';
    return kExitConfig;
  }
  ColorRun run;
  try {
    run = run_color(g, cfg);
  } catch (const std::exception& ex) {
    err << "color: solver failed: " << ex.what() << '\n';
    return kExitVerify;
  }
  if (!write_text(out_path, serialize_coloring(g, run.colors), out) ||
      !write_text(stats_path, join_lines(run.stats), out)) {
    err << "color: cannot write output\n";
    return kExitConfig;
  }
  if (!run.report.ok()) {
    err << "color: output failed verification (proper=" << run.report.proper
        << ", uncolored=" << run.report.uncolored << ", colors=" << run.report.colors_used
        << ", bound=" << run.report.bound << ")\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& bound,
               std::ostream& out, std::ostream& err) {
  Multigraph g;
  std::vector<Color> colors;
  int k = 0;
  try {
    g = read_graph_file(graph_path);
    colors = parse_coloring(g, read_file(coloring_path));
    const int sb = shannon_bound(g.max_degree());
    const int vb = vizing_bound(g.max_degree(), g.max_multiplicity());
    if (bound.empty()) {
      k = std::max(sb, vb);
    } else if (bound == "shannon") {
      k = sb;
    } else if (bound == "vizing") {
      k = vb;
    } else {
      k = parse_int(bound);
    }
  } catch (const std::exception& ex) {
    err << "verify: " << ex.what() << '\n';
    return kExitConfig;
  }
  VerificationReport rep = verify(g, colors, std::max(1, k));
  Json j = line("verify");
  j["proper"] = rep.proper;
  j["uncolored"] = rep.uncolored;
  j["colors_used"] = rep.colors_used;
  j["bound"] = rep.bound;
  j["violations"] = rep.violations.size();
  j["ok"] = rep.ok();
  out << j.dump() << '\n';
  for (const Violation& v : rep.violations) {
    err << "verify: edges " << v.e << " and " << v.f << " share color " << v.color << '\n';
  }
  return rep.ok() ? kExitOk : kExitVerify;
}

BenchSpec parse_grid(std::string_view text) {
  BenchSpec spec;
  spec.max_mult = {"1"};
  for (std::string_view part : split(text, ';')) {
    if (part.empty()) continue;
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw FormatError("grid entry without '=': " + std::string(part));
    std::string_view key = part.substr(0, eq);
    std::vector<std::string_view> values = split(part.substr(eq + 1), ',');
    if (key == "n") {
      spec.n.clear();
      for (auto v : values) spec.n.push_back(parse_int(v));
    } else if (key == "d") {
      spec.max_degree.clear();
      for (auto v : values) spec.max_degree.push_back(parse_int(v));
    } else if (key == "mu") {
      spec.max_mult.clear();
      for (auto v : values) {
        if (v != "half" && v != "full") parse_int(v);
        spec.max_mult.emplace_back(v);
      }
    } else if (key == "seeds") {
      spec.seeds = parse_int(values.at(0));
    } else {
      throw FormatError("unknown grid key: " + std::string(key));
    }
  }
  if (spec.n.empty() || spec.max_degree.empty()) throw FormatError("grid needs n and d");
  if (spec.seeds < 1) throw FormatError("grid needs seeds >= 1");
  return spec;
}

int cmd_bench(const BenchSpec& spec, const RunConfig& cfg, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  if (std::string why = validate(cfg); !why.empty()) {
    err << "bench: " << why << '\n';
    return kExitConfig;
  }
  std::vector<std::string> lines;
  bool all_ok = true;
  std::uint64_t cell = 0;
  for (int n : spec.n) {
    for (int d : spec.max_degree) {
      for (const std::string& mu_token : spec.max_mult) {
        int mu = 0;
        try {
          mu = resolve_mult(mu_token, d);
        } catch (const std::exception& ex) {
          err << "bench: " << ex.what() << '\n';
          return kExitConfig;
        }
        ++cell;
        std::map<int, std::int64_t> hist;
        double wall_total = 0;
        double wall_max = 0;
        double edges_total = 0;
        double count_total = 0;
        std::int64_t count_max = 0;
        double ratio_total = 0;
        double min_fraction = 1.0;
        bool ok = true;
        for (int s = 0; s < spec.seeds; ++s) {
          Multigraph g;
          try {
            g = random_multigraph(n, d, mu, Rng::stream(cfg.seed, cell, static_cast<std::uint64_t>(s)).next());
          } catch (const std::exception& ex) {
            err << "bench: " << ex.what() << '\n';
            return kExitConfig;
          }
          const auto t0 = std::chrono::steady_clock::now();
          std::vector<Color> colors;
          std::int64_t count = 0;
          try {
            switch (cfg.algorithm) {
              case Algorithm::kDet: {
                DeterministicResult r = color_deterministic(g, true);
                count = r.iterations;
                for (const BatchStats& b : r.batches) {
                  for (const auto& c : b.augmented) ++hist[static_cast<int>(c.size())];
                }
                colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
                break;
              }
              case Algorithm::kSeq: {
                SequentialParams p;
                p.ell = cfg.ell.value_or(0);
                p.seed = cfg.seed + static_cast<std::uint64_t>(s);
                p.keep_records = true;
                SequentialResult r = color_sequential_random(g, p);
                count = r.total_iterations;
                for (const ExecutionRecord& rec : r.records) ++hist[rec.chain_length];
                colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
                break;
              }
              case Algorithm::kDist: {
                DistributedParams p;
                p.ell = cfg.ell.value_or(0);
                p.budget = cfg.budget.value_or(0);
                p.seed = cfg.seed + static_cast<std::uint64_t>(s);
                DistributedResult r = color_distributed(g, p, [&](const StageResult& st, PartialColoring&) {
                  for (int i : st.independent) ++hist[static_cast<int>(st.chains[i].edges().size())];
                });
                count = r.stages;
                for (const StageResult& st : r.stage_log) {
                  if (st.uncolored > 0) {
                    min_fraction = std::min(min_fraction, static_cast<double>(st.colored) / st.uncolored);
                  }
                }
                colors.assign(r.coloring.colors().begin(), r.coloring.colors().end());
                break;
              }
              case Algorithm::kVizing: {
                VizingStats vs;
                PartialColoring phi = color_vizing(g, &vs);
                count = vs.fan_length_total + vs.path_length_total;
                colors.assign(phi.colors().begin(), phi.colors().end());
                break;
              }
            }
          } catch (const std::exception& ex) {
            err << "bench: solver failed: " << ex.what() << '\n';
            ok = false;
            continue;
          }
          const double ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
          wall_total += ms;
          wall_max = std::max(wall_max, ms);
          edges_total += g.num_edges();
          count_total += static_cast<double>(count);
          count_max = std::max(count_max, count);
          if (g.num_edges() > 0) ratio_total += static_cast<double>(count) / g.num_edges();
          ok = ok && verify(g, colors, algorithm_bound(cfg.algorithm, g)).ok();
        }
        all_ok = all_ok && ok;
        const double k = spec.seeds;
        Json j = line("bench_cell");
        j["algorithm"] = algorithm_name(cfg.algorithm);
        j["n"] = n;
        j["max_degree"] = d;
        j["max_mult"] = mu;
        j["seeds"] = spec.seeds;
        j["edges_mean"] = edges_total / k;
        j["ok"] = ok;
        switch (cfg.algorithm) {
          case Algorithm::kDet:
            j["iterations_mean"] = count_total / k;
            j["iterations_max"] = count_max;
            break;
          case Algorithm::kSeq:
            j["total_iterations_mean"] = count_total / k;
            j["t_over_m_mean"] = ratio_total / k;
            break;
          case Algorithm::kDist:
            j["stages_mean"] = count_total / k;
            j["stages_max"] = count_max;
            j["min_stage_colored_fraction"] = min_fraction;
            break;
          case Algorithm::kVizing:
            j["chain_edges_per_edge_mean"] = ratio_total / k;
            break;
        }
        Json h = Json::object();
        for (auto [len, c] : hist) h[std::to_string(len)] = c;
        j["chain_length_hist"] = h;
        j["wall_ms_mean"] = wall_total / k;
        j["wall_ms_max"] = wall_max;
        lines.push_back(j.dump());
        if (out_path.empty() || out_path == "-") out << lines.back() << '\n' << std::flush;
      }
    }
  }
  if (!out_path.empty() && out_path != "-" && !write_text(out_path, join_lines(lines), out)) {
    err << "bench: cannot write " << out_path << '\n';
    return kExitConfig;
  }
  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace shannon::cli

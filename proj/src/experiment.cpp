// Copyright 2026 The sketchsdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "encoding.hpp"
#include "errors.hpp"
#include "sbm.hpp"
#include "theory.hpp"

namespace sketchsdp {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("expected a number, got '" + std::string(s) + "'", line);
  return v;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line);
  }
  return v;
}

bool parse_bool(std::string_view s, std::size_t line) {
  const std::string v = lower(std::string(s));
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ParseError("expected a boolean, got '" + std::string(s) + "'", line);
}

// Shortest representation that round-trips.
std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

// One CSV record; quoted fields may span lines.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch = 0;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

}  // namespace

std::string_view to_string(Method m) noexcept { return m == Method::kFullSdp ? "FULL_SDP" : "SKETCH"; }

std::string_view to_string(MuPolicy m) noexcept {
  switch (m) {
    case MuPolicy::kAuto:
      return "auto";
    case MuPolicy::kHalf:
      return "half";
    case MuPolicy::kGoemansWilliamson:
      return "gw";
    case MuPolicy::kOracle:
      return "oracle";
  }
  return "auto";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  const std::string t = lower(std::string(text));
  if (t == "full" || t == "full_sdp" || t == "full-sdp") return Method::kFullSdp;
  if (t == "sketch") return Method::kSketch;
  return std::nullopt;
}

std::optional<MuPolicy> parse_mu_policy(std::string_view text) noexcept {
  const std::string t = lower(std::string(text));
  if (t == "auto") return MuPolicy::kAuto;
  if (t == "half") return MuPolicy::kHalf;
  if (t == "gw") return MuPolicy::kGoemansWilliamson;
  if (t == "oracle") return MuPolicy::kOracle;
  return std::nullopt;
}

void GridSpec::validate() const {
  if (alphas.empty() || betas.empty()) throw InvalidArgument("grid needs at least one alpha and one beta");
  if (reps == 0) throw InvalidArgument("reps must be positive");
  if (methods.empty()) throw InvalidArgument("grid needs at least one method");
  if (n1.has_value() != n2.has_value()) throw InvalidArgument("n1 and n2 must be given together");
  if (n1) {
    if (*n1 == 0 || *n2 == 0) throw InvalidArgument("community sizes must be positive");
  } else if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("n must be an even integer >= 2");
  }
  if (gamma && !(*gamma > 0.0 && *gamma <= 1.0)) throw InvalidArgument("gamma must lie in (0,1]");
  for (double a : alphas) {
    if (!(a > 0.0)) throw InvalidArgument("alphas must be positive");
  }
  for (double b : betas) {
    if (!(b > 0.0)) throw InvalidArgument("betas must be positive");
  }
  solver.validate();
}

GridSpec parse_grid_spec(std::istream& in) {
  GridSpec spec;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto sep = text.find_first_of("=:");
    if (sep == std::string::npos) throw ParseError("expected 'key = value'", line);
    const std::string key = lower(trim(std::string_view(text).substr(0, sep)));
    const std::string value = trim(std::string_view(text).substr(sep + 1));
    if (key == "alphas" || key == "betas") {
      std::vector<double> xs;
      for (const auto& item : split_list(value)) xs.push_back(parse_double(item, line));
      (key == "alphas" ? spec.alphas : spec.betas) = std::move(xs);
    } else if (key == "n") {
      spec.n = parse_uint(value, line);
    } else if (key == "n1") {
      spec.n1 = parse_uint(value, line);
    } else if (key == "n2") {
      spec.n2 = parse_uint(value, line);
    } else if (key == "reps") {
      spec.reps = parse_uint(value, line);
    } else if (key == "methods") {
      spec.methods.clear();
      for (const auto& item : split_list(value)) {
        auto m = parse_method(item);
        if (!m) throw ParseError("unknown method '" + item + "'", line);
        spec.methods.push_back(*m);
      }
    } else if (key == "gamma") {
      if (lower(value) == "auto") {
        spec.gamma.reset();
      } else {
        spec.gamma = parse_double(value, line);
      }
    } else if (key == "mu") {
      auto m = parse_mu_policy(value);
      if (!m) throw ParseError("unknown mu policy '" + value + "'", line);
      spec.mu_policy = *m;
    } else if (key == "seed") {
      spec.base_seed = parse_uint(value, line);
    } else if (key == "certify") {
      spec.certify = parse_bool(value, line);
    } else if (key == "tie_rule" || key == "tie-rule") {
      auto r = parse_tie_rule(lower(value));
      if (!r) throw ParseError("unknown tie rule '" + value + "'", line);
      spec.tie_rule = *r;
    } else if (key == "max_sweeps") {
      spec.solver.max_sweeps = parse_uint(value, line);
    } else if (key == "tol") {
      spec.solver.objective_tolerance = parse_double(value, line);
    } else if (key == "rank") {
      if (lower(value) == "auto") {
        spec.solver.rank.reset();
      } else {
        spec.solver.rank = parse_uint(value, line);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  if (spec.n == 0 && spec.n1 && spec.n2) spec.n = *spec.n1 + *spec.n2;
  spec.validate();
  return spec;
}

GridSpec load_grid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid config '" + path + "'");
  return parse_grid_spec(in);
}

Seed cell_graph_seed(Seed base, std::size_t alpha_index, std::size_t beta_index, std::size_t rep) {
  return derive_seed(base, {alpha_index, beta_index, rep});
}

Seed cell_method_seed(Seed base, std::size_t alpha_index, std::size_t beta_index, std::size_t rep, Method method) {
  return derive_seed(base, {alpha_index, beta_index, rep, 1 + static_cast<std::uint64_t>(method)});
}

CellResult run_cell(const GridSpec& spec, std::size_t alpha_index, std::size_t beta_index, std::size_t rep,
                    Method method) {
  CellResult cell;
  cell.alpha = spec.alphas.at(alpha_index);
  cell.beta = spec.betas.at(beta_index);
  cell.alpha_index = alpha_index;
  cell.beta_index = beta_index;
  cell.rep = rep;
  cell.method = method;
  cell.n = spec.total_vertices();
  cell.seed = cell_method_seed(spec.base_seed, alpha_index, beta_index, rep, method);
  if (cell.beta >= cell.alpha) {
    cell.status = CellStatus::kSkipped;
    return cell;
  }
  try {
    const ScaledRates rates = to_sbm(cell.alpha, cell.beta, spec.community1(), spec.community2());
    cell.clamped = rates.clamped;
    const PlantedGraph drawn = sample_sbm(rates.params, cell_graph_seed(spec.base_seed, alpha_index, beta_index, rep));

    std::optional<double> mu;
    switch (spec.mu_policy) {
      case MuPolicy::kAuto:
        break;
      case MuPolicy::kHalf:
        mu = 0.5;
        break;
      case MuPolicy::kGoemansWilliamson:
        mu = 1.0;
        break;
      case MuPolicy::kOracle:
        mu = (rates.params.p + rates.params.q) / 2.0;
        break;
    }

    SketchConfig config;
    config.mu = mu;
    config.seed = cell.seed;
    config.solver = spec.solver;
    config.certify = spec.certify;
    config.tie_rule = spec.tie_rule;
    if (method == Method::kFullSdp) {
      config.gamma = 1.0;
    } else {
      config.gamma = spec.gamma;
      config.signal = SignalStrength{cell.alpha, cell.beta};
    }
    const PipelineResult result = sketch_and_solve(drawn.graph, config);
    cell.gamma = result.gamma_used;
    cell.mu = result.mu_used;
    cell.recovered = recovers(result, drawn.planted);
    cell.fell_back = result.fell_back_random;
    cell.unassigned = result.unassigned.size();
    cell.timings = result.timings;
    cell.runtime_ms = result.timings.method_ms();
  } catch (const std::exception& e) {
    cell.status = CellStatus::kError;
    cell.error = e.what();
    cell.recovered = false;
  }
  return cell;
}

std::vector<CellResult> run_grid(const GridSpec& spec, std::size_t jobs) {
  spec.validate();
  struct Task {
    std::size_t a, b, rep;
    Method method;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < spec.alphas.size(); ++a) {
    for (std::size_t b = 0; b < spec.betas.size(); ++b) {
      for (std::size_t r = 0; r < spec.reps; ++r) {
        for (Method m : spec.methods) tasks.push_back({a, b, r, m});
      }
    }
  }
  std::vector<CellResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      results[i] = run_cell(spec, t.a, t.b, t.rep, t.method);
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

void write_csv(std::ostream& out, const std::vector<CellResult>& results) {
  out << kCsvHeader << '\n';
  for (const CellResult& c : results) {
    std::string recovered;
    switch (c.status) {
      case CellStatus::kOk:
        recovered = c.recovered ? "1" : "0";
        break;
      case CellStatus::kSkipped:
        recovered = "SKIPPED";
        break;
      case CellStatus::kError:
        recovered = "ERROR";
        break;
    }
    out << format_double(c.alpha) << ',' << format_double(c.beta) << ',' << c.rep << ','
        << csv_field(to_string(c.method)) << ',' << c.n << ',' << format_double(c.gamma) << ','
        << format_double(c.mu) << ',' << recovered << ',' << (c.fell_back ? 1 : 0) << ',' << c.unassigned << ','
        << format_fixed(c.runtime_ms, 3) << ',' << c.seed << '\n';
  }
}

std::string emit_csv(const std::vector<CellResult>& results) {
  std::ostringstream out;
  write_csv(out, results);
  return out.str();
}

void emit_csv_file(const std::vector<CellResult>& results, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_csv(out, results);
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<CellResult> parse_csv(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t line = 1;
  if (!read_record(in, fields)) throw ParseError("missing CSV header", line);
  std::string header;
  for (std::size_t i = 0; i < fields.size(); ++i) header += (i ? "," : "") + fields[i];
  if (header != kCsvHeader) throw ParseError("unexpected CSV header", line);
  std::vector<CellResult> out;
  while (read_record(in, fields)) {
    ++line;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 12) throw ParseError("expected 12 fields", line);
    CellResult c;
    c.alpha = parse_double(fields[0], line);
    c.beta = parse_double(fields[1], line);
    c.rep = parse_uint(fields[2], line);
    auto m = parse_method(fields[3]);
    if (!m) throw ParseError("unknown method", line);
    c.method = *m;
    c.n = parse_uint(fields[4], line);
    c.gamma = parse_double(fields[5], line);
    c.mu = parse_double(fields[6], line);
    if (fields[7] == "SKIPPED") {
      c.status = CellStatus::kSkipped;
    } else if (fields[7] == "ERROR") {
      c.status = CellStatus::kError;
    } else {
      c.recovered = parse_bool(fields[7], line);
    }
    c.fell_back = parse_bool(fields[8], line);
    c.unassigned = parse_uint(fields[9], line);
    c.runtime_ms = parse_double(fields[10], line);
    c.seed = parse_uint(fields[11], line);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<HeatmapMetric> parse_metric(std::string_view text) noexcept {
  const std::string t = lower(std::string(text));
  if (t == "recovery" || t == "recovery_rate") return HeatmapMetric::kRecoveryRate;
  if (t == "runtime" || t == "mean_runtime") return HeatmapMetric::kMeanRuntime;
  return std::nullopt;
}

std::optional<HeatmapOverlay> parse_overlay(std::string_view text) noexcept {
  const std::string t = lower(std::string(text));
  if (t == "none") return HeatmapOverlay::kNone;
  if (t == "prop1" || t == "prop1_curve") return HeatmapOverlay::kProp1Curve;
  if (t == "conjecture" || t == "conjecture_gamma_iso") return HeatmapOverlay::kConjectureGammaIso;
  return std::nullopt;
}

HeatmapGeometry::HeatmapGeometry(std::vector<double> betas, std::vector<double> alphas)
    : betas_(std::move(betas)), alphas_(std::move(alphas)) {
  std::sort(betas_.begin(), betas_.end());
  std::sort(alphas_.begin(), alphas_.end());
}

double HeatmapGeometry::cell_y(std::size_t row) const noexcept {
  // Row 0 holds the largest alpha.
  return kTop + kCell * static_cast<double>(row);
}

namespace {

// Position of v on the index axis of `grid` (ascending), linear between
// neighbors and extrapolated past the ends.
double fractional_index(const std::vector<double>& grid, double v) {
  if (grid.size() < 2) return 0.0;
  auto it = std::upper_bound(grid.begin(), grid.end(), v);
  std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  hi = std::clamp<std::size_t>(hi, 1, grid.size() - 1);
  const std::size_t lo = hi - 1;
  return static_cast<double>(lo) + (v - grid[lo]) / (grid[hi] - grid[lo]);
}

}  // namespace

double HeatmapGeometry::x(double beta) const noexcept {
  return kLeft + kCell * (fractional_index(betas_, beta) + 0.5);
}

double HeatmapGeometry::y(double alpha) const noexcept {
  const double rows = static_cast<double>(alphas_.size());
  return kTop + kCell * (rows - 1.0 - fractional_index(alphas_, alpha) + 0.5);
}

std::vector<HeatmapCell> aggregate_heatmap(const std::vector<CellResult>& results, const HeatmapOptions& options) {
  struct Acc {
    std::size_t runs = 0;
    std::size_t hits = 0;
    double runtime = 0.0;
  };
  std::map<std::pair<double, double>, Acc> cells;  // (alpha, beta)
  std::vector<double> alphas;
  std::vector<double> betas;
  for (const CellResult& c : results) {
    if (options.method && c.method != *options.method) continue;
    alphas.push_back(c.alpha);
    betas.push_back(c.beta);
    Acc& acc = cells[{c.alpha, c.beta}];
    if (c.status == CellStatus::kSkipped) continue;
    ++acc.runs;
    acc.hits += c.recovered ? 1 : 0;
    acc.runtime += c.runtime_ms;
  }
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  if (alphas.empty()) throw InvalidArgument("no results to plot");
  if (cells.size() != alphas.size() * betas.size()) throw InvalidArgument("results do not form a rectangular grid");

  std::vector<HeatmapCell> out;
  out.reserve(cells.size());
  for (auto a = alphas.rbegin(); a != alphas.rend(); ++a) {
    for (double b : betas) {
      const Acc& acc = cells.at({*a, b});
      HeatmapCell cell{*a, b, 0.0, 0.0};
      if (acc.runs > 0) {
        cell.value = options.metric == HeatmapMetric::kRecoveryRate
                         ? static_cast<double>(acc.hits) / static_cast<double>(acc.runs)
                         : acc.runtime / static_cast<double>(acc.runs);
      }
      out.push_back(cell);
    }
  }

  if (options.metric == HeatmapMetric::kRecoveryRate) {
    for (auto& c : out) c.intensity = std::clamp(c.value, 0.0, 1.0);
  } else {
    // Log scale over the positive runtimes present.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& c : out) {
      if (c.value > 0.0) {
        lo = std::min(lo, c.value);
        hi = std::max(hi, c.value);
      }
    }
    for (auto& c : out) {
      if (!(c.value > 0.0)) {
        c.intensity = 0.0;
      } else if (hi > lo) {
        c.intensity = std::clamp((std::log(c.value) - std::log(lo)) / (std::log(hi) - std::log(lo)), 0.0, 1.0);
      } else {
        c.intensity = 1.0;
      }
    }
  }
  return out;
}

std::string emit_heatmap_svg(const std::vector<CellResult>& results, const HeatmapOptions& options) {
  const std::vector<HeatmapCell> cells = aggregate_heatmap(results, options);
  std::vector<double> alphas;
  std::vector<double> betas;
  for (const auto& c : cells) {
    alphas.push_back(c.alpha);
    betas.push_back(c.beta);
  }
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  const HeatmapGeometry geo(betas, alphas);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(geo.width()) << "\" height=\""
      << format_double(geo.height()) << "\" viewBox=\"0 0 " << format_double(geo.width()) << ' '
      << format_double(geo.height()) << "\">\n";
  svg << "<title>" << (options.metric == HeatmapMetric::kRecoveryRate ? "recovery rate" : "mean runtime (ms)")
      << "</title>\n";
  svg << "<defs><clipPath id=\"plot\"><rect x=\"" << format_double(HeatmapGeometry::kLeft) << "\" y=\""
      << format_double(HeatmapGeometry::kTop) << "\" width=\"" << format_double(geo.plot_width()) << "\" height=\""
      << format_double(geo.plot_height()) << "\"/></clipPath></defs>\n";
  svg << "<g class=\"cells\" stroke=\"#888\" stroke-width=\"0.5\">\n";
  const std::size_t cols = betas.size();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t row = k / cols;
    const std::size_t col = k % cols;
    const int gray = static_cast<int>(std::lround(255.0 * (1.0 - cells[k].intensity)));
    svg << "<rect x=\"" << format_double(geo.cell_x(col)) << "\" y=\"" << format_double(geo.cell_y(row))
        << "\" width=\"" << format_double(HeatmapGeometry::kCell) << "\" height=\""
        << format_double(HeatmapGeometry::kCell) << "\" fill=\"rgb(" << gray << ',' << gray << ',' << gray
        << ")\" data-alpha=\"" << format_double(cells[k].alpha) << "\" data-beta=\"" << format_double(cells[k].beta)
        << "\" data-value=\"" << format_double(cells[k].value) << "\" data-intensity=\""
        << format_double(cells[k].intensity) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"axes\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#000\">\n";
  for (std::size_t col = 0; col < cols; ++col) {
    svg << "<text x=\"" << format_double(geo.cell_x(col) + HeatmapGeometry::kCell / 2) << "\" y=\""
        << format_double(HeatmapGeometry::kTop + geo.plot_height() + 14) << "\" text-anchor=\"middle\">"
        << format_double(betas[col]) << "</text>\n";
  }
  for (std::size_t row = 0; row < alphas.size(); ++row) {
    svg << "<text x=\"" << format_double(HeatmapGeometry::kLeft - 6) << "\" y=\""
        << format_double(geo.cell_y(row) + HeatmapGeometry::kCell / 2 + 3) << "\" text-anchor=\"end\">"
        << format_double(alphas[alphas.size() - 1 - row]) << "</text>\n";
  }
  svg << "<text x=\"" << format_double(HeatmapGeometry::kLeft + geo.plot_width() / 2) << "\" y=\""
      << format_double(geo.height() - 8) << "\" text-anchor=\"middle\">beta</text>\n";
  svg << "<text x=\"14\" y=\"" << format_double(HeatmapGeometry::kTop + geo.plot_height() / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << format_double(HeatmapGeometry::kTop + geo.plot_height() / 2) << ")\">alpha</text>\n</g>\n";

  if (options.overlay != HeatmapOverlay::kNone) {
    const double b0 = betas.front();
    const double b1 = betas.back();
    std::vector<std::pair<double, double>> curve;
    if (options.overlay == HeatmapOverlay::kProp1Curve) {
      curve = prop1_curve(b0, b1, options.overlay_points);
    } else {
      double gamma = 1.0;
      if (options.overlay_gamma) {
        gamma = *options.overlay_gamma;
      } else {
        std::vector<double> gammas;
        for (const auto& c : results) {
          if (c.status == CellStatus::kOk && (!options.method || c.method == *options.method)) gammas.push_back(c.gamma);
        }
        if (!gammas.empty()) {
          std::nth_element(gammas.begin(), gammas.begin() + static_cast<std::ptrdiff_t>(gammas.size() / 2), gammas.end());
          gamma = gammas[gammas.size() / 2];
        }
      }
      for (const auto& [beta, alpha] : prop1_curve(b0, b1, options.overlay_points)) {
        (void)alpha;
        curve.emplace_back(beta, conjecture_iso_alpha(beta, gamma));
      }
    }
    svg << "<polyline class=\"overlay\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < curve.size(); ++k) {
      svg << (k ? " " : "") << format_double(geo.x(curve[k].first)) << ',' << format_double(geo.y(curve[k].second));
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_heatmap_svg_file(const std::vector<CellResult>& results, const HeatmapOptions& options,
                           const std::string& path) {
  const std::string svg = emit_heatmap_svg(results, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << svg;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace sketchsdp

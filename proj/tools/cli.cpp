#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "sqw/circuit.hpp"
#include "sqw/cycle.hpp"
#include "sqw/dynamics.hpp"
#include "sqw/errors.hpp"
#include "sqw/graph_io.hpp"
#include "sqw/instances.hpp"
#include "sqw/rng.hpp"
#include "sqw/semiclassical.hpp"
#include "sqw/verify.hpp"

namespace sqw::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr const char* kDefaultOutDir = "sqw-out";

struct RunConfig {
  std::string command;
  std::string input;
  std::string format;
  std::string graph;
  int walk_class = 1;
  int tq = 1;
  int tq_max = 0;  // 0: per-command default
  int tc = 0;      // 0: per-command default
  double tol = kLimitTolerance;
  std::uint64_t seed = 0;
  std::string out;
  std::string preset;
  bool patch_dangling = false;
  int n = 6;
  std::vector<double> p0;
  std::size_t x0 = 0;
  int count = 100;
  std::string corpus = "random";
  int burn_in = -1;  // -1: half of tq-max
  std::string control = "quantum";
};

Json config_json(const RunConfig& c) {
  return {
      {"command", c.command}, {"input", c.input},   {"format", c.format},
      {"graph", c.graph},     {"class", c.walk_class}, {"tq", c.tq},
      {"tq-max", c.tq_max},   {"tc", c.tc},         {"tol", c.tol},
      {"seed", c.seed},       {"out", c.out},       {"preset", c.preset},
      {"patch-dangling", c.patch_dangling},          {"n", c.n},
      {"p0", c.p0},           {"x0", c.x0},         {"count", c.count},
      {"corpus", c.corpus},   {"burn-in", c.burn_in}, {"control", c.control},
  };
}

// JSON config files: a flat object keyed by long flag names.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    Json doc = Json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || opt->get_configurable() == false) continue;
      const auto& name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& results = opt->results();
        doc[name] = results.size() == 1 ? Json(results.front()) : Json(results);
      } else if (default_also && !opt->get_default_str().empty()) {
        doc[name] = opt->get_default_str();
      }
    }
    return doc.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json doc;
    try {
      doc = Json::parse(input);
    } catch (const Json::parse_error& e) {
      throw CLI::ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConfigError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.name = key;
      const auto text = [&key](const Json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean() || v.is_number()) return v.dump();
        throw CLI::ConfigError("config key '" + key + "' has an unsupported value");
      };
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(text(v));
      } else {
        item.inputs.push_back(text(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char byte[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(byte, sizeof byte, "%02x", digest[k]);
    hex += byte;
  }
  return hex;
}

// Collects artifacts for the manifest.
class Output {
 public:
  Output(fs::path dir, std::ostream& log) : dir_(std::move(dir)), log_(log) { fs::create_directories(dir_); }

  void set_prefix(std::string prefix) { prefix_ = std::move(prefix); }

  void write(const std::string& name, const std::string& content) {
    const auto file = prefix_ + name;
    std::ofstream os(dir_ / file, std::ios::binary);
    if (!os) throw InvalidArgument("cannot write " + (dir_ / file).string());
    os << content;
    artifacts_.push_back({{"path", file}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
    log_ << (dir_ / file).string() << "\n";
  }

  void write_manifest(const RunConfig& config, bool passed) {
    Json manifest{
        {"tool", "sqw"},
        {"config", config_json(config)},
        {"rng", std::string(WalkRng::kName)},
        {"checks_passed", passed},
        {"artifacts", artifacts_},
    };
    const auto text = manifest.dump(2) + "\n";
    std::ofstream os(dir_ / "manifest.json", std::ios::binary);
    os << text;
    log_ << (dir_ / "manifest.json").string() << "\n";
  }

 private:
  fs::path dir_;
  std::ostream& log_;
  std::string prefix_;
  Json artifacts_ = Json::array();
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

TransitionMatrix load_graph(const RunConfig& c, const std::string& fallback) {
  if (!c.input.empty()) {
    Format format = Format::matrix_csv;
    if (!c.format.empty()) {
      format = parse_format(c.format);
    } else if (fs::path(c.input).extension() == ".json") {
      format = Format::edge_list_json;
    }
    return deserialize(read_file(c.input), format, {c.patch_dangling});
  }
  const auto name = c.graph.empty() ? fallback : c.graph;
  if (name == "two-node") return two_node_example();
  if (name == "star-core") return star_core_example();
  if (name == "circulant") return circulant_example();
  if (name == "cycle") return cycle_graph(static_cast<std::size_t>(c.n));
  throw InvalidArgument("unknown graph '" + name + "'");
}

ProbabilityVector initial_distribution(const RunConfig& c, const TransitionMatrix& g) {
  if (!c.p0.empty()) {
    if (c.p0.size() != g.size()) throw DimensionMismatch(g.size(), c.p0.size());
    return ProbabilityVector(c.p0);
  }
  if (c.input.empty() && (c.graph.empty() || c.graph == "two-node") && g.size() == 2) return two_node_initial();
  return ProbabilityVector::uniform(g.size());
}

Json matrix_rows(const TransitionMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t col = 0; col < m.size(); ++col) row.push_back(m(r, col));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string member_dot_name(int t_q) { return "member_tq" + std::to_string(t_q) + ".dot"; }

// --- subcommands -----------------------------------------------------------

int cmd_family(const RunConfig& c, Output& out) {
  const auto g = load_graph(c, "two-node");
  const auto cls = parse_walk_class(c.walk_class);
  const int tq_max = c.tq_max > 0 ? c.tq_max : 12;
  const auto family = build_family(g, cls, tq_max);

  std::optional<int> period;
  if (tq_max >= 2) period = family_period(family);
  const auto classes = classify(g);
  Json report{
      {"class", c.walk_class},
      {"t_q_max", tq_max},
      {"source", {{"symmetric", classes.symmetric}, {"homogeneous", classes.homogeneous}, {"matrix", matrix_rows(g)}}},
      {"period", optional_int(period)},
      {"distinct", distinct_matrices(family)},
  };
  Json members = Json::array();
  for (const auto& m : family.members()) {
    members.push_back({
        {"t_q", m.t_q},
        {"matrix", matrix_rows(m.matrix)},
        {"asymmetry", asymmetry(m.matrix)},
        {"components", components(m.matrix)},
        {"dot", member_dot_name(m.t_q)},
    });
    out.write(member_dot_name(m.t_q), to_dot(m.matrix, "tq" + std::to_string(m.t_q)));
  }
  report["members"] = std::move(members);
  out.write("family.json", report.dump(2) + "\n");
  return kOk;
}

int cmd_cycle(const RunConfig& c, Output& out) {
  const auto n = static_cast<std::size_t>(c.n);
  const auto expected = cycle_predictions(n);
  const int tq_max = c.tq_max > 0 ? c.tq_max : static_cast<int>(2 * n);
  const auto g = cycle_graph(n);
  const auto family = build_family(g, WalkClass::I, tq_max);

  double oracle = 0.0;
  Json members = Json::array();
  for (const auto& m : family.members()) {
    oracle = std::max(oracle, m.matrix.max_abs_diff(cycle_semiclassical(n, m.t_q)));
    members.push_back({{"t_q", m.t_q}, {"components", components(m.matrix)}, {"dot", member_dot_name(m.t_q)}});
    out.write(member_dot_name(m.t_q), to_dot(m.matrix, "cycle" + std::to_string(n) + "_tq" + std::to_string(m.t_q)));
  }
  const auto period = family_period(family);
  const int distinct = distinct_matrices(family);
  const auto u_period = unitary_period(g, tq_max);

  std::string table = "t_q,matrix_equivalent,unitary_equivalent\n";
  Json rows = Json::array();
  for (const auto& row : equivalence_table(g, WalkClass::I, tq_max)) {
    table += std::to_string(row.t_q) + "," + std::to_string(row.matrix_equivalent) + "," +
             std::to_string(row.unitary_equivalent) + "\n";
  }
  out.write("periodicity.csv", table);

  const bool passed = oracle < 1e-12 && period == expected.family_period && distinct == expected.distinct_count &&
                      u_period == expected.unitary_period;
  Json report{
      {"n", n},
      {"t_q_max", tq_max},
      {"predicted",
       {{"distinct", expected.distinct_count},
        {"family_period", expected.family_period},
        {"unitary_period", expected.unitary_period}}},
      {"measured",
       {{"distinct", distinct}, {"family_period", optional_int(period)}, {"unitary_period", optional_int(u_period)}}},
      {"oracle_max_deviation", oracle},
      {"passed", passed},
      {"members", std::move(members)},
  };
  out.write("cycle.json", report.dump(2) + "\n");
  return passed ? kOk : kCheckFailed;
}

int cmd_evolve(const RunConfig& c, Output& out) {
  const auto g = load_graph(c, "two-node");
  const auto p0 = initial_distribution(c, g);
  const auto member = semiclassical_matrix(g, c.tq, parse_walk_class(c.walk_class));
  const int tc = c.tc > 0 ? c.tc : 10;
  const auto series = evolve_series(member, p0, static_cast<std::size_t>(tc));

  std::string csv = "t_c";
  for (std::size_t i = 0; i < g.size(); ++i) csv += ",node" + std::to_string(i);
  csv += "\n";
  for (std::size_t t = 0; t < series.size(); ++t) {
    csv += std::to_string(t);
    for (std::size_t i = 0; i < g.size(); ++i) csv += "," + number(series[t][i]);
    csv += "\n";
  }
  out.write("evolve.csv", csv);

  const auto limit = limiting_distribution(member, p0, c.tol);
  Json report{
      {"class", c.walk_class},
      {"t_q", c.tq},
      {"matrix", matrix_rows(member)},
      {"limit", limit.distribution.values()},
      {"mode", to_string(limit.mode)},
      {"iterations", limit.iterations},
  };
  out.write("evolve.json", report.dump(2) + "\n");
  return limit.mode == LimitMode::failed ? kCheckFailed : kOk;
}

int cmd_rank(const RunConfig& c, Output& out) {
  const auto g = load_graph(c, "star-core");
  const int tq_max = c.tq_max > 0 ? c.tq_max : 50;
  RankOptions options;
  options.tol = c.tol;
  if (!c.p0.empty()) options.initial = initial_distribution(c, g);
  const auto result = semiclassical_rank(g, parse_walk_class(c.walk_class), tq_max, options);
  const int burn_in = c.burn_in >= 0 ? c.burn_in : tq_max / 2;

  Json limits = Json::array();
  for (std::size_t k = 0; k < result.limits.size(); ++k) {
    const auto& l = result.limits[k];
    limits.push_back({{"t_q", k + 1},
                      {"mode", to_string(l.mode)},
                      {"iterations", l.iterations},
                      {"distribution", l.distribution.values()}});
  }
  Json report{
      {"class", c.walk_class},
      {"t_q_max", tq_max},
      {"burn_in", burn_in},
      {"max_running_increment", max_running_increment(result, burn_in)},
      {"final_average", result.final_average},
      {"ordering", result.ordering},
      {"limits", std::move(limits)},
      {"running_average", result.running_average},
  };
  out.write("rank.json", report.dump(2) + "\n");
  return kOk;
}

int cmd_sample(const RunConfig& c, Output& out) {
  const auto g = load_graph(c, "two-node");
  const auto member = semiclassical_matrix(g, c.tq, parse_walk_class(c.walk_class));
  const int steps = c.tc > 0 ? c.tc : 10;
  const auto batch = sample_batch(member, c.x0, static_cast<std::size_t>(steps), static_cast<std::size_t>(c.count),
                                  c.seed, c.tq, parse_walk_class(c.walk_class));
  std::string csv = "trajectory,seed,t_q,class";
  for (int t = 0; t <= steps; ++t) csv += ",x" + std::to_string(t);
  csv += "\n";
  for (std::size_t k = 0; k < batch.size(); ++k) {
    const auto& tr = batch[k];
    csv += std::to_string(k) + "," + std::to_string(tr.seed) + "," + std::to_string(tr.t_q) + "," +
           std::to_string(static_cast<int>(tr.walk_class));
    for (auto x : tr.nodes) csv += "," + std::to_string(x);
    csv += "\n";
  }
  out.write("trajectories.csv", csv);
  return kOk;
}

int cmd_circuit(const RunConfig& c, Output& out) {
  const auto g = load_graph(c, "two-node");
  const auto p0 = initial_distribution(c, g);
  PrepControl control = PrepControl::quantum;
  if (c.control == "classical") {
    control = PrepControl::classical;
  } else if (c.control != "quantum") {
    throw InvalidArgument("--control must be quantum or classical");
  }
  const int tc = c.tc > 0 ? c.tc : 2;
  const auto circuit = build_circuit(g, p0, c.tq, tc, control);
  const auto qasm = export_openqasm(circuit);
  out.write("circuit.qasm", qasm);
  out.write("circuit.json", circuit_to_json(circuit));

  const double block = verify_block(g, c.tq);
  const bool round_trip = same_gates(parse_openqasm(qasm), circuit.gates, 1e-9);
  const auto simulated = simulate_bit_marginals(circuit);
  const auto member = semiclassical_matrix(g, c.tq, WalkClass::I);
  const auto series = evolve_series(member, p0, static_cast<std::size_t>(tc));
  double channel = 0.0;
  Json bits = Json::array();
  for (std::size_t k = 0; k < simulated.size(); ++k) {
    channel = std::max(channel, std::abs(simulated[k] - series[k][1]));
    bits.push_back({{"bit", k}, {"p_one_simulated", simulated[k]}, {"p_one_expected", series[k][1]}});
  }
  const bool passed = block < 1e-9 && channel < 1e-10 && round_trip;
  Json report{
      {"t_q", c.tq},
      {"t_c", tc},
      {"prep_control", c.control},
      {"angles", {{"alpha", circuit.angles.alpha}, {"theta0", circuit.angles.theta0}, {"theta1", circuit.angles.theta1}}},
      {"block_deviation", block},
      {"channel_max_deviation", channel},
      {"qasm_round_trip", round_trip},
      {"bits", std::move(bits)},
      {"passed", passed},
  };
  out.write("verification.json", report.dump(2) + "\n");
  return passed ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& c, Output& out, std::ostream& log) {
  if (c.corpus != "random") throw InvalidArgument("only the 'random' corpus is available");
  const auto results = run_verification({c.count, c.seed});
  Json checks = Json::array();
  for (const auto& r : results) {
    log << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  const bool passed = all_passed(results);
  out.write("verify.json", Json{{"count", c.count}, {"seed", c.seed}, {"passed", passed}, {"checks", checks}}.dump(2) + "\n");
  return passed ? kOk : kCheckFailed;
}

int cmd_graphs(Output& out) {
  Json report = Json::array();
  for (const auto& [name, g] : {std::pair{std::string("circulant"), circulant_example()},
                                std::pair{std::string("star_core"), star_core_example()}}) {
    const auto classes = classify(g);
    out.write(name + ".dot", to_dot(g, name));
    out.write(name + ".csv", to_csv(g));
    report.push_back({{"name", name},
                      {"symmetric", classes.symmetric},
                      {"homogeneous", classes.homogeneous},
                      {"asymmetry", asymmetry(g)}});
  }
  out.write("graphs.json", report.dump(2) + "\n");
  return kOk;
}

int worst(int a, int b) { return std::max(a, b); }

int cmd_preset(RunConfig c, Output& out) {
  const auto name = c.preset;
  if (name == "fig3" || name == "fig4") {
    c.n = 6;
    c.tq_max = 12;
    return cmd_cycle(c, out);
  }
  if (name == "fig5") return cmd_graphs(out);
  if (name == "fig6") {
    c.n = 7;
    c.tq_max = 14;
    return cmd_cycle(c, out);
  }
  if (name == "fig7") {
    c.input.clear();
    c.graph = "star-core";
    c.walk_class = 1;
    c.tq_max = 6;
    out.set_prefix("family_");
    int status = cmd_family(c, out);
    c.tq_max = 400;
    c.burn_in = 200;
    out.set_prefix("");
    return worst(status, cmd_rank(c, out));
  }
  if (name == "fig9") {
    c.input.clear();
    c.graph = "two-node";
    c.p0.clear();
    c.tq = 1;
    c.tc = 2;
    return cmd_circuit(c, out);
  }
  if (name == "fig10") {
    c.input.clear();
    c.graph = "two-node";
    c.p0.clear();
    c.walk_class = 1;
    c.tq_max = 3;
    out.set_prefix("family_");
    int status = cmd_family(c, out);
    for (int t = 1; t <= 3; ++t) {
      c.tq = t;
      c.tc = 10;
      out.set_prefix("tq" + std::to_string(t) + "_");
      status = worst(status, cmd_evolve(c, out));
    }
    out.set_prefix("");
    return status;
  }
  throw InvalidArgument("unknown preset '" + name + "' (fig3, fig4, fig5, fig6, fig7, fig9, fig10)");
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Szegedy quantum walks and their semiclassical families", "sqw"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; flags override its values");
  app.allow_config_extras(false);
  app.require_subcommand(0, 1);

  app.add_option("--input", c.input, "graph file (matrix CSV or edge-list JSON)");
  app.add_option("--format", c.format, "input format: csv or json")->check(CLI::IsMember({"csv", "json", "matrix-csv", "edge-list-json"}));
  app.add_option("--graph", c.graph, "built-in graph when no --input is given")
      ->check(CLI::IsMember({"two-node", "star-core", "circulant", "cycle"}));
  app.add_option("--class", c.walk_class, "semiclassical class (1 or 2)")->check(CLI::IsMember({1, 2}));
  app.add_option("--tq", c.tq, "quantum time")->check(CLI::Range(1, 1000000));
  app.add_option("--tq-max", c.tq_max, "largest quantum time")->check(CLI::Range(1, 1000000));
  app.add_option("--tc", c.tc, "classical steps")->check(CLI::Range(1, 1000000));
  app.add_option("--tol", c.tol, "limit tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--out", c.out, "output directory (default $SQW_OUT_DIR, then ./sqw-out)");
  app.add_option("--preset", c.preset, "named figure reproduction");
  app.add_flag("--patch-dangling", c.patch_dangling, "replace all-zero columns by uniform ones");
  app.add_option("--n", c.n, "cycle length")->check(CLI::Range(1, 4096));
  app.add_option("--p0", c.p0, "initial distribution, comma separated")->delimiter(',');
  app.add_option("--x0", c.x0, "start node for sampling");
  app.add_option("--count", c.count, "trajectories to sample / size of the verification corpus")
      ->check(CLI::Range(1, 10000000));
  app.add_option("--corpus", c.corpus, "verification corpus");
  app.add_option("--burn-in", c.burn_in, "quantum times skipped before checking running-average increments")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--control", c.control, "proxy preparation: quantum or classical")
      ->check(CLI::IsMember({"quantum", "classical"}));

  const std::map<std::string, std::string> commands{
      {"family", "semiclassical matrices and DOT graphs per quantum time"},
      {"cycle", "closed-form cycle predictions checked against the general pipeline"},
      {"evolve", "classical-time series under one family member"},
      {"rank", "averaged limiting distributions and node ordering"},
      {"sample", "seeded trajectories of one family member"},
      {"circuit", "two-node OpenQASM circuit and its verification"},
      {"verify", "theorem and property suite over random corpora"},
      {"preset", "data behind a named figure"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    subs[name] = sub;
  }
  subs["preset"]->add_option("name", c.preset, "fig3, fig4, fig5, fig6, fig7, fig9 or fig10");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsage;
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) c.command = name;
  }
  if (c.command.empty() && !c.preset.empty()) c.command = "preset";
  if (c.command.empty()) {
    report_error(err, "usage", "a subcommand is required; see --help");
    return kUsage;
  }
  if (c.command == "preset" && c.preset.empty()) {
    report_error(err, "usage", "preset needs a name");
    return kUsage;
  }
  if (c.out.empty()) {
    const char* env = std::getenv("SQW_OUT_DIR");
    c.out = env && *env ? env : kDefaultOutDir;
  }

  try {
    Output output(c.out, out);
    int status = kOk;
    if (c.command == "family") status = cmd_family(c, output);
    else if (c.command == "cycle") status = cmd_cycle(c, output);
    else if (c.command == "evolve") status = cmd_evolve(c, output);
    else if (c.command == "rank") status = cmd_rank(c, output);
    else if (c.command == "sample") status = cmd_sample(c, output);
    else if (c.command == "circuit") status = cmd_circuit(c, output);
    else if (c.command == "verify") status = cmd_verify(c, output, out);
    else status = cmd_preset(c, output);
    output.write_manifest(c, status == kOk);
    return status;
  } catch (const RankFailed& e) {
    report_error(err, e.kind(), e.what());
    return kCheckFailed;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    report_error(err, "io", e.what());
    return kUsage;
  }
}

}  // namespace sqw::cli

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "bcn/dsl.hpp"
#include "bcn/error.hpp"
#include "bcn/trace.hpp"
#include "report.hpp"

namespace bcn::cli {

namespace {

using report::Json;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t arity_cap = kDefaultArityCap;
  std::size_t oracle_cap_n = OracleLimits{}.max_states;
  std::size_t oracle_cap_p = OracleLimits{}.max_inputs;
  std::size_t oracle_cap_min_n = OracleLimits{}.max_states_min_outputs;
};

/// Thrown for semantic argument problems found after CLI11 parsing.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(const GlobalOptions& options, std::ostream& out, std::ostream& err)
      : opts_(options), out_(out), err_(err) {}

  Model load(const std::string& path) const {
    model_path_ = path;
    return parse_model(read_file(path), ParseOptions{opts_.arity_cap});
  }

  OracleOptions oracle_options(const Model& model, const std::string& fixed_input) const {
    OracleOptions o;
    o.limits.max_states = opts_.oracle_cap_n;
    o.limits.max_inputs = opts_.oracle_cap_p;
    o.limits.max_states_min_outputs = opts_.oracle_cap_min_n;
    if (!fixed_input.empty()) {
      InputVector u;
      try {
        u = InputVector::from_string(fixed_input);
      } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
      }
      if (u.size() != model.input_count())
        throw UsageError{"--fixed-input needs " + std::to_string(model.input_count()) + " bits"};
      o.allowed_inputs.push_back(u);
    }
    return o;
  }

  void emit(const std::string& command, Json body, const std::string& text) const {
    if (opts_.json) {
      Json doc;
      doc["command"] = command;
      doc.update(body);
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

  const GlobalOptions& options() const { return opts_; }
  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }
  const std::string& model_path() const { return model_path_; }

 private:
  const GlobalOptions& opts_;
  std::ostream& out_;
  std::ostream& err_;
  mutable std::string model_path_;
};

int cmd_validate(const Session& s, const std::string& path) {
  const Model model = s.load(path);
  const std::string canonical = serialize_model(model);
  Json body;
  body["model"] = report::model_summary(model);
  body["canonical"] = canonical;
  s.emit("validate", std::move(body), canonical);
  return kOk;
}

int cmd_graph(const Session& s, const std::string& path, const std::string& dot_path) {
  const Model model = s.load(path);
  const DepGraph g = build_dependency_graph(model);
  if (!dot_path.empty()) {
    const std::string dot = export_dot(g);
    if (dot_path == "-") {
      s.out() << dot;
      return kOk;
    }
    std::ofstream f(dot_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + dot_path + "'");
    f << dot;
  }
  const Json stats = report::graph_stats(g);
  std::string text = report::model_line(model) + "\n";
  text += "nodes: " + std::to_string(g.node_count()) + ", edges: " + std::to_string(g.edge_count()) + " (" +
          std::to_string(stats["state_edges"].get<std::size_t>()) + " state-to-state)\n";
  text += "sole feeders:";
  bool any = false;
  for (std::size_t j = 0; j < g.state_count(); ++j) {
    const std::size_t src = g.sole_feeders().feeder_of(j);
    if (src == kNoNode) continue;
    text += (any ? ", " : " ") + g.name(src) + "->" + g.name(j);
    any = true;
  }
  text += any ? "\n" : " none\n";
  text += "in-neighbors:\n";
  for (std::size_t j = 0; j < g.state_count(); ++j) {
    text += "  " + g.name(j) + ":";
    for (std::size_t w : g.in_neighbors(j)) text += " " + g.name(w);
    text += "\n";
  }
  Json body;
  body["model"] = report::model_summary(model);
  body["graph"] = stats;
  s.emit("graph", std::move(body), text);
  return kOk;
}

int cmd_check(const Session& s, const std::string& path) {
  const Model model = s.load(path);
  const SufficiencyVerdict v = sufficiency_verdict(model);
  std::string text = report::model_line(model) + "\n";
  text += std::string("verdict: ") + (v.observable() ? "Observable" : "Unknown") + "\n";
  text += "P1: " + std::string(v.p1.holds ? "holds" : "fails, violators " + report::name_set(model, v.p1.violators)) +
          "\n";
  text += "P2: " + std::string(v.p2.holds ? "holds" : "fails, cycles " + report::cycle_list(model, v.p2.bad_cycles)) +
          "\n";
  text += "paths: " + report::path_list(model, v.decomposition.paths) + "\n";
  text += "uncovered: " + report::name_set(model, v.decomposition.uncovered) + "\n";
  Json body;
  body["model"] = report::model_summary(model);
  body.update(report::verdict(model, v));
  s.emit("check", std::move(body), text);
  return v.observable() ? kOk : kUnknown;
}

int cmd_decompose(const Session& s, const std::string& path) {
  const Model model = s.load(path);
  const Decomposition d = decompose(build_dependency_graph(model));
  std::string text = "paths: " + report::path_list(model, d.paths) + "\n";
  text += "uncovered: " + report::name_set(model, d.uncovered) + "\n";
  Json body;
  body["model"] = report::model_summary(model);
  body["decomposition"] = report::decomposition(model, d);
  s.emit("decompose", std::move(body), text);
  return kOk;
}

int cmd_select(const Session& s, const std::string& path) {
  const Model model = s.load(path);
  const SelectionReport r = select_outputs(model);
  std::string text = report::model_line(model) + "\n";
  text += "L1: " + report::name_set(model, r.l1) + "\n";
  text += "L2: " + report::name_set(model, r.l2) + "\n";
  text += "cycles found: " + report::cycle_list(model, r.cycles_found) + "\n";
  text += "cycles pruned: " + report::cycle_list(model, r.cycles_pruned) + "\n";
  text += "added outputs: " + report::name_set(model, r.added_outputs) + "\n";
  text += "upper bound: " + std::to_string(r.added_outputs.size()) + "\n";
  if (r.already_satisfied()) text += "model already satisfies the sufficient condition\n";
  Json body;
  body["model"] = report::model_summary(model);
  body.update(report::selection(model, r));
  s.emit("select-outputs", std::move(body), text);
  return kOk;
}

int cmd_observe(const Session& s, const std::string& path, const std::string& trace_path,
                std::optional<std::size_t> at) {
  const Model model = s.load(path);
  const auto records = read_trace(read_file(trace_path), model);
  const SplitTrace trace = split_trace(records);
  const DisjointPathObserver obs = build_observer(model);
  const std::size_t k = at.value_or(0);

  if (trace.outputs.size() < obs.horizon()) throw HorizonError(obs.horizon(), trace.outputs.size());
  if (k >= trace.outputs.size() || k > trace.inputs.size()) {
    s.err() << "bcnobs: state at k=" << k << " needs output samples 0.." << k << "; trace has "
            << trace.outputs.size() << "\n";
    return kShortTrace;
  }
  const TraceCheck check = validate_trace(obs, model, trace.outputs, trace.inputs);
  if (!check.consistent) {
    s.err() << "bcnobs: trace inconsistent with the model; first mismatch at k=" << *check.first_mismatch << "\n";
    if (s.options().json) {
      Json body;
      body["consistent"] = false;
      body["first_mismatch"] = *check.first_mismatch;
      s.emit("observe", std::move(body), "");
    }
    return kInconsistentTrace;
  }
  const StateVector x = reconstruct_state(obs, model, trace.outputs, trace.inputs, k);

  std::string text = "X(" + std::to_string(k) + ") = " + x.to_string() + "\n";
  Json values = Json::object();
  for (std::size_t i = 0; i < model.state_count(); ++i) {
    text += "  " + model.state_name(i) + " = " + (x[i] ? "1" : "0") + "\n";
    values[model.state_name(i)] = x[i] ? 1 : 0;
  }
  Json body;
  body["consistent"] = true;
  body["horizon"] = obs.horizon();
  body["k"] = k;
  body["state"] = x.to_string();
  body["values"] = std::move(values);
  s.emit("observe", std::move(body), text);
  return kOk;
}

std::vector<InputVector> read_input_file(const std::string& path, std::size_t width) {
  std::vector<InputVector> inputs;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string bits;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) bits += c;
    if (bits.empty()) continue;
    try {
      inputs.push_back(InputVector::from_string(bits));
    } catch (const std::invalid_argument& e) {
      throw TraceError(line_no, e.what());
    }
    if (inputs.back().size() != width)
      throw TraceError(line_no, "expected " + std::to_string(width) + " input bits, got " + std::to_string(bits.size()));
  }
  return inputs;
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError{"invalid " + what + " '" + std::string(text) + "'"};
  return value;
}

int cmd_simulate(const Session& s, const std::string& path, const std::string& x0_text, const std::string& input_spec) {
  const Model model = s.load(path);
  StateVector x0;
  try {
    x0 = StateVector::from_string(x0_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError{e.what()};
  }
  if (x0.size() != model.state_count())
    throw UsageError{"--x0 needs " + std::to_string(model.state_count()) + " bits"};

  std::vector<InputVector> inputs;
  if (input_spec.starts_with("random:")) {
    const std::string_view rest = std::string_view(input_spec).substr(7);
    const auto colon = rest.find(':');
    const std::size_t length = parse_count(rest.substr(0, colon), "length");
    std::uint64_t seed = 0;
    if (colon != std::string_view::npos) {
      seed = parse_count(rest.substr(colon + 1), "seed");
    } else if (s.options().seed_given) {
      seed = s.options().seed;
    } else if (s.options().json) {
      throw UsageError{"random inputs need an explicit seed with --json (random:T:seed or --seed)"};
    } else {
      seed = std::random_device{}();
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < length; ++t) {
      InputVector u(model.input_count());
      for (std::size_t q = 0; q < model.input_count(); ++q) u.set(q, (rng() & 1U) != 0);
      inputs.push_back(std::move(u));
    }
  } else {
    inputs = read_input_file(input_spec, model.input_count());
  }
  const Trajectory t = simulate(model, x0, inputs);
  s.out() << write_trace(make_trace(t, inputs), model);
  return kOk;
}

int cmd_oracle(const Session& s, const std::string& mode, const std::string& path, const std::string& fixed_input) {
  const Model model = s.load(path);
  const OracleOptions options = s.oracle_options(model, fixed_input);
  Json body;
  body["model"] = report::model_summary(model);
  if (!fixed_input.empty()) body["fixed_input"] = fixed_input;
  std::string text = report::model_line(model) + "\n";

  if (mode == "observable") {
    const ObservabilityResult r = oracle_observable(model, options);
    body["observable"] = r.observable;
    text += std::string("observable: ") + (r.observable ? "yes" : "no") + "\n";
    if (r.witness) {
      body["witness"] = report::witness(*r.witness);
      text += "witness: " + r.witness->first.to_string() + " vs " + r.witness->second.to_string() + "\n";
    }
    s.emit("oracle observable", std::move(body), text);
    return r.observable ? kOk : kUnknown;
  }
  if (mode == "horizon") {
    const auto h = oracle_horizon(model, options);
    body["horizon"] = h ? Json(*h) : Json(nullptr);
    text += "horizon: " + (h ? std::to_string(*h) : std::string("none (not observable)")) + "\n";
    s.emit("oracle horizon", std::move(body), text);
    return h ? kOk : kUnknown;
  }
  const MinOutputsResult r = oracle_min_outputs(model, options);
  body["size"] = r.size;
  body["added"] = report::names(model, r.added);
  text += "minimal additional outputs: " + std::to_string(r.size) + " " + report::name_set(model, r.added) + "\n";
  s.emit("oracle min-outputs", std::move(body), text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions opts;
  CLI::App app{"Observability analysis, output selection and state reconstruction for Boolean control networks",
               "bcnobs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Machine-readable output");
  auto* seed_opt = app.add_option("--seed", opts.seed, "Seed for randomized commands");
  app.add_option("--arity-cap", opts.arity_cap, "Max distinct variables per update for essentiality testing");
  app.add_option("--oracle-cap-n", opts.oracle_cap_n, "Oracle state limit");
  app.add_option("--oracle-cap-p", opts.oracle_cap_p, "Oracle input limit");
  app.add_option("--oracle-cap-min-n", opts.oracle_cap_min_n, "State limit for oracle min-outputs");

  std::string model_path, trace_path, dot_path, x0, inputs_spec, fixed_input;
  std::optional<std::size_t> at;

  auto* validate = app.add_subcommand("validate", "Parse, reduce and print the canonical model");
  validate->add_option("model", model_path)->required();
  auto* graph = app.add_subcommand("graph", "Dependency graph statistics");
  graph->add_option("model", model_path)->required();
  graph->add_option("--dot", dot_path, "Write Graphviz output to a file ('-' for stdout)");
  auto* check = app.add_subcommand("check", "Sufficient-condition verdict (exit 0 observable, 2 unknown)");
  check->add_option("model", model_path)->required();
  auto* decomp = app.add_subcommand("decompose", "Disjoint observed paths");
  decomp->add_option("model", model_path)->required();
  auto* select = app.add_subcommand("select-outputs", "Choose additional outputs");
  select->add_option("model", model_path)->required();
  auto* observe = app.add_subcommand("observe", "Reconstruct the state from a trace");
  observe->add_option("model", model_path)->required();
  observe->add_option("trace", trace_path)->required();
  observe->add_option("--at", at, "Time step to reconstruct (default 0)");
  auto* sim = app.add_subcommand("simulate", "Simulate and emit a trace");
  sim->add_option("model", model_path)->required();
  sim->add_option("--x0", x0, "Initial state bits, first state first")->required();
  sim->add_option("--inputs", inputs_spec, "Input file (one bit string per line) or random:T[:seed]")->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground truth for small models");
  oracle->require_subcommand(1);
  std::string oracle_mode;
  for (const char* mode : {"observable", "horizon", "min-outputs"}) {
    auto* sub = oracle->add_subcommand(mode);
    sub->add_option("model", model_path)->required();
    sub->add_option("--fixed-input", fixed_input, "Restrict the environment to this constant input");
    sub->callback([&oracle_mode, mode] { oracle_mode = mode; });
  }

  std::vector<const char*> argv{"bcnobs"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bcnobs: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  opts.seed_given = seed_opt->count() > 0;
  const Session session(opts, out, err);
  try {
    if (validate->parsed()) return cmd_validate(session, model_path);
    if (graph->parsed()) return cmd_graph(session, model_path, dot_path);
    if (check->parsed()) return cmd_check(session, model_path);
    if (decomp->parsed()) return cmd_decompose(session, model_path);
    if (select->parsed()) return cmd_select(session, model_path);
    if (observe->parsed()) return cmd_observe(session, model_path, trace_path, at);
    if (sim->parsed()) return cmd_simulate(session, model_path, x0, inputs_spec);
    if (oracle->parsed()) return cmd_oracle(session, oracle_mode, model_path, fixed_input);
  } catch (const UsageError& e) {
    err << "bcnobs: " << e.message << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    for (const Diagnostic& d : e.diagnostics()) err << session.model_path() << ":" << d.to_string() << "\n";
    return kFailure;
  } catch (const ObserverError& e) {
    err << "bcnobs: " << e.what() << "\n";
    return kUnknown;
  } catch (const HorizonError& e) {
    err << "bcnobs: " << e.what() << "\n";
    return kShortTrace;
  } catch (const OracleCapError& e) {
    err << "bcnobs: " << e.what() << "\n";
    return kOracleCap;
  } catch (const Error& e) {
    err << "bcnobs: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace bcn::cli

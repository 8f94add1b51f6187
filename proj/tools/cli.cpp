#include "cli.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmod/oracle.hpp"
#include "qmod/quiver_json.hpp"
#include "qmod/simples.hpp"
#include "qmod/stability.hpp"
#include "qmod/subdims.hpp"
#include "qmod/torus_knot.hpp"

namespace qmod::cli {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) throw UsageError("empty integer list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw UsageError("malformed integer list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

namespace {

const std::vector<std::string> kQuiverCommands = {"euler",        "subdims",    "semistable", "stable",
                                                  "simple",       "local-quiver", "moduli-dim", "enumerate",
                                                  "oracle-simple"};

bool needs_quiver(const std::string& name) {
  return std::find(kQuiverCommands.begin(), kQuiverCommands.end(), name) != kQuiverCommands.end();
}

struct RawOptions {
  std::string preset, quiver_file, alpha, theta, a, b;
  std::vector<std::string> parts;
  std::uint64_t modulus = 0;
};

void add_quiver_source(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--preset", raw.preset, "kronecker:n | cyclic:n | bipartite:p:q");
  sub->add_option("--quiver", raw.quiver_file, "JSON quiver file");
}

void add_json_flag(CLI::App* sub, Command& cmd) {
  sub->add_flag("--json", cmd.json, "Print one machine-readable JSON object");
}

void add_budget(CLI::App* sub, Command& cmd) {
  sub->add_option("--budget", cmd.budget, "Lattice-point budget for the subdimension recursion");
}

void add_oracle_flags(CLI::App* sub, Command& cmd, RawOptions& raw) {
  sub->add_option("--modulus", raw.modulus, "Prime field modulus");
  sub->add_option("--seed", cmd.seed, "Master seed");
  sub->add_option("--trials", cmd.trials, "Number of random samples");
  sub->add_option("--max-dim", cmd.max_dim, "Largest accepted total dimension");
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  RawOptions raw;
  CLI::App app{"Stability, local quivers and torus-knot representations of quivers", "qmod"};
  app.require_subcommand(1);

  auto* euler = app.add_subcommand("euler", "Print the Euler form");
  add_quiver_source(euler, raw);

  auto* subdims = app.add_subcommand("subdims", "Generic subrepresentation dimension vectors");
  add_quiver_source(subdims, raw);
  add_budget(subdims, cmd);

  auto* semistable = app.add_subcommand("semistable", "Decide θ-semistability of a dimension vector");
  auto* stable = app.add_subcommand("stable", "Decide θ-stability of a dimension vector");
  auto* moduli = app.add_subcommand("moduli-dim", "Dimension of the moduli space at a stable vector");
  for (CLI::App* sub : {semistable, stable, moduli}) {
    add_quiver_source(sub, raw);
    sub->add_option("--theta", raw.theta, "Weight, comma separated")->required();
    sub->add_option("--alpha", raw.alpha, "Dimension vector, comma separated")->required();
    add_budget(sub, cmd);
  }
  subdims->add_option("--alpha", raw.alpha, "Dimension vector")->required();

  auto* simple = app.add_subcommand("simple", "Decide whether a simple representation exists");
  add_quiver_source(simple, raw);
  simple->add_option("--alpha", raw.alpha, "Dimension vector")->required();

  auto* local = app.add_subcommand("local-quiver", "Local quiver of a semistable representation type");
  add_quiver_source(local, raw);
  local->add_option("--part", raw.parts, "Summand type m:b1,b2,... (repeatable)")->required();
  local->add_option("--theta", raw.theta, "Also decide stability via the local quiver");
  add_budget(local, cmd);

  auto* enumerate = app.add_subcommand("enumerate", "List θ-stable dimension vectors");
  add_quiver_source(enumerate, raw);
  enumerate->add_option("--theta", raw.theta, "Weight")->required();
  enumerate->add_option("--max-total", cmd.max_total, "Largest total dimension")->required();
  add_budget(enumerate, cmd);

  auto* knot = app.add_subcommand("torus-knot", "Closed-form stability for Z_p * Z_q margins");
  knot->add_option("p", cmd.p)->required();
  knot->add_option("q", cmd.q)->required();
  knot->add_option("--a", raw.a, "Multiplicities of the p-th roots of unity")->required();
  knot->add_option("--b", raw.b, "Multiplicities of the q-th roots of unity")->required();
  knot->add_flag("--gamma", cmd.show_gamma, "Also print the Γ quiver");

  auto* gamma = app.add_subcommand("gamma", "Print the Γ quiver of one-dimensional stables");
  gamma->add_option("p", cmd.p)->required();
  gamma->add_option("q", cmd.q)->required();

  auto* oracle_simple = app.add_subcommand("oracle-simple", "Finite-field evidence for simple representations");
  add_quiver_source(oracle_simple, raw);
  oracle_simple->add_option("--alpha", raw.alpha, "Dimension vector")->required();
  add_oracle_flags(oracle_simple, cmd, raw);

  auto* oracle_knot = app.add_subcommand("oracle-knot", "Finite-field evidence for Z_p * Z_q irreducibles");
  oracle_knot->add_option("p", cmd.p)->required();
  oracle_knot->add_option("q", cmd.q)->required();
  oracle_knot->add_option("--a", raw.a)->required();
  oracle_knot->add_option("--b", raw.b)->required();
  add_oracle_flags(oracle_knot, cmd, raw);

  for (CLI::App* sub : {euler, subdims, semistable, stable, moduli, simple, local, enumerate, knot, gamma,
                        oracle_simple, oracle_knot}) {
    add_json_flag(sub, cmd);
  }

  std::vector<const char*> argv{"qmod"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw UsageError(out.str() + err.str(), code == 0 ? 0 : kExitError);
  }

  cmd.subcommand = app.get_subcommands().front()->get_name();
  if (!raw.alpha.empty()) cmd.alpha = parse_int_list(raw.alpha);
  if (!raw.theta.empty()) cmd.theta = parse_int_list(raw.theta);
  if (!raw.a.empty()) cmd.a = parse_int_list(raw.a);
  if (!raw.b.empty()) cmd.b = parse_int_list(raw.b);
  if (raw.modulus != 0) cmd.modulus = raw.modulus;
  for (const std::string& part : raw.parts) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError("part '" + part + "' must look like m:b1,b2,...");
    const auto m = parse_int_list(part.substr(0, colon));
    if (m.size() != 1) throw UsageError("part '" + part + "' must have a single multiplicity");
    cmd.parts.emplace_back(m[0], parse_int_list(part.substr(colon + 1)));
  }

  if (needs_quiver(cmd.subcommand)) {
    if (raw.preset.empty() == raw.quiver_file.empty()) {
      throw UsageError(cmd.subcommand + ": give exactly one of --preset or --quiver");
    }
    if (!raw.preset.empty()) cmd.preset = raw.preset;
    if (!raw.quiver_file.empty()) cmd.quiver_file = raw.quiver_file;
  }
  return cmd;
}

namespace {

Quiver parse_preset(const std::string& preset) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto colon = preset.find(':', pos);
    fields.push_back(preset.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto v = parse_int_list(fields[i]);
    if (v.size() != 1) throw Error("malformed preset '" + preset + "'");
    params.push_back(v[0]);
  }
  return build_preset(fields[0], params);
}

Quiver load_quiver(const Command& cmd) {
  if (cmd.preset) return parse_preset(*cmd.preset);
  return read_quiver_file(*cmd.quiver_file).quiver;
}

json to_json(const DimVector& v) { return std::vector<int>(v.coords().begin(), v.coords().end()); }

std::string vec_list(const std::vector<DimVector>& vs) {
  std::string s;
  for (const auto& v : vs) s += to_string(v) + "\n";
  return s;
}

struct Output {
  std::string verdict;
  json data = json::object();
  std::string text;
  int exit_code = kExitYes;
};

Output decision(bool yes, const std::string& yes_text, const std::string& no_text) {
  Output o;
  o.verdict = yes ? "yes" : "no";
  o.text = (yes ? yes_text : no_text) + "\n";
  o.exit_code = yes ? kExitYes : kExitNo;
  return o;
}

Output oracle_output(const OracleReport& r) {
  Output o;
  o.verdict = to_string(r.verdict);
  o.data = {{"modulus", r.modulus}, {"target_span", r.target_dim}, {"trial_span_dims", r.trial_span_dims}};
  std::ostringstream t;
  t << "verdict: " << o.verdict << "\nmodulus: " << r.modulus << "\ntarget span: " << r.target_dim
    << "\ntrial span dims:";
  for (int d : r.trial_span_dims) t << ' ' << d;
  t << '\n';
  o.text = t.str();
  return o;
}

Output dispatch(const Command& cmd, std::string& err) {
  const std::string& name = cmd.subcommand;

  if (name == "torus-knot" || name == "gamma" || name == "oracle-knot") {
    if (cmd.p <= 0 || cmd.q <= 0) throw Error("p and q must be positive");
    if (name == "gamma") {
      const Quiver g = build_gamma(cmd.p, cmd.q);
      Output o;
      o.verdict = "ok";
      o.data = {{"quiver", json::parse(quiver_to_json(g))}};
      o.text = quiver_to_json(g) + "\n";
      return o;
    }
    if (static_cast<int>(cmd.a.size()) != cmd.p || static_cast<int>(cmd.b.size()) != cmd.q) {
      throw Error("--a needs p entries and --b needs q entries");
    }
    if (std::gcd(cmd.p, cmd.q) != 1) {
      err += "warning: p and q are not coprime; the result concerns Z_p * Z_q, not a torus knot group\n";
    }
    const TorusKnotDims d(cmd.a, cmd.b);
    if (name == "oracle-knot") {
      PrimeFieldConfig cfg;
      cfg.modulus = cmd.modulus.value_or(default_knot_modulus(cmd.p, cmd.q));
      cfg.seed = cmd.seed;
      cfg.trials = cmd.trials;
      cfg.max_total = cmd.max_dim;
      return oracle_output(oracle_torus_knot_irreducible(d, cfg));
    }
    const auto violation = torus_knot_violation(d);
    Output o = decision(!violation, "STABLE", "NOT STABLE");
    o.data = {{"n", d.n()}};
    std::ostringstream t;
    t << "n = " << d.n() << "\n";
    if (violation) {
      t << "violated: a_" << violation->i + 1 << " + b_" << violation->j + 1 << " = " << violation->sum
        << " > n = " << violation->n << "\n";
      o.data["violation"] = {{"i", violation->i + 1}, {"j", violation->j + 1}, {"sum", violation->sum}};
    }
    t << o.text;
    if (cmd.show_gamma) {
      const std::string g = quiver_to_json(build_gamma(cmd.p, cmd.q));
      t << g << "\n";
      o.data["gamma"] = json::parse(g);
    }
    o.text = t.str();
    return o;
  }

  const Quiver q = load_quiver(cmd);
  auto alpha = [&] {
    if (!cmd.alpha) throw Error("--alpha is required");
    return DimVector(*cmd.alpha);
  };
  auto theta = [&] {
    if (!cmd.theta) throw Error("--theta is required");
    return Weight(*cmd.theta);
  };

  if (name == "euler") {
    const EulerMatrix chi = euler_form(q);
    Output o;
    o.verdict = "ok";
    json rows = json::array();
    std::ostringstream t;
    for (int i = 0; i < chi.size(); ++i) {
      std::vector<std::int64_t> row;
      for (int j = 0; j < chi.size(); ++j) {
        row.push_back(chi(i, j));
        t << (j ? " " : "") << chi(i, j);
      }
      t << "\n";
      rows.push_back(row);
    }
    o.data = {{"euler", rows}};
    o.text = t.str();
    return o;
  }
  if (name == "subdims") {
    const auto subs = generic_subdims(q, alpha(), cmd.budget);
    Output o;
    o.verdict = "ok";
    json list = json::array();
    for (const auto& s : subs) list.push_back(to_json(s));
    o.data = {{"alpha", *cmd.alpha}, {"subdims", list}};
    o.text = vec_list(subs);
    return o;
  }
  if (name == "semistable") {
    return decision(is_theta_semistable_dim(q, theta(), alpha(), cmd.budget), "SEMISTABLE", "NOT SEMISTABLE");
  }
  if (name == "stable") {
    return decision(is_theta_stable_dim(q, theta(), alpha(), cmd.budget), "STABLE", "NOT STABLE");
  }
  if (name == "simple") {
    return decision(is_simple_dim(q, alpha()), "SIMPLE", "NOT SIMPLE");
  }
  if (name == "moduli-dim") {
    const std::int64_t dim = moduli_dimension(q, theta(), alpha(), cmd.budget);
    Output o;
    o.verdict = "ok";
    o.data = {{"dimension", dim}};
    o.text = std::to_string(dim) + "\n";
    return o;
  }
  if (name == "enumerate") {
    const auto dims = enumerate_stable_dims(q, theta(), cmd.max_total, cmd.budget);
    Output o;
    o.verdict = "ok";
    json list = json::array();
    for (const auto& s : dims) list.push_back(to_json(s));
    o.data = {{"stable", list}};
    o.text = vec_list(dims);
    return o;
  }
  if (name == "local-quiver") {
    std::vector<Part> parts;
    for (const auto& [m, beta] : cmd.parts) parts.push_back({m, DimVector(beta)});
    const DecompositionType tau(std::move(parts));
    const LocalQuiverSetting local = local_quiver(q, tau);
    const std::string qj = quiver_to_json(local.quiver, local.dims);
    const bool simple = is_simple_dim(local.quiver, local.dims);
    Output o;
    o.verdict = "ok";
    o.data = {{"quiver", json::parse(qj)}, {"simple", simple}};
    o.text = qj + "\nsimple: " + (simple ? "yes" : "no") + "\n";
    if (cmd.theta) {
      StableViaLocalOptions opts;
      opts.lattice_budget = cmd.budget;
      const bool st = stable_via_local(q, theta(), tau, opts);
      o.data["stable"] = st;
      o.text += std::string("stable: ") + (st ? "yes" : "no") + "\n";
    }
    return o;
  }
  if (name == "oracle-simple") {
    PrimeFieldConfig cfg;
    cfg.modulus = cmd.modulus.value_or(kDefaultQuiverModulus);
    cfg.seed = cmd.seed;
    cfg.trials = cmd.trials;
    cfg.max_total = cmd.max_dim;
    return oracle_output(oracle_simple_exists(q, alpha(), cfg));
  }
  throw Error("unknown subcommand '" + name + "'");
}

}  // namespace

RunResult run(const Command& cmd) {
  RunResult result;
  try {
    Output o = dispatch(cmd, result.err);
    result.exit_code = o.exit_code;
    if (cmd.json) {
      result.out = json{{"verdict", o.verdict}, {"data", o.data}}.dump() + "\n";
    } else {
      result.out = o.text;
    }
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    result.err += std::string("error: ") + e.what() + "\n";
    if (cmd.json) result.out = json{{"verdict", "error"}, {"data", {{"message", e.what()}}}}.dump() + "\n";
  }
  return result;
}

RunResult main_entry(const std::vector<std::string>& args) {
  try {
    return run(parse_args(args));
  } catch (const UsageError& e) {
    RunResult r;
    r.exit_code = e.exit_code();
    (r.exit_code == 0 ? r.out : r.err) = e.what();
    return r;
  }
}

}  // namespace qmod::cli

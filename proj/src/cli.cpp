#include "wigner/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wigner/dsl.hpp"
#include "wigner/evolution.hpp"
#include "wigner/grid_io.hpp"
#include "wigner/identities.hpp"

namespace wigner::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  std::string hbar = "1";
  std::string out = ".";
  std::string format = "f64";
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---- verify ---------------------------------------------------------------

std::string verify_line(const IdentityCheck& c) {
  std::string line = c.name + ": ";
  switch (c.expect) {
    case Expectation::identity:
      line += c.difference.is_zero() ? "identity holds" : "identity FAILS, lhs - rhs = " + dsl::format(c.difference);
      break;
    case Expectation::mismatch:
      line += c.difference.is_zero() ? "literal form unexpectedly holds"
                                     : "literal form differs as expected, lhs - rhs = " + dsl::format(c.difference);
      break;
    case Expectation::divergence:
    case Expectation::not_divergence:
      if (c.residual.is_zero()) {
        line += "divergence";
        if (c.current) line += ", J = " + dsl::format(*c.current);
      } else {
        line += "NOT divergence, residual = " + dsl::format(c.residual);
      }
      break;
  }
  return line + (c.passed ? "  [PASS]" : "  [FAIL]");
}

int cmd_verify(const Globals& g, std::ostream& out) {
  const Rational hbar = parse_rational(g.hbar);
  if (sgn(hbar) <= 0) throw ConfigError("--hbar must be positive");
  bool all = true;
  for (const IdentityCheck& c : run_identity_suite(hbar)) {
    out << verify_line(c) << "\n";
    all = all && c.passed;
  }
  return all ? kOk : kFailed;
}

// ---- decompose ------------------------------------------------------------

int cmd_decompose(const Globals& g, const std::string& text, std::ostream& out) {
  const Rational hbar = parse_rational(g.hbar);
  const DiffOpExpr e = dsl::elaborate(dsl::parse(text), hbar);
  const Decomposition dec = decompose(e);
  out << "expression: " << dsl::format(e) << "\n";
  out << "residual: " << dsl::format(dec.residual) << "\n";
  out << "J: " << dsl::format(-dec.current) << "\n";
  return dec.residual.is_zero() ? kOk : kNotDivergence;
}

// ---- state ----------------------------------------------------------------

struct StateArgs {
  std::string kind = "vacuum";
  double alpha_re = 0, alpha_im = 0, r = 0.3, phi = 0, nbar = 0;
  int n = 0;
  int photon_add = 0;
  std::optional<double> extent;
  int points = 256;
  std::string label;
};

void export_field(const Globals& g, const WignerField& w, const std::string& name, std::ostream& out) {
  fs::create_directories(g.out);
  const fs::path stem = fs::path(g.out) / name;
  if (g.format == "csv") {
    write_csv(fs::path(stem.string() + ".csv"), w);
    out << "wrote " << stem.string() << ".csv";
  } else {
    write_grid(stem, w);
    out << "wrote " << stem.string() << ".json/.f64";
  }
  const Diagnostics d = diagnostics(w);
  out << "  norm=" << fmt_double(d.norm) << " min=" << fmt_double(d.min_value) << " purity=" << fmt_double(d.purity)
      << "\n";
}

int cmd_state(const Globals& g, const StateArgs& a, std::ostream& out, std::ostream& err) {
  StateSpec spec;
  spec.kind = state_kind_from_name(a.kind);
  spec.alpha = cplx(a.alpha_re, a.alpha_im);
  spec.r = a.r;
  spec.phi = a.phi;
  spec.n = a.n;
  spec.nbar = a.nbar;
  if (a.photon_add < 0) throw ConfigError("--photon-add must be >= 0");

  // Without an explicit extent, widen the box until the state fits.
  WignerField w;
  if (a.extent) {
    w = make_state(spec, PhaseSpaceGrid::square(*a.extent, a.points));
  } else {
    for (double half = 6.0;; half += 1.0) {
      try {
        w = make_state(spec, PhaseSpaceGrid::square(half, a.points));
        break;
      } catch (const GridTooSmall&) {
        if (half >= 12.0) throw;
      }
    }
    if (w.grid.x_max != 6.0) err << "note: box widened to [-" << w.grid.x_max << ", " << w.grid.x_max << "]^2\n";
  }
  if (!a.label.empty()) w.label = a.label;
  export_field(g, w, a.kind, out);

  const DiffOpExpr add = named_generator(Generator::photon_add, 1);
  for (int k = 1; k <= a.photon_add; ++k) {
    w = renormalized(apply_expr(add, w));
    w.label = (a.label.empty() ? a.kind : a.label) + " + " + std::to_string(k) + " photon(s)";
    export_field(g, w, a.kind + "_add" + std::to_string(k), out);
  }
  return kOk;
}

// ---- evolve ---------------------------------------------------------------

void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback) {
  return obj.contains(key) ? obj.at(key).get<T>() : fallback;
}

struct RunConfig {
  EvolutionConfig evo;
  std::string hamiltonian_text;
  bool write_frames = true;
};

RunConfig parse_run_config(const json& j) {
  reject_unknown(j, {"schema", "hamiltonian", "initial", "grid", "bath", "dt", "t_end", "frame_stride", "write_frames"},
                 "config");
  if (j.contains("schema") && j.at("schema") != "wigner-run/1") throw ConfigError("config schema must be wigner-run/1");
  for (const char* req : {"hamiltonian", "initial", "t_end"})
    if (!j.contains(req)) throw ConfigError(std::string("config is missing '") + req + "'");

  RunConfig rc;
  rc.hamiltonian_text = j.at("hamiltonian").get<std::string>();
  rc.evo.hamiltonian = dsl::elaborate_symbol(dsl::parse_symbol(rc.hamiltonian_text), 1);

  const json& in = j.at("initial");
  reject_unknown(in, {"kind", "alpha", "r", "phi", "n", "nbar"}, "initial");
  StateSpec& s = rc.evo.initial;
  s.kind = state_kind_from_name(in.at("kind").get<std::string>());
  if (in.contains("alpha")) {
    const json& al = in.at("alpha");
    if (al.is_number()) {
      s.alpha = al.get<double>();
    } else {
      if (!al.is_array() || al.size() != 2) throw ConfigError("initial.alpha must be a number or [re, im]");
      s.alpha = cplx(al[0].get<double>(), al[1].get<double>());
    }
  }
  s.r = get_or(in, "r", 0.0);
  s.phi = get_or(in, "phi", 0.0);
  s.n = get_or(in, "n", 0);
  s.nbar = get_or(in, "nbar", 0.0);

  if (j.contains("grid")) {
    const json& gj = j.at("grid");
    reject_unknown(gj, {"x_min", "x_max", "p_min", "p_max", "nx", "np"}, "grid");
    PhaseSpaceGrid& g = rc.evo.grid;
    g.x_min = get_or(gj, "x_min", g.x_min);
    g.x_max = get_or(gj, "x_max", g.x_max);
    g.p_min = get_or(gj, "p_min", g.p_min);
    g.p_max = get_or(gj, "p_max", g.p_max);
    g.nx = get_or(gj, "nx", g.nx);
    g.np = get_or(gj, "np", g.np);
  }
  if (j.contains("bath")) {
    const json& bj = j.at("bath");
    reject_unknown(bj, {"gamma", "nbar", "omega0", "hbar"}, "bath");
    BathParams b;
    b.gamma = get_or(bj, "gamma", 0.0);
    b.nbar = get_or(bj, "nbar", 0.0);
    b.omega0 = get_or(bj, "omega0", 1.0);
    b.hbar = get_or(bj, "hbar", 1.0);
    rc.evo.bath = b;
  }
  if (j.contains("dt")) rc.evo.dt = j.at("dt").get<double>();
  rc.evo.t_end = j.at("t_end").get<double>();
  rc.evo.frame_stride = get_or(j, "frame_stride", 1);
  rc.write_frames = get_or(j, "write_frames", true);
  return rc;
}

int cmd_evolve(const Globals& g, const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig rc;
  try {
    rc = parse_run_config(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config has a value of the wrong type: ") + e.what());
  }
  const StepPlan plan = plan_steps(rc.evo);

  fs::create_directories(g.out);
  json frames = json::array();
  json series = {{"t", json::array()},     {"norm", json::array()},   {"mean_x", json::array()},
                 {"mean_p", json::array()}, {"var_x", json::array()},  {"var_p", json::array()},
                 {"purity", json::array()}, {"min_value", json::array()}};
  std::optional<WignerField> first;
  Frame last;
  int index = 0;
  evolve(rc.evo, [&](const Frame& fr) {
    if (!first) first = fr.field;
    json entry = {{"index", index}, {"t", fr.t}};
    if (rc.write_frames) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%05d", index);
      const fs::path stem = fs::path(g.out) / name;
      if (g.format == "csv") {
        write_csv(fs::path(stem.string() + ".csv"), fr.field);
        entry["file"] = std::string(name) + ".csv";
      } else {
        write_grid(stem, fr.field);
        entry["file"] = std::string(name);
      }
    }
    frames.push_back(entry);
    series["t"].push_back(fr.t);
    series["norm"].push_back(fr.diag.norm);
    series["mean_x"].push_back(fr.diag.mean_x);
    series["mean_p"].push_back(fr.diag.mean_p);
    series["var_x"].push_back(fr.diag.var_x);
    series["var_p"].push_back(fr.diag.var_p);
    series["purity"].push_back(fr.diag.purity);
    series["min_value"].push_back(fr.diag.min_value);
    last = fr;
    ++index;
  });

  json echo = j;
  echo["schema"] = "wigner-run/1";
  json manifest = {{"schema", "wigner-run/1"},
                   {"config", echo},
                   {"steps", plan.steps},
                   {"dt", plan.dt},
                   {"frames", frames},
                   {"diagnostics", series}};
  std::ofstream(fs::path(g.out) / "run.json") << manifest.dump(2) << "\n";

  const Diagnostics& d = last.diag;
  out << "final t=" << fmt_double(last.t) << " steps=" << plan.steps << " norm=" << fmt_double(d.norm)
      << " mean_x=" << fmt_double(d.mean_x) << " mean_p=" << fmt_double(d.mean_p) << " var_x=" << fmt_double(d.var_x)
      << " var_p=" << fmt_double(d.var_p) << " purity=" << fmt_double(d.purity) << " min=" << fmt_double(d.min_value)
      << " l2_to_initial=" << fmt_double(l2_distance(last.field, *first)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact phase-space operator algebra and Wigner-function dynamics"};
  app.require_subcommand(1);
  app.footer(std::string("Expression grammar:\n") + std::string(dsl::kGrammar) +
             "\nExit codes: 0 ok/divergence, 2 parse or config error, 3 not a divergence, 4 grid too small, "
             "5 numeric blow-up.");

  Globals g;
  app.add_option("--hbar", g.hbar, "value substituted for hbar (rational, default 1)");
  app.add_option("--out", g.out, "output directory");
  app.add_option("--format", g.format, "export format")->check(CLI::IsMember({"f64", "csv"}));

  auto* verify = app.add_subcommand("verify", "check the photon addition/removal and Lindblad identities exactly");
  auto* dec = app.add_subcommand("decompose", "split an expression into -div J plus a residual");
  std::string expr;
  dec->add_option("expr", expr, "expression in the grammar below")->required();

  auto* state = app.add_subcommand("state", "sample a Wigner function and export it");
  StateArgs sa;
  state->add_option("--kind", sa.kind)->check(CLI::IsMember({"vacuum", "coherent", "squeezed", "fock", "thermal"}));
  state->add_option("--alpha-re", sa.alpha_re, "coherent displacement, real part");
  state->add_option("--alpha-im", sa.alpha_im, "coherent displacement, imaginary part");
  state->add_option("--r", sa.r, "squeezing magnitude (default 0.3)");
  state->add_option("--phi", sa.phi, "squeezing angle");
  state->add_option("--n", sa.n, "Fock number");
  state->add_option("--nbar", sa.nbar, "thermal occupation");
  state->add_option("--photon-add", sa.photon_add, "apply a~ * W * a this many times, renormalizing");
  state->add_option("--extent", sa.extent, "half-width L of the box [-L, L]^2 (default: smallest of 6..12 that fits)");
  state->add_option("--points", sa.points, "grid points per axis");
  state->add_option("--label", sa.label, "label stored in the metadata");

  auto* evolve_cmd = app.add_subcommand("evolve", "integrate a run config (schema wigner-run/1)");
  std::string config_path;
  evolve_cmd->add_option("config", config_path, "JSON run config")->required();

  for (auto* sub : {verify, dec, state, evolve_cmd}) sub->fallthrough();

  std::vector<std::string> argv_store = {"wigner"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(g, out);
    if (*dec) return cmd_decompose(g, expr, out);
    if (*state) return cmd_state(g, sa, out, err);
    if (*evolve_cmd) return cmd_evolve(g, config_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ElaborationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GridTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kGridTooSmall;
  } catch (const NumericBlowup& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wigner::cli

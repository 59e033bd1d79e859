#include "fracwave/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "fracwave/error.hpp"
#include "fracwave/io.hpp"
#include "fracwave/verify.hpp"

namespace fracwave::cli {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + " is missing '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
  return v.get<int>();
}

std::vector<double> numbers(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + " must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ConfigError(where + " must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string error_record(const std::string& experiment, const BlowUpError& e) {
  json j{{"error", "blow-up"}, {"experiment", experiment}, {"message", e.what()}};
  j["time"] = std::isfinite(e.time()) ? json(e.time()) : json();
  return j.dump();
}

json catalog_json() {
  json arr = json::array();
  for (const auto& s : catalog()) arr.push_back(to_json(s));
  return arr;
}

int cmd_list(bool as_json, std::ostream& out) {
  if (as_json) {
    out << catalog_json().dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& s : catalog()) {
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %s\n", s.name.c_str(), s.description.c_str());
    out << line;
  }
  return kExitOk;
}

struct RunFlags {
  std::string target;
  std::optional<int> nodes;
  std::optional<std::string> dt;
  std::optional<double> t_end;
  std::optional<double> alpha;
  std::optional<std::string> out;
  std::optional<std::string> filter;
  std::optional<std::int64_t> sample_every;
  bool converge = false;
  bool json = false;
};

RunConfig resolve(const RunFlags& f) {
  RunConfig cfg;
  const std::filesystem::path target(f.target);
  if (target.extension() == ".json" || std::filesystem::is_regular_file(target)) {
    cfg = load_config(target);
  } else {
    cfg.spec = find_experiment(f.target);
  }
  if (f.nodes) cfg.spec.nodes = *f.nodes;
  if (f.dt) {
    if (*f.dt == "auto") {
      cfg.auto_dt = true;
      cfg.dt.reset();
    } else {
      try {
        std::size_t used = 0;
        cfg.dt = std::stod(*f.dt, &used);
        if (used != f.dt->size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ConfigError("--dt expects a number or 'auto', got '" + *f.dt + "'");
      }
      cfg.auto_dt = false;
    }
  }
  if (f.t_end) cfg.spec.t_end = *f.t_end;
  if (f.alpha) {
    cfg.spec.params.alpha = *f.alpha;
    cfg.spec.alpha_sweep.clear();
  }
  if (f.out) cfg.out = *f.out;
  if (f.filter) cfg.filter = *f.filter == "on";
  if (f.sample_every) cfg.sample_every = *f.sample_every;
  if (cfg.dt && !(*cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (cfg.sample_every < 0) throw ConfigError("sample_every must be >= 0");
  cfg.spec.validate();
  return cfg;
}

RunOptions options_of(const RunConfig& cfg) {
  RunOptions o;
  o.dt = cfg.dt;
  o.auto_dt = cfg.auto_dt;
  o.filter = cfg.filter;
  o.sample_every = cfg.sample_every;
  return o;
}

json manifest_base(const RunConfig& cfg, const std::string& mode, double seconds) {
  json m;
  m["experiment"] = cfg.spec.name;
  m["mode"] = mode;
  m["spec"] = config_json(cfg);
  m["wall_time_s"] = seconds;
  m["git_describe"] = std::string(build_describe());
  return m;
}

json error_json(const std::optional<ErrorPair>& e) {
  if (!e) return json();
  return {{"l2", e->l2}, {"linf", e->linf}};
}

int run_converge(const RunConfig& cfg, bool as_json, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_convergence(cfg.spec, options_of(cfg));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string csv_name = cfg.spec.name + "_convergence.csv";
  write_atomic(cfg.out / csv_name, convergence_csv(rows));
  json m = manifest_base(cfg, "converge", seconds);
  m["rows"] = json::array();
  for (const auto& r : rows) m["rows"].push_back(to_json(r));
  m["dt"] = rows.empty() ? json() : json(rows.back().dt);
  m["files"] = {csv_name};
  write_atomic(cfg.out / (cfg.spec.name + "_manifest.json"), m.dump(2) + '\n');

  if (as_json) {
    out << m.dump(2) << '\n';
  } else {
    out << convergence_csv(rows);
  }
  int code = kExitOk;
  for (const auto& r : rows) {
    if (!r.failed) continue;
    err << json{{"error", r.blew_up ? "blow-up" : "failure"},
                {"experiment", cfg.spec.name},
                {"N", r.n},
                {"message", r.failure}}
               .dump()
        << '\n';
    code = r.blew_up ? kExitBlowUp : kExitFailure;
  }
  return code;
}

int run_snapshots(const RunConfig& cfg, bool as_json, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto runs = run_sweep(cfg.spec, cfg.spec.nodes, options_of(cfg));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const bool sweep = runs.size() > 1;
  json m = manifest_base(cfg, "single", seconds);
  m["N"] = cfg.spec.nodes;
  m["dt"] = runs.front().dt;
  m["runs"] = json::array();
  json files = json::array();
  for (const auto& r : runs) {
    const std::string stem =
        sweep ? cfg.spec.name + "_alpha" + format_number(r.alpha) : cfg.spec.name;
    json entry{{"alpha", r.alpha},   {"N", r.nodes},
               {"dt", r.dt},         {"steps", r.steps},
               {"t_end", r.t_end},   {"error", error_json(r.error)},
               {"unmasked_error", error_json(r.unmasked_error)},
               {"max_relative_mass_drift", r.diagnostics.max_relative_mass_drift()},
               {"max_relative_energy_drift", r.diagnostics.max_relative_energy_drift()}};
    json run_files = json::array();
    for (const auto& s : r.snapshots) {
      const std::string name = snapshot_filename(stem, s.t, r.nodes);
      write_atomic(cfg.out / name, snapshot_csv(s));
      run_files.push_back(name);
    }
    const std::string diag = stem + "_diagnostics_N" + std::to_string(r.nodes) + ".csv";
    write_atomic(cfg.out / diag, diagnostics_csv(r.diagnostics));
    run_files.push_back(diag);
    for (const auto& f : run_files) files.push_back(f);
    entry["files"] = run_files;
    m["runs"].push_back(entry);
  }
  m["files"] = files;
  write_atomic(cfg.out / (cfg.spec.name + "_manifest.json"), m.dump(2) + '\n');

  if (as_json) {
    out << m.dump(2) << '\n';
  } else {
    for (const auto& r : runs) {
      char line[256];
      std::snprintf(line, sizeof line, "%s alpha=%g N=%d dt=%g steps=%lld", cfg.spec.name.c_str(),
                    r.alpha, r.nodes, r.dt, static_cast<long long>(r.steps));
      out << line;
      if (r.error) {
        std::snprintf(line, sizeof line, " l2=%.5e linf=%.5e", r.error->l2, r.error->linf);
        out << line;
      }
      out << '\n';
    }
    out << "wrote " << files.size() + 1 << " files to " << cfg.out.string() << '\n';
  }
  return kExitOk;
}

int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.converge && flags.nodes) throw ConfigError("-N cannot be combined with --converge");
  const RunConfig cfg = resolve(flags);
  try {
    return flags.converge ? run_converge(cfg, flags.json, out, err)
                          : run_snapshots(cfg, flags.json, out);
  } catch (const BlowUpError& e) {
    err << error_record(cfg.spec.name, e) << '\n';
    return kExitBlowUp;
  }
}

int cmd_verify(const std::string& level, int trials, bool tamper, bool as_json, std::ostream& out) {
  verify::Options o;
  o.trials = trials;
  o.tamper_dealias_pad = tamper;
  const auto report = verify::run(level == "full" ? verify::Level::Full : verify::Level::Quick, o);
  if (as_json) {
    json arr = json::array();
    for (const auto& c : report.checks) {
      arr.push_back({{"name", c.name},
                     {"passed", c.passed},
                     {"worst", std::isfinite(c.worst) ? json(c.worst) : json()},
                     {"tolerance", c.tolerance},
                     {"witness", c.witness},
                     {"seconds", c.seconds}});
    }
    out << json{{"level", level}, {"passed", report.all_passed()}, {"checks", arr}}.dump(2) << '\n';
  } else {
    verify::print(out, report);
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  require_keys(doc, "config",
               {"schema_version", "name", "description", "params", "domain", "initial",
                "has_oracle", "t_end", "N_list", "N", "dt", "mask_half_width", "snapshot_times",
                "alpha_sweep", "output", "sample_every", "filter"});
  if (!doc.contains("schema_version")) throw ConfigError("config is missing 'schema_version'");
  if (integer(doc.at("schema_version"), "schema_version") != kSchemaVersion) {
    throw ConfigError("unsupported schema_version; expected " + std::to_string(kSchemaVersion));
  }
  RunConfig cfg;
  ExperimentSpec& s = cfg.spec;
  if (!doc.contains("name") || !doc.at("name").is_string()) throw ConfigError("config needs a string 'name'");
  s.name = doc.at("name").get<std::string>();
  if (doc.contains("description")) {
    if (!doc.at("description").is_string()) throw ConfigError("description must be a string");
    s.description = doc.at("description").get<std::string>();
  }

  if (!doc.contains("params")) throw ConfigError("config is missing 'params'");
  const json& p = doc.at("params");
  require_keys(p, "params", {"kappa1", "gamma", "kappa2", "alpha"});
  s.params = {number(p, "kappa1", "params"), number(p, "gamma", "params"),
              number(p, "kappa2", "params"), number(p, "alpha", "params")};

  if (!doc.contains("domain")) throw ConfigError("config is missing 'domain'");
  const json& d = doc.at("domain");
  require_keys(d, "domain", {"x_left", "length"});
  s.x_left = number(d, "x_left", "domain");
  s.length = number(d, "length", "domain");

  if (!doc.contains("initial")) throw ConfigError("config is missing 'initial'");
  const json& init = doc.at("initial");
  require_keys(init, "initial", {"kind", "c", "x0", "peakons"});
  if (!init.contains("kind") || !init.at("kind").is_string()) {
    throw ConfigError("initial needs a string 'kind'");
  }
  s.initial = initial_kind_from_string(init.at("kind").get<std::string>());
  if (s.initial == InitialKind::PeakonTrain) {
    if (init.contains("c") || init.contains("x0")) {
      throw ConfigError("peakon-train takes 'peakons', not 'c'/'x0'");
    }
    if (!init.contains("peakons") || !init.at("peakons").is_array()) {
      throw ConfigError("peakon-train needs a 'peakons' array");
    }
    for (const auto& pk : init.at("peakons")) {
      require_keys(pk, "peakon", {"c", "x"});
      s.peakons.push_back({number(pk, "c", "peakon"), number(pk, "x", "peakon")});
    }
    s.has_oracle = false;
  } else {
    if (init.contains("peakons")) throw ConfigError("'peakons' only applies to peakon-train");
    s.speed = number(init, "c", "initial");
    s.x0 = init.contains("x0") ? number(init, "x0", "initial") : 0.0;
    s.has_oracle = true;
  }
  if (doc.contains("has_oracle")) {
    if (!doc.at("has_oracle").is_boolean()) throw ConfigError("has_oracle must be a boolean");
    s.has_oracle = doc.at("has_oracle").get<bool>();
  }

  s.t_end = number(doc, "t_end", "config");
  s.n_list.clear();
  if (doc.contains("N_list")) {
    if (!doc.at("N_list").is_array()) throw ConfigError("N_list must be an array");
    for (const auto& n : doc.at("N_list")) s.n_list.push_back(integer(n, "N_list entry"));
  }
  if (doc.contains("N")) s.nodes = integer(doc.at("N"), "N");
  if (doc.contains("dt")) {
    const json& dt = doc.at("dt");
    if (dt.is_string() && dt.get<std::string>() == "auto") {
      s.dt.reset();
    } else if (dt.is_number()) {
      s.dt = dt.get<double>();
    } else {
      throw ConfigError("dt must be a number or \"auto\"");
    }
  }
  if (doc.contains("mask_half_width") && !doc.at("mask_half_width").is_null()) {
    s.mask_half_width = number(doc, "mask_half_width", "config");
  }
  if (doc.contains("snapshot_times")) s.snapshot_times = numbers(doc.at("snapshot_times"), "snapshot_times");
  if (doc.contains("alpha_sweep")) s.alpha_sweep = numbers(doc.at("alpha_sweep"), "alpha_sweep");

  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) throw ConfigError("output must be a string");
    cfg.out = doc.at("output").get<std::string>();
  }
  if (doc.contains("sample_every")) {
    const int every = integer(doc.at("sample_every"), "sample_every");
    if (every < 0) throw ConfigError("sample_every must be >= 0");
    cfg.sample_every = every;
  }
  if (doc.contains("filter")) {
    if (!doc.at("filter").is_boolean()) throw ConfigError("filter must be a boolean");
    cfg.filter = doc.at("filter").get<bool>();
  }
  s.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  try {
    return parse_config(json::parse(in));
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

json config_json(const RunConfig& cfg) {
  json j = to_json(cfg.spec);
  j["schema_version"] = kSchemaVersion;
  if (cfg.auto_dt) {
    j["dt"] = "auto";
  } else if (cfg.dt) {
    j["dt"] = *cfg.dt;
  }
  j["output"] = cfg.out.string();
  j["sample_every"] = cfg.sample_every;
  j["filter"] = cfg.filter;
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier spectral Galerkin solver for the fractional Camassa-Holm family",
               "fracwave"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the built-in experiments");
  list->add_flag("--json", list_json, "Machine-readable catalog");

  RunFlags flags;
  auto* run_cmd = app.add_subcommand("run", "Run a catalog experiment or a JSON config");
  run_cmd->add_option("experiment", flags.target, "Catalog name or path to a config file")
      ->required();
  run_cmd->add_option("-N", flags.nodes, "Grid nodes for a single run");
  run_cmd->add_option("--dt", flags.dt, "Time step, or 'auto' for 0.001 / k_max");
  run_cmd->add_option("--t-end", flags.t_end, "Final time");
  run_cmd->add_option("--alpha", flags.alpha, "Fractional order; replaces any alpha sweep");
  run_cmd->add_option("-o,--out", flags.out, "Output directory");
  run_cmd->add_option("--filter", flags.filter, "Exponential filter after each step")
      ->check(CLI::IsMember({"on", "off"}));
  run_cmd->add_option("--sample-every", flags.sample_every, "Steps between diagnostic samples");
  run_cmd->add_flag("--converge", flags.converge, "Run the convergence study over N_list");
  run_cmd->add_flag("--json", flags.json, "Print the manifest instead of a summary");

  std::string level = "quick";
  int trials = 100;
  bool tamper = false;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property-verification suite");
  verify_cmd->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--trials", trials, "Random cases per property")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "Machine-readable report");
  verify_cmd->add_flag("--tamper-dealias", tamper, "Test hook: undersized product grid")
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : {list, run_cmd, verify_cmd}) {
      if (sub->parsed() && e.get_exit_code() == 0) {
        out << sub->help();
        return kExitOk;
      }
    }
    err << "fracwave: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_json, out);
    if (run_cmd->parsed()) return cmd_run(flags, out, err);
    return cmd_verify(level, trials, tamper, verify_json, out);
  } catch (const BlowUpError& e) {
    err << error_record(flags.target, e) << '\n';
    return kExitBlowUp;
  } catch (const ConfigError& e) {
    err << "fracwave: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "fracwave: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fracwave: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace fracwave::cli

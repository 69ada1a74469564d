#include "stonework/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "stonework/hilbert_module.hpp"
#include "stonework/lattice_filters.hpp"
#include "stonework/matrix_algebra.hpp"
#include "stonework/observables.hpp"
#include "stonework/verify.hpp"

namespace stonework::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw CliError(kValidationError, "invalid config field '" + field + "': " + why);
}

std::size_t positive_int(const json& doc, const char* key) {
  if (!doc.contains(key)) invalid(key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) invalid(key, "expected a positive integer");
  return v.get<std::size_t>();
}

Complex parse_complex(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    invalid(field, "expected [re, im]");
  }
  const Complex z{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) invalid(field, "non-finite entry");
  return z;
}

ComplexVector parse_vector(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array() || v.size() != n) invalid(field, "expected " + std::to_string(n) + " entries");
  ComplexVector out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(parse_complex(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

FiberedOperator parse_element(const json& v, std::size_t n, std::size_t m, const std::string& field) {
  if (!v.is_array() || v.size() != m) invalid(field, "expected " + std::to_string(m) + " fibers");
  std::vector<ComplexMatrix> fibers;
  for (std::size_t w = 0; w < m; ++w) {
    const std::string fname = field + "[" + std::to_string(w) + "]";
    const json& f = v[w];
    if (!f.is_array() || f.size() != n) invalid(fname, "expected " + std::to_string(n) + " rows");
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const ComplexVector row = parse_vector(f[r], n, fname + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < n; ++c) a(r, c) = row[c];
    }
    fibers.push_back(std::move(a));
  }
  return FiberedOperator(std::move(fibers));
}

ModuleElement parse_module_element(const json& v, std::size_t n, std::size_t m, const std::string& field) {
  if (!v.is_array() || v.size() != m) invalid(field, "expected " + std::to_string(m) + " fibers");
  std::vector<ComplexVector> fibers;
  for (std::size_t w = 0; w < m; ++w) fibers.push_back(parse_vector(v[w], n, field + "[" + std::to_string(w) + "]"));
  return ModuleElement::from_fibers(std::move(fibers));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

const FiberedOperator& named_element(const AlgebraConfig& cfg, const std::string& name) {
  const auto it = cfg.elements.find(name);
  if (it == cfg.elements.end()) throw CliError(kValidationError, "unknown element '" + name + "'");
  return it->second;
}

const ModuleElement& named_vector(const AlgebraConfig& cfg, const std::string& name) {
  const auto it = cfg.vectors.find(name);
  if (it == cfg.vectors.end()) throw CliError(kValidationError, "unknown vector '" + name + "'");
  return it->second;
}

json ranks_json(const std::vector<std::size_t>& ranks) { return json(ranks); }

json center_json(const CenterElement& c) {
  json out = json::array();
  for (const auto& z : c.values()) out.push_back(to_json(z));
  return out;
}

json pointset_json(const PointSet& s) { return json(s.points()); }

struct Outcome {
  json results = json::object();
  json properties = json::array();

  void property(const std::string& name, bool pass) { properties.push_back({{"name", name}, {"pass", pass}}); }
  bool pass() const {
    for (const auto& p : properties) {
      if (!p.at("pass").get<bool>()) return false;
    }
    return true;
  }
};

struct Options {
  std::string config_path;
  double eps = Tolerance::kDefault;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  bool timings = false;

  std::string element;
  std::string vector;
  std::vector<std::string> elements;
  std::vector<std::string> quasipoint_texts;
  std::string quasipoint;
  std::string from;
  std::string to;
  std::size_t omega = 0;
  std::size_t cap = kDefaultClosureCap;
};

Outcome cmd_abelian_check(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["element"] = o.element;
  const FiberedOperator& p = named_element(cfg, o.element);
  Outcome r;
  const bool projection = is_projection(p, tol);
  r.results["projection"] = projection;
  r.property("projection", projection);
  if (projection) {
    r.results["fiber_ranks"] = ranks_json(fiber_ranks(p, tol));
    const bool abelian = is_abelian_projection(p, tol);
    r.results["abelian"] = abelian;
    r.property("abelian", abelian);
    if (abelian) r.results["generator"] = to_json(abelian_generator(p, tol));
  }
  return r;
}

Outcome cmd_e_a(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["vector"] = o.vector;
  const ModuleElement& a = named_vector(cfg, o.vector);
  const ModuleElement at = normalize(a, tol);
  const FiberedOperator e = abelian_projection(at, tol);
  Outcome r;
  r.results["normalized_input"] = (at == a);
  r.results["a_normalized"] = to_json(at);
  r.results["e_a"] = to_json(e);
  r.results["central_carrier"] = center_json(central_carrier(e, tol));
  r.property("projection", is_projection(e, tol));
  r.property("abelian", is_abelian_projection(e, tol));
  return r;
}

Outcome cmd_central_carrier(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["element"] = o.element;
  const FiberedOperator& p = named_element(cfg, o.element);
  Outcome r;
  const bool projection = is_projection(p, tol);
  r.property("projection", projection);
  if (projection) r.results["central_carrier"] = center_json(central_carrier(p, tol));
  return r;
}

Outcome cmd_normalize(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["vector"] = o.vector;
  const ModuleElement& a = named_vector(cfg, o.vector);
  const ModuleElement at = normalize(a, tol);
  const CenterElement aa = inner(at, at);
  const PointSet s = support(a, tol);
  Outcome r;
  r.results["normalized"] = to_json(at);
  r.results["support"] = pointset_json(s);
  r.results["inner_self"] = center_json(aa);
  r.results["norm"] = module_norm(a);
  bool unit = true;
  try {
    unit = aa.snapped_projection(tol) == char_fn(s);
  } catch (const Error&) {
    unit = false;
  }
  r.property("inner_self_is_support_indicator", unit);
  return r;
}

Outcome cmd_quasipoints(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  std::vector<std::string> names = o.elements;
  if (names.empty()) {
    for (const auto& [name, _] : cfg.elements) names.push_back(name);
  }
  inputs["elements"] = names;
  inputs["cap"] = o.cap;
  if (names.empty()) throw CliError(kValidationError, "quasipoints needs at least one named element");
  std::vector<FiberedOperator> gens;
  for (const auto& name : names) gens.push_back(named_element(cfg, name));

  const FiniteLattice l = meet_closure(gens, o.cap, tol);
  Outcome r;
  json elements = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    json e = {{"index", i}, {"fibers", to_json(l.element(i))}};
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (l.find(gens[g]) == i) e["names"].push_back(names[g]);
    }
    elements.push_back(std::move(e));
  }
  json leq = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l.leq(i, j)) leq.push_back({i, j});
    }
  }
  const auto atoms = l.atoms();
  const auto quasipoints = enumerate_quasipoints(l);
  json qps = json::array();
  bool axioms = true;
  for (std::size_t q = 0; q < quasipoints.size(); ++q) {
    const bool ok = satisfies_quasipoint_axioms(l, quasipoints[q]);
    axioms = axioms && ok;
    qps.push_back({{"atom", atoms[q]},
                   {"members", quasipoints[q].members},
                   {"extension", to_json(extend_filter_to_quasipoint(l, quasipoints[q], tol))}});
  }
  r.results["size"] = l.size();
  r.results["elements"] = std::move(elements);
  r.results["leq"] = std::move(leq);
  r.results["atoms"] = atoms;
  r.results["quasipoints"] = std::move(qps);
  r.results["isolated"] = isolated_points(l);
  r.property("quasipoint_axioms", axioms);
  return r;
}

Outcome cmd_zeta(const AlgebraConfig& cfg, const Options& o, Tolerance, json& inputs) {
  inputs["quasipoint"] = o.quasipoint;
  const Quasipoint b = parse_quasipoint(o.quasipoint, cfg);
  Outcome r;
  r.results["quasipoint"] = to_json(b);
  r.results["omega"] = zeta(b).omega;
  return r;
}

Outcome cmd_orbit(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["from"] = o.from;
  inputs["to"] = o.to;
  const Quasipoint b = parse_quasipoint(o.from, cfg);
  const Quasipoint b2 = parse_quasipoint(o.to, cfg);
  Outcome r;
  r.results["from"] = to_json(b);
  r.results["to"] = to_json(b2);
  r.results["same_orbit"] = zeta(b) == zeta(b2);
  const auto u = orbit_witness(b, b2, cfg.m);
  if (u) {
    r.results["witness"] = to_json(*u);
    const Quasipoint image = unitary_act(*u, b, tol);
    r.results["image"] = to_json(image);
    r.property("witness_unitary", is_unitary(*u, tol));
    r.property("witness_maps_from_to", same_quasipoint(image, b2));
  } else {
    r.results["witness"] = nullptr;
  }
  return r;
}

Outcome cmd_observable(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["element"] = o.element;
  inputs["quasipoints"] = o.quasipoint_texts;
  const FiberedOperator& a = named_element(cfg, o.element);
  Outcome r;
  const bool self_adjoint = is_self_adjoint(a, tol);
  r.property("self_adjoint", self_adjoint);
  if (!self_adjoint) return r;

  std::vector<Quasipoint> sample;
  for (const auto& text : o.quasipoint_texts) sample.push_back(parse_quasipoint(text, cfg));
  const bool eigenlines = sample.empty();
  if (eigenlines) sample = eigenline_quasipoints(a, tol);

  json rows = json::array();
  bool in_spectrum = true;
  for (const auto& b : sample) {
    const double value = observable_value(a, b, tol);
    const auto steps = spectral_steps(a.fiber(b.omega.omega), tol);
    double gap = INFINITY;
    for (double lambda : steps.lambdas) gap = std::min(gap, std::abs(lambda - value));
    in_spectrum = in_spectrum && gap <= 1e-8;
    json row = to_json(b);
    row["value"] = value;
    rows.push_back(std::move(row));
  }
  const auto image = observable_image(a, sample, tol);
  const auto spec = spectrum(a, tol);
  r.results["rows"] = std::move(rows);
  r.results["image"] = image;
  r.results["spectrum"] = spec;
  r.results["sample"] = eigenlines ? "eigenlines" : "given";
  r.property("image_in_spectrum", in_spectrum);
  if (eigenlines) r.property("image_equals_spectrum", image == spec);
  return r;
}

Outcome cmd_germ(const AlgebraConfig& cfg, const Options& o, Tolerance tol, json& inputs) {
  inputs["vector"] = o.vector;
  inputs["omega"] = o.omega;
  const ModuleElement& a = named_vector(cfg, o.vector);
  if (o.omega >= cfg.m) throw CliError(kValidationError, "omega outside Ω");
  const GermVector g = germ_eval(a, CenterQuasipoint{o.omega});
  Outcome r;
  r.results["omega"] = o.omega;
  r.results["value"] = to_json(g.value);
  r.results["zero"] = !support(a, tol).contains(o.omega);
  return r;
}

Outcome cmd_verify_all(std::uint64_t seed, Tolerance tol) {
  Outcome r;
  json suites = json::array();
  for (const auto& s : run_all_suites(seed, tol)) {
    json row = {{"name", s.name}, {"pass", s.pass}, {"samples", s.samples}, {"max_residual", s.max_residual}};
    if (!s.detail.empty()) row["detail"] = s.detail;
    suites.push_back(std::move(row));
    r.property(s.name, s.pass);
  }
  r.results["suites"] = std::move(suites);
  return r;
}

void emit_text(const json& report, std::ostream& out) {
  out << "command: " << report.at("command").get<std::string>() << "\n";
  out << "eps: " << report.at("tolerance").dump() << "\n";
  if (report.contains("seed")) out << "seed: " << report.at("seed").dump() << "\n";
  if (report.contains("error")) out << "error: " << report.at("error").at("message").get<std::string>() << "\n";
  for (const auto& [key, value] : report.at("results").items()) {
    if (key == "suites") {
      for (const auto& s : value) {
        out << "  " << (s.at("pass").get<bool>() ? "PASS " : "FAIL ") << s.at("name").get<std::string>()
            << "  samples=" << s.at("samples").dump() << "  max_residual=" << s.at("max_residual").dump()
            << "\n";
      }
      continue;
    }
    out << key << ": " << value.dump() << "\n";
  }
  for (const auto& p : report.at("properties")) {
    out << (p.at("pass").get<bool>() ? "PASS " : "FAIL ") << p.at("name").get<std::string>() << "\n";
  }
  out << "result: " << (report.at("pass").get<bool>() ? "pass" : "fail") << "\n";
}

// First token that is neither an option nor the value of a global option.
std::optional<std::string> find_command(const std::vector<std::string>& args) {
  static const std::vector<std::string> takes_value = {"--config", "--eps", "--seed", "--format"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("-", 0) == 0) {
      if (a.find('=') == std::string::npos &&
          std::find(takes_value.begin(), takes_value.end(), a) != takes_value.end()) {
        ++i;
      }
      continue;
    }
    return a;
  }
  return std::nullopt;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const ComplexMatrix& a) {
  json out = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const FiberedOperator& t) {
  json out = json::array();
  for (const auto& f : t.fibers()) out.push_back(to_json(f));
  return out;
}

json to_json(const ModuleElement& a) {
  json out = json::array();
  for (const auto& f : a.fibers()) out.push_back(to_json(f));
  return out;
}

json to_json(const Quasipoint& b) { return {{"omega", b.omega.omega}, {"line", to_json(b.line)}}; }

json to_json(const AlgebraConfig& cfg) {
  json out = {{"n", cfg.n}, {"m", cfg.m}, {"elements", json::object()}, {"vectors", json::object()}};
  for (const auto& [name, e] : cfg.elements) out["elements"][name] = to_json(e);
  for (const auto& [name, v] : cfg.vectors) out["vectors"][name] = to_json(v);
  if (cfg.seed) out["seed"] = *cfg.seed;
  return out;
}

AlgebraConfig parse_config(const json& doc) {
  if (!doc.is_object()) invalid("<root>", "expected an object");
  AlgebraConfig cfg;
  cfg.n = positive_int(doc, "n");
  cfg.m = positive_int(doc, "m");
  if (doc.contains("elements")) {
    const json& e = doc.at("elements");
    if (!e.is_object()) invalid("elements", "expected an object");
    for (const auto& [name, value] : e.items()) {
      cfg.elements.emplace(name, parse_element(value, cfg.n, cfg.m, "elements." + name));
    }
  }
  if (doc.contains("vectors")) {
    const json& v = doc.at("vectors");
    if (!v.is_object()) invalid("vectors", "expected an object");
    for (const auto& [name, value] : v.items()) {
      cfg.vectors.emplace(name, parse_module_element(value, cfg.n, cfg.m, "vectors." + name));
    }
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned()) invalid("seed", "expected a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  return cfg;
}

AlgebraConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kIoError, "cannot read config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(kParseError, "config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

Quasipoint parse_quasipoint(const std::string& text, const AlgebraConfig& cfg) {
  std::optional<std::size_t> omega;
  std::string line;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw CliError(kValidationError, "bad quasipoint '" + text + "'");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (key == "omega") {
      try {
        std::size_t used = 0;
        const unsigned long w = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        omega = w;
      } catch (const std::exception&) {
        throw CliError(kValidationError, "bad omega in quasipoint '" + text + "'");
      }
    } else if (key == "line") {
      line = value;
    } else {
      throw CliError(kValidationError, "unknown quasipoint key '" + key + "'");
    }
  }
  if (!omega || line.empty()) throw CliError(kValidationError, "quasipoint needs omega and line: '" + text + "'");
  if (*omega >= cfg.m) throw CliError(kValidationError, "omega outside Ω in '" + text + "'");

  ComplexVector x;
  if (line.size() > 1 && line[0] == 'e' && line.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t k = std::stoul(line.substr(1));
    if (k < 1 || k > cfg.n) throw CliError(kValidationError, "basis vector out of range in '" + text + "'");
    x = unit_vector(cfg.n, k - 1);
  } else {
    x = named_vector(cfg, line).fiber(*omega);
  }
  if (norm(x) == 0.0) throw CliError(kValidationError, "zero line in '" + text + "'");
  return make_quasipoint(*omega, x);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"abelian-check", "e-a",   "central-carrier", "normalize",
                                                 "quasipoints",   "zeta",  "orbit",           "observable",
                                                 "germ",          "verify-all"};
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const auto cmd = find_command(args)) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), *cmd) == names.end()) {
      err << "unknown command '" << *cmd << "'\n";
      return kUnknownCommand;
    }
  }

  Options o;
  CLI::App app{"Stone spectra of type I_n algebras at finite scale", "stonework"};
  app.require_subcommand(1);
  app.add_option("--config", o.config_path, "Algebra config (JSON)");
  app.add_option("--eps", o.eps, "Tolerance for rank and projection decisions")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timings", o.timings, "Include wall-clock timings in the report");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* abelian = add("abelian-check", "Is a named element an abelian projection?");
  abelian->add_option("--element", o.element)->required();
  auto* ea = add("e-a", "E_a for the normalization of a named vector");
  ea->add_option("--vector", o.vector)->required();
  auto* carrier = add("central-carrier", "Central carrier of a named projection");
  carrier->add_option("--element", o.element)->required();
  auto* norm_cmd = add("normalize", "Normalize a named vector");
  norm_cmd->add_option("--vector", o.vector)->required();
  auto* qps = add("quasipoints", "Lattice generated by named projections and its quasipoints");
  qps->add_option("--elements", o.elements, "Generator names (default: all elements)")->delimiter(',');
  qps->add_option("--cap", o.cap, "Maximum lattice size")->capture_default_str();
  auto* zeta_cmd = add("zeta", "The center quasipoint under a quasipoint");
  zeta_cmd->add_option("--quasipoint", o.quasipoint, "omega=<int>,line=<e<k>|vector>")->required();
  auto* orbit = add("orbit", "Unitary orbit witness between two quasipoints");
  orbit->add_option("--from", o.from)->required();
  orbit->add_option("--to", o.to)->required();
  auto* observable = add("observable", "Observable function of a named self-adjoint element");
  observable->add_option("--element", o.element)->required();
  observable->add_option("--quasipoint", o.quasipoint_texts, "Repeatable; default: all eigenlines");
  auto* germ = add("germ", "Germ of a named vector at a point");
  germ->add_option("--vector", o.vector)->required();
  germ->add_option("--omega", o.omega)->required();
  add("verify-all", "Run every property suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();

  json report;
  report["command"] = command;
  int code = kOk;
  try {
    const Tolerance tol(o.eps);
    AlgebraConfig cfg;
    if (!o.config_path.empty()) {
      cfg = load_config(o.config_path);
    } else if (command != "verify-all") {
      throw CliError(kValidationError, "command '" + command + "' needs --config");
    }
    const std::uint64_t seed = o.seed.value_or(cfg.seed.value_or(0));

    json inputs = {{"config", o.config_path.empty() ? json(nullptr) : json(o.config_path)}};
    if (!o.config_path.empty()) {
      inputs["n"] = cfg.n;
      inputs["m"] = cfg.m;
    }
    report["tolerance"] = tol.eps();
    if (command == "verify-all") report["seed"] = seed;

    using Handler = std::function<Outcome(const AlgebraConfig&, const Options&, Tolerance, json&)>;
    const std::map<std::string, Handler> handlers = {
        {"abelian-check", cmd_abelian_check}, {"e-a", cmd_e_a},       {"central-carrier", cmd_central_carrier},
        {"normalize", cmd_normalize},         {"quasipoints", cmd_quasipoints}, {"zeta", cmd_zeta},
        {"orbit", cmd_orbit},                 {"observable", cmd_observable},   {"germ", cmd_germ},
    };
    Outcome outcome;
    try {
      outcome = command == "verify-all" ? cmd_verify_all(seed, tol) : handlers.at(command)(cfg, o, tol, inputs);
    } catch (const Error& e) {
      outcome.results = json::object();
      outcome.property(std::string(error_name(e.code())), false);
      report["error"] = {{"code", std::string(error_name(e.code()))}, {"message", e.what()}};
    }
    const bool pass = outcome.pass();
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(outcome.results);
    report["properties"] = std::move(outcome.properties);
    report["pass"] = pass;
    code = pass ? kOk : kPropertyFailure;
  } catch (const CliError& e) {
    err << e.what() << "\n";
    return e.code();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kValidationError;
  }

  if (o.timings) {
    report["timings"] = {
        {"wall_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count()}};
  }
  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    emit_text(report, out);
  }
  out.flush();
  if (!out) {
    err << "failed to write the report\n";
    return kIoError;
  }
  return code;
}

}  // namespace stonework::cli

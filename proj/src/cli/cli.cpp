#include "primerep/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

EvalOptions RunConfig::eval() const {
  EvalOptions o;
  o.bit_budget = bit_budget;
  return o;
}

FactoringConfig RunConfig::factoring() const {
  FactoringConfig c;
  c.seed = seed;
  c.iteration_budget = factor_budget;
  return c;
}

Json RunConfig::to_json() const {
  return Json{{"horizon", horizon},
              {"box", box},
              {"bit_budget", bit_budget},
              {"seed", seed},
              {"factor_budget", factor_budget},
              {"sieve_cap", sieve_cap},
              {"density_cutoff", density_cutoff},
              {"strict_positive_n", strict_positive_n},
              {"x_min", x_min},
              {"format", json ? "json" : "text"}};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' needs a non-negative integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("config key '" + key + "' needs a boolean, got '" + value + "'");
}

void validate(const RunConfig& c) {
  if (c.horizon < 1 || c.box < 1) throw UsageError("horizons must be positive");
  if (c.bit_budget == 0 || c.factor_budget == 0 || c.sieve_cap == 0) throw UsageError("budgets must be positive");
  if (c.density_cutoff < 2) throw UsageError("density cutoff must be >= 2");
}

// Generic text rendering of a JSON result tree.
void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  std::size_t index = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++index) {
    const Json& v = it.value();
    if (v.is_null()) continue;
    const std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
    const bool flat = v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                             return e.is_primitive() || (e.is_array() && e.size() <= 8);
                                           }));
    if (flat) {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    }
  }
}

bool verdict_conclusive(const Json& j) {
  if (j.is_object()) {
    if (j.contains("status") && j["status"] == "Unknown") return false;
    if (j.contains("conclusive") && j["conclusive"].is_boolean() && !j["conclusive"].get<bool>()) return false;
    for (const auto& v : j) {
      if (!verdict_conclusive(v)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!verdict_conclusive(v)) return false;
    }
  }
  return true;
}

struct Inputs {
  std::string function;
  std::string system;
  std::string modulus;
  std::string a;
  std::string b;
  std::int64_t limit = 0;
  std::int64_t x = -1;
  std::int64_t lo = -1;
  std::int64_t hi = -1;
  std::string mode;
};

FunctionSystem system_from(const Inputs& in) {
  if (!in.system.empty()) return parse_system(in.system);
  if (!in.function.empty()) return FunctionSystem{parse_function(in.function)};
  throw UsageError("--function or --system is required");
}

NtFunction function_from(const Inputs& in) {
  if (in.function.empty()) throw UsageError("--function is required");
  return parse_function(in.function);
}

BigInt big_from(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  BigInt v;
  if (v.set_str(text, 10) != 0) throw UsageError(std::string("--") + name + " is not an integer: " + text);
  return v;
}

std::int64_t i64_from(const std::string& text, const char* name) {
  const auto v = to_i64(big_from(text, name));
  if (!v) throw UsageError(std::string("--") + name + " does not fit in 64 bits");
  return *v;
}

std::uint64_t positive_limit(const Inputs& in) {
  if (in.limit < 1) throw UsageError("--limit must be given and positive");
  return static_cast<std::uint64_t>(in.limit);
}

Json cmd_conditions(const Inputs& in, const RunConfig& c) {
  const BigInt m = big_from(in.modulus, "modulus");
  if (m < 2) throw UsageError("--modulus must be >= 2");
  const FunctionSystem fs = system_from(in);
  const std::int64_t h = c.horizon_for(fs.arity());
  Json out{{"system", fs.to_string()}};
  if (fs.size() == 1) {
    out["function"] = to_json(check_conditions(fs[0], m, h, c.eval()));
  } else {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      out["members"].push_back(to_json(check_conditions(fs[i], m, h, c.eval())));
    }
  }
  out["system_conditions"] = to_json(check_conditions(fs, m, h, c.eval()));
  return out;
}

Json cmd_sfm(const Inputs& in, const RunConfig& c) {
  const BigInt m = big_from(in.modulus, "modulus");
  if (m < 2) throw UsageError("--modulus must be >= 2");
  const FunctionSystem fs = system_from(in);
  const std::int64_t h = c.horizon_for(fs.arity());
  const auto r = fs.size() == 1 ? s_f(fs[0], m, h, c.eval()) : s_system(fs, m, h, c.eval());
  return Json{{"system", fs.to_string()}, {"s", to_json(r)}};
}

Json cmd_phi(const Inputs& in, const RunConfig& c) {
  const BigInt n = big_from(in.modulus, "modulus");
  const FunctionSystem fs = system_from(in);
  std::optional<std::int64_t> box;
  if (in.limit > 0) box = in.limit;
  return Json{{"system", fs.to_string()}, {"phi", to_json(phi_general(fs, n, box, c.eval()))}};
}

Json cmd_pi(const Inputs& in, const RunConfig& c) {
  const BigInt x = to_big(positive_limit(in));
  const FunctionSystem fs = system_from(in);
  const std::int64_t h = c.horizon_for(fs.arity());
  Json out{{"system", fs.to_string()}};
  try {
    out["pi"] = fs.size() == 1 ? to_json(pi_general_exact(fs[0], x, kDefaultPiCap, h, c.eval()))
                               : to_json(pi_system_product(fs, x, kDefaultPiCap, h, c.eval()));
  } catch (const CapExceeded&) {
    out["pi"] = to_json(pi_general_greedy(internal::product_function(fs), x, h, c.eval()));
  }
  return out;
}

Json cmd_crt(const Inputs& in, const RunConfig& c) {
  if (in.mode.empty() && in.a.empty() && in.b.empty() && in.limit > 0) {
    const FunctionSystem fs = system_from(in);
    const std::int64_t h = c.horizon_for(fs.arity());
    Json failures = Json::array();
    for (const auto& f : scan_for_lift_failures({fs}, in.limit, h, c.threads, c.eval())) {
      failures.push_back({{"a", big_json(f.result.a)}, {"b", big_json(f.result.b)}, {"status", to_string(f.result.status)}});
    }
    return Json{{"system", fs.to_string()}, {"limit", in.limit}, {"count", failures.size()}, {"failures", failures}};
  }
  const BigInt a = big_from(in.a, "a");
  const BigInt b = big_from(in.b, "b");
  if (in.mode == "prime-form") {
    const BigInt m = big_from(in.modulus, "modulus");
    const BigInt n = to_big(positive_limit(in));
    return Json{{"form", "a + b x"}, {"lift", to_json(prime_witness_lift(a, b, m, n, c.horizon, c.eval()))}};
  }
  const FunctionSystem fs = system_from(in);
  const std::int64_t h = c.horizon_for(fs.arity());
  Json out{{"system", fs.to_string()}, {"analogy", to_json(check_crt_analogy(fs, a, b, h, c.eval()))}};
  return out;
}

Json cmd_fermat(const Inputs& in, const RunConfig& c) {
  Json out = Json::object();
  if (!in.modulus.empty()) {
    const BigInt m = big_from(in.modulus, "modulus");
    out["in_zm"] = to_json(fermat_in_zm(m, c.x_min));
  }
  if (in.x >= 0) {
    const auto x = static_cast<std::uint64_t>(in.x);
    const std::uint64_t k_limit = in.limit > 0 ? static_cast<std::uint64_t>(in.limit) : 10'000;
    out["record"] = to_json(fermat_record(x, k_limit));
    Json hits = Json::array();
    for (const auto& h : euler_lucas_search(x, k_limit, c.threads)) hits.push_back(to_json(h));
    out["divisor_form_hits"] = hits;
    if (x <= 6) {
      const auto f = factorize(fermat_number(x), c.factoring());
      Json factors = Json::array();
      for (const auto& pp : f.factors) {
        for (unsigned e = 0; e < pp.exponent; ++e) factors.push_back(big_json(pp.prime));
      }
      out["factorization"] = {{"factors", factors}, {"complete", f.complete()}};
    }
  }
  if (out.empty()) throw UsageError("fermat needs --x or --modulus");
  return out;
}

Json cmd_density(const Inputs& in, const RunConfig& c) {
  const std::uint64_t m = positive_limit(in);
  if (!in.a.empty() || !in.b.empty()) {
    const std::int64_t a = i64_from(in.a, "a");
    const std::int64_t b = i64_from(in.b, "b");
    if (b < 1) throw UsageError("--b must be positive");
    return Json{{"a", a}, {"b", b}, {"x", m}, {"dlvp_ratio", static_cast<double>(dlvp_ratio(a, b, m, c.sieve_cap))}};
  }
  const FunctionSystem fs = system_from(in);
  const auto constant = bateman_horn_constant(fs, c.density_cutoff, c.threads, c.sieve_cap);
  Json out{{"system", fs.to_string()}, {"constant", to_json(constant)}};
  const auto predicted = predicted_count(fs, std::max<std::uint64_t>(m, 2), constant.value);
  const auto actual = actual_count(fs, m, c.sieve_cap);
  out["predicted"] = to_json(predicted);
  out["actual"] = actual;
  out["ratio"] = actual == 0 ? Json(nullptr) : Json(static_cast<double>(predicted.sum_form / actual));
  return out;
}

Json cmd_ap(const Inputs& in, const RunConfig& c) {
  if (!in.a.empty() || !in.b.empty()) {
    const std::int64_t a = i64_from(in.a, "a");
    const std::int64_t b = i64_from(in.b, "b");
    if (b < 1) throw UsageError("--b must be positive");
    return Json{{"product_inequality",
                 to_json(ap_product_inequality(a, static_cast<std::uint64_t>(b), positive_limit(in)))}};
  }
  const auto k = to_u64(big_from(in.modulus, "modulus"));
  if (!k || *k < 2) throw UsageError("--modulus must be in [2, 2^64)");
  return Json{{"least_primes", to_json(least_prime_ap(*k, c.strict_positive_n))}};
}

Json cmd_factorial(const Inputs& in, const RunConfig& c) {
  const std::string mode = in.mode.empty() ? "witness" : in.mode;
  if (in.lo < 2) throw UsageError("--lo must be given and >= 2");
  const auto lo = static_cast<std::uint64_t>(in.lo);
  const auto hi = in.hi < 0 ? lo : static_cast<std::uint64_t>(in.hi);
  if (hi < lo) throw UsageError("--hi must be >= --lo");
  EvalOptions eval = c.eval();
  if (mode == "prop3") {
    const NtFunction f = function_from(in);
    return Json{{"function", f.to_string()}, {"prop3", to_json(prop3_scan(f, lo, hi, c.horizon, c.threads, eval))}};
  }
  const FunctionSystem fs = system_from(in);
  const std::int64_t h = c.horizon_for(fs.arity());
  FactorialOptions options;
  options.eval = eval;
  if (mode == "witness") {
    return Json{{"system", fs.to_string()}, {"witness", to_json(least_factorial_witness(fs, lo, h, options))}};
  }
  if (mode == "conjecture3") {
    return Json{{"system", fs.to_string()},
                {"conjecture3", to_json(conjecture3_probe(fs, lo, hi, h, c.threads, options))}};
  }
  if (mode == "modulus") {
    return Json{{"system", fs.to_string()},
                {"modulus", to_json(modulus_probe(fs, lo, hi, h, {}, c.threads, eval))}};
  }
  throw UsageError("unknown factorial mode '" + mode + "'");
}

Json cmd_verify_paper(const RunConfig& c, bool& all_passed) {
  Json checks = Json::array();
  std::size_t passed = 0;
  const auto results = verify_paper(c);
  for (const auto& r : results) {
    Json j{{"name", r.name}, {"passed", r.passed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(j);
    if (r.passed) ++passed;
  }
  all_passed = passed == results.size();
  return Json{{"checks", checks}, {"passed", passed}, {"failed", results.size() - passed}};
}

}  // namespace

void apply_config_text(RunConfig& c, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters = {
      {"horizon", [&](auto& k, auto& v) { c.horizon = parse_number<std::int64_t>(k, v); }},
      {"box", [&](auto& k, auto& v) { c.box = parse_number<std::int64_t>(k, v); }},
      {"bit_budget", [&](auto& k, auto& v) { c.bit_budget = parse_number<std::size_t>(k, v); }},
      {"seed", [&](auto& k, auto& v) { c.seed = parse_number<std::uint64_t>(k, v); }},
      {"factor_budget", [&](auto& k, auto& v) { c.factor_budget = parse_number<std::uint64_t>(k, v); }},
      {"sieve_cap", [&](auto& k, auto& v) { c.sieve_cap = parse_number<std::size_t>(k, v); }},
      {"density_cutoff", [&](auto& k, auto& v) { c.density_cutoff = parse_number<std::uint64_t>(k, v); }},
      {"strict_positive_n", [&](auto& k, auto& v) { c.strict_positive_n = parse_bool(k, v); }},
      {"x_min", [&](auto& k, auto& v) { c.x_min = parse_number<std::uint64_t>(k, v); }},
      {"threads", [&](auto& k, auto& v) { c.threads = parse_number<unsigned>(k, v); }},
      {"format",
       [&](auto& k, auto& v) {
         if (v != "json" && v != "text") throw UsageError("config key '" + k + "' must be json or text");
         c.json = v == "json";
       }},
  };
  while (std::getline(lines, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw UsageError("unknown config key '" + key + "'");
    it->second(key, value);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Inputs in;
  try {
    if (const char* path = std::getenv("WORKBENCH_CONFIG"); path && *path) {
      std::ifstream file(path);
      if (!file) throw UsageError(std::string("cannot read WORKBENCH_CONFIG file ") + path);
      std::stringstream buffer;
      buffer << file.rdbuf();
      apply_config_text(config, buffer.str());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Prime-representing function workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--function", in.function, "Function expression, e.g. \"2^x-1\"");
  app.add_option("-s,--system", in.system, "Semicolon-separated system, e.g. \"x; x+2\"");
  app.add_option("--modulus", in.modulus, "Modulus m (arbitrary size)");
  app.add_option("--a", in.a, "First modulus or progression offset");
  app.add_option("--b", in.b, "Second modulus or progression step");
  app.add_option("--limit", in.limit, "Scan limit (meaning depends on the subcommand)");
  app.add_option("--x", in.x, "Fermat index");
  app.add_option("--lo", in.lo, "Range start (factorial probes)");
  app.add_option("--hi", in.hi, "Range end (factorial probes)");
  app.add_option("--mode", in.mode, "Subcommand variant");
  app.add_option("--box", config.box, "Box side for multivariate scans");
  app.add_option("--horizon", config.horizon, "Horizon for univariate scans");
  app.add_option("--seed", config.seed, "Factoring seed");
  app.add_option("--x-min", config.x_min, "Least Fermat index considered");
  app.add_option("--threads", config.threads, "Worker threads");
  app.add_flag("--strict-positive-n", config.strict_positive_n, "Least primes l + n k with n >= 1");
  app.add_flag("--json", config.json, "Emit a JSON report");
  app.add_flag("--timing", config.timing, "Include elapsed_ms in reports");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"conditions", "Check conditions A to I at a modulus"},
      {"sfm", "Least witness S_f(m)"},
      {"phi", "Generalized totient"},
      {"pi", "Largest pairwise coprime value set in (1, x]"},
      {"crt-analogy", "Lift witnesses from Z_a^* and Z_b^* to Z_ab^*"},
      {"fermat", "Fermat number facts"},
      {"density", "Bateman-Horn constant, predicted and actual counts"},
      {"ap", "Primes in arithmetic progressions"},
      {"factorial", "Witnesses coprime to l!"},
      {"verify-paper", "Reproduce the full example corpus"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report;
  report.command = command;
  bool mismatch = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    validate(config);
    report.config = config.to_json();
    if (command == "conditions") report.results = cmd_conditions(in, config);
    else if (command == "sfm") report.results = cmd_sfm(in, config);
    else if (command == "phi") report.results = cmd_phi(in, config);
    else if (command == "pi") report.results = cmd_pi(in, config);
    else if (command == "crt-analogy") report.results = cmd_crt(in, config);
    else if (command == "fermat") report.results = cmd_fermat(in, config);
    else if (command == "density") report.results = cmd_density(in, config);
    else if (command == "ap") report.results = cmd_ap(in, config);
    else if (command == "factorial") report.results = cmd_factorial(in, config);
    else if (command == "verify-paper") {
      bool all = false;
      report.results = cmd_verify_paper(config, all);
      mismatch = !all;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (config.timing) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  report.conclusive = verdict_conclusive(report.results);

  if (config.json) {
    out << render_json(report);
  } else {
    out << command << (report.conclusive ? "" : " (inconclusive)") << "\n";
    render_text(report.results, out, "  ");
    if (report.elapsed_ms) out << "  elapsed_ms: " << *report.elapsed_ms << "\n";
  }
  if (mismatch) {
    err << "verify-paper: " << report.results["failed"].get<std::size_t>() << " check(s) did not reproduce\n";
    return 1;
  }
  return report.conclusive ? 0 : 2;
}

}  // namespace primerep

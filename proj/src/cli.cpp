#include "qrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include <ostream>

namespace qrep {

namespace {

long long parse_integer_at(const std::string& text, size_t& pos, const std::string& what) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw std::invalid_argument(what + ": expected a number at position " + std::to_string(start + 1) +
                                " of '" + text + "'");
  }
  return std::stoll(text.substr(start, pos - start));
}

}  // namespace

std::vector<Arrow> parse_arrows(const std::string& text, int rank) {
  std::vector<Arrow> arrows;
  if (text.empty()) return arrows;
  size_t pos = 0;
  while (true) {
    long long from = parse_integer_at(text, pos, "arrows");
    if (pos >= text.size() || text[pos] != '>') {
      throw std::invalid_argument("arrows: expected '>' at position " + std::to_string(pos + 1) +
                                  " of '" + text + "'");
    }
    ++pos;
    long long to = parse_integer_at(text, pos, "arrows");
    if (from < 1 || from > rank || to < 1 || to > rank) {
      throw std::invalid_argument("arrows: vertex out of range 1.." + std::to_string(rank) + " in '" +
                                  text + "'");
    }
    arrows.push_back(Arrow{static_cast<int>(from - 1), static_cast<int>(to - 1)});
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("arrows: expected ',' at position " + std::to_string(pos + 1) +
                                  " of '" + text + "'");
    }
    ++pos;
  }
  return arrows;
}

Eigen::VectorXi parse_dim_vector(const std::string& text) {
  std::vector<int> values;
  size_t pos = 0;
  while (true) {
    values.push_back(static_cast<int>(parse_integer_at(text, pos, "dim")));
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("dim: expected ',' at position " + std::to_string(pos + 1) + " of '" +
                                  text + "'");
    }
    ++pos;
  }
  Eigen::VectorXi d(values.size());
  for (size_t i = 0; i < values.size(); ++i) d[static_cast<Eigen::Index>(i)] = values[i];
  return d;
}

std::vector<long long> parse_prime_list(const std::string& text) {
  std::vector<long long> primes;
  size_t pos = 0;
  while (true) {
    long long p = parse_integer_at(text, pos, "primes");
    bool prime = p >= 2;
    for (long long d = 2; d * d <= p && prime; ++d) {
      if (p % d == 0) prime = false;
    }
    if (!prime) throw std::invalid_argument("primes: " + std::to_string(p) + " is not prime");
    if (std::find(primes.begin(), primes.end(), p) != primes.end()) {
      throw std::invalid_argument("primes: duplicate entry " + std::to_string(p));
    }
    primes.push_back(p);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("primes: expected ',' at position " + std::to_string(pos + 1) +
                                  " of '" + text + "'");
    }
    ++pos;
  }
  return primes;
}

namespace {

struct RawOptions {
  std::string type = "A";
  int rank = 0;
  std::string arrows;
  std::string dim;
  std::string primes;
  std::string format = "table";
  long long max_dim = Guards{}.max_total_dim;
  int max_degree = Guards{}.max_interp_degree;
  unsigned long long seed = 1;
  std::string suite = "all";
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--type", raw.type, "Dynkin type: A, D or E")->required();
  cmd->add_option("--rank", raw.rank, "number of vertices")->required();
  cmd->add_option("--arrows", raw.arrows,
                  "orientation, e.g. 1>2,2>3; default orients each edge from the smaller vertex");
  cmd->add_option("--dim", raw.dim, "dimension vector, e.g. 1,2,1")->required();
  cmd->add_option("--primes", raw.primes, "interpolation sample primes, e.g. 2,3,5,7,11");
  cmd->add_option("--max-dim", raw.max_dim, "total-dimension guard for submodule enumeration");
  cmd->add_option("--max-degree", raw.max_degree, "interpolation degree guard");
  cmd->add_option("--seed", raw.seed, "seed for generic-element sampling");
}

JobConfig config_from(const RawOptions& raw) {
  JobConfig config;
  config.type = parse_type_letter(raw.type);
  config.rank = raw.rank;
  config.arrows = parse_arrows(raw.arrows, raw.rank);
  config.d = parse_dim_vector(raw.dim);
  if (!raw.primes.empty()) config.primes = parse_prime_list(raw.primes);
  config.guards.max_total_dim = raw.max_dim;
  config.guards.max_interp_degree = raw.max_degree;
  config.format = raw.format;
  config.seed = raw.seed;
  config.suite = raw.suite;
  if (config.d.size() != config.rank) {
    throw std::invalid_argument("dim: expected " + std::to_string(config.rank) + " entries, got " +
                                std::to_string(config.d.size()));
  }
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbit catalogs, degeneration posets and Hall-algebraic verification for Dynkin quivers"};
  app.set_config("--config", "", "read options from an INI file");
  app.require_subcommand(1);

  RawOptions raw_orbits, raw_poset, raw_verify;
  CLI::App* orbits = app.add_subcommand("orbits", "orbit catalog with dimensions, supports, smoothness and Euler characteristics");
  add_common_options(orbits, raw_orbits);
  orbits->add_option("--format", raw_orbits.format, "json | dot | table");
  CLI::App* poset = app.add_subcommand("poset", "degeneration order Hasse diagram as DOT");
  add_common_options(poset, raw_poset);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite over the catalog");
  add_common_options(verify, raw_verify);
  verify->add_option("--suite", raw_verify.suite, "main | geometric | bongartz | riedtmann | all");
  verify->add_option("--format", raw_verify.format, "json | table");

  std::vector<const char*> argv;
  argv.push_back("qrep");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (orbits->parsed()) {
      JobConfig config = config_from(raw_orbits);
      if (config.guards.max_total_dim > Guards{}.max_total_dim) {
        err << "warning: submodule enumeration guard raised to " << config.guards.max_total_dim << "\n";
      }
      Engine engine(quiver_from(config), engine_options_from(config));
      if (config.format == "json") {
        out << catalog_report(engine, config).dump(2) << "\n";
      } else if (config.format == "dot") {
        out << render_dot(engine, config);
      } else if (config.format == "table") {
        out << render_orbits_table(catalog_report(engine, config));
      } else {
        throw std::invalid_argument("unknown format '" + config.format + "'");
      }
      return 0;
    }
    if (poset->parsed()) {
      JobConfig config = config_from(raw_poset);
      Engine engine(quiver_from(config), engine_options_from(config));
      out << render_dot(engine, config);
      return 0;
    }
    JobConfig config = config_from(raw_verify);
    Engine engine(quiver_from(config), engine_options_from(config));
    SuiteResult result = run_suite(engine, engine.catalog(config.d), config.suite);
    nlohmann::json report = verify_report(config, result);
    if (config.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      out << render_verify_table(report);
    }
    if (!result.pass()) return 1;
    if (result.guard_skips > 0) return 3;
    return 0;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qrep

#include "qrep/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qrep {

using nlohmann::json;

Quiver quiver_from(const JobConfig& config) {
  DynkinDiagram diagram = build_diagram(config.type, config.rank);
  if (config.arrows.empty()) return default_orientation(std::move(diagram));
  return make_quiver(std::move(diagram), config.arrows);
}

EngineOptions engine_options_from(const JobConfig& config) {
  EngineOptions opt;
  opt.guards = config.guards;
  opt.prime_pool = config.primes;
  opt.seed = config.seed;
  // elementary operations avoid p = 2, where extension-count polynomials
  // may vanish
  std::vector<long long> odd;
  for (long long p : config.primes) {
    if (p > 2) odd.push_back(p);
  }
  if (odd.size() >= 2) {
    opt.op_prime_a = odd[0];
    opt.op_prime_b = odd[1];
  }
  return opt;
}

json laurent_to_json(const Laurent& poly, const std::string& var) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({e, rat_to_string(c)});
  return json{{"var", var}, {"terms", terms}, {"text", poly.to_string(var)}};
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void SuiteResult::add(std::string name, bool ok, std::string detail) {
  checks.push_back(CheckRecord{std::move(name), ok, std::move(detail)});
}

void SuiteResult::merge(const SuiteResult& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  guard_skips += other.guard_skips;
}

namespace {

std::string pair_label(const OrbitCatalog& cat, int kprime, int k) {
  return cat.classes[static_cast<size_t>(kprime)].to_string() + " < " +
         cat.classes[static_cast<size_t>(k)].to_string();
}

std::string arrow_label(const Quiver& q, int a) {
  return std::to_string(q.arrows[static_cast<size_t>(a)].from + 1) + ">" +
         std::to_string(q.arrows[static_cast<size_t>(a)].to + 1);
}

template <class Fn>
void guarded(SuiteResult& result, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const GuardError& e) {
    ++result.guard_skips;
    result.warnings.push_back(name + ": skipped, " + e.what());
  }
}

}  // namespace

SuiteResult run_main_suite(Engine& engine, const OrbitCatalog& cat) {
  SuiteResult result;
  for (int k = 0; k < cat.size(); ++k) {
    for (int kp = 0; kp < cat.size(); ++kp) {
      if (kp == k || !leq(cat, kp, k)) continue;
      guarded(result, "derivative " + pair_label(cat, kp, k), [&] {
        MainCheckRow row = theorem_main_check(engine, cat, kp, k);
        std::ostringstream os;
        os << "Omega(1)=" << rat_to_string(row.value_at_1)
           << ", dOmega/dv|1=" << rat_to_string(row.derivative_v)
           << ", regular connecting ops: " << row.connecting_regular.size();
        if (!row.note.empty()) os << " [" << row.note << "]";
        result.add("derivative " + pair_label(cat, kp, k), row.pass, os.str());
      });
    }
  }
  for (int k = 0; k < cat.size(); ++k) {
    guarded(result, "sum from cmin", [&] {
      SumCheckRow row = smoothness_sum_from_cmin(engine, cat, k);
      result.add("sum from cmin to " + cat.classes[static_cast<size_t>(k)].to_string(), row.pass,
                 "-sum dOmega/du = " + rat_to_string(row.lhs) + ", dim E_d(J(c)) = " + rat_to_string(row.rhs));
    });
  }
  for (int k = 0; k < cat.size(); ++k) {
    OrbitInfo info = orbit_info(engine.over_rationals(), cat, k);
    if (!info.smooth) continue;
    for (int kp = 0; kp < cat.size(); ++kp) {
      if (!leq(cat, kp, k)) continue;
      guarded(result, "smooth sum", [&] {
        SumCheckRow row = smoothness_sum_between(engine, cat, kp, k);
        result.add("smooth sum " + pair_label(cat, kp, k), row.pass,
                   rat_to_string(row.lhs) + " = d(c)-d(c') = " + rat_to_string(row.rhs));
      });
    }
  }
  return result;
}

SuiteResult run_geometric_suite(Engine& engine, const OrbitCatalog& cat) {
  SuiteResult result;
  ModuleContext<FieldQ>& ctx = engine.over_rationals();
  for (int k = 0; k < cat.size(); ++k) {
    std::string label = cat.classes[static_cast<size_t>(k)].to_string();
    OrbitInfo info = orbit_info(ctx, cat, k);
    guarded(result, "euler " + label, [&] {
      PointCounts pc = point_counts(ctx, cat, k);
      result.add("euler characteristic " + label, pc.euler_char == Rat(static_cast<long>(info.dim_EdJ)),
                 "chi = " + rat_to_string(pc.euler_char) + ", dim E_d(J(c)) = " + std::to_string(info.dim_EdJ));
    });
    guarded(result, "s_set " + label, [&] {
      auto by_def = s_set(cat, k, engine.elementary_ops());
      auto by_support = s_set_by_support(ctx, cat, k);
      std::ostringstream os;
      os << "|S_c| = " << by_def.size() << ", |{c^ij}| = " << by_support.size();
      result.add("S_c description " + label, by_def == by_support, os.str());
    });
    guarded(result, "oracle " + label, [&] {
      IsoClass generic = engine.generic_class(cat, info.arrows_J);
      bool oracle_smooth = generic == info.cls;
      result.add("smoothness oracle " + label, oracle_smooth == info.smooth,
                 std::string("classifier: ") + (info.smooth ? "smooth" : "not smooth") +
                     ", generic class of E_d(J(c)): " + generic.to_string());
    });
  }
  // J monotonicity along the degeneration order
  bool mono = true;
  std::string bad;
  for (int k = 0; k < cat.size() && mono; ++k) {
    auto jk = support(ctx, cat.classes[static_cast<size_t>(k)]);
    std::set<int> jks(jk.begin(), jk.end());
    for (int kp = 0; kp < cat.size() && mono; ++kp) {
      if (!leq(cat, kp, k)) continue;
      for (int a : support(ctx, cat.classes[static_cast<size_t>(kp)])) {
        if (!jks.count(a)) {
          mono = false;
          bad = pair_label(cat, kp, k);
          break;
        }
      }
    }
  }
  result.add("J(c'') contained in J(c) for c'' <= c", mono, bad);
  return result;
}

SuiteResult run_bongartz_suite(Engine& engine, const OrbitCatalog& cat) {
  SuiteResult result;
  bool agree = true;
  std::string bad;
  for (int kp = 0; kp < cat.size(); ++kp) {
    for (int k = 0; k < cat.size(); ++k) {
      if (leq(cat, kp, k) != leq_dual(cat, kp, k)) {
        agree = false;
        bad = pair_label(cat, kp, k);
      }
    }
  }
  result.add("hom criteria (iii) and (iv) agree", agree, bad);

  bool strict = true;
  std::string bad_dim;
  for (int kp = 0; kp < cat.size(); ++kp) {
    for (int k = 0; k < cat.size(); ++k) {
      if (kp != k && leq(cat, kp, k) && orbit_dim(cat, kp) >= orbit_dim(cat, k)) {
        strict = false;
        bad_dim = pair_label(cat, kp, k);
      }
    }
  }
  result.add("strict degeneration drops the orbit dimension", strict, bad_dim);

  guarded(result, "chain property", [&] {
    const auto& ops = engine.elementary_ops();
    bool chain = true;
    std::string bad_chain;
    for (int kp = 0; kp < cat.size(); ++kp) {
      for (int k = 0; k < cat.size(); ++k) {
        if (kp == k || !leq(cat, kp, k)) continue;
        bool found = false;
        for (const ElementaryOp& op : ops) {
          Eigen::VectorXi v = cat.classes[static_cast<size_t>(kp)].c + op.op;
          if ((v.array() < 0).any()) continue;
          int mid = cat.index_of(IsoClass{v});
          if (mid >= 0 && leq(cat, mid, k)) {
            found = true;
            break;
          }
        }
        if (!found) {
          chain = false;
          bad_chain = pair_label(cat, kp, k);
        }
      }
    }
    result.add("every strict degeneration starts with an elementary operation", chain, bad_chain);
  });

  int kmin = cmin_index(cat);
  bool min_ok = true;
  for (int k = 0; k < cat.size(); ++k) min_ok = min_ok && leq(cat, kmin, k);
  result.add("the semisimple class is the unique minimum", min_ok,
             "cmin = " + cat.classes[static_cast<size_t>(kmin)].to_string());

  int dense = -1;
  int dense_count = 0;
  for (int k = 0; k < cat.size(); ++k) {
    if (orbit_dim(cat, k) == cat.dim_Ed) {
      dense = k;
      ++dense_count;
    }
  }
  bool dense_ok = dense_count == 1;
  if (dense_ok) {
    for (int k = 0; k < cat.size(); ++k) dense_ok = dense_ok && leq(cat, k, dense);
  }
  result.add("exactly one dense orbit, maximal for the order", dense_ok,
             "count = " + std::to_string(dense_count));
  return result;
}

SuiteResult run_riedtmann_suite(Engine& engine) {
  SuiteResult result;
  const auto& ops = engine.elementary_ops();
  for (const std::string& w : engine.op_warnings()) result.warnings.push_back(w);
  const AdaptedWord& word = engine.word();

  for (size_t i = 0; i < ops.size(); ++i) {
    std::string label = "op " + std::to_string(i) + " (s=" + std::to_string(ops[i].s + 1) +
                        ", t=" + std::to_string(ops[i].t + 1) + ", middle=" + ops[i].middle.to_string() + ")";
    guarded(result, label, [&] {
      RiedtmannRow row = riedtmann_check(engine, static_cast<int>(i));
      result.add("Riedtmann identity, " + label, row.pass,
                 row.pass ? "" : row.lhs.to_string("q") + " != " + row.rhs.to_string("q"));
    });
    // homogeneity of the op vector
    Eigen::VectorXi sum = Eigen::VectorXi::Zero(word.vertex_count());
    for (int t = 0; t < word.nu(); ++t) sum += ops[i].op[t] * word.root_order[static_cast<size_t>(t)];
    result.add("op vector is homogeneous, " + label, sum.isZero(), "");
  }

  // per (s, t): total extension count is q^e - 1
  std::map<std::pair<int, int>, Laurent> totals;
  for (const ElementaryOp& op : ops) totals[{op.s, op.t}] += op.ext_count;
  for (const auto& [st, total] : totals) {
    long long e = engine.over_prime(engine.options().op_prime_a).ext_between(st.second, st.first);
    Laurent expected = Laurent::monomial(static_cast<int>(e), Rat(1)) - Laurent::constant(Rat(1));
    result.add("sum of E(q) over middles is q^" + std::to_string(e) + "-1 for (s=" +
                   std::to_string(st.first + 1) + ", t=" + std::to_string(st.second + 1) + ")",
               total == expected, total.to_string("q"));
  }

  // e values allowed per type
  std::set<Rat> allowed;
  switch (word.quiver.diagram.type) {
    case DynkinType::A: allowed = {Rat(1)}; break;
    case DynkinType::D: allowed = {Rat(1), Rat(-1)}; break;
    case DynkinType::E: allowed = {Rat(1), Rat(-1), Rat(0)}; break;
  }
  bool values_ok = true;
  std::set<std::string> seen;
  for (const ElementaryOp& op : ops) {
    seen.insert(rat_to_string(op.e_value));
    if (!allowed.count(op.e_value)) values_ok = false;
  }
  std::ostringstream os;
  os << "values seen:";
  for (const std::string& v : seen) os << " " << v;
  result.add("reduced extension counts at 1 lie in the type's value set", values_ok, os.str());
  return result;
}

SuiteResult run_suite(Engine& engine, const OrbitCatalog& cat, const std::string& name) {
  if (name == "main") return run_main_suite(engine, cat);
  if (name == "geometric") return run_geometric_suite(engine, cat);
  if (name == "bongartz") return run_bongartz_suite(engine, cat);
  if (name == "riedtmann") return run_riedtmann_suite(engine);
  if (name == "all") {
    SuiteResult all = run_bongartz_suite(engine, cat);
    all.merge(run_geometric_suite(engine, cat));
    all.merge(run_main_suite(engine, cat));
    all.merge(run_riedtmann_suite(engine));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (main, geometric, bongartz, riedtmann, all)");
}

json catalog_report(Engine& engine, const JobConfig& config) {
  const OrbitCatalog& cat = engine.catalog(config.d);
  ModuleContext<FieldQ>& ctx = engine.over_rationals();
  const AdaptedWord& word = engine.word();
  const Quiver& q = word.quiver;

  json arrows = json::array();
  for (const Arrow& a : q.arrows) arrows.push_back({a.from + 1, a.to + 1});
  json word_json = json::array();
  for (int i : word.word) word_json.push_back(i + 1);
  json roots = json::array();
  for (const Root& r : word.root_order) roots.push_back(std::vector<int>(r.data(), r.data() + r.size()));

  json orbits = json::array();
  for (int k = 0; k < cat.size(); ++k) {
    OrbitInfo info = orbit_info(ctx, cat, k);
    PointCounts pc = point_counts(ctx, cat, k);
    json jarrows = json::array();
    for (int a : info.arrows_J) {
      jarrows.push_back({q.arrows[static_cast<size_t>(a)].from + 1, q.arrows[static_cast<size_t>(a)].to + 1});
    }
    orbits.push_back({
        {"index", k},
        {"c", std::vector<int>(info.cls.c.data(), info.cls.c.data() + info.cls.c.size())},
        {"dim", info.dim},
        {"J", jarrows},
        {"dim_EdJ", info.dim_EdJ},
        {"smooth", info.smooth},
        {"euler_char", rat_to_string(pc.euler_char)},
        {"orbit_count", laurent_to_json(pc.orbit_count, "q")},
        {"projective_count", laurent_to_json(pc.projective_count, "q")},
    });
  }

  json leq_pairs = json::array();
  for (int kp = 0; kp < cat.size(); ++kp) {
    for (int k = 0; k < cat.size(); ++k) {
      if (leq(cat, kp, k)) leq_pairs.push_back({kp, k});
    }
  }
  json hasse = json::array();
  for (auto [kp, k] : hasse_edges(cat)) hasse.push_back({kp, k});

  return json{
      {"command", "orbits"},
      {"quiver", {{"type", std::string(1, type_letter(config.type))}, {"rank", config.rank}, {"arrows", arrows}}},
      {"dim", std::vector<int>(config.d.data(), config.d.data() + config.d.size())},
      {"word", word_json},
      {"root_order", roots},
      {"dim_Ed", cat.dim_Ed},
      {"dim_Gd", cat.dim_Gd},
      {"cmin", cmin_index(cat)},
      {"orbits", orbits},
      {"leq_pairs", leq_pairs},
      {"hasse", hasse},
  };
}

json verify_report(const JobConfig& config, const SuiteResult& result) {
  json checks = json::array();
  json counterexamples = json::array();
  for (const CheckRecord& c : result.checks) {
    json row{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    checks.push_back(row);
    if (!c.pass) counterexamples.push_back(row);
  }
  return json{
      {"command", "verify"},
      {"suite", config.suite},
      {"pass", result.pass()},
      {"total", result.checks.size()},
      {"failed", counterexamples.size()},
      {"guard_skips", result.guard_skips},
      {"checks", checks},
      {"counterexamples", counterexamples},
      {"warnings", result.warnings},
  };
}

std::string render_orbits_table(const json& report) {
  std::ostringstream os;
  os << "quiver " << report["quiver"]["type"].get<std::string>() << report["quiver"]["rank"]
     << ", dim " << report["dim"].dump() << ", dim E_d = " << report["dim_Ed"]
     << ", orbits: " << report["orbits"].size() << "\n";
  os << "index  c                     d(c)  smooth  chi   J\n";
  for (const auto& orb : report["orbits"]) {
    std::ostringstream c;
    c << json(orb["c"]).dump();
    os << orb["index"] << "      " << c.str();
    for (size_t i = c.str().size(); i < 22; ++i) os << ' ';
    os << orb["dim"] << "     " << (orb["smooth"].get<bool>() ? "yes" : "NO ") << "     "
       << orb["euler_char"].get<std::string>() << "     " << json(orb["J"]).dump() << "\n";
  }
  os << "hasse edges (c' -> c): ";
  for (const auto& e : report["hasse"]) os << e[0] << "->" << e[1] << " ";
  os << "\n";
  return os.str();
}

std::string render_verify_table(const json& report) {
  std::ostringstream os;
  os << "suite " << report["suite"].get<std::string>() << ": " << report["total"] << " checks, "
     << report["failed"] << " failed, " << report["guard_skips"] << " guard-skipped\n";
  for (const auto& c : report["checks"]) {
    os << (c["pass"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>();
    std::string detail = c["detail"].get<std::string>();
    if (!detail.empty()) os << "  [" << detail << "]";
    os << "\n";
  }
  for (const auto& w : report["warnings"]) os << "warn " << w.get<std::string>() << "\n";
  return os.str();
}

std::string render_dot(Engine& engine, const JobConfig& config) {
  const OrbitCatalog& cat = engine.catalog(config.d);
  ModuleContext<FieldQ>& ctx = engine.over_rationals();
  std::ostringstream os;
  os << "digraph degeneration {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int k = 0; k < cat.size(); ++k) {
    OrbitInfo info = orbit_info(ctx, cat, k);
    os << "  n" << k << " [label=\"" << info.cls.to_string() << " | " << info.dim << " | "
       << (info.smooth ? "smooth" : "not smooth") << "\"];\n";
  }
  for (auto [kp, k] : hasse_edges(cat)) os << "  n" << kp << " -> n" << k << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qrep

// ospcohom command line: verify | scan | bracket-table | invariant-ops | catalog
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad configuration or I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ospcohom/catalog.hpp"
#include "ospcohom/classifier.hpp"
#include "ospcohom/cohomology.hpp"
#include "ospcohom/parallel.hpp"
#include "ospcohom/verify.hpp"

using namespace ospcohom;
using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RawOptions {
  std::string lambda, mu, lambda_min = "-2", lambda_max = "2", lambda_step = "1/2";
  std::string name;
  int criterion = 0;
};

Scalar parse_scalar(const std::string& flag, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

RunConfig finish(RunConfig cfg, const RawOptions& raw) {
  if (!raw.lambda.empty()) cfg.lambda = parse_scalar("--lambda", raw.lambda);
  if (!raw.mu.empty()) cfg.mu = parse_scalar("--mu", raw.mu);
  cfg.lambda_min = parse_scalar("--lambda-min", raw.lambda_min);
  cfg.lambda_max = parse_scalar("--lambda-max", raw.lambda_max);
  cfg.lambda_step = parse_scalar("--lambda-step", raw.lambda_step);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.lambda_min > cfg.lambda_max) throw ConfigError("--lambda-min exceeds --lambda-max");
  return cfg;
}

std::vector<Scalar> lambdas(const RunConfig& cfg) {
  if (cfg.lambda) return {*cfg.lambda};
  return cfg.lambda_grid();
}

void emit(const RunConfig& cfg, const std::string& text, const json& j) {
  const std::string body = cfg.format == "json" ? j.dump(2) + "\n" : text;
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot open output file " + cfg.out);
  f << body;
  if (!f) throw ConfigError("write failed for " + cfg.out);
}

int cmd_verify(const RunConfig& cfg, int only) {
  VerificationReport r;
  if (only) {
    if (only < 1 || only > criterion_count) throw ConfigError("--criterion must be in 1.." + std::to_string(criterion_count));
    r.subcommand = "verify";
    r.criteria.push_back(run_criterion(only, cfg));
  } else {
    r = run_verify_theorems(cfg, [&](const CriterionResult& c) {
      if (cfg.format == "text" || !cfg.out.empty())
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title << "\n";
    });
  }
  emit(cfg, to_text(r), to_json(r));
  return r.all_pass() ? 0 : 1;
}

int cmd_scan(const RunConfig& cfg) {
  std::vector<std::pair<Scalar, Scalar>> cells;
  for (const Scalar& l : lambdas(cfg)) {
    if (cfg.mu) {
      cells.emplace_back(l, *cfg.mu);
    } else if (cfg.k) {
      cells.emplace_back(l, l + Scalar(*cfg.k, 2));
    } else {
      for (int d = 0; d <= 6; ++d) cells.emplace_back(l, l + Scalar(d, 2));
    }
  }
  const auto reports = parallel_map<H1Report>(cells.size(), cfg.jobs, [&](std::size_t i) {
    const auto [n, m] = default_truncation(cells[i].first, cells[i].second);
    return h1_dimension(cells[i].first, cells[i].second, cfg.relative, cfg.order.value_or(n), cfg.degree.value_or(m));
  });
  json j = {{"engine", engine_version}, {"subcommand", "scan"}, {"relative", cfg.relative}, {"cells", json::array()}};
  std::ostringstream os;
  os << (cfg.relative ? "relative" : "absolute") << " H^1 dimensions\n";
  os << "lambda  mu  h1  z1  b1  N  M  plateau\n";
  bool ok = true;
  for (const auto& r : reports) {
    j["cells"].push_back(to_json(r));
    os << r.lambda.str() << "  " << r.mu.str() << "  " << r.h1_dim << "  " << r.z1_dim << "  " << r.b1_dim << "  "
       << r.order << "  " << r.degree << "  " << (r.plateau ? "yes" : "NO") << "\n";
    ok = ok && r.plateau;
  }
  j["all_plateau"] = ok;
  emit(cfg, os.str(), j);
  return ok ? 0 : 1;
}

int cmd_bracket_table(const RunConfig& cfg, const std::string& algebra) {
  Algebra a;
  try {
    a = algebra_from_name(algebra);
  } catch (const std::exception& e) {
    throw ConfigError("--algebra: " + std::string(e.what()));
  }
  const auto& sc = structure(a);
  std::ostringstream os;
  for (GeneratorId g : sc.basis())
    for (GeneratorId h : sc.basis()) {
      const auto& c = sc.bracket(g, h);
      if (c.empty()) continue;
      os << "[" << name(g) << ", " << name(h) << "] =";
      for (const auto& [k, v] : c) os << " " << (v.sign() < 0 ? "" : "+") << v.str() << " " << name(k);
      os << "\n";
    }
  json j = to_json(sc);
  emit(cfg, os.str(), j);
  return 0;
}

int cmd_invariant_ops(const RunConfig& cfg) {
  Algebra a;
  if (cfg.algebra == "sl2") a = Algebra::sl2;
  else if (cfg.algebra == "osp12") a = Algebra::osp12;
  else throw ConfigError("--algebra must be sl2 or osp12 for invariant-ops");
  InvariantType t;
  if (cfg.type == "11") t = InvariantType::t11;
  else if (cfg.type == "12") t = InvariantType::t12;
  else throw ConfigError("--type must be 11 or 12");
  const SourceH s = a == Algebra::osp12 ? SourceH::h_full : (t == InvariantType::t11 ? SourceH::h0 : SourceH::h1);

  if (cfg.lambda && cfg.k) {
    const auto r = classify(a, s, *cfg.lambda, *cfg.k, t);
    const bool has_closed = !r.solution_basis.empty() && closed_form(s, t, r.lambda, r.k).has_value();
    const bool closed_ok = !has_closed || check_closed_form(r);
    json j = to_json(r);
    j["engine"] = engine_version;
    if (has_closed) j["closed_form_ok"] = closed_ok;
    std::ostringstream os;
    os << name(a) << " " << name(s) << " lambda=" << r.lambda.str() << " mu=" << r.mu.str() << " k=" << r.k
       << ": " << r.solution_basis.size() << " invariant operator(s)";
    if (r.constraint_evaluation) os << ", constraint = " << r.constraint_evaluation->str();
    os << "\n";
    for (const auto& A : r.solution_basis) {
      os << "  parity " << to_string(A.parity) << ":";
      for (const auto& [term, c] : A.terms)
        os << " " << c.str() << "*[t1^" << term.theta << " eta^" << term.eps_h << " d^" << term.j_h << " h][eta^"
           << term.eps_f << " d^" << term.j_f << " f]";
      os << "\n";
    }
    if (has_closed) os << "closed form " << (closed_ok ? "matches" : "DOES NOT match") << "\n";
    emit(cfg, os.str(), j);
    return closed_ok ? 0 : 1;
  }
  const ScanTable table = scan_constraint_variety(a, s, t, lambdas(cfg), cfg.k.value_or(4), cfg.jobs);
  json j = to_json(table);
  j["engine"] = engine_version;
  std::ostringstream os;
  os << "lambda  k  mu  dim  constraint  agrees\n";
  for (const auto& c : table.cells)
    os << c.lambda.str() << "  " << c.k << "  " << c.mu.str() << "  " << c.dim << "  "
       << (c.constraint ? c.constraint->str() : "-") << "  " << (c.agrees && c.closed_form_ok.value_or(true) ? "yes" : "NO")
       << "\n";
  emit(cfg, os.str(), j);
  bool ok = table.all_agree();
  for (const auto& c : table.cells) ok = ok && c.closed_form_ok.value_or(true);
  return ok ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg, const std::string& entry) {
  if (entry.empty()) {
    json j = json::array();
    std::ostringstream os;
    for (const auto& i : catalog_list()) {
      j.push_back({{"name", i.name},
                   {"symbol", i.symbol},
                   {"parameter", i.kind == ParameterKind::k ? "k" : "lambda"},
                   {"range", i.range},
                   {"weights", i.weights},
                   {"module", i.module},
                   {"status", std::string(to_string(i.status))},
                   {"parity", to_string(i.parity)}});
      os << i.name << "  " << i.symbol << "  " << (i.kind == ParameterKind::k ? "k" : "lambda") << " " << i.range
         << "  " << i.weights << "  " << to_string(i.status) << "  " << to_string(i.parity) << "\n";
    }
    emit(cfg, os.str(), {{"engine", engine_version}, {"catalog", j}});
    return 0;
  }
  const CatalogInfo* info;
  try {
    info = &catalog_info(entry);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  std::optional<Scalar> p;
  if (info->kind == ParameterKind::k) {
    if (cfg.k) p = Scalar(*cfg.k);
  } else {
    p = cfg.lambda;
  }
  if (!p) throw ConfigError(entry + " needs " + (info->kind == ParameterKind::k ? "--k" : "--lambda"));
  std::optional<CatalogEntry> e;
  try {
    e = make(entry, *p);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
  const auto& Y = e->cochain;
  const auto cc = is_cocycle(Y);
  json checks = {{"cocycle", cc.ok}, {"relative", is_relative_cochain(Y)}};
  bool ok = cc.ok;
  if (cc.ok && info->status == ClaimedStatus::nontrivial_cocycle && Y.domain() == Algebra::osp22) {
    const auto r = coboundary_solve(Y);
    checks["nontrivial"] = !r.is_coboundary();
    if (r.certificate) {
      checks["certificate"] = to_json(*r.certificate);
      checks["certificate_verified"] = verify_certificate(Y, *r.certificate);
      ok = ok && verify_certificate(Y, *r.certificate);
    } else {
      ok = false;
    }
  }
  if (info->status == ClaimedStatus::coboundary_generator) ok = ok && checks["relative"].get<bool>();
  json j = {{"engine", engine_version},
            {"name", info->name},
            {"symbol", info->symbol},
            {"parameter", p->str()},
            {"status", std::string(to_string(info->status))},
            {"cochain", to_json(Y)},
            {"checks", checks},
            {"pass", ok}};
  std::ostringstream os;
  os << info->name << " (" << info->symbol << ") at parameter " << p->str() << ": lambda=" << Y.lambda().str()
     << " mu=" << Y.mu().str() << " parity " << to_string(Y.parity()) << "\n";
  for (const auto& [g, v] : Y.values()) os << "  " << name(g) << " -> " << v.str() << "\n";
  os << "cocycle: " << (cc.ok ? "yes" : "no") << ", relative: " << (checks["relative"].get<bool>() ? "yes" : "no");
  if (checks.contains("nontrivial")) os << ", nontrivial: " << (checks["nontrivial"].get<bool>() ? "yes" : "no");
  os << "\n";
  emit(cfg, os.str(), j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology computations for osp(2|2) acting on differential operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", engine_version);

  RunConfig cfg;
  RawOptions raw;
  std::string bracket_algebra = "osp22";

  auto common = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", cfg.out, "write the report to this file");
    s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto grid = [&](CLI::App* s) {
    s->add_option("--lambda", raw.lambda, "single lambda (rational p/q)");
    s->add_option("--lambda-min", raw.lambda_min);
    s->add_option("--lambda-max", raw.lambda_max);
    s->add_option("--lambda-step", raw.lambda_step);
  };
  auto trunc = [&](CLI::App* s) {
    s->add_option("--order", cfg.order, "half-order bound N");
    s->add_option("--degree", cfg.degree, "coefficient degree bound M");
  };

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  common(verify);
  grid(verify);
  trunc(verify);
  verify->add_option("--k", cfg.k, "restrict the k families to this k");
  verify->add_option("--criterion", raw.criterion, "run only this criterion");

  auto* scan = app.add_subcommand("scan", "H^1 dimensions over a lambda grid");
  common(scan);
  grid(scan);
  trunc(scan);
  scan->add_option("--mu", raw.mu, "fixed mu (otherwise mu - lambda runs over 0..3 step 1/2)");
  scan->add_option("--k", cfg.k, "mu = lambda + k/2");
  scan->add_flag("--relative", cfg.relative, "relative to osp(1|2)");

  auto* brackets = app.add_subcommand("bracket-table", "structure constants");
  common(brackets);
  brackets->add_option("--algebra", bracket_algebra, "osp22, osp12, sl2 or pi_h");

  auto* inv = app.add_subcommand("invariant-ops", "invariant bilinear operators");
  common(inv);
  grid(inv);
  inv->add_option("--algebra", cfg.algebra, "sl2 or osp12");
  inv->add_option("--type", cfg.type, "11 or 12");
  inv->add_option("--k", cfg.k, "order k (with --lambda: one cell; otherwise scan up to k)");

  auto* cat = app.add_subcommand("catalog", "explicit cocycles and coboundary generators");
  common(cat);
  cat->add_option("name", raw.name, "entry to build (omit to list)");
  cat->add_option("--lambda", raw.lambda);
  cat->add_option("--k", cfg.k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg = finish(cfg, raw);
    if (*verify) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, raw.criterion);
    }
    if (*scan) {
      cfg.subcommand = "scan";
      return cmd_scan(cfg);
    }
    if (*brackets) return cmd_bracket_table(cfg, bracket_algebra);
    if (*inv) return cmd_invariant_ops(cfg);
    if (*cat) return cmd_catalog(cfg, raw.name);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "qcat_cli/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "qcat/ideal.hpp"
#include "qcat/io.hpp"
#include "qcat/monoidal.hpp"
#include "qcat/quotient.hpp"
#include "qcat/verify.hpp"
#include "qcat_cli/spec.hpp"

namespace qcat::cli {

using io::Json;

namespace {

struct Common {
  std::string spec;
  std::string serre;
  bool serre_given = false;
  std::string format = "text";

  bool json() const { return format == "json"; }
};

Workspace open(const Common& c) {
  Workspace w = load(c.spec);
  if (c.serre_given) w.serre = parse_serre(w.backend, c.serre);
  return w;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> labels(const BackendPtr& b, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(b->label(i));
  return out;
}

void print_matrix(std::ostream& out, const Mat& m, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) {
    out << indent << "(" << m.rows() << "x" << m.cols() << ")\n";
    return;
  }
  for (const auto& row : m.to_strings()) out << indent << "[" << join(row, " ") << "]\n";
}

// ---- analyze ---------------------------------------------------------------------

int analyze(const Common& c, std::ostream& out) {
  const Workspace w = open(c);
  const auto& b = w.backend;
  require(b->simple_count() > 0, ErrorCode::EmptyBackend, "backend has no simple objects");
  Json j;
  j["backend"] = b->id();
  j["kind"] = to_string(b->kind());
  j["field"] = b->field().name();
  std::vector<std::string> simples;
  for (std::size_t i = 0; i < b->simple_count(); ++i) simples.push_back(b->label(i));
  j["simples"] = simples;
  j["serre"] = w.serre.labels();
  Json objects = Json::array();
  for (const auto& [name, o] : w.objects) objects.push_back(name);
  j["objects"] = objects;
  const bool tensor = is_tensor_backend(*b);
  j["tensor"] = tensor;
  if (tensor) {
    const auto grid = component_grid(b);
    Json units = Json::array();
    for (std::size_t i = 0; i < grid.size; ++i) units.push_back(b->label(grid.unit_simple[i]));
    j["units"] = units;
    Json cells = Json::array();
    for (std::size_t i = 0; i < grid.size; ++i) {
      for (std::size_t k = 0; k < grid.size; ++k) {
        if (grid.cells[i][k].empty()) continue;
        cells.push_back(Json{{"i", i + 1}, {"j", k + 1}, {"simples", labels(b, grid.cells[i][k])}});
      }
    }
    j["grid"] = cells;
  }
  if (c.json()) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "backend  " << b->id() << "\n";
  out << "simples  " << simples.size() << ": " << join(simples) << "\n";
  out << "serre    " << w.serre.describe() << "\n";
  if (!w.objects.empty()) {
    std::vector<std::string> names;
    for (const auto& [name, o] : w.objects) names.push_back(name);
    out << "objects  " << join(names) << "\n";
  }
  if (!tensor) {
    out << "tensor   no\n";
    return kOk;
  }
  out << "units    " << j["units"].size() << ": " << join(j["units"].get<std::vector<std::string>>())
      << "\n";
  out << "grid\n";
  for (const auto& cell : j["grid"]) {
    out << "  (" << cell["i"].get<std::size_t>() << "," << cell["j"].get<std::size_t>()
        << ") " << join(cell["simples"].get<std::vector<std::string>>()) << "\n";
  }
  return kOk;
}

// ---- qhom / length -----------------------------------------------------------------

int qhom(const Common& c, const std::string& mn, const std::string& nn, std::ostream& out) {
  const Workspace w = open(c);
  const Obj m = w.object(mn), n = w.object(nn);
  const auto basis = qhom_basis(m, n, w.serre);
  const std::size_t plain = hom_basis(m, n).size();
  if (c.json()) {
    Json j;
    j["source"] = mn;
    j["target"] = nn;
    j["serre"] = w.serre.labels();
    j["dim"] = basis.size();
    j["hom_dim"] = plain;
    if (!basis.empty()) {
      j["pair"] = Json{{"source_dims", basis.front().rep().source().dims()},
                       {"target_dims", basis.front().rep().target().dims()}};
    }
    Json reps = Json::array();
    for (const auto& q : basis) {
      Json comps = Json::array();
      for (const auto& m2 : q.rep().components()) comps.push_back(io::to_json(m2));
      reps.push_back(comps);
    }
    j["basis"] = reps;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "dim Hom_{A/" << w.serre.describe() << "}(" << mn << ", " << nn << ") = " << basis.size()
      << "\n";
  out << "dim Hom_A(" << mn << ", " << nn << ") = " << plain << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << "basis " << i + 1 << "\n";
    const auto& comps = basis[i].rep().components();
    for (std::size_t v = 0; v < comps.size(); ++v) {
      out << "  vertex " << v + 1 << "\n";
      print_matrix(out, comps[v], "    ");
    }
  }
  return kOk;
}

int length_cmd(const Common& c, const std::string& xn, std::ostream& out) {
  const Workspace w = open(c);
  const Obj x = w.object(xn);
  const auto factors = composition_factors(x);
  const std::size_t l = length(x), ql = q_length(x, w.serre);
  Json fj = Json::object();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]) fj[w.backend->label(i)] = factors[i];
  }
  if (c.json()) {
    out << Json{{"object", xn},      {"serre", w.serre.labels()}, {"length", l},
                {"q_length", ql},    {"factors", fj}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "l_A(" << xn << ") = " << l << "\n";
  out << "l_{A/" << w.serre.describe() << "}(" << xn << ") = " << ql << "\n";
  std::vector<std::string> parts;
  for (auto it = fj.begin(); it != fj.end(); ++it) {
    parts.push_back(it.key() + "^" + std::to_string(it.value().get<std::size_t>()));
  }
  out << "factors " << (parts.empty() ? "none" : join(parts, " ")) << "\n";
  return kOk;
}

// ---- ideals -------------------------------------------------------------------------

int classify(const Common& c, std::ostream& out) {
  const Workspace w = open(c);
  require_tensor(*w.backend);
  const auto ideals = enumerate_tensor_ideals(w.backend);
  Json list = Json::array();
  for (const auto& d : ideals) {
    std::vector<std::size_t> J;
    for (auto i : d.J) J.push_back(i + 1);
    list.push_back(Json{{"J", J}, {"simples", d.serre.labels()}});
  }
  if (c.json()) {
    out << Json{{"backend", w.backend->id()}, {"count", ideals.size()}, {"ideals", list}}.dump(2)
        << "\n";
    return kOk;
  }
  out << ideals.size() << " tensor ideals\n";
  for (const auto& d : list) {
    std::vector<std::string> J;
    for (const auto& i : d["J"]) J.push_back(std::to_string(i.get<std::size_t>()));
    out << "  J={" << join(J, ",") << "}  "
        << (d["simples"].empty() ? std::string("0")
                                 : "<" + join(d["simples"].get<std::vector<std::string>>(), ",") + ">")
        << "\n";
  }
  return kOk;
}

int closure(const Common& c, const std::string& simples, std::ostream& out) {
  const Workspace w = open(c);
  require_tensor(*w.backend);
  const SerreSpec in = parse_serre(w.backend, simples);
  const SerreSpec cl = tensor_ideal_closure(in);
  if (c.json()) {
    out << Json{{"input", in.labels()}, {"closure", cl.labels()}, {"is_ideal", in == cl}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "closure of " << in.describe() << " = " << cl.describe() << "\n";
  return kOk;
}

int obstruction(const Common& c, std::ostream& out) {
  const Workspace w = open(c);
  require_tensor(*w.backend);
  const auto witness = monoidal_obstruction(w.serre);
  if (c.json()) {
    Json j{{"serre", w.serre.labels()}};
    j["witness"] = witness ? Json(w.backend->label(*witness)) : Json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "obstruction for " << w.serre.describe() << ": "
      << (witness ? w.backend->label(*witness) : std::string("none")) << "\n";
  return kOk;
}

// ---- verify -------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool timing = false;
  bool random_serre = false;
  std::size_t max_dim = 8;
  std::size_t max_cell = 3;
};

void print_report(std::ostream& out, const verify::SuiteReport& r, bool timing) {
  const char* status = r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL";
  out << status << "  " << r.suite;
  if (r.alias != r.suite) out << " (" << r.alias << ")";
  if (r.skipped) {
    out << "  " << r.skip_reason << "\n";
    return;
  }
  out << "  trials=" << r.trials << " checks=" << r.checks << " nontrivial=" << r.nontrivial;
  if (timing) out << " ms=" << static_cast<long>(r.wall_ms);
  out << "\n";
  for (const auto& f : r.failures) {
    out << "  trial " << f.trial << ": " << f.check << "  " << f.data.dump() << "\n";
  }
}

int verify_cmd(const Common& c, const VerifyArgs& a, std::ostream& out) {
  const Workspace w = open(c);
  verify::Options opt;
  opt.timing = a.timing;
  opt.random_serre = a.random_serre;
  opt.bounds.max_dim = a.max_dim;
  opt.bounds.max_cell = a.max_cell;
  std::vector<verify::SuiteReport> reports;
  if (a.suite == "all") {
    reports = verify::run_all(w.serre, a.trials, a.seed, opt);
  } else {
    reports.push_back(verify::run_suite(verify::find_suite(a.suite).name, w.serre, a.trials, a.seed, opt));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (c.json()) {
    Json j;
    j["backend"] = w.backend->id();
    j["serre"] = a.random_serre ? Json("random") : Json(w.serre.labels());
    j["seed"] = a.seed;
    j["trials"] = a.trials;
    j["passed"] = ok;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(verify::to_json(r, a.timing));
    j["suites"] = list;
    out << j.dump(2) << "\n";
  } else {
    out << "backend " << w.backend->id() << "  serre "
        << (a.random_serre ? std::string("random") : w.serre.describe()) << "  seed " << a.seed
        << "\n";
    for (const auto& r : reports) print_report(out, r, a.timing);
    out << (ok ? "all suites passed" : "some suites failed") << "\n";
  }
  return ok ? kOk : kSuiteFailed;
}

int list_suites(std::ostream& out) {
  for (const auto& s : verify::suites()) {
    out << s.name;
    if (s.alias != s.name) out << " (" << s.alias << ")";
    out << "  " << s.summary << "\n";
  }
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSuite:
    case ErrorCode::UnknownObject:
    case ErrorCode::InvalidArgument: return kUsage;
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::RequirementUnmet:
    case ErrorCode::NotTensorIdeal: return kRequirement;
    default: return kContract;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quotients of finite-length abelian categories by Serre subcategories"};
  app.name(args.empty() ? "qcat" : args.front());
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", common.spec, "spec file or preset (pathA2, repz2, matvec:2,1)")->required();
    sub->add_option("--serre", common.serre, "comma separated simple labels (overrides the spec)");
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "simples, unit summands and component grid");
  add_common(analyze_cmd);

  std::string m, n;
  auto* qhom_cmd = app.add_subcommand("qhom", "dimension and basis of a quotient Hom space");
  add_common(qhom_cmd);
  qhom_cmd->add_option("M", m, "source object")->required();
  qhom_cmd->add_option("N", n, "target object")->required();

  auto* length_sub = app.add_subcommand("length", "length in A and in A/C");
  add_common(length_sub);
  length_sub->add_option("X", m, "object")->required();

  auto* classify_cmd = app.add_subcommand("classify-ideals", "every two-sided Serre tensor ideal");
  add_common(classify_cmd);

  std::string simples;
  auto* closure_cmd = app.add_subcommand("closure", "smallest tensor ideal containing simples");
  add_common(closure_cmd);
  closure_cmd->add_option("--simples", simples, "comma separated simple labels")->required();

  auto* obstruction_cmd =
      app.add_subcommand("obstruction", "a simple B in C with B* (x) B outside C, if any");
  add_common(obstruction_cmd);

  VerifyArgs va;
  auto* verify_sub = app.add_subcommand("verify", "run property suites");
  add_common(verify_sub);
  verify_sub->add_option("--suite", va.suite, "suite name or alias, or all");
  verify_sub->add_option("--trials", va.trials, "trials per suite");
  verify_sub->add_option("--seed", va.seed, "random seed");
  verify_sub->add_flag("--timing", va.timing, "record wall time per suite");
  verify_sub->add_flag("--random-serre", va.random_serre,
                       "draw a Serre subcategory (a tensor ideal where needed) per trial");
  verify_sub->add_option("--max-dim", va.max_dim, "dimension cap for random objects");
  verify_sub->add_option("--max-cell", va.max_cell, "cell cap for random matvec objects");

  auto* suites_cmd = app.add_subcommand("suites", "list property suites");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << "\n";
    return kUsage;
  }
  common.serre_given = false;
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_option_no_throw("--serre") && sub->count("--serre")) common.serre_given = true;
  }

  try {
    if (*analyze_cmd) return analyze(common, out);
    if (*qhom_cmd) return qhom(common, m, n, out);
    if (*length_sub) return length_cmd(common, m, out);
    if (*classify_cmd) return classify(common, out);
    if (*closure_cmd) return closure(common, simples, out);
    if (*obstruction_cmd) return obstruction(common, out);
    if (*verify_sub) return verify_cmd(common, va, out);
    if (*suites_cmd) return list_suites(out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kUsage;
}

}  // namespace qcat::cli

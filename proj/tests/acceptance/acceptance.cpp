// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "qcat/ideal.hpp"
#include "qcat/io.hpp"
#include "qcat/monoidal.hpp"
#include "qcat/quotient.hpp"
#include "qcat/random.hpp"
#include "qcat/verify.hpp"
#include "qcat_cli/app.hpp"
#include "qcat_cli/spec.hpp"

using namespace qcat;
using Json = io::Json;
namespace o = oracle;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

Json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "qcat");
  args.push_back("--format");
  args.push_back("json");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) throw std::runtime_error("qcat exited " + std::to_string(code) + ": " + err.str());
  return Json::parse(out.str());
}

std::vector<std::string> names(const SerreSpec& c) { return c.labels(); }

const std::vector<std::string> kTensorPresets = {
    "repz2", "repz3", "repz4", "repz2@GF(3)", "repz6",
    "matvec:2,1", "matvec:1,1,1@GF(3)", "matvec:2@GF(2)", "matvec:1,2@GF(5)"};

const std::vector<std::string> kAllPresets = [] {
  std::vector<std::string> v = {"pathA2", "pathA3", "pathA3@GF(3)", "pathA4@Q"};
  v.insert(v.end(), kTensorPresets.begin(), kTensorPresets.end());
  return v;
}();

// Runs one suite over every preset with a random Serre subcategory per trial.
Outcome suites_over(const std::vector<std::string>& suites, const std::vector<std::string>& presets,
                    std::size_t trials, std::uint64_t seed) {
  Outcome out;
  std::size_t nontrivial = 0, checks = 0;
  verify::Options opt;
  opt.random_serre = true;
  for (const auto& p : presets) {
    const auto w = cli::preset(p);
    for (const auto& s : suites) {
      const auto r = verify::run_suite(s, w.serre, trials, seed, opt);
      nontrivial += r.nontrivial;
      checks += r.checks;
      out.expect(r.trials == trials, s + " on " + p + " ran " + std::to_string(r.trials) + " trials");
      out.expect(r.passed(), s + " failed on " + p + ": " +
                                 (r.failures.empty() ? "" : r.failures.front().check));
    }
  }
  out.expect(nontrivial > 0, "no nontrivial trials");
  if (out.ok) {
    out.detail = std::to_string(checks) + " checks, " + std::to_string(nontrivial) + " nontrivial trials";
  }
  return out;
}

Outcome criterion1() {
  Outcome out;
  const auto w = cli::preset("repz2");
  out.expect(w.backend->field().is_rational(), "repz2 is not over Q");
  const auto closure = tensor_ideal_closure(SerreSpec::from_labels(w.backend, {"W1"}));
  out.expect(names(closure) == std::vector<std::string>{"W1", "W2"}, "closure of {W1}");
  const Json ideals = cli_json({"classify-ideals", "repz2"});
  out.expect(ideals["count"] == 2, "classify-ideals count");
  out.expect(ideals["ideals"][0]["simples"].empty() &&
                 ideals["ideals"][1]["simples"] == Json::parse(R"(["W1","W2"])"),
             "classify-ideals members");
  const Json obs = cli_json({"obstruction", "repz2", "--serre", "W1"});
  out.expect(obs["witness"] == "W1", "obstruction witness");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto b = cli::preset("matvec:2,1").backend;
  const auto ideals = enumerate_tensor_ideals(b);
  out.expect(ideals.size() == 4, "ideal count " + std::to_string(ideals.size()));
  const auto c = SerreSpec::from_labels(b, {"E1_1_1", "E1_1_2", "E1_2_1", "E1_2_2"});
  const auto model = build_quotient_backend(b, describe_ideal(c));
  const auto ref = Backend::matvec(b->field(), {1});
  const auto& t = model.target;
  out.expect(t->simple_count() == ref->simple_count(), "simple count");
  out.expect(unit_decomposition(t).size() == unit_decomposition(ref).size(), "unit summands");
  for (std::size_t i = 0; i < t->simple_count(); ++i) {
    for (std::size_t j = 0; j < t->simple_count(); ++j) {
      out.expect(fusion(t, i, j) == fusion(ref, i, j), "fusion");
    }
  }
  // The surviving simple is the cell simple of block 2.
  out.expect(model.simple_map[*b->simple_index("E2_1_1")] == std::optional<std::size_t>(0),
             "surviving simple");
  return out;
}

Outcome criterion3() {
  Outcome out;
  {
    const auto w = cli::preset("pathA2");
    const auto c = SerreSpec::from_labels(w.backend, {"S2"});
    const Obj m = w.object("M12");
    const auto q = o::quiver_of(*w.backend);
    const auto want = o::colimit_qhom_dim(q, o::rep_of(m), o::rep_of(m), {false, true}, 100000);
    out.expect(want == std::optional<std::size_t>(1), "oracle colimit for M12");
    out.expect(qhom_basis(m, m, c).size() == 1, "canonical pair for M12");
    out.expect(q_length(m, c) == 1 && o::q_length(q, o::rep_of(m), {false, true}) == 1,
               "q_length(M12)");
  }
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const std::vector<BackendPtr> backends = {
      cli::preset("pathA2").backend,
      cli::preset("pathA3").backend,
      cli::preset("pathA3@GF(3)").backend,
      Backend::path_algebra(f2, 2, {{0, 1, "x"}, {0, 1, "y"}}),
      Backend::path_algebra(f3, 3, {{0, 1, ""}, {2, 1, ""}}),
      cli::preset("repz2@GF(3)").backend,
      Backend::group_algebra(f3, {2, 2}),
      cli::preset("matvec:2,1@GF(2)").backend,
      cli::preset("matvec:1,1,1@GF(3)").backend,
      cli::preset("matvec:2@GF(3)").backend,
  };
  std::size_t compared = 0, nonzero = 0, proper = 0;
  for (std::uint64_t t = 0; compared < 100; ++t) {
    auto rng = gen::trial_rng(2024, t);
    const auto& b = backends[t % backends.size()];
    std::vector<std::size_t> pick;
    for (std::size_t s = 0; s < b->simple_count(); ++s) {
      if (rng() % 2) pick.push_back(s);
    }
    const auto c = SerreSpec::from_indices(b, pick);
    const Obj m = gen::random_object(b, rng, {1 + rng() % 5, 2});
    const Obj n = gen::random_object(b, rng, {std::max<std::size_t>(1, 6 - m.dim()), 2});
    if (m.dim() + n.dim() > 6 || m.dim() == 0 || n.dim() == 0) continue;
    std::vector<bool> in_c(b->simple_count(), false);
    for (auto s : pick) in_c[s] = true;
    const auto want = o::colimit_qhom_dim(o::quiver_of(*b), o::rep_of(m), o::rep_of(n), in_c, 1u << 20);
    out.expect(want.has_value(), "oracle cap exceeded");
    if (!want) break;
    const std::size_t got = qhom_basis(m, n, c).size();
    out.expect(got == *want, "mismatch on " + b->id() + " C=" + c.describe() + ": " +
                                 std::to_string(got) + " vs " + std::to_string(*want));
    ++compared;
    nonzero += *want > 0;
    proper += !c.empty() && !c.is_all();
  }
  out.expect(nonzero > 10 && proper > 10, "sample too degenerate");
  if (out.ok) {
    out.detail = std::to_string(compared) + " random triples, " + std::to_string(nonzero) +
                 " with nonzero Hom";
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::size_t checks = 0, runs = 0;
  const std::vector<std::string> suites = {"quotient_monoidal", "quotient_multiring", "quotient_rigid"};
  for (const auto& p : kTensorPresets) {
    const auto b = cli::preset(p).backend;
    const auto ideals = enumerate_tensor_ideals(b);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      const auto model = build_quotient_backend(b, ideals[k]);
      if (model.target->simple_count() == 0) continue;
      // In A/C itself, and in the built quotient backend with nothing killed.
      for (const auto& spec : {ideals[k].serre, SerreSpec::none(model.target)}) {
        for (const auto& s : suites) {
          const auto r = verify::run_suite(s, spec, 200 / ideals.size() + 1, 17 + k);
          checks += r.checks;
          ++runs;
          out.expect(r.passed(), s + " failed on " + p + " mod " + ideals[k].serre.describe());
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(runs) + " suite runs, " + std::to_string(checks) + " checks";
  return out;
}

// Dichotomy: each cell is inside C or disjoint from it. Vanishing: the cells
// in C are exactly J x J, and cells linking J with its complement are zero.
bool ideal_shape_ok(const ComponentGrid& grid, const IdealDescriptor& d) {
  std::vector<bool> in_j(grid.size, false);
  for (auto i : d.J) in_j[i] = true;
  for (std::size_t i = 0; i < grid.size; ++i) {
    for (std::size_t j = 0; j < grid.size; ++j) {
      const auto& cell = grid.cells[i][j];
      std::size_t inside = 0;
      for (auto s : cell) inside += d.serre.contains(s);
      if (inside != 0 && inside != cell.size()) return false;
      if (!cell.empty() && (inside == cell.size()) != (in_j[i] && in_j[j])) return false;
      if (!cell.empty() && in_j[i] != in_j[j]) return false;
    }
  }
  return true;
}

Outcome criterion9() {
  Outcome out;
  std::vector<std::string> presets;
  for (int n = 1; n <= 12; ++n) presets.push_back("repz" + std::to_string(n));
  for (const char* m : {"matvec:1", "matvec:2", "matvec:3", "matvec:1,1", "matvec:2,1", "matvec:1,2",
                        "matvec:2,2", "matvec:3,1", "matvec:1,1,1", "matvec:2,1,1", "matvec:2,2,1",
                        "matvec:3,1,1,1", "matvec:1,1,1,1", "matvec:2,1,1,1,1",
                        "matvec:1,1,1,1,1,1", "matvec:1,1,1,1,1,1,1,1,1,1,1,1"}) {
    presets.push_back(m);
  }
  std::size_t total = 0;
  for (const auto& p : presets) {
    const auto b = cli::preset(p).backend;
    if (b->simple_count() > 12) continue;
    std::vector<std::vector<std::size_t>> mine;
    const auto ideals = enumerate_tensor_ideals(b);
    const auto grid = component_grid(b);
    for (const auto& d : ideals) {
      mine.push_back(d.serre.simples);
      out.expect(ideal_shape_ok(grid, d), "cell conditions fail on " + p);
    }
    auto brute = o::brute_force_ideals(*b);
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    out.expect(mine == brute, "enumeration differs from brute force on " + p);
    total += ideals.size();
  }
  if (out.ok) {
    out.detail = std::to_string(presets.size()) + " presets, " + std::to_string(total) + " ideals";
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Z/2 over Q: closure, trivial ideals, obstruction", 1, criterion1},
      {2, "matvec (2,1): four ideals, quotient by block 1 is matvec (1)", 1, criterion2},
      {3, "quotient Hom against the literal colimit", 60, criterion3},
      {4, "zero/mono/epi classification in A/C", 0,
       [] { return suites_over({"quotient_classification"}, kAllPresets, 200, 4); }},
      {5, "tensor kernel membership, mono and epi closure", 0,
       [] { return suites_over({"tensor_kernel_membership", "tensor_mono", "tensor_epi"}, kTensorPresets, 200, 5); }},
      {6, "quotient tensor independent of lifts", 0,
       [] { return suites_over({"tensor_well_defined"}, kTensorPresets, 200, 6); }},
      {7, "finite length and finite Hom in A/C", 0,
       [] { return suites_over({"quotient_length", "quotient_hom_finite"}, kAllPresets, 200, 7); }},
      {8, "monoidal, multiring and rigid structure on quotient backends", 0, criterion8},
      {9, "ideal enumeration against brute force", 0, criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      r.ok = false;
      r.detail = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s";
    }
    all = all && r.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (r.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
         << "  [" << secs << " s]";
    if (!r.detail.empty()) line << "  " << r.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}

// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failing criteria.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wh/commands.hpp"
#include "wh/duality.hpp"

using namespace wh;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Groupoid> library_groupoids() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), builtin_i2(),
          pair_groupoid(2), pair_groupoid(3), disjoint_union(builtin_i2(), cyclic_group(2))};
}

DualityContext context(const Instance& inst) {
  return DualityContext::build(inst.groupoid, inst.algebra, inst.action);
}

[[maybe_unused]] bool valid(const Instance& inst) {
  WeakHopf kg = groupoid_algebra(inst.groupoid, inst.field());
  return check_module_algebra(inst.algebra, kg, inst.action).holds();
}

std::string first_violation(const Report& r) {
  if (r.violations().empty()) return r.claim() + " holds";
  const auto& v = r.violations().front();
  return r.claim() + ": " + v.axiom + " " + format_tuple(v.witness);
}

Outcome weak_hopf_suite() {
  auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& G : library_groupoids()) {
    for (const Field& F : {Field::rationals(), Field::prime(2)}) {
      WeakHopf kg = groupoid_algebra(G, F);
      WeakHopf dual = dual_weak_hopf(kg, G);
      for (const WeakHopf* h : {&kg, &dual}) {
        Report a = check_weak_bialgebra(*h);
        Report b = check_antipode(*h);
        if (!a.holds()) return {false, first_violation(a)};
        if (!b.holds()) return {false, first_violation(b)};
        ++checked;
      }
    }
  }
  double t = seconds_since(start);
  return {t < 10.0, std::to_string(checked) + " structures, " + std::to_string(t) + " s"};
}

Outcome classical_duality() {
  std::ostringstream d;
  for (const char* name : {"z2-trivial", "z3-trivial"}) {
    DualityContext ctx = context(builtin_instance(name));
    const std::size_t n = ctx.groupoid.size();
    std::size_t r = rank(ctx.field(), ctx.phi.flattened());
    d << name << ": ker " << ctx.kernel.dim_kernel << ", rank " << r << "; ";
    if (ctx.kernel.dim_kernel != 0 || r != n * n || ctx.kernel.dim_image != n * n) return {false, d.str()};
  }
  return {true, d.str()};
}

Outcome thm22_i2() {
  auto start = Clock::now();
  DualityContext ctx = context(builtin_instance("i2-swap"));
  Report r = verify_claim("thm2.2", ctx);
  double t = seconds_since(start);
  return {r.holds() && t < 5.0, first_violation(r) + ", dim ker " + std::to_string(ctx.kernel.dim_kernel) + ", " +
                                     std::to_string(t) + " s"};
}

// Criterion 4 over every library instance whose classification is total.
Outcome props_23_25() {
  bool pass = true;
  std::ostringstream d;
  for (const auto& name : builtin_names()) {
    DualityContext ctx = context(builtin_instance(name));
    if (!ctx.strata.total()) {
      d << name << ": skipped (" << ctx.strata.unclassified() << " unclassified); ";
      continue;
    }
    for (const char* id : {"prop2.3", "prop2.4", "prop2.5"}) {
      Report r = verify_claim(id, ctx);
      if (!r.holds()) {
        pass = false;
        d << name << " " << first_violation(r) << "; ";
      }
    }
  }
  return {pass, d.str()};
}

Outcome bookkeeping() {
  bool pass = true;
  std::ostringstream d;
  for (const auto& name : builtin_names()) {
    DualityContext ctx = context(builtin_instance(name));
    Report t26 = verify_claim("thm2.6", ctx);
    const std::size_t N = ctx.dsm.algebra.dim();
    d << name << " " << ctx.kernel.dim_kernel << "+" << ctx.kernel.dim_image << "=" << N;
    if (ctx.kernel.dim_kernel + rank(ctx.field(), ctx.phi.flattened()) != N) {
      pass = false;
      d << " rank-nullity FAILS";
    }
    if (const Violation* v = t26.find("D-plus-S-whole")) {
      pass = false;
      d << " D+S FAILS (" << v->detail << ", " << ctx.strata.unclassified() << " unclassified)";
    }
    d << "; ";
  }
  return {pass, d.str()};
}

Outcome example_end_to_end() {
  auto start = Clock::now();
  std::ostringstream d;
  bool complete = true;
  for (const char* name : {"ex2.8", "ex2.8-gf2"}) {
    Instance inst = builtin_instance(name);
    VerifyResult res = run_verify(inst, resolve_claims(inst, "all"));
    std::string json = report_json(res);
    complete = complete && res.claims.size() == claim_ids().size() + 1 && json.find("\"strata\"") != std::string::npos;
    const Report& expected = res.claims.back();
    d << name << ": validates=" << (valid(inst) ? "yes" : "no");
    for (const auto& pre : res.preconditions) {
      if (!pre.holds()) d << ", " << first_violation(pre);
    }
    d << ", " << first_violation(expected) << "; ";
  }
  double t = seconds_since(start);
  d << t << " s";
  return {complete && t < 10.0, d.str()};
}

Outcome thm29() {
  std::ostringstream d;
  for (const char* name : {"i2-swap", "z2-trivial", "z3-trivial"}) {
    Report r = verify_claim("thm2.9", context(builtin_instance(name)));
    d << name << " " << first_violation(r) << "; ";
    if (!r.holds()) return {false, d.str()};
  }
  return {true, d.str()};
}

Outcome associativity() {
  bool pass = true;
  std::ostringstream d;
  for (const auto& name : builtin_names()) {
    Instance inst = builtin_instance(name);
    DualityContext ctx = context(inst);
    d << name << ":";
    for (const auto& [label, a] : {std::pair<std::string, const FinAlgebra*>{"B#KG", &ctx.bsm.algebra},
                                   {"B#KG#KG*", &ctx.dsm.algebra}}) {
      Report r = check_associativity(*a);
      d << " " << label << (r.holds() ? " ok" : " FAILS " + first_violation(r));
      pass = pass && r.holds();
    }
    try {
      auto dec = component_decomposition(inst.algebra, inst.groupoid, inst.action);
      auto dfap = derive_dfap_action(inst.algebra, inst.groupoid, dec.decomposition, inst.action);
      Report r = check_associativity(skew_groupoid_ring(inst.algebra, inst.groupoid, dfap.dfap).algebra);
      d << " skew" << (r.holds() ? " ok" : " FAILS " + first_violation(r));
      pass = pass && r.holds();
    } catch (const std::invalid_argument& e) {
      d << " skew not constructible (" << e.what() << ")";
      pass = false;
    }
    d << "; ";
  }
  return {pass, d.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  auto dir = std::filesystem::temp_directory_path() / "wh_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& name : builtin_names()) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      auto p = dir / (name + "." + std::to_string(run) + ".json");
      std::filesystem::remove(p);
      std::string cmd = std::string(WH_BINARY) + " verify " + name + " --claim all --json " + p.string() +
                        " >/dev/null 2>&1";
      int status = std::system(cmd.c_str());
      if (WEXITSTATUS(status) > 1) return {false, name + ": wh exited with " + std::to_string(WEXITSTATUS(status))};
      outputs[run] = slurp(p);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) return {false, name + ": reports differ"};
  }
  return {true, std::to_string(builtin_names().size()) + " instances, two runs each"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 weak Hopf axioms for KG and KG*", weak_hopf_suite},
      {"2 classical duality for Z/2, Z/3", classical_duality},
      {"3 kernel strata on i2-swap", thm22_i2},
      {"4 subalgebra, identity and annihilators", props_23_25},
      {"5 kernel complement and rank-nullity", bookkeeping},
      {"6 three-dimensional example end to end", example_end_to_end},
      {"7 skew groupoid ring comparison", thm29},
      {"8 associativity of the smash products", associativity},
      {"9 deterministic reports", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  -- " << o.detail << "\n";
  }
  return failures;
}

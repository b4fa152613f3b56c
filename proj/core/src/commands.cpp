#include "wh/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#ifndef WH_VERSION
#define WH_VERSION "0.0.0"
#endif

namespace wh {

namespace {

using json = nlohmann::json;

const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kDim = "\033[2m";
const char* kReset = "\033[0m";

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? code + text + kReset : text;
}

json conventions() {
  return {
      {"groupoid", "gh is defined iff tgt(g) = src(h); s(g) = gg^-1, t(g) = g^-1g; objects are identities"},
      {"epsilon_t", "eps_t(h) = eps(1_1 h) 1_2 over Delta(1); for KG, eps_t(u_g) = u_s(g)"},
      {"B_g", "a in B_g iff a in B(g.1_B); for valid actions this is B_s(g)"},
      {"A1_membership", "A1 is the span of the basis elements a#u_g#rho_h with a in span(g.B)"},
      {"strata",
       "A3 if (g,h) not in G2; Unclassified if a is inhomogeneous; with a in B_e: A1/A2 if a in B_g and "
       "a in g.B (loop / non-loop); otherwise the A4..A10 conjunction with (l,g) in G2 iff e = s(g) and "
       "(g,l) in G2 iff some morphism runs t(g) -> e; A5/A9 ties are Unclassified"},
      {"double_smash", "(a#u_m#rho_n)(b#u_s#rho_t) = sum over Delta(rho_n) of (a#u_m)(rho_p -> b#u_s) # rho_q rho_t "
                       "= [n = st] a(m.b) # u_ms # rho_t"},
      {"phi", "phi(a#u_g#rho_h)(b#u_l) = delta_{h,l} (a#u_g)(b#u_l) in End_K(B#KG); right B-linearity under "
              "z.b = z(b#1_KG) is reported separately"},
      {"y_candidates", "y_morphism_sum = sum_l l.1_B # u_t(l) # sum_{s(n)=t(l)} rho_n; y_object_sum = sum_e e.1_B "
                       "# u_e # sum_{s(n)=e} rho_n"},
  };
}

json report_to_json(const Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations()) {
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
  }
  json counts = json::object();
  for (const auto& [k, c] : r.violation_counts()) counts[k] = c;
  json dims = json::object();
  for (const auto& [k, d] : r.dimensions()) dims[k] = d;
  return {{"id", r.claim()},
          {"field", r.field()},
          {"verdict", r.holds() ? "holds" : "fails"},
          {"violation_counts", counts},
          {"violations", violations},
          {"dimensions", dims},
          {"notes", r.notes()},
          {"certificates", r.certificates()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("cannot write '" + path + "'");
}

// Groupoid, B and KG/KG* checks shared by validate and verify.
std::vector<Report> structure_reports(const Instance& inst) {
  std::vector<Report> out;
  Report groupoid = validate_groupoid(inst.groupoid);
  const bool groupoid_ok = groupoid.holds();
  out.push_back(std::move(groupoid));
  Report algebra = check_associativity(inst.algebra, "algebra-B");
  algebra.merge(check_unit(inst.algebra));
  out.push_back(std::move(algebra));
  if (!groupoid_ok) return out;
  WeakHopf kg = groupoid_algebra(inst.groupoid, inst.field());
  WeakHopf kgstar = dual_weak_hopf(kg, inst.groupoid);
  for (const auto& [name, h] : {std::pair<std::string, const WeakHopf*>{"KG", &kg}, {"KG*", &kgstar}}) {
    Report r(name + " weak-hopf");
    r.set_field(inst.field().name());
    r.merge(check_weak_bialgebra(*h));
    r.merge(check_antipode(*h));
    out.push_back(std::move(r));
  }
  return out;
}

bool all_hold(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!r.holds()) return false;
  }
  return true;
}

Report renamed(const std::string& name, const Report& r) {
  Report out(name);
  out.set_field(r.field());
  out.merge(r);
  return out;
}

}  // namespace

bool color_enabled(bool is_tty) {
  if (const char* v = std::getenv("WH_COLOR")) {
    if (std::string(v) == "0") return false;
    if (std::string(v) == "1") return true;
  }
  return is_tty;
}

const char* engine_version() { return WH_VERSION; }

bool VerifyResult::holds() const { return all_hold(claims); }

std::vector<std::string> resolve_claims(const Instance& inst, const std::string& claim) {
  if (claim == "all") {
    auto ids = claim_ids();
    if (inst.expect) ids.push_back("expected-kernel");
    return ids;
  }
  if (is_claim_id(claim) || (claim == "expected-kernel" && inst.expect)) return {claim};
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

VerifyResult run_verify(const Instance& inst, const std::vector<std::string>& claims) {
  VerifyResult result;
  result.instance_name = inst.name;
  result.digest = instance_digest(inst);
  result.field = inst.field().name();
  result.preconditions = structure_reports(inst);
  if (!result.preconditions.front().holds()) {
    throw InputError("groupoid axioms fail; run validate for details");
  }

  DualityContext ctx = DualityContext::build(inst.groupoid, inst.algebra, inst.action);
  result.preconditions.push_back(ctx.module_report);
  result.preconditions.push_back(renamed("component-decomposition", ctx.decomposition.report));
  result.preconditions.push_back(check_associativity(ctx.bsm.algebra, "associativity B#KG"));
  result.preconditions.push_back(check_associativity(ctx.dsm.algebra, "associativity B#KG#KG*"));

  result.dimensions = {{"B", static_cast<long>(inst.algebra.dim())},
                       {"KG", static_cast<long>(inst.groupoid.size())},
                       {"B#KG", static_cast<long>(ctx.bsm.algebra.dim())},
                       {"B#KG#KG*", static_cast<long>(ctx.dsm.algebra.dim())}};
  result.strata = ctx.strata;
  result.kernel = ctx.kernel;
  result.kernel.kernel.clear();

  for (const auto& id : claims) {
    if (id == "expected-kernel") {
      result.claims.push_back(verify_expected_kernel(ctx, inst.expect->kernel_strata, inst.expect->empty_strata));
    } else {
      result.claims.push_back(verify_claim(id, ctx));
    }
  }
  return result;
}

std::string report_json(const VerifyResult& result) {
  json strata = json::object();
  for (std::size_t k = 1; k <= kStratumCount; ++k) {
    auto s = static_cast<Stratum>(k);
    strata[to_string(s)] = result.strata.count(s);
  }
  json dims = json::object();
  for (const auto& [k, v] : result.dimensions) dims[k] = v;
  json pre = json::array();
  for (const auto& r : result.preconditions) pre.push_back(report_to_json(r));
  json claims = json::array();
  for (const auto& r : result.claims) claims.push_back(report_to_json(r));
  json j = {
      {"engine", {{"name", "wh"}, {"version", engine_version()}}},
      {"instance", {{"name", result.instance_name}, {"digest", result.digest}, {"field", result.field},
                    {"dimensions", dims}}},
      {"conventions", conventions()},
      {"strata", {{"counts", strata}, {"unclassified", result.strata.unclassified()},
                  {"total", result.strata.total()}}},
      {"phi", {{"dim_domain", result.kernel.dim_domain}, {"dim_kernel", result.kernel.dim_kernel},
               {"dim_image", result.kernel.dim_image}}},
      {"preconditions", pre},
      {"claims", claims},
      {"verdict", result.holds() ? "holds" : "fails"},
  };
  return j.dump(2) + "\n";
}

std::string render_report(const Report& r, bool color) {
  std::ostringstream out;
  out << (r.holds() ? paint("PASS", kGreen, color) : paint("FAIL", kRed, color)) << "  " << r.claim();
  if (!r.field().empty()) out << " [" << r.field() << "]";
  out << "\n";
  for (const auto& [k, c] : r.violation_counts()) {
    out << "  " << paint("violated", kRed, color) << " " << k << " (" << c << ")\n";
  }
  for (const auto& v : r.violations()) {
    out << "    " << v.axiom << " " << format_tuple(v.witness);
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  for (const auto& [k, d] : r.dimensions()) out << "  " << k << " = " << d << "\n";
  for (const auto& c : r.certificates()) out << "  " << paint("certificate", kGreen, color) << " " << c << "\n";
  for (const auto& n : r.notes()) out << "  " << paint("note", kDim, color) << " " << n << "\n";
  return out.str();
}

std::string report_text(const VerifyResult& result, bool color) {
  std::ostringstream out;
  out << "instance " << result.instance_name << " [" << result.field << "] sha256 " << result.digest << "\n";
  for (const auto& [k, v] : result.dimensions) out << "  dim " << k << " = " << v << "\n";
  out << "strata:";
  for (std::size_t k = 1; k <= kStratumCount; ++k) {
    auto s = static_cast<Stratum>(k);
    out << " " << to_string(s) << "=" << result.strata.count(s);
  }
  out << "\nphi: dim ker = " << result.kernel.dim_kernel << ", dim im = " << result.kernel.dim_image << " of "
      << result.kernel.dim_domain << "\n\npreconditions\n";
  for (const auto& r : result.preconditions) out << render_report(r, color);
  out << "\nclaims\n";
  for (const auto& r : result.claims) out << render_report(r, color);
  return out.str();
}

int cmd_validate(const std::string& source, CommandIO io) {
  try {
    Instance inst = load_instance(source);
    std::vector<Report> reports = structure_reports(inst);
    if (reports.front().holds()) {
      WeakHopf kg = groupoid_algebra(inst.groupoid, inst.field());
      reports.push_back(check_module_algebra(inst.algebra, kg, inst.action));
      reports.push_back(
          renamed("component-decomposition", component_decomposition(inst.algebra, inst.groupoid, inst.action).report));
    }
    for (const auto& r : reports) io.out << render_report(r, io.color);
    return all_hold(reports) ? kExitOk : kExitViolations;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_verify(const std::string& source, const std::string& claim, const std::optional<std::string>& json_out,
               CommandIO io) {
  try {
    Instance inst = load_instance(source);
    std::vector<std::string> claims;
    try {
      claims = resolve_claims(inst, claim);
    } catch (const std::invalid_argument& e) {
      io.err << "error: " << e.what() << "\nusage: wh verify <file> --claim <id|all> [--json <out>]\nclaims:";
      for (const auto& id : claim_ids()) io.err << " " << id;
      io.err << " all\n";
      return kExitError;
    }
    VerifyResult result = run_verify(inst, claims);
    if (json_out) write_file(*json_out, report_json(result));
    io.out << report_text(result, io.color);
    return result.holds() ? kExitOk : kExitViolations;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_builtin(const std::string& name, const std::optional<std::string>& out_path, CommandIO io) {
  try {
    std::string text = serialize_instance(builtin_instance(name));
    if (out_path) {
      write_file(*out_path, text);
    } else {
      io.out << text;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\nbuiltins:";
    for (const auto& n : builtin_names()) io.err << " " << n;
    io.err << "\n";
    return kExitError;
  }
}

int cmd_hopf_check(const std::string& source, CommandIO io) {
  try {
    std::vector<Report> reports;
    std::error_code ec;
    bool explicit_structure = false;
    if (std::filesystem::exists(source, ec)) {
      std::string text = read_file(source);
      json j = json::parse(text, nullptr, false);
      if (j.is_object() && j.contains("weak_hopf")) {
        explicit_structure = true;
        WeakHopf h = parse_weak_hopf(text);
        Report r("weak-hopf");
        r.set_field(h.algebra.field().name());
        r.merge(check_associativity(h.algebra));
        r.merge(check_weak_bialgebra(h));
        if (h.co.antipode) {
          r.merge(check_antipode(h));
        } else {
          r.add_note("no antipode given; antipode identities not checked");
        }
        reports.push_back(std::move(r));
      }
    }
    if (!explicit_structure) {
      Instance inst = load_instance(source);
      reports = structure_reports(inst);
      reports.erase(reports.begin() + 1);  // B is not part of this check
    }
    for (const auto& r : reports) io.out << render_report(r, io.color);
    return all_hold(reports) ? kExitOk : kExitViolations;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace wh

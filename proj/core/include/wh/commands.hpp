#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wh/duality.hpp"
#include "wh/instance.hpp"
#include "wh/report.hpp"

namespace wh {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitViolations = 1, kExitError = 2 };

struct CommandIO {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// WH_COLOR=0|1 wins; otherwise color follows `is_tty`.
bool color_enabled(bool is_tty);

const char* engine_version();

/// Everything `verify` reports for one instance.
struct VerifyResult {
  std::string instance_name;
  std::string digest;
  std::string field;
  std::vector<std::pair<std::string, long>> dimensions;
  /// Structural checks the claims presuppose (validity, associativity).
  std::vector<Report> preconditions;
  Stratification strata;
  KernelImage kernel;
  std::vector<Report> claims;

  bool holds() const;
};

/// Claim list for `--claim`: a single id or "all" (all claim ids, plus the
/// expected-kernel check when the instance states one). Throws
/// std::invalid_argument for unknown ids.
std::vector<std::string> resolve_claims(const Instance& inst, const std::string& claim);

VerifyResult run_verify(const Instance& inst, const std::vector<std::string>& claims);

/// Deterministic JSON: no timings, sorted keys.
std::string report_json(const VerifyResult& result);
std::string report_text(const VerifyResult& result, bool color);
std::string render_report(const Report& report, bool color);

int cmd_validate(const std::string& source, CommandIO io);
int cmd_verify(const std::string& source, const std::string& claim, const std::optional<std::string>& json_out,
               CommandIO io);
int cmd_builtin(const std::string& name, const std::optional<std::string>& out_path, CommandIO io);
/// Weak Hopf axioms for KG and KG* of an instance, or for an explicit
/// structure given as {"field", "weak_hopf": {basis, unit, multiplication,
/// delta, counit, antipode}}.
int cmd_hopf_check(const std::string& source, CommandIO io);

}  // namespace wh

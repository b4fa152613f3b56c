#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wh/action.hpp"
#include "wh/algebra.hpp"
#include "wh/duality.hpp"
#include "wh/field.hpp"
#include "wh/groupoid.hpp"
#include "wh/weak_hopf.hpp"

namespace wh {

/// A stated kernel for a worked example: ker φ should equal the span of
/// `kernel_strata` and every stratum in `empty_strata` should have no members.
struct Expectation {
  std::vector<Stratum> kernel_strata;
  std::vector<Stratum> empty_strata;

  bool operator==(const Expectation&) const = default;
};

/// One input to the engine: a field, a groupoid, an algebra B and an action.
struct Instance {
  std::string name;
  Groupoid groupoid;
  FinAlgebra algebra;
  ModuleAction action;
  std::optional<Expectation> expect;

  const Field& field() const { return algebra.field(); }
  bool operator==(const Instance&) const = default;
};

/// Parses the JSON instance format. Throws InputError on malformed JSON,
/// unknown ids, duplicate or missing entries and bad coefficients.
Instance parse_instance(const std::string& text);

/// Canonical JSON: sorted keys, two-space indent, sparse multiplication,
/// every action entry, coefficients as strings.
std::string serialize_instance(const Instance& inst);

/// Hex SHA-256 of the canonical serialization.
std::string instance_digest(const Instance& inst);

const std::vector<std::string>& builtin_names();
/// Throws std::invalid_argument for unknown names.
Instance builtin_instance(const std::string& name);

/// Parses {"field", "weak_hopf": {basis, unit, multiplication, delta, counit,
/// antipode?}}, with delta entries [x, [[left, right, coeff], ...]], counit
/// {label: coeff} and antipode entries [x, element]. Throws InputError.
WeakHopf parse_weak_hopf(const std::string& text);

/// Reads a file, or a builtin when given "builtin:<name>" or a bare builtin
/// name that is not an existing path. Throws InputError.
Instance load_instance(const std::string& source);

}  // namespace wh

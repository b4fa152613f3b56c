#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wh {

/// One failed check. `witness` holds the labels of the offending tuple.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Structured result of a validator or claim verifier. A report holds iff no
/// violation was ever recorded; stored witnesses are capped per axiom, counts
/// are not.
class Report {
 public:
  static constexpr std::size_t kMaxWitnessesPerAxiom = 8;

  explicit Report(std::string claim = {}) : claim_(std::move(claim)) {}

  const std::string& claim() const { return claim_; }
  bool holds() const { return total_violations_ == 0; }

  void set_field(std::string field) { field_ = std::move(field); }
  const std::string& field() const { return field_; }

  void add_violation(std::string axiom, std::vector<std::string> witness, std::string detail = {});
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  /// Positive evidence (e.g. a y candidate that works).
  void add_certificate(std::string text) { certificates_.push_back(std::move(text)); }
  void set_dimension(const std::string& key, long value) { dimensions_[key] = value; }
  /// Appends another report's findings under this claim (axiom names kept).
  void merge(const Report& other);

  const std::vector<Violation>& violations() const { return violations_; }
  const std::map<std::string, std::size_t>& violation_counts() const { return counts_; }
  std::size_t total_violations() const { return total_violations_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::string>& certificates() const { return certificates_; }
  const std::map<std::string, long>& dimensions() const { return dimensions_; }

  /// First stored violation for an axiom, or nullptr.
  const Violation* find(const std::string& axiom) const;

 private:
  std::string claim_;
  std::string field_;
  std::vector<Violation> violations_;
  std::map<std::string, std::size_t> counts_;
  std::size_t total_violations_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> certificates_;
  std::map<std::string, long> dimensions_;
};

std::string format_tuple(const std::vector<std::string>& labels);

}  // namespace wh

#include "wh/report.hpp"

namespace wh {

void Report::add_violation(std::string axiom, std::vector<std::string> witness, std::string detail) {
  std::size_t& count = counts_[axiom];
  ++count;
  ++total_violations_;
  if (count <= kMaxWitnessesPerAxiom) {
    violations_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }
}

void Report::merge(const Report& other) {
  for (const auto& [axiom, count] : other.counts_) {
    counts_[axiom] += count;
    total_violations_ += count;
  }
  for (const auto& v : other.violations_) violations_.push_back(v);
  for (const auto& n : other.notes_) notes_.push_back(n);
  for (const auto& c : other.certificates_) certificates_.push_back(c);
  for (const auto& [k, d] : other.dimensions_) dimensions_[k] = d;
}

const Violation* Report::find(const std::string& axiom) const {
  for (const auto& v : violations_) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

std::string format_tuple(const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + ")";
}

}  // namespace wh

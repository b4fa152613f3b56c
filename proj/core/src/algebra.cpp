#include "wh/algebra.hpp"

#include <string>

namespace wh {

Scalar Element::coeff(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Field& field, std::size_t i, const Scalar& c) {
  if (Field::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (Field::is_zero(it->second)) terms_.erase(it);
  }
}

void Element::add_scaled(const Field& field, const Element& other, const Scalar& c) {
  if (Field::is_zero(c)) return;
  for (const auto& [i, v] : other.terms_) add_term(field, i, field.mul(v, c));
}

Element Element::scaled(const Field& field, const Scalar& c) const {
  Element out;
  out.add_scaled(field, *this, c);
  return out;
}

Vector Element::dense(std::size_t dim) const {
  Vector v(dim);
  for (const auto& [i, c] : terms_) v.at(i) = c;
  return v;
}

Element Element::from_dense(const Vector& v) {
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!Field::is_zero(v[i])) e.terms_.emplace(i, v[i]);
  }
  return e;
}

FinAlgebra::FinAlgebra(Field field, std::vector<std::string> labels)
    : field_(field), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate basis label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> FinAlgebra::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinAlgebra::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found) throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
  return *found;
}

void FinAlgebra::check(const Element& e) const {
  if (!e.is_zero() && e.terms().rbegin()->first >= dim()) {
    throw DimensionError("element refers to basis index " + std::to_string(e.terms().rbegin()->first) +
                         " of an algebra of dimension " + std::to_string(dim()));
  }
}

void FinAlgebra::set_product(std::size_t i, std::size_t j, Element value) {
  check(value);
  table_.at(i * dim() + j) = std::move(value);
}

Element FinAlgebra::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out;
  for (const auto& [i, ca] : a.terms()) {
    for (const auto& [j, cb] : b.terms()) {
      const Element& p = product(i, j);
      if (p.is_zero()) continue;
      out.add_scaled(field_, p, field_.mul(ca, cb));
    }
  }
  return out;
}

std::string FinAlgebra::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += Field::format(c) + "*";
    out += label(i);
  }
  return out;
}

Report check_associativity(const FinAlgebra& alg, const std::string& claim) {
  Report report(claim);
  report.set_field(alg.field().name());
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& ij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Element left = alg.multiply(ij, Element::basis(k));
        Element right = alg.multiply(Element::basis(i), alg.product(j, k));
        if (left != right) {
          report.add_violation("associativity", {alg.label(i), alg.label(j), alg.label(k)},
                               "(ab)c = " + alg.format(left) + " but a(bc) = " + alg.format(right));
        }
      }
    }
  }
  report.set_dimension("dim", static_cast<long>(n));
  return report;
}

Report check_unit(const FinAlgebra& alg) {
  Report report("unit");
  report.set_field(alg.field().name());
  if (!alg.unit()) {
    report.add_violation("unit-missing", {}, "algebra has no unit element");
    return report;
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Element b = Element::basis(i);
    if (alg.multiply(*alg.unit(), b) != b) report.add_violation("left-unit", {alg.label(i)});
    if (alg.multiply(b, *alg.unit()) != b) report.add_violation("right-unit", {alg.label(i)});
  }
  return report;
}

}  // namespace wh

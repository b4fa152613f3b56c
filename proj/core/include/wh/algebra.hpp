#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wh/field.hpp"
#include "wh/linalg.hpp"
#include "wh/report.hpp"

namespace wh {

/// Finitely supported coefficient map over a basis, keyed by basis index.
/// Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  Element() = default;
  static Element basis(std::size_t i) {
    Element e;
    e.terms_.emplace(i, Scalar(1));
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(std::size_t i) const;

  void add_term(const Field& field, std::size_t i, const Scalar& c);
  void add_scaled(const Field& field, const Element& other, const Scalar& c);
  Element scaled(const Field& field, const Scalar& c) const;

  Vector dense(std::size_t dim) const;
  static Element from_dense(const Vector& v);

  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

/// Finite-dimensional algebra given by structure constants on a labeled basis.
/// Associativity and the unit law are checked on request, never assumed.
class FinAlgebra {
 public:
  FinAlgebra(Field field, std::vector<std::string> labels);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;

  void set_product(std::size_t i, std::size_t j, Element value);
  const Element& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  void set_unit(std::optional<Element> unit) { unit_ = std::move(unit); }
  const std::optional<Element>& unit() const { return unit_; }

  /// Bilinear extension of the structure constants. Throws DimensionError
  /// when an element refers to an index outside the basis.
  Element multiply(const Element& a, const Element& b) const;

  std::string format(const Element& e) const;

  bool operator==(const FinAlgebra& other) const {
    return field_ == other.field_ && labels_ == other.labels_ && table_ == other.table_ &&
           unit_ == other.unit_;
  }

 private:
  void check(const Element& e) const;

  Field field_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Element> table_;
  std::optional<Element> unit_;
};

/// (ab)c = a(bc) on every basis triple.
Report check_associativity(const FinAlgebra& alg, const std::string& claim = "associativity");
/// unit·b = b = b·unit on every basis element; violation if no unit is set.
Report check_unit(const FinAlgebra& alg);

/// Element of A^{⊗N} in the tensor basis, keyed by index tuples.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<std::size_t, N>;
  using Terms = std::map<Key, Scalar>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Field& field, const Key& key, const Scalar& c) {
    if (Field::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = field.add(it->second, c);
      if (Field::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool operator==(const Tensor&) const = default;

 private:
  Terms terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// Componentwise product in A^{⊗N}.
template <std::size_t N>
Tensor<N> tensor_multiply(const FinAlgebra& alg, const Tensor<N>& a, const Tensor<N>& b) {
  const Field& F = alg.field();
  Tensor<N> out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // Expand the product of N factor products, each an Element.
      std::vector<std::pair<typename Tensor<N>::Key, Scalar>> partial{{{}, F.mul(ca, cb)}};
      for (std::size_t slot = 0; slot < N && !partial.empty(); ++slot) {
        const Element& factor = alg.product(ka[slot], kb[slot]);
        std::vector<std::pair<typename Tensor<N>::Key, Scalar>> next;
        for (const auto& [key, c] : partial) {
          for (const auto& [idx, fc] : factor.terms()) {
            auto k = key;
            k[slot] = idx;
            next.emplace_back(k, F.mul(c, fc));
          }
        }
        partial = std::move(next);
      }
      for (const auto& [k, c] : partial) out.add_term(F, k, c);
    }
  }
  return out;
}

}  // namespace wh

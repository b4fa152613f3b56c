#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wh/report.hpp"

namespace wh {

/// Malformed or dangling input (unknown ids, duplicate declarations, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string tgt;
  std::string inv;

  bool operator==(const MorphismSpec&) const = default;
};

/// One entry left·right = result of the composition table.
struct CompositionSpec {
  std::string left;
  std::string right;
  std::string result;

  bool operator==(const CompositionSpec&) const = default;
};

/// A finite groupoid given by an explicit partial composition table.
///
/// Objects double as identity morphisms and occupy indices [0, object_count()),
/// followed by the remaining morphisms in declaration order; every basis built
/// on top of a groupoid inherits this order. A product gh is composable iff
/// tgt(g) = src(h), and s(g) = gg⁻¹, t(g) = g⁻¹g.
///
/// Construction only checks that ids resolve; the axioms are the business of
/// validate_groupoid.
class Groupoid {
 public:
  using Index = std::size_t;

  Groupoid(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
           std::vector<CompositionSpec> composition);

  std::size_t size() const { return labels_.size(); }
  std::size_t object_count() const { return object_count_; }
  bool is_object(Index g) const { return g < object_count_; }

  const std::string& label(Index g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(std::string_view id) const;
  /// Throws InputError for unknown ids.
  Index index_of(std::string_view id) const;

  Index src(Index g) const { return src_.at(g); }
  Index tgt(Index g) const { return tgt_.at(g); }
  Index inv(Index g) const { return inv_.at(g); }
  bool is_loop(Index g) const { return src(g) == tgt(g); }

  bool composable(Index a, Index b) const { return tgt(a) == src(b); }
  /// Table value of ab when tgt(a) = src(b); nullopt when not composable or
  /// when the table has no entry.
  std::optional<Index> compose(Index a, Index b) const;
  /// Raw table lookup, ignoring composability.
  std::optional<Index> table_entry(Index a, Index b) const { return table_[a * size() + b]; }

  /// Pairs (a, b) with tgt(a) = src(b), ordered by (a, b).
  std::vector<std::pair<Index, Index>> composable_pairs() const;
  /// True iff some morphism runs from object `from` to object `to`.
  bool connected(Index from, Index to) const;

  /// Declarations in canonical order, for serialization.
  std::vector<std::string> object_ids() const;
  std::vector<MorphismSpec> morphism_specs() const;
  std::vector<CompositionSpec> composition_specs() const;

  bool operator==(const Groupoid& other) const {
    return labels_ == other.labels_ && object_count_ == other.object_count_ && src_ == other.src_ &&
           tgt_ == other.tgt_ && inv_ == other.inv_ && table_ == other.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::size_t object_count_ = 0;
  std::unordered_map<std::string, Index> index_;
  std::vector<Index> src_;
  std::vector<Index> tgt_;
  std::vector<Index> inv_;
  std::vector<std::optional<Index>> table_;
};

/// Checks the groupoid axioms, identity bookkeeping and table/composability agreement.
/// Every violation carries a concrete witness pair or triple.
Report validate_groupoid(const Groupoid& g);

/// Label-level composition; throws InputError on unknown ids.
std::optional<std::string> compose(const Groupoid& g, std::string_view a, std::string_view b);

/// One-object groupoid from a Cayley table; table[i][j] is the index of
/// labels[i]·labels[j]. The identity element becomes the object. Throws
/// std::invalid_argument when the table is not a group.
Groupoid from_group(std::vector<std::string> labels, const std::vector<std::vector<std::size_t>>& table);
/// Z/n with labels e, a, a2, ..., a{n-1}.
Groupoid cyclic_group(std::size_t n);
/// Objects o0..o{n-1} and exactly one morphism m{i}_{j} from oi to oj.
Groupoid pair_groupoid(std::size_t n);
/// Throws std::invalid_argument when labels collide.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);
/// Objects x, y and morphisms g: x→y, gi = g⁻¹.
Groupoid builtin_i2();

}  // namespace wh

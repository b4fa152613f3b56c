#include "wh/groupoid.hpp"

#include <algorithm>

namespace wh {

Groupoid::Groupoid(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                   std::vector<CompositionSpec> composition) {
  object_count_ = objects.size();
  auto declare = [this](const std::string& id) {
    if (id.empty()) throw InputError("empty morphism id");
    if (!index_.emplace(id, labels_.size()).second) throw InputError("duplicate id '" + id + "'");
    labels_.push_back(id);
  };
  for (const auto& o : objects) declare(o);
  for (const auto& m : morphisms) declare(m.id);

  const std::size_t n = labels_.size();
  src_.resize(n);
  tgt_.resize(n);
  inv_.resize(n);
  for (Index o = 0; o < object_count_; ++o) src_[o] = tgt_[o] = inv_[o] = o;

  auto object_of = [this](const std::string& id, const std::string& owner) {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("morphism '" + owner + "' refers to unknown object '" + id + "'");
    if (it->second >= object_count_) {
      throw InputError("morphism '" + owner + "' uses non-object '" + id + "' as an endpoint");
    }
    return it->second;
  };
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const auto& m = morphisms[k];
    Index i = object_count_ + k;
    src_[i] = object_of(m.src, m.id);
    tgt_[i] = object_of(m.tgt, m.id);
    inv_[i] = index_of(m.inv);
  }

  table_.assign(n * n, std::nullopt);
  for (const auto& c : composition) {
    Index a = index_of(c.left);
    Index b = index_of(c.right);
    Index r = index_of(c.result);
    auto& slot = table_[a * n + b];
    if (slot && *slot != r) {
      throw InputError("conflicting composition entries for (" + c.left + ", " + c.right + ")");
    }
    slot = r;
  }
}

std::optional<Groupoid::Index> Groupoid::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Groupoid::Index Groupoid::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw InputError("unknown morphism id '" + std::string(id) + "'");
  return *found;
}

std::optional<Groupoid::Index> Groupoid::compose(Index a, Index b) const {
  if (!composable(a, b)) return std::nullopt;
  return table_entry(a, b);
}

std::vector<std::pair<Groupoid::Index, Groupoid::Index>> Groupoid::composable_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a) {
    for (Index b = 0; b < size(); ++b) {
      if (composable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Groupoid::connected(Index from, Index to) const {
  for (Index m = 0; m < size(); ++m) {
    if (src(m) == from && tgt(m) == to) return true;
  }
  return false;
}

std::vector<std::string> Groupoid::object_ids() const {
  return {labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(object_count_)};
}

std::vector<MorphismSpec> Groupoid::morphism_specs() const {
  std::vector<MorphismSpec> out;
  for (Index m = object_count_; m < size(); ++m) {
    out.push_back({labels_[m], labels_[src_[m]], labels_[tgt_[m]], labels_[inv_[m]]});
  }
  return out;
}

std::vector<CompositionSpec> Groupoid::composition_specs() const {
  std::vector<CompositionSpec> out;
  for (Index a = 0; a < size(); ++a) {
    for (Index b = 0; b < size(); ++b) {
      if (auto r = table_entry(a, b)) out.push_back({labels_[a], labels_[b], labels_[*r]});
    }
  }
  return out;
}

Report validate_groupoid(const Groupoid& g) {
  using Index = Groupoid::Index;
  Report report("groupoid");
  auto L = [&g](Index i) { return g.label(i); };

  for (Index a = 0; a < g.size(); ++a) {
    if (g.inv(g.inv(a)) != a) report.add_violation("inverse-involution", {L(a)}, "inv(inv(a)) != a");
    if (g.src(g.inv(a)) != g.tgt(a) || g.tgt(g.inv(a)) != g.src(a)) {
      report.add_violation("inverse-endpoints", {L(a)}, "inverse does not reverse source and target");
    }
    for (Index b = 0; b < g.size(); ++b) {
      auto entry = g.table_entry(a, b);
      if (!g.composable(a, b)) {
        if (entry) report.add_violation("composition-domain", {L(a), L(b)}, "product defined but t(a) != s(b)");
        continue;
      }
      if (!entry) {
        report.add_violation("G2-closure", {L(a), L(b)}, "t(a) = s(b) but no product in the table");
        continue;
      }
      if (g.src(*entry) != g.src(a) || g.tgt(*entry) != g.tgt(b)) {
        report.add_violation("source-target", {L(a), L(b)}, "s(ab) != s(a) or t(ab) != t(b)");
      }
      auto inv_product = g.compose(g.inv(b), g.inv(a));
      if (!inv_product || *inv_product != g.inv(*entry)) {
        report.add_violation("inverse-of-product", {L(a), L(b)}, "(ab)^-1 != b^-1 a^-1");
      }
    }
  }

  // G1: associativity on composable triples.
  for (Index a = 0; a < g.size(); ++a) {
    for (Index b = 0; b < g.size(); ++b) {
      auto ab = g.compose(a, b);
      if (!ab) continue;
      for (Index c = 0; c < g.size(); ++c) {
        auto bc = g.compose(b, c);
        if (!bc) continue;
        auto left = g.compose(*ab, c);
        auto right = g.compose(a, *bc);
        if (left != right) report.add_violation("G1-associativity", {L(a), L(b), L(c)}, "(ab)c != a(bc)");
      }
    }
  }

  // G3 and G4 per morphism.
  for (Index a = 0; a < g.size(); ++a) {
    if (g.compose(a, g.tgt(a)) != a || g.compose(g.src(a), a) != a) {
      report.add_violation("G3-identities", {L(a)}, "a t(a) = a = s(a) a fails");
    }
    if (g.compose(a, g.inv(a)) != g.src(a)) {
      report.add_violation("G4-inverse", {L(a)}, "a a^-1 != s(a)");
    }
    if (g.compose(g.inv(a), a) != g.tgt(a)) {
      report.add_violation("G4-inverse", {L(a)}, "a^-1 a != t(a)");
    }
  }
  report.set_dimension("objects", static_cast<long>(g.object_count()));
  report.set_dimension("morphisms", static_cast<long>(g.size()));
  return report;
}

std::optional<std::string> compose(const Groupoid& g, std::string_view a, std::string_view b) {
  auto r = g.compose(g.index_of(a), g.index_of(b));
  if (!r) return std::nullopt;
  return g.label(*r);
}

Groupoid from_group(std::vector<std::string> labels, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = labels.size();
  if (n == 0 || table.size() != n) throw std::invalid_argument("group table has wrong shape");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table has wrong shape");
    for (auto v : row) {
      if (v >= n) throw std::invalid_argument("group table entry out of range");
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw std::invalid_argument("group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw std::invalid_argument("group table is not associative");
        }
      }
    }
  }
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == *identity && table[b][a] == *identity) inverse[a] = b;
    }
    if (inverse[a] == n) throw std::invalid_argument("group element without inverse");
  }

  const std::string& object = labels[*identity];
  std::vector<MorphismSpec> morphisms;
  for (std::size_t a = 0; a < n; ++a) {
    if (a != *identity) morphisms.push_back({labels[a], object, object, labels[inverse[a]]});
  }
  std::vector<CompositionSpec> comp;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) comp.push_back({labels[a], labels[b], labels[table[a][b]]});
  }
  return Groupoid({object}, std::move(morphisms), std::move(comp));
}

Groupoid cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "e" : k == 1 ? "a" : "a" + std::to_string(k));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return from_group(std::move(labels), table);
}

Groupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair groupoid needs at least one object");
  auto object = [](std::size_t i) { return "o" + std::to_string(i); };
  auto arrow = [&](std::size_t i, std::size_t j) {
    return i == j ? object(i) : "m" + std::to_string(i) + "_" + std::to_string(j);
  };
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(object(i));
  std::vector<MorphismSpec> morphisms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) morphisms.push_back({arrow(i, j), object(i), object(j), arrow(j, i)});
    }
  }
  std::vector<CompositionSpec> comp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) comp.push_back({arrow(i, j), arrow(j, k), arrow(i, k)});
    }
  }
  return Groupoid(std::move(objects), std::move(morphisms), std::move(comp));
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  for (const auto& l : b.labels()) {
    if (a.find(l)) throw std::invalid_argument("disjoint_union: label '" + l + "' occurs in both groupoids");
  }
  auto objects = a.object_ids();
  for (auto& o : b.object_ids()) objects.push_back(std::move(o));
  auto morphisms = a.morphism_specs();
  for (auto& m : b.morphism_specs()) morphisms.push_back(std::move(m));
  auto comp = a.composition_specs();
  for (auto& c : b.composition_specs()) comp.push_back(std::move(c));
  return Groupoid(std::move(objects), std::move(morphisms), std::move(comp));
}

Groupoid builtin_i2() {
  return Groupoid({"x", "y"}, {{"g", "x", "y", "gi"}, {"gi", "y", "x", "g"}},
                  {{"x", "x", "x"},
                   {"y", "y", "y"},
                   {"x", "g", "g"},
                   {"g", "y", "g"},
                   {"y", "gi", "gi"},
                   {"gi", "x", "gi"},
                   {"g", "gi", "x"},
                   {"gi", "g", "y"}});
}

}  // namespace wh

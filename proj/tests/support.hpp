#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wh/instance.hpp"

namespace wh::testing {

inline Element elem(const Field& F, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Element e;
  for (const auto& [i, c] : terms) e.add_term(F, i, F.from_int(c));
  return e;
}

/// K^n with orthogonal idempotents e1..en.
inline FinAlgebra diagonal_algebra(const Field& F, std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  FinAlgebra A(F, labels);
  Element unit;
  for (std::size_t i = 0; i < n; ++i) {
    A.set_product(i, i, Element::basis(i));
    unit.add_term(F, i, F.one());
  }
  A.set_unit(unit);
  return A;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Z/n acting on K^k through powers of a permutation σ with σ^n = id
/// (σ is a product of cycles whose lengths divide n).
inline Instance random_cyclic_instance(std::mt19937& rng, const Field& F, std::size_t n, std::size_t k) {
  Groupoid G = cyclic_group(n);
  std::vector<std::size_t> sigma(k);
  std::vector<std::size_t> order = random_permutation(rng, k);
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  for (std::size_t pos = 0; pos < k;) {
    std::size_t len = std::min(divisors[rng() % divisors.size()], k - pos);
    while (n % len != 0) --len;
    for (std::size_t i = 0; i < len; ++i) sigma[order[pos + i]] = order[pos + (i + 1) % len];
    pos += len;
  }
  ModuleAction action(G.size(), k);
  std::vector<std::size_t> power(k);
  std::iota(power.begin(), power.end(), 0);
  // cyclic_group orders its labels e, a, a2, ...; label a^j acts by σ^j.
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t g = G.index_of(j == 0 ? "e" : j == 1 ? "a" : "a" + std::to_string(j));
    for (std::size_t i = 0; i < k; ++i) action.set(g, i, Element::basis(power[i]));
    for (auto& p : power) p = sigma[p];
  }
  return Instance{"cyclic", std::move(G), diagonal_algebra(F, k), std::move(action), std::nullopt};
}

/// Pair groupoid on `objects` objects acting on ⊕_i K^k. The basis vector
/// f_i(a) is index i·k + a, and m_{ij}·f_k(a) = δ_{jk} f_i(τ_i τ_j⁻¹ a) for
/// random permutations τ_i.
inline Instance random_pair_instance(std::mt19937& rng, const Field& F, std::size_t objects, std::size_t k) {
  Groupoid G = pair_groupoid(objects);
  std::vector<std::vector<std::size_t>> tau, tau_inv;
  for (std::size_t i = 0; i < objects; ++i) {
    tau.push_back(random_permutation(rng, k));
    std::vector<std::size_t> inv(k);
    for (std::size_t a = 0; a < k; ++a) inv[tau.back()[a]] = a;
    tau_inv.push_back(inv);
  }
  ModuleAction action(G.size(), objects * k);
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) {
      std::size_t g = G.index_of(i == j ? "o" + std::to_string(i) : "m" + std::to_string(i) + "_" + std::to_string(j));
      for (std::size_t src = 0; src < objects; ++src) {
        for (std::size_t a = 0; a < k; ++a) {
          Element value;
          if (src == j) value = Element::basis(i * k + tau[i][tau_inv[j][a]]);
          action.set(g, src * k + a, value);
        }
      }
    }
  }
  return Instance{"pair", std::move(G), diagonal_algebra(F, objects * k), std::move(action), std::nullopt};
}

/// Arbitrary 0/±1 action tables; most are not module algebras.
inline Instance random_table_instance(std::mt19937& rng, const Field& F) {
  Groupoid G = builtin_i2();
  const std::size_t n = 2;
  ModuleAction action(G.size(), n);
  std::uniform_int_distribution<int> coeff(-1, 1);
  for (std::size_t g = 0; g < G.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      Element e;
      for (std::size_t j = 0; j < n; ++j) e.add_term(F, j, F.from_int(rng() % 3 == 0 ? coeff(rng) : 0));
      action.set(g, i, e);
    }
  }
  return Instance{"random-table", std::move(G), diagonal_algebra(F, n), std::move(action), std::nullopt};
}

inline Vector random_vector(std::mt19937& rng, const Field& F, std::size_t n, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Vector v(n);
  for (auto& x : v) x = F.from_int(d(rng));
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, const Field& F, std::size_t r, std::size_t c, int zero_bias = 2) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % (zero_bias + 1) == 0) ? F.from_int(d(rng)) : Scalar(0);
  }
  return m;
}

}  // namespace wh::testing

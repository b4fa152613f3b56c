#include <doctest.h>

#include "support.hpp"
#include "wh/field.hpp"
#include "wh/linalg.hpp"

using namespace wh;

TEST_CASE("field: rational arithmetic stays canonical") {
  Field Q = Field::rationals();
  CHECK(Q.add(Q.parse("1/2"), Q.parse("1/3")) == Q.parse("5/6"));
  CHECK(Q.parse("4/8") == Q.parse("1/2"));
  CHECK(Q.inv(Q.parse("-3/4")) == Q.parse("-4/3"));
  CHECK(Field::format(Q.parse("-6/4")) == "-3/2");
  CHECK(Q.name() == "Q");
  CHECK_THROWS_AS(Q.inv(Q.zero()), FieldError);
}

TEST_CASE("field: GF(p) residues") {
  Field F = Field::prime(5);
  CHECK(F.name() == "GF(5)");
  CHECK(F.from_int(-1) == Scalar(4));
  CHECK(F.mul(F.from_int(3), F.inv(F.from_int(3))) == F.one());
  CHECK(F.parse("1/2") == Scalar(3));
  CHECK(F.add(F.from_int(4), F.from_int(3)) == Scalar(2));
  CHECK_THROWS_AS(F.parse("1/5"), FieldError);
  CHECK_THROWS_AS(Field::prime(6), FieldError);
  CHECK_THROWS_AS(Field::prime(1), FieldError);
  CHECK_THROWS_AS(Field::prime(1ull << 31), FieldError);
}

TEST_CASE("field: malformed text") {
  Field Q = Field::rationals();
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "--1", "1/2/3"}) {
    CHECK_THROWS_AS(Q.parse(bad), FieldError);
  }
}

TEST_CASE("linalg: rank of a product of full-rank factors") {
  // Oracle: a 4x3 and a 3x6 factor, each of rank 3 by inspection of an
  // identity block, give a 4x6 matrix of rank exactly 3.
  Field Q = Field::rationals();
  Matrix left(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 2, -1, 3});
  Matrix right(3, 6, {1, 0, 0, 5, -2, 1, 0, 1, 0, 0, 7, 1, 0, 0, 1, -1, 1, 4});
  Matrix m = multiply(Q, left, right);
  CHECK(rank(Q, m) == 3);
  auto ker = kernel_basis(Q, m);
  CHECK(ker.size() == 3);
  for (const auto& v : ker) {
    for (const auto& x : apply(Q, m, v)) CHECK(Field::is_zero(x));
  }
}

TEST_CASE("linalg: kernel of the zero and identity maps") {
  Field Q = Field::rationals();
  CHECK(kernel_basis(Q, Matrix(2, 3)).size() == 3);
  CHECK(kernel_basis(Q, Matrix::identity(4)).empty());
  CHECK(rank(Q, Matrix(0, 0)) == 0);
}

TEST_CASE("linalg: containment depends on the field") {
  // (1, 1) lies in span{(2, 0), (0, 2)} over Q; over GF(2) that span is zero.
  std::vector<Vector> span{{2, 0}, {0, 2}};
  CHECK(subspace_contains(Field::rationals(), span, {1, 1}));
  Field F2 = Field::prime(2);
  std::vector<Vector> span2{{F2.from_int(2), 0}, {0, F2.from_int(2)}};
  CHECK_FALSE(subspace_contains(F2, span2, {1, 1}));
  // Over GF(5), (1, 3) = 3·(2, 1) since 6 ≡ 1.
  Field F5 = Field::prime(5);
  std::vector<Vector> line{{2, 1}};
  CHECK(subspace_contains(F5, line, {1, 3}));
  CHECK_FALSE(subspace_contains(Field::rationals(), line, {1, 3}));
}

TEST_CASE("linalg: subspace equality and intersections") {
  Field Q = Field::rationals();
  std::vector<Vector> a{{1, 0, 0}, {0, 1, 0}};
  std::vector<Vector> b{{1, 1, 0}, {1, -1, 0}};
  std::vector<Vector> c{{0, 1, 0}, {0, 0, 1}};
  CHECK(subspace_equal(Q, a, b));
  CHECK_FALSE(subspace_equal(Q, a, c));
  CHECK(intersection_dim(Q, a, c, 3) == 1);
  CHECK(span_rank(Q, a, 3) == 2);
  CHECK(span_basis(Q, std::vector<Vector>{{1, 2}, {2, 4}}, 2).size() == 1);
  std::vector<Vector> empty;
  CHECK(subspace_equal(Q, empty, std::vector<Vector>{{0, 0, 0}}));
}

TEST_CASE("linalg: dimension errors") {
  Field Q = Field::rationals();
  CHECK_THROWS_AS(multiply(Q, Matrix(2, 3), Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(apply(Q, Matrix(2, 3), Vector(2)), DimensionError);
  CHECK_THROWS_AS(span_rank(Q, std::vector<Vector>{{1, 2}}, 3), DimensionError);
}

TEST_CASE("linalg: rank-nullity on random matrices over Q and GF(7)") {
  std::mt19937 rng(20261016);
  for (const Field& F : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      Matrix m = testing::random_matrix(rng, F, r, c);
      auto ker = kernel_basis(F, m);
      CHECK(rank(F, m) + ker.size() == c);
      for (const auto& v : ker) {
        for (const auto& x : apply(F, m, v)) CHECK(Field::is_zero(x));
      }
      CHECK(span_rank(F, ker, c) == ker.size());
    }
  }
}

TEST_CASE("linalg: subspace_equal agrees with mutual containment") {
  std::mt19937 rng(7);
  Field Q = Field::rationals();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Vector> a, b;
    for (std::size_t i = 0, k = rng() % 4; i < k; ++i) a.push_back(testing::random_vector(rng, Q, n, 1));
    // b is either a recombination of a or unrelated.
    if (rng() % 2 == 0) {
      for (std::size_t i = 0, k = rng() % 4; i < k; ++i) {
        Vector v(n);
        for (const auto& x : a) {
          Scalar c = Q.from_int(static_cast<long>(rng() % 5) - 2);
          for (std::size_t j = 0; j < n; ++j) v[j] = Q.add(v[j], Q.mul(c, x[j]));
        }
        b.push_back(v);
      }
      b.insert(b.end(), a.begin(), a.end());
    } else {
      for (std::size_t i = 0, k = rng() % 4; i < k; ++i) b.push_back(testing::random_vector(rng, Q, n, 1));
    }
    bool mutual = true;
    for (const auto& v : a) mutual = mutual && subspace_contains(Q, b, v);
    for (const auto& v : b) mutual = mutual && subspace_contains(Q, a, v);
    CHECK(subspace_equal(Q, a, b) == mutual);
  }
}

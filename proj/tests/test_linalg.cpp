#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mopkit/matrix.hpp"

using namespace mopkit;
using fixtures::R;

namespace {

FieldMatrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  FieldMatrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng)) / den(rng);
  return m;
}

// Cofactor expansion, independent of elimination.
Rational det_by_expansion(const FieldMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix<Rational> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    const Rational term = m(0, j) * det_by_expansion(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("determinants of small matrices") {
  CHECK(det(FieldMatrix<Rational>::identity(2)) == 1);
  CHECK(det(FieldMatrix<Rational>{{2, 1}, {1, 1}}) == 1);
  FieldMatrix<Rational> vdm{{1, 0, 0}, {1, 1, 1}, {1, 2, 4}};
  CHECK(det(vdm) == 2);
  CHECK(det(FieldMatrix<Rational>(0, 0)) == 1);
  CHECK_THROWS_AS(det(FieldMatrix<Rational>(2, 3)), MopError);
}

TEST_CASE("solve returns exact solutions") {
  FieldMatrix<Rational> b{{R("3/7"), 1}, {2, R("-1/2")}};
  CHECK(solve(FieldMatrix<Rational>::identity(2), b) == b);
  CHECK(solve(FieldMatrix<Rational>{{2, 0}, {0, 4}}, FieldMatrix<Rational>{{1}, {1}}) ==
        FieldMatrix<Rational>{{R("1/2")}, {R("1/4")}});
  FieldMatrix<Rational> a{{1, R("1/2")}, {R("1/2"), R("1/2")}};
  FieldMatrix<Rational> x = solve(a, FieldMatrix<Rational>{{1}, {0}});
  CHECK(x == FieldMatrix<Rational>{{2}, {-2}});
  CHECK(a * x == FieldMatrix<Rational>{{1}, {0}});
  try {
    solve(FieldMatrix<Rational>{{1, 2}, {2, 4}}, FieldMatrix<Rational>{{1}, {1}});
    FAIL("expected a singular matrix error");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("schur complement examples") {
  CHECK(schur_complement(FieldMatrix<Rational>{{2, 1}, {1, 1}}, 1) == FieldMatrix<Rational>{{R("1/2")}});
  CHECK(schur_complement(FieldMatrix<Rational>{{1, 0, 5}, {0, 1, 7}, {3, 4, 0}}, 2) == FieldMatrix<Rational>{{-43}});
  FieldMatrix<Rational> blocktri{{1, 2, 3}, {4, 5, 6}, {0, 0, 9}};
  CHECK(schur_complement(blocktri, 2) == FieldMatrix<Rational>{{9}});
  try {
    schur_complement(FieldMatrix<Rational>{{0, 1}, {1, 0}}, 1);
    FAIL("expected a singular pivot");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::SingularPivot);
  }
}

TEST_CASE("schur complement determinant relation and entrywise ratios") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t k = 1 + trial % (n - 1);
    FieldMatrix<Rational> m = random_matrix(rng, n, n);
    const auto a = m.block(0, 0, k, k);
    if (det(a) == 0) continue;
    const auto s = schur_complement(m, k);
    CHECK(det(s) * det(a) == det(m));
    CHECK(det(m) == det_by_expansion(m));
    // Entry (i, j) is det of A bordered by row k+i and column k+j, over det A.
    for (std::size_t i = 0; i < n - k; ++i)
      for (std::size_t j = 0; j < n - k; ++j) {
        FieldMatrix<Rational> bordered(k + 1, k + 1);
        bordered.set_block(0, 0, a);
        for (std::size_t t = 0; t < k; ++t) {
          bordered(t, k) = m(t, k + j);
          bordered(k, t) = m(k + i, t);
        }
        bordered(k, k) = m(k + i, k + j);
        CHECK(s(i, j) == det(bordered) / det(a));
      }
    // Premultiplying the trailing rows premultiplies the complement.
    const auto u = random_matrix(rng, n - k, n - k);
    FieldMatrix<Rational> mu = m;
    mu.set_block(k, 0, u * m.block(k, 0, n - k, n));
    CHECK(schur_complement(mu, k) == u * s);
  }
}

TEST_CASE("exact and float determinants agree on integer matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix<Rational> m(5, 5);
    for (auto i = 0u; i < 5; ++i)
      for (auto j = 0u; j < 5; ++j) m(i, j) = d(rng);
    CHECK(near(to_complex(det(m)), det(embed_matrix<Complex>(m)), 1e-10));
  }
}

TEST_CASE("lu factors reproduce the permuted matrix") {
  FieldMatrix<Rational> m{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}};
  auto f = lu_factor(m);
  FieldMatrix<Rational> pm(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) pm(i, j) = m(f.perm[i], j);
  CHECK(f.lower * f.upper == pm);
}

TEST_CASE("rational parsing") {
  CHECK(R("-6/4") == Rational(-3) / 2);
  CHECK(R("+7") == 7);
  CHECK_THROWS_AS(R("1/0"), ParseError);
  CHECK_THROWS_AS(R("x"), ParseError);
  CHECK(to_string(R("-6/4")) == "-3/2");
}

#include "doctest.h"
#include "fixtures.hpp"
#include "mopkit/averages.hpp"
#include "mopkit/oracles.hpp"

using namespace mopkit;
using fixtures::R;
using fixtures::Rs;

TEST_CASE("single-point averages") {
  CHECK(avg_char(fixtures::e1(1), R("0")) == R("-1/2"));
  CHECK(avg_char(fixtures::e2(), R("1")) == R("1/3"));
  CHECK(avg_char(fixtures::e1(2), R("0")) == 0);
  CHECK(avg_inv_char(fixtures::e1(1), R("2")) == R("3/4"));
  CHECK(avg_inv_char(fixtures::e1(2), R("2")) == R("1/2"));
  CHECK(avg_ratio(fixtures::e1(1), R("0"), R("2")) == R("-1/2"));
  CHECK(avg_ratio(fixtures::e1(2), R("3"), R("3")) == 1);
  auto e2 = fixtures::e2();
  CHECK(avg_ratio(e2, R("0"), R("3")) == oracle_enumerate(e2, {R("0")}, {R("3")}));
  CHECK(char_polynomial(fixtures::e1(2)) == Polynomial<Rational>({R("0"), R("-1"), R("1")}));
  CHECK(char_polynomial(e2) == Polynomial<Rational>({R("-2/3"), R("0"), R("1")}));
}

TEST_CASE("float inverse characteristic polynomial decays like 1/z") {
  auto e1 = fixtures::e1(1);
  Ensemble<Complex> f(WeightMatrix<Complex>::rank_one(
                          {{WeightFunction<Complex>(Polynomial<Complex>::constant(1))},
                           {WeightFunction<Complex>(Polynomial<Complex>::constant(1))}}),
                      DiscreteMeasure<Complex>({0.0, 1.0}, {0.5, 0.5}), {{1}, {1}});
  const Complex z(1e6, 0);
  CHECK(std::abs(avg_inv_char(f, z) * z - 1.0) < 1e-5);
}

TEST_CASE("products and inverse products") {
  auto e1 = fixtures::e1(1);
  CHECK(avg_products(e1, Rs({"2", "3"})) == 4);
  CHECK(avg_products(e1, Rs({"5/2"})) == avg_char(e1, R("5/2")));
  try {
    avg_products(e1, Rs({"2", "2"}));
    FAIL("expected duplicate");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoint);
  }
  CHECK(avg_inv_products(e1, Rs({"2", "3"})) == oracle_enumerate(e1, {}, Rs({"2", "3"})));
  CHECK(avg_inv_products(e1, Rs({"2"})) == avg_inv_char(e1, R("2")));
  try {
    avg_inv_products(e1, Rs({"2", "3", "4"}));
    FAIL("expected depth error");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::ChainDepthExceeded);
  }
}

TEST_CASE("balanced and general averages") {
  auto e1 = fixtures::e1(1);
  CHECK(avg_balanced(e1, Rs({"0", "3"}), Rs({"2", "5"})) == oracle_enumerate(e1, Rs({"0", "3"}), Rs({"2", "5"})));
  CHECK(avg_balanced(e1, Rs({"0"}), Rs({"2"})) == avg_ratio(e1, R("0"), R("2")));
  auto e2 = fixtures::e2();
  CHECK(avg_balanced(e2, Rs({"0", "2"}), Rs({"3", "5"})) == oracle_enumerate(e2, Rs({"0", "2"}), Rs({"3", "5"})));
  CHECK(avg_general(e1, Rs({"3", "5"}), Rs({"2"})) == oracle_enumerate(e1, Rs({"3", "5"}), Rs({"2"})));
  auto e12 = fixtures::e1(2);
  CHECK(avg_general(e12, Rs({"3"}), Rs({"2", "5"})) == oracle_enumerate(e12, Rs({"3"}), Rs({"2", "5"})));
  CHECK(avg_general(e2, Rs({"2", "3"}), Rs({"5"})) == oracle_andreief(e2, Rs({"2", "3"}), Rs({"5"})));
  // Permuting points leaves every formula unchanged.
  CHECK(avg_general(e2, Rs({"3", "2"}), Rs({"5"})) == avg_general(e2, Rs({"2", "3"}), Rs({"5"})));
  CHECK(avg_balanced(e2, Rs({"2", "0"}), Rs({"5", "3"})) == avg_balanced(e2, Rs({"0", "2"}), Rs({"3", "5"})));
}

TEST_CASE("scalar corollary") {
  auto e1 = fixtures::e1(1);
  auto [l, r] = corollary_scalar_relation(e1, R("0"), R("2"));
  CHECK(l == R("-1/2"));
  CHECK(r == R("-1/2"));
  auto [l2, r2] = corollary_scalar_relation(e1, R("3"), R("3"));
  CHECK(l2 == 1);
  CHECK(r2 == 1);
  auto e2 = fixtures::e2();
  auto [l3, r3] = corollary_scalar_relation(e2, R("1"), R("3"));
  CHECK(l3 == r3);
  CHECK(l3 == oracle_enumerate(e2, {R("1")}, {R("3")}));
}

TEST_CASE("chain-choice independence") {
  // p = q = 2 pair where the up-chain has three admissible choices of m_1.
  auto ens = fixtures::make({fixtures::poly({"1"}), fixtures::poly({"0", "0", "0", "1"})},
                            {fixtures::poly({"1"}), fixtures::poly({"0", "0", "0", "1"})},
                            Rs({"-3", "-2", "-1", "0", "1", "2", "3"}), Rs({"1", "1", "1", "1", "1", "1", "1"}),
                            {{1, 1}, {1, 1}});
  REQUIRE(is_normal(ens));
  const auto ys = Rs({"3", "-5/2"});
  const Rational a = avg_products(ens, ys);
  int checked = 0;
  for (std::vector<int> m1 : {std::vector<int>{2, 2}, std::vector<int>{3, 1}, std::vector<int>{1, 3}}) {
    auto chained = ens.with_chain({{m1}, {}});
    if (!is_normal(chained.with_pair(chained.chain_pair(1)))) continue;
    CHECK(avg_products(chained, ys) == a);
    ++checked;
  }
  CHECK(checked >= 2);
  CHECK(a == oracle_enumerate(ens, ys, {}));
}

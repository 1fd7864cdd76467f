#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mopkit/oracles.hpp"

using namespace mopkit;
using fixtures::R;
using fixtures::Rs;

TEST_CASE("enumeration oracle") {
  CHECK(oracle_enumerate(fixtures::e1(1), {R("0")}, {}) == R("-1/2"));
  CHECK(oracle_enumerate(fixtures::e1(2), {}, {}) == 1);
  CHECK(oracle_enumerate(fixtures::e2(), {R("1")}, {}) == R("1/3"));
  CHECK(oracle_enumerate(fixtures::e1(1), {}, {R("2")}) == R("3/4"));
  CHECK(oracle_enumerate(fixtures::e1(2), {}, {R("2")}) == R("1/2"));
  EnumerationOptions tiny{3, 1};
  try {
    oracle_enumerate(fixtures::e1(2), {}, {}, tiny);
    FAIL("expected the cap to trip");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::EnumerationCapExceeded);
  }
  try {
    oracle_enumerate(fixtures::e1(1), {}, {R("1")});
    FAIL("expected a pole");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::PoleOnSupport);
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  auto ens = fixtures::e2({1, 2}, {3});
  const auto ys = Rs({"1/2"});
  const auto zs = Rs({"7/3"});
  const Rational serial = oracle_enumerate(ens, ys, zs, {kDefaultEnumerationCap, 1});
  CHECK(oracle_enumerate(ens, ys, zs, {kDefaultEnumerationCap, 3}) == serial);
  CHECK(serial == oracle_andreief(ens, ys, zs));
  auto gh = quadrature_preset("gauss-hermite", 9);
  WeightFunction<Complex> one(Polynomial<Complex>::constant(1));
  Ensemble<Complex> fens(WeightMatrix<Complex>::rank_one({{one}, {one}}), gh, {{3}, {3}});
  const Complex a = oracle_enumerate(fens, {Complex(0.3, 0)}, {}, {kDefaultEnumerationCap, 1});
  const Complex b = oracle_enumerate(fens, {Complex(0.3, 0)}, {}, {kDefaultEnumerationCap, 4});
  CHECK(a == b);
}

TEST_CASE("Gram determinant oracle and normalization") {
  CHECK(oracle_andreief(fixtures::e1(2), {}, {}) == 1);
  CHECK(oracle_andreief(fixtures::e1(1), {R("0")}, {}) == R("-1/2"));
  CHECK(oracle_andreief(fixtures::e1(2), Rs({"2", "3"}), {}) == oracle_enumerate(fixtures::e1(2), Rs({"2", "3"}), {}));
  CHECK(normalization_Z(fixtures::e1(2)) == R("1/2"));
  CHECK(enumeration_Z(fixtures::e1(2)) == R("1/2"));
  CHECK(normalization_Z(fixtures::e1(1)) == 1);
  CHECK(normalization_Z(fixtures::e2()) == R("4/3"));
  CHECK(enumeration_Z(fixtures::e2()) == R("4/3"));
  CHECK_THROWS_AS(oracle_andreief(fixtures::e1(3), {}, {}), MopError);
}

TEST_CASE("Cauchy-Vandermonde determinant") {
  CHECK(cauchy_vandermonde(Rs({"0", "1"}), Rs({"2"})) == R("1/2"));
  CHECK(det(cauchy_vandermonde_matrix(Rs({"0", "1"}), Rs({"2"}))) == R("1/2"));
  CHECK(cauchy_vandermonde(Rs({"1", "3", "4"}), {}) == 2 * 3 * 1);
  CHECK(cauchy_vandermonde(Rs({"5"}), Rs({"2"})) == R("-1/3"));
  CHECK_THROWS_AS(cauchy_vandermonde(Rs({"1", "1"}), {}), MopError);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  for (int total = 1; total <= 6; ++total)
    for (int m = 0; m <= total; ++m) {
      std::vector<Rational> pts;
      while (static_cast<int>(pts.size()) < total + m) {
        Rational v = Rational(num(rng)) / den(rng);
        if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
      }
      std::vector<Rational> xs(pts.begin(), pts.begin() + total);
      std::vector<Rational> zs(pts.begin() + total, pts.end());
      CHECK(cauchy_vandermonde(xs, zs) == det(cauchy_vandermonde_matrix(xs, zs)));
    }
}

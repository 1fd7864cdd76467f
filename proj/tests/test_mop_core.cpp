#include "doctest.h"
#include "fixtures.hpp"
#include "mopkit/rh.hpp"

using namespace mopkit;
using fixtures::R;

TEST_CASE("moments and modified weights") {
  DiscreteMeasure<Rational> half({R("0"), R("1")}, {R("1/2"), R("1/2")});
  DiscreteMeasure<Rational> third({R("-1"), R("0"), R("1")}, {R("1/3"), R("1/3"), R("1/3")});
  CHECK(moment(half, fixtures::poly({"1"}), 2) == R("1/2"));
  CHECK(moment(third, fixtures::poly({"0", "1"}), 1) == R("2/3"));
  const auto inv = fixtures::poly({"1"}).with_factor({}, {R("2")});
  CHECK(moment(half, inv, 0) == R("-3/4"));

  auto w = WeightMatrix<Rational>::rank_one({{fixtures::poly({"1"})}, {fixtures::poly({"1"})}});
  auto ym = modified_weight(w, half, {R("2")}, {});
  CHECK(ym.entry(0, 0)(R("0")) * R("1/2") == R("-1"));
  CHECK(ym.entry(0, 0)(R("1")) * R("1/2") == R("-1/2"));
  auto zm = modified_weight(w, half, {}, {R("2")});
  CHECK(zm.entry(0, 0)(R("0")) * R("1/2") == R("-1/4"));
  CHECK(zm.entry(0, 0)(R("1")) * R("1/2") == R("-1/2"));
  auto same = modified_weight(w, {R("5")}, {R("5")});
  CHECK(same.entry(0, 0)(R("3")) == 1);
  CHECK(same.entry(0, 0).roots().empty());
  try {
    modified_weight(w, half, {}, {R("1")});
    FAIL("expected a pole on the support");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::PoleOnSupport);
  }
  try {
    modified_weight(w, {R("2"), R("2")}, {});
    FAIL("expected a duplicate point");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoint);
  }
  CHECK_THROWS_AS(DiscreteMeasure<Rational>({R("0"), R("0")}, {R("1"), R("1")}), MopError);
}

TEST_CASE("quadrature presets") {
  auto one = quadrature_preset("gauss-hermite", 1);
  CHECK(std::abs(one.nodes()[0]) < 1e-14);
  CHECK(near(one.masses()[0], Complex(std::sqrt(M_PI), 0)));
  auto leg = quadrature_preset("gauss-legendre", 2);
  CHECK(near(leg.nodes()[0], Complex(-1 / std::sqrt(3.0), 0)));
  CHECK(near(leg.nodes()[1], Complex(1 / std::sqrt(3.0), 0)));
  CHECK(near(leg.masses()[0], Complex(1, 0)));
  auto gh = quadrature_preset("gauss-hermite", 3);
  WeightFunction<Complex> unit(Polynomial<Complex>::constant(1));
  CHECK(near(moment(gh, unit, 2), Complex(std::sqrt(M_PI) / 2, 0)));
  // Analytic moments up to degree 2N-1: int x^{2j} e^{-x^2} = Gamma(j + 1/2).
  auto gh8 = quadrature_preset("gauss-hermite", 8);
  for (int j = 0; j < 8; ++j) CHECK(near(moment(gh8, unit, 2 * j), Complex(std::tgamma(j + 0.5), 0), 1e-10));
  auto leg5 = quadrature_preset("gauss-legendre", 5, {0.0, 2.0});
  for (int j = 0; j < 10; ++j) CHECK(near(moment(leg5, unit, j), Complex(std::pow(2.0, j + 1) / (j + 1), 0), 1e-10));
  try {
    quadrature_preset("gauss-laguerre", 4);
    FAIL("expected an unknown preset");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::UnknownPreset);
  }
}

TEST_CASE("block hankel and normality") {
  CHECK(block_hankel(fixtures::e1(2)) == FieldMatrix<Rational>{{1, R("1/2")}, {R("1/2"), R("1/2")}});
  CHECK(block_hankel(fixtures::e2()) == FieldMatrix<Rational>{{1, 0}, {0, R("2/3")}});
  CHECK(block_hankel(fixtures::e1(1)) == FieldMatrix<Rational>{{1}});
  CHECK(is_normal(fixtures::e1(2)));
  CHECK_FALSE(is_normal(fixtures::e1(3)));
  CHECK(is_normal(fixtures::e2()));
  CHECK_THROWS_AS(block_hankel(fixtures::e1(1), MultiIndexPair{{2}, {1}}), MopError);
}

TEST_CASE("vector orthogonal polynomials") {
  auto e1 = fixtures::e1(1);
  auto p = vector_op_type2(e1, {{2}, {1}}, 0);
  CHECK(p[0] == Polynomial<Rational>({R("-1/2"), R("1")}));
  auto e2 = fixtures::e2();
  auto a = vector_op_type2(e2, {{2, 1}, {2}}, 0);
  CHECK(a[0] == Polynomial<Rational>({R("0"), R("1")}));
  CHECK(a[1] == Polynomial<Rational>({R("-1")}));
  auto b = vector_op_type2(e2, {{1, 2}, {2}}, 1);
  CHECK(b[0] == Polynomial<Rational>({R("-2/3")}));
  CHECK(b[1] == Polynomial<Rational>({R("0"), R("1")}));
  CHECK(vector_op_type1(e1, {{1}, {0}}, 0)[0] == Polynomial<Rational>({R("1")}));
  auto t1 = vector_op_type1(e1, {{2}, {1}}, 0);
  CHECK(t1[0] == Polynomial<Rational>({R("-2"), R("4")}));
  // Orthogonality and normalization by direct summation.
  PolyVector<Rational> one{{Polynomial<Rational>::constant(1)}};
  PolyVector<Rational> x{{Polynomial<Rational>::monomial(1)}};
  CHECK(pairing(e1, t1, one) == 0);
  CHECK(pairing(e1, t1, x) == 1);
  CHECK(pairing(e1, p, one) == 0);
  try {
    vector_op_type2(fixtures::e1(3), {{4}, {3}}, 0);
    FAIL("expected non-normal");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::NonNormal);
  }
}

TEST_CASE("reduced transfer matrix") {
  RHBlocks<Rational> rh(fixtures::e1(1));
  CHECK(rh.evaluate(R("2")) == FieldMatrix<Rational>{{R("3/2"), R("1/8")}, {1, R("3/4")}});
  CHECK(det(rh.evaluate(R("2"))) == 1);
  CHECK(rh.m11(R("7"))(0, 0) == R("13/2"));
  RHBlocks<Rational> rh2(fixtures::e2());
  const Rational y = R("5/3");
  CHECK(rh2.m11(y) == FieldMatrix<Rational>{{y, -1}, {R("-2/3"), y}});
  CHECK(det(rh2.m11(y)) == y * y - R("2/3"));
  for (const char* t : {"2", "-5/2", "1/2", "7", "-1/3"}) {
    CHECK(det(rh.evaluate(R(t))) == 1);
    CHECK(det(rh2.evaluate(R(t))) == 1);
    CHECK(det(RHBlocks<Rational>(fixtures::e1(2)).evaluate(R(t))) == 1);
  }
  try {
    rh.m22(R("1"));
    FAIL("expected a pole");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::PoleOnSupport);
  }
  CHECK(rh.m11(R("1"))(0, 0) == R("1/2"));
  // Zero-component pair: row of M22 is the unit row.
  RHBlocks<Rational> zero(fixtures::e1(1).with_pair({{0}, {0}}));
  CHECK(zero.m22(R("3"))(0, 0) == 1);
  CHECK(zero.m11(R("3"))(0, 0) == 1);
  CHECK(det(zero.evaluate(R("3"))) == 1);
}

TEST_CASE("dual ensemble") {
  auto e2 = fixtures::e2();
  auto d = dual_spec(e2);
  CHECK(d.p() == 1);
  CHECK(d.q() == 2);
  CHECK(dual_spec(d).pair() == e2.pair());
  CHECK(block_hankel(dual_spec(d)) == block_hankel(e2));
  RHBlocks<Rational> dual(d);
  RHBlocks<Rational> primal(e2);
  for (const char* t : {"1", "5/3", "-4"}) CHECK(det(dual.m11(R(t))) == R(t) * R(t) - R("2/3"));
  for (const char* t : {"2", "7/2", "-3"}) {
    CHECK(det(dual.m11(R(t))) == det(primal.m11(R(t))));
    CHECK(det(dual.m22(R(t))) == det(primal.m22(R(t))));
  }
  RHBlocks<Rational> e1(fixtures::e1(1));
  RHBlocks<Rational> e1d(dual_spec(fixtures::e1(1)));
  CHECK(det(e1d.m22(R("2"))) == R("3/4"));
  CHECK(det(e1.m22(R("2"))) == R("3/4"));
}

TEST_CASE("chain indices") {
  CHECK(chain_indices({{1}, {1}}, 1) == MultiIndexPair{{2}, {2}});
  CHECK(chain_indices({{1, 1}, {2}}, 1) == MultiIndexPair{{2, 2}, {4}});
  CHECK(chain_indices({{2}, {2}}, -1) == MultiIndexPair{{1}, {1}});
  CHECK(chain_indices({{1, 1}, {1, 1}}, 1) == MultiIndexPair{{2, 2}, {2, 2}});
  CHECK(chain_indices({{2, 1}, {3}}, -1) == MultiIndexPair{{1, 1}, {2}});
  CHECK(chain_indices({{2, 1}, {3}}, -2) == MultiIndexPair{{1, 0}, {1}});
  CHECK(chain_indices({{0, 3}, {3}}, -1) == MultiIndexPair{{0, 2}, {2}});
  try {
    chain_indices({{1}, {1}}, -2);
    FAIL("expected a negative component");
  } catch (const MopError& e) {
    CHECK(e.kind() == ErrorKind::NegativeComponent);
  }
  ChainOverride over{{{1, 3}}, {}};
  CHECK(chain_indices({{1, 1}, {1, 1}}, 1, &over) == MultiIndexPair{{2, 2}, {1, 3}});
  CHECK_THROWS_AS(chain_indices({{1, 1}, {1, 1}}, 2, &over), MopError);
  ChainOverride bad{{{0, 4}}, {}};
  CHECK_THROWS_AS(chain_indices({{1, 1}, {1, 1}}, 1, &bad), MopError);
}

TEST_CASE("biorthogonal bases") {
  for (auto ens : {fixtures::e1(1), fixtures::e1(2), fixtures::e2()}) {
    auto [ps, qs] = biorthogonal_bases(ens);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < qs.size(); ++j) CHECK(pairing(ens, ps[i], qs[j]) == (i == j ? 1 : 0));
  }
  auto [ps, qs] = biorthogonal_bases(fixtures::e1(1));
  CHECK(ps[0][0] == Polynomial<Rational>::constant(1));
  CHECK(qs[0][0] == Polynomial<Rational>::constant(1));
}

TEST_CASE("dual transfer matrix is the rearranged inverse transpose") {
  for (auto ens : {fixtures::e1(2), fixtures::e2(), fixtures::e2_on({"-1", "0", "2", "5"}, {1, 2}, {3})}) {
    RHBlocks<Rational> primal(ens);
    RHBlocks<Rational> dual(dual_spec(ens));
    const std::size_t p = ens.p();
    const std::size_t q = ens.q();
    for (const char* ts : {"3", "-7/2", "1/3"}) {
      const Rational t = R(ts);
      FieldMatrix<Rational> rearranged(p + q, p + q);
      rearranged.set_block(0, 0, primal.m22(t));
      rearranged.set_block(0, q, -primal.m21(t));
      rearranged.set_block(q, 0, -primal.m12(t));
      rearranged.set_block(q, q, primal.m11(t));
      CHECK(dual.evaluate(t).transpose() * rearranged == FieldMatrix<Rational>::identity(p + q));
    }
  }
}

#ifndef MOPKIT_TESTS_FIXTURES_HPP
#define MOPKIT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "mopkit/ensemble.hpp"

namespace fixtures {

using mopkit::Complex;
using mopkit::Ensemble;
using mopkit::MultiIndexPair;
using mopkit::Polynomial;
using mopkit::Rational;
using mopkit::WeightFunction;
using mopkit::WeightMatrix;
using mopkit::WeightSystem;

inline Rational R(const std::string& s) { return mopkit::parse_rational(s); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(R(s));
  return out;
}

inline WeightFunction<Rational> poly(std::initializer_list<const char*> coeffs) {
  return WeightFunction<Rational>(Polynomial<Rational>(Rs(coeffs)));
}

inline Ensemble<Rational> make(std::vector<WeightFunction<Rational>> w1, std::vector<WeightFunction<Rational>> w2,
                               std::vector<Rational> nodes, std::vector<Rational> masses, MultiIndexPair pair) {
  return Ensemble<Rational>(WeightMatrix<Rational>::rank_one(WeightSystem<Rational>{std::move(w1), std::move(w2)}),
                            mopkit::DiscreteMeasure<Rational>(std::move(nodes), std::move(masses)), std::move(pair));
}

// p = q = 1, unit weights, (delta_0 + delta_1)/2.
inline Ensemble<Rational> e1(int n) {
  return make({poly({"1"})}, {poly({"1"})}, Rs({"0", "1"}), Rs({"1/2", "1/2"}), {{n}, {n}});
}

// p = 2, q = 1, w1 = (1, x), w2 = (1), (delta_{-1} + delta_0 + delta_1)/3.
inline Ensemble<Rational> e2(std::vector<int> n = {1, 1}, std::vector<int> m = {2}) {
  return make({poly({"1"}), poly({"0", "1"})}, {poly({"1"})}, Rs({"-1", "0", "1"}), Rs({"1/3", "1/3", "1/3"}),
              {std::move(n), std::move(m)});
}

// Unit weights, p = q = 1, equal masses on the given atoms.
inline Ensemble<Rational> e1_on(std::initializer_list<const char*> atoms, int n) {
  std::vector<Rational> nodes = Rs(atoms);
  std::vector<Rational> masses(nodes.size(), Rational(1) / static_cast<int>(nodes.size()));
  return make({poly({"1"})}, {poly({"1"})}, std::move(nodes), std::move(masses), {{n}, {n}});
}

// w1 = (1, x), w2 = (1), equal masses on the given atoms.
inline Ensemble<Rational> e2_on(std::initializer_list<const char*> atoms, std::vector<int> n, std::vector<int> m) {
  std::vector<Rational> nodes = Rs(atoms);
  std::vector<Rational> masses(nodes.size(), Rational(1) / static_cast<int>(nodes.size()));
  return make({poly({"1"}), poly({"0", "1"})}, {poly({"1"})}, std::move(nodes), std::move(masses),
              {std::move(n), std::move(m)});
}

}  // namespace fixtures

#endif  // MOPKIT_TESTS_FIXTURES_HPP

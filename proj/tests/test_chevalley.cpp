#include <random>

#include "doctest.h"
#include "ewm/chevalley.hpp"
#include "ewm/error.hpp"
#include "oracles.hpp"

using namespace ewm;

namespace {

RootVec rv(std::initializer_list<int> c) { return RootVec{std::vector<int>(c)}; }

AlgVec random_vector(std::mt19937& rng, const ChevalleyAlgebra& alg) {
  std::uniform_int_distribution<std::size_t> idx(0, alg.dimension() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgVec v;
  for (int t = 0; t < 3; ++t) v.add(idx(rng), coeff(rng));
  return v;
}

// p for the a-string through b: largest p with b - p a a root.
int string_below(const RootSystem& rs, const RootVec& a, const RootVec& b) {
  int p = 0;
  RootVec x = b - a;
  while (rs.is_root(x)) {
    ++p;
    x = x - a;
  }
  return p;
}

void check_jacobi(const char* type, int trials, unsigned seed) {
  const ChevalleyAlgebra alg(RootSystem(CartanType::parse(type)));
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const AlgVec x = random_vector(rng, alg), y = random_vector(rng, alg), z = random_vector(rng, alg);
    const AlgVec j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) +
                     alg.bracket(z, alg.bracket(x, y));
    CHECK(j.is_zero());
  }
}

}  // namespace

TEST_CASE("Jacobi identity on random triples") {
  check_jacobi("A5", 1000, 1);
  check_jacobi("B3", 1000, 2);
  check_jacobi("G2", 300, 3);
  check_jacobi("F4", 200, 4);
  check_jacobi("C3xA1", 200, 5);
}

TEST_CASE("Jacobi identity on all basis triples of small algebras") {
  for (const char* type : {"A2", "B2", "G2"}) {
    const ChevalleyAlgebra alg(RootSystem(CartanType::parse(type)));
    for (std::size_t a = 0; a < alg.dimension(); ++a)
      for (std::size_t b = 0; b < alg.dimension(); ++b)
        for (std::size_t c = 0; c < alg.dimension(); ++c) {
          const AlgVec x = AlgVec::basis(a), y = AlgVec::basis(b), z = AlgVec::basis(c);
          const AlgVec j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) +
                           alg.bracket(z, alg.bracket(x, y));
          CHECK(j.is_zero());
        }
  }
}

TEST_CASE("structure constants are +-(p+1) and antisymmetric") {
  for (const char* type : {"A4", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(type);
    const RootSystem rs(CartanType::parse(type));
    const ChevalleyAlgebra alg(rs);
    for (std::size_t a = 0; a < alg.num_roots(); ++a)
      for (std::size_t b = 0; b < alg.num_roots(); ++b) {
        const RootVec ra = alg.root(a), rb = alg.root(b);
        const int n = alg.structure_constant(a, b);
        CHECK(n == -alg.structure_constant(b, a));
        if (rs.is_root(ra + rb)) {
          const int p = string_below(rs, ra, rb);
          CHECK((n == p + 1 || n == -(p + 1)));
        } else {
          CHECK(n == 0);
        }
      }
  }
}

TEST_CASE("Cartan part acts by pairings") {
  const RootSystem rs(CartanType::parse("B3"));
  const ChevalleyAlgebra alg(rs);
  for (const auto& r : rs.positive_roots())
    for (int i = 0; i < 3; ++i) {
      CHECK(alg.bracket(alg.h(i), alg.e(r)) == alg.e(r) * Rational(rs.pairing(r, i)));
      CHECK(alg.bracket(alg.h(i), alg.e(-r)) == alg.e(-r) * Rational(-rs.pairing(r, i)));
    }
  // [e_a, e_-a] is the coroot
  const AlgVec h = alg.bracket(alg.e(rv({1, 1, 1})), alg.e(rv({-1, -1, -1})));
  const auto co = alg.coroot(rv({1, 1, 1}));
  AlgVec expect;
  for (int i = 0; i < 3; ++i) expect.add(alg.h_index(i), co[static_cast<std::size_t>(i)]);
  CHECK(h == expect);
}

TEST_CASE("ideal closure in a nilradical") {
  const ChevalleyAlgebra alg(RootSystem(CartanType::parse("A2")));
  const auto pu = negative_nilradical(alg, {});
  const auto ideal = ideal_closure(alg, {alg.e(rv({-1, 0}))}, pu);
  CHECK(ideal.size() == 2);
  CHECK(is_contained(alg, {alg.e(rv({-1, 0})), alg.e(rv({-1, -1}))}, ideal));
  CHECK_FALSE(is_contained(alg, {alg.e(rv({0, -1}))}, ideal));
  CHECK_THROWS_AS(ideal_closure(alg, {alg.e(rv({1, 0}))}, pu), Error);
}

TEST_CASE("ideal closure is monotone and idempotent") {
  const ChevalleyAlgebra alg(RootSystem(CartanType::parse("B3")));
  const auto pu = negative_nilradical(alg, {1});
  CHECK(pu.size() == 8);
  const auto i1 = ideal_closure(alg, {alg.e(rv({-1, 0, 0}))}, pu);
  const auto i2 = ideal_closure(alg, i1, pu);
  CHECK(span_of(alg, i1).dim() == span_of(alg, i2).dim());
  const auto i3 = ideal_closure(alg, {alg.e(rv({-1, 0, 0})), alg.e(rv({0, 0, -1}))}, pu);
  CHECK(is_contained(alg, i1, i3));
}

TEST_CASE("nilradical of the SL6 parabolic") {
  const ChevalleyAlgebra alg(RootSystem(CartanType::parse("A5")));
  const auto pu = negative_nilradical(alg, {0, 1, 3, 4});
  CHECK(pu.size() == 9);
  for (const auto& v : pu)
    for (const auto& w : pu) CHECK(alg.bracket(v, w).is_zero());
}

TEST_CASE("subspace arithmetic") {
  const ChevalleyAlgebra alg(RootSystem(CartanType::parse("A2")));
  Subspace s(alg.dimension());
  CHECK(s.insert(alg.e(rv({1, 0})) + alg.e(rv({0, 1}))));
  CHECK_FALSE(s.insert((alg.e(rv({1, 0})) + alg.e(rv({0, 1}))) * Rational(-3, 2)));
  CHECK(s.insert(alg.e(rv({0, 1}))));
  CHECK(s.contains(alg.e(rv({1, 0}))));
  CHECK(s.dim() == 2);
  CHECK(commutes_with_all(alg, alg.e(rv({1, 0})), {alg.e(rv({1, 1})), alg.h(0) * 0}));
  CHECK_FALSE(commutes_with_all(alg, alg.e(rv({1, 0})), {alg.e(rv({0, 1}))}));
}

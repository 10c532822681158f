#include "doctest.h"
#include "ewm/error.hpp"
#include "ewm/solvable.hpp"
#include "oracles.hpp"

using namespace ewm;
using oracle::iv;

namespace {

RootVec rv(std::initializer_list<int> c) { return RootVec{std::vector<int>(c)}; }

SolvableDatum datum(const char* type, std::vector<RootVec> active) {
  return SolvableDatum::with_identity_iota(std::make_shared<RootSystem>(CartanType::parse(type)), std::move(active));
}

ErrorCode error_of(const SolvableDatum& d) {
  try {
    solvable_monoid(d);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("pi map for SL3") {
  const auto d = datum("A2", {rv({1, 0}), rv({1, 1})});
  CHECK(pi_map(d) == std::vector<int>{0, 1});
  CHECK(f_set(d, 1) == std::vector<std::size_t>{1, 0});
  CHECK(solvable_sigma(d) == IndexSet{0, 1});
}

TEST_CASE("pi map for the SL6 subgroup N0") {
  const auto d = *oracle::load("sl6_n0.json").solvable;
  CHECK(pi_map(d) == std::vector<int>{2, 1, 3});
  CHECK_NOTHROW(validate_pi(d, pi_map(d)));
  CHECK(solvable_sigma(d) == IndexSet{1, 2, 3});
  const auto r = solvable_monoid(d);
  CHECK(r.generators.size() == 8);
  CHECK(r.phi.size() == 3);
}

TEST_CASE("SL3 generators") {
  const auto d = datum("A2", {rv({1, 0}), rv({1, 1})});
  const auto r = solvable_monoid(d);
  CHECK(oracle::same_generator_set(
      r.generators,
      {{iv({1, 0}), iv({-1, 0})}, {iv({0, 1}), iv({0, -1})}, {iv({1, 0}), iv({1, -1})}, {iv({0, 1}), iv({1, 0})}},
      d.codomain));
}

TEST_CASE("fibres of iota merge active roots") {
  // iota(w1) = iota(w2) = 1: both simple roots restrict to the same character
  auto d = datum("A2", {rv({1, 0}), rv({0, 1})});
  auto space = std::make_shared<CharSpace>(CharSpace{1, {}, {"t"}, {}});
  d.codomain = space;
  d.iota = IntMatrix::from_rows({iv({1, 1})});
  const auto r = solvable_monoid(d);
  REQUIRE(r.phi.size() == 1);
  CHECK(r.phi[0].coords() == iv({1}));
  CHECK(oracle::same_generator_set(r.generators,
                                   {{iv({1, 0}), iv({-1})}, {iv({0, 1}), iv({-1})}, {iv({1, 1}), iv({-1})}},
                                   space));
}

TEST_CASE("failures of the pi map") {
  CHECK(error_of(datum("A2", {rv({1, 1})})) == ErrorCode::NoCandidate);
  CHECK(error_of(datum("B2", {rv({1, 2})})) == ErrorCode::BijectionFailure);
  CHECK(error_of(datum("B3", {rv({0, 1, 2})})) == ErrorCode::BijectionFailure);
  CHECK_THROWS_AS(datum("A2", {rv({1, -1})}).validate(), Error);
  CHECK_THROWS_AS(datum("A2", {rv({1, 0}), rv({1, 0})}).validate(), Error);
}

TEST_CASE("general datum of a solvable subgroup") {
  const auto d = datum("A2", {rv({1, 0}), rv({1, 1})});
  const auto g = to_general_datum(d);
  CHECK(g.pi_levi.empty());
  CHECK(g.xi3_prime.size() == 2);
  CHECK(g.sigma_simple == IndexSet{0, 1});
  const auto m = compute_monoid(g);
  const auto s = solvable_monoid(d);
  REQUIRE(m.generators.size() == s.generators.size());
  for (const auto& b : s.generators) {
    bool found = false;
    for (const auto& c : m.generators) found = found || b.same_pair(c);
    CHECK(found);
  }
}

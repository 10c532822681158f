// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ewm/chevalley.hpp"
#include "ewm/cli.hpp"
#include "ewm/core.hpp"
#include "ewm/error.hpp"
#include "ewm/solvable.hpp"
#include "oracles.hpp"

using namespace ewm;
using oracle::iv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<std::pair<IntVec, IntVec>> pairs(std::initializer_list<std::pair<IntVec, IntVec>> xs) { return xs; }

bool same_pairs_unordered(const std::vector<Biweight>& a, const std::vector<Biweight>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i)
      if (!used[i] && x.same_pair(b[i])) used[i] = found = true;
    if (!found) return false;
  }
  return true;
}

// |Xi| = |Pi \ Pi_L| + |Xi2'| + |Xi3'|, counted per origin. A NonUnique run leaves
// undetermined Xi3 slots, so there only the determined part is bounded.
bool rank_identity(const GeneralDatum& d, const MonoidResult& r) {
  std::size_t by_origin[3] = {0, 0, 0};
  for (const auto& g : r.generators) ++by_origin[static_cast<int>(g.origin)];
  const std::size_t xi1 = static_cast<std::size_t>(d.rank()) - d.pi_levi.size();
  if (by_origin[0] != xi1 || by_origin[1] != d.xi2_prime.size()) return false;
  if (r.nonunique) return by_origin[2] < d.xi3_prime.size();
  return by_origin[2] == d.xi3_prime.size() && r.generators.size() == xi1 + d.xi2_prime.size() + d.xi3_prime.size();
}

// 1
Verdict sl6_end_to_end() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto doc = oracle::load("sl6.json");
  const auto r = compute_monoid(*doc.general);
  const double t = seconds_since(t0);
  v.require(oracle::same_generator_set(r.generators,
                                       pairs({{iv({0, 0, 1, 0, 0}), iv({-1})},
                                              {iv({1, 0, 0, 1, 0}), iv({-1})},
                                              {iv({0, 1, 0, 0, 1}), iv({-1})},
                                              {iv({0, 1, 0, 0, 0}), iv({0})},
                                              {iv({1, 0, 1, 0, 1}), iv({-1})},
                                              {iv({0, 0, 0, 1, 0}), iv({0})}}),
                                       doc.general->char_space_k),
            "generator set differs");
  v.require(t < 1.0, "took " + std::to_string(t) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(r.generators.size()) + " generators in " +
              std::to_string(t) + " s";
  return v;
}

// 2
Verdict sl6_intermediates() {
  Verdict v;
  const auto d = *oracle::load("sl6.json").general;
  const auto r = compute_monoid(d);
  v.require(lattice_equal(r.ker_iota, {iv({1, 0, -1, 1, 0}), iv({0, 1, -1, 0, 1})}, zero_vec(5)), "Ker iota");
  v.require(lattice_equal(r.lambda_basis,
                          {iv({0, 1, 0, 0, 0}), iv({0, 0, 0, 1, 0}), iv({1, 0, 1, 0, 0}), iv({1, 0, 0, 0, 1}),
                           iv({0, 0, 1, 0, 1})},
                          zero_vec(5)),
            "Lambda");
  const std::vector<IntVec> rho = {iv({0, 1, 0, 0, -1}), iv({1, -1, 1, -1, 1}), iv({-1, 0, 0, 1, 0})};
  bool table = r.rho_table.size() == 3;
  for (std::size_t j = 0; table && j < 3; ++j)
    for (std::size_t a = 0; a < 5; ++a) table = table && r.rho_table[j][a] && *r.rho_table[j][a] == rho[j][a];
  v.require(table, "rho table");
  return v;
}

// 3
Verdict so7_end_to_end() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto doc = oracle::load("so7.json");
  const auto& d = *doc.general;
  const auto r = compute_monoid(d);
  const double t = seconds_since(t0);
  v.require(lattice_equal(r.ker_iota, {iv({2, 0, -2})}, zero_vec(3)), "Ker iota");
  const std::vector<IntVec> rho = {iv({-1, 2, -1}), iv({1, -1, 1})};
  bool table = r.rho_table.size() == 2;
  for (std::size_t j = 0; table && j < 2; ++j)
    for (std::size_t a = 0; a < 3; ++a) table = table && r.rho_table[j][a] && *r.rho_table[j][a] == rho[j][a];
  v.require(table, "rho table");
  v.require(r.xi3.entries.size() == 2 && r.xi3.entries[0].particular == iv({-1, 2}) &&
                r.xi3.entries[1].particular == iv({-1, 1}),
            "coefficients a1, b1, a2, b2");
  v.require(oracle::same_generator_set(r.generators,
                                       pairs({{iv({1, 0, 0}), iv({-1, 0})},
                                              {iv({0, 0, 1}), iv({0, -1})},
                                              {iv({0, 1, 0}), iv({1, -2})},
                                              {iv({0, 0, 1}), iv({1, -1})}}),
                                       d.char_space_k),
            "generator set differs");
  bool flagged = false;
  for (const auto& dg : r.diagnostics)
    flagged = flagged || (dg.code == "NECESSARY_PASSED_NOT_IN_SIGMA" && dg.data.count("alpha") &&
                          dg.data.at("alpha") == "1");
  v.require(flagged, "missing NECESSARY_PASSED_NOT_IN_SIGMA for alpha1");
  v.require(t < 1.0, "took " + std::to_string(t) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(t) + " s";
  return v;
}

// 4
Verdict sl3_both_embeddings() {
  Verdict v;
  const auto g = *oracle::load("sl3_parabolic.json").general;
  const auto r = compute_monoid(g);
  v.require(r.nonunique, "general mode did not report NonUnique");
  v.require(r.xi3.entries.size() == 1 &&
                r.xi3.entries[0].echelon == std::vector<IntVec>{iv({1, 0, 0, -1}), iv({0, 1, 1, 1})},
            "solution set is not a = -1, b + c = 1");
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"general", "--input", oracle::data_path("sl3_parabolic.json"), "--format", "text"},
                            in, out, err);
  v.require(code == 4, "CLI exit code " + std::to_string(code) + " without --allow-nonunique");
  v.require(out.str().find("a = −1, b + c = 1") != std::string::npos, "text report");

  const auto s = *oracle::load("sl3.json").solvable;
  const auto sr = solvable_monoid(s);
  v.require(oracle::same_generator_set(sr.generators,
                                       pairs({{iv({1, 0}), iv({-1, 0})},
                                              {iv({0, 1}), iv({0, -1})},
                                              {iv({1, 0}), iv({1, -1})},
                                              {iv({0, 1}), iv({1, 0})}}),
                                       s.codomain),
            "solvable generator set differs");
  return v;
}

// Random datum with no Xi3' input: the monoid must be exactly Xi1 u Xi2.
GeneralDatum synthetic_induction(std::mt19937& rng, std::vector<Biweight>& expected) {
  static const char* types[] = {"A3", "A4", "B3", "C3", "D4", "A2xA2", "G2", "B4", "A5", "F4"};
  std::uniform_int_distribution<int> coin(0, 1), small(-3, 3), pos(0, 2);
  std::uniform_int_distribution<std::size_t> type_pick(0, std::size(types) - 1);
  GeneralDatum d;
  d.rs = std::make_shared<RootSystem>(CartanType::parse(types[type_pick(rng)]));
  const int n = d.rank();
  for (int i = 0; i < n; ++i)
    if (coin(rng)) d.pi_levi.insert(i);
  auto k = std::make_shared<CharSpace>();
  k->free_rank = 1 + coin(rng);
  if (coin(rng)) k->moduli.push_back(2 + pos(rng));
  d.char_space_k = k;
  auto cod = std::make_shared<CharSpace>();
  cod->free_rank = 1;
  d.codomain = cod;
  IntVec row;
  for (int i = 0; i < n; ++i) row.push_back(small(rng));
  d.iota = IntMatrix::from_rows({row}, static_cast<std::size_t>(n));
  auto random_char = [&] {
    IntVec c;
    for (std::size_t i = 0; i < k->dim(); ++i) c.push_back(small(rng));
    return CharVec(k, c);
  };
  for (int i = 0; i < n; ++i)
    if (!d.pi_levi.count(i)) {
      d.omega_bar.emplace(i, random_char());
      expected.push_back({WeightVec::fundamental(static_cast<std::size_t>(n), i), -d.omega_bar.at(i), Origin::Xi1});
    }
  if (!d.pi_levi.empty()) {
    const int count = pos(rng);
    for (int c = 0; c < count; ++c) {
      Xi2Input x;
      WeightVec w = WeightVec::zero(static_cast<std::size_t>(n));
      for (int i : d.pi_levi) {
        const int coef = pos(rng);
        if (coef) x.lambda_levi[i] = coef;
        w.coeffs[static_cast<std::size_t>(i)] = coef;
      }
      if (x.lambda_levi.empty()) {
        const int i = *d.pi_levi.begin();
        x.lambda_levi[i] = 1;
        w.coeffs[static_cast<std::size_t>(i)] = 1;
      }
      x.chi_tilde = random_char();
      expected.push_back({w, x.chi_tilde, Origin::Xi2});
      d.xi2_prime.push_back(std::move(x));
    }
  }
  return d;
}

// 5
Verdict rank_formula() {
  Verdict v;
  for (const char* name : {"sl6.json", "so7.json", "sl3_parabolic.json"}) {
    const auto d = *oracle::load(name).general;
    v.require(rank_identity(d, compute_monoid(d)), std::string("rank identity on ") + name);
  }
  for (const char* name : {"sl3.json", "sl6_n0.json"}) {
    const auto s = *oracle::load(name).solvable;
    const auto g = to_general_datum(s);
    v.require(rank_identity(g, compute_monoid(g)), std::string("rank identity on ") + name);
    v.require(solvable_monoid(s).generators.size() ==
                  static_cast<std::size_t>(s.rs->rank()) + solvable_monoid(s).phi.size(),
              std::string("solvable rank on ") + name);
  }
  std::mt19937 rng(31337);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Biweight> expected;
    const GeneralDatum d = synthetic_induction(rng, expected);
    try {
      const auto r = compute_monoid(d);
      v.require(rank_identity(d, r), "rank identity on synthetic datum " + std::to_string(t));
      v.require(same_pairs_unordered(r.generators, expected), "synthetic datum " + std::to_string(t) + " is not Xi1 u Xi2");
      ++checked;
    } catch (const Error& e) {
      v.require(false, "synthetic datum " + std::to_string(t) + ": " + e.what());
    }
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(checked) + " synthetic data";
  return v;
}

// 6
Verdict solvable_general_agreement() {
  Verdict v;
  const auto s = *oracle::load("sl3.json").solvable;
  const auto g = to_general_datum(s);
  v.require(g.pi_levi.empty() && g.sigma_simple == solvable_sigma(s), "general datum shape");
  v.require(same_pairs_unordered(compute_monoid(g).generators, solvable_monoid(s).generators), "generator sets differ");
  const auto n0 = *oracle::load("sl6_n0.json").solvable;
  v.require(same_pairs_unordered(compute_monoid(to_general_datum(n0)).generators, solvable_monoid(n0).generators),
            "N0 generator sets differ");
  return v;
}

// 7
Verdict lift_independence() {
  Verdict v;
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> coef(-5, 5);
  int trials = 0;
  for (const char* name : {"sl6.json", "so7.json"}) {
    const auto d = *oracle::load(name).general;
    const auto base = solve_xi3(d).generators();
    const auto ker = ker_iota(d);
    for (int t = 0; t < 10; ++t) {
      GeneralDatum shifted = d;
      for (std::size_t j = 0; j < shifted.xi3_prime.size(); ++j) {
        WeightVec lift = mu_lift(d, j);
        for (const auto& k : ker) lift = lift + WeightVec{k} * Int(coef(rng));
        shifted.xi3_prime[j].mu_lift = lift;
      }
      const auto again = compute_monoid(shifted);
      v.require(same_pairs_unordered(again.xi3.generators(), base),
                std::string(name) + " trial " + std::to_string(t) + " changed Xi3");
      ++trials;
    }
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(trials) + " perturbations";
  return v;
}

bool smith_contract(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  if (!(s.d == s.u * a * s.v) || !s.d.is_diagonal()) return false;
  const Int du = determinant(s.u), dv = determinant(s.v);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return false;
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (s.d(i, i) < 0) return false;
    if (i + 1 < k) {
      if (s.d(i, i) == 0 && s.d(i + 1, i + 1) != 0) return false;
      if (s.d(i, i) != 0 && s.d(i + 1, i + 1) % s.d(i, i) != 0) return false;
    }
  }
  return true;
}

// 8
Verdict property_suites() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> entry(-9, 9);
  int snf_bad = 0;
  for (int t = 0; t < 200; ++t) {
    IntMatrix a(5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) a(r, c) = entry(rng);
    if (t % 3 == 0)
      for (std::size_t c = 0; c < 5; ++c) a(4, c) = a(0, c) - a(1, c) * 2;
    if (!smith_contract(a)) ++snf_bad;
  }
  v.require(snf_bad == 0, std::to_string(snf_bad) + " SNF contract failures");

  for (const char* type : {"A5", "B3"}) {
    const ChevalleyAlgebra alg(RootSystem(CartanType::parse(type)));
    std::uniform_int_distribution<std::size_t> idx(0, alg.dimension() - 1);
    std::uniform_int_distribution<int> c(-2, 2);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
      AlgVec x[3];
      for (auto& e : x)
        for (int k = 0; k < 2; ++k) e.add(idx(rng), c(rng));
      const AlgVec j = alg.bracket(x[0], alg.bracket(x[1], x[2])) + alg.bracket(x[1], alg.bracket(x[2], x[0])) +
                       alg.bracket(x[2], alg.bracket(x[0], x[1]));
      if (!j.is_zero()) ++bad;
    }
    v.require(bad == 0, std::to_string(bad) + " Jacobi failures in " + type);
  }

  int count_bad = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= 8; ++n) {
      CartanType t{{SimpleFactor{f, n}}};
      try {
        t.validate();
      } catch (const Error&) {
        continue;
      }
      if (RootSystem(t).positive_roots().size() != oracle::positive_root_count(f, n)) ++count_bad;
    }
  v.require(count_bad == 0, std::to_string(count_bad) + " root count mismatches");

  std::uniform_int_distribution<int> small(-3, 3), cf(-2, 2);
  int member_bad = 0, lattices = 0;
  while (lattices < 100) {
    std::vector<IntVec> basis;
    const std::size_t gens = 2 + static_cast<std::size_t>(lattices % 2);
    for (std::size_t i = 0; i < gens; ++i) basis.push_back(iv({small(rng), small(rng), small(rng)}));
    if (smith_normal_form(IntMatrix::from_rows(basis, 3)).rank != gens) continue;
    IntVec x = zero_vec(3);
    for (const auto& b : basis) {
      const int c = cf(rng);
      for (std::size_t r = 0; r < 3; ++r) x[r] += b[r] * c;
    }
    if (lattices % 2) x[static_cast<std::size_t>(lattices % 3)] += 1;
    const bool got = in_sublattice(x, basis, zero_vec(3));
    const bool brute = oracle::small_combination(x, basis, 3);
    if (got != oracle::in_span_integrally(x, basis) || (brute && !got)) ++member_bad;
    ++lattices;
  }
  v.require(member_bad == 0, std::to_string(member_bad) + " membership disagreements");
  const double t = seconds_since(t0);
  v.require(t < 30.0, "took " + std::to_string(t) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(t) + " s";
  return v;
}

// 9
Verdict lie_level() {
  Verdict v;
  {
    const auto c = *oracle::load("sl6_check.json").check;
    const auto rep = check_sufficient_lie(*c.alg, 2, c.p_u, c.h_u, c.s_prime);
    v.require(rep.ideal.size() == 1 && rep.ideal[0] == c.alg->e(RootVec{{0, 0, -1, 0, 0}}), "SL6 ideal");
    v.require(!rep.ideal_in_h_u, "SL6: ideal inside h_u");
    v.require(rep.verdict == SufficientVerdict::Spherical, "SL6 verdict");
  }
  {
    const auto c = *oracle::load("sl3_check.json").check;
    const auto rep = check_sufficient_lie(*c.alg, 1, c.p_u, c.h_u, c.s_prime);
    v.require(rep.ideal.size() == 1 && rep.ideal[0] == c.alg->e(RootVec{{0, -1}}), "SL3 ideal is not g_{-alpha2}");
    v.require(!rep.ideal_in_h_u, "SL3: ideal inside h_u");
    v.require(rep.verdict == SufficientVerdict::Spherical, "SL3 verdict");
  }
  return v;
}

// 10
Verdict n0_solvable() {
  Verdict v;
  const auto d = *oracle::load("sl6_n0.json").solvable;
  const auto pi = pi_map(d);
  v.require(pi == std::vector<int>{2, 1, 3}, "pi map");
  v.require(solvable_sigma(d) == IndexSet{1, 2, 3}, "Sigma");
  try {
    validate_pi(d, pi);
  } catch (const Error& e) {
    v.require(false, e.what());
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"AC1 SL6 end-to-end generators", sl6_end_to_end},
      {"AC2 SL6 kernel, lattice and rho table", sl6_intermediates},
      {"AC3 SO7 end-to-end with torsion", so7_end_to_end},
      {"AC4 SL3 parabolic and solvable embeddings", sl3_both_embeddings},
      {"AC5 rank formula", rank_formula},
      {"AC6 solvable/general agreement", solvable_general_agreement},
      {"AC7 lift independence", lift_independence},
      {"AC8 property suites", property_suites},
      {"AC9 Lie-level tests", lie_level},
      {"AC10 N0 solvable data", n0_solvable},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

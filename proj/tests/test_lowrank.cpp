#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "parstab/lowrank.hpp"

using namespace parstab;

namespace {

HodgeProblem12 mixed_order_example() {
  HodgeProblem12 prob;
  prob.labels = {"0", "1", "oo"};
  prob.deg_line = 1;
  prob.deg_bulk = 0;
  prob.points = {
      {Rat(-2, 5), Rat(-1, 5), Rat(1, 5)},
      {Rat(0), Rat(-1, 5), Rat(1, 5)},
      {Rat(-1, 5), Rat(-2, 5), Rat(0)},
  };
  return prob;
}

HodgeProblem12 all_special_example() {
  HodgeProblem12 prob;
  prob.labels = {"0", "1", "oo"};
  prob.deg_line = 1;
  prob.deg_bulk = 0;
  prob.points = {
      {Rat(-1, 6), Rat(-1, 6), Rat(0)},
      {Rat(-1, 6), Rat(-1, 6), Rat(0)},
      {Rat(-1, 6), Rat(-1, 6), Rat(0)},
  };
  return prob;
}

const InequalityRecord* record_with_twist(const ExistenceReport& rep,
                                          const std::vector<int>& picks) {
  for (const auto& rec : rep.ledger) {
    if (rec.kind != RecordKind::type_i) continue;
    bool match = rec.subsets.size() == picks.size();
    for (std::size_t p = 0; match && p < picks.size(); ++p)
      match = rec.subsets[p].elem(0) == picks[p];
    if (match) return &rec;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("point classification tracks pole and special flags") {
  auto cls = classify_points_12(mixed_order_example());
  REQUIRE(cls.poles == 3);
  REQUIRE(cls.special == 2);
  REQUIRE_FALSE(cls.points[0].special);
  REQUIRE(cls.points[1].special);
  REQUIRE(cls.points[2].special);

  HodgeProblem12 tame;
  tame.points = {{Rat(1, 4), Rat(-1, 4), Rat(0)},
                 {Rat(1, 4), Rat(-1, 4), Rat(0)},
                 {Rat(1, 4), Rat(-1, 4), Rat(0)}};
  auto flat = classify_points_12(tame);
  REQUIRE(flat.poles == 0);
  REQUIRE(flat.special == 0);
}

TEST_CASE("shifted splitting of the composite bundle") {
  auto one = shifted_splitting_12(mixed_order_example());
  REQUIRE(one.ltilde_deg == 3);
  REQUIRE(one.wtilde.hi == 3);
  REQUIRE(one.wtilde.lo == 2);

  auto two = shifted_splitting_12(all_special_example());
  REQUIRE(two.ltilde_deg == 4);
  REQUIRE(two.wtilde.hi == 4);
  REQUIRE(two.wtilde.lo == 1);

  auto big = mixed_order_example();
  big.deg_line = 2;
  REQUIRE_THROWS_AS(shifted_splitting_12(big), std::domain_error);
}

TEST_CASE("line degrees valid inside a splitting") {
  SplittingType even{3, 2};
  REQUIRE(valid_line_degrees(even, 2));
  REQUIRE(valid_line_degrees(even, 3));
  REQUIRE(valid_line_degrees(even, 0));
  REQUIRE_FALSE(valid_line_degrees(even, 4));

  SplittingType skewed{4, 1};
  REQUIRE(valid_line_degrees(skewed, 1));
  REQUIRE(valid_line_degrees(skewed, 4));
  REQUIRE_FALSE(valid_line_degrees(skewed, 2));
  REQUIRE_FALSE(valid_line_degrees(skewed, 3));
}

TEST_CASE("mixed order example record table") {
  auto prob = mixed_order_example();
  auto rep = check_12(prob, false);
  REQUIRE(rep.ledger.size() == 9);
  REQUIRE_FALSE(rep.exists);

  const auto& worst = rep.ledger.front();
  REQUIRE(worst.kind == RecordKind::theta);
  REQUIRE_FALSE(worst.satisfied);
  REQUIRE(worst.lhs == Rat(1, 5));
  REQUIRE(worst.rhs == 0);
  for (std::size_t i = 1; i < rep.ledger.size(); ++i) REQUIRE(rep.ledger[i].satisfied);

  auto* base = record_with_twist(rep, {1, 1, 1});
  REQUIRE(base != nullptr);
  REQUIRE(base->delta == 0);
  REQUIRE(base->lhs == Rat(-4, 5));

  for (auto picks : {std::vector<int>{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}) {
    auto* rec = record_with_twist(rep, picks);
    REQUIRE(rec != nullptr);
    REQUIRE(rec->delta == 0);
    REQUIRE(rec->big_d == 1);
    REQUIRE(rec->lhs == Rat(-2, 5));
  }
  for (auto picks : {std::vector<int>{2, 2, 1}, {2, 1, 2}, {1, 2, 2}}) {
    auto* rec = record_with_twist(rep, picks);
    REQUIRE(rec != nullptr);
    REQUIRE(rec->delta == 0);
    REQUIRE(rec->lhs == 0);
  }
  auto* full = record_with_twist(rep, {2, 2, 2});
  REQUIRE(full != nullptr);
  REQUIRE(full->delta == -1);
  REQUIRE(full->big_d == 3);
  REQUIRE(full->lhs == Rat(-3, 5));
}

TEST_CASE("all special example record table") {
  auto prob = all_special_example();
  auto rep = check_12(prob, false);
  REQUIRE(rep.ledger.size() == 9);
  REQUIRE_FALSE(rep.exists);

  const auto& worst = rep.ledger.front();
  REQUIRE(worst.kind == RecordKind::theta);
  REQUIRE(worst.lhs == Rat(1, 4));
  for (std::size_t i = 1; i < rep.ledger.size(); ++i) REQUIRE(rep.ledger[i].satisfied);

  auto* base = record_with_twist(rep, {1, 1, 1});
  REQUIRE(base->delta == 0);
  REQUIRE(base->lhs == Rat(-1, 2));
  auto* one = record_with_twist(rep, {2, 1, 1});
  REQUIRE(one->delta == -1);
  REQUIRE(one->lhs == Rat(-4, 3));
  auto* two = record_with_twist(rep, {2, 2, 1});
  REQUIRE(two->delta == -2);
  REQUIRE(two->lhs == Rat(-13, 6));
  auto* full = record_with_twist(rep, {2, 2, 2});
  REQUIRE(full->delta == 0);
  REQUIRE(full->lhs == 0);

  auto strict = check_12(prob, true);
  bool full_violated = false;
  for (const auto& rec : strict.ledger)
    if (rec.big_d == 3 && rec.kind == RecordKind::type_i) full_violated = !rec.satisfied;
  REQUIRE(full_violated);
}

TEST_CASE("paired line checker window endpoints") {
  auto run = [](std::vector<std::pair<Rat, Rat>> rows) {
    std::vector<Weights11> pts;
    for (auto& [a, ap] : rows) pts.push_back({a, ap});
    return check_11(pts);
  };

  auto n0 = run({{Rat(1, 9), Rat(2, 9)}, {Rat(1, 9), Rat(2, 9)}, {Rat(1, 9), Rat(2, 9)}});
  REQUIRE(n0.exists);
  REQUIRE(n0.solutions.size() == 1);
  REQUIRE(n0.solutions[0].k == 0);
  REQUIRE(n0.solutions[0].degrees == std::vector<long long>{0, -1});

  auto n1 = run({{Rat(6, 9), Rat(7, 9)}, {Rat(1, 9), Rat(2, 9)}, {Rat(5, 9), Rat(6, 9)}});
  REQUIRE(n1.exists);
  REQUIRE(n1.solutions.size() == 1);
  REQUIRE(n1.solutions[0].degrees == std::vector<long long>{-1, -2});

  auto n2 = run({{Rat(11, 15), Rat(14, 15)},
                 {Rat(11, 15), Rat(14, 15)},
                 {Rat(11, 15), Rat(14, 15)}});
  REQUIRE(n2.exists);
  REQUIRE(n2.solutions.size() == 1);
  REQUIRE(n2.solutions[0].degrees == std::vector<long long>{-2, -3});

  auto flipped = run({{Rat(8, 9), Rat(1, 9)}, {Rat(6, 9), Rat(1, 9)}, {Rat(5, 9), Rat(6, 9)}});
  REQUIRE(flipped.exists);
  REQUIRE(flipped.solutions.size() == 1);
  REQUIRE(flipped.solutions[0].k == 1);
  REQUIRE(flipped.solutions[0].degrees == std::vector<long long>{-2, -1});

  auto twopole = run({{Rat(2, 9), Rat(1, 9)}, {Rat(5, 9), Rat(6, 9)}, {Rat(6, 9), Rat(7, 9)}});
  REQUIRE_FALSE(twopole.exists);
  REQUIRE(twopole.solutions.empty());

  auto zero = run({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
  REQUIRE_FALSE(zero.exists);

  auto even1 = run({{Rat(5, 6), Rat(1, 6)}, {Rat(1, 6), Rat(2, 6)}, {Rat(1, 6), Rat(2, 6)}});
  REQUIRE(even1.exists);
  REQUIRE(even1.solutions[0].degrees == std::vector<long long>{-1, -1});

  auto even1three =
      run({{Rat(3, 12), Rat(5, 12)}, {Rat(3, 12), Rat(5, 12)}, {Rat(3, 12), Rat(5, 12)}});
  REQUIRE_FALSE(even1three.exists);

  auto even2 = run({{Rat(5, 6), Rat(1, 6)}, {Rat(4, 6), Rat(5, 6)}, {Rat(4, 6), Rat(5, 6)}});
  REQUIRE(even2.exists);
  REQUIRE(even2.solutions[0].degrees == std::vector<long long>{-2, -2});

  auto even2three =
      run({{Rat(3, 6), Rat(5, 6)}, {Rat(3, 6), Rat(5, 6)}, {Rat(3, 6), Rat(5, 6)}});
  REQUIRE_FALSE(even2three.exists);

  REQUIRE_THROWS_AS(check_11({{Rat(1, 3), Rat(1, 4)}}), std::invalid_argument);
  REQUIRE_THROWS_AS(check_11({}), std::invalid_argument);
}

TEST_CASE("odd-subset unitary criterion on fixed systems") {
  std::vector<std::pair<Rat, Rat>> quarter(3, {Rat(1, 4), Rat(-1, 4)});
  REQUIRE(biswas_check(quarter));

  std::vector<std::pair<Rat, Rat>> wide(3, {Rat(49, 100), Rat(-49, 100)});
  REQUIRE_FALSE(biswas_check(wide));

  std::vector<std::pair<Rat, Rat>> edge = {
      {Rat(1, 2), Rat(-1, 2)}, {Rat(1, 4), Rat(-1, 4)}, {Rat(1, 4), Rat(-1, 4)}};
  REQUIRE_FALSE(biswas_check(edge));

  REQUIRE_THROWS_AS(biswas_check({{Rat(-1, 4), Rat(1, 4)}}), std::invalid_argument);
  REQUIRE_THROWS_AS(biswas_check({{Rat(1, 4), Rat(0)}}), std::invalid_argument);
  REQUIRE_THROWS_AS(biswas_check({}), std::invalid_argument);
}

TEST_CASE("triple line chain fixed decision") {
  HodgeProblem111 prob;
  prob.points = {{Rat(0), Rat(1, 3), Rat(-1, 3)},
                 {Rat(0), Rat(1, 3), Rat(-1, 3)},
                 {Rat(0), Rat(1, 3), Rat(-1, 3)}};
  prob.degrees = {0, -1, 1};
  auto rep = check_111(prob);
  REQUIRE(rep.exists);
  REQUIRE(rep.ledger.size() == 4);
  REQUIRE_FALSE(check_111(prob, true).exists);

  prob.degrees = {1, -1, 0};
  REQUIRE_FALSE(check_111(prob).exists);

  prob.degrees = {1, 0, 0};
  REQUIRE_THROWS_AS(check_111(prob), std::invalid_argument);

  prob.degrees = {0, 0, 0};
  prob.points[0][0] = Rat(1, 7);
  REQUIRE_THROWS_AS(check_111(prob), std::invalid_argument);
}

TEST_CASE("triple line chain search window") {
  std::vector<std::array<Rat, 3>> columns(3, {Rat(0), Rat(1, 3), Rat(-1, 3)});
  auto rep = check_111_search(columns);
  REQUIRE(rep.exists);
  REQUIRE(rep.solutions.size() == 1);
  REQUIRE(rep.solutions[0].degrees == std::vector<long long>{0, -1, 1});

  std::vector<std::array<Rat, 3>> rigid(3, {Rat(1, 3), Rat(0), Rat(-1, 3)});
  REQUIRE_FALSE(check_111_search(rigid).exists);
}

TEST_CASE("chain trivial and malformed cases") {
  ChainProblem single;
  single.degrees = {5};
  single.points = {{Rat(-5)}};
  REQUIRE(check_chain(single, false).exists);
  REQUIRE(check_chain(single, true).exists);
  REQUIRE(check_chain(single, false).ledger.empty());

  ChainProblem bad = single;
  bad.degrees = {4};
  REQUIRE_THROWS_AS(check_chain(bad, false), std::invalid_argument);

  ChainProblem ragged;
  ragged.degrees = {0, 0};
  ragged.points = {{Rat(0)}};
  REQUIRE_THROWS_AS(check_chain(ragged, false), std::invalid_argument);

  ChainProblem empty;
  REQUIRE_THROWS_AS(check_chain(empty, false), std::invalid_argument);
}

TEST_CASE("chain of two lines matches the paired line checker") {
  std::mt19937 rng(612934);
  std::uniform_int_distribution<int> num(0, 8);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Weights11> pts;
    Rat sum = 0;
    for (int p = 0; p < 3; ++p) {
      Rat a(num(rng), 9), ap(num(rng), 9);
      pts.push_back({a, ap});
      sum += a + ap;
    }
    if (!is_integer(sum)) continue;
    long long m = floor_rat(sum).convert_to<long long>();
    auto paired = check_11(pts);
    for (long long e1 = -m / 2 - 4; e1 <= -m / 2 + 4; ++e1) {
      long long e2 = -m - e1;
      ChainProblem chain;
      chain.degrees = {e1, e2};
      for (const auto& pt : pts) chain.points.push_back({pt.alpha, pt.alpha_prime});
      bool chain_ok = check_chain(chain, true).exists;
      bool listed = false;
      for (const auto& sol : paired.solutions)
        if (sol.degrees == std::vector<long long>{e1, e2}) listed = true;
      REQUIRE(chain_ok == listed);
    }
  }
}

TEST_CASE("chain of three lines matches the dedicated checker") {
  std::mt19937 rng(155098);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> deg(-3, 3);
  int done = 0;
  while (done < 150) {
    std::vector<std::array<Rat, 3>> cols(3);
    Rat sum = 0;
    for (auto& c : cols) {
      c = {Rat(num(rng), 12), Rat(num(rng), 12), Rat(num(rng), 12)};
      sum += c[0] + c[1] + c[2];
    }
    cols[2][2] -= sum;
    long long d1 = deg(rng), d2 = deg(rng);
    HodgeProblem111 prob;
    prob.points = cols;
    prob.degrees = {d1, d2, -d1 - d2};
    ChainProblem chain;
    chain.degrees = {d1, d2, -d1 - d2};
    for (const auto& c : cols) chain.points.push_back({c[0], c[1], c[2]});
    for (bool strict : {false, true})
      REQUIRE(check_chain(chain, strict).exists == check_111(prob, strict).exists);
    ++done;
  }
}

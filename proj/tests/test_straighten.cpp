#include <doctest.h>

#include <random>
#include <set>

#include "trigonal/errors.hpp"
#include "trigonal/straighten.hpp"

using namespace trigonal;

namespace {

std::map<std::string, Coefficient> as_map(const StraightenedExpr& e) {
  std::map<std::string, Coefficient> out;
  for (const auto& [t, c] : e.terms) out[t.to_string()] = c;
  return out;
}

// Every tableau reachable from the partitions of size m by Garnir rewrites.
std::vector<Tableau> reachable(int m) {
  std::set<std::string> seen;
  std::vector<Tableau> frontier, out;
  for (const auto& p : enumerate_partitions(m)) frontier.push_back(p.to_tableau());
  while (!frontier.empty()) {
    Tableau t = frontier.back();
    frontier.pop_back();
    if (!seen.insert(t.to_string()).second) continue;
    out.push_back(t);
    for (const auto& d : descents(t)) {
      for (const auto& [sign, next] : garnir_relation(t, garnir_choice_at(t, d))) frontier.push_back(next);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("straighten reproduces the printed six-point identities") {
  using Terms = std::map<std::string, Coefficient>;
  CHECK(as_map(straighten(parse_tableau("1,2|3,6|4,5"))) == Terms{{"1,2|3,4|5,6", -1}, {"1,2|3,5|4,6", 1}});
  CHECK(as_map(straighten(parse_tableau("1,3|2,6|4,5"))) == Terms{{"1,3|2,4|5,6", -1}, {"1,3|2,5|4,6", 1}});
  CHECK(as_map(straighten(parse_tableau("1,6|2,5|3,4"))) == Terms{{"1,4|2,5|3,6", 1}, {"1,3|2,5|4,6", -1}});
}

TEST_CASE("standard tableaux straighten to themselves") {
  for (const auto& t : enumerate_standard(YoungShape::rectangle(3, 3))) {
    const auto e = straighten(t);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.begin()->first == t);
    CHECK(e.terms.begin()->second == 1);
    CHECK(e.steps == 0);
    CHECK(descents(t).empty());
  }
}

TEST_CASE("garnir_relation on the first six-point identity") {
  const Tableau t = parse_tableau("1,2|3,6|4,5");
  const auto rel = garnir_relation(t, garnir_choice_at(t, *first_descent(t)));
  REQUIRE(rel.size() == 3);
  CHECK(rel[0].sign == 1);
  CHECK(rel[0].tableau == t);
  CHECK(std::count_if(rel.begin(), rel.end(), [&](const auto& r) { return r.tableau == t; }) == 1);
  CHECK(relation_poly(rel).is_zero());
  // Rearranged: t = -(1,2|3,4|5,6) + (1,2|3,5|4,6)
  std::map<std::string, int> signs;
  for (const auto& r : rel) signs[r.tableau.to_string()] = r.sign;
  CHECK(signs["1,2|3,4|5,6"] == 1);
  CHECK(signs["1,2|3,5|4,6"] == -1);
}

TEST_CASE("Garnir relations vanish for every descent at m <= 2 and sampled m = 3") {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& t : reachable(m)) {
      for (const auto& d : descents(t)) CHECK(relation_poly(garnir_relation(t, garnir_choice_at(t, d))).is_zero());
    }
  }
  std::mt19937 rng(3);
  const auto parts = enumerate_partitions(3);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Tableau t = parts[pick(rng)].to_tableau();
    for (int column = 0; column < 2; ++column) {
      for (int x = 1; x <= 3; ++x) {
        const int y = 4 - x;
        CHECK(relation_poly(garnir_relation(t, {column, x, y})).is_zero());
      }
    }
  }
}

TEST_CASE("Garnir rewrites strictly descend") {
  for (int m = 2; m <= 3; ++m) {
    for (const auto& t : reachable(m)) {
      for (const auto& d : descents(t)) {
        const auto rel = garnir_relation(t, garnir_choice_at(t, d));
        for (std::size_t k = 1; k < rel.size(); ++k) CHECK(compare_tableaux(rel[k].tableau, t) < 0);
      }
    }
  }
}

TEST_CASE("straightening terminates within the tableau count and is confluent") {
  for (int m = 1; m <= 3; ++m) {
    const std::size_t bound = count_column_strict(YoungShape::rectangle(m, 3)).get_ui();
    for (const auto& part : enumerate_partitions(m)) {
      const Tableau t = part.to_tableau();
      const auto first = straighten(t);
      const auto last = straighten(t, {RewriteStrategy::kLastDescent, std::nullopt});
      CHECK(first.steps <= bound);
      CHECK(last.steps <= bound);
      CHECK(as_map(first) == as_map(last));
      for (const auto& [s, c] : first.terms) {
        CHECK(is_standard(s));
        CHECK(c != 0);
      }
    }
  }
}

TEST_CASE("iteration cap signals an error") {
  const Tableau t = parse_tableau("1,6|2,5|3,4");
  CHECK_THROWS_AS(straighten(t, {RewriteStrategy::kFirstDescent, 1}), AlgorithmError);
}

TEST_CASE("identity ledger sizes") {
  CHECK(identity_ledger(1).empty());
  CHECK(identity_ledger(2).size() == 10);
  CHECK(identity_ledger(3).size() == 280 - 42);
}

TEST_CASE("straightening is sound: exact expansion for m <= 3") {
  for (int m = 2; m <= 3; ++m) {
    for (const auto& e : identity_ledger(m)) CHECK(verify_exact(e));
  }
}

TEST_CASE("verification detects a wrong identity") {
  auto e = straighten(parse_tableau("1,2|3,6|4,5"));
  e.terms.begin()->second = 1;
  CHECK_FALSE(verify_exact(e));
  CHECK_FALSE(verify_at_points(e, random_points(6, 5, 1)));
}

TEST_CASE("coefficient report") {
  const auto ledger2 = identity_ledger(2);
  const auto r2 = coefficient_report(ledger2);
  CHECK(r2.identities == 10);
  CHECK(r2.all_unit);
  CHECK(*r2.min == -1);
  CHECK(*r2.max == 1);
  CHECK(r2.histogram.size() == 1);

  const auto r1 = coefficient_report(identity_ledger(1));
  CHECK(r1.identities == 0);
  CHECK(r1.coefficients == 0);
  CHECK_FALSE(r1.min.has_value());
  CHECK(r1.histogram.empty());

  // Recorded, not a property: the m = 3 ledger is produced and summarised.
  const auto r3 = coefficient_report(identity_ledger(3));
  CHECK(r3.identities == 238);
  CHECK(r3.coefficients > 0);
}

TEST_CASE("random points are seeded and bounded") {
  const auto a = random_points(6, 5, 42);
  const auto b = random_points(6, 5, 42);
  CHECK(a == b);
  CHECK(a != random_points(6, 5, 43));
  for (const auto& pt : a) {
    for (const auto& q : pt) {
      CHECK(q.get_den() == 1);
      CHECK(abs(q) <= 1'000'000);
    }
  }
}

TEST_CASE("standard basis is linearly independent") {
  CHECK(standard_basis_independent(YoungShape::rectangle(2, 3), 7));
  CHECK(standard_basis_independent(YoungShape::rectangle(3, 3), 7));
  // All 15 partition polynomials at m = 2 span exactly 5 dimensions.
  std::vector<Tableau> all;
  for (const auto& p : enumerate_partitions(2)) all.push_back(p.to_tableau());
  CHECK(evaluation_rank(all, random_points(6, 15, 8)) == 5);
}

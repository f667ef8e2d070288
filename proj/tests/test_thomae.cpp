#include <doctest.h>

#include <algorithm>
#include <set>

#include "trigonal/errors.hpp"
#include "trigonal/straighten.hpp"
#include "trigonal/thomae.hpp"

using namespace trigonal;

namespace {

// The six-branch-point listing, in the order it is printed.
const std::vector<std::string> kSixPointPartitions = {
    "1,2|3,4|5,6", "1,2|3,5|4,6", "1,2|3,6|4,5", "1,3|2,4|5,6", "1,3|2,5|4,6",
    "1,3|2,6|4,5", "1,4|2,5|3,6", "1,4|2,6|3,5", "1,4|2,3|5,6", "1,5|2,3|4,6",
    "1,5|2,4|3,6", "1,5|2,6|3,4", "1,6|2,3|4,5", "1,6|2,4|3,5", "1,6|2,5|3,4"};
const std::vector<std::string> kSixPointBasis = {"1,2|3,4|5,6", "1,2|3,5|4,6", "1,3|2,4|5,6", "1,3|2,5|4,6",
                                                 "1,4|2,5|3,6"};

SparsePoly diff(int n, int a, int b) {
  SparsePoly p(n);
  p.add_term(Monomial::variable(a), 1);
  p.add_term(Monomial::variable(b), -1);
  return p;
}

}  // namespace

TEST_CASE("partition parsing and canonical block order") {
  const auto p = parse_partition("1,2|3,6|4,5");
  CHECK(p.m() == 2);
  CHECK(p.to_string() == "1,2|3,6|4,5");
  CHECK(parse_partition("4,5|1,2|3,6") == p);
  CHECK(TrigonalPartition::from_tableau(p.to_tableau()) == p);

  CHECK_THROWS_AS(parse_partition("1,2|3,6"), InputError);
  CHECK_THROWS_AS(parse_partition("1,2|3,3|4,5"), InputError);
  CHECK_THROWS_AS(parse_partition("1,2|3,6|4"), InputError);
  CHECK_THROWS_AS(parse_partition("1,2|6,3|4,5"), InputError);
  CHECK_THROWS_AS(parse_partition("1,2|3,7|4,5"), InputError);
  CHECK_THROWS_AS(parse_partition("a|b|c"), InputError);
  CHECK_THROWS_AS(TrigonalPartition::from_tableau(parse_tableau("1,2,3|4,5,6")), InputError);
}

TEST_CASE("enumerate_partitions counts") {
  // (3m)! / (m!^3 3!), computed independently.
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(1).front().to_string() == "1|2|3");
  CHECK(enumerate_partitions(2).size() == 15);
  CHECK(enumerate_partitions(3).size() == 280);
  CHECK(enumerate_partitions(4).size() == 5775);
  for (int m = 1; m <= 4; ++m) {
    const BigInt expected = factorial(3 * m) / (factorial(m) * factorial(m) * factorial(m) * 6);
    CHECK(BigInt(static_cast<unsigned long>(enumerate_partitions(m).size())) == expected);
  }
  CHECK_THROWS_AS(enumerate_partitions(6), SizeError);
  CHECK_THROWS_AS(enumerate_partitions(0), InputError);
}

TEST_CASE("six branch points: the listed partitions and basis") {
  const auto parts = enumerate_partitions(2);
  std::set<std::string> got, standard;
  for (const auto& p : parts) {
    got.insert(p.to_string());
    if (is_standard(p.to_tableau())) standard.insert(p.to_string());
  }
  CHECK(got == std::set<std::string>(kSixPointPartitions.begin(), kSixPointPartitions.end()));
  CHECK(standard == std::set<std::string>(kSixPointBasis.begin(), kSixPointBasis.end()));

  // Lexicographic in (first block, second block).
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& a = parts[k - 1].blocks();
    const auto& b = parts[k].blocks();
    CHECK(std::tie(a[0], a[1]) < std::tie(b[0], b[1]));
  }
}

TEST_CASE("p_poly") {
  const auto p1 = p_poly(parse_partition("1,2|3,4|5,6"));
  CHECK(p1 == diff(6, 1, 2) * diff(6, 3, 4) * diff(6, 5, 6));
  const auto p7 = p_poly(parse_partition("1,4|2,5|3,6"));
  CHECK(p7 == diff(6, 1, 4) * diff(6, 2, 5) * diff(6, 3, 6));
  CHECK(p_poly(parse_partition("1|2|3")) == SparsePoly::constant(3, 1));

  for (int m = 1; m <= 3; ++m) {
    for (const auto& part : enumerate_partitions(m)) {
      CHECK(p_poly(part).degree() == 3 * m * (m - 1) / 2);
    }
  }
}

TEST_CASE("p_poly coefficients are +-1 at m = 2") {
  for (const auto& part : enumerate_partitions(2)) {
    const auto p = p_poly(part);
    CHECK(p.num_terms() == 8);
    for (const auto& [mono, c] : p.terms()) CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("p_poly is symmetric in the blocks") {
  for (int m = 2; m <= 3; ++m) {
    for (const auto& part : enumerate_partitions(m)) {
      auto blocks = part.blocks();
      std::array<int, 3> order{0, 1, 2};
      const SparsePoly expected = p_poly(part);
      do {
        SparsePoly direct = SparsePoly::constant(part.n(), 1);
        for (int i : order) direct *= diff_product(blocks[i], part.n());
        CHECK(direct == expected);
        CHECK(p_poly(TrigonalPartition({blocks[order[0]], blocks[order[1]], blocks[order[2]]})) == expected);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("p_value agrees with expansion") {
  const auto points = random_points(9, 3, 99, 50);
  for (const auto& part : enumerate_partitions(3)) {
    for (const auto& pt : points) CHECK(p_value(part, pt) == evaluate(p_poly(part), pt));
  }
}

TEST_CASE("cross_poly") {
  const auto single = parse_partition("1|2|3");
  CHECK(cross_poly(single, 1, 2) == diff(3, 1, 2));

  const auto part = parse_partition("1,2|3,4|5,6");
  CHECK(cross_poly(part, 1, 2) == diff(6, 1, 3) * diff(6, 1, 4) * diff(6, 2, 3) * diff(6, 2, 4));

  for (int m = 1; m <= 3; ++m) {
    const auto p = enumerate_partitions(m).back();
    const int sign = (m * m) % 2 == 0 ? 1 : -1;
    CHECK(cross_poly(p, 1, 2) == scale(cross_poly(p, 2, 1), sign));
    CHECK(cross_poly(p, 2, 3) == scale(cross_poly(p, 3, 2), sign));
  }
  CHECK_THROWS_AS(cross_poly(part, 2, 2), InputError);
  CHECK_THROWS_AS(cross_poly(part, 0, 2), InputError);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(2) == diff(2, 1, 2));
  CHECK(discriminant(3) == diff(3, 1, 2) * diff(3, 1, 3) * diff(3, 2, 3));
  CHECK(discriminant(6).degree() == 15);
  CHECK(discriminant(6).num_terms() == 720);
  CHECK_THROWS_AS(discriminant(9, 1000), SizeError);
}

TEST_CASE("thomae_rhs") {
  const auto single = parse_partition("1|2|3");
  CHECK(thomae_rhs(single) == diff(3, 1, 2) * diff(3, 2, 3) * diff(3, 1, 3));

  for (int m = 1; m <= 2; ++m) {
    for (const auto& part : enumerate_partitions(m)) {
      const int expected_degree = 3 * 3 * m * (m - 1) / 2 + 3 * m * m;
      const auto rhs = thomae_rhs(part);
      CHECK(rhs.degree() == expected_degree);
      CHECK(expected_degree == 3 * m * (3 * m - 1) / 2 + 2 * (3 * m * (m - 1) / 2));
    }
  }
}

TEST_CASE("discriminant reduction: exact for m <= 2") {
  for (int m = 1; m <= 2; ++m) {
    const SparsePoly delta = discriminant(3 * m);
    for (const auto& part : enumerate_partitions(m)) {
      const SparsePoly p = p_poly(part);
      const SparsePoly rhs = thomae_rhs(part);
      const SparsePoly reduced = delta * p * p;
      const int s = discriminant_sign(part);
      CHECK(rhs == scale(reduced, s));
      CHECK((rhs == reduced) != (rhs == -reduced));
    }
  }
}

TEST_CASE("discriminant reduction: randomized for m = 3") {
  const auto points = random_points(9, 5, 2024);
  for (const auto& part : enumerate_partitions(3)) {
    const int s = discriminant_sign(part);
    for (const auto& pt : points) {
      const Rational p = p_value(part, pt);
      Rational delta = 1;
      for (int k = 0; k < 9; ++k) {
        for (int l = k + 1; l < 9; ++l) delta *= pt[k] - pt[l];
      }
      CHECK(thomae_rhs_value(part, pt) == s * delta * p * p);
    }
  }
}

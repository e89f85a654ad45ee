#include <doctest.h>

#include <algorithm>

#include "partalg/combinatorics.hpp"

using namespace partalg;

TEST_CASE("set partitions enumerate in canonical sorted order") {
  const auto parts4 = enumerate_set_partitions(4);
  CHECK(parts4.size() == 15);
  CHECK(std::is_sorted(parts4.begin(), parts4.end(),
                       [](const auto& a, const auto& b) { return a < b; }));
  // every partition distinct
  for (size_t i = 1; i < parts4.size(); ++i) CHECK(!(parts4[i - 1] == parts4[i]));
  CHECK(enumerate_set_partitions(0).size() == 1);
  CHECK(enumerate_set_partitions(1).size() == 1);
}

TEST_CASE("partition counts follow the triangle recurrence") {
  // independent row-by-row recurrence against the closed counting function
  for (int n = 0; n <= 6; ++n)
    CHECK(bell(n) == BigInt(enumerate_set_partitions(n).size()));
  CHECK(bell(8) == 4140);
  CHECK(bell(12) == BigInt("4213597"));
}

TEST_CASE("stirling numbers split the bell numbers") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(5, 5) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  for (int n = 0; n <= 10; ++n) {
    BigInt row = 0;
    for (int k = 0; k <= n; ++k) row += stirling2(n, k);
    CHECK(row == bell(n));
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(factorial(6) == 720);
  CHECK(factorial(0) == 1);
}

TEST_CASE("set partition canonical structure") {
  const SetPartition p(4, {{3, 1}, {0}, {2}});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks()[0] == std::vector<int>{0});
  CHECK(p.blocks()[1] == std::vector<int>{1, 3});
  CHECK(p.block_of(3) == 1);
  CHECK_THROWS_AS(SetPartition(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{0, 0, 1}}), std::invalid_argument);
  CHECK(SetPartition::from_rgs({0, 1, 0, 2}).block_count() == 3);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2}), std::invalid_argument);
}

TEST_CASE("integer partitions enumerate in descending lexicographic order") {
  const auto parts5 = enumerate_integer_partitions(5);
  CHECK(parts5.size() == 7);
  CHECK(parts5.front() == IntegerPartition{5});
  CHECK(parts5.back() == IntegerPartition{1, 1, 1, 1, 1});
  CHECK(enumerate_integer_partitions(6).size() == 11);
  CHECK(enumerate_integer_partitions(0).size() == 1);

  // pentagonal-number recurrence as an independent count
  std::vector<BigInt> p{1};
  for (int n = 1; n <= 18; ++n) {
    BigInt value = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const BigInt sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) value += sign * p[n - g1];
      if (g2 <= n) value += sign * p[n - g2];
    }
    p.push_back(value);
    CHECK(value == BigInt(enumerate_integer_partitions(n).size()));
  }
}

TEST_CASE("integer partition parsing and conjugation") {
  CHECK(IntegerPartition::parse("[3,1,1]") == IntegerPartition{3, 1, 1});
  CHECK(IntegerPartition::parse("[]") == IntegerPartition{});
  CHECK(IntegerPartition::parse(" [ 2 , 2 ] ") == IntegerPartition{2, 2});
  CHECK_THROWS_AS(IntegerPartition::parse("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(IntegerPartition::parse("3,1"), std::invalid_argument);
  CHECK(IntegerPartition{4, 2, 1}.conjugate() == std::vector<int>{3, 2, 1, 1});
  CHECK(IntegerPartition{}.conjugate().empty());
  CHECK(IntegerPartition{3, 1, 1}.to_string() == "[3,1,1]");
}

TEST_CASE("hook length tableaux counts") {
  CHECK(standard_tableaux_count(IntegerPartition{2, 1}) == 2);
  CHECK(standard_tableaux_count(IntegerPartition{3, 2}) == 5);
  CHECK(standard_tableaux_count(IntegerPartition{}) == 1);
  for (int r = 0; r <= 6; ++r) {
    BigInt squares = 0;
    for (const auto& shape : enumerate_integer_partitions(r)) {
      const BigInt f = standard_tableaux_count(shape);
      squares += f * f;
    }
    CHECK(squares == factorial(r));
  }
}

TEST_CASE("permutation parsing, composition and inversion") {
  const Permutation sigma = Permutation::parse("[2,3,1]");
  CHECK(sigma(0) == 1);
  CHECK(sigma(2) == 0);
  CHECK(Permutation::parse("(1 2 3)", 3) == sigma);
  CHECK(Permutation::parse("(1,2)(3,4)", 4).cycle_type() ==
        IntegerPartition{2, 2});
  CHECK(sigma.compose(sigma.inverse()).is_identity());
  const Permutation tau = Permutation::transposition(3, 0, 1);
  // compose applies the right factor first
  CHECK(sigma.compose(tau)(0) == sigma(tau(0)));
  CHECK(sigma.to_one_line_string() == "[2,3,1]");
  CHECK_THROWS_AS(Permutation::parse("[1,1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 2)"), std::invalid_argument);
}

TEST_CASE("adjacent transposition words rebuild their permutation") {
  std::vector<int> images{0, 1, 2, 3};
  do {
    const Permutation sigma{std::vector<int>(images)};
    Permutation rebuilt(4);
    const auto word = sigma.adjacent_word();
    // rightmost factor applies first
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      rebuilt = Permutation::transposition(4, *it - 1, *it).compose(rebuilt);
    CHECK(rebuilt == sigma);
    // word length equals the inversion count, so it is reduced
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (sigma(i) > sigma(j)) ++inversions;
    CHECK(static_cast<int>(word.size()) == inversions);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST_CASE("cycle types") {
  CHECK(Permutation(5).cycle_type() == IntegerPartition{1, 1, 1, 1, 1});
  CHECK(Permutation::parse("[2,3,1,5,4]").cycle_type() ==
        IntegerPartition{3, 2});
}

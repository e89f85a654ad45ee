#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/ratmat.hpp"
#include "partalg/specht.hpp"

using namespace partalg;

TEST_CASE("standard tableaux enumeration") {
  CHECK(standard_tableaux(IntegerPartition{3}).size() == 1);
  CHECK(standard_tableaux(IntegerPartition{1, 1, 1}).size() == 1);
  CHECK(standard_tableaux(IntegerPartition{2, 1}).size() == 2);
  CHECK(standard_tableaux(IntegerPartition{3, 2}).size() == 5);
  for (int r = 1; r <= 6; ++r)
    for (const auto& shape : enumerate_integer_partitions(r))
      CHECK(BigInt(standard_tableaux(shape).size()) ==
            standard_tableaux_count(shape));
}

TEST_CASE("seminormal matrices for the hook of size three") {
  const SpechtRealization rho = specht_realization(IntegerPartition{2, 1});
  CHECK(rho.dimension() == 2);

  const RatMatrix s1 = rho.generator(1);
  CHECK(s1.at(0, 0) == 1);
  CHECK(s1.at(0, 1) == 0);
  CHECK(s1.at(1, 0) == 0);
  CHECK(s1.at(1, 1) == -1);

  const RatMatrix s2 = rho.generator(2);
  CHECK(s2.at(0, 0) == parse_rational("-1/2"));
  CHECK(s2.at(0, 1) == parse_rational("3/4"));
  CHECK(s2.at(1, 0) == 1);
  CHECK(s2.at(1, 1) == parse_rational("1/2"));
}

TEST_CASE("one dimensional realizations") {
  const SpechtRealization triv = specht_realization(IntegerPartition{2});
  CHECK(triv.generator(1).at(0, 0) == 1);
  const SpechtRealization sgn = specht_realization(IntegerPartition{1, 1});
  CHECK(sgn.generator(1).at(0, 0) == -1);
  const SpechtRealization sgn4 =
      specht_realization(IntegerPartition{1, 1, 1, 1});
  for (int i = 1; i < 4; ++i) CHECK(sgn4.generator(i).at(0, 0) == -1);
}

TEST_CASE("generators satisfy the Coxeter relations") {
  for (int r = 2; r <= 5; ++r) {
    for (const auto& shape : enumerate_integer_partitions(r)) {
      const SpechtRealization rho = specht_realization(shape);
      const RatMatrix one = RatMatrix::identity(rho.dimension());
      for (int i = 1; i < r; ++i) {
        const RatMatrix si = rho.generator(i);
        CHECK(si * si == one);
        if (i + 1 < r) {
          const RatMatrix sj = rho.generator(i + 1);
          CHECK(si * sj * si == sj * si * sj);
        }
        for (int j = i + 2; j < r; ++j) {
          const RatMatrix sj = rho.generator(j);
          CHECK(si * sj == sj * si);
        }
      }
    }
  }
}

TEST_CASE("permutation matrices give a homomorphism") {
  const SpechtRealization rho = specht_realization(IntegerPartition{2, 2});
  std::vector<int> base{0, 1, 2, 3};
  std::vector<Permutation> group;
  std::vector<int> images = base;
  do {
    group.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  for (const Permutation& a : group)
    for (const Permutation& b : group)
      CHECK(rho.permutation_matrix(a.compose(b)) ==
            rho.permutation_matrix(a) * rho.permutation_matrix(b));
}

TEST_CASE("character values") {
  CHECK(symmetric_group_character(IntegerPartition{2, 1},
                                  IntegerPartition{3}) == -1);
  CHECK(symmetric_group_character(IntegerPartition{2, 1},
                                  IntegerPartition{1, 1, 1}) == 2);
  CHECK(symmetric_group_character(IntegerPartition{2, 1},
                                  IntegerPartition{2, 1}) == 0);
  CHECK(symmetric_group_character(IntegerPartition{3, 2},
                                  IntegerPartition{1, 1, 1, 1, 1}) == 5);
  // sign character alternates with parity
  CHECK(symmetric_group_character(IntegerPartition{1, 1, 1, 1},
                                  IntegerPartition{4}) == -1);
  CHECK(symmetric_group_character(IntegerPartition{1, 1, 1, 1},
                                  IntegerPartition{2, 2}) == 1);
}

TEST_CASE("characters match matrix traces") {
  for (int r = 1; r <= 4; ++r) {
    for (const auto& shape : enumerate_integer_partitions(r)) {
      const SpechtRealization rho = specht_realization(shape);
      for (const auto& type : enumerate_integer_partitions(r)) {
        // build one permutation with the requested cycle type
        std::vector<int> images(r);
        int start = 0;
        for (int part : type.parts) {
          for (int k = 0; k < part; ++k)
            images[start + k] = start + (k + 1) % part;
          start += part;
        }
        const Permutation sigma(images);
        REQUIRE(sigma.cycle_type() == type);
        CHECK(rho.character(sigma) == symmetric_group_character(shape, type));
      }
    }
  }
}

TEST_CASE("column orthogonality of the character table") {
  for (int r = 2; r <= 5; ++r) {
    const auto shapes = enumerate_integer_partitions(r);
    for (const auto& t1 : shapes) {
      for (const auto& t2 : shapes) {
        BigInt sum = 0;
        for (const auto& shape : shapes)
          sum += symmetric_group_character(shape, t1) *
                 symmetric_group_character(shape, t2);
        CHECK(sum == (t1 == t2 ? centralizer_order(t1) : BigInt(0)));
      }
    }
  }
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(IntegerPartition{1, 1, 1}) == 6);
  CHECK(centralizer_order(IntegerPartition{3}) == 3);
  CHECK(centralizer_order(IntegerPartition{2, 1}) == 2);
  CHECK(centralizer_order(IntegerPartition{2, 2, 1, 1}) == 16);
}

TEST_CASE("Littlewood-Richardson values") {
  using IP = IntegerPartition;
  CHECK(lr_coefficient(IP{3, 2, 1}, IP{2, 1}, IP{2, 1}) == 2);
  CHECK(lr_coefficient(IP{4, 2}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(lr_coefficient(IP{2, 2, 2}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(lr_coefficient(IP{4, 1, 1}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(lr_coefficient(IP{3, 3}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(lr_coefficient(IP{2, 1}, IP{1}, IP{1, 1}) == 1);
  CHECK(lr_coefficient(IP{5}, IP{2, 1}, IP{2, 1}) == 0);
  CHECK(lr_coefficient(IP{3, 2, 1}, IP{3, 2, 1}, IP{}) == 1);
  // weight mismatch gives zero
  CHECK(lr_coefficient(IP{3}, IP{1}, IP{1}) == 0);
}

TEST_CASE("Littlewood-Richardson agrees with character products") {
  // multiplicities of the induced product of two irreducibles, computed
  // independently from the character tables of the factor groups
  for (int a = 1; a <= 3; ++a) {
    const int b_max = 5 - a;
    for (int b = 1; b <= b_max; ++b) {
      for (const auto& mu : enumerate_integer_partitions(a)) {
        for (const auto& nu : enumerate_integer_partitions(b)) {
          for (const auto& lam : enumerate_integer_partitions(a + b)) {
            Rational sum = 0;
            for (const auto& ra : enumerate_integer_partitions(a)) {
              const BigInt chi_mu = symmetric_group_character(mu, ra);
              if (chi_mu == 0) continue;
              for (const auto& rb : enumerate_integer_partitions(b)) {
                const BigInt chi_nu = symmetric_group_character(nu, rb);
                if (chi_nu == 0) continue;
                const IntegerPartition joined = join_cycle_types(ra, rb);
                sum += Rational(chi_mu * chi_nu *
                                symmetric_group_character(lam, joined)) /
                       Rational(centralizer_order(ra) *
                                centralizer_order(rb));
              }
            }
            CHECK(Rational(lr_coefficient(lam, mu, nu)) == sum);
          }
        }
      }
    }
  }
}

TEST_CASE("Kronecker coefficients") {
  using IP = IntegerPartition;
  const IP h{2, 1};
  for (const auto& lam : enumerate_integer_partitions(3))
    CHECK(kronecker_coefficient(h, h, lam) == 1);
  CHECK(kronecker_coefficient(IP{3}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(kronecker_coefficient(IP{3}, IP{2, 1}, IP{3}) == 0);
  CHECK(kronecker_coefficient(IP{1, 1, 1}, IP{2, 1}, IP{2, 1}) == 1);
  CHECK(kronecker_coefficient(IP{2, 2}, IP{2, 2}, IP{2, 2}) == 1);
  CHECK(kronecker_coefficient(IP{2, 2}, IP{2, 2}, IP{4}) == 1);
  CHECK(kronecker_coefficient(IP{2, 2}, IP{2, 2}, IP{3, 1}) == 0);
  // dimension bookkeeping: summing d(lam) * g over lam gives d(mu) * d(nu)
  for (int r = 2; r <= 4; ++r) {
    const auto shapes = enumerate_integer_partitions(r);
    for (const auto& mu : shapes) {
      for (const auto& nu : shapes) {
        BigInt total = 0;
        for (const auto& lam : shapes)
          total +=
              kronecker_coefficient(mu, nu, lam) * standard_tableaux_count(lam);
        CHECK(total ==
              standard_tableaux_count(mu) * standard_tableaux_count(nu));
      }
    }
  }
}

TEST_CASE("box removal") {
  using IP = IntegerPartition;
  const auto down = remove_one_box(IP{3, 2, 2});
  REQUIRE(down.size() == 2);
  CHECK(std::count(down.begin(), down.end(), IP{2, 2, 2}) == 1);
  CHECK(std::count(down.begin(), down.end(), IP{3, 2, 1}) == 1);
  CHECK(remove_one_box(IP{1}).size() == 1);
  CHECK(remove_one_box(IP{1})[0] == IP{});
}

TEST_CASE("one sided induction multiplicities") {
  using IP = IntegerPartition;
  // inducing against the empty inner shape counts standard tableaux
  for (int r = 1; r <= 5; ++r)
    for (const auto& omega : enumerate_integer_partitions(r))
      CHECK(one_sided_induction(omega, IP{}) ==
            standard_tableaux_count(omega));
  CHECK(one_sided_induction(IP{2, 1}, IP{2, 1}) == 1);
  CHECK(one_sided_induction(IP{3, 1}, IP{2}) == 2);
  CHECK(one_sided_induction(IP{2}, IP{3}) == 0);
}

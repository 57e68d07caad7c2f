#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "csf/character.hpp"
#include "csf/partition.hpp"
#include "csf/permutation.hpp"
#include "csf/tableau.hpp"

using namespace csf;

namespace {

// Independent oracle: p(n) by the classic two-variable counting DP.
long long partition_count_dp(int n) {
  std::vector<long long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  return ways[n];
}

}  // namespace

TEST_CASE("partitions_of basics") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0] == Partition{});
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(1)[0] == Partition{1});
  CHECK(partitions_of(4).size() == 5);

  for (int n = 0; n <= 14; ++n)
    CHECK(static_cast<long long>(partitions_of(n).size()) == partition_count_dp(n));
}

TEST_CASE("partitions_of canonical reverse lexicographic order") {
  const auto& parts = partitions_of(4);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0] == Partition{4});
  CHECK(parts[1] == Partition{3, 1});
  CHECK(parts[2] == Partition{2, 2});
  CHECK(parts[3] == Partition{2, 1, 1});
  CHECK(parts[4] == Partition{1, 1, 1, 1});
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i] < parts[i + 1]);

  // No duplicates at larger sizes.
  const auto& p9 = partitions_of(9);
  for (std::size_t i = 0; i + 1 < p9.size(); ++i) CHECK(!(p9[i] == p9[i + 1]));
}

TEST_CASE("z_of") {
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  CHECK(z_of(Partition{5}) == 5);
  CHECK(z_of(Partition{2, 1}) == 2);

  // Oracle: z_lambda = n! / #{sigma in S_n : cyc(sigma) = lambda}, brute force.
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, long long> counts;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      counts[Permutation(img).cycle_type().parts()]++;
    } while (std::next_permutation(img.begin(), img.end()));
    for (const auto& lambda : partitions_of(n))
      CHECK(z_of(lambda) == factorial(n) / counts.at(lambda.parts()));
  }
}

TEST_CASE("character values") {
  for (const auto& mu : partitions_of(5)) CHECK(character(Partition{5}, mu) == 1);
  CHECK(character(Partition{1, 1, 1}, Partition{3}) == 1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(character(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("dim_irrep via hooks, standard tableaux, and characters") {
  CHECK(dim_irrep(Partition{7}) == 1);
  CHECK(dim_irrep(Partition{2, 1}) == 2);
  CHECK(dim_irrep(Partition{2, 2}) == 2);

  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Int f = dim_irrep(lambda);
      std::vector<int> ones(n, 1);
      CHECK(f == character(lambda, Partition(ones)));
      CHECK(f == Int(standard_tableaux(lambda).size()));
    }
  }
}

TEST_CASE("sum of squared dimensions is n!") {
  for (int n = 1; n <= 10; ++n) {
    Int total = 0;
    for (const auto& lambda : partitions_of(n)) {
      Int f = dim_irrep(lambda);
      total += f * f;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("column orthogonality of characters") {
  for (int n = 1; n <= 8; ++n) {
    const auto& parts = partitions_of(n);
    const auto& table = character_table(n);
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a; b < parts.size(); ++b) {
        Int dot = 0;
        for (std::size_t l = 0; l < parts.size(); ++l) dot += table[l][a] * table[l][b];
        CHECK(dot == (a == b ? z_of(parts[a]) : Int(0)));
      }
  }
}

TEST_CASE("corner moves") {
  SECTION("down") {
    auto moves = Partition{2, 2}.down_moves();
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].first == 2);
    CHECK(moves[0].second == Partition{2, 1});

    auto m31 = Partition{3, 1}.down_moves();
    REQUIRE(m31.size() == 2);
    CHECK(m31[0].first == 3);
    CHECK(m31[0].second == Partition{2, 1});
    CHECK(m31[1].first == 1);
    CHECK(m31[1].second == Partition{3});

    // dropping a part 1 entirely
    auto m1 = Partition{1}.down_moves();
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].second == Partition{});
  }

  SECTION("up") {
    auto m21 = Partition{2, 1}.up_moves();
    REQUIRE(m21.size() == 2);
    CHECK(m21[0].first == 2);
    CHECK(m21[0].second == Partition{3, 1});
    CHECK(m21[1].first == 1);
    CHECK(m21[1].second == Partition{2, 2});
  }

  SECTION("count identity: sum of #distinct parts over lambda |- n") {
    for (int n = 1; n <= 12; ++n) {
      long long total = 0;
      for (const auto& lambda : partitions_of(n)) {
        CHECK(lambda.down_moves().size() == lambda.distinct_parts().size());
        total += static_cast<long long>(lambda.distinct_parts().size());
      }
      long long sum_p = 0;
      for (int m = 0; m < n; ++m) sum_p += static_cast<long long>(partitions_of(m).size());
      CHECK(total == sum_p);
    }
  }
}

TEST_CASE("standard tableaux are valid and canonical") {
  const auto& ts = standard_tableaux(Partition{3, 2});
  CHECK(ts.size() == 5);
  for (const auto& t : ts) {
    CHECK(t.prefix_shape(5) == Partition{3, 2});
    CHECK(t.prefix_shape(1) == Partition{1});
  }
  // Row vectors strictly increasing in canonical order.
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    CHECK(ts[i].row_vector() < ts[i + 1].row_vector());
}

TEST_CASE("partition invariants") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_multiset({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition{3, 2, 1}.conjugate() == Partition{3, 2, 1});
  CHECK(Partition{4, 1}.conjugate() == Partition{2, 1, 1, 1});
  CHECK(Partition{2, 2}.subdiagram_of(Partition{3, 2}));
  CHECK(!Partition{1, 1, 1}.subdiagram_of(Partition{3, 2}));
}

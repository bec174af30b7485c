#include <doctest.h>

#include <algorithm>

#include "lht/counting.hpp"
#include "lht/error.hpp"

using namespace lht;

TEST_CASE("the two-by-two square with t = 3 has 81 tableaux") {
  const Partition p = Partition::make({2, 2});
  CHECK(count_blht(p, 3) == 81);
  CHECK(count_via_lgv(p, 3) == 81);
  CHECK(enumerate_all(p, 3).size() == 81);
}

TEST_CASE("formula and determinant agree on a five-row shape") {
  const Partition p = Partition::make({4, 3, 1, 0, 0});
  CHECK(count_blht(p, 4) == count_via_lgv(p, 4));
}

TEST_CASE("counts are divisible by t to the number of cells") {
  for (const auto& p : partitions_in_box(3, 3))
    for (int t = 1; t <= 4; ++t) {
      BigCount tp = 1;
      for (long i = 0; i < p.size(); ++i) tp *= t;
      CHECK(count_blht(p, t) % tp == 0);
    }
}

TEST_CASE("single row with one part counts t^k") {
  for (int k = 0; k <= 6; ++k)
    for (int t = 1; t <= 5; ++t) {
      BigCount e = 1;
      for (int i = 0; i < k; ++i) e *= t;
      if (k > 0) CHECK(count_blht(Partition::make({k}), t) == e);
      CHECK(path_count_between(0, t, k, 0) == e);
    }
}

TEST_CASE("decomposition identity on a grid") {
  for (long n = 1; n <= 5; ++n)
    for (long k = 0; k <= 5; ++k)
      for (long t = 2; t <= 5; ++t)
        for (long s = 1; s < t; ++s) CHECK(verify_single_path_decomposition(n, k, t, s));
  CHECK_THROWS_AS(verify_single_path_decomposition(1, 1, 3, 3), Error);
}

TEST_CASE("enumeration is lexicographic and runs between the extremal tableaux") {
  const auto all = enumerate_all(Partition::make({2, 1}), 2);
  REQUIRE(all.size() == 16);
  CHECK(all.front() == extremal_tableaux(Partition::make({2, 1}), 2).first);
  CHECK(all.back() == extremal_tableaux(Partition::make({2, 1}), 2).second);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(std::lexicographical_compare(all[i - 1].cells().begin(), all[i - 1].cells().end(), all[i].cells().begin(),
                                       all[i].cells().end()));
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_all(Partition::make({3, 3, 3}), 3, EnumerationOptions{10});
    FAIL("expected the cap to trigger");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchSpaceTooLarge);
  }
}

TEST_CASE("determinants flip sign under a row swap") {
  IntMatrix m = lgv_matrix(Partition::make({3, 2, 1}), 3);
  const BigCount d = determinant_bareiss(m);
  std::swap(m[0], m[1]);
  CHECK(determinant_bareiss(m) == -d);
  CHECK(determinant_bareiss({{2, 3}, {4, 5}}) == -2);
  CHECK(determinant_bareiss({{0, 1}, {1, 0}}) == -1);
}

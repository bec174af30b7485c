#include <doctest.h>

#include "lht/counting.hpp"
#include "lht/error.hpp"
#include "lht/partition.hpp"
#include "lht/tableau.hpp"

using namespace lht;

namespace {

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("partitions reject bad input") {
  CHECK(code_of([] { Partition::make({1, 2}); }) == ErrorCode::NotWeaklyDecreasing);
  CHECK(code_of([] { Partition::make({2, -1}); }) == ErrorCode::NegativePart);
  CHECK(code_of([] { Partition::make({}); }) == ErrorCode::EmptyPartition);
  const Partition p = Partition::make({3, 1, 0});
  CHECK(p.n() == 3);
  CHECK(p.size() == 4);
  CHECK(p.a(0) == 5);
  CHECK(p.conjugate(3).parts().size() == 3);
  CHECK(p.conjugate(3).part(0) == 2);
}

TEST_CASE("a two-row tableau with t = 3 is valid") {
  const Partition p = Partition::make({2, 2});
  CHECK(is_valid_blht({{5, 6}, {2, 3}}, p, 3));
  // 5/2 does not exceed 5/1 down the first column.
  CHECK_FALSE(is_valid_blht({{5, 6}, {5, 3}}, p, 3));
  // Entries stay below t times the denominator.
  CHECK_FALSE(is_valid_blht({{6, 6}, {2, 3}}, p, 3));
  CHECK(code_of([&] { LectureHallTableau::make(p, 3, {{6, 6}, {2, 3}}); }) == ErrorCode::InvalidTableau);
  CHECK(code_of([&] { LectureHallTableau::make(p, 3, {{5, 6}}); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("row condition uses cross multiplication") {
  const Partition p = Partition::make({2});
  // n = 1: denominators 1 and 2; T(1,1)/1 >= T(1,2)/2.
  CHECK(is_valid_blht({{1, 2}}, p, 2));
  CHECK_FALSE(is_valid_blht({{1, 3}}, p, 2));
}

TEST_CASE("extremal tableaux bound every tableau") {
  const Partition p = Partition::make({2, 1});
  const auto [lo, hi] = extremal_tableaux(p, 2);
  CHECK(lo.leq(hi));
  CHECK(lo.rows() == Rows{{1, 0}, {0}});
  CHECK(hi.rows() == Rows{{3, 4}, {1}});
  CHECK(is_valid_blht(lo.rows(), p, 2));
  CHECK(is_valid_blht(hi.rows(), p, 2));
}

TEST_CASE("extremal tableaux are the cellwise minimum and maximum") {
  const auto lo22 = extremal_tableaux(Partition::make({2, 2}), 3);
  CHECK(lo22.first.rows() == Rows{{1, 1}, {0, 0}});
  CHECK(lo22.second.rows() == Rows{{5, 7}, {2, 4}});
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2, 1}, {3, 1, 0}, {3, 3, 1}, {2, 2, 2}, {4, 1}, {1, 1, 1, 0}})
    for (int t = 1; t <= 3; ++t) {
      const Partition p = Partition::make(parts);
      const auto [lo, hi] = extremal_tableaux(p, t);
      bool saw_lo = false, saw_hi = false;
      for (const auto& T : enumerate_all(p, t)) {
        CHECK(lo.leq(T));
        CHECK(T.leq(hi));
        saw_lo = saw_lo || T == lo;
        saw_hi = saw_hi || T == hi;
      }
      CHECK(saw_lo);
      CHECK(saw_hi);
    }
}

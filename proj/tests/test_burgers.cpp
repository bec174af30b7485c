#include <doctest.h>

#include "lht/burgers.hpp"
#include "lht/cftp.hpp"
#include "lht/error.hpp"

using namespace lht;

TEST_CASE("names and parameters") {
  CHECK(BurgersId::parse("staircase").name() == "staircase");
  CHECK(BurgersId::parse("square-p", 4).name() == "square-4");
  CHECK(BurgersId::parse("square-p", 4).width() == 4);
  CHECK_THROWS_AS(BurgersId::parse("circle"), Error);
}

TEST_CASE("solutions solve the equation in the liquid region") {
  for (const auto& id : {BurgersId::parse("staircase"), BurgersId::parse("square"), BurgersId::parse("square-p", 3)}) {
    int liquid = 0;
    for (int i = 1; i < 12; ++i)
      for (int j = 1; j < 12; ++j) {
        const double x = id.width() * i / 12.0, y = j / 12.0;
        if (!(burgers_discriminant(id, x, y) < 0)) continue;
        ++liquid;
        CHECK(burgers_residual(id, x, y) < 1e-6);
        CHECK(characteristic_residual(id, x, y) < 1e-12);
        CHECK(burgers_solution(id, x, y).imag() != 0);
      }
    CHECK(liquid > 10);
  }
}

TEST_CASE("frozen points give real u") {
  const auto id = BurgersId::parse("square");
  CHECK(burgers_discriminant(id, 0.05, 0.05) > 0);
  CHECK(burgers_solution(id, 0.05, 0.05).imag() == doctest::Approx(0));
}

TEST_CASE("outside the open strip") {
  const auto id = BurgersId::parse("square");
  CHECK_THROWS_AS(burgers_solution(id, 1, 0), Error);
  CHECK_THROWS_AS(burgers_solution(id, 1, 1), Error);
  CHECK_THROWS_AS(burgers_solution(id, 3, 0.5), Error);
}

TEST_CASE("discriminant locus is the arctic curve") {
  CHECK(hausdorff_to_arctic(BurgersId::parse("square"), 1, 200) < 1e-6);
  for (const auto& p : discriminant_locus(BurgersId::parse("staircase"), 20))
    CHECK(burgers_discriminant(BurgersId::parse("staircase"), p.X, p.Y) == doctest::Approx(0).scale(1));
}

TEST_CASE("conjecture report runs on samples") {
  const auto empty = conjecture_height_check({}, BurgersId::parse("square"));
  CHECK(empty.samples == 0);
  CHECK(empty.points.empty());

  const int n = 8;
  std::vector<PathSystem> samples;
  for (const auto& r : sample_many(Partition::make(std::vector<int>(n, n)), n, 11, 6, 1)) samples.push_back(tableau_to_paths(r.sample));
  const auto rep = conjecture_height_check(samples, BurgersId::parse("square"), 8);
  CHECK(rep.samples == 6);
  CHECK(rep.n == n);
  CHECK(rep.points.size() == 49);
  CHECK(rep.liquid_points > 0);
  for (const auto& q : rep.points) {
    CHECK(q.height >= 0);
    CHECK(q.height <= 1 + 1e-12);
  }
}

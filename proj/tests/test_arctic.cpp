#include <doctest.h>

#include <cmath>

#include "lht/arctic.hpp"
#include "lht/error.hpp"

using namespace lht;

namespace {

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

const CurveBranch* find(const std::vector<CurveBranch>& bs, BranchKind k) {
  for (const auto& b : bs)
    if (b.kind == k) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("profiles") {
  const Profile c = Profile::empty_cusp();
  CHECK(c.value(0) == doctest::Approx(4));
  CHECK(c.value(1) == doctest::Approx(2));
  CHECK(c.left_limit(1) == doctest::Approx(3));
  REQUIRE(c.jumps().size() == 1);
  CHECK(c.jumps()[0].size() == doctest::Approx(1));
  CHECK(code_of([] { Profile::make({{0, 1, 1, 0}}); }) == ErrorCode::InadmissibleProfile);
  CHECK(code_of([] { Profile::builtin("nope"); }) == ErrorCode::InvalidArgument);
  const Profile sq = profile_from_partition(Partition::make(std::vector<int>(10, 10)));
  CHECK(sq.at_zero() == doctest::Approx(2));
  CHECK(sq.domain_end() == doctest::Approx(1));
}

TEST_CASE("I in closed form") {
  CHECK(integral_I(Profile::square(2), 3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(integral_I(Profile::staircase(2), 4) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(integral_I(Profile::square(2), 1.5) == doctest::Approx(-1).epsilon(1e-12));
}

TEST_CASE("closed form agrees with quadrature") {
  for (const auto& [p, x] : std::vector<std::pair<Profile, double>>{{Profile::square(2), 3.5},
                                                                     {Profile::square(2), 1.5},
                                                                     {Profile::staircase(3), 4.2},
                                                                     {Profile::empty_cusp(), 2.5},
                                                                     {Profile::vertical_cusp(), 1.5},
                                                                     {Profile::vertical_cusp(), -0.7}})
    CHECK(std::abs(integral_I(p, x)) == doctest::Approx(integral_I_numeric(p, x)).epsilon(1e-8));
}

TEST_CASE("I' matches finite differences") {
  for (const auto& [p, x] : std::vector<std::pair<Profile, double>>{
           {Profile::square(2), 3}, {Profile::staircase(2), 4}, {Profile::square(3), -1.3}, {Profile::empty_cusp(), 2.5}}) {
    const double h = 1e-6;
    const double fd = (integral_I(p, x + h) - integral_I(p, x - h)) / (2 * h);
    CHECK(integral_I_prime(p, x) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("curve points on the reference shapes") {
  const CurvePoint a = curve_point(Profile::square(2), 1, 2);
  CHECK(a.X == doctest::Approx(2));
  CHECK(a.Y == doctest::Approx(0.5));
  const CurvePoint b = curve_point(Profile::staircase(2), 1, 4);
  CHECK(b.X == doctest::Approx(4.0 / 3));
  CHECK(b.Y == doctest::Approx(std::sqrt(8.0) / 3));
  CHECK(code_of([] { curve_point(Profile::staircase(2), 1, 1); }) == ErrorCode::UndefinedAtX);
}

TEST_CASE("tangent lines pass through their curve point") {
  for (double x : {-2.0, -0.5, 0.4, 1.3, 2.5, 5.0}) {
    const TangentLine l = tangent_line(Profile::square(2), 1.5, x);
    const CurvePoint c = curve_point(Profile::square(2), 1.5, x);
    CHECK(l.A * c.Y + l.B * c.X + l.C == doctest::Approx(0).scale(1));
  }
}

TEST_CASE("branch inventories") {
  const auto sq = enumerate_branches(Profile::square(2));
  REQUIRE(find(sq, BranchKind::FirstPath));
  CHECK(find(sq, BranchKind::FirstPath)->x_lo == doctest::Approx(2));
  CHECK(std::isinf(find(sq, BranchKind::FirstPath)->x_hi));
  REQUIRE(find(sq, BranchKind::LastDual));
  CHECK(find(sq, BranchKind::LastDual)->principal_value == false);

  const auto empty = enumerate_branches(Profile::empty_cusp());
  REQUIRE(find(empty, BranchKind::EmptyFreezing));
  CHECK(find(empty, BranchKind::EmptyFreezing)->x_lo == doctest::Approx(2));
  CHECK(find(empty, BranchKind::EmptyFreezing)->x_hi == doctest::Approx(3));
  CHECK(find(empty, BranchKind::LastDual)->x_lo == doctest::Approx(3));
  CHECK(find(empty, BranchKind::LastDual)->x_hi == doctest::Approx(4));

  const auto vert = enumerate_branches(Profile::vertical_cusp());
  REQUIRE(find(vert, BranchKind::VerticalFreezing));
  CHECK(find(vert, BranchKind::VerticalFreezing)->x_lo == doctest::Approx(1));
  CHECK(find(vert, BranchKind::VerticalFreezing)->x_hi == doctest::Approx(2));
  CHECK(find(vert, BranchKind::VerticalFreezing)->principal_value);
}

TEST_CASE("sampled circle stays on the circle") {
  for (const auto& pl : sample_curve(Profile::square(2), 1, 300))
    for (const auto& p : pl.points) {
      CHECK((p.X - 1) * (p.X - 1) + (2 * p.Y - 1) * (2 * p.Y - 1) == doctest::Approx(1).epsilon(1e-10));
      CHECK(p.Y >= 0);
      CHECK(p.Y <= 1 + 1e-9);
    }
}

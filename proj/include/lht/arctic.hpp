#pragma once

#include <string>
#include <vector>

#include "lht/profile.hpp"

namespace lht {

// I(x) = exp(-int_0^U du / (x - alpha(u))), slope -1 pieces taken as principal values.
double integral_I(const Profile& profile, double x);
double integral_I_prime(const Profile& profile, double x);

// Adaptive Gauss-Kronrod of the same integral, principal values by symmetric excision.
double integral_I_numeric(const Profile& profile, double x, double excision = 1e-7);

struct CurvePoint {
  double X = 0;
  double Y = 0;
};

// Endpoint values where I vanishes or blows up are replaced by their limits.
CurvePoint curve_point(const Profile& profile, double tau, double x);

enum class BranchKind { FirstPath, LastPath, FirstDual, LastDual, EmptyFreezing, VerticalFreezing };
std::string branch_name(BranchKind kind);

struct CurveBranch {
  BranchKind kind;
  double x_lo;  // -inf allowed
  double x_hi;  // +inf allowed
  bool principal_value = false;
  bool overlaps = false;  // interior meets another branch's interior
};

// Sorted by x_lo, so consecutive branches share endpoints.
std::vector<CurveBranch> enumerate_branches(const Profile& profile);

struct Polyline {
  CurveBranch branch;
  std::vector<double> params;
  std::vector<CurvePoint> points;
};

std::vector<Polyline> sample_curve(const Profile& profile, double tau, int points_per_branch);

// A*Y + B*X + C = 0
struct TangentLine {
  double A = 0;
  double B = 0;
  double C = 0;
};
TangentLine tangent_line(const Profile& profile, double tau, double x);

}  // namespace lht

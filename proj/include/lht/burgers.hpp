#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lht/arctic.hpp"
#include "lht/lattice.hpp"

namespace lht {

enum class BurgersExample { Staircase, Square, SquareP };

struct BurgersId {
  BurgersExample example = BurgersExample::Square;
  int p = 2;

  static BurgersId parse(const std::string& name, int p = 2);
  std::string name() const;
  double width() const;  // the domain is [0, width] x [0, 1]
  Profile profile() const;
};

// Negative exactly in the liquid region; the square root of this quantity enters u.
double burgers_discriminant(const BurgersId& id, double x, double y);
std::complex<double> burgers_solution(const BurgersId& id, double x, double y);

// |u u_x + u_y| by five-point central differences.
double burgers_residual(const BurgersId& id, double x, double y, double h = 1e-5);
// |Q(x' - y' u) + u - 1| in the example's shifted coordinates.
double characteristic_residual(const BurgersId& id, double x, double y);

std::vector<CurvePoint> discriminant_locus(const BurgersId& id, int lines);
// Symmetric Hausdorff distance between the discriminant-zero locus and the tangent-method curve.
double hausdorff_to_arctic(const BurgersId& id, double tau, int resolution);

struct ConjecturePoint {
  double x = 0, y = 0;
  double height = 0;  // mean h / n
  double dh_dx = 0, dh_dy = 0;
  std::complex<double> u;
  bool liquid = false;
  double im_over_pi = 0;
  double arg_over_pi_minus_1 = 0;
};

struct ConjectureReport {
  std::string example;
  std::size_t samples = 0;
  int n = 0;
  int grid = 0;
  int arg_shift = 0;  // multiples of 2 added to arg(u)/pi
  std::vector<ConjecturePoint> points;
  std::size_t liquid_points = 0;
  double corr_im = 0, corr_arg = 0;
  double mean_abs_im = 0, mean_abs_arg = 0;
};

ConjectureReport conjecture_height_check(const std::vector<PathSystem>& samples, const BurgersId& id, int grid = 16,
                                         int arg_shift = 0);

}  // namespace lht

#include "lht/burgers.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "lht/error.hpp"

namespace lht {

using cd = std::complex<double>;

BurgersId BurgersId::parse(const std::string& name, int p) {
  if (name == "staircase") return {BurgersExample::Staircase, 2};
  if (name == "square") return {BurgersExample::Square, 2};
  if (name == "square-p") {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "square-p needs p >= 2");
    return {BurgersExample::SquareP, p};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown example '" + name + "'");
}

std::string BurgersId::name() const {
  switch (example) {
    case BurgersExample::Staircase: return "staircase";
    case BurgersExample::Square: return "square";
    case BurgersExample::SquareP: return "square-" + std::to_string(p);
  }
  return "unknown";
}

double BurgersId::width() const { return example == BurgersExample::SquareP ? p : 2.0; }

Profile BurgersId::profile() const {
  switch (example) {
    case BurgersExample::Staircase: return Profile::staircase(2);
    case BurgersExample::Square: return Profile::square(2);
    case BurgersExample::SquareP: return Profile::square(p);
  }
  return Profile::square(2);
}

namespace {

void check_domain(const BurgersId& id, double x, double y) {
  if (!(y > 0 && y < 1) || !(x >= 0 && x <= id.width()))
    throw Error(ErrorCode::DomainBoundary, "(" + std::to_string(x) + ", " + std::to_string(y) + ") is not interior");
}

}  // namespace

double burgers_discriminant(const BurgersId& id, double x, double y) {
  switch (id.example) {
    case BurgersExample::Staircase: return (x - 2) * x + y * y;
    case BurgersExample::Square: return (x - 1) * (x - 1) - 4 * y + 4 * y * y;
    case BurgersExample::SquareP: {
      const double p = id.p;
      return (1 + x) * (1 + x) + 2 * p * (1 + x) * (y - 1) + p * p * (y - 1) * (y - 1) - 4 * x * y;
    }
  }
  return 0;
}

std::complex<double> burgers_solution(const BurgersId& id, double x, double y) {
  check_domain(id, x, y);
  const cd root = std::sqrt(cd(burgers_discriminant(id, x, y), 0.0));
  switch (id.example) {
    case BurgersExample::Staircase: return ((x - 1) * y + root) / (y * y - 1);
    case BurgersExample::Square: return (-1 + x - 2 * (-1 + x) * y - root) / (2 * (y - y * y));
    case BurgersExample::SquareP: return (1 + x + id.p * (-1 + y) - 2 * x * y + root) / (2 * (y - y * y));
  }
  return {};
}

double burgers_residual(const BurgersId& id, double x, double y, double h) {
  const cd u = burgers_solution(id, x, y);
  // The square root steepens toward the discriminant-zero curve, so the step shrinks with the distance to it.
  const double g = 1e-7;
  const double D = burgers_discriminant(id, x, y);
  const double Dx = (burgers_discriminant(id, x + g, y) - burgers_discriminant(id, x - g, y)) / (2 * g);
  const double Dy = (burgers_discriminant(id, x, y + g) - burgers_discriminant(id, x, y - g)) / (2 * g);
  const double gap = std::abs(D) / std::max(std::hypot(Dx, Dy), 1e-12);
  h = std::min({h, gap / 256, y / 4, (1 - y) / 4});
  auto diff = [&](auto f) { return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12 * h); };
  const cd ux = diff([&](double d) { return burgers_solution(id, x + d, y); });
  const cd uy = diff([&](double d) { return burgers_solution(id, x, y + d); });
  return std::abs(u * ux + uy);
}

double characteristic_residual(const BurgersId& id, double x, double y) {
  const cd u = burgers_solution(id, x, y);
  if (id.example == BurgersExample::Staircase) {
    const double xs = (x - 1) / 2, ys = (y + 1) / 2;
    const cd z = xs - ys * u;
    return std::abs(1.0 - 1.0 / (4.0 * z) + z + u - 1.0);
  }
  const double a = id.example == BurgersExample::Square ? 1.0 : id.p - 1.0;
  const cd z = (x - a) - y * u;
  return std::abs(a * (1.0 - 1.0 / z) + z + u - 1.0);
}

std::vector<CurvePoint> discriminant_locus(const BurgersId& id, int lines) {
  if (lines < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 lines");
  const double W = id.width();
  const int scan = 64;
  std::vector<CurvePoint> out;
  boost::math::tools::eps_tolerance<double> tol(52);
  auto roots_on = [&](auto f, double lo, double hi, auto emit) {
    double a = lo, fa = f(lo);
    for (int k = 1; k <= scan; ++k) {
      const double b = lo + (hi - lo) * k / scan, fb = f(b);
      if (fa == 0) emit(a);
      else if (fa * fb < 0) {
        std::uintmax_t iters = 200;
        const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
        emit((r.first + r.second) / 2);
      }
      a = b;
      fa = fb;
    }
    if (fa == 0) emit(a);
  };
  for (int i = 0; i <= lines; ++i) {
    const double x = W * i / lines;
    roots_on([&](double y) { return burgers_discriminant(id, x, y); }, 0.0, 1.0,
             [&](double y) { out.push_back({x, y}); });
    const double y = static_cast<double>(i) / lines;
    roots_on([&](double xx) { return burgers_discriminant(id, xx, y); }, 0.0, W,
             [&](double xx) { out.push_back({xx, y}); });
  }
  return out;
}

namespace {

double dist(const CurvePoint& a, const CurvePoint& b) { return std::hypot(a.X - b.X, a.Y - b.Y); }

// Foot of the gradient projection onto the zero set.
CurvePoint project_to_locus(const BurgersId& id, CurvePoint p) {
  for (int it = 0; it < 8; ++it) {
    const double h = 1e-7;
    const double f = burgers_discriminant(id, p.X, p.Y);
    const double gx = (burgers_discriminant(id, p.X + h, p.Y) - burgers_discriminant(id, p.X - h, p.Y)) / (2 * h);
    const double gy = (burgers_discriminant(id, p.X, p.Y + h) - burgers_discriminant(id, p.X, p.Y - h)) / (2 * h);
    const double g2 = gx * gx + gy * gy;
    if (g2 == 0) break;
    p.X -= f * gx / g2;
    p.Y -= f * gy / g2;
  }
  return p;
}

// Largest finite stand-in for an infinite sweep end.
double finite_param(double x) { return std::isinf(x) ? std::copysign(1e12, x) : x; }

}  // namespace

double hausdorff_to_arctic(const BurgersId& id, double tau, int resolution) {
  const Profile profile = id.profile();
  const auto curve = sample_curve(profile, tau, resolution);
  const auto locus = discriminant_locus(id, resolution);
  double worst = 0;
  for (const auto& line : curve)
    for (const auto& p : line.points) worst = std::max(worst, dist(p, project_to_locus(id, p)));
  // Refine around the nearest sample of every branch: shared endpoints make the global nearest sample ambiguous.
  auto refine = [&](const CurvePoint& q, const Polyline& line, std::size_t i) {
    const auto& prm = line.params;
    const double xa = finite_param(prm[i > 0 ? i - 1 : 0]);
    const double xb = finite_param(prm[std::min(i + 1, prm.size() - 1)]);
    const CurveBranch& br = line.branch;
    // Near a finite branch end e the curve behaves like sqrt(x - e), so search in w with x = e +- w^2.
    const double mid = (xa + xb) / 2;
    const bool use_lo = !std::isinf(br.x_lo) && (std::isinf(br.x_hi) || mid - br.x_lo <= br.x_hi - mid);
    const double e = use_lo ? br.x_lo : br.x_hi;
    const double side = use_lo ? 1.0 : -1.0;
    const double wa = std::sqrt(std::abs(xa - e)), wb = std::sqrt(std::abs(xb - e));
    auto objective = [&](double w) {
      try {
        return dist(q, curve_point(profile, tau, e + side * w * w));
      } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
      }
    };
    return boost::math::tools::brent_find_minima(objective, std::min(wa, wb), std::max(wa, wb),
                                                 std::numeric_limits<double>::digits / 2)
        .second;
  };
  for (const auto& q : locus) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& line : curve) {
      if (line.points.empty()) continue;
      std::size_t bi = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        const double d = dist(q, line.points[i]);
        if (d < bd) {
          bd = d;
          bi = i;
        }
      }
      best = std::min({best, bd, refine(q, line, bi)});
    }
    worst = std::max(worst, best);
  }
  return worst;
}

namespace {

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  if (n < 2) return 0;
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return saa > 0 && sbb > 0 ? sab / std::sqrt(saa * sbb) : 0;
}

}  // namespace

ConjectureReport conjecture_height_check(const std::vector<PathSystem>& samples, const BurgersId& id, int grid,
                                         int arg_shift) {
  ConjectureReport rep;
  rep.example = id.name();
  rep.samples = samples.size();
  rep.grid = grid;
  rep.arg_shift = arg_shift;
  if (samples.empty() || grid < 3) return rep;
  const int n = samples.front().n;
  rep.n = n;
  std::vector<std::vector<double>> mean;
  for (const auto& ps : samples) {
    if (ps.n != n) throw Error(ErrorCode::InvalidArgument, "samples must share n");
    const HeightFunction h = height_function(ps);
    if (mean.empty()) {
      mean.resize(h.strips());
      for (int c = 0; c < h.strips(); ++c) mean[c].assign(h.slots(c), 0.0);
    }
    if (static_cast<int>(mean.size()) != h.strips()) throw Error(ErrorCode::InvalidArgument, "samples must share a shape");
    for (int c = 0; c < h.strips(); ++c)
      for (int j = 0; j < h.slots(c); ++j) mean[c][j] += h.at(c, j);
  }
  for (auto& col : mean)
    for (auto& v : col) v /= static_cast<double>(samples.size() * static_cast<std::size_t>(n));

  // Strip c spans x in [c/n, (c+1)/n]; slot j spans y in [j, j+1] / ((c+1) n).
  auto field = [&](double x, double y) {
    const int strips = static_cast<int>(mean.size());
    const int c = std::clamp(static_cast<int>(std::floor(x * n)), 0, strips - 1);
    const int slots = static_cast<int>(mean[c].size());
    const int j = std::clamp(static_cast<int>(std::floor(y * (c + 1) * n)), 0, slots - 1);
    return mean[c][j];
  };
  const double W = id.width();
  const double hx = W / grid, hy = 1.0 / grid;
  std::vector<double> im, gy, arg, gx;
  for (int i = 1; i < grid; ++i) {
    for (int k = 1; k < grid; ++k) {
      ConjecturePoint pt;
      pt.x = hx * i;
      pt.y = hy * k;
      pt.height = field(pt.x, pt.y);
      pt.dh_dx = (field(pt.x + hx / 2, pt.y) - field(pt.x - hx / 2, pt.y)) / hx;
      pt.dh_dy = (field(pt.x, pt.y + hy / 2) - field(pt.x, pt.y - hy / 2)) / hy;
      pt.u = burgers_solution(id, pt.x, pt.y);
      pt.liquid = burgers_discriminant(id, pt.x, pt.y) < 0;
      pt.im_over_pi = pt.u.imag() / std::numbers::pi;
      pt.arg_over_pi_minus_1 = std::arg(pt.u) / std::numbers::pi + 2 * arg_shift - 1;
      if (pt.liquid) {
        im.push_back(pt.im_over_pi);
        gy.push_back(pt.dh_dy);
        arg.push_back(pt.arg_over_pi_minus_1);
        gx.push_back(pt.dh_dx);
        rep.mean_abs_im += std::abs(pt.im_over_pi - pt.dh_dy);
        rep.mean_abs_arg += std::abs(pt.arg_over_pi_minus_1 - pt.dh_dx);
      }
      rep.points.push_back(pt);
    }
  }
  rep.liquid_points = im.size();
  if (!im.empty()) {
    rep.mean_abs_im /= im.size();
    rep.mean_abs_arg /= im.size();
  }
  rep.corr_im = correlation(im, gy);
  rep.corr_arg = correlation(arg, gx);
  return rep;
}

}  // namespace lht

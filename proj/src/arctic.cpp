#include "lht/arctic.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lht/error.hpp"

namespace lht {

namespace {

constexpr double kTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(a) + std::abs(b)); }
bool unit_slope(const ProfileSegment& s) { return std::abs(s.slope + 1) <= kTol; }
bool flat(const ProfileSegment& s) { return std::abs(s.slope) <= kTol; }

std::string at_x(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "x = " << x;
  return os.str();
}

// Near x = v, I behaves like coeff * |x - v|^expo; with no touching segment, I = coeff and I'/I = log_slope.
struct Local {
  double coeff = 1;
  double log_slope = 0;
  bool touching = false;
  double v = 0;
  double expo = 0;
  bool unit_zero = false;  // a slope -1 piece vanishes linearly at v: I ~ coeff * (x - v)
  int touches = 0;
};

Local analyse(const Profile& profile, double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "x must be finite");
  Local out;
  for (const auto& s : profile.segments()) {
    const double L = s.length();
    if (L <= 0) continue;
    const double a = s.top(), b = s.bottom();
    if (flat(s)) {
      if (near(x, a)) throw Error(ErrorCode::SingularAtX, at_x(x) + " sits on a flat piece");
      out.coeff *= std::exp(-L / (x - a));
      out.log_slope += L / ((x - a) * (x - a));
      continue;
    }
    const double m = s.slope;
    const bool at_top = near(x, a), at_bottom = near(x, b);
    if (!at_top && !at_bottom) {
      if (x > b && x < a && !unit_slope(s))
        throw Error(ErrorCode::UndefinedAtX, at_x(x) + " lies inside the range of a piece of slope " + std::to_string(m));
      out.coeff *= unit_slope(s) ? (x - a) / (x - b) : std::pow((x - b) / (x - a), 1.0 / m);
      out.log_slope += L / ((x - a) * (x - b));
      continue;
    }
    out.touching = true;
    ++out.touches;
    if (at_top) {
      out.v = a;
      out.expo += -1.0 / m;
      if (unit_slope(s)) {
        out.coeff /= (a - b);
        out.unit_zero = true;
      } else {
        out.coeff *= std::pow(a - b, 1.0 / m);
      }
    } else {
      out.v = b;
      out.expo += 1.0 / m;
      out.coeff *= unit_slope(s) ? (b - a) : std::pow(a - b, -1.0 / m);
    }
  }
  return out;
}

}  // namespace

double integral_I(const Profile& profile, double x) {
  const Local l = analyse(profile, x);
  if (!l.touching) return l.coeff;
  if (l.expo > kTol) return 0.0;
  throw Error(ErrorCode::SingularAtX, at_x(x) + " is a pole of I");
}

double integral_I_prime(const Profile& profile, double x) {
  const Local l = analyse(profile, x);
  if (!l.touching) return l.coeff * l.log_slope;
  if (l.unit_zero && l.touches == 1) return l.coeff;
  if (l.expo > 1 + kTol) return 0.0;
  throw Error(ErrorCode::SingularAtX, at_x(x) + " is a singular point of I'");
}

double integral_I_numeric(const Profile& profile, double x, double excision) {
  using boost::math::quadrature::gauss_kronrod;
  double total = 0;
  for (const auto& s : profile.segments()) {
    if (s.length() <= 0) continue;
    auto f = [&](double u) { return 1.0 / (x - s.at(u)); };
    auto integrate = [&](double lo, double hi) {
      if (hi <= lo) return 0.0;
      return gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, 1e-13);
    };
    // Sides of a pole at c, in the variable w = log|u - c|.
    auto integrate_log = [&](double c, double d, double len, double sign) {
      if (len <= d) return 0.0;
      auto g = [&](double w) { return f(c + sign * std::exp(w)) * std::exp(w); };
      return gauss_kronrod<double, 31>::integrate(g, std::log(d), std::log(len), 15, 1e-13);
    };
    const double a = s.top(), b = s.bottom();
    if (!flat(s) && x > b && x < a) {
      if (!unit_slope(s)) throw Error(ErrorCode::UndefinedAtX, at_x(x) + " lies inside a non-principal piece");
      const double u_star = s.u_start + (a - x);
      const double d = std::min({excision, u_star - s.u_start, s.u_end - u_star});
      total += integrate_log(u_star, d, u_star - s.u_start, -1) + integrate_log(u_star, d, s.u_end - u_star, 1);
    } else {
      if (near(x, a) || near(x, b)) throw Error(ErrorCode::SingularAtX, at_x(x) + " is a piece endpoint");
      total += integrate(s.u_start, s.u_end);
    }
  }
  return std::exp(-total);
}

CurvePoint curve_point(const Profile& profile, double tau, double x) {
  const Local l = analyse(profile, x);
  if (!l.touching) {
    const double denom = l.coeff * (1 + x * l.log_slope);
    if (denom == 0 || !std::isfinite(denom)) throw Error(ErrorCode::DegenerateDenominator, "I + x I' vanishes at " + at_x(x));
    return {x * x * l.coeff * l.log_slope / denom, tau / denom};
  }
  const double v = l.v;
  if (l.unit_zero && l.touches == 1) {
    if (v == 0) throw Error(ErrorCode::DegenerateDenominator, "I + x I' vanishes at " + at_x(x));
    return {v, tau / (v * l.coeff)};
  }
  if (std::abs(l.expo) <= kTol || l.expo > 1 - kTol) throw Error(ErrorCode::SingularAtX, at_x(x));
  if (v == 0) {
    if (l.expo > 0 || near(l.expo, -1)) throw Error(ErrorCode::SingularAtX, at_x(x));
    return {0, 0};
  }
  return {v, 0};
}

std::string branch_name(BranchKind kind) {
  switch (kind) {
    case BranchKind::FirstPath: return "first-path";
    case BranchKind::LastPath: return "last-path";
    case BranchKind::FirstDual: return "first-dual";
    case BranchKind::LastDual: return "last-dual";
    case BranchKind::EmptyFreezing: return "empty-freezing";
    case BranchKind::VerticalFreezing: return "vertical-freezing";
  }
  return "unknown";
}

std::vector<CurveBranch> enumerate_branches(const Profile& profile) {
  for (const auto& s : profile.segments())
    if (s.slope > kTol || s.bottom() < -kTol)
      throw Error(ErrorCode::InadmissibleProfile, "profile must be non-increasing and nonnegative");
  std::vector<CurveBranch> out;
  out.push_back({BranchKind::FirstDual, -kInf, 0.0});
  if (profile.at_end() > kTol) out.push_back({BranchKind::LastPath, 0.0, profile.at_end()});
  const auto& segs = profile.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!unit_slope(segs[i]) || segs[i].length() <= 0) continue;
    const BranchKind kind = segs[i].u_start <= kTol ? BranchKind::LastDual : BranchKind::VerticalFreezing;
    out.push_back({kind, segs[i].bottom(), segs[i].top(), kind == BranchKind::VerticalFreezing});
  }
  for (const auto& j : profile.jumps()) out.push_back({BranchKind::EmptyFreezing, j.below, j.above});
  out.push_back({BranchKind::FirstPath, profile.at_zero(), kInf});
  std::stable_sort(out.begin(), out.end(), [](const CurveBranch& a, const CurveBranch& b) { return a.x_lo < b.x_lo; });
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && std::max(out[i].x_lo, out[j].x_lo) < std::min(out[i].x_hi, out[j].x_hi) - kTol) out[i].overlaps = true;
  return out;
}

std::vector<Polyline> sample_curve(const Profile& profile, double tau, int points_per_branch) {
  if (points_per_branch < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 points per branch");
  const CurvePoint at_infinity{profile.domain_end(), tau};
  const int N = points_per_branch;
  std::vector<Polyline> out;
  for (const auto& br : enumerate_branches(profile)) {
    Polyline line{br, {}, {}};
    auto emit = [&](double x) {
      if (std::isinf(x)) {
        line.params.push_back(x);
        line.points.push_back(at_infinity);
        return;
      }
      try {
        CurvePoint p = curve_point(profile, tau, x);
        if (p.Y < 0 && p.Y > -1e-12) p.Y = 0;
        if (!(p.Y >= 0 && p.Y <= tau + 1e-9) || !std::isfinite(p.X)) return;
        line.params.push_back(x);
        line.points.push_back(p);
      } catch (const Error&) {
      }
    };
    for (int i = 0; i < N; ++i) {
      const double frac = static_cast<double>(i) / (N - 1);
      if (std::isinf(br.x_lo)) {
        emit(i == 0 ? -kInf : br.x_hi - std::tan(std::numbers::pi / 2 * (1 - frac)));
      } else if (std::isinf(br.x_hi)) {
        emit(i == N - 1 ? kInf : br.x_lo + std::tan(std::numbers::pi / 2 * frac));
      } else {
        emit(i == N - 1 ? br.x_hi : br.x_lo + (br.x_hi - br.x_lo) * frac);
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

TangentLine tangent_line(const Profile& profile, double tau, double x) {
  return {x * integral_I(profile, x) / tau, 1.0, -x};
}

}  // namespace lht
